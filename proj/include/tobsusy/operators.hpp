#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tobsusy/grid.hpp"

namespace tobsusy {

// Square banded complex matrix, row-major packed: row i keeps columns
// [i-kl, i+ku] at a[i*(kl+ku+1) + (j-i+kl)]. kl = ku = n-1 makes it dense.
class BandMatrix {
public:
    BandMatrix() = default;
    BandMatrix(int n, int kl, int ku);

    static BandMatrix identity(int n);
    static BandMatrix diagonal(const std::vector<cplx>& d);

    int n() const { return n_; }
    int kl() const { return kl_; }
    int ku() const { return ku_; }

    cplx get(int i, int j) const;
    void set(int i, int j, cplx v);
    void add_at(int i, int j, cplx v);

    // y = A x  or  y = A conj(x)
    std::vector<cplx> apply(const std::vector<cplx>& x, bool conj_x = false) const;

    BandMatrix multiply(const BandMatrix& other) const;   // A * B, bands add
    BandMatrix conjugated() const;                        // entrywise conj
    BandMatrix plus(const BandMatrix& other) const;
    BandMatrix scaled(cplx alpha) const;

    std::vector<std::vector<cplx>> to_dense() const;

private:
    int n_ = 0, kl_ = 0, ku_ = 0;
    std::vector<cplx> a_;
    const cplx* row_ptr(int i) const { return a_.data() + static_cast<std::size_t>(i) * (kl_ + ku_ + 1); }
    friend class DiscreteOperator;
};

// A finite-dimensional operator between tagged contour domains. Antilinear
// operators apply as M * conj(v). Built either as an explicit banded matrix
// (leaf) or as a lazy composition of factors; lazy products apply factor by
// factor, so algebraic identities between differently-associated products
// hold exactly, not just to rounding.
class DiscreteOperator {
public:
    DiscreteOperator() = default;
    DiscreteOperator(BandMatrix m, bool antilinear, std::string domain_tag,
                     std::string codomain_tag);

    static DiscreteOperator compose(const DiscreteOperator& op1, const DiscreteOperator& op2);
    static DiscreteOperator sum(const DiscreteOperator& a, const DiscreteOperator& b);

    int n() const { return n_; }
    bool antilinear() const { return antilinear_; }
    const std::string& domain_tag() const { return domain_; }
    const std::string& codomain_tag() const { return codomain_; }

    std::vector<cplx> apply(const std::vector<cplx>& v) const;

    // Explicit matrix of the operator (composition rules: M1*M2 for linear
    // op1, M1*conj(M2) for antilinear op1).
    BandMatrix materialize() const;

    DiscreteOperator scaled(cplx alpha) const;

private:
    enum class Node { Leaf, Product, Sum };
    Node node_ = Node::Leaf;
    BandMatrix mat_;
    std::vector<std::shared_ptr<const DiscreteOperator>> parts_;  // product: right-to-left apply
    bool antilinear_ = false;
    int n_ = 0;
    std::string domain_, codomain_;
};

// Discretized d^order/dx^order with one-sided closures, linear, tagged.
DiscreteOperator derivative_operator(const GridSpec& grid, int order, int accuracy,
                                     const std::string& tag = "G");

// Antilinear identity mapping functions on `from_tag` to the conjugate
// contour `to_tag`.
DiscreteOperator conjugation_operator(const GridSpec& grid, const std::string& from_tag,
                                      const std::string& to_tag);

DiscreteOperator diagonal_operator(const GridFunction& d, const std::string& tag);

// 2x2 block operator; absent blocks are zero.
class SuperBlock {
public:
    SuperBlock(int n, std::string domain_tag_top, std::string domain_tag_bottom);

    void set_block(int i, int j, DiscreteOperator op);
    const std::optional<DiscreteOperator>& block(int i, int j) const;

    int block_size() const { return n_; }

    // v has 2n entries: (top, bottom)
    std::vector<cplx> apply(const std::vector<cplx>& v) const;

    static SuperBlock compose(const SuperBlock& a, const SuperBlock& b);
    static SuperBlock anticommutator(const SuperBlock& a, const SuperBlock& b);

private:
    int n_ = 0;
    std::array<std::optional<DiscreteOperator>, 4> blocks_;
    std::array<std::string, 2> tags_;
};

struct Charges {
    SuperBlock Q;        // lower-left A
    SuperBlock Qt;       // upper-right B
    SuperBlock H;        // blockdiag(BA, AB), both blocks linear
    DiscreteOperator A;  // -T D + T W
    DiscreteOperator B;  // D T^-1 + W T^-1
};

// Antilinear supercharge blocks from W^- samples and a conjugation pair.
// The derivative is the order-1 operator of the given accuracy.
Charges build_charges(const GridFunction& W_minus, const DiscreteOperator& conj_op,
                      const DiscreteOperator& inverse_conj_op, int accuracy = 2);

struct SuperalgebraReport {
    double anticommutator_vs_H = 0.0;  // max ||({Q,Qt} - H) v|| / ||v||
    double q_squared = 0.0;            // max ||Q Q v|| / ||v||
    double qt_squared = 0.0;           // max ||Qt Qt v|| / ||v||
    double commutator_H_Q = 0.0;       // max ||[H,Q] v|| / ||v||
    double commutator_H_Qt = 0.0;      // max ||[H,Qt] v|| / ||v||
    int trials = 0;
    std::uint64_t seed = 0;

    double worst() const;
};

SuperalgebraReport check_superalgebra(const SuperBlock& Q, const SuperBlock& Qt,
                                      const SuperBlock& H, int trials, std::uint64_t seed);

}  // namespace tobsusy
