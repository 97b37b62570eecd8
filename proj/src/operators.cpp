#include "tobsusy/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tobsusy/fd.hpp"
#include "tobsusy/kernels.hpp"

namespace tobsusy {

namespace {

double vec_norm(const std::vector<cplx>& v) {
    return std::sqrt(kernels::active().norm2sq(v.data(), v.size()));
}

std::vector<cplx> vec_sub(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

std::vector<cplx> vec_add(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

BandMatrix::BandMatrix(int n, int kl, int ku) : n_(n), kl_(kl), ku_(ku) {
    if (n <= 0 || kl < 0 || ku < 0 || kl >= n || ku >= n)
        throw ValidationError("BandMatrix: bad dimensions");
    a_.assign(static_cast<std::size_t>(n) * (kl + ku + 1), cplx(0.0, 0.0));
}

BandMatrix BandMatrix::identity(int n) {
    BandMatrix m(n, 0, 0);
    for (int i = 0; i < n; ++i) m.set(i, i, cplx(1.0, 0.0));
    return m;
}

BandMatrix BandMatrix::diagonal(const std::vector<cplx>& d) {
    BandMatrix m(static_cast<int>(d.size()), 0, 0);
    for (int i = 0; i < m.n_; ++i) m.set(i, i, d[i]);
    return m;
}

cplx BandMatrix::get(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw ValidationError("BandMatrix::get: out of range");
    if (j - i > ku_ || i - j > kl_) return cplx(0.0, 0.0);
    return a_[static_cast<std::size_t>(i) * (kl_ + ku_ + 1) + (j - i + kl_)];
}

void BandMatrix::set(int i, int j, cplx v) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || j - i > ku_ || i - j > kl_)
        throw ValidationError("BandMatrix::set: outside band");
    a_[static_cast<std::size_t>(i) * (kl_ + ku_ + 1) + (j - i + kl_)] = v;
}

void BandMatrix::add_at(int i, int j, cplx v) { set(i, j, get(i, j) + v); }

std::vector<cplx> BandMatrix::apply(const std::vector<cplx>& x, bool conj_x) const {
    if (static_cast<int>(x.size()) != n_) throw ValidationError("BandMatrix::apply: size mismatch");
    std::vector<cplx> y(n_);
    kernels::active().band_matvec(n_, kl_, ku_, a_.data(), x.data(), y.data(), conj_x);
    return y;
}

BandMatrix BandMatrix::multiply(const BandMatrix& other) const {
    if (other.n_ != n_) throw ValidationError("BandMatrix::multiply: size mismatch");
    const int kl = std::min(n_ - 1, kl_ + other.kl_);
    const int ku = std::min(n_ - 1, ku_ + other.ku_);
    BandMatrix c(n_, kl, ku);
    const int w = kl_ + ku_ + 1;
    for (int i = 0; i < n_; ++i) {
        const int k0 = std::max(0, i - kl_);
        const int k1 = std::min(n_ - 1, i + ku_);
        for (int k = k0; k <= k1; ++k) {
            const cplx aik = a_[static_cast<std::size_t>(i) * w + (k - i + kl_)];
            if (aik == cplx(0.0, 0.0)) continue;
            const int j0 = std::max(0, k - other.kl_);
            const int j1 = std::min(n_ - 1, k + other.ku_);
            for (int j = j0; j <= j1; ++j) c.add_at(i, j, aik * other.get(k, j));
        }
    }
    return c;
}

BandMatrix BandMatrix::conjugated() const {
    BandMatrix c = *this;
    kernels::active().conj(a_.data(), c.a_.data(), a_.size());
    return c;
}

BandMatrix BandMatrix::plus(const BandMatrix& other) const {
    if (other.n_ != n_) throw ValidationError("BandMatrix::plus: size mismatch");
    const int kl = std::max(kl_, other.kl_);
    const int ku = std::max(ku_, other.ku_);
    BandMatrix c(n_, kl, ku);
    for (int i = 0; i < n_; ++i) {
        const int j0 = std::max(0, i - kl);
        const int j1 = std::min(n_ - 1, i + ku);
        for (int j = j0; j <= j1; ++j) c.set(i, j, get(i, j) + other.get(i, j));
    }
    return c;
}

BandMatrix BandMatrix::scaled(cplx alpha) const {
    BandMatrix c = *this;
    for (cplx& v : c.a_) v *= alpha;
    return c;
}

std::vector<std::vector<cplx>> BandMatrix::to_dense() const {
    std::vector<std::vector<cplx>> d(n_, std::vector<cplx>(n_, cplx(0.0, 0.0)));
    for (int i = 0; i < n_; ++i)
        for (int j = std::max(0, i - kl_); j <= std::min(n_ - 1, i + ku_); ++j) d[i][j] = get(i, j);
    return d;
}

DiscreteOperator::DiscreteOperator(BandMatrix m, bool antilinear, std::string domain_tag,
                                   std::string codomain_tag)
    : node_(Node::Leaf),
      mat_(std::move(m)),
      antilinear_(antilinear),
      n_(mat_.n()),
      domain_(std::move(domain_tag)),
      codomain_(std::move(codomain_tag)) {}

DiscreteOperator DiscreteOperator::compose(const DiscreteOperator& op1,
                                           const DiscreteOperator& op2) {
    if (op1.n_ != op2.n_) throw ValidationError("compose: dimension mismatch");
    if (op2.codomain_ != op1.domain_)
        throw ValidationError("compose: codomain of op2 (" + op2.codomain_ +
                              ") does not match domain of op1 (" + op1.domain_ + ")");
    DiscreteOperator out;
    out.node_ = Node::Product;
    out.parts_ = {std::make_shared<DiscreteOperator>(op1), std::make_shared<DiscreteOperator>(op2)};
    out.antilinear_ = op1.antilinear_ != op2.antilinear_;
    out.n_ = op1.n_;
    out.domain_ = op2.domain_;
    out.codomain_ = op1.codomain_;
    return out;
}

DiscreteOperator DiscreteOperator::sum(const DiscreteOperator& a, const DiscreteOperator& b) {
    if (a.n_ != b.n_) throw ValidationError("sum: dimension mismatch");
    if (a.domain_ != b.domain_ || a.codomain_ != b.codomain_)
        throw ValidationError("sum: operator tags differ");
    if (a.antilinear_ != b.antilinear_)
        throw ValidationError("sum: cannot add linear and antilinear operators");
    DiscreteOperator out;
    out.node_ = Node::Sum;
    out.parts_ = {std::make_shared<DiscreteOperator>(a), std::make_shared<DiscreteOperator>(b)};
    out.antilinear_ = a.antilinear_;
    out.n_ = a.n_;
    out.domain_ = a.domain_;
    out.codomain_ = a.codomain_;
    return out;
}

std::vector<cplx> DiscreteOperator::apply(const std::vector<cplx>& v) const {
    if (n_ == 0) throw ValidationError("DiscreteOperator::apply: empty operator");
    switch (node_) {
        case Node::Leaf: return mat_.apply(v, antilinear_);
        case Node::Product: {
            std::vector<cplx> cur = v;
            for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) cur = (*it)->apply(cur);
            return cur;
        }
        case Node::Sum: {
            std::vector<cplx> acc = parts_.front()->apply(v);
            for (std::size_t i = 1; i < parts_.size(); ++i) {
                const std::vector<cplx> t = parts_[i]->apply(v);
                for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += t[j];
            }
            return acc;
        }
    }
    throw ValidationError("DiscreteOperator::apply: bad node");
}

BandMatrix DiscreteOperator::materialize() const {
    switch (node_) {
        case Node::Leaf: return mat_;
        case Node::Product: {
            BandMatrix acc = parts_.front()->materialize();
            bool acc_anti = parts_.front()->antilinear_;
            for (std::size_t i = 1; i < parts_.size(); ++i) {
                const BandMatrix m = parts_[i]->materialize();
                acc = acc.multiply(acc_anti ? m.conjugated() : m);
                acc_anti = acc_anti != parts_[i]->antilinear_;
            }
            return acc;
        }
        case Node::Sum: {
            BandMatrix acc = parts_.front()->materialize();
            for (std::size_t i = 1; i < parts_.size(); ++i)
                acc = acc.plus(parts_[i]->materialize());
            return acc;
        }
    }
    throw ValidationError("DiscreteOperator::materialize: bad node");
}

DiscreteOperator DiscreteOperator::scaled(cplx alpha) const {
    // alpha * Op = (alpha I) after Op; exact for leaves and lazy nodes alike
    BandMatrix s = BandMatrix::identity(n_).scaled(alpha);
    DiscreteOperator scale_leaf(std::move(s), false, codomain_, codomain_);
    return compose(scale_leaf, *this);
}

DiscreteOperator derivative_operator(const GridSpec& grid, int order, int accuracy,
                                     const std::string& tag) {
    const auto rows = fd::derivative_rows(grid.n, grid.h(), order, accuracy);
    int kl = 0, ku = 0;
    for (int i = 0; i < grid.n; ++i) {
        const int first = rows[i].first_col;
        const int last = first + static_cast<int>(rows[i].w.size()) - 1;
        kl = std::max(kl, i - first);
        ku = std::max(ku, last - i);
    }
    BandMatrix m(grid.n, kl, ku);
    for (int i = 0; i < grid.n; ++i)
        for (std::size_t j = 0; j < rows[i].w.size(); ++j)
            m.set(i, rows[i].first_col + static_cast<int>(j), rows[i].w[j]);
    return {std::move(m), false, tag, tag};
}

DiscreteOperator conjugation_operator(const GridSpec& grid, const std::string& from_tag,
                                      const std::string& to_tag) {
    return {BandMatrix::identity(grid.n), true, from_tag, to_tag};
}

DiscreteOperator diagonal_operator(const GridFunction& d, const std::string& tag) {
    return {BandMatrix::diagonal(d.values), false, tag, tag};
}

SuperBlock::SuperBlock(int n, std::string domain_tag_top, std::string domain_tag_bottom)
    : n_(n), tags_{std::move(domain_tag_top), std::move(domain_tag_bottom)} {
    if (n <= 0) throw ValidationError("SuperBlock: bad block size");
}

void SuperBlock::set_block(int i, int j, DiscreteOperator op) {
    if (i < 0 || i > 1 || j < 0 || j > 1) throw ValidationError("SuperBlock: block index");
    if (op.n() != n_) throw ValidationError("SuperBlock: block dimension mismatch");
    if (op.domain_tag() != tags_[j] || op.codomain_tag() != tags_[i])
        throw ValidationError("SuperBlock: block tags do not match component spaces");
    blocks_[static_cast<std::size_t>(2 * i + j)] = std::move(op);
}

const std::optional<DiscreteOperator>& SuperBlock::block(int i, int j) const {
    return blocks_[static_cast<std::size_t>(2 * i + j)];
}

std::vector<cplx> SuperBlock::apply(const std::vector<cplx>& v) const {
    if (static_cast<int>(v.size()) != 2 * n_)
        throw ValidationError("SuperBlock::apply: vector size mismatch");
    std::vector<cplx> out(2 * n_, cplx(0.0, 0.0));
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const auto& b = block(i, j);
            if (!b) continue;
            std::vector<cplx> part(v.begin() + j * n_, v.begin() + (j + 1) * n_);
            const std::vector<cplx> r = b->apply(part);
            for (int t = 0; t < n_; ++t) out[i * n_ + t] += r[t];
        }
    }
    return out;
}

SuperBlock SuperBlock::compose(const SuperBlock& a, const SuperBlock& b) {
    if (a.n_ != b.n_) throw ValidationError("SuperBlock::compose: size mismatch");
    SuperBlock out(a.n_, b.tags_[0], b.tags_[1]);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            std::optional<DiscreteOperator> acc;
            for (int k = 0; k < 2; ++k) {
                const auto& l = a.block(i, k);
                const auto& r = b.block(k, j);
                if (!l || !r) continue;
                DiscreteOperator term = DiscreteOperator::compose(*l, *r);
                if (acc)
                    acc = DiscreteOperator::sum(*acc, term);
                else
                    acc = std::move(term);
            }
            if (acc) out.blocks_[static_cast<std::size_t>(2 * i + j)] = std::move(*acc);
        }
    }
    return out;
}

SuperBlock SuperBlock::anticommutator(const SuperBlock& a, const SuperBlock& b) {
    const SuperBlock ab = compose(a, b);
    const SuperBlock ba = compose(b, a);
    SuperBlock out(a.n_, b.tags_[0], b.tags_[1]);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const auto& p = ab.block(i, j);
            const auto& q = ba.block(i, j);
            if (p && q)
                out.set_block(i, j, DiscreteOperator::sum(*p, *q));
            else if (p)
                out.set_block(i, j, *p);
            else if (q)
                out.set_block(i, j, *q);
        }
    }
    return out;
}

Charges build_charges(const GridFunction& W_minus, const DiscreteOperator& conj_op,
                      const DiscreteOperator& inverse_conj_op, int accuracy) {
    const std::string gamma = conj_op.domain_tag();
    const std::string gamma_star = conj_op.codomain_tag();
    if (inverse_conj_op.domain_tag() != gamma_star || inverse_conj_op.codomain_tag() != gamma)
        throw ValidationError("build_charges: inverse conjugation tags must mirror conjugation");
    if (!conj_op.antilinear() || !inverse_conj_op.antilinear())
        throw ValidationError("build_charges: conjugation operators must be antilinear");
    const int n = W_minus.size();
    if (conj_op.n() != n || inverse_conj_op.n() != n)
        throw ValidationError("build_charges: dimension mismatch with grid");

    const DiscreteOperator D = derivative_operator(W_minus.grid, 1, accuracy, gamma);
    const DiscreteOperator W = diagonal_operator(W_minus, gamma);

    // A = -T D + T W : antilinear, maps gamma -> gamma*
    DiscreteOperator A = DiscreteOperator::sum(
        DiscreteOperator::compose(conj_op, D).scaled(cplx(-1.0, 0.0)),
        DiscreteOperator::compose(conj_op, W));
    A = DiscreteOperator(A.materialize(), true, gamma, gamma_star);

    // B = D T^-1 + W T^-1 : antilinear, maps gamma* -> gamma
    DiscreteOperator B = DiscreteOperator::sum(
        DiscreteOperator::compose(D, inverse_conj_op),
        DiscreteOperator::compose(W, inverse_conj_op));
    B = DiscreteOperator(B.materialize(), true, gamma_star, gamma);

    SuperBlock Q(n, gamma, gamma_star);
    Q.set_block(1, 0, A);
    SuperBlock Qt(n, gamma, gamma_star);
    Qt.set_block(0, 1, B);
    SuperBlock H(n, gamma, gamma_star);
    H.set_block(0, 0, DiscreteOperator::compose(B, A));  // H^- = BA, linear
    H.set_block(1, 1, DiscreteOperator::compose(A, B));  // H^+ = AB, linear
    return {std::move(Q), std::move(Qt), std::move(H), std::move(A), std::move(B)};
}

double SuperalgebraReport::worst() const {
    return std::max({anticommutator_vs_H, q_squared, qt_squared, commutator_H_Q, commutator_H_Qt});
}

SuperalgebraReport check_superalgebra(const SuperBlock& Q, const SuperBlock& Qt,
                                      const SuperBlock& H, int trials, std::uint64_t seed) {
    if (trials < 1) throw ValidationError("check_superalgebra: trials must be >= 1");
    const int n2 = 2 * Q.block_size();
    SuperalgebraReport rep;
    rep.trials = trials;
    rep.seed = seed;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 eng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1)));
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<cplx> v(n2);
        for (cplx& z : v) z = cplx(dist(eng), dist(eng));
        const double nv = vec_norm(v);

        const std::vector<cplx> Qv = Q.apply(v);
        const std::vector<cplx> Qtv = Qt.apply(v);
        const std::vector<cplx> Hv = H.apply(v);

        const std::vector<cplx> anti = vec_add(Q.apply(Qtv), Qt.apply(Qv));
        rep.anticommutator_vs_H = std::max(rep.anticommutator_vs_H, vec_norm(vec_sub(anti, Hv)) / nv);
        rep.q_squared = std::max(rep.q_squared, vec_norm(Q.apply(Qv)) / nv);
        rep.qt_squared = std::max(rep.qt_squared, vec_norm(Qt.apply(Qtv)) / nv);
        rep.commutator_H_Q = std::max(rep.commutator_H_Q,
                                      vec_norm(vec_sub(H.apply(Qv), Q.apply(Hv))) / nv);
        rep.commutator_H_Qt = std::max(rep.commutator_H_Qt,
                                       vec_norm(vec_sub(H.apply(Qtv), Qt.apply(Hv))) / nv);
    }
    return rep;
}

}  // namespace tobsusy
