#pragma once

#include <map>
#include <vector>

#include "tobsusy/grid.hpp"

namespace tobsusy {

// Branch points of the wave function, with the vertical-cut convention and
// the mirror involution sigma pairing each puncture with its conjugate.
struct BranchPointSet {
    std::vector<cplx> points;
    cplx cut_direction{0.0, 1.0};
    std::vector<int> sigma;  // 0-based: points[sigma[k]] == conj(points[k])

    static BranchPointSet make(std::vector<cplx> points, cplx cut_direction = {0.0, 1.0},
                               double match_tol = 1e-9);
    int size() const { return static_cast<int>(points.size()); }
};

// One letter of a path word: generator index (1..M) and exponent (+1/-1).
struct Letter {
    int index = 1;
    int exp = 1;
    bool operator==(const Letter& o) const { return index == o.index && exp == o.exp; }
};

// A word in the free group on M generators. Words returned by the library
// operations are always freely reduced.
struct HomotopyWord {
    std::vector<Letter> letters;

    HomotopyWord() = default;
    explicit HomotopyWord(std::vector<Letter> ls);

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const HomotopyWord& o) const { return letters == o.letters; }
};

// Sign multiindex rho = (+-, ..., +-) selecting a generalized conjugation.
struct ConjugationChoice {
    std::vector<int> signs;  // each +1 or -1

    explicit ConjugationChoice(std::vector<int> s);
    int size() const { return static_cast<int>(signs.size()); }
};

// Continuous accumulated argument Theta_k around each puncture.
struct SheetState {
    std::vector<double> theta;

    explicit SheetState(std::vector<double> t);
    // Sheet label around puncture k: floor((Theta_k + pi) / 2pi).
    int sheet_index(int k) const;
};

HomotopyWord reduce(const HomotopyWord& word);
HomotopyWord concat(const HomotopyWord& a, const HomotopyWord& b);

// Exponent sums per generator (winding multiindex).
std::vector<int> abelianize(const HomotopyWord& word, int M);

// Letterwise image under the generalized conjugation T^(rho):
// g_k -> g_sigma(k)^-1, for sign -1 conjugated through the rotated cut
// (g_sigma(k)^+1 g_sigma(k)^-1 g_sigma(k)^-1, which reduces to the same
// element). The result is freely reduced.
HomotopyWord conjugate_word(const HomotopyWord& word, const BranchPointSet& set,
                            const ConjugationChoice& rho);

// Theta_k -> -Theta_k + 2 pi signs[k].
SheetState apply_conjugation_sheets(const SheetState& state, const ConjugationChoice& rho);

struct ClassEnumeration {
    std::vector<std::pair<HomotopyWord, std::vector<int>>> entries;  // word, winding
    std::map<std::vector<int>, int> class_counts;                    // winding -> #words
};

// All freely reduced words of length <= max_length over M generators,
// in deterministic order (length, then lexicographic), with their winding
// multiindices. Supported for M in {1, 2}, max_length <= 12.
ClassEnumeration enumerate_classes(int M, int max_length);

}  // namespace tobsusy
