#include "tobsusy/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tobsusy {

namespace {

void check_letters(const std::vector<Letter>& ls) {
    for (const Letter& l : ls) {
        if (l.index < 1) throw ValidationError("HomotopyWord: puncture index must be >= 1");
        if (l.exp != 1 && l.exp != -1)
            throw ValidationError("HomotopyWord: exponent must be +1 or -1");
    }
}

void check_indices(const HomotopyWord& w, int M, const char* where) {
    for (const Letter& l : w.letters)
        if (l.index < 1 || l.index > M)
            throw ValidationError(std::string(where) + ": puncture index out of range");
}

}  // namespace

BranchPointSet BranchPointSet::make(std::vector<cplx> pts, cplx cut_direction, double match_tol) {
    if (pts.empty()) throw ValidationError("BranchPointSet: need M >= 1 punctures");
    if (std::abs(std::abs(cut_direction) - 1.0) > 1e-12)
        throw ValidationError("BranchPointSet: cut_direction must be a unit complex number");
    const int M = static_cast<int>(pts.size());
    double scale = 0.0;
    for (int i = 0; i < M; ++i) {
        scale = std::max(scale, std::abs(pts[i]));
        for (int j = i + 1; j < M; ++j)
            if (pts[i] == pts[j]) throw ValidationError("BranchPointSet: punctures must be distinct");
    }
    const double tol = match_tol * (1.0 + scale);

    BranchPointSet set;
    set.points = std::move(pts);
    set.cut_direction = cut_direction;
    set.sigma.assign(M, -1);
    for (int k = 0; k < M; ++k) {
        const cplx target = std::conj(set.points[k]);
        int best = -1;
        double best_d = tol;
        for (int j = 0; j < M; ++j) {
            const double d = std::abs(set.points[j] - target);
            if (d <= best_d) {
                best = j;
                best_d = d;
            }
        }
        if (best < 0)
            throw ValidationError("BranchPointSet: set is not closed under complex conjugation");
        set.sigma[k] = best;
    }
    for (int k = 0; k < M; ++k)
        if (set.sigma[set.sigma[k]] != k)
            throw ValidationError("BranchPointSet: mirror map is not an involution");
    return set;
}

HomotopyWord::HomotopyWord(std::vector<Letter> ls) : letters(std::move(ls)) {
    check_letters(letters);
}

ConjugationChoice::ConjugationChoice(std::vector<int> s) : signs(std::move(s)) {
    for (int v : signs)
        if (v != 1 && v != -1) throw ValidationError("ConjugationChoice: signs must be +1 or -1");
}

SheetState::SheetState(std::vector<double> t) : theta(std::move(t)) {
    for (double v : theta)
        if (!std::isfinite(v)) throw ValidationError("SheetState: non-finite theta");
}

int SheetState::sheet_index(int k) const {
    return static_cast<int>(std::floor((theta.at(k) + M_PI) / (2.0 * M_PI)));
}

HomotopyWord reduce(const HomotopyWord& word) {
    check_letters(word.letters);
    std::vector<Letter> out;
    out.reserve(word.letters.size());
    for (const Letter& l : word.letters) {
        if (!out.empty() && out.back().index == l.index && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    HomotopyWord w;
    w.letters = std::move(out);
    return w;
}

HomotopyWord concat(const HomotopyWord& a, const HomotopyWord& b) {
    std::vector<Letter> ls = a.letters;
    ls.insert(ls.end(), b.letters.begin(), b.letters.end());
    return reduce(HomotopyWord(std::move(ls)));
}

std::vector<int> abelianize(const HomotopyWord& word, int M) {
    if (M < 1) throw ValidationError("abelianize: M must be >= 1");
    check_indices(word, M, "abelianize");
    std::vector<int> w(M, 0);
    for (const Letter& l : word.letters) w[l.index - 1] += l.exp;
    return w;
}

HomotopyWord conjugate_word(const HomotopyWord& word, const BranchPointSet& set,
                            const ConjugationChoice& rho) {
    const int M = set.size();
    if (rho.size() != M) throw ValidationError("conjugate_word: rho length must equal M");
    check_indices(word, M, "conjugate_word");

    std::vector<Letter> out;
    out.reserve(3 * word.letters.size());
    for (const Letter& l : word.letters) {
        const int m = set.sigma[l.index - 1] + 1;  // mirrored puncture, 1-based
        if (rho.signs[l.index - 1] > 0) {
            out.push_back({m, -l.exp});
        } else {
            // through the rotated cut: conjugate the reflected letter by g_m
            out.push_back({m, 1});
            out.push_back({m, -l.exp});
            out.push_back({m, -1});
        }
    }
    return reduce(HomotopyWord(std::move(out)));
}

SheetState apply_conjugation_sheets(const SheetState& state, const ConjugationChoice& rho) {
    if (static_cast<int>(state.theta.size()) != rho.size())
        throw ValidationError("apply_conjugation_sheets: length mismatch");
    std::vector<double> out(state.theta.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = -state.theta[k] + 2.0 * M_PI * rho.signs[k];
    return SheetState(std::move(out));
}

ClassEnumeration enumerate_classes(int M, int max_length) {
    if (M != 1 && M != 2) throw CapabilityError("enumerate_classes: M must be 1 or 2");
    if (max_length < 0 || max_length > 12)
        throw CapabilityError("enumerate_classes: max_length must be in [0, 12]");

    // letter order: g1 < g1^-1 < g2 < g2^-1
    std::vector<Letter> alphabet;
    for (int k = 1; k <= M; ++k) {
        alphabet.push_back({k, 1});
        alphabet.push_back({k, -1});
    }

    ClassEnumeration result;
    std::vector<HomotopyWord> current{HomotopyWord{}};
    auto emit = [&](const HomotopyWord& w) {
        auto winding = abelianize(w, M);
        result.class_counts[winding] += 1;
        result.entries.emplace_back(w, std::move(winding));
    };
    emit(current.front());
    for (int len = 1; len <= max_length; ++len) {
        std::vector<HomotopyWord> next;
        next.reserve(current.size() * alphabet.size());
        for (const HomotopyWord& w : current) {
            for (const Letter& l : alphabet) {
                if (!w.letters.empty() && w.letters.back().index == l.index &&
                    w.letters.back().exp == -l.exp)
                    continue;  // would cancel, not reduced
                HomotopyWord z = w;
                z.letters.push_back(l);
                next.push_back(std::move(z));
            }
        }
        for (const HomotopyWord& w : next) emit(w);
        current = std::move(next);
    }
    return result;
}

}  // namespace tobsusy
