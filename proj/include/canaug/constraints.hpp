// Declarative run constraints with hereditary classification: which
// predicates may prune at every growth step of a given mode and which must
// wait for the final length.

#ifndef CANAUG_CONSTRAINTS_HPP
#define CANAUG_CONSTRAINTS_HPP

#include "code.hpp"

namespace canaug {

enum class Mode { column, row };
enum class SOForm { none, euclidean, hermitian };

struct ConstraintSet {
    int d = 1;       // minimum distance target, ">= d" semantics
    int d_dual = 1;  // dual distance target
    SOForm so = SOForm::none;
    int divisor = 0;  // 0 = no divisibility constraint, else >= 2
};

struct PredicateTags {
    bool puncture_hereditary = false;  // survives removing a coordinate
    bool shorten_hereditary = false;   // survives shortening at a coordinate
};

// Shortening can lower the dual distance by one (the dual gets punctured), so
// only the scheduled form prunes row steps; the fixed threshold is hereditary
// under puncturing alone. Minimum distance mirrors this the other way round.
inline PredicateTags tags_dual_distance() { return {true, false}; }
inline PredicateTags tags_min_distance() { return {false, true}; }
inline PredicateTags tags_self_orthogonal() { return {false, true}; }
inline PredicateTags tags_divisible() { return {false, true}; }

// d_i = max(1, d - (n-k) + i): the weakest minimum distance an [k+i, k]
// ancestor of a target [n, k, >= d] code can have.
inline int distance_schedule(int n, int k, int d, int i) {
    return std::max(1, d - (n - k) + i);
}

// The weakest dual distance an [n-k+s, s] ancestor can have.
inline int dual_schedule(int k, int d_dual, int s) {
    return std::max(1, d_dual - (k - s));
}

// Field / bound / compatibility validation. Demotions (a predicate that is
// not hereditary for the chosen mode) are reported as warnings; the step
// checks below simply skip demoted predicates.
inline std::vector<std::string> validate_constraints(int q, int n, int k, Mode mode,
                                                     const ConstraintSet& cs) {
    field_make(q);
    if (k < 1 || n < k) throw std::invalid_argument("constraints: need 1 <= k <= n");
    if (cs.d < 1) throw std::invalid_argument("constraints: dmin must be >= 1");
    if (cs.d > n - k + 1)
        throw std::invalid_argument("constraints: dmin " + std::to_string(cs.d) +
                                    " violates the Singleton bound (max " +
                                    std::to_string(n - k + 1) + ")");
    if (cs.d_dual < 1) throw std::invalid_argument("constraints: dual-min must be >= 1");
    if (cs.so == SOForm::hermitian && q != 4)
        throw std::invalid_argument("constraints: hermitian self-orthogonality requires q=4");
    if (cs.divisor == 1 || cs.divisor < 0)
        throw std::invalid_argument("constraints: divisor must be >= 2");
    std::vector<std::string> warnings;
    if (mode == Mode::column) {
        if (cs.so != SOForm::none)
            warnings.push_back("self-orthogonality is not puncture-hereditary; "
                               "enforced only at the final length in column mode");
        if (cs.divisor >= 2)
            warnings.push_back("divisibility is not puncture-hereditary; "
                               "enforced only at the final length in column mode");
    } else if (cs.d < 2) {
        warnings.push_back("row mode with dmin < 2 can miss classes containing "
                           "weight-0/1 coordinates");
    }
    return warnings;
}

// Constraints applicable while a code is still growing. `code` sits at level
// i (column mode: length k+i) or dimension s (row mode).
inline bool check_step(const LinearCode& code, int n, int k, Mode mode,
                       const ConstraintSet& cs, std::uint64_t budget = kDefaultEnumBudget) {
    if (mode == Mode::column) {
        const int i = code.n() - k;
        if (code.min_distance(budget) < distance_schedule(n, k, cs.d, i)) return false;
        if (!code.dual_distance_at_least(cs.d_dual)) return false;
        return true;
    }
    const int s = code.k();
    if (s >= 1 && code.min_distance(budget) < cs.d) return false;
    if (!code.dual_distance_at_least(dual_schedule(k, cs.d_dual, s))) return false;
    if (cs.so != SOForm::none &&
        !code.is_self_orthogonal(cs.so == SOForm::hermitian ? InnerForm::hermitian
                                                            : InnerForm::euclidean))
        return false;
    if (cs.divisor >= 2 && !code.is_divisible(cs.divisor, budget)) return false;
    return true;
}

inline bool check_final(const LinearCode& code, const ConstraintSet& cs,
                        std::uint64_t budget = kDefaultEnumBudget) {
    if (code.k() >= 1 && code.min_distance(budget) < cs.d) return false;
    if (!code.dual_distance_at_least(cs.d_dual)) return false;
    if (cs.so != SOForm::none &&
        !code.is_self_orthogonal(cs.so == SOForm::hermitian ? InnerForm::hermitian
                                                            : InnerForm::euclidean))
        return false;
    if (cs.divisor >= 2 && !code.is_divisible(cs.divisor, budget)) return false;
    return true;
}

}  // namespace canaug

#endif
