// Brute-force ground truth, deliberately independent of the production
// canonical form and the generation engines: exhaustive semimonomial
// equivalence, the lexicographically-least canonical map, and exhaustive
// classification of tiny parameter boxes.

#ifndef CANAUG_ORACLE_HPP
#define CANAUG_ORACLE_HPP

#include <map>

#include "constraints.hpp"
#include "symmetry.hpp"

namespace canaug {
namespace oracle {

inline void check_budget(int q, int n) {
    const int limit = q == 2 ? 8 : 6;
    if (n > limit)
        throw BudgetError("oracle: n=" + std::to_string(n) + " over the brute-force budget for q=" +
                          std::to_string(q) + " (max " + std::to_string(limit) + ")");
}

namespace detail {

// Codewords as packed u64s, 4 bits per symbol, coordinate 0 in the top
// nibble, so integer order equals lexicographic order. n <= 16 here.
inline std::uint64_t pack_word(std::span<const Elem> v) {
    std::uint64_t w = 0;
    for (Elem e : v) w = (w << 4) | e;
    return w;
}

inline std::vector<std::uint64_t> packed_sorted_codewords(const LinearCode& c) {
    std::vector<std::uint64_t> out;
    out.reserve(c.size());
    c.for_each_codeword([&](const Vec& v) {
        std::uint64_t w = 0;
        for (int j = 0; j < c.n(); ++j) w = (w << 4) | v.get(j);
        out.push_back(w);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Enumerates every semimonomial map of length n over f, invoking
// fn(perm, scalars, auto_idx); perm[i] is the destination of coordinate i.
template <typename Fn>
void for_each_map(const Field& f, int n, Fn&& fn) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Elem> scalars(n, 1);
    do {
        bool carry;
        std::fill(scalars.begin(), scalars.end(), 1);
        do {
            for (int a = 0; a < f.automorphism_count; ++a) fn(perm, scalars, a);
            carry = true;
            for (int j = 0; j < n && carry; ++j) {
                if (scalars[j] < f.q - 1) {
                    ++scalars[j];
                    carry = false;
                } else {
                    scalars[j] = 1;
                }
            }
        } while (!carry);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

// Exhaustive equivalence test; optionally yields a witness map.
inline bool equivalent_bruteforce(const LinearCode& c1, const LinearCode& c2,
                                  SemimonomialMap* witness = nullptr) {
    if (c1.n() != c2.n() || c1.k() != c2.k() || c1.field().q != c2.field().q)
        throw std::invalid_argument("oracle: codes must share n, k and q");
    const Field& f = c1.field();
    const int n = c1.n();
    check_budget(f.q, n);
    const auto target = detail::packed_sorted_codewords(c2);
    std::vector<std::vector<Elem>> words1;
    words1.reserve(c1.size());
    c1.for_each_codeword([&](const Vec& v) { words1.push_back(v.to_bytes()); });

    bool found = false;
    detail::for_each_map(f, n, [&](const std::vector<int>& perm, const std::vector<Elem>& scalars,
                                   int a) {
        if (found) return;
        std::vector<Elem> img(n);
        for (const auto& w : words1) {
            for (int i = 0; i < n; ++i)
                img[perm[i]] = f.apply_automorphism(f.mul(scalars[perm[i]], w[i]), a);
            if (!std::binary_search(target.begin(), target.end(), detail::pack_word(img))) return;
        }
        found = true;
        if (witness) {
            SemimonomialMap m = SemimonomialMap::identity(f, n);
            for (int i = 0; i < n; ++i) m.perm[i] = static_cast<std::uint16_t>(perm[i]);
            for (int j = 0; j < n; ++j) m.scalars[j] = scalars[j];
            m.auto_idx = a;
            *witness = m;
        }
    });
    return found;
}

// The smallest code in the equivalence class, comparing the concatenations
// of the lexicographically ordered nonzero codewords.
inline LinearCode canonical_lexmin(const LinearCode& c) {
    const Field& f = c.field();
    const int n = c.n();
    check_budget(f.q, n);
    std::vector<std::vector<Elem>> words;
    words.reserve(c.size());
    c.for_each_codeword([&](const Vec& v) { words.push_back(v.to_bytes()); });

    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> cur;
    cur.reserve(words.size());
    detail::for_each_map(f, n, [&](const std::vector<int>& perm, const std::vector<Elem>& scalars,
                                   int a) {
        cur.clear();
        for (const auto& w : words) {
            std::vector<Elem> img(n);
            for (int i = 0; i < n; ++i)
                img[perm[i]] = f.apply_automorphism(f.mul(scalars[perm[i]], w[i]), a);
            cur.push_back(detail::pack_word(img));
        }
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    });

    // Rebuild a generator matrix from the minimal codeword list.
    Mat rows(f, static_cast<int>(best.size()), n);
    for (std::size_t r = 0; r < best.size(); ++r)
        for (int j = 0; j < n; ++j)
            rows.at(static_cast<int>(r), j) =
                static_cast<Elem>((best[r] >> (4 * (n - 1 - j))) & 0xf);
    Mat red = rows;
    const auto pivots = red.rref();
    Mat gen(f, static_cast<int>(pivots.size()), n);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (int j = 0; j < n; ++j) gen.at(static_cast<int>(i), j) = red.at(static_cast<int>(i), j);
    return LinearCode::from_matrix(std::move(gen));
}

struct ExhaustiveClassification {
    std::uint64_t total_codes = 0;  // rank-k RREF matrices passing the constraints
    std::vector<LinearCode> representatives;
};

// Enumerates every [n, k] code once (RREF enumeration), filters by the final
// constraints and buckets by canonical_lexmin.
inline ExhaustiveClassification classify_exhaustive(int q, int n, int k, const ConstraintSet& cs,
                                                    std::uint64_t budget = std::uint64_t{1} << 26) {
    const Field& f = field_make(q);
    check_budget(q, n);
    if (k < 1 || k > n) throw std::invalid_argument("oracle: need 1 <= k <= n");

    ExhaustiveClassification out;
    std::map<std::vector<std::uint64_t>, LinearCode> classes;

    std::vector<int> pivots(k);
    std::iota(pivots.begin(), pivots.end(), 0);
    std::uint64_t seen = 0;
    while (true) {
        // free entries: (i, j) with j > pivots[i], j not a pivot column
        std::vector<std::pair<int, int>> free_pos;
        std::vector<char> is_pivot(n, 0);
        for (int p : pivots) is_pivot[p] = 1;
        for (int i = 0; i < k; ++i)
            for (int j = pivots[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);
        const std::uint64_t fills = pow_u64(q, static_cast<int>(free_pos.size()));
        if ((seen += fills) > budget)
            throw BudgetError("oracle: classification space over budget");
        Mat g(f, k, n);
        for (int i = 0; i < k; ++i) g.at(i, pivots[i]) = 1;
        for (std::uint64_t idx = 0; idx < fills; ++idx) {
            std::uint64_t t = idx;
            for (const auto& [i, j] : free_pos) {
                g.at(i, j) = static_cast<Elem>(t % q);
                t /= q;
            }
            LinearCode code = LinearCode::from_matrix(g);
            if (!check_final(code, cs)) continue;
            ++out.total_codes;
            const LinearCode cf = canonical_lexmin(code);
            auto key = detail::packed_sorted_codewords(cf);
            classes.emplace(std::move(key), cf);
        }
        int pos = k - 1;
        while (pos >= 0 && pivots[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++pivots[pos];
        for (int c = pos + 1; c < k; ++c) pivots[c] = pivots[c - 1] + 1;
    }
    out.representatives.reserve(classes.size());
    for (auto& [key, rep] : classes) out.representatives.push_back(std::move(rep));
    return out;
}

}  // namespace oracle
}  // namespace canaug

#endif
