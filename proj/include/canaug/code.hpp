// Linear codes over GF(2), GF(3), GF(4): generator matrices, codeword
// enumeration, weight data, duals, puncturing/shortening and the predicates
// the classification filters on.

#ifndef CANAUG_CODE_HPP
#define CANAUG_CODE_HPP

#include <climits>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "matrix.hpp"
#include "vec.hpp"

namespace canaug {

inline constexpr int kInfDistance = INT_MAX;
inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t{1} << 20;

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // counts[w] = number of codewords of weight w
};

inline std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

namespace detail {

// Visits c(x) = sum x_i rows[i] for every x in F_q^rows.size(), in base-q
// counter order with the last coefficient fastest. Rows need not be
// independent; duplicates in the span are then visited repeatedly, which is
// exactly what message-indexed consumers want.
template <typename Fn>
void enumerate_span(const Field& f, const std::vector<Vec>& rows, int n, Fn&& fn) {
    const int k = static_cast<int>(rows.size());
    const int q = f.q;
    std::vector<std::vector<Vec>> delta(k);
    for (int i = 0; i < k; ++i) {
        delta[i].resize(q + 1, Vec(f, n));
        Vec prev(f, n);
        for (int c = 1; c < q; ++c) {
            Vec cur = rows[i];
            cur.scale_assign(static_cast<Elem>(c));
            Vec d = cur;
            Vec negp = prev;
            negp.scale_assign(f.neg(1));
            d.add_assign(negp);
            delta[i][c] = std::move(d);
            prev = std::move(cur);
        }
        prev.scale_assign(f.neg(1));
        delta[i][q] = std::move(prev);
    }
    Vec cur(f, n);
    auto rec = [&](auto&& self, int level) -> void {
        if (level == k) {
            fn(static_cast<const Vec&>(cur));
            return;
        }
        for (int c = 0; c < q; ++c) {
            self(self, level + 1);
            cur.add_assign(delta[level][c + 1]);
        }
    };
    rec(rec, 0);
}

}  // namespace detail

class LinearCode {
  public:
    LinearCode() = default;

    static LinearCode zero(const Field& f, int n) {
        LinearCode c;
        c.gen_ = Mat(f, 0, n);
        c.cache_ = std::make_shared<Cache>();
        return c;
    }

    // Takes the rows as given (no reduction); rejects rank-deficient input.
    static LinearCode from_rows(const Field& f, int k, int n, std::span<const Elem> entries) {
        if (k < 1 || n < 1 || k > n)
            throw std::invalid_argument("code: need 1 <= k <= n");
        if (entries.size() != static_cast<std::size_t>(k) * n)
            throw std::invalid_argument("code: entry count does not match k*n");
        Mat g(f, k, n);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (!f.valid_elem(entries[i]))
                throw std::invalid_argument("code: invalid element code " + std::to_string(entries[i]));
            g.a[i] = entries[i];
        }
        const int r = g.rank();
        if (r < k)
            throw std::invalid_argument("code: generator rank " + std::to_string(r) +
                                        " is below the requested dimension " + std::to_string(k));
        LinearCode c;
        c.gen_ = std::move(g);
        c.cache_ = std::make_shared<Cache>();
        return c;
    }

    static LinearCode from_matrix(Mat g) {
        const int r = g.rank();
        if (r < g.rows)
            throw std::invalid_argument("code: generator rank " + std::to_string(r) +
                                        " is below the requested dimension " + std::to_string(g.rows));
        LinearCode c;
        c.gen_ = std::move(g);
        c.cache_ = std::make_shared<Cache>();
        return c;
    }

    const Field& field() const { return *gen_.f; }
    int n() const { return gen_.cols; }
    int k() const { return gen_.rows; }
    const Mat& gen() const { return gen_; }
    std::uint64_t size() const { return pow_u64(field().q, k()); }

    // Visits every codeword exactly once (message vectors in base-q counter
    // order, last row's coefficient fastest).
    template <typename Fn>
    void for_each_codeword(Fn&& fn, std::uint64_t budget = kDefaultEnumBudget) const {
        if (size() > budget)
            throw BudgetError("code: codeword enumeration over budget (q^k = " +
                              std::to_string(size()) + ")");
        const Field& f = field();
        std::vector<Vec> rows;
        rows.reserve(k());
        for (int i = 0; i < k(); ++i) {
            Vec v(f, n());
            for (int j = 0; j < n(); ++j) v.set(j, gen_.at(i, j));
            rows.push_back(std::move(v));
        }
        detail::enumerate_span(f, rows, n(), std::forward<Fn>(fn));
    }

    std::vector<Vec> codewords(std::uint64_t budget = kDefaultEnumBudget) const {
        std::vector<Vec> out;
        out.reserve(size());
        for_each_codeword([&](const Vec& v) { out.push_back(v); }, budget);
        return out;
    }

    const WeightDistribution& weight_distribution(std::uint64_t budget = kDefaultEnumBudget) const {
        std::call_once(cache_->once, [&] {
            WeightDistribution wd;
            wd.counts.assign(n() + 1, 0);
            int dmin = kInfDistance;
            for_each_codeword(
                [&](const Vec& v) {
                    const int w = v.weight();
                    ++wd.counts[w];
                    if (w > 0 && w < dmin) dmin = w;
                },
                budget);
            cache_->wd = std::move(wd);
            cache_->min_distance = dmin;
        });
        return *cache_->wd;
    }

    int min_distance(std::uint64_t budget = kDefaultEnumBudget) const {
        weight_distribution(budget);
        return cache_->min_distance;
    }

    // Generator of a column-permuted equivalent code in the form (I_k | A),
    // plus the permutation used: column j of the result is column src[j] of
    // this code. Identity when the first k columns already carry the pivots.
    std::pair<Mat, std::vector<int>> systematic_form() const {
        Mat r = gen_;
        const std::vector<int> pivots = r.rref();
        std::vector<int> src;
        src.reserve(n());
        std::vector<char> is_pivot(n(), 0);
        for (int p : pivots) is_pivot[p] = 1;
        for (int p : pivots) src.push_back(p);
        for (int j = 0; j < n(); ++j)
            if (!is_pivot[j]) src.push_back(j);
        Mat out(field(), k(), n());
        for (int j = 0; j < n(); ++j)
            for (int i = 0; i < k(); ++i) out.at(i, j) = r.at(i, src[j]);
        return {std::move(out), std::move(src)};
    }

    // Euclidean dual; the dual of the full space is the zero code and vice versa.
    LinearCode dual() const {
        const Field& f = field();
        if (k() == 0) return from_matrix(Mat::identity(f, n()));
        if (k() == n()) return zero(f, n());
        auto [sys, src] = systematic_form();
        const int m = n() - k();
        Mat d(f, m, n());
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < k(); ++c) d.at(r, src[c]) = f.neg(sys.at(c, k() + r));
            d.at(r, src[k() + r]) = 1;
        }
        return from_matrix(std::move(d));
    }

    // True iff every set of t-1 columns of the generator matrix is linearly
    // independent (no nonzero dual word of weight below t).
    bool dual_distance_at_least(int t) const {
        if (t < 1) throw std::invalid_argument("dual_distance_at_least: t must be >= 1");
        if (t == 1 || k() == n()) return true;
        if (k() == 0) return false;  // every column is zero
        const Field& f = field();
        // t >= 2: no zero column
        for (int j = 0; j < n(); ++j) {
            bool zero = true;
            for (int i = 0; i < k() && zero; ++i) zero = gen_.at(i, j) == 0;
            if (zero) return false;
        }
        if (t == 2) return true;
        // t >= 3: no proportional column pair; normalize by first nonzero entry
        std::vector<std::vector<Elem>> norm(n());
        for (int j = 0; j < n(); ++j) {
            std::vector<Elem> col(k());
            for (int i = 0; i < k(); ++i) col[i] = gen_.at(i, j);
            Elem lead = 0;
            for (Elem v : col)
                if (v) { lead = v; break; }
            const Elem s = f.inv(lead);
            for (Elem& v : col) v = f.mul(v, s);
            norm[j] = std::move(col);
        }
        for (int a = 0; a < n(); ++a)
            for (int b = a + 1; b < n(); ++b)
                if (norm[a] == norm[b]) return false;
        if (t == 3) return true;
        // generic: all (t-1)-subsets of columns must have full rank
        const int s = std::min(t - 1, n());
        std::vector<int> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            Mat sub(f, k(), s);
            for (int c = 0; c < s; ++c)
                for (int i = 0; i < k(); ++i) sub.at(i, c) = gen_.at(i, idx[c]);
            if (sub.rank() < s) return false;
            int pos = s - 1;
            while (pos >= 0 && idx[pos] == n() - s + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int c = pos + 1; c < s; ++c) idx[c] = idx[c - 1] + 1;
        }
        return true;
    }

    // Deletes coordinate j (0-based) from every codeword; the dimension is
    // recomputed and may drop by one.
    LinearCode puncture(int j) const {
        check_coord(j);
        Mat g(field(), k(), n() - 1);
        for (int i = 0; i < k(); ++i)
            for (int c = 0, o = 0; c < n(); ++c)
                if (c != j) g.at(i, o++) = gen_.at(i, c);
        return from_independent_rows(std::move(g));
    }

    // Restricts to the subcode vanishing at j, then deletes j.
    LinearCode shorten(int j) const {
        check_coord(j);
        const Field& f = field();
        Mat g = gen_;
        int pr = -1;
        for (int i = 0; i < k(); ++i)
            if (g.at(i, j)) { pr = i; break; }
        if (pr >= 0) {
            g.scale_row(pr, f.inv(g.at(pr, j)));
            for (int i = 0; i < k(); ++i)
                if (i != pr && g.at(i, j)) g.add_row(i, pr, f.neg(g.at(i, j)));
        }
        Mat out(f, pr >= 0 ? k() - 1 : k(), n() - 1);
        for (int i = 0, o = 0; i < k(); ++i) {
            if (i == pr) continue;
            for (int c = 0, oc = 0; c < n(); ++c)
                if (c != j) out.at(o, oc++) = g.at(i, c);
            ++o;
        }
        return from_independent_rows(std::move(out));
    }

    bool is_self_orthogonal(InnerForm form = InnerForm::euclidean) const {
        const Field& f = field();
        if (form == InnerForm::hermitian && f.q != 4)
            throw std::invalid_argument("is_self_orthogonal: hermitian form requires q=4");
        for (int i = 0; i < k(); ++i)
            for (int j = i; j < k(); ++j)
                if (inner_product(f, gen_.row(i), gen_.row(j), form)) return false;
        return true;
    }

    bool is_divisible(int delta, std::uint64_t budget = kDefaultEnumBudget) const {
        if (delta < 2) throw std::invalid_argument("is_divisible: divisor must be >= 2");
        const auto& wd = weight_distribution(budget);
        for (int w = 1; w <= n(); ++w)
            if (wd.counts[w] && w % delta != 0) return false;
        return true;
    }

    // Row-space equality.
    bool same_code(const LinearCode& o) const {
        if (n() != o.n() || k() != o.k() || field().q != o.field().q) return false;
        Mat a = gen_, b = o.gen_;
        a.rref();
        b.rref();
        return a == b;
    }

  private:
    static LinearCode from_independent_rows(Mat g) {
        Mat r = g;
        const auto pivots = r.rref();
        const int rank = static_cast<int>(pivots.size());
        if (rank == g.rows) {
            LinearCode c;
            c.gen_ = std::move(g);
            c.cache_ = std::make_shared<Cache>();
            return c;
        }
        Mat out(*g.f, rank, g.cols);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < g.cols; ++j) out.at(i, j) = r.at(i, j);
        LinearCode c;
        c.gen_ = std::move(out);
        c.cache_ = std::make_shared<Cache>();
        return c;
    }

    void check_coord(int j) const {
        if (j < 0 || j >= n())
            throw std::invalid_argument("code: coordinate index " + std::to_string(j) +
                                        " out of range");
    }

    struct Cache {
        std::once_flag once;
        std::optional<WeightDistribution> wd;
        int min_distance = kInfDistance;
    };

    Mat gen_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace canaug

#endif
