// Canonical representative map: ties together coordinate invariants
// (pseudo-orbits), a backtracking minimization of the ordered-codeword grid
// over the semimonomial group, automorphism harvesting, the canonical
// coordinate-orbit order, the special orbit and the parent test.
//
// The search assigns canonical positions one column at a time. Columns that
// are scalar multiples of each other are collapsed into projective classes
// (their mutual swaps are recorded as free automorphisms instead of being
// searched), candidate columns are confined to their invariant cell, and the
// partial objective - the sorted grid restricted to the assigned positions -
// prunes against the best complete grid found so far. Leaves that tie the
// best grid yield automorphisms, which feed a Sims filter and orbit pruning
// at the root branching level.

#ifndef CANAUG_CANON_HPP
#define CANAUG_CANON_HPP

#include <cassert>
#include <cstring>
#include <map>

#include "constraints.hpp"
#include "symmetry.hpp"

namespace canaug {

struct CoordinatePartition {
    std::vector<int> labels;              // coordinate -> cell index
    std::vector<std::vector<int>> cells;  // ordered by invariant value
};

struct CanonicalResult {
    LinearCode code;                      // the input
    LinearCode rho;                       // canonical representative
    std::vector<Elem> signature;          // q, n, k, then rho's generator entries
    SemimonomialMap phi;                  // phi(code) = rho
    std::vector<SemimonomialMap> aut;     // generators of Aut(code)
    std::vector<std::vector<int>> orbits; // all coordinate orbits, canonically ordered
    std::vector<int> o_a;                 // all-zero coordinates
    std::vector<int> o_b;                 // supports of weight-1 codewords
    int first_regular_orbit = -1;         // first orbit disjoint from o_a and o_b
};

namespace detail {

class Canonizer {
  public:
    Canonizer(const LinearCode& code, std::uint64_t budget) : c_(code), f_(code.field()) {
        n_ = c_.n();
        k_ = c_.k();
        q_ = f_.q;
        if (pow_u64(q_, k_) > budget)
            throw BudgetError("canonicalize: q^k over the enumeration budget");
        N_ = static_cast<int>(pow_u64(q_, k_));
    }

    CanonicalResult run() {
        build_reference();
        build_partition();
        build_classes();
        build_values();
        gens_ = GenSet(f_, n_);
        add_free_generators();

        order_.resize(N_);
        bounds_ = {0};
        remaining_.resize(classes_.size());
        path_.assign(n_, {0, 0});
        cur_segs_.assign(n_, std::vector<Elem>(N_));
        undo_order_.assign(n_, std::vector<int>(N_));
        undo_bounds_.assign(n_, {});
        scratch_.resize(N_);

        for (alpha_ = 0; alpha_ < f_.automorphism_count; ++alpha_) {
            if (alpha_ == 1) {
                bool have_twisted = false;
                for (const auto& g : gens_.gens())
                    if (g.auto_idx == 1) have_twisted = true;
                if (have_twisted) continue;  // that subtree repeats the first one
            }
            for (int i = 0; i < N_; ++i) order_[i] = i;
            bounds_ = {0};
            for (std::size_t t = 0; t < classes_.size(); ++t)
                remaining_[t] = static_cast<int>(classes_[t].members.size());
            root_explored_.clear();
            if (!best_valid_)
                descend_min(0);
            else
                expand(0);
        }
        return finish();
    }

  private:
    struct ProjClass {
        int cell = 0;
        bool zero = false;
        std::vector<Elem> rep;      // N symbols
        std::vector<int> members;   // column indices, ascending
        std::vector<Elem> mu;       // column = mu * rep
    };

    // ---- setup ------------------------------------------------------------

    void build_reference() {
        words_.reserve(N_);
        c_.for_each_codeword([&](const Vec& v) { words_.push_back(v.to_bytes()); },
                             std::uint64_t{1} << 62);
        cols_.assign(n_, std::vector<Elem>(N_));
        for (int r = 0; r < N_; ++r)
            for (int j = 0; j < n_; ++j) cols_[j][r] = words_[r][j];
        sorted_words_.resize(N_);
        for (int r = 0; r < N_; ++r) sorted_words_[r] = r;
        std::sort(sorted_words_.begin(), sorted_words_.end(),
                  [&](int a, int b) { return words_[a] < words_[b]; });
    }

    void build_partition() {
        // flags
        zero_col_.assign(n_, true);
        w1_support_.assign(n_, false);
        for (int j = 0; j < n_; ++j)
            for (int r = 0; r < N_; ++r)
                if (cols_[j][r]) { zero_col_[j] = false; break; }
        std::vector<std::vector<std::int64_t>> wcount(n_, std::vector<std::int64_t>(n_ + 1, 0));
        for (int r = 0; r < N_; ++r) {
            int w = 0;
            for (int j = 0; j < n_; ++j) w += words_[r][j] != 0;
            if (w == 1)
                for (int j = 0; j < n_; ++j)
                    if (words_[r][j]) w1_support_[j] = true;
            for (int j = 0; j < n_; ++j)
                if (words_[r][j]) ++wcount[j][w];
        }
        // projective multiplicity (including exact zero columns as one class)
        std::map<std::vector<Elem>, int> proj_count;
        std::vector<std::vector<Elem>> norm(n_);
        for (int j = 0; j < n_; ++j) {
            norm[j] = normalized_column(j).first;
            ++proj_count[norm[j]];
        }
        // assemble invariant keys
        std::map<std::vector<std::int64_t>, std::vector<int>> by_key;
        for (int j = 0; j < n_; ++j) {
            std::vector<std::int64_t> key;
            key.push_back(zero_col_[j] ? 2 : (w1_support_[j] ? 1 : 0));
            for (int w = 1; w <= n_; ++w) key.push_back(wcount[j][w]);
            key.push_back(-proj_count[norm[j]]);
            by_key[std::move(key)].push_back(j);
        }
        part_.labels.assign(n_, 0);
        for (auto& [key, cell] : by_key) {
            for (int j : cell) part_.labels[j] = static_cast<int>(part_.cells.size());
            part_.cells.push_back(cell);
        }
        // cell-major position layout
        cell_of_pos_.resize(n_);
        int p = 0;
        for (std::size_t ci = 0; ci < part_.cells.size(); ++ci)
            for (std::size_t m = 0; m < part_.cells[ci].size(); ++m)
                cell_of_pos_[p++] = static_cast<int>(ci);
    }

    std::pair<std::vector<Elem>, Elem> normalized_column(int j) const {
        Elem lead = 0;
        for (int r = 0; r < N_ && !lead; ++r) lead = cols_[j][r];
        std::vector<Elem> norm = cols_[j];
        if (lead) {
            const Elem s = f_.inv(lead);
            for (auto& e : norm) e = f_.mul(s, e);
        }
        return {std::move(norm), lead ? lead : Elem(1)};
    }

    void build_classes() {
        std::map<std::vector<Elem>, int> index;
        for (int j = 0; j < n_; ++j) {
            auto [norm, mu] = normalized_column(j);
            auto it = index.find(norm);
            if (it == index.end()) {
                ProjClass pc;
                pc.cell = part_.labels[j];
                pc.zero = zero_col_[j];
                pc.rep = norm;
                it = index.emplace(std::move(norm), static_cast<int>(classes_.size())).first;
                classes_.push_back(std::move(pc));
            }
            classes_[it->second].members.push_back(j);
            classes_[it->second].mu.push_back(mu);
        }
        cell_classes_.assign(part_.cells.size(), {});
        for (std::size_t t = 0; t < classes_.size(); ++t)
            cell_classes_[classes_[t].cell].push_back(static_cast<int>(t));
    }

    void build_values() {
        for (std::size_t t = 0; t < classes_.size(); ++t) {
            const int lmax = classes_[t].zero ? 1 : q_ - 1;
            for (int l = 1; l <= lmax; ++l) {
                Value v;
                v.cls = static_cast<int>(t);
                v.lambda = static_cast<Elem>(l);
                v.raw.resize(N_);
                for (int r = 0; r < N_; ++r)
                    v.raw[r] = f_.mul(static_cast<Elem>(l), classes_[t].rep[r]);
                value_index_.emplace(v.raw, static_cast<int>(values_.size()));
                values_.push_back(std::move(v));
            }
        }
        root_uf_ = std::make_unique<UnionFind>(static_cast<int>(values_.size()));
    }

    void add_free_generators() {
        // within-class transpositions (equal columns up to their scalars)
        for (const auto& pc : classes_) {
            for (std::size_t m = 0; m + 1 < pc.members.size(); ++m) {
                SemimonomialMap g = SemimonomialMap::identity(f_, n_);
                const int a = pc.members[m], b = pc.members[m + 1];
                g.perm[a] = static_cast<std::uint16_t>(b);
                g.perm[b] = static_cast<std::uint16_t>(a);
                if (!pc.zero) {
                    const Elem ma = pc.mu[m], mb = pc.mu[m + 1];
                    g.scalars[a] = f_.mul(ma, f_.inv(mb));
                    g.scalars[b] = f_.mul(mb, f_.inv(ma));
                }
                register_automorphism(g);
            }
            if (pc.zero && q_ > 2) {
                for (int m = 0; m < static_cast<int>(pc.members.size()); ++m) {
                    SemimonomialMap g = SemimonomialMap::identity(f_, n_);
                    g.scalars[pc.members[m]] = 2;
                    register_automorphism(g);
                }
            }
        }
        // weight-1 supports swap freely
        std::vector<int> w1;
        for (int j = 0; j < n_; ++j)
            if (w1_support_[j]) w1.push_back(j);
        for (std::size_t m = 0; m + 1 < w1.size(); ++m) {
            SemimonomialMap g = SemimonomialMap::identity(f_, n_);
            g.perm[w1[m]] = static_cast<std::uint16_t>(w1[m + 1]);
            g.perm[w1[m + 1]] = static_cast<std::uint16_t>(w1[m]);
            register_automorphism(g);
        }
        // global rescaling
        if (q_ > 2) {
            SemimonomialMap g = SemimonomialMap::identity(f_, n_);
            g.scalars.assign(n_, 2);
            register_automorphism(g);
        }
    }

    // ---- search -----------------------------------------------------------

    struct Value {
        int cls = 0;
        Elem lambda = 1;
        std::vector<Elem> raw;  // lambda * class representative, per codeword
    };

    struct Candidate {
        int value_id;
        std::vector<Elem> seg;  // grid column content in group order
        std::vector<Elem> col;  // alpha-applied symbols per codeword index
    };

    using UnionFind = canaug::detail::UnionFind;

    std::vector<Candidate> candidates(int t) {
        std::vector<Candidate> out;
        const int cell = cell_of_pos_[t];
        for (int cls : cell_classes_[cell]) {
            if (remaining_[cls] == 0) continue;
            const int lmax = classes_[cls].zero || t == 0 ? 1 : q_ - 1;
            for (int l = 1; l <= lmax; ++l) {
                const int vid = value_id(cls, static_cast<Elem>(l));
                Candidate cand;
                cand.value_id = vid;
                cand.col.resize(N_);
                const auto& raw = values_[vid].raw;
                if (alpha_ == 0) {
                    cand.col.assign(raw.begin(), raw.end());
                } else {
                    for (int r = 0; r < N_; ++r) cand.col[r] = f_.frob_tab[raw[r]];
                }
                cand.seg.resize(N_);
                int cnt[4];
                for (std::size_t g = 0; g < bounds_.size(); ++g) {
                    const int s = bounds_[g];
                    const int e = g + 1 < bounds_.size() ? bounds_[g + 1] : N_;
                    cnt[0] = cnt[1] = cnt[2] = cnt[3] = 0;
                    for (int i = s; i < e; ++i) ++cnt[cand.col[order_[i]]];
                    int o = s;
                    for (int sym = 0; sym < q_; ++sym)
                        for (int rep = 0; rep < cnt[sym]; ++rep)
                            cand.seg[o++] = static_cast<Elem>(sym);
                }
                out.push_back(std::move(cand));
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const Candidate& a, const Candidate& b) { return a.seg < b.seg; });
        return out;
    }

    int value_id(int cls, Elem lambda) const {
        int base = 0;
        for (int t = 0; t < cls; ++t) base += classes_[t].zero ? 1 : q_ - 1;
        return base + lambda - 1;
    }

    bool root_pruned(int value_id) {
        for (int e : root_explored_)
            if (root_uf_->find(e) == root_uf_->find(value_id)) return true;
        return false;
    }

    void apply_branch(int t, const Candidate& cand) {
        undo_order_[t].assign(order_.begin(), order_.end());
        undo_bounds_[t] = bounds_;
        path_[t] = {values_[cand.value_id].cls, values_[cand.value_id].lambda};
        cur_segs_[t].assign(cand.seg.begin(), cand.seg.end());
        --remaining_[values_[cand.value_id].cls];

        std::vector<int> new_bounds;
        int cnt[4], pos[4];
        for (std::size_t g = 0; g < undo_bounds_[t].size(); ++g) {
            const int s = undo_bounds_[t][g];
            const int e = g + 1 < undo_bounds_[t].size() ? undo_bounds_[t][g + 1] : N_;
            cnt[0] = cnt[1] = cnt[2] = cnt[3] = 0;
            for (int i = s; i < e; ++i) ++cnt[cand.col[undo_order_[t][i]]];
            pos[0] = s;
            for (int sym = 1; sym < q_; ++sym) pos[sym] = pos[sym - 1] + cnt[sym - 1];
            for (int sym = 0; sym < q_; ++sym)
                if (cnt[sym]) new_bounds.push_back(pos[sym]);
            for (int i = s; i < e; ++i) {
                const int row = undo_order_[t][i];
                scratch_[pos[cand.col[row]]++] = row;
            }
            for (int i = s; i < e; ++i) order_[i] = scratch_[i];
        }
        bounds_ = std::move(new_bounds);
    }

    void undo_branch(int t) {
        order_.assign(undo_order_[t].begin(), undo_order_[t].end());
        bounds_ = undo_bounds_[t];
        ++remaining_[path_[t].first];
    }

    // Entered with a prefix strictly below the incumbent (or none yet):
    // explore only minimal branches; the leftmost completion replaces the
    // incumbent, siblings then continue under full comparison.
    void descend_min(int t) {
        if (t == n_) {
            set_best();
            return;
        }
        auto cands = candidates(t);
        bool first = true;
        for (const auto& cand : cands) {
            if (cand.seg != cands.front().seg) break;
            if (t == 0 && root_pruned(cand.value_id)) continue;
            apply_branch(t, cand);
            if (first) {
                descend_min(t + 1);
                first = false;
            } else {
                expand(t + 1);
            }
            undo_branch(t);
            if (t == 0) root_explored_.push_back(cand.value_id);
        }
    }

    // Invariant on entry: positions < t match the incumbent grid exactly.
    void expand(int t) {
        if (t == n_) {
            harvest();
            return;
        }
        auto cands = candidates(t);
        for (const auto& cand : cands) {
            const int cmp = std::memcmp(cand.seg.data(), best_segs_[t].data(), N_);
            if (cmp > 0) break;  // sorted candidates: the rest are worse
            if (t == 0 && root_pruned(cand.value_id)) continue;
            apply_branch(t, cand);
            if (cmp == 0)
                expand(t + 1);
            else
                descend_min(t + 1);
            undo_branch(t);
            if (t == 0) root_explored_.push_back(cand.value_id);
        }
    }

    void set_best() {
        best_valid_ = true;
        best_alpha_ = alpha_;
        best_path_.assign(path_.begin(), path_.end());
        best_segs_.assign(cur_segs_.begin(), cur_segs_.end());
    }

    void harvest() {
        // current leaf ties the incumbent: compose into an automorphism
        const SemimonomialMap cur = lift(path_, alpha_);
        const SemimonomialMap best = lift(best_path_, best_alpha_);
        const SemimonomialMap gamma = map_compose(map_invert(cur), best);
        if (!gamma.is_identity()) register_automorphism(gamma);
    }

    SemimonomialMap lift(const std::vector<std::pair<int, Elem>>& path, int alpha) {
        SemimonomialMap m = SemimonomialMap::identity(f_, n_);
        m.auto_idx = alpha;
        std::vector<int> next(classes_.size(), 0);
        for (int pos = 0; pos < n_; ++pos) {
            const auto& [cls, lambda] = path[pos];
            const int memb = next[cls]++;
            const int src = classes_[cls].members[memb];
            m.perm[src] = static_cast<std::uint16_t>(pos);
            m.scalars[pos] =
                classes_[cls].zero ? Elem(1) : f_.mul(lambda, f_.inv(classes_[cls].mu[memb]));
        }
        return m;
    }

    void register_automorphism(const SemimonomialMap& g) {
        if (!gens_.add(g)) return;
        if (g.auto_idx != 0) return;  // root pruning works within one alpha branch
        // value relabeling: raw value composed with the codeword permutation
        std::vector<int> rgamma(N_);
        for (int r = 0; r < N_; ++r) {
            const auto img = g.apply(words_[r]);
            const auto it = std::lower_bound(sorted_words_.begin(), sorted_words_.end(), img,
                                             [&](int a, const std::vector<Elem>& w) {
                                                 return words_[a] < w;
                                             });
            rgamma[r] = *it;
        }
        std::vector<Elem> moved(N_);
        for (std::size_t v = 0; v < values_.size(); ++v) {
            for (int r = 0; r < N_; ++r) moved[r] = values_[v].raw[rgamma[r]];
            const auto it = value_index_.find(moved);
            if (it != value_index_.end()) root_uf_->unite(static_cast<int>(v), it->second);
        }
    }

    // ---- result -----------------------------------------------------------

    CanonicalResult finish() {
        CanonicalResult res;
        res.code = c_;

        Mat grid(f_, N_, n_);
        for (int t = 0; t < n_; ++t)
            for (int r = 0; r < N_; ++r) grid.at(r, t) = best_segs_[t][r];
        Mat red = grid;
        const auto pivots = red.rref();
        assert(static_cast<int>(pivots.size()) == k_);
        Mat gen(f_, k_, n_);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < n_; ++j) gen.at(i, j) = red.at(i, j);
        res.rho = k_ ? LinearCode::from_matrix(std::move(gen)) : LinearCode::zero(f_, n_);

        res.signature.reserve(3 + k_ * n_);
        res.signature.push_back(static_cast<Elem>(q_));
        res.signature.push_back(static_cast<Elem>(n_));
        res.signature.push_back(static_cast<Elem>(k_));
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < n_; ++j) res.signature.push_back(res.rho.gen().at(i, j));

        res.phi = lift(best_path_, best_alpha_);
        res.aut = gens_.gens();

        for (int j = 0; j < n_; ++j) {
            if (zero_col_[j]) res.o_a.push_back(j);
            if (w1_support_[j]) res.o_b.push_back(j);
        }

        auto orbits = coordinate_orbits(n_, res.aut);
        std::vector<std::pair<int, std::vector<int>>> keyed;
        for (auto& o : orbits) {
            int img = n_;
            for (int j : o) img = std::min<int>(img, res.phi.perm[j]);
            keyed.emplace_back(img, std::move(o));
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<char> special_blocked(n_, 0);
        for (int j : res.o_a) special_blocked[j] = 1;
        for (int j : res.o_b) special_blocked[j] = 1;
        for (auto& [img, o] : keyed) {
            const bool blocked =
                std::any_of(o.begin(), o.end(), [&](int j) { return special_blocked[j]; });
            if (!blocked && res.first_regular_orbit < 0)
                res.first_regular_orbit = static_cast<int>(res.orbits.size());
            res.orbits.push_back(std::move(o));
        }
        return res;
    }

    // ---- members ------------------------------------------------------

    LinearCode c_;
    const Field& f_;
    int n_ = 0, k_ = 0, q_ = 0, N_ = 0;

    std::vector<std::vector<Elem>> words_;
    std::vector<std::vector<Elem>> cols_;
    std::vector<int> sorted_words_;
    std::vector<char> zero_col_, w1_support_;
    CoordinatePartition part_;
    std::vector<int> cell_of_pos_;
    std::vector<ProjClass> classes_;
    std::vector<std::vector<int>> cell_classes_;
    std::vector<Value> values_;
    std::map<std::vector<Elem>, int> value_index_;

    GenSet gens_;
    std::unique_ptr<UnionFind> root_uf_;
    std::vector<int> root_explored_;

    int alpha_ = 0;
    std::vector<int> order_;
    std::vector<int> bounds_;
    std::vector<int> remaining_;
    std::vector<std::pair<int, Elem>> path_;
    std::vector<std::vector<Elem>> cur_segs_;
    std::vector<std::vector<int>> undo_order_;
    std::vector<std::vector<int>> undo_bounds_;
    std::vector<int> scratch_;

    bool best_valid_ = false;
    int best_alpha_ = 0;
    std::vector<std::pair<int, Elem>> best_path_;
    std::vector<std::vector<Elem>> best_segs_;
};

}  // namespace detail

inline CoordinatePartition coordinate_invariant(const LinearCode& c,
                                                std::uint64_t budget = kDefaultEnumBudget);

inline CanonicalResult canonicalize(const LinearCode& c,
                                    std::uint64_t budget = kDefaultEnumBudget) {
    if (c.k() == 0) {
        // the zero code: every column is zero, the full monomial group acts
        CanonicalResult res;
        res.code = c;
        res.rho = c;
        res.signature = {static_cast<Elem>(c.field().q), static_cast<Elem>(c.n()), 0};
        res.phi = SemimonomialMap::identity(c.field(), c.n());
        const Field& f = c.field();
        for (int j = 0; j + 1 < c.n(); ++j) {
            SemimonomialMap g = SemimonomialMap::identity(f, c.n());
            g.perm[j] = static_cast<std::uint16_t>(j + 1);
            g.perm[j + 1] = static_cast<std::uint16_t>(j);
            res.aut.push_back(std::move(g));
        }
        if (f.q > 2 && c.n() > 0) {
            SemimonomialMap g = SemimonomialMap::identity(f, c.n());
            g.scalars[0] = 2;
            res.aut.push_back(std::move(g));
        }
        std::vector<int> all(c.n());
        std::iota(all.begin(), all.end(), 0);
        res.o_a = all;
        if (!all.empty()) res.orbits.push_back(std::move(all));
        return res;
    }
    return detail::Canonizer(c, budget).run();
}

inline CoordinatePartition coordinate_invariant(const LinearCode& c, std::uint64_t budget) {
    CoordinatePartition part;
    // zero/weight-1 flags, per-weight incidence counts, projective sizes
    const Field& f = c.field();
    const int n = c.n();
    std::vector<std::vector<Elem>> cols(n);
    std::vector<std::vector<std::int64_t>> wcount(n, std::vector<std::int64_t>(n + 1, 0));
    std::vector<char> zero(n, 1), w1(n, 0);
    c.for_each_codeword(
        [&](const Vec& v) {
            const int w = v.weight();
            for (int j = 0; j < n; ++j) {
                const Elem e = v.get(j);
                cols[j].push_back(e);
                if (e) {
                    zero[j] = 0;
                    ++wcount[j][w];
                    if (w == 1) w1[j] = 1;
                }
            }
        },
        budget);
    std::map<std::vector<Elem>, int> proj;
    std::vector<std::vector<Elem>> norm(n);
    for (int j = 0; j < n; ++j) {
        Elem lead = 0;
        for (Elem e : cols[j])
            if (e) { lead = e; break; }
        norm[j] = cols[j];
        if (lead) {
            const Elem s = f.inv(lead);
            for (auto& e : norm[j]) e = f.mul(s, e);
        }
        ++proj[norm[j]];
    }
    std::map<std::vector<std::int64_t>, std::vector<int>> by_key;
    for (int j = 0; j < n; ++j) {
        std::vector<std::int64_t> key;
        key.push_back(zero[j] ? 2 : (w1[j] ? 1 : 0));
        for (int w = 1; w <= n; ++w) key.push_back(wcount[j][w]);
        key.push_back(-proj[norm[j]]);
        by_key[std::move(key)].push_back(j);
    }
    part.labels.assign(n, 0);
    for (auto& [key, cell] : by_key) {
        for (int j : cell) part.labels[j] = static_cast<int>(part.cells.size());
        part.cells.push_back(cell);
    }
    return part;
}

// Special orbit: in column mode the all-zero orbit takes precedence (codes
// with zero columns descend from dropping one of them); in row mode the
// first canonically ordered orbit away from O_a and O_b, when one exists.
inline std::optional<std::vector<int>> special_orbit(const CanonicalResult& res, Mode mode) {
    if (mode == Mode::column && !res.o_a.empty()) return res.o_a;
    if (res.first_regular_orbit < 0) return std::nullopt;
    return res.orbits[res.first_regular_orbit];
}

// True iff the grown coordinate (0-based; the last one by construction)
// lies in the special orbit of the child.
inline bool parent_test(const CanonicalResult& child, int added, Mode mode) {
    const auto so = special_orbit(child, mode);
    if (!so) return false;
    return std::find(so->begin(), so->end(), added) != so->end();
}

std::pair<CanonicalResult, CanonicalResult> dual_consistent_canonicalize(const LinearCode&,
                                                                         std::uint64_t);

// Engine entry point: canonicalize through whichever of the code and its
// dual has fewer codewords; the transported result is a canonical map too,
// and all codes of one level share the choice.
inline CanonicalResult canonicalize_smaller(const LinearCode& c,
                                            std::uint64_t budget = kDefaultEnumBudget) {
    if (2 * c.k() <= c.n()) return canonicalize(c, budget);
    return dual_consistent_canonicalize(c, budget).first;
}

// Canonicalizes the side with the smaller dimension and transports the map,
// generators and orbit data to the other side, so that the dual of the
// canonical form is the canonical form of the dual.
inline std::pair<CanonicalResult, CanonicalResult> dual_consistent_canonicalize(
    const LinearCode& c, std::uint64_t budget = kDefaultEnumBudget) {
    const LinearCode d = c.dual();
    const bool primal_small = c.k() <= d.k();
    const CanonicalResult base = canonicalize(primal_small ? c : d, budget);

    CanonicalResult other;
    other.code = primal_small ? d : c;
    {
        Mat dual_gen = base.rho.dual().gen();
        dual_gen.rref();
        other.rho = dual_gen.rows ? LinearCode::from_matrix(std::move(dual_gen))
                                  : LinearCode::zero(c.field(), c.n());
    }
    other.signature.push_back(static_cast<Elem>(c.field().q));
    other.signature.push_back(static_cast<Elem>(other.rho.n()));
    other.signature.push_back(static_cast<Elem>(other.rho.k()));
    for (int i = 0; i < other.rho.k(); ++i)
        for (int j = 0; j < other.rho.n(); ++j)
            other.signature.push_back(other.rho.gen().at(i, j));
    other.phi = dualize_aut(base.phi);
    for (const auto& g : base.aut) other.aut.push_back(dualize_aut(g));
    other.orbits = base.orbits;
    other.o_a = base.o_b;  // zero coordinates of one side support weight-1 words of the other
    other.o_b = base.o_a;
    other.first_regular_orbit = base.first_regular_orbit;

    if (primal_small) return {base, other};
    return {other, base};
}

}  // namespace canaug

#endif
