// The two generation engines: canonical augmentation column by column
// (starting from the identity code) and row by row (starting from the empty
// code), both emitting exactly one representative per equivalence class.
//
// Children of a node come from one extension vector per orbit of the induced
// automorphism action. For small extension spaces the orbits are closed over
// an explicit table; for large ones candidates are enumerated up to the
// parent's free symmetries (multiset patterns over equal-column classes,
// pruned by weight windows) and the children are deduplicated by canonical
// form, which by the orbit characterization of passing children is the same
// partition.

#ifndef CANAUG_AUGMENT_HPP
#define CANAUG_AUGMENT_HPP

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <set>
#include <thread>

#include "canon.hpp"

namespace canaug {

struct RunContext {
    int q = 2;
    int n = 0;
    int k = 0;
    Mode mode = Mode::column;
    ConstraintSet constraints;
    std::vector<LinearCode> seeds;
    int jobs = 1;
    std::uint64_t enum_budget = kDefaultEnumBudget;
    std::uint64_t orbit_table_budget = std::uint64_t{1} << 20;
};

struct RunStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t children_generated = 0;   // candidates surviving the cheap filters
    std::uint64_t parent_test_pass = 0;
    std::uint64_t parent_test_fail = 0;
    std::uint64_t canon_calls = 0;
    std::uint64_t duplicate_children = 0;   // removed by in-node canonical dedup
    std::uint64_t duplicate_finals = 0;     // cross-parent collisions (expect 0)
    std::vector<std::uint64_t> per_level;   // column: by length; row: by dimension
};

struct RunResult {
    std::vector<LinearCode> codes;               // canonical representatives, sorted
    std::vector<std::vector<Elem>> signatures;   // parallel to codes
    RunStats stats;
    std::vector<std::string> warnings;
};

namespace detail {

struct Node {
    LinearCode code;
    CanonicalResult canon;
    int level = 0;  // column: length; row: dimension
};

class Engine {
  public:
    Engine(const RunContext& ctx) : ctx_(ctx), f_(field_make(ctx.q)) {
        per_level_.assign(std::max(ctx.n, ctx.k) + 1, 0);
    }

    RunResult run() {
        RunResult out;
        out.warnings =
            validate_constraints(ctx_.q, ctx_.n, ctx_.k, ctx_.mode, ctx_.constraints);
        if (ctx_.k == ctx_.n) {
            // the only [n, n] code is the full space
            const LinearCode full = LinearCode::from_matrix(Mat::identity(f_, ctx_.n));
            if (check_final(full, ctx_.constraints, ctx_.enum_budget)) {
                ++canon_calls_;
                bump_level(ctx_.mode == Mode::column ? ctx_.n : ctx_.k);
                emit(canonicalize_smaller(full, ctx_.enum_budget));
            }
            return collect(std::move(out));
        }

        std::vector<LinearCode> roots = make_roots(out.warnings);
        for (auto& r : roots) {
            const int level = ctx_.mode == Mode::column ? r.n() : r.k();
            CanonicalResult res = canonicalize_smaller(r, ctx_.enum_budget);
            ++canon_calls_;
            if (done_level(level)) {
                if (check_final(r, ctx_.constraints, ctx_.enum_budget)) {
                    bump_level(level);
                    emit(res);
                }
            } else {
                bump_level(level);
                std::lock_guard<std::mutex> lk(mu_);
                stack_.push_back(Node{std::move(r), std::move(res), level});
            }
        }

        const int jobs = std::max(1, ctx_.jobs);
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (int t = 0; t < jobs; ++t) pool.emplace_back([this] { worker(); });
            for (auto& th : pool) th.join();
        }
        return collect(std::move(out));
    }

  private:
    // ---- roots ------------------------------------------------------------

    std::vector<LinearCode> make_roots(std::vector<std::string>& warnings) {
        std::vector<LinearCode> roots;
        if (ctx_.seeds.empty()) {
            if (ctx_.mode == Mode::column)
                roots.push_back(LinearCode::from_matrix(Mat::identity(f_, ctx_.k)));
            else
                roots.push_back(LinearCode::zero(f_, ctx_.n - ctx_.k));
            return roots;
        }
        for (const auto& seed : ctx_.seeds) {
            if (seed.field().q != ctx_.q)
                throw std::invalid_argument("seeds: field mismatch");
            if (ctx_.mode == Mode::column) {
                if (seed.k() != ctx_.k || seed.n() > ctx_.n || seed.n() != ctx_.seeds[0].n())
                    throw std::invalid_argument(
                        "seeds: column mode needs [n', k] codes of one length with n' <= n");
                auto [sys, src] = seed.systematic_form();
                LinearCode c = LinearCode::from_matrix(std::move(sys));
                if (!check_step(c, ctx_.n, ctx_.k, ctx_.mode, ctx_.constraints, ctx_.enum_budget))
                    throw std::invalid_argument("seeds: a seed fails its level constraints");
                roots.push_back(std::move(c));
            } else {
                if (seed.n() - seed.k() != ctx_.n - ctx_.k || seed.k() > ctx_.k ||
                    seed.k() != ctx_.seeds[0].k())
                    throw std::invalid_argument(
                        "seeds: row mode needs [n-i, k-i] codes for one fixed i");
                LinearCode c = to_right_systematic(seed);
                if (!check_step(c, ctx_.n, ctx_.k, ctx_.mode, ctx_.constraints, ctx_.enum_budget))
                    throw std::invalid_argument("seeds: a seed fails its level constraints");
                roots.push_back(std::move(c));
            }
        }
        (void)warnings;
        return roots;
    }

    // permute columns so the generator reads (A | I_k)
    LinearCode to_right_systematic(const LinearCode& c) const {
        auto [sys, src] = c.systematic_form();  // (I_k | A)
        const int k = c.k(), n = c.n();
        Mat g(f_, k, n);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < n - k; ++j) g.at(i, j) = sys.at(i, k + j);
            g.at(i, n - k + i) = 1;
        }
        return LinearCode::from_matrix(std::move(g));
    }

    bool done_level(int level) const {
        return ctx_.mode == Mode::column ? level == ctx_.n : level == ctx_.k;
    }

    // ---- worker loop --------------------------------------------------

    void worker() {
        std::unique_lock<std::mutex> lk(mu_);
        while (true) {
            if (stack_.empty()) {
                if (active_ == 0) {
                    cv_.notify_all();
                    return;
                }
                cv_.wait(lk, [&] { return !stack_.empty() || active_ == 0; });
                continue;
            }
            Node node = std::move(stack_.back());
            stack_.pop_back();
            ++active_;
            lk.unlock();
            expand(node);
            lk.lock();
            --active_;
            if (stack_.empty() && active_ == 0)
                cv_.notify_all();
            else
                cv_.notify_one();
        }
    }

    void expand(const Node& node) {
        ++nodes_expanded_;
        std::vector<Node> children = ctx_.mode == Mode::column ? expand_column(node)
                                                               : expand_row(node);
        if (children.empty()) return;
        std::lock_guard<std::mutex> lk(mu_);
        for (auto& ch : children) stack_.push_back(std::move(ch));
        cv_.notify_all();
    }

    // ---- column mode --------------------------------------------------

    std::vector<Node> expand_column(const Node& node) {
        std::vector<Node> out;
        const LinearCode& parent = node.code;
        const int k = ctx_.k, m = parent.n();
        const int next_d = distance_schedule(ctx_.n, k, ctx_.constraints.d, m + 1 - k);
        const bool final_level = m + 1 == ctx_.n;

        // parent codeword weights by message index
        const std::uint64_t space = pow_u64(ctx_.q, k);
        std::vector<std::uint8_t> wt(space);
        {
            std::uint64_t idx = 0;
            parent.for_each_codeword(
                [&](const Vec& v) { wt[idx++] = static_cast<std::uint8_t>(v.weight()); },
                ctx_.enum_budget);
        }
        std::vector<std::vector<Elem>> digits(space, std::vector<Elem>(k));
        for (std::uint64_t i = 0; i < space; ++i) {
            std::uint64_t t = i;
            for (int d = k - 1; d >= 0; --d) {
                digits[i][d] = static_cast<Elem>(t % ctx_.q);
                t /= ctx_.q;
            }
        }

        const auto orbits = vector_orbit_reps(parent, node.canon.aut, Side::column,
                                              ctx_.orbit_table_budget);
        for (const auto& a : orbits.reps) {
            const bool zero = std::all_of(a.begin(), a.end(), [](Elem e) { return e == 0; });
            if (zero && ctx_.constraints.d_dual > 1) continue;
            // child minimum distance from the parent weights
            int child_d = kInfDistance;
            for (std::uint64_t i = 1; i < space && child_d >= next_d; ++i) {
                Elem dot = 0;
                for (int d = 0; d < k; ++d) dot = f_.add(dot, f_.mul(digits[i][d], a[d]));
                child_d = std::min(child_d, wt[i] + (dot != 0));
            }
            if (child_d < next_d) continue;

            Mat g(f_, k, m + 1);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < m; ++j) g.at(i, j) = parent.gen().at(i, j);
                g.at(i, m) = a[i];
            }
            LinearCode child = LinearCode::from_matrix(std::move(g));
            if (!child.dual_distance_at_least(ctx_.constraints.d_dual)) continue;
            ++children_generated_;
            if (final_level && !check_final(child, ctx_.constraints, ctx_.enum_budget)) continue;

            CanonicalResult res = canonicalize_smaller(child, ctx_.enum_budget);
            ++canon_calls_;
            if (!parent_test(res, m, Mode::column)) {
                ++parent_test_fail_;
                continue;
            }
            ++parent_test_pass_;
            bump_level(m + 1);
            if (final_level)
                emit(res);
            else
                out.push_back(Node{std::move(child), std::move(res), m + 1});
        }
        return out;
    }

    // ---- row mode -------------------------------------------------------

    std::vector<Node> expand_row(const Node& node) {
        std::vector<Node> out;
        const LinearCode& parent = node.code;
        const int s = parent.k(), m = ctx_.n - ctx_.k;
        const bool final_level = s + 1 == ctx_.k;
        const int dual_need = dual_schedule(ctx_.k, ctx_.constraints.d_dual, s + 1);
        const InnerForm form =
            ctx_.constraints.so == SOForm::hermitian ? InnerForm::hermitian : InnerForm::euclidean;

        // the A-part of the parent's codewords, by message index (the A rows
        // alone may be dependent; duplicates are wanted here)
        const std::uint64_t xspace = pow_u64(ctx_.q, s);
        std::vector<Vec> xa;
        xa.reserve(xspace);
        {
            std::vector<Vec> arows;
            for (int i = 0; i < s; ++i) {
                Vec v(f_, m);
                for (int j = 0; j < m; ++j) v.set(j, parent.gen().at(i, j));
                arows.push_back(std::move(v));
            }
            canaug::detail::enumerate_span(f_, arows, m,
                                           [&](const Vec& v) { xa.push_back(v); });
        }
        // identity-block contribution: the weight of the message itself
        std::vector<int> xwt(xspace, 0);
        for (std::uint64_t x = 0; x < xspace; ++x) {
            std::uint64_t t = x;
            while (t) {
                xwt[x] += t % ctx_.q != 0;
                t /= ctx_.q;
            }
        }

        std::vector<std::vector<Elem>> candidates = row_candidates(node);

        std::set<std::vector<Elem>> seen;  // canonical signatures within this node
        for (const auto& a : candidates) {
            const Vec av(f_, a);
            // every new codeword (x a + a | x 1) must clear the filters
            bool ok = true;
            Vec tmp = av;
            for (std::uint64_t x = 0; x < xspace && ok; ++x) {
                tmp = xa[x];
                tmp.add_assign(av);
                const int w = tmp.weight() + xwt[x] + 1;
                if (w < ctx_.constraints.d) ok = false;
                if (ctx_.constraints.divisor >= 2 && w % ctx_.constraints.divisor != 0) ok = false;
            }
            if (!ok) continue;
            if (ctx_.constraints.so != SOForm::none && !row_orthogonal(parent, a, form)) continue;

            Mat g(f_, s + 1, m + s + 1);
            for (int i = 0; i < s; ++i) {
                for (int j = 0; j < m; ++j) g.at(i, j) = parent.gen().at(i, j);
                g.at(i, m + i) = 1;
            }
            for (int j = 0; j < m; ++j) g.at(s, j) = a[j];
            g.at(s, m + s) = 1;
            LinearCode child = LinearCode::from_matrix(std::move(g));
            if (!child.dual_distance_at_least(dual_need)) continue;
            if (final_level && !check_final(child, ctx_.constraints, ctx_.enum_budget)) continue;
            ++children_generated_;

            CanonicalResult res = canonicalize_smaller(child, ctx_.enum_budget);
            ++canon_calls_;
            if (!parent_test(res, m + s, Mode::row)) {
                ++parent_test_fail_;
                continue;
            }
            if (!seen.insert(res.signature).second) {
                ++duplicate_children_;
                continue;
            }
            ++parent_test_pass_;
            bump_level(s + 1);
            if (final_level)
                emit(res);
            else
                out.push_back(Node{std::move(child), std::move(res), s + 1});
        }
        return out;
    }

    // new row (a | 0...0 1) orthogonal to itself and to every parent row
    bool row_orthogonal(const LinearCode& parent, const std::vector<Elem>& a,
                        InnerForm form) const {
        const int s = parent.k(), m = static_cast<int>(a.size());
        Elem self = inner_product(f_, a, a, form);
        self = f_.add(self, 1);  // the identity-block 1 against itself
        if (self != 0) return false;
        for (int i = 0; i < s; ++i) {
            const auto row = parent.gen().row(i);
            Elem acc = 0;
            for (int j = 0; j < m; ++j)
                acc = f_.add(acc, form == InnerForm::hermitian
                                      ? f_.mul(a[j], f_.frob_tab[row[j]])
                                      : f_.mul(a[j], row[j]));
            if (acc != 0) return false;
        }
        return true;
    }

    std::vector<std::vector<Elem>> row_candidates(const Node& node) {
        const LinearCode& parent = node.code;
        const int s = parent.k(), m = ctx_.n - ctx_.k;
        std::vector<std::vector<Elem>> cands;
        if (s == 0) {
            for (int w = 0; w <= m; ++w) {
                std::vector<Elem> a(m, 0);
                for (int j = m - w; j < m; ++j) a[j] = 1;
                cands.push_back(std::move(a));
            }
            return cands;
        }
        if (pow_u64(ctx_.q, m) <= ctx_.orbit_table_budget) {
            const auto orbits =
                vector_orbit_reps(parent, node.canon.aut, Side::row, ctx_.orbit_table_budget);
            return orbits.reps;
        }
        return pattern_candidates(parent);
    }

    // Candidates up to permutations of equal A-columns: one vector per
    // per-class value multiset, pruned by weight windows.
    std::vector<std::vector<Elem>> pattern_candidates(const LinearCode& parent) {
        const int s = parent.k(), m = ctx_.n - ctx_.k;
        const int q = ctx_.q;
        // group equal columns of A
        std::map<std::vector<Elem>, std::vector<int>> groups;
        for (int j = 0; j < m; ++j) {
            std::vector<Elem> col(s);
            for (int i = 0; i < s; ++i) col[i] = parent.gen().at(i, j);
            groups[std::move(col)].push_back(j);
        }
        struct Cls {
            std::vector<Elem> value;
            std::vector<int> positions;
        };
        std::vector<Cls> classes;
        for (auto& [value, positions] : groups) classes.push_back({value, positions});

        const std::uint64_t xspace = pow_u64(q, s);
        // dot[x][t] = message x applied to class t's column value
        std::vector<std::vector<Elem>> dot(xspace, std::vector<Elem>(classes.size()));
        std::vector<int> base(xspace);  // wt(x) + 1
        {
            std::vector<Elem> msg(s);
            for (std::uint64_t x = 0; x < xspace; ++x) {
                std::uint64_t t = x;
                int w = 0;
                for (int d = s - 1; d >= 0; --d) {
                    msg[d] = static_cast<Elem>(t % q);
                    w += msg[d] != 0;
                    t /= q;
                }
                base[x] = w + 1;
                for (std::size_t c = 0; c < classes.size(); ++c) {
                    Elem acc = 0;
                    for (int i = 0; i < s; ++i)
                        acc = f_.add(acc, f_.mul(msg[i], classes[c].value[i]));
                    dot[x][c] = acc;
                }
            }
        }
        std::vector<int> rem_after(classes.size() + 1, 0);
        for (int c = static_cast<int>(classes.size()) - 1; c >= 0; --c)
            rem_after[c] = rem_after[c + 1] + static_cast<int>(classes[c].positions.size());

        std::vector<std::vector<Elem>> cands;
        std::vector<int> partial(xspace, 0);  // nonzero count of (x A + a) so far
        std::vector<std::vector<int>> counts(classes.size());

        // can every new codeword still reach an admissible weight?
        auto feasible = [&](std::size_t next_class) {
            const int rem = rem_after[next_class];
            for (std::uint64_t x = 0; x < xspace; ++x) {
                const int lo = partial[x] + base[x];
                const int hi = partial[x] + rem + base[x];
                const int need = std::max(ctx_.constraints.d, lo);
                if (need > hi) return false;
                if (ctx_.constraints.divisor >= 2) {
                    const int div = ctx_.constraints.divisor;
                    if ((need + div - 1) / div * div > hi) return false;
                }
            }
            return true;
        };

        auto rec = [&](auto&& self, std::size_t c) -> void {
            if (c == classes.size()) {
                std::vector<Elem> a(m, 0);
                for (std::size_t t = 0; t < classes.size(); ++t) {
                    int pos = 0;
                    for (int sym = 0; sym < q; ++sym)
                        for (int r = 0; r < counts[t][sym]; ++r)
                            a[classes[t].positions[pos++]] = static_cast<Elem>(sym);
                }
                cands.push_back(std::move(a));
                return;
            }
            const int size = static_cast<int>(classes[c].positions.size());
            counts[c].assign(q, 0);
            // enumerate count vectors summing to the class size
            auto enumerate = [&](auto&& go, int sym, int left) -> void {
                if (sym == q - 1) {
                    counts[c][sym] = left;
                    // apply to partials
                    for (std::uint64_t x = 0; x < xspace; ++x) {
                        int zero_hits = 0;
                        for (int v = 0; v < q; ++v)
                            if (f_.add(dot[x][c], static_cast<Elem>(v)) == 0)
                                zero_hits += counts[c][v];
                        partial[x] += size - zero_hits;
                    }
                    if (feasible(c + 1)) self(self, c + 1);
                    for (std::uint64_t x = 0; x < xspace; ++x) {
                        int zero_hits = 0;
                        for (int v = 0; v < q; ++v)
                            if (f_.add(dot[x][c], static_cast<Elem>(v)) == 0)
                                zero_hits += counts[c][v];
                        partial[x] -= size - zero_hits;
                    }
                    counts[c][sym] = 0;
                    return;
                }
                for (int take = 0; take <= left; ++take) {
                    counts[c][sym] = take;
                    go(go, sym + 1, left - take);
                }
                counts[c][sym] = 0;
            };
            enumerate(enumerate, 0, size);
        };
        rec(rec, 0);
        return cands;
    }

    // ---- bookkeeping ------------------------------------------------------

    void bump_level(int level) {
        std::lock_guard<std::mutex> lk(level_mu_);
        ++per_level_[level];
    }

    void emit(const CanonicalResult& res) {
        std::lock_guard<std::mutex> lk(sink_mu_);
        if (!sink_.emplace(res.signature, res.rho).second) ++duplicate_finals_;
    }

    RunResult collect(RunResult&& out) {
        out.stats.nodes_expanded = nodes_expanded_;
        out.stats.children_generated = children_generated_;
        out.stats.parent_test_pass = parent_test_pass_;
        out.stats.parent_test_fail = parent_test_fail_;
        out.stats.canon_calls = canon_calls_;
        out.stats.duplicate_children = duplicate_children_;
        out.stats.duplicate_finals = duplicate_finals_;
        out.stats.per_level = per_level_;
        out.codes.reserve(sink_.size());
        out.signatures.reserve(sink_.size());
        for (auto& [sig, code] : sink_) {
            out.signatures.push_back(sig);
            out.codes.push_back(code);
        }
        return std::move(out);
    }

    RunContext ctx_;
    const Field& f_;

    std::mutex mu_;
    std::condition_variable cv_;
    std::vector<Node> stack_;
    int active_ = 0;

    std::mutex sink_mu_;
    std::map<std::vector<Elem>, LinearCode> sink_;

    std::mutex level_mu_;
    std::vector<std::uint64_t> per_level_;

    std::atomic<std::uint64_t> nodes_expanded_{0}, children_generated_{0}, parent_test_pass_{0},
        parent_test_fail_{0}, canon_calls_{0}, duplicate_children_{0}, duplicate_finals_{0};
};

}  // namespace detail

inline RunResult generate(const RunContext& ctx) {
    detail::Engine engine(ctx);
    return engine.run();
}

}  // namespace canaug

#endif
