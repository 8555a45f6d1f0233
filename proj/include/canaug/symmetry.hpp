// The semimonomial equivalence group: coordinate permutation + nonzero
// column scalars + field automorphism, its action on vectors and codes, the
// induced linear actions on message/extension spaces, and orbit closures.
//
// Action convention (fixed project-wide, destination-indexed scalars):
//   (phi(v))_j = alpha(scalars[j] * v[perm^{-1}(j)])

#ifndef CANAUG_SYMMETRY_HPP
#define CANAUG_SYMMETRY_HPP

#include <algorithm>
#include <cstdint>
#include <random>

#include "code.hpp"

namespace canaug {

struct SemimonomialMap {
    const Field* f = nullptr;
    int n = 0;
    std::vector<std::uint16_t> perm;  // perm[i] = destination of source coordinate i
    std::vector<Elem> scalars;        // indexed by destination coordinate
    int auto_idx = 0;

    static SemimonomialMap identity(const Field& field, int n) {
        SemimonomialMap m;
        m.f = &field;
        m.n = n;
        m.perm.resize(n);
        for (int i = 0; i < n; ++i) m.perm[i] = static_cast<std::uint16_t>(i);
        m.scalars.assign(n, 1);
        return m;
    }

    bool is_identity() const {
        if (auto_idx != 0) return false;
        for (int i = 0; i < n; ++i)
            if (perm[i] != i || scalars[i] != 1) return false;
        return true;
    }

    std::vector<Elem> apply(std::span<const Elem> v) const {
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("semimonomial map: length mismatch");
        std::vector<Elem> out(n);
        for (int i = 0; i < n; ++i) {
            const int j = perm[i];
            out[j] = f->apply_automorphism(f->mul(scalars[j], v[i]), auto_idx);
        }
        return out;
    }

    bool operator==(const SemimonomialMap& o) const {
        return n == o.n && auto_idx == o.auto_idx && perm == o.perm && scalars == o.scalars;
    }
};

// map_apply(map_compose(a, b), v) == a.apply(b.apply(v))
inline SemimonomialMap map_compose(const SemimonomialMap& a, const SemimonomialMap& b) {
    if (a.n != b.n || a.f->q != b.f->q)
        throw std::invalid_argument("map_compose: mismatched maps");
    const Field& f = *a.f;
    SemimonomialMap c = SemimonomialMap::identity(f, a.n);
    c.auto_idx = (a.auto_idx + b.auto_idx) % f.automorphism_count;
    const int b_inv = (f.automorphism_count - b.auto_idx) % f.automorphism_count;
    for (int i = 0; i < a.n; ++i) c.perm[i] = a.perm[b.perm[i]];
    for (int i = 0; i < a.n; ++i) {
        const int mid = b.perm[i];          // position after b
        const int j = a.perm[mid];          // final position
        c.scalars[j] = f.mul(f.apply_automorphism(a.scalars[j], b_inv), b.scalars[mid]);
    }
    return c;
}

inline SemimonomialMap map_invert(const SemimonomialMap& a) {
    const Field& f = *a.f;
    SemimonomialMap inv = SemimonomialMap::identity(f, a.n);
    inv.auto_idx = (f.automorphism_count - a.auto_idx) % f.automorphism_count;
    for (int i = 0; i < a.n; ++i) inv.perm[a.perm[i]] = static_cast<std::uint16_t>(i);
    for (int i = 0; i < a.n; ++i) {
        const int j = a.perm[i];  // inv sends j back to i
        inv.scalars[i] = f.apply_automorphism(f.inv(a.scalars[j]), a.auto_idx);
    }
    return inv;
}

inline LinearCode map_apply_code(const SemimonomialMap& m, const LinearCode& c) {
    Mat g(c.field(), c.k(), c.n());
    for (int r = 0; r < c.k(); ++r) {
        const auto row = m.apply(c.gen().row(r));
        for (int j = 0; j < c.n(); ++j) g.at(r, j) = row[j];
    }
    return LinearCode::from_matrix(std::move(g));
}

// Automorphisms of the dual code: same permutation and automorphism, scalars
// inverted elementwise.
inline SemimonomialMap dualize_aut(const SemimonomialMap& a) {
    SemimonomialMap d = a;
    for (int j = 0; j < a.n; ++j) d.scalars[j] = a.f->inv(a.scalars[j]);
    return d;
}

inline SemimonomialMap random_map(const Field& f, int n, std::mt19937_64& rng) {
    SemimonomialMap m = SemimonomialMap::identity(f, n);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % (i + 1));
        std::swap(m.perm[i], m.perm[j]);
    }
    for (int j = 0; j < n; ++j)
        m.scalars[j] = static_cast<Elem>(1 + rng() % (f.q - 1));
    m.auto_idx = static_cast<int>(rng() % f.automorphism_count);
    return m;
}

struct AutGenerators {
    LinearCode code;
    std::vector<SemimonomialMap> gens;
};

// ---------------------------------------------------------------------------
// Induced action on message space: G * phi = A_phi * G for an automorphism phi
// of the code generated by G; acts on vectors by x -> (A x^T)^(alpha^-1).

struct InducedMap {
    Mat A;
    int auto_idx = 0;

    std::vector<Elem> apply(std::span<const Elem> x) const {
        const Field& f = *A.f;
        const int inv_auto = (f.automorphism_count - auto_idx) % f.automorphism_count;
        std::vector<Elem> y(A.rows, 0);
        for (int i = 0; i < A.rows; ++i) {
            Elem acc = 0;
            for (int j = 0; j < A.cols; ++j) acc = f.add(acc, f.mul(A.at(i, j), x[j]));
            y[i] = f.apply_automorphism(acc, inv_auto);
        }
        return y;
    }
};

inline InducedMap induced_action(const SemimonomialMap& phi, const Mat& G) {
    const Field& f = *G.f;
    const int k = G.rows, n = G.cols;
    // reduce G while tracking the row operations, so solutions come out in
    // terms of G's own rows rather than the reduced basis
    Mat aug(f, k, n + k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = G.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const auto pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != k || pivots.back() >= n)
        throw std::invalid_argument("induced_action: generator matrix is rank deficient");
    InducedMap im;
    im.A = Mat(f, k, k);
    im.auto_idx = phi.auto_idx;
    for (int i = 0; i < k; ++i) {
        const auto img = phi.apply(G.row(i));
        std::vector<Elem> residue(img.begin(), img.end());
        std::vector<Elem> x(k, 0);
        for (int r = 0; r < k; ++r) {
            const Elem c = residue[pivots[r]];
            if (!c) continue;
            for (int j = 0; j < n; ++j) residue[j] = f.sub(residue[j], f.mul(c, aug.at(r, j)));
            for (int j = 0; j < k; ++j) x[j] = f.add(x[j], f.mul(c, aug.at(r, n + j)));
        }
        for (Elem v : residue)
            if (v) throw std::invalid_argument("induced_action: map does not stabilize the code");
        for (int j = 0; j < k; ++j) im.A.at(i, j) = x[j];
    }
    return im;
}

// ---------------------------------------------------------------------------
// Coordinate orbits of a generator set (orbit closure of the permutation parts).

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace detail

inline std::vector<std::vector<int>> coordinate_orbits(int n,
                                                       std::span<const SemimonomialMap> gens) {
    detail::UnionFind uf(n);
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i) uf.unite(i, g.perm[i]);
    std::vector<std::vector<int>> cells(n);
    for (int i = 0; i < n; ++i) cells[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& c : cells)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

// ---------------------------------------------------------------------------
// Generator bookkeeping via a Sims filter on the faithful action on scaled
// coordinates (j, c): phi sends c*e_j to alpha(scalars[perm[j]]*c)*e_perm[j].
// Keeps the generated group intact while storing O(p^2) maps at most.

class GenSet {
  public:
    GenSet() = default;
    GenSet(const Field& f, int n) : f_(&f), n_(n), points_(n * (f.q - 1)) {
        table_.assign(points_ * points_, -1);
    }

    int point_count() const { return points_; }

    std::vector<std::uint16_t> point_perm(const SemimonomialMap& m) const {
        std::vector<std::uint16_t> p(points_);
        for (int j = 0; j < n_; ++j)
            for (int c = 1; c < f_->q; ++c) {
                const int dst = m.perm[j];
                const Elem img = f_->apply_automorphism(f_->mul(m.scalars[dst], static_cast<Elem>(c)),
                                                        m.auto_idx);
                p[point(j, static_cast<Elem>(c))] = static_cast<std::uint16_t>(point(dst, img));
            }
        return p;
    }

    // Sift a map into the filter; returns true when it was stored. The
    // generated group always equals the group generated by everything added.
    bool add(const SemimonomialMap& m) {
        SemimonomialMap g = m;
        std::vector<std::uint16_t> gp = point_perm(g);
        for (int b = 0; b < points_; ++b) {
            if (gp[b] == b) continue;
            const int slot = b * points_ + gp[b];
            if (table_[slot] < 0) {
                table_[slot] = static_cast<int>(gens_.size());
                gens_.push_back(g);
                gen_points_.push_back(std::move(gp));
                return true;
            }
            const auto& h = gens_[table_[slot]];
            g = map_compose(map_invert(h), g);
            gp = point_perm(g);
        }
        return false;
    }

    const std::vector<SemimonomialMap>& gens() const { return gens_; }

  private:
    int point(int j, Elem c) const { return j * (f_->q - 1) + (c - 1); }

    const Field* f_ = nullptr;
    int n_ = 0;
    int points_ = 0;
    std::vector<int> table_;
    std::vector<SemimonomialMap> gens_;
    std::vector<std::vector<std::uint16_t>> gen_points_;
};

// ---------------------------------------------------------------------------
// Orbits of the induced action on a full vector space F_q^dim, dim small
// enough for an explicit table. Vectors are indexed by their base-q value,
// coordinate 0 most significant, so index order is lexicographic order.

enum class Side { column, row };

struct VectorOrbits {
    int q = 0, dim = 0;
    std::vector<std::int32_t> orbit_of;      // size q^dim
    std::vector<std::vector<Elem>> reps;     // lexicographically smallest, per orbit
};

namespace detail {

// Plane-packed partial-image tables for one induced map: image(x) is
// assembled from two halves with a digitwise field addition, then the
// inverse automorphism.
struct InducedTables {
    int dim = 0, dh = 0, dl = 0, q = 0, inv_auto = 0;
    std::vector<std::uint32_t> hi_lo, hi_hi, lo_lo, lo_hi;  // planes per half index

    static std::uint64_t pack_planes(std::span<const Elem> v) {
        std::uint64_t lo = 0, hi = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            lo |= static_cast<std::uint64_t>(v[i] & 1) << i;
            hi |= static_cast<std::uint64_t>((v[i] >> 1) & 1) << i;
        }
        return lo | (hi << 32);
    }

    InducedTables(const InducedMap& m, std::uint64_t /*space*/) {
        const Field& f = *m.A.f;
        q = f.q;
        dim = m.A.rows;
        dh = dim / 2;
        dl = dim - dh;
        inv_auto = (f.automorphism_count - m.auto_idx) % f.automorphism_count;
        const std::uint64_t nh = pow_u64(q, dh), nl = pow_u64(q, dl);
        hi_lo.resize(nh);
        hi_hi.resize(nh);
        lo_lo.resize(nl);
        lo_hi.resize(nl);
        std::vector<Elem> x(dim, 0), img(dim);
        auto fill = [&](std::uint64_t count, int offset, int len, std::vector<std::uint32_t>& plo,
                        std::vector<std::uint32_t>& phi) {
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::uint64_t t = idx;
                std::fill(x.begin(), x.end(), 0);
                for (int i = len - 1; i >= 0; --i) {
                    x[offset + i] = static_cast<Elem>(t % q);
                    t /= q;
                }
                for (int r = 0; r < dim; ++r) {
                    Elem acc = 0;
                    for (int c = 0; c < len; ++c)
                        acc = f.add(acc, f.mul(m.A.at(r, offset + c), x[offset + c]));
                    img[r] = acc;
                }
                const std::uint64_t packed = pack_planes(img);
                plo[idx] = static_cast<std::uint32_t>(packed & 0xffffffffu);
                phi[idx] = static_cast<std::uint32_t>(packed >> 32);
            }
        };
        fill(nh, 0, dh, hi_lo, hi_hi);
        fill(nl, dh, dl, lo_lo, lo_hi);
    }

    // idx -> image idx, both base-q codes
    std::uint64_t apply(std::uint64_t idx, std::uint64_t nl) const {
        const std::uint64_t h = idx / nl, l = idx % nl;
        std::uint32_t al = hi_lo[h], ah = hi_hi[h];
        const std::uint32_t bl = lo_lo[l], bh = lo_hi[l];
        if (q == 2) {
            al ^= bl;
        } else if (q == 4) {
            al ^= bl;
            ah ^= bh;
            if (inv_auto) al ^= ah;  // Frobenius
        } else {
            const std::uint32_t rl = (al & ~bl & ~bh) | (~al & ~ah & bl) | (ah & bh);
            const std::uint32_t rh = (ah & ~bl & ~bh) | (~al & ~ah & bh) | (al & bl);
            al = rl;
            ah = rh;
        }
        std::uint64_t out = 0;
        for (int i = 0; i < dim; ++i)
            out = out * q + (((al >> i) & 1) | (((ah >> i) & 1) << 1));
        return out;
    }
};

}  // namespace detail

// Orbit closure of the induced maps of `gens` over the whole space. For
// side == column the space is F_q^k acted on through G itself; for side ==
// row the space is F_q^(n-k) acted on through the dual generator
// (I_{n-k} | -A^T) of a code given as (A | I_k), with dualized maps.
inline VectorOrbits vector_orbit_reps(const LinearCode& code,
                                      std::span<const SemimonomialMap> gens, Side side,
                                      std::uint64_t budget = kDefaultEnumBudget) {
    const Field& f = code.field();
    const int q = f.q;
    const int dim = side == Side::column ? code.k() : code.n() - code.k();
    if (dim > 32) throw BudgetError("vector_orbit_reps: dimension too large");
    const std::uint64_t space = pow_u64(q, dim);
    if (space > budget)
        throw BudgetError("vector_orbit_reps: space size " + std::to_string(space) +
                          " over budget");

    Mat action_gen;
    if (side == Side::column) {
        action_gen = code.gen();
    } else {
        // expect (A | I_k); build (I_{n-k} | -A^T)
        const int k = code.k(), m = code.n() - code.k();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (code.gen().at(i, m + j) != (i == j ? 1 : 0))
                    throw std::invalid_argument("vector_orbit_reps: row side needs (A | I_k) form");
        action_gen = Mat(f, m, code.n());
        for (int r = 0; r < m; ++r) {
            action_gen.at(r, r) = 1;
            for (int c = 0; c < k; ++c) action_gen.at(r, m + c) = f.neg(code.gen().at(c, r));
        }
    }

    std::vector<detail::InducedTables> tabs;
    tabs.reserve(gens.size());
    for (const auto& g : gens) {
        const SemimonomialMap use = side == Side::column ? g : dualize_aut(g);
        tabs.emplace_back(induced_action(use, action_gen), space);
    }

    VectorOrbits out;
    out.q = q;
    out.dim = dim;
    out.orbit_of.assign(space, -1);
    const std::uint64_t nl = pow_u64(q, dim - dim / 2);
    std::vector<std::uint64_t> queue;
    for (std::uint64_t start = 0; start < space; ++start) {
        if (out.orbit_of[start] >= 0) continue;
        const auto id = static_cast<std::int32_t>(out.reps.size());
        std::vector<Elem> rep(dim);
        std::uint64_t t = start;
        for (int i = dim - 1; i >= 0; --i) {
            rep[i] = static_cast<Elem>(t % q);
            t /= q;
        }
        out.reps.push_back(std::move(rep));
        out.orbit_of[start] = id;
        queue.assign(1, start);
        while (!queue.empty()) {
            const std::uint64_t cur = queue.back();
            queue.pop_back();
            for (const auto& tab : tabs) {
                const std::uint64_t img = tab.apply(cur, nl);
                if (out.orbit_of[img] < 0) {
                    out.orbit_of[img] = id;
                    queue.push_back(img);
                }
            }
        }
    }
    return out;
}

}  // namespace canaug

#endif
