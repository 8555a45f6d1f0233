#include <catch2/catch_amalgamated.hpp>

#include "canaug/symmetry.hpp"
#include "test_util.hpp"

using namespace canaug;
using testutil::code_from_strings;
using testutil::example_code;
using testutil::random_code;
using testutil::sorted_codewords;

namespace {

SemimonomialMap transposition(const Field& f, int n, int a, int b) {
    SemimonomialMap m = SemimonomialMap::identity(f, n);
    m.perm[a] = static_cast<std::uint16_t>(b);
    m.perm[b] = static_cast<std::uint16_t>(a);
    return m;
}

// every semimonomial map stabilizing the code, by direct enumeration (tiny n)
std::vector<SemimonomialMap> all_automorphisms(const LinearCode& c) {
    const Field& f = c.field();
    const int n = c.n();
    std::vector<SemimonomialMap> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const auto words = sorted_codewords(c);
    auto in_code = [&](const std::vector<Elem>& w) {
        return std::binary_search(words.begin(), words.end(), w);
    };
    do {
        std::vector<Elem> scalars(n, 1);
        bool carry;
        do {
            for (int a = 0; a < f.automorphism_count; ++a) {
                SemimonomialMap m = SemimonomialMap::identity(f, n);
                for (int i = 0; i < n; ++i) m.perm[i] = static_cast<std::uint16_t>(perm[i]);
                m.scalars.assign(scalars.begin(), scalars.end());
                m.auto_idx = a;
                bool ok = true;
                for (const auto& w : words)
                    if (!in_code(m.apply(w))) { ok = false; break; }
                if (ok) out.push_back(std::move(m));
            }
            carry = true;
            for (int j = 0; j < n && carry; ++j) {
                if (scalars[j] < f.q - 1) { ++scalars[j]; carry = false; }
                else scalars[j] = 1;
            }
        } while (!carry);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TEST_CASE("map application") {
    const Field& f2 = field_make(2);
    const LinearCode c = example_code();

    // (13) in 1-based coordinates is an automorphism of the running example
    const auto t13 = transposition(f2, 4, 0, 2);
    CHECK(map_apply_code(t13, c).same_code(c));
    CHECK(sorted_codewords(map_apply_code(t13, c)) == sorted_codewords(c));

    const auto id = SemimonomialMap::identity(f2, 4);
    const std::vector<Elem> v = {1, 0, 1, 1};
    CHECK(id.apply(v) == v);

    const Field& f3 = field_make(3);
    SemimonomialMap m = SemimonomialMap::identity(f3, 2);
    m.scalars = {2, 1};
    const std::vector<Elem> w = {1, 1};
    CHECK(m.apply(w) == std::vector<Elem>{2, 1});

    CHECK_THROWS_AS(id.apply(w), std::invalid_argument);
}

TEST_CASE("composition and inversion") {
    SECTION("two coordinate swaps compose to the product permutation") {
        const Field& f2 = field_make(2);
        const auto t13 = transposition(f2, 4, 0, 2);
        const auto t24 = transposition(f2, 4, 1, 3);
        const auto both = map_compose(t13, t24);
        CHECK(both.perm == std::vector<std::uint16_t>{2, 3, 0, 1});
    }
    SECTION("semidirect twist, checked on every vector of GF(4)^2") {
        const Field& f4 = field_make(4);
        SemimonomialMap frob = SemimonomialMap::identity(f4, 2);
        frob.auto_idx = 1;
        SemimonomialMap sc = SemimonomialMap::identity(f4, 2);
        sc.scalars = {2, 1};
        for (const auto& [a, b] : {std::pair{frob, sc}, std::pair{sc, frob}}) {
            const auto comp = map_compose(a, b);
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y) {
                    const std::vector<Elem> v = {Elem(x), Elem(y)};
                    CHECK(comp.apply(v) == a.apply(b.apply(v)));
                }
        }
    }
    SECTION("random maps compose and invert correctly") {
        std::mt19937_64 rng(99);
        for (int t = 0; t < 200; ++t) {
            const int q = std::array{2, 3, 4}[rng() % 3];
            const Field& f = field_make(q);
            const int n = 1 + static_cast<int>(rng() % 8);
            const auto a = random_map(f, n, rng);
            const auto b = random_map(f, n, rng);
            const auto comp = map_compose(a, b);
            const auto inv = map_invert(a);
            std::vector<Elem> v(n);
            for (auto& e : v) e = static_cast<Elem>(rng() % q);
            CHECK(comp.apply(v) == a.apply(b.apply(v)));
            CHECK(inv.apply(a.apply(v)) == v);
            CHECK(map_compose(a, inv).is_identity());
            CHECK(map_compose(inv, a).is_identity());
        }
    }
}

TEST_CASE("dual automorphisms") {
    const Field& f3 = field_make(3);
    const Field& f4 = field_make(4);

    SemimonomialMap m2 = SemimonomialMap::identity(field_make(2), 3);
    CHECK(dualize_aut(m2) == m2);

    SemimonomialMap m3 = SemimonomialMap::identity(f3, 2);
    m3.scalars = {2, 1};
    CHECK(dualize_aut(m3).scalars == std::vector<Elem>{2, 1});

    SemimonomialMap m4 = SemimonomialMap::identity(f4, 2);
    m4.scalars = {2, 1};
    CHECK(dualize_aut(m4).scalars == std::vector<Elem>{3, 1});

    SECTION("dualized maps preserve orthogonality") {
        std::mt19937_64 rng(17);
        for (int t = 0; t < 100; ++t) {
            const int q = std::array{2, 3, 4}[rng() % 3];
            const Field& f = field_make(q);
            const int n = 2 + static_cast<int>(rng() % 6);
            const auto phi = random_map(f, n, rng);
            const auto phid = dualize_aut(phi);
            std::vector<Elem> x(n), y(n);
            for (auto& e : x) e = static_cast<Elem>(rng() % q);
            for (auto& e : y) e = static_cast<Elem>(rng() % q);
            const Elem ip = inner_product(f, x, y);
            const Elem ip2 = inner_product(f, phi.apply(x), phid.apply(y));
            CHECK((ip == 0) == (ip2 == 0));
        }
    }
    SECTION("automorphisms of the running example dualize to dual automorphisms") {
        const LinearCode c = example_code();
        const LinearCode d = c.dual();
        for (const auto& phi : all_automorphisms(c))
            CHECK(map_apply_code(dualize_aut(phi), d).same_code(d));
    }
}

TEST_CASE("induced action on the message space") {
    const LinearCode c = example_code();
    const Field& f2 = field_make(2);

    SECTION("identity induces the identity matrix") {
        const auto im = induced_action(SemimonomialMap::identity(f2, 4), c.gen());
        CHECK(im.A == Mat::identity(f2, 2));
    }
    SECTION("the swap (24) induces a specific GL(2,2) element") {
        const auto im = induced_action(transposition(f2, 4, 1, 3), c.gen());
        // solved by hand: phi(row1) = row1 + row2, phi(row2) = row2
        Mat expect(f2, 2, 2);
        expect.at(0, 0) = 1;
        expect.at(0, 1) = 1;
        expect.at(1, 1) = 1;
        CHECK(im.A == expect);
    }
    SECTION("non-automorphisms are rejected") {
        SemimonomialMap bad = SemimonomialMap::identity(f2, 4);
        bad.perm[2] = 3;
        bad.perm[3] = 2;  // (34) does not stabilize the example code
        CHECK_THROWS_AS(induced_action(bad, c.gen()), std::invalid_argument);
    }
    SECTION("twisted homomorphism law on automorphism pairs") {
        std::mt19937_64 rng(5);
        std::vector<LinearCode> corpus = {c, code_from_strings(3, {"1011", "0112"}),
                                          code_from_strings(4, {"1012", "0111"})};
        for (const auto& code : corpus) {
            const auto auts = all_automorphisms(code);
            REQUIRE(!auts.empty());
            const Field& f = code.field();
            for (int t = 0; t < 40; ++t) {
                const auto& p1 = auts[rng() % auts.size()];
                const auto& p2 = auts[rng() % auts.size()];
                const auto a1 = induced_action(p1, code.gen());
                const auto a2 = induced_action(p2, code.gen());
                const auto a12 = induced_action(map_compose(p1, p2), code.gen());
                // applying p2 then p1: A = (A_{p2})^{alpha1} * A_{p1}; the
                // scalars of a row combination pass through p1's automorphism
                Mat lhs = a2.A;
                if (a1.auto_idx)
                    for (auto& e : lhs.a) e = f.frob_tab[e];
                lhs = lhs * a1.A;
                CHECK(a12.A == lhs);
                CHECK(a12.auto_idx == (a1.auto_idx + a2.auto_idx) % f.automorphism_count);
            }
        }
    }
}

TEST_CASE("coordinate orbits") {
    const Field& f2 = field_make(2);
    SECTION("running example") {
        const std::vector<SemimonomialMap> gens = {transposition(f2, 4, 0, 2),
                                                   transposition(f2, 4, 1, 3)};
        const auto orbits = coordinate_orbits(4, gens);
        REQUIRE(orbits.size() == 2);
        CHECK(orbits[0] == std::vector<int>{0, 2});
        CHECK(orbits[1] == std::vector<int>{1, 3});
    }
    SECTION("transitive generators give one orbit") {
        SemimonomialMap cyc = SemimonomialMap::identity(f2, 5);
        for (int i = 0; i < 5; ++i) cyc.perm[i] = static_cast<std::uint16_t>((i + 1) % 5);
        const std::vector<SemimonomialMap> gens = {cyc};
        CHECK(coordinate_orbits(5, gens).size() == 1);
    }
    SECTION("no generators give singletons") {
        const std::vector<SemimonomialMap> gens = {SemimonomialMap::identity(f2, 4)};
        CHECK(coordinate_orbits(4, gens).size() == 4);
    }
}

TEST_CASE("vector orbits under the induced action") {
    SECTION("trivial generators leave every vector alone") {
        const LinearCode c = example_code();
        const std::vector<SemimonomialMap> gens = {SemimonomialMap::identity(c.field(), 4)};
        const auto vo = vector_orbit_reps(c, gens, Side::column);
        CHECK(vo.reps.size() == 4);
    }
    SECTION("full monomial group on the identity code yields weight classes") {
        for (int q : {2, 3, 4}) {
            const Field& f = field_make(q);
            const int k = 3;
            const LinearCode c = LinearCode::from_matrix(Mat::identity(f, k));
            std::vector<SemimonomialMap> gens;
            gens.push_back(transposition(f, k, 0, 1));
            SemimonomialMap cyc = SemimonomialMap::identity(f, k);
            for (int i = 0; i < k; ++i) cyc.perm[i] = static_cast<std::uint16_t>((i + 1) % k);
            gens.push_back(cyc);
            if (q > 2) {
                SemimonomialMap sc = SemimonomialMap::identity(f, k);
                sc.scalars[0] = 2;
                gens.push_back(sc);
            }
            if (q == 4) {
                SemimonomialMap fr = SemimonomialMap::identity(f, k);
                fr.auto_idx = 1;
                gens.push_back(fr);
            }
            const auto vo = vector_orbit_reps(c, gens, Side::column);
            REQUIRE(vo.reps.size() == static_cast<std::size_t>(k + 1));
            for (int w = 0; w <= k; ++w) {
                int nz = 0;
                for (Elem e : vo.reps[w]) nz += e != 0;
                CHECK(nz == w);  // representatives ordered by weight, lex-least each
            }
        }
    }
    SECTION("running example column orbits, closed by hand") {
        const LinearCode c = example_code();
        const Field& f2 = field_make(2);
        const std::vector<SemimonomialMap> gens = {transposition(f2, 4, 0, 2),
                                                   transposition(f2, 4, 1, 3)};
        const auto vo = vector_orbit_reps(c, gens, Side::column);
        // induced matrices are I and [[1,1],[0,1]]; orbits {00},{10},{01,11}
        CHECK(vo.reps.size() == 3);
    }
    SECTION("orbit sizes sum to the space and images stay inside their orbit") {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 20; ++t) {
            const int q = std::array{2, 3, 4}[rng() % 3];
            const int n = 3 + static_cast<int>(rng() % 4);
            const int k = 1 + static_cast<int>(rng() % 3);
            if (k >= n) continue;
            const LinearCode c = random_code(q, n, k, rng);
            const auto auts = all_automorphisms(c);
            std::vector<SemimonomialMap> gens(auts.begin(),
                                              auts.begin() + std::min<std::size_t>(auts.size(), 6));
            const auto vo = vector_orbit_reps(c, gens, Side::column);
            std::vector<std::uint64_t> sizes(vo.reps.size(), 0);
            for (auto id : vo.orbit_of) ++sizes[id];
            std::uint64_t total = 0;
            for (auto s : sizes) total += s;
            CHECK(total == pow_u64(q, k));
            for (const auto& g : gens) {
                const auto im = induced_action(g, c.gen());
                for (std::size_t r = 0; r < vo.reps.size(); ++r) {
                    const auto img = im.apply(vo.reps[r]);
                    std::uint64_t idx = 0;
                    for (Elem e : img) idx = idx * q + e;
                    CHECK(vo.orbit_of[idx] == static_cast<std::int32_t>(r));
                }
            }
        }
    }
    SECTION("row side requires (A | I_k) form") {
        const std::vector<SemimonomialMap> gens;
        CHECK_THROWS_AS(vector_orbit_reps(code_from_strings(2, {"101", "011"}), gens, Side::row),
                        std::invalid_argument);
        CHECK_NOTHROW(vector_orbit_reps(code_from_strings(2, {"110", "101"}), gens, Side::row));
    }
}

TEST_CASE("sims filter keeps the generated group") {
    const Field& f2 = field_make(2);
    GenSet gs(f2, 4);
    CHECK(gs.add(transposition(f2, 4, 0, 1)));
    CHECK_FALSE(gs.add(transposition(f2, 4, 0, 1)));  // sifts to the identity
    CHECK(gs.add(transposition(f2, 4, 1, 2)));
    CHECK(gs.add(transposition(f2, 4, 2, 3)));
    gs.add(transposition(f2, 4, 0, 2));  // redundant; the table may keep it
    // closure of the stored generators is all of S_4
    std::vector<SemimonomialMap> frontier = {SemimonomialMap::identity(f2, 4)};
    std::vector<SemimonomialMap> group = frontier;
    auto contains = [&](const SemimonomialMap& m) {
        return std::any_of(group.begin(), group.end(), [&](const auto& g) { return g == m; });
    };
    while (!frontier.empty()) {
        std::vector<SemimonomialMap> next;
        for (const auto& g : frontier)
            for (const auto& h : gs.gens()) {
                const auto prod = map_compose(g, h);
                if (!contains(prod)) {
                    group.push_back(prod);
                    next.push_back(prod);
                }
            }
        frontier = std::move(next);
    }
    CHECK(group.size() == 24);
}
