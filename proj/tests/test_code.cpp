#include <catch2/catch_amalgamated.hpp>

#include "canaug/code.hpp"
#include "test_util.hpp"

using namespace canaug;
using testutil::code_from_strings;
using testutil::example_code;
using testutil::random_code;
using testutil::sorted_codewords;

TEST_CASE("construction accepts full-rank input and names deficient ranks") {
    CHECK_NOTHROW(example_code());
    CHECK_THROWS_WITH(code_from_strings(2, {"11", "11"}), Catch::Matchers::ContainsSubstring("1"));
    const LinearCode triv = code_from_strings(3, {"10", "01"});
    CHECK(triv.k() == 2);
    CHECK(triv.min_distance() == 1);
}

TEST_CASE("systematic form") {
    SECTION("already systematic") {
        auto [sys, src] = example_code().systematic_form();
        for (int j = 0; j < 4; ++j) CHECK(src[j] == j);
        CHECK(sys.at(0, 2) == 1);
        CHECK(sys.at(0, 3) == 1);
        CHECK(sys.at(1, 2) == 0);
        CHECK(sys.at(1, 3) == 1);
    }
    SECTION("identity stays put") {
        auto [sys, src] = code_from_strings(2, {"100", "010", "001"}).systematic_form();
        for (int j = 0; j < 3; ++j) CHECK(src[j] == j);
    }
    SECTION("pivots move to the front") {
        auto [sys, src] = code_from_strings(2, {"011", "001"}).systematic_form();
        CHECK(src == std::vector<int>{1, 2, 0});
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(sys.at(i, j) == (i == j ? 1 : 0));
    }
}

TEST_CASE("codeword enumeration") {
    SECTION("running example") {
        const auto words = sorted_codewords(example_code());
        const std::vector<std::vector<Elem>> expect = {
            {0, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 0}};
        CHECK(words == expect);
    }
    SECTION("identity code") {
        CHECK(sorted_codewords(code_from_strings(2, {"10", "01"})).size() == 4);
    }
    SECTION("ternary scalar multiples") {
        const auto words = sorted_codewords(code_from_strings(3, {"12"}));
        const std::vector<std::vector<Elem>> expect = {{0, 0}, {1, 2}, {2, 1}};
        CHECK(words == expect);
    }
    SECTION("budget refusal") {
        std::mt19937_64 rng(1);
        const LinearCode c = random_code(2, 8, 6, rng);
        CHECK_THROWS_AS(c.codewords(/*budget=*/32), BudgetError);
    }
}

TEST_CASE("weight distribution") {
    const LinearCode ex = example_code();
    const auto& wd = ex.weight_distribution();
    CHECK(wd.counts[0] == 1);
    CHECK(wd.counts[2] == 1);
    CHECK(wd.counts[3] == 2);

    const LinearCode id3 = code_from_strings(2, {"100", "010", "001"});
    CHECK(id3.weight_distribution().counts == std::vector<std::uint64_t>{1, 3, 3, 1});

    const LinearCode t12 = code_from_strings(3, {"12"});
    CHECK(t12.weight_distribution().counts[0] == 1);
    CHECK(t12.weight_distribution().counts[2] == 2);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        const int q = std::array{2, 3, 4}[rng() % 3];
        const int n = 2 + static_cast<int>(rng() % 7);
        const int k = 1 + static_cast<int>(rng() % std::min(n, 4));
        const LinearCode c = random_code(q, n, k, rng);
        const auto& wd = c.weight_distribution();
        CHECK(wd.counts[0] == 1);
        std::uint64_t total = 0;
        for (auto v : wd.counts) total += v;
        CHECK(total == c.size());
    }
}

TEST_CASE("minimum distance") {
    CHECK(example_code().min_distance() == 2);
    CHECK(code_from_strings(2, {"100", "010", "001"}).min_distance() == 1);
    // frozen from enumerating the four / eight codewords by hand
    CHECK(code_from_strings(2, {"1011", "0111"}).min_distance() == 2);
    CHECK(code_from_strings(2, {"10110", "01011"}).min_distance() == 3);
}

TEST_CASE("dual codes") {
    SECTION("running example") {
        const LinearCode d = example_code().dual();
        CHECK(d.same_code(code_from_strings(2, {"1010", "1101"})));
        // every pair of words across C and its dual is orthogonal
        const Field& f = field_make(2);
        for (const auto& u : sorted_codewords(example_code()))
            for (const auto& v : sorted_codewords(d)) CHECK(inner_product(f, u, v) == 0);
    }
    SECTION("self-dual repetition code") {
        const LinearCode c = code_from_strings(2, {"11"});
        CHECK(c.dual().same_code(c));
    }
    SECTION("ternary") {
        CHECK(code_from_strings(3, {"11"}).dual().same_code(code_from_strings(3, {"12"})));
    }
    SECTION("dual of dual is the code") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 40; ++t) {
            const int q = std::array{2, 3, 4}[rng() % 3];
            const int n = 2 + static_cast<int>(rng() % 8);
            const int k = 1 + static_cast<int>(rng() % n);
            if (k >= n) continue;
            const LinearCode c = random_code(q, n, k, rng);
            CHECK(c.dual().dual().same_code(c));
        }
    }
    SECTION("full space and zero code are dual markers") {
        const LinearCode full = code_from_strings(2, {"10", "01"});
        CHECK(full.dual().k() == 0);
        CHECK(full.dual().dual().same_code(full));
    }
}

TEST_CASE("bounded dual distance test") {
    CHECK(code_from_strings(2, {"10", "01"}).dual_distance_at_least(2));  // full space
    CHECK_FALSE(code_from_strings(2, {"100", "010"}).dual_distance_at_least(2));  // zero column
    CHECK(example_code().dual_distance_at_least(2));
    CHECK_FALSE(example_code().dual_distance_at_least(3));  // two equal columns
    CHECK(example_code().dual_distance_at_least(1));

    SECTION("agrees with the dual minimum distance") {
        std::mt19937_64 rng(23);
        for (int t = 0; t < 60; ++t) {
            const int q = std::array{2, 3, 4}[rng() % 3];
            const int n = 2 + static_cast<int>(rng() % 9);
            const int k = 1 + static_cast<int>(rng() % n);
            const LinearCode c = random_code(q, n, k, rng);
            const int dd = k == n ? kInfDistance : c.dual().min_distance();
            for (int th = 1; th <= 5; ++th)
                CHECK(c.dual_distance_at_least(th) == (dd == kInfDistance || dd >= th));
        }
    }
}

TEST_CASE("puncturing and shortening") {
    SECTION("puncture the running example at the last coordinate") {
        const LinearCode p = example_code().puncture(3);
        CHECK(p.k() == 2);
        CHECK(p.n() == 3);
        const auto words = sorted_codewords(p);
        const std::vector<std::vector<Elem>> expect = {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}};
        CHECK(words == expect);
    }
    SECTION("shorten a repetition code to the zero code") {
        const LinearCode s = code_from_strings(2, {"11"}).shorten(0);
        CHECK(s.k() == 0);
        CHECK(s.n() == 1);
    }
    SECTION("shortening keeps divisibility") {
        const LinearCode c = code_from_strings(2, {"11110000", "00001111"});
        REQUIRE(c.is_divisible(4));
        for (int j = 0; j < 8; ++j) {
            const LinearCode s = c.shorten(j);
            if (s.k() > 0) CHECK(s.is_divisible(4));
        }
    }
    SECTION("metric behaviour on random codes") {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 60; ++t) {
            const int q = std::array{2, 3, 4}[rng() % 3];
            const int n = 3 + static_cast<int>(rng() % 7);
            const int k = 1 + static_cast<int>(rng() % std::min(n - 1, 4));
            const LinearCode c = random_code(q, n, k, rng);
            const int j = static_cast<int>(rng() % n);
            // no weight-1 codeword supported exactly at j?
            bool wt1_at_j = false;
            c.for_each_codeword([&](const Vec& v) {
                if (v.weight() == 1 && v.get(j) != 0) wt1_at_j = true;
            });
            const LinearCode p = c.puncture(j);
            if (!wt1_at_j) {
                CHECK(p.k() == c.k());
                CHECK(p.min_distance() >= c.min_distance() - 1);
            }
            const LinearCode s = c.shorten(j);
            if (s.k() > 0) CHECK(s.min_distance() >= c.min_distance());
        }
    }
    SECTION("invalid index") {
        CHECK_THROWS_AS(example_code().puncture(4), std::invalid_argument);
        CHECK_THROWS_AS(example_code().shorten(-1), std::invalid_argument);
    }
}

TEST_CASE("self-orthogonality and divisibility") {
    const LinearCode rep4 = code_from_strings(2, {"1111"});
    CHECK(rep4.is_self_orthogonal());
    CHECK(rep4.is_divisible(4));
    CHECK_FALSE(example_code().is_self_orthogonal());
    CHECK_THROWS_AS(example_code().is_self_orthogonal(InnerForm::hermitian), std::invalid_argument);
    CHECK_THROWS_AS(rep4.is_divisible(1), std::invalid_argument);

    // the unique 9-divisible ternary [12,2] code: each projective point thrice
    const LinearCode t12 = code_from_strings(3, {"111000111111", "000111111222"});
    CHECK(t12.is_divisible(9));
    CHECK(t12.min_distance() == 9);
    CHECK(t12.dual_distance_at_least(2));

    // a quaternary hermitian check: {aa11} with a = w is hermitian self-orthogonal
    const LinearCode q4 = code_from_strings(4, {"2211"});
    CHECK(q4.is_self_orthogonal(InnerForm::hermitian));
}
