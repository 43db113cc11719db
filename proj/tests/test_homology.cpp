#include "doctest.h"

#include <random>

#include "injwords/homology.hpp"
#include "injwords/linalg.hpp"
#include "oracles.hpp"

using namespace injwords;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows, RingSpec ring)
{
    const std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
    SparseMatrix m(r, c, ring);
    for (std::size_t j = 0; j < c; ++j) {
        std::vector<SparseEntry> col;
        for (std::size_t i = 0; i < r; ++i)
            if (rows[i][j] != 0) col.push_back({static_cast<std::uint32_t>(i), rows[i][j]});
        m.set_column(j, std::move(col));
    }
    return m;
}

std::vector<mpz_class> z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("Smith normal form examples")
{
    CHECK(smith_normal_form(from_dense({{2, 0}, {0, 3}}, RingSpec::integers())) == z({1, 6}));
    CHECK(smith_normal_form(SparseMatrix(3, 4, RingSpec::integers())).empty());
    CHECK(smith_normal_form(from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, RingSpec::integers())) == z({1, 1, 1}));
    CHECK(smith_normal_form(from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, RingSpec::integers())) ==
          z({2, 6, 12}));
    CHECK_THROWS_AS(smith_normal_form(SparseMatrix(2, 2, RingSpec::rationals())), std::invalid_argument);
}

TEST_CASE("rank and nullity examples")
{
    CHECK(rank_nullity(SparseMatrix(3, 5, RingSpec::rationals()), RingSpec::rationals()) == RankNullity{0, 5});
    const std::vector<InjWord> gens{InjWord(2, {1, 2})};
    const auto p2 = generate_complex(gens, 2);
    CHECK(rank_nullity(boundary_matrix(p2, 2, RingSpec::rationals()), RingSpec::rationals()) ==
          RankNullity{1, 0});
    const auto s3 = generate_complex(permutations(3), 3);
    CHECK(rank_nullity(boundary_matrix(s3, 3, RingSpec::prime_field(2)), RingSpec::prime_field(2)).rank == 4);
    CHECK(rank_nullity(from_dense({{2, 0}, {0, 3}}, RingSpec::prime_field(2)), RingSpec::prime_field(2)).rank == 1);
    CHECK(rank_nullity(from_dense({{2, 0}, {0, 3}}, RingSpec::prime_field(3)), RingSpec::prime_field(3)).rank == 1);
    CHECK_THROWS_AS(rank_nullity(SparseMatrix(1, 1, RingSpec::integers()), RingSpec::integers()),
                    std::invalid_argument);
}

TEST_CASE("SNF agrees with a naive dense oracle on random integer matrices")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto rows = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
        const auto cols = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
        const double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
        std::bernoulli_distribution fill(density);
        std::uniform_int_distribution<int> value(-9, 9);
        std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols, 0));
        for (auto& row : a)
            for (auto& x : row)
                if (fill(rng)) x = value(rng);
        const auto m = from_dense(a, RingSpec::integers());
        const auto expected = oracle::naive_snf(oracle::dense(m), rows, cols);
        REQUIRE(smith_normal_form(m) == expected);
        REQUIRE(dense_smith_normal_form(oracle::dense(m), rows, cols) == expected);
        REQUIRE(rank_nullity(m, RingSpec::rationals()).rank == expected.size());
    }
}

TEST_CASE("SNF agrees with the oracle on boundary matrices up to 200 x 200")
{
    std::mt19937_64 rng(17);
    std::size_t compared = 0;
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            const auto c = generate_complex(oracle::random_generators(n, rng), n);
            for (int l = 2; l <= c.top_level(); ++l) {
                const auto d = boundary_matrix(c, l, RingSpec::integers());
                if (d.rows() > 200 || d.cols() > 200) continue;
                REQUIRE(smith_normal_form(d) == oracle::naive_snf(oracle::dense(d), d.rows(), d.cols()));
                ++compared;
            }
        }
    for (int n = 2; n <= 4; ++n) {
        const auto c = generate_complex(permutations(n), n);
        for (int l = 2; l <= n; ++l) {
            const auto d = boundary_matrix(c, l, RingSpec::integers());
            REQUIRE(smith_normal_form(d) == oracle::naive_snf(oracle::dense(d), d.rows(), d.cols()));
            ++compared;
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("homology examples")
{
    const auto z_ring = RingSpec::integers();
    auto betti = [&](const GeneratedComplex& c) { return homology(c, z_ring).betti; };
    CHECK(betti(generate_complex(permutations(2), 2)) == std::vector<std::int64_t>{1, 1});
    const auto s3 = homology(generate_complex(permutations(3), 3), z_ring);
    CHECK(s3.betti == std::vector<std::int64_t>{1, 0, 2});
    CHECK(s3.torsion_free());
    const auto p3 = homology(generate_complex(non_derangements(3), 3), z_ring);
    CHECK(p3.betti == std::vector<std::int64_t>{1, 0, 0});
    CHECK(p3.torsion_free());
}

TEST_CASE("integral, rational and mod-2 homology are consistent")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = generate_complex(oracle::random_generators(4, rng), 4);
        const auto hz = homology(c, RingSpec::integers());
        const auto hq = homology(c, RingSpec::rationals());
        REQUIRE(hz.betti == hq.betti);
        REQUIRE(hq.betti == oracle::rational_betti(c));
        // universal coefficients: F_2 picks up one class per even factor in H_d and H_{d-1}
        const auto h2 = homology(c, RingSpec::prime_field(2));
        for (std::size_t d = 0; d < hz.betti.size(); ++d) {
            std::int64_t even = 0;
            for (const auto& f : hz.torsion[d]) even += f % 2 == 0;
            if (d > 0)
                for (const auto& f : hz.torsion[d - 1]) even += f % 2 == 0;
            REQUIRE(h2.betti[d] == hz.betti[d] + even);
        }
    }
}

TEST_CASE("Euler-Poincare agreement on random complexes")
{
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 100; ++trial) {
            const auto c = generate_complex(oracle::random_generators(n, rng), n);
            for (const auto ring : {RingSpec::integers(), RingSpec::rationals(), RingSpec::prime_field(3)}) {
                std::int64_t alternating = 0;
                const auto h = homology(c, ring);
                for (std::size_t d = 0; d < h.betti.size(); ++d)
                    alternating += d % 2 == 0 ? h.betti[d] : -h.betti[d];
                REQUIRE(alternating == euler_characteristic(c));
            }
        }
}

TEST_CASE("wedge of spheres for the full permutation complex")
{
    for (int n = 2; n <= 6; ++n) {
        const auto h = homology(generate_complex(permutations(n), n), RingSpec::integers());
        std::vector<std::int64_t> expected(static_cast<std::size_t>(n), 0);
        expected[0] = 1;
        expected.back() += oracle::count_derangements(n);
        CHECK(h.betti == expected);
        CHECK(h.torsion_free());
    }
}

TEST_CASE("top cycle dimension")
{
    CHECK(top_cycle_dimension(generate_complex(non_derangements(3), 3), RingSpec::rationals()) == 0);
    CHECK(top_cycle_dimension(generate_complex(permutations(3), 3), RingSpec::rationals()) == 2);
    CHECK(top_cycle_dimension(generate_complex(non_derangements(4), 4), RingSpec::prime_field(2)) == 0);
    CHECK_THROWS_AS(top_cycle_dimension(generate_complex(permutations(3), 3), RingSpec::integers()),
                    std::invalid_argument);
}

TEST_CASE("homology JSON")
{
    const auto j = to_json(homology(generate_complex(permutations(3), 3), RingSpec::rationals()));
    CHECK(j.at("ring") == "q");
    CHECK(j.at("betti") == nlohmann::json::array({1, 0, 2}));
    CHECK(to_json(mpz_class("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK(to_json(mpz_class(12)) == 12);
}
