#include "doctest.h"

#include <random>
#include <sstream>

#include "injwords/complex.hpp"
#include "oracles.hpp"

using namespace injwords;

namespace {

InjWord w(int n, std::initializer_list<int> letters) { return InjWord(n, letters); }

} // namespace

TEST_CASE("downward closure of small generator sets")
{
    const std::vector<InjWord> gens{w(2, {1, 2})};
    const auto c = generate_complex(gens, 2);
    CHECK(c.level_sizes() == std::vector<std::size_t>{2, 1});
    CHECK(c.cells() == std::vector<InjWord>{w(2, {1}), w(2, {2}), w(2, {1, 2})});

    const auto p3 = generate_complex(non_derangements(3), 3);
    CHECK(p3.level_sizes() == std::vector<std::size_t>{3, 6, 4});
    p3.check_invariants();
}

TEST_CASE("non-derangement complex contains every shorter word")
{
    for (int n = 2; n <= 7; ++n) {
        const auto c = generate_complex(non_derangements(n), n);
        for (int l = 1; l <= n - 1; ++l)
            REQUIRE(c.level_size(l) == falling_factorial(n, l).get_ui());
        REQUIRE(c.level_size(n) == non_derangements(n).size());
    }
}

TEST_CASE("from_cells rejects sets that are not closed")
{
    CHECK_NOTHROW(GeneratedComplex::from_cells(2, {w(2, {1}), w(2, {2}), w(2, {1, 2})}));
    CHECK_THROWS_AS(GeneratedComplex::from_cells(2, {w(2, {1}), w(2, {1, 2})}), std::invalid_argument);
}

TEST_CASE("boundary signs")
{
    const std::vector<InjWord> gens{w(2, {1, 2})};
    const auto c = generate_complex(gens, 2);
    const auto d = boundary_matrix(c, 2, RingSpec::integers());
    CHECK(d.rows() == 2);
    CHECK(d.cols() == 1);
    CHECK(d.coeff(0, 0) == -1); // row [1] from deleting position 2
    CHECK(d.coeff(1, 0) == 1);  // row [2] from deleting position 1
}

TEST_CASE("boundary of boundary vanishes on presets")
{
    for (int n = 2; n <= 6; ++n)
        for (const auto& c : {generate_complex(permutations(n), n), generate_complex(non_derangements(n), n)})
            for (int l = 3; l <= n; ++l)
                REQUIRE(is_zero(product(boundary_matrix(c, l - 1, RingSpec::integers()),
                                        boundary_matrix(c, l, RingSpec::integers()))));
}

TEST_CASE("boundary of boundary vanishes on random complexes")
{
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 100; ++trial) {
            const auto gens = oracle::random_generators(n, rng);
            const auto c = generate_complex(gens, n);
            c.check_invariants();
            for (int l = 3; l <= c.top_level(); ++l)
                REQUIRE(is_zero(product(boundary_matrix(c, l - 1, RingSpec::integers()),
                                        boundary_matrix(c, l, RingSpec::integers()))));
        }
}

TEST_CASE("Euler characteristic")
{
    CHECK(euler_characteristic(generate_complex(non_derangements(3), 3)) == 1);
    CHECK(euler_characteristic(generate_complex(permutations(3), 3)) == 3);
    const std::vector<InjWord> gens{w(2, {1, 2})};
    CHECK(euler_characteristic(generate_complex(gens, 2)) == 1);
    for (int n = 2; n <= 7; ++n) {
        const auto d = oracle::count_derangements(n);
        CHECK(euler_characteristic(generate_complex(non_derangements(n), n)) == 1);
        CHECK(euler_characteristic(generate_complex(permutations(n), n)) == 1 + (n % 2 == 1 ? d : -d));
    }
}

TEST_CASE("coface lists")
{
    const auto p3 = generate_complex(non_derangements(3), 3);
    const auto c31 = coface_list(p3, w(3, {3, 1}));
    REQUIRE(c31.size() == 1);
    CHECK(c31[0].word == w(3, {3, 2, 1}));
    CHECK(c31[0].position == 2);
    CHECK(coface_list(p3, w(3, {1, 3})).size() == 3);
    CHECK(p3.coface_count(w(3, {1, 3})) == 3);

    const auto s3 = generate_complex(permutations(3), 3);
    const auto c1 = coface_list(s3, w(3, {1}));
    CHECK(c1.size() == 4);
    for (const auto& cf : c1) CHECK(delete_at(cf.word, cf.position) == w(3, {1}));
}

TEST_CASE("coordinate export")
{
    const auto c = generate_complex(non_derangements(3), 3);
    std::ostringstream out;
    write_coordinates(out, boundary_matrix(c, 3, RingSpec::prime_field(2)), 3);
    std::istringstream in(out.str());
    int level = 0;
    std::size_t rows = 0, cols = 0;
    std::string ring;
    in >> level >> rows >> cols >> ring;
    CHECK(level == 3);
    CHECK(rows == 6);
    CHECK(cols == 4);
    CHECK(ring == "fp:2");
    std::size_t entries = 0;
    for (long r, col, v; in >> r >> col >> v; ++entries) {
        CHECK(r >= 1);
        CHECK(col >= 1);
        CHECK(v == 1);
    }
    CHECK(entries == 12);

    std::ostringstream legend;
    write_legend(legend, c.level(1));
    CHECK(legend.str() == "[1]\n[2]\n[3]\n");
}
