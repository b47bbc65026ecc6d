#include <catch2/catch_amalgamated.hpp>

#include "alpert/linalg.hpp"
#include "oracles.hpp"

using namespace alpert;

namespace {
RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}
} // namespace

TEST_CASE("rank of simple matrices") {
    CHECK(rank(from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}})) == 1);
    CHECK(rank(from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}})) == 2);
    CHECK(rank(RationalMatrix(0, 0)) == 0);
    CHECK(rank(RationalMatrix(3, 3)) == 0);
}

TEST_CASE("bareiss rank agrees with division-based elimination") {
    oracle::Rng rng(31001);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.int_in(1, 6));
        std::size_t c = static_cast<std::size_t>(rng.int_in(1, 6));
        std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(c));
        RationalMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                rows[i][j] = rng.rational();
                m.at(i, j) = rows[i][j];
            }
        CHECK(rank(m) == oracle::gauss_rank(rows));
    }
}

TEST_CASE("nullspace vectors solve M x = 0 exactly") {
    oracle::Rng rng(31002);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.int_in(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.int_in(1, 6));
        RationalMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.rational(4, 3);
        auto basis = nullspace(m);
        CHECK(basis.size() == c - rank(m));
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < r; ++i) {
                Rational dot(0);
                for (std::size_t j = 0; j < c; ++j) dot += m.at(i, j) * v[j];
                CHECK(dot == 0);
            }
        }
        // the free-coordinate pattern makes the vectors independent
        std::vector<std::vector<Rational>> stacked;
        for (const auto& v : basis) stacked.push_back(v);
        if (!basis.empty()) CHECK(oracle::gauss_rank(stacked) == basis.size());
    }
}

TEST_CASE("solve recovers exact solutions") {
    RationalMatrix m = from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(-1)}});
    std::vector<Rational> x;
    REQUIRE(solve(m, {Rational(5), Rational(1)}, x));
    CHECK(x == std::vector<Rational>{Rational(2), Rational(1)});

    RationalMatrix sing = from_rows({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}});
    CHECK_FALSE(solve(sing, {Rational(0), Rational(1)}, x));
    CHECK(solve(sing, {Rational(1), Rational(2)}, x));
}
