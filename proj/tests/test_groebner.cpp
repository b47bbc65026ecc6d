#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "alpert/groebner.hpp"
#include "oracles.hpp"

using namespace alpert;

namespace {
const MonomialOrder kOrder2(OrderKind::grevlex, 2);

Polynomial P(const std::string& text, int nvars = 2) { return parse_polynomial(text, nvars); }
} // namespace

TEST_CASE("single division step") {
    // reduce x^2 by {y - x^2}: the generator's leading term is x^2, so the
    // remainder is y; re-expansion q * g + r must give back the input
    Polynomial g = P("x2 - x1^2");
    Polynomial p = P("x1^2");
    Polynomial r = reduce(p, {g}, kOrder2);
    CHECK(r == P("x2"));
    Polynomial quotient = P("-1"); // p = q*g + r with q = -1
    CHECK(quotient * g + r == p);
}

TEST_CASE("reduce edge cases") {
    Polynomial p = P("x1^3 + 2*x2");
    CHECK(reduce(p, {}, kOrder2) == p);
    Polynomial g = P("3*x1*x2 - 1/2");
    CHECK(reduce(g, {g}, kOrder2).is_zero());
}

TEST_CASE("remainder is irreducible and the difference is in the ideal") {
    oracle::Rng rng(41001);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 3));
        MonomialOrder order(OrderKind::grevlex, n);
        std::vector<Polynomial> basis;
        for (int i = 0, count = static_cast<int>(rng.int_in(1, 3)); i < count; ++i) {
            Polynomial g = rng.polynomial(n, 3, 4);
            if (!g.is_zero()) basis.push_back(g);
        }
        if (basis.empty()) continue;
        Polynomial p = rng.polynomial(n, 4, 6);
        Polynomial r = reduce(p, basis, order);
        for (const auto& [mono, coeff] : r.terms())
            for (const auto& g : basis)
                CHECK_FALSE(g.leading_monomial(order).divides(mono));
        // p - r reduces to zero, so it lies in the ideal
        CHECK(reduce(p - r, basis, order).is_zero());
    }
}

TEST_CASE("buchberger on a single generator") {
    GroebnerBasis gb = buchberger({P("x2 - x1^2")}, kOrder2);
    REQUIRE(gb.generators.size() == 1);
    CHECK(gb.generators[0] == P("x1^2 - x2") * Rational(-1)); // monic: x2... or -?
    CHECK(gb.reduced);
    CHECK(is_reduced_basis(gb));
}

TEST_CASE("buchberger frozen example") {
    // S({x^2 + y^2, x^2 - y^2}) = 2 y^2, then x^2 + y^2 reduces to x^2:
    // the reduced basis is {x^2, y^2}
    GroebnerBasis gb = buchberger({P("x1^2 + x2^2"), P("x1^2 - x2^2")}, kOrder2);
    REQUIRE(gb.generators.size() == 2);
    CHECK(gb.generators[0] == P("x2^2"));
    CHECK(gb.generators[1] == P("x1^2"));
    CHECK(is_reduced_basis(gb));
    // both inputs lie in the ideal of the output
    CHECK(reduce(P("x1^2 + x2^2"), gb.generators, kOrder2).is_zero());
    CHECK(reduce(P("x1^2 - x2^2"), gb.generators, kOrder2).is_zero());
    // and both outputs lie in the ideal of the inputs
    std::vector<Polynomial> inputs{P("x1^2 + x2^2"), P("x1^2 - x2^2")};
    for (const auto& g : gb.generators) {
        // x^2 = (f1+f2)/2, y^2 = (f1-f2)/2
        CHECK((Rational(1, 2) * (inputs[0] + inputs[1]) == g ||
               Rational(1, 2) * (inputs[0] - inputs[1]) == g));
    }
}

TEST_CASE("unit and zero ideals") {
    GroebnerBasis unit = buchberger({P("1")}, kOrder2);
    REQUIRE(unit.generators.size() == 1);
    CHECK(unit.generators[0] == P("1"));
    CHECK(unit.is_unit_ideal());

    GroebnerBasis zero = buchberger({Polynomial::zero(2)}, kOrder2);
    CHECK(zero.generators.empty());
    CHECK(zero.is_zero_ideal());
}

TEST_CASE("every s-polynomial of the output reduces to zero") {
    oracle::Rng rng(41002);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 3));
        MonomialOrder order(OrderKind::grevlex, n);
        std::vector<Polynomial> gens;
        for (int i = 0, count = static_cast<int>(rng.int_in(1, 3)); i < count; ++i)
            gens.push_back(rng.polynomial(n, 3, 3));
        GroebnerBasis gb = buchberger(gens, order);
        CHECK(is_reduced_basis(gb));
        for (std::size_t i = 0; i < gb.generators.size(); ++i)
            for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
                Polynomial s = detail::s_polynomial(gb.generators[i], gb.generators[j], order);
                CHECK(reduce(s, gb.generators, order).is_zero());
            }
        // ideal membership of the inputs
        for (const auto& g : gens)
            CHECK(reduce(g, gb.generators, order).is_zero());
    }
}

TEST_CASE("reduced basis is invariant under generator permutation") {
    oracle::Rng rng(41003);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng.int_in(2, 3));
        MonomialOrder order(OrderKind::grevlex, n);
        std::vector<Polynomial> gens;
        for (int i = 0, count = static_cast<int>(rng.int_in(2, 4)); i < count; ++i)
            gens.push_back(rng.polynomial(n, 3, 3));
        GroebnerBasis gb1 = buchberger(gens, order);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            std::vector<Polynomial> permuted = gens;
            for (std::size_t i = permuted.size(); i > 1; --i)
                std::swap(permuted[i - 1], permuted[rng.int_in(0, static_cast<int>(i) - 1)]);
            GroebnerBasis gb2 = buchberger(permuted, order);
            CHECK(gb1.generators == gb2.generators);
        }
    }
}

TEST_CASE("gdep gind partition for a line") {
    // G = {x - y} written so the leading term is x (x > y, equal degree)
    GroebnerBasis gb = buchberger({P("x2 - x1")}, kOrder2);
    REQUIRE(gb.generators.size() == 1);
    CHECK(gb.generators[0].leading_monomial(kOrder2) == Monomial({1, 0}));

    auto part = gdep_gind(gb, 2, 3);
    REQUIRE(part.gdep.size() == 3);
    REQUIRE(part.gind.size() == 3);
    auto has = [](const std::vector<Monomial>& v, std::vector<int> e) {
        return std::find(v.begin(), v.end(), Monomial(std::move(e))) != v.end();
    };
    CHECK(has(part.gdep, {1, 0})); // x
    CHECK(has(part.gdep, {2, 0})); // x^2
    CHECK(has(part.gdep, {1, 1})); // xy
    CHECK(has(part.gind, {0, 0})); // 1
    CHECK(has(part.gind, {0, 1})); // y
    CHECK(has(part.gind, {0, 2})); // y^2

    // cross-check |gind| against the evaluation rank of 4 collinear points
    std::vector<std::vector<Rational>> pts;
    for (int t = 0; t <= 3; ++t) pts.push_back({Rational(t), Rational(t)});
    CHECK(oracle::eval_rank(pts, f_n_k(2, 3, kOrder2)) == part.gind.size());
}

TEST_CASE("gdep gind degenerate ideals") {
    GroebnerBasis zero{{}, kOrder2, true};
    auto part0 = gdep_gind(zero, 2, 4);
    CHECK(part0.gdep.empty());
    CHECK(part0.gind.size() == f_n_k(2, 4).size());

    GroebnerBasis unit = buchberger({P("2")}, kOrder2);
    auto part1 = gdep_gind(unit, 2, 4);
    CHECK(part1.gind.empty());
    CHECK(part1.gdep.size() == f_n_k(2, 4).size());

    // the partition is disjoint and exhausts F^n_k
    GroebnerBasis gb = buchberger({P("x1^2 - x2")}, kOrder2);
    for (int k = 0; k <= 5; ++k) {
        auto part = gdep_gind(gb, 2, k);
        CHECK(part.gdep.size() + part.gind.size() == f_n_k(2, k).size());
        for (const auto& m : part.gdep)
            CHECK(std::find(part.gind.begin(), part.gind.end(), m) == part.gind.end());
    }
}

TEST_CASE("hilbert dimension examples") {
    GroebnerBasis zero{{}, kOrder2, true};
    CHECK(hilbert_dimension(zero) == 2);

    CHECK(hilbert_dimension(buchberger({P("x1")}, kOrder2)) == 1);
    CHECK(hilbert_dimension(buchberger({P("x1^2"), P("x1*x2"), P("x2^2")}, kOrder2)) == 0);
    CHECK(hilbert_dimension(buchberger({P("5")}, kOrder2)) == -1);
}

TEST_CASE("hilbert dimension agrees with the subset-enumeration oracle") {
    oracle::Rng rng(41004);
    for (int trial = 0; trial < 80; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 3));
        MonomialOrder order(OrderKind::grevlex, n);
        std::vector<Polynomial> gens;
        for (int i = 0, count = static_cast<int>(rng.int_in(1, 3)); i < count; ++i) {
            Monomial m = rng.monomial(n, 3);
            gens.push_back(Polynomial::term(n, m, Rational(1)));
        }
        GroebnerBasis gb = buchberger(gens, order);
        CHECK(hilbert_dimension(gb) == oracle::hilbert_dim_subsets(gb.leading_terms(), n));
    }
}

TEST_CASE("staircase counts") {
    GroebnerBasis parabola = buchberger({P("x2 - x1^2")}, kOrder2);
    // leading term x^2: monomials with x-exponent <= 1 and degree < k
    for (int k = 1; k <= 6; ++k) {
        CHECK(staircase_count(parabola, k) == 2 * k - 1);
        CHECK(staircase_count(parabola, k) ==
              static_cast<long>(gdep_gind(parabola, 2, k).gind.size()));
    }
    GroebnerBasis zero{{}, kOrder2, true};
    for (int k = 0; k <= 6; ++k)
        CHECK(staircase_count(zero, k) == oracle::binomial(2 + k - 1, 2));
    GroebnerBasis unit = buchberger({P("1")}, kOrder2);
    CHECK(staircase_count(unit, 5) == 0);
}

TEST_CASE("buchberger terminates within a step budget on random inputs") {
    oracle::Rng rng(41005);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 3));
        MonomialOrder order(OrderKind::grevlex, n);
        std::vector<Polynomial> gens;
        for (int i = 0, count = static_cast<int>(rng.int_in(1, 4)); i < count; ++i)
            gens.push_back(rng.polynomial(n, 4, 4));
        GroebnerBasis gb = buchberger(gens, order); // must return, not hang
        CHECK(gb.reduced);
    }
}
