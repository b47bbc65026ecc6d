#include <catch2/catch_amalgamated.hpp>

#include "alpert/polynomial.hpp"
#include "oracles.hpp"

using namespace alpert;

namespace {
Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }
} // namespace

TEST_CASE("f_n_k enumerates monomials below the degree bound") {
    MonomialOrder order(OrderKind::grevlex, 2);
    auto f23 = f_n_k(2, 3, order);
    REQUIRE(f23.size() == 6);
    // ascending: 1, x, y, x^2, xy, y^2 (grevlex with x > y)
    CHECK(f23[0] == mono({0, 0}));
    CHECK(f23[1] == mono({0, 1}));
    CHECK(f23[2] == mono({1, 0}));
    CHECK(f23[3] == mono({0, 2}));
    CHECK(f23[4] == mono({1, 1}));
    CHECK(f23[5] == mono({2, 0}));

    CHECK(f_n_k(1, 1).size() == 1);
    CHECK(f_n_k(1, 1)[0] == mono({0}));

    auto f32 = f_n_k(3, 2);
    REQUIRE(f32.size() == 4);
    CHECK(f32[0] == mono({0, 0, 0}));

    CHECK(f_n_k(2, 0).empty());
}

TEST_CASE("f_n_k size matches the binomial count") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 8; ++k)
            CHECK(static_cast<long long>(f_n_k(n, k).size()) == oracle::binomial(n + k - 1, n));
}

TEST_CASE("graded orders put degree first") {
    for (OrderKind kind : {OrderKind::grlex, OrderKind::grevlex}) {
        MonomialOrder order(kind, 2);
        CHECK(order.compare(mono({2, 0}), mono({0, 1})) > 0); // x^2 > y
        CHECK(order.compare(mono({1, 0}), mono({0, 1})) > 0); // x > y by tie-break
        CHECK(order.compare(mono({1, 0}), mono({1, 0})) == 0);
    }
}

TEST_CASE("grlex and grevlex differ in three variables") {
    // x z vs y^2: both degree 2; grlex compares x first (x z wins), grevlex
    // looks at the last variable (y^2 wins since its z-exponent is smaller)
    Monomial xz({1, 0, 1}), yy({0, 2, 0});
    CHECK(MonomialOrder(OrderKind::grlex, 3).compare(xz, yy) > 0);
    CHECK(MonomialOrder(OrderKind::grevlex, 3).compare(xz, yy) < 0);
}

TEST_CASE("order properties on random triples") {
    oracle::Rng rng(77001);
    for (OrderKind kind : {OrderKind::grlex, OrderKind::grevlex}) {
        for (int n = 1; n <= 3; ++n) {
            MonomialOrder order(kind, n);
            for (int trial = 0; trial < 300; ++trial) {
                Monomial u = rng.monomial(n, 5), v = rng.monomial(n, 5), w = rng.monomial(n, 5);
                // antisymmetry
                CHECK(order.compare(u, v) == -order.compare(v, u));
                // transitivity
                if (order.compare(u, v) <= 0 && order.compare(v, w) <= 0)
                    CHECK(order.compare(u, w) <= 0);
                // multiplicativity
                CHECK(order.compare(u * w, v * w) == order.compare(u, v));
                // graded
                if (u.degree() < v.degree()) CHECK(order.compare(u, v) < 0);
                // well-defined equality
                if (order.compare(u, v) == 0) CHECK(u == v);
            }
        }
    }
}

TEST_CASE("leading term under a graded order") {
    MonomialOrder order(OrderKind::grevlex, 2);
    Polynomial p = parse_polynomial("x2 - x1^2", 2);
    auto [m, c] = p.leading_term(order);
    CHECK(m == mono({2, 0}));
    CHECK(c == Rational(-1));

    auto [m1, c1] = Polynomial::one(2).leading_term(order);
    CHECK(m1 == mono({0, 0}));
    CHECK(c1 == Rational(1));

    Polynomial q(2);
    q.add_term(mono({1, 0}), Rational(3));
    q.add_term(mono({1, 0}), Rational(2));
    auto [m2, c2] = q.leading_term(order);
    CHECK(m2 == mono({1, 0}));
    CHECK(c2 == Rational(5));
    CHECK(q.term_count() == 1);

    CHECK_THROWS_AS(Polynomial::zero(2).leading_term(order), std::domain_error);
}

TEST_CASE("arithmetic identities") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    CHECK((x + y) + (x - y) == Rational(2) * x);
    CHECK((x + y) * (x - y) == x * x - y * y);
    Polynomial p = parse_polynomial("1/2*x1^2*x2 - 3*x2 + 1", 2);
    CHECK(p + Rational(-1) * p == Polynomial::zero(2));
    CHECK((p - p).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    oracle::Rng rng(77002);
    for (int trial = 0; trial < 150; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 3));
        Polynomial a = rng.polynomial(n, 4, 5), b = rng.polynomial(n, 4, 5),
                   c = rng.polynomial(n, 4, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("evaluation is exact") {
    Polynomial p = parse_polynomial("x1^2 + x2", 2);
    std::vector<Rational> pt{Rational(1, 2), Rational(1, 4)};
    CHECK(p.evaluate(pt) == Rational(1, 2));
    CHECK(Polynomial::one(2).evaluate(pt) == Rational(1));
    CHECK(Polynomial::zero(2).evaluate(pt) == Rational(0));
    CHECK_THROWS_AS(p.evaluate(std::vector<Rational>{Rational(1)}), std::invalid_argument);
}

TEST_CASE("text format round trips") {
    MonomialOrder order(OrderKind::grevlex, 2);
    Polynomial p = parse_polynomial("1/2*x1^2 - x2", 2);
    CHECK(p.to_string(order) == "1/2*x1^2 - x2");
    CHECK(parse_polynomial(p.to_string(order), 2) == p);

    CHECK(parse_polynomial("0", 2).is_zero());
    CHECK(Polynomial::zero(2).to_string(order) == "0");
    CHECK(parse_polynomial("-x1", 2) == Rational(-1) * Polynomial::variable(2, 0));
    CHECK(parse_polynomial("2*x1*x2^3", 2) ==
          Polynomial::term(2, mono({1, 3}), Rational(2)));
    CHECK(parse_polynomial(" - 1/3 + x1 ", 2) ==
          Polynomial::variable(2, 0) + Polynomial::constant(2, Rational(-1, 3)));

    oracle::Rng rng(77003);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 3));
        Polynomial q = rng.polynomial(n, 5, 6);
        MonomialOrder o(OrderKind::grevlex, n);
        CHECK(parse_polynomial(q.to_string(o), n) == q);
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_polynomial("x3", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x0", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("1/0", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x1 +", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x1 x2", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x1^-2", 2), std::invalid_argument);
}

TEST_CASE("rational literal parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(format_rational(Rational(-3, 9)) == "-1/3");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}
