#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "alpert/groebner.hpp"
#include "alpert/measure.hpp"
#include "alpert/polynomial.hpp"

namespace alpert {

// Smallest algebraic set carrying full mu-mass of a cube: a finite point set
// (atomic case, possibly empty) or all of R^n sampled as full boxes.
struct SupportDescriptor {
    enum class Kind { finite_points, full_box };
    Kind kind = Kind::finite_points;
    std::vector<std::vector<Rational>> points;
    std::vector<DyadicCube> boxes;
};

inline SupportDescriptor support(const Measure& mu, const DyadicCube& q) {
    SupportDescriptor desc;
    if (mu.kind() == MeasureKind::atomic) {
        for (const auto& a : mu.atoms())
            if (q.contains_point(a.point)) desc.points.push_back(a.point);
        return desc;
    }
    for (const auto& b : mu.boxes()) {
        auto isect = intersect(b.cube, q);
        if (isect) desc.boxes.push_back(*isect);
    }
    if (!desc.boxes.empty()) desc.kind = SupportDescriptor::Kind::full_box;
    return desc;
}

struct BuchbergerMoellerResult {
    GroebnerBasis basis;
    std::vector<Monomial> staircase; // independent monomials, ascending
};

// Buchberger-Moeller: reduced Groebner basis of the vanishing ideal of a
// finite point set. Candidate monomials are processed in increasing order;
// a candidate whose evaluation vector depends on the staircase yields a new
// generator (the dependence polynomial), an independent one joins the
// staircase and spawns its variable multiples.
inline BuchbergerMoellerResult buchberger_moeller(
    const std::vector<std::vector<Rational>>& points, const MonomialOrder& order) {
    const int n = order.nvars;
    const std::size_t s = points.size();
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("buchberger_moeller: point dimension mismatch");

    auto eval_vector = [&](const Monomial& m) {
        std::vector<Rational> v(s);
        for (std::size_t i = 0; i < s; ++i) {
            Rational t(1);
            for (int k = 0; k < n; ++k)
                for (int e = 0; e < m.exp[k]; ++e) t *= points[i][k];
            v[i] = std::move(t);
        }
        return v;
    };

    struct EchelonRow {
        std::size_t pivot;
        std::vector<Rational> vec;   // reduced evaluation vector, pivot scaled to 1
        std::vector<Rational> combo; // coordinates over the staircase list
    };
    std::vector<Monomial> staircase;
    std::vector<EchelonRow> rows;
    std::vector<Polynomial> gens;
    std::vector<Monomial> gen_lts;

    auto order_less = [&](const Monomial& a, const Monomial& b) { return order.less(a, b); };
    std::set<Monomial, decltype(order_less)> candidates(order_less);
    candidates.insert(Monomial::one(n));

    while (!candidates.empty()) {
        Monomial m = *candidates.begin();
        candidates.erase(candidates.begin());
        bool covered = false;
        for (const auto& lt : gen_lts)
            if (lt.divides(m)) {
                covered = true;
                break;
            }
        if (covered) continue;

        // reduce the evaluation vector against the echelon rows
        std::vector<Rational> r = eval_vector(m);
        std::vector<Rational> gamma(staircase.size(), Rational(0));
        for (const auto& row : rows) {
            const Rational c = r[row.pivot];
            if (c == 0) continue;
            for (std::size_t i = 0; i < s; ++i) r[i] -= c * row.vec[i];
            for (std::size_t j = 0; j < row.combo.size(); ++j) gamma[j] += c * row.combo[j];
        }
        std::size_t pivot = 0;
        while (pivot < s && r[pivot] == 0) ++pivot;

        if (pivot == s) {
            // dependent: m - sum gamma_j * staircase_j vanishes on every point
            Polynomial g = Polynomial::term(n, m, Rational(1));
            for (std::size_t j = 0; j < staircase.size(); ++j)
                g.add_term(staircase[j], -gamma[j]);
            gen_lts.push_back(m);
            gens.push_back(std::move(g));
        } else {
            const Rational inv = Rational(1) / r[pivot];
            for (auto& x : r) x *= inv;
            gamma.push_back(Rational(-1)); // vec = -(combo over old staircase) + 1*m
            for (auto& x : gamma) x *= -inv;
            staircase.push_back(m);
            for (auto& row : rows) row.combo.resize(staircase.size(), Rational(0));
            rows.push_back(EchelonRow{pivot, std::move(r), std::move(gamma)});
            for (int i = 0; i < n; ++i) candidates.insert(m * Monomial::var(n, i));
        }
    }

    GroebnerBasis gb{std::move(gens), order, true};
    std::sort(gb.generators.begin(), gb.generators.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return order.less(a.leading_monomial(order), b.leading_monomial(order));
              });
    return BuchbergerMoellerResult{std::move(gb), std::move(staircase)};
}

// Reduced Groebner basis of I_Q. Finite points go through Buchberger-Moeller;
// a support of positive volume forces the zero ideal; the empty support gives
// the unit ideal.
inline GroebnerBasis vanishing_ideal(const SupportDescriptor& desc, const MonomialOrder& order) {
    if (desc.kind == SupportDescriptor::Kind::full_box)
        return GroebnerBasis{{}, order, true};
    return buchberger_moeller(desc.points, order).basis;
}

} // namespace alpert
