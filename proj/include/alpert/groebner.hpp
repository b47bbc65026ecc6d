#pragma once

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alpert/polynomial.hpp"

namespace alpert {

// Generators of an ideal under a fixed graded order. `reduced` marks the
// unique reduced basis: monic generators, no monomial of one divisible by the
// leading term of another. The zero ideal is the empty generator list.
struct GroebnerBasis {
    std::vector<Polynomial> generators;
    MonomialOrder order;
    bool reduced = false;

    int nvars() const { return order.nvars; }

    bool is_zero_ideal() const { return generators.empty(); }
    bool is_unit_ideal() const {
        return generators.size() == 1 && generators.front().degree() == 0;
    }

    std::vector<Monomial> leading_terms() const {
        std::vector<Monomial> lts;
        lts.reserve(generators.size());
        for (const auto& g : generators) lts.push_back(g.leading_monomial(order));
        return lts;
    }
};

// Remainder of multivariate division: no monomial of the result is divisible
// by any leading term of the basis, and p - reduce(p, ...) lies in the ideal
// the basis generates.
inline Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                         const MonomialOrder& order) {
    std::vector<Monomial> lts;
    std::vector<Rational> lcs;
    lts.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) throw std::invalid_argument("reduce: zero basis element");
        auto [m, c] = g.leading_term(order);
        lts.push_back(std::move(m));
        lcs.push_back(std::move(c));
    }
    Polynomial rem(p.nvars());
    Polynomial work = p;
    while (!work.is_zero()) {
        // reducible monomials are eliminated top-down; irreducible ones are
        // final and move to the remainder
        auto [mono, coeff] = work.leading_term(order);
        std::size_t hit = basis.size();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (lts[i].divides(mono)) {
                hit = i;
                break;
            }
        }
        if (hit == basis.size()) {
            rem.add_term(mono, coeff);
            work.add_term(mono, -coeff);
        } else {
            Monomial q = mono.quotient(lts[hit]);
            Rational f = coeff / lcs[hit];
            work -= Polynomial::term(p.nvars(), q, f) * basis[hit];
        }
    }
    return rem;
}

namespace detail {

inline Polynomial make_monic(Polynomial p, const MonomialOrder& order) {
    auto [m, c] = p.leading_term(order);
    if (c != 1) p *= Rational(1) / c;
    return p;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& order) {
    auto [mf, cf] = f.leading_term(order);
    auto [mg, cg] = g.leading_term(order);
    Monomial l = lcm(mf, mg);
    Polynomial a = Polynomial::term(f.nvars(), l.quotient(mf), Rational(1) / cf) * f;
    Polynomial b = Polynomial::term(g.nvars(), l.quotient(mg), Rational(1) / cg) * g;
    return a - b;
}

} // namespace detail

// Buchberger's algorithm with the product and chain criteria, followed by
// inter-reduction to the unique reduced basis. Zero generators are dropped;
// an all-zero input yields the zero ideal.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                                const MonomialOrder& order) {
    std::vector<Polynomial> g;
    for (const auto& p : gens) {
        if (p.nvars() != order.nvars)
            throw std::invalid_argument("buchberger: dimension mismatch");
        if (!p.is_zero()) g.push_back(detail::make_monic(p, order));
    }
    if (g.empty()) return GroebnerBasis{{}, order, true};

    auto lt = [&](const Polynomial& p) { return p.leading_monomial(order); };

    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pending.insert({i, j});

    while (!pending.empty()) {
        // normal selection: smallest lcm first
        auto best = pending.begin();
        Monomial best_lcm = lcm(lt(g[best->first]), lt(g[best->second]));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = lcm(lt(g[it->first]), lt(g[it->second]));
            if (order.less(l, best_lcm)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        const Monomial li = lt(g[i]), lj = lt(g[j]);
        // product criterion: coprime leading terms reduce to zero
        if (best_lcm == li * lj) continue;
        // chain criterion: a third generator whose leading term divides the
        // lcm, with both side pairs already handled
        bool chained = false;
        for (std::size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!lt(g[k]).divides(best_lcm)) continue;
            auto pair_ik = std::minmax(i, k), pair_jk = std::minmax(j, k);
            if (!pending.count({pair_ik.first, pair_ik.second}) &&
                !pending.count({pair_jk.first, pair_jk.second}))
                chained = true;
        }
        if (chained) continue;

        Polynomial r = reduce(detail::s_polynomial(g[i], g[j], order), g, order);
        if (r.is_zero()) continue;
        g.push_back(detail::make_monic(std::move(r), order));
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pending.insert({k, g.size() - 1});
    }

    // minimalize: drop generators whose leading term another one divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial li = lt(g[i]), lj = lt(g[j]);
            if (lj.divides(li) && (li != lj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    // tail-reduce every generator against the others until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = detail::make_monic(reduce(minimal[i], others, order), order);
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
    return GroebnerBasis{std::move(minimal), order, true};
}

// Checks the reduced-basis conditions directly (monic, no monomial of any
// generator divisible by another generator's leading term).
inline bool is_reduced_basis(const GroebnerBasis& gb) {
    const auto lts = gb.leading_terms();
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
        const Polynomial& p = gb.generators[i];
        if (p.is_zero() || p.leading_term(gb.order).second != 1) return false;
        for (const auto& [mono, coeff] : p.terms())
            for (std::size_t j = 0; j < lts.size(); ++j)
                if (j != i && lts[j].divides(mono)) return false;
    }
    return true;
}

// Partition of F^n_k by divisibility against LT(G): gdep holds the monomials
// some leading term divides, gind the rest.
struct StaircasePartition {
    std::vector<Monomial> gdep;
    std::vector<Monomial> gind;
};

inline StaircasePartition gdep_gind(const GroebnerBasis& gb, int n, int k) {
    if (!gb.reduced) throw std::invalid_argument("gdep_gind: basis not reduced");
    if (!gb.order.is_graded()) throw std::invalid_argument("gdep_gind: order must be graded");
    if (n != gb.nvars()) throw std::invalid_argument("gdep_gind: dimension mismatch");
    const auto lts = gb.leading_terms();
    StaircasePartition part;
    for (auto& u : f_n_k(n, k, gb.order)) {
        bool dep = false;
        for (const auto& v : lts) {
            if (v.divides(u)) {
                dep = true;
                break;
            }
        }
        (dep ? part.gdep : part.gind).push_back(std::move(u));
    }
    return part;
}

inline long staircase_count(const GroebnerBasis& gb, int k) {
    return static_cast<long>(gdep_gind(gb, gb.nvars(), k).gind.size());
}

// Largest variable subset producing no leading monomial of the ideal.
// Zero ideal: n. Unit ideal: -1 (the constant leading term defeats even the
// empty subset).
inline int hilbert_dimension(const GroebnerBasis& gb) {
    if (!gb.reduced) throw std::invalid_argument("hilbert_dimension: basis not reduced");
    const int n = gb.nvars();
    if (n > 16) throw std::invalid_argument("hilbert_dimension: nvars > 16");
    std::vector<unsigned> supports;
    for (const auto& m : gb.leading_terms()) {
        if (m.is_one()) return -1;
        supports.push_back(m.support_mask());
    }
    int best = -1;
    for (unsigned s = 0; s < (1u << n); ++s) {
        bool good = true;
        for (unsigned sup : supports) {
            if ((sup & ~s) == 0) { // support contained in s
                good = false;
                break;
            }
        }
        if (good) best = std::max(best, static_cast<int>(std::popcount(s)));
    }
    return best;
}

} // namespace alpert
