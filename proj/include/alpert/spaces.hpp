#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "alpert/linalg.hpp"
#include "alpert/measure.hpp"
#include "alpert/piecewise.hpp"
#include "alpert/polynomial.hpp"

namespace alpert {

// Ordered family of polynomials (the sets U and V). Order matters: greedy
// basis extraction and Gram-Schmidt follow it.
struct FunctionFamily {
    int nvars = 1;
    std::vector<Polynomial> members;

    FunctionFamily() = default;
    FunctionFamily(int nvars_, std::vector<Polynomial> members_)
        : nvars(nvars_), members(std::move(members_)) {
        for (const auto& p : members)
            if (p.nvars() != nvars)
                throw std::invalid_argument("FunctionFamily: dimension mismatch");
    }

    static FunctionFamily empty(int nvars) { return FunctionFamily(nvars, {}); }

    // F^n_k as a family, ascending in the order.
    static FunctionFamily monomials_below_degree(int nvars, int k, const MonomialOrder& order) {
        std::vector<Polynomial> m;
        for (auto& mono : f_n_k(nvars, k, order))
            m.push_back(Polynomial::term(nvars, std::move(mono), Rational(1)));
        return FunctionFamily(nvars, std::move(m));
    }

    std::size_t size() const { return members.size(); }

    bool contains(const Polynomial& p) const {
        return std::find(members.begin(), members.end(), p) != members.end();
    }

    bool subset_of(const FunctionFamily& other) const {
        for (const auto& p : members)
            if (!other.contains(p)) return false;
        return true;
    }

    bool same_set(const FunctionFamily& other) const {
        return subset_of(other) && other.subset_of(*this);
    }

    FunctionFamily intersect(const FunctionFamily& other) const {
        std::vector<Polynomial> m;
        for (const auto& p : members)
            if (other.contains(p)) m.push_back(p);
        return FunctionFamily(nvars, std::move(m));
    }

    bool operator==(const FunctionFamily&) const = default;
};

// Exact Gram matrix G_ij = <f_i, f_j> over mu restricted to Q.
inline RationalMatrix gram_matrix(const Measure& mu, const DyadicCube& q,
                                  const std::vector<PiecewisePoly>& fam) {
    RationalMatrix g(fam.size(), fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i; j < fam.size(); ++j) {
            Rational v = inner_product<Rational>(mu, q, fam[i], fam[j]);
            g.at(i, j) = v;
            g.at(j, i) = std::move(v);
        }
    }
    return g;
}

namespace detail {

inline std::vector<PiecewisePoly> restrict_family(const DyadicCube& q,
                                                  const FunctionFamily& fam) {
    std::vector<PiecewisePoly> out;
    out.reserve(fam.size());
    for (const auto& p : fam.members) out.push_back(PiecewisePoly::on_cube(q, p));
    return out;
}

} // namespace detail

// dim P_{Q,U}(mu): rank of the Gram matrix of the restrictions 1_Q * u.
inline int component_dimension(const Measure& mu, const DyadicCube& q,
                               const FunctionFamily& u) {
    return static_cast<int>(rank(gram_matrix(mu, q, detail::restrict_family(q, u))));
}

// Greedy maximal independent sublist of U in input order, decided by exact
// Gram-Schmidt residuals (zero squared norm in L^2(mu) means dependent).
inline std::vector<Polynomial> component_basis(const Measure& mu, const DyadicCube& q,
                                               const FunctionFamily& u) {
    std::vector<Polynomial> accepted;
    std::vector<PiecewisePoly> ortho;
    std::vector<Rational> norms2;
    for (const auto& p : u.members) {
        PiecewisePoly r = PiecewisePoly::on_cube(q, p);
        for (std::size_t i = 0; i < ortho.size(); ++i) {
            Rational c = inner_product<Rational>(mu, q, r, ortho[i]) / norms2[i];
            if (c != 0) r -= c * ortho[i];
        }
        Rational n2 = inner_product<Rational>(mu, q, r, r);
        if (n2 != 0) {
            accepted.push_back(p);
            ortho.push_back(std::move(r));
            norms2.push_back(std::move(n2));
        }
    }
    return accepted;
}

// Orthonormal basis carrier. The exact pre-normalized representatives are
// pairwise orthogonal in rational arithmetic; `functions` carries the
// floating-point normalized versions (norm within 1e-12 of 1).
struct OrthoBasis {
    std::vector<PiecewisePolyD> functions;
    std::vector<PiecewisePoly> exact_pre_normalized;
    std::vector<double> norms;
    RationalMatrix gram_certificate; // Gram of the pre-normalized functions

    std::size_t size() const { return functions.size(); }
};

// Exact Gram-Schmidt over mu. Zero-norm inputs are dropped (they are the zero
// element of L^2(mu)); normalization is the only floating step.
inline OrthoBasis orthonormalize(const Measure& mu, std::vector<PiecewisePoly> funcs) {
    OrthoBasis basis;
    std::vector<Rational> norms2;
    for (auto& f : funcs) {
        PiecewisePoly r = std::move(f);
        for (std::size_t i = 0; i < basis.exact_pre_normalized.size(); ++i) {
            Rational c =
                inner_product<Rational>(mu, r, basis.exact_pre_normalized[i]) / norms2[i];
            if (c != 0) r -= c * basis.exact_pre_normalized[i];
        }
        Rational n2 = norm_squared<Rational>(mu, r);
        if (n2 == 0) continue;
        basis.exact_pre_normalized.push_back(std::move(r));
        norms2.push_back(std::move(n2));
    }
    basis.gram_certificate = RationalMatrix(norms2.size(), norms2.size());
    for (std::size_t i = 0; i < norms2.size(); ++i) basis.gram_certificate.at(i, i) = norms2[i];
    for (std::size_t i = 0; i < norms2.size(); ++i) {
        double norm = std::sqrt(to_double(norms2[i]));
        basis.norms.push_back(norm);
        PiecewisePolyD fn = basis.exact_pre_normalized[i].convert<double>();
        fn *= 1.0 / norm;
        basis.functions.push_back(std::move(fn));
    }
    return basis;
}

// Orthonormal basis of P_{Q,big} minus P_{Q,small} (orthogonal complement of
// the small component space inside the big one). An empty small family gives
// an orthonormal basis of P_{Q,big} itself.
inline OrthoBasis complement_basis(const Measure& mu, const DyadicCube& q,
                                   const FunctionFamily& small, const FunctionFamily& big) {
    std::vector<Polynomial> small_basis = component_basis(mu, q, small);
    std::vector<PiecewisePoly> funcs;
    for (const auto& p : small_basis) funcs.push_back(PiecewisePoly::on_cube(q, p));
    const std::size_t anchor = funcs.size();
    for (const auto& p : component_basis(mu, q, big))
        funcs.push_back(PiecewisePoly::on_cube(q, p));
    OrthoBasis full = orthonormalize(mu, std::move(funcs));
    // residuals produced past the small-family block span the complement
    OrthoBasis out;
    for (std::size_t i = anchor; i < full.size(); ++i) {
        out.functions.push_back(std::move(full.functions[i]));
        out.exact_pre_normalized.push_back(std::move(full.exact_pre_normalized[i]));
        out.norms.push_back(full.norms[i]);
    }
    out.gram_certificate = RationalMatrix(out.size(), out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out.gram_certificate.at(i, i) = full.gram_certificate.at(anchor + i, anchor + i);
    return out;
}

// Orthonormal basis of the Alpert space L^2_{Q,U,V}(mu): piecewise-U on the
// children of Q, orthogonal to every 1_Q * v. Steps: per-child component
// bases form the ambient space, the V-conditions become exact linear
// constraints, and the exact null space is orthonormalized.
inline OrthoBasis alpert_space_basis(const Measure& mu, const DyadicCube& q,
                                     const FunctionFamily& u, const FunctionFamily& v) {
    std::vector<PiecewisePoly> ambient;
    for (const auto& child : q.children())
        for (const auto& p : component_basis(mu, child, u))
            ambient.push_back(PiecewisePoly::on_cube(child, p));

    RationalMatrix constraints(v.size(), ambient.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        PiecewisePoly vi = PiecewisePoly::on_cube(q, v.members[i]);
        for (std::size_t j = 0; j < ambient.size(); ++j)
            constraints.at(i, j) = inner_product<Rational>(mu, q, ambient[j], vi);
    }

    std::vector<PiecewisePoly> funcs;
    for (const auto& coeffs : nullspace(std::move(constraints))) {
        PiecewisePoly f(mu.nvars());
        for (std::size_t j = 0; j < ambient.size(); ++j)
            if (coeffs[j] != 0) f += coeffs[j] * ambient[j];
        funcs.push_back(std::move(f));
    }
    return orthonormalize(mu, std::move(funcs));
}

// Dimension accounting for one Alpert space, per the one-condition-at-a-time
// analysis: ambient is the unconstrained dimension, each V-condition drops
// the dimension by exactly 0 or 1, and `freebies` counts the no-op
// conditions in input order.
struct DimensionReport {
    long ambient = 0;
    long lower_bound = 0;
    long upper_bound = 0;
    long actual = 0;
    long freebies = 0;
};

inline DimensionReport dimension_report(const Measure& mu, const DyadicCube& q,
                                        const FunctionFamily& u, const FunctionFamily& v) {
    DimensionReport rep;
    std::vector<PiecewisePoly> ambient;
    for (const auto& child : q.children())
        for (const auto& p : component_basis(mu, child, u))
            ambient.push_back(PiecewisePoly::on_cube(child, p));
    rep.ambient = static_cast<long>(ambient.size());
    rep.upper_bound = rep.ambient;
    rep.lower_bound = rep.ambient - component_dimension(mu, q, v);

    long prev = rep.ambient;
    for (std::size_t i = 1; i <= v.size(); ++i) {
        RationalMatrix constraints(i, ambient.size());
        for (std::size_t row = 0; row < i; ++row) {
            PiecewisePoly vr = PiecewisePoly::on_cube(q, v.members[row]);
            for (std::size_t j = 0; j < ambient.size(); ++j)
                constraints.at(row, j) = inner_product<Rational>(mu, q, ambient[j], vr);
        }
        long cur = rep.ambient - static_cast<long>(rank(std::move(constraints)));
        if (cur != prev && cur != prev - 1)
            throw std::logic_error("dimension_report: condition dropped dimension by more than 1");
        if (cur == prev) ++rep.freebies;
        prev = cur;
    }
    rep.actual = prev;

    if (rep.actual < rep.lower_bound || rep.actual > rep.upper_bound)
        throw std::logic_error("dimension_report: bounds violated");
    if (v.subset_of(u)) {
        long expected = rep.ambient - component_dimension(mu, q, v);
        if (rep.actual != expected)
            throw std::logic_error("dimension_report: V subset of U equality violated");
    }
    return rep;
}

} // namespace alpert
