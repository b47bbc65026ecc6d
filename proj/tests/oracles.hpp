#pragma once

// Test-side oracles. These deliberately avoid the library's computational
// paths: ranks use plain division-based elimination instead of Bareiss,
// counts come from Pascal's triangle, and the Hilbert dimension is the
// definition applied by brute force.

#include <cstdint>
#include <random>
#include <vector>

#include "alpert/measure.hpp"
#include "alpert/polynomial.hpp"
#include "alpert/rational.hpp"

namespace oracle {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<long long>> pascal(n + 1);
    for (int i = 0; i <= n; ++i) {
        pascal[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
    }
    return pascal[n][k];
}

// Plain Gaussian elimination with immediate division.
inline std::size_t gauss_rank(std::vector<std::vector<alpert::Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            alpert::Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Rank of the evaluation matrix of monomials at points.
inline std::size_t eval_rank(const std::vector<std::vector<alpert::Rational>>& points,
                             const std::vector<alpert::Monomial>& monomials) {
    std::vector<std::vector<alpert::Rational>> m;
    for (const auto& p : points) {
        std::vector<alpert::Rational> row;
        for (const auto& mono : monomials) {
            alpert::Rational v(1);
            for (int i = 0; i < mono.nvars(); ++i)
                for (int e = 0; e < mono.exp[i]; ++e) v *= p[i];
            row.push_back(std::move(v));
        }
        m.push_back(std::move(row));
    }
    return gauss_rank(std::move(m));
}

// Hilbert dimension straight from the definition: the largest variable
// subset S such that no leading monomial's support is contained in S.
inline int hilbert_dim_subsets(const std::vector<alpert::Monomial>& lts, int n) {
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool good = true;
        for (const auto& lt : lts) {
            bool inside = true;
            for (int i = 0; i < n; ++i)
                if (lt.exp[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                good = false;
                break;
            }
        }
        if (good) {
            int size = 0;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) ++size;
            if (size > best) best = size;
        }
    }
    return best;
}

// Deterministic generators for property tests.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    alpert::Rational rational(std::int64_t max_abs = 9, std::int64_t max_den = 4) {
        return alpert::Rational(int_in(-max_abs, max_abs), int_in(1, max_den));
    }

    alpert::Monomial monomial(int nvars, int max_deg) {
        std::vector<int> e(nvars);
        int budget = static_cast<int>(int_in(0, max_deg));
        for (int i = 0; i < nvars; ++i) {
            e[i] = static_cast<int>(int_in(0, budget));
            budget -= e[i];
        }
        return alpert::Monomial(std::move(e));
    }

    alpert::Polynomial polynomial(int nvars, int max_deg, int max_terms) {
        alpert::Polynomial p(nvars);
        int terms = static_cast<int>(int_in(0, max_terms));
        for (int t = 0; t < terms; ++t)
            p.add_term(monomial(nvars, max_deg), rational());
        return p;
    }

    // Atomic measure with distinct rational points in [0, 2^level)^n.
    alpert::Measure atomic_measure(int nvars, int max_atoms, std::int64_t span) {
        std::vector<alpert::Atom> atoms;
        int want = static_cast<int>(int_in(1, max_atoms));
        for (int a = 0; a < want; ++a) {
            std::vector<alpert::Rational> pt;
            for (int i = 0; i < nvars; ++i)
                pt.push_back(alpert::Rational(int_in(0, 4 * span - 1), 4));
            bool dup = false;
            for (const auto& other : atoms)
                if (other.point == pt) dup = true;
            if (dup) continue;
            atoms.push_back({std::move(pt), alpert::Rational(int_in(1, 5))});
        }
        return alpert::Measure::atomic(nvars, std::move(atoms));
    }
};

} // namespace oracle
