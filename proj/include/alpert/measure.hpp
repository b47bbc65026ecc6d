#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "alpert/dyadic.hpp"
#include "alpert/piecewise.hpp"
#include "alpert/polynomial.hpp"

namespace alpert {

struct Atom {
    std::vector<Rational> point;
    Rational weight;
};

struct WeightedBox {
    DyadicCube cube;
    Rational density;
};

enum class MeasureKind { atomic, uniform_boxes };

// Locally finite positive measure in one of two concrete forms: finitely many
// weighted atoms, or a constant density on finitely many disjoint dyadic
// boxes. Both keep every integral of a polynomial rational.
class Measure {
public:
    static Measure atomic(int nvars, std::vector<Atom> atoms) {
        Measure mu;
        mu.nvars_ = require_nvars(nvars);
        mu.kind_ = MeasureKind::atomic;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (static_cast<int>(atoms[i].point.size()) != nvars)
                throw std::invalid_argument("Measure: atom dimension mismatch");
            if (atoms[i].weight <= 0)
                throw std::invalid_argument("Measure: atom weight must be positive");
            for (std::size_t j = i + 1; j < atoms.size(); ++j)
                if (atoms[i].point == atoms[j].point)
                    throw std::invalid_argument("Measure: duplicate atom");
        }
        mu.atoms_ = std::move(atoms);
        return mu;
    }

    static Measure uniform_boxes(int nvars, std::vector<WeightedBox> boxes) {
        Measure mu;
        mu.nvars_ = require_nvars(nvars);
        mu.kind_ = MeasureKind::uniform_boxes;
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            if (boxes[i].cube.dim() != nvars)
                throw std::invalid_argument("Measure: box dimension mismatch");
            if (boxes[i].density <= 0)
                throw std::invalid_argument("Measure: box density must be positive");
            for (std::size_t j = i + 1; j < boxes.size(); ++j)
                if (!disjoint(boxes[i].cube, boxes[j].cube))
                    throw std::invalid_argument("Measure: boxes overlap");
        }
        mu.boxes_ = std::move(boxes);
        return mu;
    }

    int nvars() const { return nvars_; }
    MeasureKind kind() const { return kind_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<WeightedBox>& boxes() const { return boxes_; }

    Rational mass(const DyadicCube& q) const {
        check_dim(q);
        Rational m(0);
        if (kind_ == MeasureKind::atomic) {
            for (const auto& a : atoms_)
                if (q.contains_point(a.point)) m += a.weight;
        } else {
            for (const auto& b : boxes_) {
                auto isect = intersect(b.cube, q);
                if (isect) m += b.density * isect->volume();
            }
        }
        return m;
    }

    Rational total_mass() const {
        Rational m(0);
        if (kind_ == MeasureKind::atomic)
            for (const auto& a : atoms_) m += a.weight;
        else
            for (const auto& b : boxes_) m += b.density * b.cube.volume();
        return m;
    }

private:
    static int require_nvars(int n) {
        if (n < 1) throw std::invalid_argument("Measure: nvars < 1");
        return n;
    }
    void check_dim(const DyadicCube& q) const {
        if (q.dim() != nvars_) throw std::invalid_argument("Measure: cube dimension mismatch");
    }

    int nvars_ = 1;
    MeasureKind kind_ = MeasureKind::atomic;
    std::vector<Atom> atoms_;
    std::vector<WeightedBox> boxes_;
};

namespace detail {

// integral of x^alpha over prod [a_i, b_i): prod (b^(a+1) - a^(a+1)) / (a+1)
template <class T>
T integrate_monomial(const Monomial& m, const DyadicCube& cube) {
    T acc(1);
    for (int i = 0; i < cube.dim(); ++i) {
        int e = m.exp[i];
        T lo = coeff_traits<T>::from_rational(cube.lower(i));
        T hi = coeff_traits<T>::from_rational(cube.upper(i));
        T lo_p(1), hi_p(1);
        for (int k = 0; k <= e; ++k) {
            lo_p *= lo;
            hi_p *= hi;
        }
        acc *= (hi_p - lo_p) / T(e + 1);
    }
    return acc;
}

template <class T>
T integrate_polynomial(const PolynomialT<T>& p, const DyadicCube& cube) {
    T acc(0);
    for (const auto& [m, c] : p.terms()) acc += c * integrate_monomial<T>(m, cube);
    return acc;
}

template <class T>
std::vector<T> point_as(const std::vector<Rational>& p) {
    std::vector<T> out;
    out.reserve(p.size());
    for (const auto& x : p) out.push_back(coeff_traits<T>::from_rational(x));
    return out;
}

// <f, g> over mu, optionally restricted to a cube.
template <class T>
T inner_product_impl(const Measure& mu, const PiecewiseT<T>& f, const PiecewiseT<T>& g,
                     const DyadicCube* q) {
    if (f.nvars() != mu.nvars() || g.nvars() != mu.nvars())
        throw std::invalid_argument("inner_product: dimension mismatch");
    T acc(0);
    if (mu.kind() == MeasureKind::atomic) {
        for (const auto& a : mu.atoms()) {
            if (q && !q->contains_point(a.point)) continue;
            std::vector<T> pt = point_as<T>(a.point);
            T fv = f.evaluate(pt);
            if (coeff_traits<T>::is_zero(fv)) continue;
            T gv = g.evaluate(pt);
            if (coeff_traits<T>::is_zero(gv)) continue;
            acc += coeff_traits<T>::from_rational(a.weight) * fv * gv;
        }
    } else {
        for (const auto& [fc, fp] : f.pieces()) {
            for (const auto& [gc, gp] : g.pieces()) {
                auto fg = intersect(fc, gc);
                if (!fg) continue;
                std::optional<DyadicCube> region = fg;
                if (q) {
                    region = intersect(*region, *q);
                    if (!region) continue;
                }
                PolynomialT<T> prod = fp * gp;
                for (const auto& b : mu.boxes()) {
                    auto cell = intersect(*region, b.cube);
                    if (!cell) continue;
                    acc += coeff_traits<T>::from_rational(b.density) *
                           integrate_polynomial<T>(prod, *cell);
                }
            }
        }
    }
    return acc;
}

} // namespace detail

// <f, g> over the whole space.
template <class T>
T inner_product(const Measure& mu, const PiecewiseT<T>& f, const PiecewiseT<T>& g) {
    return detail::inner_product_impl<T>(mu, f, g, nullptr);
}

// <f, g> over a cube; every piece of f and g must lie inside Q.
template <class T>
T inner_product(const Measure& mu, const DyadicCube& q, const PiecewiseT<T>& f,
                const PiecewiseT<T>& g) {
    if (!f.supported_in(q) || !g.supported_in(q))
        throw std::invalid_argument("inner_product: piece outside cube");
    return detail::inner_product_impl<T>(mu, f, g, &q);
}

template <class T>
T norm_squared(const Measure& mu, const PiecewiseT<T>& f) {
    return inner_product<T>(mu, f, f);
}

} // namespace alpert
