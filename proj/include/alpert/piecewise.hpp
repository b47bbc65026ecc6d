#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "alpert/dyadic.hpp"
#include "alpert/polynomial.hpp"

namespace alpert {

namespace detail {
inline bool cube_contains_point(const DyadicCube& cube, const std::vector<Rational>& p) {
    return cube.contains_point(p);
}
inline bool cube_contains_point(const DyadicCube& cube, const std::vector<double>& p) {
    for (int i = 0; i < cube.dim(); ++i)
        if (p[i] < to_double(cube.lower(i)) || p[i] >= to_double(cube.upper(i))) return false;
    return true;
}
} // namespace detail

// Function of the form sum_Q 1_Q * p_Q over pairwise disjoint dyadic cubes.
// Adding functions with nested pieces splits the coarser piece into children
// until all pieces are disjoint, so sums across grid levels stay exact.
template <class T>
class PiecewiseT {
public:
    using Pieces = std::map<DyadicCube, PolynomialT<T>>;

    PiecewiseT() = default;
    explicit PiecewiseT(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("PiecewisePoly: nvars < 1");
    }

    static PiecewiseT zero(int nvars) { return PiecewiseT(nvars); }

    static PiecewiseT on_cube(const DyadicCube& cube, PolynomialT<T> poly) {
        if (cube.dim() != poly.nvars())
            throw std::invalid_argument("PiecewisePoly: cube/polynomial dimension mismatch");
        PiecewiseT f(poly.nvars());
        if (!poly.is_zero()) f.pieces_.emplace(cube, std::move(poly));
        return f;
    }

    static PiecewiseT indicator(const DyadicCube& cube) {
        return on_cube(cube, PolynomialT<T>::one(cube.dim()));
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return pieces_.empty(); }
    const Pieces& pieces() const { return pieces_; }

    // Value at a point; zero outside all pieces.
    T evaluate(const std::vector<T>& point) const {
        for (const auto& [cube, poly] : pieces_)
            if (detail::cube_contains_point(cube, point)) return poly.evaluate(point);
        return T(0);
    }

    PiecewiseT& operator+=(const PiecewiseT& o) {
        check_same(o);
        for (const auto& [cube, poly] : o.pieces_) add_piece(cube, poly);
        return *this;
    }
    PiecewiseT& operator-=(const PiecewiseT& o) {
        check_same(o);
        for (const auto& [cube, poly] : o.pieces_) add_piece(cube, -poly);
        return *this;
    }
    PiecewiseT& operator*=(const T& s) {
        if (detail::coeff_traits<T>::is_zero(s)) {
            pieces_.clear();
            return *this;
        }
        for (auto& [cube, poly] : pieces_) poly *= s;
        return *this;
    }

    friend PiecewiseT operator+(PiecewiseT a, const PiecewiseT& b) { return a += b; }
    friend PiecewiseT operator-(PiecewiseT a, const PiecewiseT& b) { return a -= b; }
    friend PiecewiseT operator*(PiecewiseT a, const T& s) { return a *= s; }
    friend PiecewiseT operator*(const T& s, PiecewiseT a) { return a *= s; }
    friend PiecewiseT operator-(PiecewiseT a) { return a *= T(-1); }

    bool operator==(const PiecewiseT&) const = default;

    // Restriction 1_Q * f.
    PiecewiseT restrict_to(const DyadicCube& q) const {
        PiecewiseT out(nvars_);
        for (const auto& [cube, poly] : pieces_) {
            auto isect = intersect(cube, q);
            if (isect) out.add_piece(*isect, poly);
        }
        return out;
    }

    bool supported_in(const DyadicCube& q) const {
        for (const auto& [cube, poly] : pieces_)
            if (!q.contains(cube)) return false;
        return true;
    }

    template <class U>
    PiecewiseT<U> convert() const {
        PiecewiseT<U> out(nvars_);
        for (const auto& [cube, poly] : pieces_)
            out += PiecewiseT<U>::on_cube(cube, poly.template convert<U>());
        return out;
    }

    void add_piece(const DyadicCube& cube, const PolynomialT<T>& poly) {
        if (cube.dim() != nvars_ || poly.nvars() != nvars_)
            throw std::invalid_argument("add_piece: dimension mismatch");
        if (poly.is_zero()) return;
        // split any nesting between the new cube and existing pieces
        for (auto it = pieces_.begin(); it != pieces_.end(); ++it) {
            if (it->first == cube) {
                it->second += poly;
                if (it->second.is_zero()) pieces_.erase(it);
                return;
            }
            if (it->first.contains(cube)) {
                // push the existing coarse piece down one level, retry
                PolynomialT<T> old = std::move(it->second);
                DyadicCube coarse = it->first;
                pieces_.erase(it);
                for (const auto& c : coarse.children()) pieces_.emplace(c, old);
                add_piece(cube, poly);
                return;
            }
            if (cube.contains(it->first)) {
                // split the new piece one level and recurse
                for (const auto& c : cube.children()) add_piece(c, poly);
                return;
            }
        }
        pieces_.emplace(cube, poly);
    }

private:
    void check_same(const PiecewiseT& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("piecewise: dimension mismatch");
    }

    int nvars_ = 1;
    Pieces pieces_;
};

using PiecewisePoly  = PiecewiseT<Rational>;
using PiecewisePolyD = PiecewiseT<double>;

} // namespace alpert
