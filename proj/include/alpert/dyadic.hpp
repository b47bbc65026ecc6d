#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "alpert/rational.hpp"

namespace alpert {

namespace detail {
inline std::int64_t floor_div2(std::int64_t c) {
    return c >= 0 ? c / 2 : (c - 1) / 2;
}
} // namespace detail

// Half-open cube prod_i [c_i*2^m, (c_i+1)*2^m) of the standard dyadic grid.
// Stored as integers so boundary membership is exact.
struct DyadicCube {
    int level = 0;
    std::vector<std::int64_t> coords;

    DyadicCube() = default;
    DyadicCube(int level_, std::vector<std::int64_t> coords_)
        : level(level_), coords(std::move(coords_)) {
        if (coords.empty()) throw std::invalid_argument("DyadicCube: empty coords");
    }

    int dim() const { return static_cast<int>(coords.size()); }

    Rational side() const { return pow2(level); }

    Rational lower(int i) const { return Rational(coords[i]) * pow2(level); }
    Rational upper(int i) const { return Rational(coords[i] + 1) * pow2(level); }

    Rational volume() const {
        Rational v(1);
        for (int i = 0; i < dim(); ++i) v *= side();
        return v;
    }

    // Children at level-1 partition the cube. Child j offsets coordinate i by
    // bit i of j, so the first coordinate varies fastest.
    DyadicCube child(unsigned j) const {
        std::vector<std::int64_t> c(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            c[i] = 2 * coords[i] + ((j >> i) & 1u);
        return DyadicCube(level - 1, std::move(c));
    }

    std::vector<DyadicCube> children() const {
        unsigned count = 1u << dim();
        std::vector<DyadicCube> out;
        out.reserve(count);
        for (unsigned j = 0; j < count; ++j) out.push_back(child(j));
        return out;
    }

    DyadicCube parent() const {
        std::vector<std::int64_t> c(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            c[i] = detail::floor_div2(coords[i]);
        return DyadicCube(level + 1, std::move(c));
    }

    // The unique ancestor at the given level (>= this->level).
    DyadicCube ancestor(int target_level) const {
        if (target_level < level)
            throw std::invalid_argument("ancestor: target level below cube level");
        DyadicCube q = *this;
        while (q.level < target_level) q = q.parent();
        return q;
    }

    // Lower faces included, upper faces excluded.
    bool contains_point(std::span<const Rational> p) const {
        if (static_cast<int>(p.size()) != dim())
            throw std::invalid_argument("contains_point: dimension mismatch");
        for (int i = 0; i < dim(); ++i)
            if (p[i] < lower(i) || p[i] >= upper(i)) return false;
        return true;
    }

    bool contains(const DyadicCube& q) const {
        if (q.dim() != dim()) throw std::invalid_argument("contains: dimension mismatch");
        if (q.level > level) return false;
        return q.ancestor(level) == *this;
    }

    bool operator==(const DyadicCube&) const = default;
    auto operator<=>(const DyadicCube&) const = default;
};

// Two grid cubes are either disjoint or nested; returns the smaller one.
inline std::optional<DyadicCube> intersect(const DyadicCube& a, const DyadicCube& b) {
    if (a.level >= b.level) {
        if (a.contains(b)) return b;
    } else {
        if (b.contains(a)) return a;
    }
    return std::nullopt;
}

inline bool disjoint(const DyadicCube& a, const DyadicCube& b) {
    return !intersect(a, b).has_value();
}

// Finite truncation of the grid: all cubes between min_level and max_level
// lying under one of the root cubes. Roots double as top proxies.
struct GridWindow {
    int min_level = 0;
    int max_level = 0;
    std::vector<DyadicCube> roots;

    GridWindow() = default;
    GridWindow(int min_level_, int max_level_, std::vector<DyadicCube> roots_)
        : min_level(min_level_), max_level(max_level_), roots(std::move(roots_)) {
        if (min_level > max_level)
            throw std::invalid_argument("GridWindow: min_level > max_level");
        if (roots.empty()) throw std::invalid_argument("GridWindow: no root cubes");
        for (const auto& r : roots) {
            if (r.level != max_level)
                throw std::invalid_argument("GridWindow: root cube not at max_level");
            if (r.dim() != roots.front().dim())
                throw std::invalid_argument("GridWindow: root dimension mismatch");
        }
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                if (!disjoint(roots[i], roots[j]))
                    throw std::invalid_argument("GridWindow: root cubes overlap");
    }

    int dim() const { return roots.front().dim(); }

    bool contains(const DyadicCube& q) const {
        if (q.dim() != dim()) return false;
        if (q.level < min_level || q.level > max_level) return false;
        DyadicCube top = q.ancestor(max_level);
        return std::find(roots.begin(), roots.end(), top) != roots.end();
    }

    // All window cubes at one level, sorted by coordinates.
    std::vector<DyadicCube> cubes_at_level(int m) const {
        if (m < min_level || m > max_level)
            throw std::invalid_argument("cubes_at_level: level outside window");
        std::vector<DyadicCube> cur = roots;
        for (int lvl = max_level; lvl > m; --lvl) {
            std::vector<DyadicCube> next;
            next.reserve(cur.size() << dim());
            for (const auto& q : cur)
                for (auto& c : q.children()) next.push_back(std::move(c));
            cur = std::move(next);
        }
        std::sort(cur.begin(), cur.end(),
                  [](const DyadicCube& a, const DyadicCube& b) { return a.coords < b.coords; });
        return cur;
    }

    // Coarse-to-fine enumeration of the whole window.
    std::vector<DyadicCube> all_cubes() const {
        std::vector<DyadicCube> out;
        for (int m = max_level; m >= min_level; --m)
            for (auto& q : cubes_at_level(m)) out.push_back(std::move(q));
        return out;
    }
};

// Chain Q = Gamma_0 subset Gamma_1 subset ... up to the containing root.
inline std::vector<DyadicCube> tower(const DyadicCube& q, const GridWindow& window) {
    if (!window.contains(q)) throw std::invalid_argument("tower: cube outside window");
    std::vector<DyadicCube> chain;
    DyadicCube cur = q;
    chain.push_back(cur);
    while (cur.level < window.max_level) {
        cur = cur.parent();
        chain.push_back(cur);
    }
    return chain;
}

} // namespace alpert
