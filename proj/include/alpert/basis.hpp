#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "alpert/dyadic.hpp"
#include "alpert/measure.hpp"
#include "alpert/spaces.hpp"

namespace alpert {

// Per-cube family rule: a default F^n_k degree plus overrides keyed on level
// thresholds or subtrees. Later overrides win. Degree k means U_Q = F^n_k.
struct FamilyOverride {
    std::optional<int> below_level; // applies to cubes with level < below_level
    std::optional<DyadicCube> subtree; // applies to cubes inside this cube
    int degree = 1;
};

class FamilyAssignment {
public:
    FamilyAssignment() = default;
    FamilyAssignment(int nvars, MonomialOrder order, int default_degree,
                     std::vector<FamilyOverride> overrides = {})
        : nvars_(nvars), order_(order), default_degree_(default_degree),
          overrides_(std::move(overrides)) {
        if (order_.nvars != nvars_)
            throw std::invalid_argument("FamilyAssignment: order dimension mismatch");
    }

    int nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    int default_degree() const { return default_degree_; }
    const std::vector<FamilyOverride>& overrides() const { return overrides_; }

    int degree_for(const DyadicCube& q) const {
        int deg = default_degree_;
        for (const auto& o : overrides_) {
            if (o.below_level && q.level >= *o.below_level) continue;
            if (o.subtree && !o.subtree->contains(q)) continue;
            deg = o.degree;
        }
        return deg;
    }

    const FunctionFamily& family_for(const DyadicCube& q) const {
        return family_of_degree(degree_for(q));
    }

    const FunctionFamily& family_of_degree(int deg) const {
        auto it = cache_.find(deg);
        if (it == cache_.end())
            it = cache_.emplace(deg, FunctionFamily::monomials_below_degree(nvars_, deg, order_))
                     .first;
        return it->second;
    }

    // U_T: intersection of U_Q over every window cube inside the root.
    FunctionFamily top_family(const GridWindow& window, const DyadicCube& root) const {
        FunctionFamily fam = family_for(root);
        for (int m = window.max_level; m >= window.min_level; --m)
            for (const auto& q : window.cubes_at_level(m))
                if (root.contains(q)) fam = fam.intersect(family_for(q));
        return fam;
    }

private:
    int nvars_ = 1;
    MonomialOrder order_;
    int default_degree_ = 1;
    std::vector<FamilyOverride> overrides_;
    mutable std::map<int, FunctionFamily> cache_;
};

struct AssignmentViolation {
    DyadicCube cube;
    std::string what;
};

// Theorem hypotheses: 1 in U_Q everywhere, U_Q subset of U_child downward.
inline std::vector<AssignmentViolation> validate_assignment(const FamilyAssignment& assignment,
                                                            const GridWindow& window) {
    std::vector<AssignmentViolation> out;
    const Polynomial one = Polynomial::one(assignment.nvars());
    for (int m = window.max_level; m >= window.min_level; --m) {
        for (const auto& q : window.cubes_at_level(m)) {
            const FunctionFamily& uq = assignment.family_for(q);
            if (!uq.contains(one))
                out.push_back({q, "constant function 1 missing from U_Q"});
            if (m > window.min_level) {
                for (const auto& child : q.children()) {
                    if (!uq.subset_of(assignment.family_for(child)))
                        out.push_back({child, "nesting violated: U_parent not a subset of U_child"});
                }
            }
        }
    }
    return out;
}

enum class EntryKind { top, complement, wavelet };

inline std::string entry_kind_name(EntryKind k) {
    switch (k) {
    case EntryKind::top: return "top";
    case EntryKind::complement: return "complement";
    default: return "wavelet";
    }
}

struct BundleEntry {
    DyadicCube cube;
    EntryKind kind = EntryKind::wavelet;
    FunctionFamily family; // U_T, the grown family, or U_Q respectively
    OrthoBasis basis;
};

// The full Theorem output over a window: top bases on the root cubes,
// complement bases where the family grows from parent to child, and Alpert
// wavelets on every non-leaf cube. Entry order fixes the coefficient order:
// tops by root order, then coarse-to-fine, within a level by coordinates,
// within a cube complements before wavelets.
struct BasisBundle {
    GridWindow window;
    FamilyAssignment assignment;
    std::vector<BundleEntry> entries;

    std::size_t total_size() const {
        std::size_t n = 0;
        for (const auto& e : entries) n += e.basis.size();
        return n;
    }

    const OrthoBasis* basis_on(const DyadicCube& q, EntryKind kind) const {
        for (const auto& e : entries)
            if (e.kind == kind && e.cube == q) return &e.basis;
        return nullptr;
    }
};

inline BasisBundle build(const Measure& mu, const GridWindow& window,
                         const FamilyAssignment& assignment) {
    if (window.dim() != mu.nvars() || assignment.nvars() != mu.nvars())
        throw std::invalid_argument("build: dimension mismatch");
    auto violations = validate_assignment(assignment, window);
    if (!violations.empty())
        throw std::invalid_argument("build: invalid family assignment (" +
                                    violations.front().what + ")");

    BasisBundle bundle{window, assignment, {}};
    const FunctionFamily none = FunctionFamily::empty(mu.nvars());

    // tops: the root is a truncated top, a cube whose parent family is empty
    for (const auto& root : window.roots) {
        FunctionFamily ut = assignment.top_family(window, root);
        OrthoBasis tops = complement_basis(mu, root, none, ut);
        if (tops.size() > 0)
            bundle.entries.push_back({root, EntryKind::top, std::move(ut), std::move(tops)});
    }

    for (int m = window.max_level; m >= window.min_level; --m) {
        for (const auto& q : window.cubes_at_level(m)) {
            if (mu.mass(q) == 0) continue;
            if (m < window.max_level) {
                const FunctionFamily& small = assignment.family_for(q.parent());
                const FunctionFamily& big = assignment.family_for(q);
                OrthoBasis comp = complement_basis(mu, q, small, big);
                if (comp.size() > 0)
                    bundle.entries.push_back({q, EntryKind::complement, big, std::move(comp)});
            }
            if (m > window.min_level) {
                const FunctionFamily& uq = assignment.family_for(q);
                OrthoBasis w = alpert_space_basis(mu, q, uq, uq);
                if (w.size() > 0)
                    bundle.entries.push_back({q, EntryKind::wavelet, uq, std::move(w)});
            }
        }
    }
    return bundle;
}

// Coefficients <f, b_i> for every bundle function, in entry order. The inner
// products are exact; only the division by the norm is floating.
inline std::vector<double> expand(const Measure& mu, const BasisBundle& bundle,
                                  const PiecewisePoly& f) {
    for (const auto& [cube, poly] : f.pieces()) {
        bool inside = false;
        for (const auto& root : bundle.window.roots)
            if (root.contains(cube)) {
                inside = true;
                break;
            }
        if (!inside) throw std::invalid_argument("expand: support outside window");
    }
    std::vector<double> coeffs;
    coeffs.reserve(bundle.total_size());
    for (const auto& e : bundle.entries)
        for (std::size_t i = 0; i < e.basis.size(); ++i) {
            Rational ip = inner_product<Rational>(mu, f, e.basis.exact_pre_normalized[i]);
            coeffs.push_back(to_double(ip) / e.basis.norms[i]);
        }
    return coeffs;
}

inline std::vector<double> expand(const Measure& mu, const BasisBundle& bundle,
                                  const PiecewisePolyD& f) {
    std::vector<double> coeffs;
    coeffs.reserve(bundle.total_size());
    for (const auto& e : bundle.entries)
        for (const auto& b : e.basis.functions)
            coeffs.push_back(inner_product<double>(mu, f, b));
    return coeffs;
}

inline PiecewisePolyD reconstruct(const BasisBundle& bundle, const std::vector<double>& coeffs) {
    if (coeffs.size() != bundle.total_size())
        throw std::invalid_argument("reconstruct: coefficient count mismatch");
    PiecewisePolyD out(bundle.assignment.nvars());
    std::size_t k = 0;
    for (const auto& e : bundle.entries)
        for (const auto& b : e.basis.functions) {
            double c = coeffs[k++];
            if (c != 0.0) out += c * b;
        }
    return out;
}

namespace detail {

// Deterministic small rationals: numerator in [-9, 9], denominator in [1, 4].
inline Rational random_small_rational(std::mt19937_64& rng) {
    std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;
    std::int64_t den = static_cast<std::int64_t>(rng() % 4) + 1;
    return Rational(num, den);
}

// Random element of the resolvable space: per leaf cube, a random combination
// of that leaf's family.
inline PiecewisePoly random_resolvable(const GridWindow& window,
                                       const FamilyAssignment& assignment,
                                       std::mt19937_64& rng) {
    PiecewisePoly f(assignment.nvars());
    for (const auto& leaf : window.cubes_at_level(window.min_level)) {
        Polynomial p(assignment.nvars());
        for (const auto& member : assignment.family_for(leaf).members)
            p += random_small_rational(rng) * member;
        if (!p.is_zero()) f += PiecewisePoly::on_cube(leaf, p);
    }
    return f;
}

// Projection of f onto P_{Q,U} via an on-the-fly orthonormal basis.
inline PiecewisePolyD project_component(const Measure& mu, const DyadicCube& q,
                                        const FunctionFamily& fam, const PiecewisePolyD& f) {
    OrthoBasis onb = complement_basis(mu, q, FunctionFamily::empty(fam.nvars), fam);
    PiecewisePolyD out(f.nvars());
    for (const auto& b : onb.functions) out += inner_product<double>(mu, f, b) * b;
    return out;
}

// Projection onto the wavelet space on one cube (zero if the bundle has none).
inline PiecewisePolyD project_wavelets(const Measure& mu, const BasisBundle& bundle,
                                       const DyadicCube& q, const PiecewisePolyD& f) {
    PiecewisePolyD out(f.nvars());
    const OrthoBasis* w = bundle.basis_on(q, EntryKind::wavelet);
    if (!w) return out;
    for (const auto& b : w->functions) out += inner_product<double>(mu, f, b) * b;
    return out;
}

} // namespace detail

struct CompletenessReport {
    int trials = 0;
    int skipped = 0; // draws that are zero in L^2(mu)
    double max_rel_residual = 0.0;
    double max_parseval_violation = 0.0;
};

// Round-trip residual ||f - reconstruct(expand(f))|| / ||f|| over random
// draws from the resolvable space at min_level, plus the Parseval defect.
inline CompletenessReport verify_complete(const Measure& mu, const BasisBundle& bundle,
                                          int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CompletenessReport rep;
    for (int t = 0; t < trials; ++t) {
        PiecewisePoly f = detail::random_resolvable(bundle.window, bundle.assignment, rng);
        Rational n2 = norm_squared<Rational>(mu, f);
        if (n2 == 0) {
            ++rep.skipped;
            continue;
        }
        ++rep.trials;
        std::vector<double> coeffs = expand(mu, bundle, f);
        PiecewisePolyD diff = f.convert<double>() - reconstruct(bundle, coeffs);
        double fn2 = to_double(n2);
        double rn2 = std::max(0.0, inner_product<double>(mu, diff, diff));
        rep.max_rel_residual = std::max(rep.max_rel_residual, std::sqrt(rn2 / fn2));
        double sum2 = 0.0;
        for (double c : coeffs) sum2 += c * c;
        rep.max_parseval_violation =
            std::max(rep.max_parseval_violation, std::abs(fn2 - sum2) / fn2);
    }
    return rep;
}

// Telescoping identity 1_Q sum_{Q < P <= R} Delta_P = E_{Q,U_Q} - 1_Q E_{R,U_R},
// which requires U_Q = U_R. Returns the max discrepancy over random test
// functions drawn from the resolvable space.
inline double verify_telescoping(const Measure& mu, const BasisBundle& bundle,
                                 const DyadicCube& q, const DyadicCube& r, int trials,
                                 std::uint64_t seed) {
    if (!bundle.window.contains(q) || !bundle.window.contains(r))
        throw std::invalid_argument("verify_telescoping: cube outside window");
    if (q == r || !r.contains(q))
        throw std::invalid_argument("verify_telescoping: need Q strictly inside R");
    const FunctionFamily& uq = bundle.assignment.family_for(q);
    const FunctionFamily& ur = bundle.assignment.family_for(r);
    if (!uq.same_set(ur))
        throw std::domain_error(
            "verify_telescoping: hypothesis violated (U_Q != U_R); see weaker chained identity");

    std::vector<DyadicCube> chain; // P with Q strictly inside P inside R
    for (DyadicCube p = q.parent();; p = p.parent()) {
        chain.push_back(p);
        if (p == r) break;
    }

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        PiecewisePoly fq = detail::random_resolvable(bundle.window, bundle.assignment, rng);
        Rational n2 = norm_squared<Rational>(mu, fq);
        if (n2 == 0) continue;
        PiecewisePolyD f = fq.convert<double>();
        f *= 1.0 / std::sqrt(to_double(n2));

        PiecewisePolyD lhs(f.nvars());
        for (const auto& p : chain) lhs += detail::project_wavelets(mu, bundle, p, f);
        lhs = lhs.restrict_to(q);

        PiecewisePolyD rhs = detail::project_component(mu, q, uq, f) -
                             detail::project_component(mu, r, ur, f).restrict_to(q);

        PiecewisePolyD diff = lhs - rhs;
        worst = std::max(worst, std::sqrt(std::max(0.0, inner_product<double>(mu, diff, diff))));
    }
    return worst;
}

struct OrthogonalityReport {
    double max_violation = 0.0;        // over all checks on normalized functions
    bool exact_pairwise_zero = true;   // rational cross-inner-products all vanish
    bool exact_family_zero = true;     // rational <wavelet, 1_Q p> all vanish
};

// Wavelets against their own and ancestor families, and every bundle pair
// against each other: the rational representatives must be exactly
// orthogonal; the floating check covers the normalization step.
inline OrthogonalityReport verify_orthogonality(const Measure& mu, const BasisBundle& bundle) {
    OrthogonalityReport rep;

    struct Ref {
        const BundleEntry* entry;
        std::size_t index;
    };
    std::vector<Ref> flat;
    for (const auto& e : bundle.entries)
        for (std::size_t i = 0; i < e.basis.size(); ++i) flat.push_back({&e, i});

    for (std::size_t a = 0; a < flat.size(); ++a) {
        const auto& pa = flat[a].entry->basis.exact_pre_normalized[flat[a].index];
        double na = flat[a].entry->basis.norms[flat[a].index];
        for (std::size_t b = a + 1; b < flat.size(); ++b) {
            const auto& pb = flat[b].entry->basis.exact_pre_normalized[flat[b].index];
            double nb = flat[b].entry->basis.norms[flat[b].index];
            Rational ip = inner_product<Rational>(mu, pa, pb);
            if (ip != 0) rep.exact_pairwise_zero = false;
            rep.max_violation = std::max(rep.max_violation, std::abs(to_double(ip)) / (na * nb));
        }
        // norm defect of the floating representative
        double fn = inner_product<double>(mu, flat[a].entry->basis.functions[flat[a].index],
                                          flat[a].entry->basis.functions[flat[a].index]);
        rep.max_violation = std::max(rep.max_violation, std::abs(fn - 1.0));
    }

    for (const auto& e : bundle.entries) {
        if (e.kind != EntryKind::wavelet) continue;
        for (const auto& anc : tower(e.cube, bundle.window)) {
            const FunctionFamily& fam = bundle.assignment.family_for(anc);
            for (const auto& p : fam.members) {
                PiecewisePoly restricted = PiecewisePoly::on_cube(e.cube, p);
                for (std::size_t i = 0; i < e.basis.size(); ++i) {
                    Rational ip = inner_product<Rational>(
                        mu, e.basis.exact_pre_normalized[i], restricted);
                    if (ip != 0) rep.exact_family_zero = false;
                    rep.max_violation = std::max(rep.max_violation,
                                                 std::abs(to_double(ip)) / e.basis.norms[i]);
                }
            }
        }
    }
    return rep;
}

} // namespace alpert
