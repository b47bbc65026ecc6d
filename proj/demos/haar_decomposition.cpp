// Builds the classical Haar bundle on [0,1) over Lebesgue density and prints
// the expansion coefficients of a step function.

#include <iostream>

#include "alpert/alpert.hpp"

using namespace alpert;

int main() {
    Measure mu = Measure::uniform_boxes(1, {{DyadicCube(0, {0}), Rational(1)}});
    GridWindow window(-2, 0, {DyadicCube(0, {0})});
    MonomialOrder order(OrderKind::grevlex, 1);
    FamilyAssignment haar(1, order, 1); // U_Q = {1} everywhere

    BasisBundle bundle = build(mu, window, haar);
    std::cout << "bundle size: " << bundle.total_size() << "\n";
    for (const auto& e : bundle.entries)
        std::cout << "  " << entry_kind_name(e.kind) << " on level " << e.cube.level
                  << " coords " << e.cube.coords[0] << ": " << e.basis.size()
                  << " function(s)\n";

    // f = 1 on [0, 1/4), -2 on [1/2, 3/4)
    PiecewisePoly f(1);
    f += PiecewisePoly::on_cube(DyadicCube(-2, {0}), Polynomial::constant(1, Rational(1)));
    f += PiecewisePoly::on_cube(DyadicCube(-2, {2}), Polynomial::constant(1, Rational(-2)));

    std::vector<double> coeffs = expand(mu, bundle, f);
    std::cout << "coefficients:";
    for (double c : coeffs) std::cout << " " << c;
    std::cout << "\n";

    PiecewisePolyD g = reconstruct(bundle, coeffs);
    PiecewisePolyD diff = f.convert<double>() - g;
    std::cout << "round-trip residual: " << std::sqrt(inner_product<double>(mu, diff, diff))
              << "\n";
    return 0;
}
