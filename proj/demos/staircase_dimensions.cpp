// Component-space dimensions for atoms on a parabola, computed two ways:
// Gram rank against the staircase count of the vanishing ideal.

#include <iostream>

#include "alpert/alpert.hpp"

using namespace alpert;

int main() {
    // atoms (t, t^2) for t = 0..5, all inside [0, 32)^2
    std::vector<Atom> atoms;
    for (int t = 0; t <= 5; ++t)
        atoms.push_back({{Rational(t), Rational(t * t)}, Rational(1)});
    Measure mu = Measure::atomic(2, std::move(atoms));
    DyadicCube q(5, {0, 0});
    MonomialOrder order(OrderKind::grevlex, 2);

    GroebnerBasis ideal = vanishing_ideal(support(mu, q), order);
    std::cout << "vanishing ideal of the sampled parabola:\n";
    for (const auto& g : ideal.generators) std::cout << "  " << g.to_string(order) << "\n";
    std::cout << "hilbert dimension: " << hilbert_dimension(ideal) << "\n\n";

    std::cout << "k  #F^2_k  gram  staircase\n";
    for (int k = 1; k <= 6; ++k) {
        FunctionFamily fam = FunctionFamily::monomials_below_degree(2, k, order);
        std::cout << k << "  " << fam.size() << "  " << component_dimension(mu, q, fam)
                  << "  " << staircase_count(ideal, k) << "\n";
    }
    return 0;
}
