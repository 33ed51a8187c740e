// Orbit dimensions of rankable functionals on n_gamma, against 2(n_1 + ... + n_k).
//   orbit_dims F4

#include "htower/orbits.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace htower;
    auto type = parse_simple_type(argc > 1 ? argv[1] : "E6");
    if (!type) {
        std::cerr << "not a Cartan label\n";
        return 1;
    }
    NilpotentAlgebra n = build_ngamma(*type);
    RationalSampler rng(default_seed);
    std::cout << type->str() << ": dim n_gamma = " << n.dim() << "\n";
    for (int k = 0; k <= n.tower().height; ++k) {
        RankableSpec spec{k, {}};
        for (int s = 0; s < k; ++s) spec.central_values.push_back(rng.nonzero());
        std::cout << "  k=" << k << "  " << orbit_dimension(n, rankable_functional(n, spec)) << " (formula "
                  << expected_rankable_dimension(n.tower(), k) << ")\n";
    }
}
