// Walks the cascade of a real or p-adic form and prints each step.
//   cascade_walk "su(3,5)"

#include "htower/cascade.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace htower;
    const std::string label = argc > 1 ? argv[1] : "(e8,so(12))";
    try {
        HTower t = cascade_form(lookup_form(label));
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
            const auto& s = t.steps[i];
            std::cout << i + 1 << ". " << s.ambient << "  highest " << root_str(s.beta_tilde) << "  dim h = "
                      << s.layer_dim << "\n";
        }
        std::cout << "height " << t.height << "\n";
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
