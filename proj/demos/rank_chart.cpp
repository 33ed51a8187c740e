// New rank to old rank for SO(p,q).
//   rank_chart 6 6

#include "htower/classical.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace htower;
    int p = argc > 2 ? std::atoi(argv[1]) : 5, q = argc > 2 ? std::atoi(argv[2]) : 11;
    RationalSampler rng(default_seed);
    try {
        std::cout << rank_chart(make_so(p, q), rng).to_text();
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
