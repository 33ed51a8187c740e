#pragma once

#include "htower/scalar.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace htower {

constexpr std::uint64_t default_seed = 20240611;

// Seed from HTOWER_SEED when set, else the fixed default.
inline std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("HTOWER_SEED")) return std::stoull(s);
    return default_seed;
}

// Small rationals num/den with |num| <= max_num and 1 <= den <= max_den.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, int max_num = 9, int max_den = 5)
        : gen_(seed), num_(-max_num, max_num), den_(1, max_den) {}

    Q any() { return make_q(num_(gen_), den_(gen_)); }
    Q nonzero() {
        Q q;
        do q = any();
        while (q == 0);
        return q;
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
    std::uniform_int_distribution<int> num_, den_;
};

} // namespace htower
