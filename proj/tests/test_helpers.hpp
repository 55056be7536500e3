#pragma once

#include "sierp/rational.hpp"

#include <random>
#include <string>

namespace test_util {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline sierp::Rational random_rational(std::mt19937_64& rng, long bound, bool allow_negative = true) {
    std::uniform_int_distribution<long> dist(1, bound);
    long n = dist(rng);
    long d = dist(rng);
    if (allow_negative && (rng() & 1)) n = -n;
    return sierp::Rational(n, d);
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args);

} // namespace test_util
