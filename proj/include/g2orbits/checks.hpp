#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "g2orbits/octonion.hpp"

namespace g2orbits {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Octonion with coordinates p/q, |p| <= max_abs, 1 <= q <= max_den.
Octonion random_octonion(std::mt19937_64& rng, long max_abs = 9, long max_den = 5);

/// The self-check behind `g2orbits check`: algebra laws, derivation algebra,
/// root system, fixed subalgebras, named classifications and a small census.
std::vector<CheckResult> run_invariant_checks(std::uint64_t seed = 20261019);

}  // namespace g2orbits
