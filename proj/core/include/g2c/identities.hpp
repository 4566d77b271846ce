#pragma once

#include "g2c/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace g2c {

struct IdentityCheck {
    std::string name;
    int trials = 0;
    int failures = 0;
    bool passed() const { return failures == 0; }
};

struct IdentityReport {
    std::uint64_t seed = 0;
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
};

// Randomized exact-equality suite over the seven-dimensional exterior
// algebra: cross-product axioms, the 6g(u,v) contraction identity, the
// 2/-1 eigen decomposition of 2-forms, the energy identity, the instanton
// operator identity, d(iota_nu phi0) = phi0, and the boundary-sphere
// inequality sampled at (r,0,...,0).
IdentityReport run_identity_suite(std::uint64_t seed, int trials);

}  // namespace g2c
