// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace fftntt::modring {

// Barrett parameters for one prime field. k = 2*width is the minimal
// shift covering the full product range, so the quotient estimate is off
// by at most two.
struct ModulusConfig {
    uint32_t q;      // prime modulus
    unsigned k;      // Barrett shift
    uint64_t m;      // floor(2^k / q)
    unsigned width;  // coefficient bit width
    const char* name;
};

// q = 3329 = 13 * 2^8 + 1, 12-bit coefficients.
const ModulusConfig& kyber();
// q = 8380417 = 2^23 - 2^13 + 1, 23-bit coefficients.
const ModulusConfig& dilithium();

// A coefficient reduced into [0, q) under a fixed modulus configuration.
class Residue {
public:
    Residue() = default;
    // Throws std::invalid_argument unless v < cfg.q.
    Residue(uint32_t v, const ModulusConfig& cfg);

    uint32_t value() const { return value_; }
    const ModulusConfig& config() const { return *config_; }

    bool operator==(const Residue&) const = default;

private:
    uint32_t value_ = 0;
    const ModulusConfig* config_ = &kyber();
};

// x mod q via x - floor((x*m)/2^k)*q plus at most two conditional
// subtractions. Requires x < 2^(2*width); larger inputs are a contract
// error. The quotient estimate is checked to fit in width+1 bits, which
// is what the reduction circuit provides.
Residue barrett_reduce(uint64_t x, const ModulusConfig& cfg);

// (a+b) mod q with one conditional subtraction of q. The main addition
// rides the shared split adder.
Residue mod_add(Residue a, Residue b);

// (a-b) mod q with one conditional addition of q when a < b.
Residue mod_sub(Residue a, Residue b);

}  // namespace fftntt::modring
