// SPDX-License-Identifier: Apache-2.0
#include "fftntt/modring.hpp"

#include <stdexcept>
#include <string>

#include "fftntt/fixed_point.hpp"

namespace fftntt::modring {

const ModulusConfig& kyber() {
    static constexpr ModulusConfig cfg{3329u, 24u, (uint64_t{1} << 24) / 3329u, 12u, "mlkem"};
    return cfg;
}

const ModulusConfig& dilithium() {
    static constexpr ModulusConfig cfg{8380417u, 46u, (uint64_t{1} << 46) / 8380417u, 23u,
                                       "mldsa"};
    return cfg;
}

Residue::Residue(uint32_t v, const ModulusConfig& cfg) : value_(v), config_(&cfg) {
    if (v >= cfg.q) {
        throw std::invalid_argument("residue " + std::to_string(v) + " not reduced mod " +
                                    std::to_string(cfg.q));
    }
}

Residue barrett_reduce(uint64_t x, const ModulusConfig& cfg) {
    if (cfg.width < 32 && x >= (uint64_t{1} << (2 * cfg.width))) {
        throw std::invalid_argument("barrett input exceeds 2^" + std::to_string(2 * cfg.width));
    }

    // x*m needs up to 2*width + width+1 bits; 128-bit covers both fields.
    const uint64_t t =
        static_cast<uint64_t>((static_cast<unsigned __int128>(x) * cfg.m) >> cfg.k);
    if (t >> (cfg.width + 1)) {
        throw std::logic_error("barrett quotient estimate exceeds width+1 bits");
    }

    uint64_t r = x - t * cfg.q;
    if (r >= cfg.q) r -= cfg.q;
    if (r >= cfg.q) r -= cfg.q;
    return Residue(static_cast<uint32_t>(r), cfg);
}

namespace {
void require_same_modulus(const Residue& a, const Residue& b) {
    if (&a.config() != &b.config()) {
        throw std::invalid_argument("modulus mismatch between residues");
    }
}
}  // namespace

Residue mod_add(Residue a, Residue b) {
    require_same_modulus(a, b);
    const ModulusConfig& cfg = a.config();
    uint32_t s = fixed_point::add32_split(a.value(), b.value()).bits;
    if (s >= cfg.q) s -= cfg.q;
    return Residue(s, cfg);
}

Residue mod_sub(Residue a, Residue b) {
    require_same_modulus(a, b);
    const ModulusConfig& cfg = a.config();
    uint32_t s = fixed_point::sub32_split(a.value(), b.value()).bits;
    if (a.value() < b.value()) s = fixed_point::add32_split(s, cfg.q).bits;
    return Residue(s, cfg);
}

}  // namespace fftntt::modring
