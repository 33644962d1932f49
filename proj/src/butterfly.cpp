// SPDX-License-Identifier: Apache-2.0
#include "fftntt/butterfly.hpp"

#include <stdexcept>
#include <string>

#include "fftntt/fixed_point.hpp"

namespace fftntt::butterfly {

using fixed_point::add32_split;
using fixed_point::karatsuba32;
using fixed_point::mul16;
using fixed_point::quantize_product;
using fixed_point::signed_mul32;
using fixed_point::sub32_split;
using modring::Residue;

std::pair<FixedComplex, FixedComplex> fft_butterfly(FixedComplex a, FixedComplex b,
                                                    TwiddleComplex w) {
    // (a_R +- w_R b_R -+ w_I b_I) + j (a_I +- w_R b_I +- w_I b_R)
    const int32_t rr = quantize_product(signed_mul32(w.re.bits, b.re.bits));
    const int32_t ii = quantize_product(signed_mul32(w.im.bits, b.im.bits));
    const int32_t ri = quantize_product(signed_mul32(w.re.bits, b.im.bits));
    const int32_t ir = quantize_product(signed_mul32(w.im.bits, b.re.bits));

    const auto ar = static_cast<uint32_t>(a.re.bits);
    const auto ai = static_cast<uint32_t>(a.im.bits);

    FixedComplex u;
    FixedComplex v;
    u.re.bits = static_cast<int32_t>(
        sub32_split(add32_split(ar, static_cast<uint32_t>(rr)).bits, static_cast<uint32_t>(ii))
            .bits);
    u.im.bits = static_cast<int32_t>(
        add32_split(add32_split(ai, static_cast<uint32_t>(ri)).bits, static_cast<uint32_t>(ir))
            .bits);
    v.re.bits = static_cast<int32_t>(
        add32_split(sub32_split(ar, static_cast<uint32_t>(rr)).bits, static_cast<uint32_t>(ii))
            .bits);
    v.im.bits = static_cast<int32_t>(
        sub32_split(sub32_split(ai, static_cast<uint32_t>(ri)).bits, static_cast<uint32_t>(ir))
            .bits);
    return {u, v};
}

namespace {
void require_config(const Residue& r, const modring::ModulusConfig& cfg) {
    if (&r.config() != &cfg) {
        throw std::invalid_argument(std::string("operand not configured for ") + cfg.name);
    }
}
}  // namespace

std::pair<Residue, Residue> kem_butterfly(Residue a, Residue b, Residue zeta) {
    const auto& cfg = modring::kyber();
    require_config(a, cfg);
    require_config(b, cfg);
    require_config(zeta, cfg);

    const uint32_t product = mul16(static_cast<uint16_t>(zeta.value()),
                                   static_cast<uint16_t>(b.value()));
    const Residue t = modring::barrett_reduce(product, cfg);
    return {modring::mod_add(a, t), modring::mod_sub(a, t)};
}

std::pair<Residue, Residue> dsa_butterfly(Residue a, Residue b, Residue zeta) {
    const auto& cfg = modring::dilithium();
    require_config(a, cfg);
    require_config(b, cfg);
    require_config(zeta, cfg);

    const uint64_t product = karatsuba32(zeta.value(), b.value());
    const Residue t = modring::barrett_reduce(product, cfg);
    return {modring::mod_add(a, t), modring::mod_sub(a, t)};
}

namespace {

uint32_t lanes32(const LaneBundle& b, int lo) {
    return static_cast<uint32_t>(b.in[lo]) | (static_cast<uint32_t>(b.in[lo + 1]) << 16);
}

void store32(OutLanes& o, int lo, uint32_t v) {
    o.out[lo] = static_cast<uint16_t>(v);
    o.out[lo + 1] = static_cast<uint16_t>(v >> 16);
}

Residue lane_residue(uint32_t v, const modring::ModulusConfig& cfg) {
    if (v >= cfg.q) {
        throw std::invalid_argument("lane value " + std::to_string(v) +
                                    " has nonzero pad bits or exceeds q=" + std::to_string(cfg.q));
    }
    return Residue(v, cfg);
}

}  // namespace

OutLanes issue(Mode mode, const LaneBundle& bundle) {
    OutLanes lanes;
    switch (mode) {
        case Mode::Fft: {
            FixedComplex a{Q16_15{static_cast<int32_t>(lanes32(bundle, 0))},
                           Q16_15{static_cast<int32_t>(lanes32(bundle, 2))}};
            FixedComplex b{Q16_15{static_cast<int32_t>(lanes32(bundle, 4))},
                           Q16_15{static_cast<int32_t>(lanes32(bundle, 6))}};
            TwiddleComplex w{Q1_30{static_cast<int32_t>(lanes32(bundle, 8))},
                             Q1_30{static_cast<int32_t>(lanes32(bundle, 10))}};
            auto [u, v] = fft_butterfly(a, b, w);
            store32(lanes, 0, static_cast<uint32_t>(u.re.bits));
            store32(lanes, 2, static_cast<uint32_t>(u.im.bits));
            store32(lanes, 4, static_cast<uint32_t>(v.re.bits));
            store32(lanes, 6, static_cast<uint32_t>(v.im.bits));
            break;
        }
        case Mode::MlDsa: {
            const auto& cfg = modring::dilithium();
            for (int i = 0; i < 2; ++i) {
                const Residue a = lane_residue(lanes32(bundle, 4 * i), cfg);
                const Residue b = lane_residue(lanes32(bundle, 4 * i + 2), cfg);
                const Residue z = lane_residue(lanes32(bundle, 8 + 2 * i), cfg);
                auto [u, v] = dsa_butterfly(a, b, z);
                store32(lanes, 2 * i, u.value());
                store32(lanes, 4 + 2 * i, v.value());
            }
            break;
        }
        case Mode::MlKem: {
            const auto& cfg = modring::kyber();
            for (int i = 0; i < 4; ++i) {
                const Residue a = lane_residue(bundle.in[i], cfg);
                const Residue b = lane_residue(bundle.in[4 + i], cfg);
                const Residue z = lane_residue(bundle.in[8 + i], cfg);
                auto [u, v] = kem_butterfly(a, b, z);
                lanes.out[i] = static_cast<uint16_t>(u.value());
                lanes.out[4 + i] = static_cast<uint16_t>(v.value());
            }
            break;
        }
    }
    return lanes;
}

LaneBundle pack_fft_issue(FixedComplex a, FixedComplex b, TwiddleComplex w) {
    LaneBundle bundle;
    const auto put = [&bundle](int lo, uint32_t v) {
        bundle.in[lo] = static_cast<uint16_t>(v);
        bundle.in[lo + 1] = static_cast<uint16_t>(v >> 16);
    };
    put(0, static_cast<uint32_t>(a.re.bits));
    put(2, static_cast<uint32_t>(a.im.bits));
    put(4, static_cast<uint32_t>(b.re.bits));
    put(6, static_cast<uint32_t>(b.im.bits));
    put(8, static_cast<uint32_t>(w.re.bits));
    put(10, static_cast<uint32_t>(w.im.bits));
    return bundle;
}

std::pair<FixedComplex, FixedComplex> unpack_fft_result(const OutLanes& lanes) {
    const auto get = [&lanes](int lo) {
        return static_cast<int32_t>(static_cast<uint32_t>(lanes.out[lo]) |
                                    (static_cast<uint32_t>(lanes.out[lo + 1]) << 16));
    };
    return {FixedComplex{Q16_15{get(0)}, Q16_15{get(2)}},
            FixedComplex{Q16_15{get(4)}, Q16_15{get(6)}}};
}

LaneBundle pack_dsa_issue(const std::array<NttOperands, 2>& ops) {
    LaneBundle bundle;
    const auto put = [&bundle](int lo, uint32_t v) {
        bundle.in[lo] = static_cast<uint16_t>(v);
        bundle.in[lo + 1] = static_cast<uint16_t>(v >> 16);
    };
    for (int i = 0; i < 2; ++i) {
        put(4 * i, ops[i].a);
        put(4 * i + 2, ops[i].b);
        put(8 + 2 * i, ops[i].zeta);
    }
    return bundle;
}

std::array<std::pair<uint32_t, uint32_t>, 2> unpack_dsa_result(const OutLanes& lanes) {
    const auto get = [&lanes](int lo) {
        return static_cast<uint32_t>(lanes.out[lo]) |
               (static_cast<uint32_t>(lanes.out[lo + 1]) << 16);
    };
    return {{{get(0), get(4)}, {get(2), get(6)}}};
}

LaneBundle pack_kem_issue(const std::array<NttOperands, 4>& ops) {
    LaneBundle bundle;
    for (int i = 0; i < 4; ++i) {
        bundle.in[i] = static_cast<uint16_t>(ops[i].a);
        bundle.in[4 + i] = static_cast<uint16_t>(ops[i].b);
        bundle.in[8 + i] = static_cast<uint16_t>(ops[i].zeta);
    }
    return bundle;
}

std::array<std::pair<uint32_t, uint32_t>, 4> unpack_kem_result(const OutLanes& lanes) {
    std::array<std::pair<uint32_t, uint32_t>, 4> r;
    for (int i = 0; i < 4; ++i) {
        r[i] = {lanes.out[i], lanes.out[4 + i]};
    }
    return r;
}

}  // namespace fftntt::butterfly
