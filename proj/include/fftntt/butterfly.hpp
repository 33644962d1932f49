// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "fftntt/modring.hpp"
#include "fftntt/types.hpp"

namespace fftntt::butterfly {

// The unified butterfly unit is pipelined; results of an issue at cycle t
// are available at cycle t + kPipelineDepth. Depth is timing metadata
// only, the arithmetic itself is modeled atomically per issue.
constexpr int kPipelineDepth = 9;

// One issue consumes twelve 16-bit lanes and produces eight. Lane maps:
//
//   FFT     in:  0-3 a (Re lo/hi, Im lo/hi), 4-7 b, 8-11 w (Re lo/hi, Im lo/hi)
//   ML-DSA  in:  0-1 a0, 2-3 b0, 4-5 a1, 6-7 b1, 8-9 zeta0, 10-11 zeta1
//   ML-KEM  in:  0-3 a0..a3, 4-7 b0..b3, 8-11 zeta0..zeta3
//
//   FFT     out: 0-3 u, 4-7 v
//   ML-DSA  out: 0-1 u0, 2-3 u1, 4-5 v0, 6-7 v1
//   ML-KEM  out: 0-3 u0..u3, 4-7 v0..v3
//
// Multi-lane values are little-endian (low half first).
struct LaneBundle {
    std::array<uint16_t, 12> in{};
};

struct OutLanes {
    std::array<uint16_t, 8> out{};
    bool operator==(const OutLanes&) const = default;
};

// Cooley-Tukey FFT butterfly (a + w*b, a - w*b) on Q16.15 operands with a
// Q1.30 twiddle. Exactly four signed 32-bit products, each renormalized
// with quantize_product, combined on the split adders. Overflow wraps.
std::pair<FixedComplex, FixedComplex> fft_butterfly(FixedComplex a, FixedComplex b,
                                                    TwiddleComplex w);

// (a + zeta*b mod q, a - zeta*b mod q) for q = 3329. The 12-bit product
// rides a single 16-bit multiplier on zero-padded operands.
std::pair<modring::Residue, modring::Residue> kem_butterfly(modring::Residue a,
                                                            modring::Residue b,
                                                            modring::Residue zeta);

// Same form for q = 8380417; 23-bit operands zero-padded to 32 bits ride
// the Karatsuba path.
std::pair<modring::Residue, modring::Residue> dsa_butterfly(modring::Residue a,
                                                            modring::Residue b,
                                                            modring::Residue zeta);

// Lane-level dispatch: 1 FFT butterfly, 2 ML-DSA butterflies, or 4 ML-KEM
// butterflies per issue. Results are bit-identical to the typed
// butterflies above. Malformed packing (unreduced residue, nonzero pad
// bits) throws std::invalid_argument.
OutLanes issue(Mode mode, const LaneBundle& bundle);

// Lane packing helpers, matching the maps above.
LaneBundle pack_fft_issue(FixedComplex a, FixedComplex b, TwiddleComplex w);
std::pair<FixedComplex, FixedComplex> unpack_fft_result(const OutLanes& lanes);

struct NttOperands {
    uint32_t a = 0;
    uint32_t b = 0;
    uint32_t zeta = 0;
};

LaneBundle pack_dsa_issue(const std::array<NttOperands, 2>& ops);
std::array<std::pair<uint32_t, uint32_t>, 2> unpack_dsa_result(const OutLanes& lanes);

LaneBundle pack_kem_issue(const std::array<NttOperands, 4>& ops);
std::array<std::pair<uint32_t, uint32_t>, 4> unpack_kem_result(const OutLanes& lanes);

}  // namespace fftntt::butterfly
