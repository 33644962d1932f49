// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

#include "fftntt/memory.hpp"
#include "fftntt/types.hpp"

namespace fftntt::twiddle {

// 512 complex Q1.30 twiddles: entry k = round(2^30 cos(2pi k/512))
// - j round(2^30 sin(2pi k/512)), round-to-nearest ties away from zero.
// Evaluated through octant folding so entry(512-k) is the bit-exact
// conjugate of entry(k).
std::array<TwiddleComplex, 512> gen_fft_twiddles();

// 128 twiddles for q = 3329: entry k = 17^brv7(k) mod q (the 7-stage
// pairwise transform ordering).
std::array<uint32_t, 128> gen_kyber_zetas();

// 256 twiddles for q = 8380417: entry k = 1753^brv8(k) mod q; 1753 is a
// primitive 512th root of unity (1753^2 = 3073009).
std::array<uint32_t, 256> gen_dilithium_zetas();

// FFT ROM image: rows 2k, 2k+1 hold Re/Im bits of entry k (1024 rows).
memory::TwiddleRom serialize_fft_rom(const std::array<TwiddleComplex, 512>& table);

// NTT ROM image: rows 0..255 hold the 256 zetas for q = 8380417
// zero-padded to 32 bits; rows 256..319 hold the 128 zetas for q = 3329
// packed two 16-bit halves per row (entry 2r low, entry 2r+1 high).
memory::TwiddleRom serialize_ntt_rom(const std::array<uint32_t, 256>& dsa,
                                     const std::array<uint32_t, 128>& kem);

constexpr uint32_t kNttRomRows = 320;

// x^e mod q by square-and-multiply.
uint64_t mod_pow(uint64_t x, uint64_t e, uint64_t q);

}  // namespace fftntt::twiddle
