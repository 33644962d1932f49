// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "fftntt/modring.hpp"
#include "fftntt/types.hpp"

namespace fftntt::io {

struct FormatError : std::runtime_error {
    FormatError(size_t line_, const std::string& what);
    size_t line;
};

// splitmix64: the fixed 64-bit mixing generator behind every seeded
// input, so test vectors reproduce across implementations.
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
uint64_t splitmix64(uint64_t& state);

// 512 complex samples with |Re|, |Im| <= 1: each component is
// (next() mod 65537) - 32768 as Q16.15 bits.
std::vector<FixedComplex> random_fft_input(uint64_t seed);

// 256 coefficients, each next() mod q.
std::vector<uint32_t> random_poly(uint64_t seed, const modring::ModulusConfig& cfg);

// FFT data files: one element per line, two lowercase 8-digit hex words
// (Re bits, Im bits). NTT data files: one decimal coefficient per line.
std::vector<FixedComplex> read_fft_file(std::istream& is);
void write_fft_file(std::ostream& os, std::span<const FixedComplex> data);

std::vector<uint32_t> read_ntt_file(std::istream& is, const modring::ModulusConfig& cfg);
void write_ntt_file(std::ostream& os, std::span<const uint32_t> coeffs);

}  // namespace fftntt::io
