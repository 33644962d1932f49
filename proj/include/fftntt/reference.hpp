// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fftntt/memory.hpp"
#include "fftntt/modring.hpp"
#include "fftntt/types.hpp"

// Golden oracles, kept deliberately naive and independent of the
// butterfly/engine arithmetic: direct formula evaluation for the NTTs,
// double precision for the FFT, and plain integer operations where the
// trace must be bit-exact.
namespace fftntt::reference {

// Direct O(N^2) transform evaluation. For q = 3329 the polynomial is
// interpreted as 128 pairs (even/odd subsequences evaluated at
// 17^(2 brv7(i)+1)); for q = 8380417 coefficient j of the output is the
// polynomial evaluated at 1753^(2 brv8(j)+1).
std::vector<uint32_t> naive_ntt(std::span<const uint32_t> poly,
                                const modring::ModulusConfig& cfg);

// Direct double-precision DFT, X_k = sum x_m exp(-2 pi j m k / N).
std::vector<std::complex<double>> float_fft(std::span<const std::complex<double>> x);

// Expected memory contents after every stage, computed by a plain
// per-stage butterfly sweep with the same bit-level arithmetic rules but
// naive scheduling.
struct GoldenTrace {
    Mode mode;
    std::vector<memory::MemoryImage> snapshots;
};

GoldenTrace golden_trace(std::span<const FixedComplex> input);  // FFT
GoldenTrace golden_trace(Mode mode, std::span<const uint32_t> poly,
                         const modring::ModulusConfig& cfg);  // NTT

struct Divergence {
    int stage;
    int bank;
    int row;
    uint16_t expected;
    uint16_t actual;
};

struct CompareReport {
    std::vector<Divergence> divergences;
    bool ok() const { return divergences.empty(); }
};

// Row-by-row, bank-by-bank comparison of per-stage snapshots against the
// golden trace. Divergence is a report outcome, not an error.
CompareReport stage_compare(const std::vector<memory::MemoryImage>& run_snapshots,
                            const GoldenTrace& trace);

}  // namespace fftntt::reference
