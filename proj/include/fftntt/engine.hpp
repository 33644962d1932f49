// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fftntt/memory.hpp"
#include "fftntt/types.hpp"

namespace fftntt::engine {

// Stage counts per mode: 9-stage 512-point FFT, 8-stage ML-DSA NTT,
// 7-stage ML-KEM NTT.
int stage_count(Mode mode);

// One butterfly-unit issue: up to four butterflies on element positions
// pos_a[i] (first operand / sum output) and pos_b[i] (twiddled operand /
// difference output), with a twiddle table index per butterfly.
// Positions are complex-element indices in FFT mode and coefficient
// indices in the NTT modes.
struct StageIssue {
    int butterflies = 0;
    std::array<uint32_t, 4> pos_a{};
    std::array<uint32_t, 4> pos_b{};
    std::array<uint32_t, 4> zeta{};
};

struct StagePlan {
    Mode mode;
    int stage;
    std::vector<StageIssue> issues;
};

// Cooley-Tukey pairing for one stage, in an issue order whose reads and
// writes never collide on a bank port. Within a cycle the first operands
// of issue n share the RAM with the second operands of issue n-1, so
// consecutive issues must touch complementary bank sets; the enumeration
// below alternates them by construction.
StagePlan plan_stage(Mode mode, int stage);

struct StageCycles {
    int issues = 0;
    int overhead = 0;  // non-issue cycles: pipeline depth + address/read/write margin
    uint64_t cycles = 0;
};

struct CycleReport {
    Mode mode = Mode::Fft;
    std::vector<StageCycles> stages;
    uint64_t total = 0;
    uint64_t port_conflicts = 0;
};

// Predicted timing: each stage takes issues + 14 cycles, where 14 =
// 9 pipeline + 5 address/read/write margin. Totals: 2430 FFT, 624
// ML-DSA, 322 ML-KEM.
CycleReport cycle_model(Mode mode);
constexpr int kStageOverhead = 14;

// Flip one bit of the data RAM after the given stage completes; used to
// exercise the stage-wise validation path.
struct FaultInjection {
    int stage = 0;
    int bank = 0;
    int row = 0;
    int bit = 0;
};

struct RunOptions {
    // Called with the memory image after each stage completes.
    std::function<void(int stage, const memory::MemoryImage&)> observer;
    std::optional<FaultInjection> fault;
};

// Run one transform in place. The image must be packed for the mode
// (bit-reverse loaded for FFT, natural coefficient order for NTT) and
// the ROM serialized for it. Returns measured cycle accounting; port
// conflicts and malformed packing throw.
CycleReport run(Mode mode, memory::MemoryImage& image, const memory::TwiddleRom& rom,
                const RunOptions& options = {});

// Inverse transform for round-trip testing (Gentleman-Sande schedule
// with the forward twiddle table consumed in reverse, final scaling by
// N^-1 mod q). No cycle accounting; ML-KEM and ML-DSA only.
void inverse_ntt(Mode mode, memory::MemoryImage& image);

}  // namespace fftntt::engine
