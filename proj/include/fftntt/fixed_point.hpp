// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "fftntt/types.hpp"

namespace fftntt::fixed_point {

// Activation counters for the shared multiplier pool and the split adders.
// Thread-local so concurrent runs do not interfere.
struct OpCounters {
    uint64_t mul16 = 0;
    uint64_t karatsuba32 = 0;
    uint64_t signed_overflow = 0;
};

const OpCounters& op_counters();
void reset_op_counters();

// 16x16 -> 32 unsigned multiplier primitive. Every wide multiplication in
// the datapath bottoms out here.
uint32_t mul16(uint16_t a, uint16_t b);

// 32x32 -> 64 unsigned product built from exactly three mul16 calls on the
// 16-bit halves plus carry corrections for the two 17-bit middle operands.
uint64_t karatsuba32(uint32_t a, uint32_t b);

// Signed 32x32 -> 64 product: two's-complement conversion to magnitudes
// around the unsigned Karatsuba core, negating when operand signs differ.
int64_t signed_mul32(int32_t a, int32_t b);

struct SplitSum {
    uint32_t bits = 0;
    bool carry = false;     // carry/borrow out of the high half
    bool overflow = false;  // two's-complement signed overflow
};

// 32-bit add/sub composed of two 16-bit halves with carry/borrow
// propagation. Result is bit-identical to a direct 32-bit operation;
// wraps on overflow.
SplitSum add32_split(uint32_t a, uint32_t b);
SplitSum sub32_split(uint32_t a, uint32_t b);

// Renormalize the exact product of a Q16.15 and a Q1.30 operand (45
// fractional bits) back to Q16.15: arithmetic right shift by 30, keeping
// the low 32 result bits. Truncation toward -inf; overflow wraps.
int32_t quantize_product(int64_t p);

}  // namespace fftntt::fixed_point
