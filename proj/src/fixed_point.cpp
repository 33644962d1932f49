// SPDX-License-Identifier: Apache-2.0
#include "fftntt/fixed_point.hpp"

namespace fftntt::fixed_point {

namespace {
thread_local OpCounters g_counters;
}

const OpCounters& op_counters() { return g_counters; }

void reset_op_counters() { g_counters = OpCounters{}; }

uint32_t mul16(uint16_t a, uint16_t b) {
    ++g_counters.mul16;
    return static_cast<uint32_t>(a) * static_cast<uint32_t>(b);
}

uint64_t karatsuba32(uint32_t a, uint32_t b) {
    ++g_counters.karatsuba32;

    const uint16_t a_lo = static_cast<uint16_t>(a);
    const uint16_t a_hi = static_cast<uint16_t>(a >> 16);
    const uint16_t b_lo = static_cast<uint16_t>(b);
    const uint16_t b_hi = static_cast<uint16_t>(b >> 16);

    const uint64_t hh = mul16(a_hi, b_hi);
    const uint64_t ll = mul16(a_lo, b_lo);

    // (a_hi + a_lo) and (b_hi + b_lo) are 17-bit; keep the multiplier at
    // 16x16 and fold each carry bit back in as a shifted conditional add.
    const uint32_t as = static_cast<uint32_t>(a_hi) + a_lo;
    const uint32_t bs = static_cast<uint32_t>(b_hi) + b_lo;
    const uint16_t as_lo = static_cast<uint16_t>(as);
    const uint16_t bs_lo = static_cast<uint16_t>(bs);
    const uint32_t ca = as >> 16;
    const uint32_t cb = bs >> 16;

    uint64_t mid = mul16(as_lo, bs_lo);
    if (ca) mid += static_cast<uint64_t>(bs_lo) << 16;
    if (cb) mid += static_cast<uint64_t>(as_lo) << 16;
    if (ca & cb) mid += uint64_t{1} << 32;

    // mid now holds (a_hi+a_lo)*(b_hi+b_lo); the cross term is mid-hh-ll.
    return (hh << 32) + ((mid - hh - ll) << 16) + ll;
}

int64_t signed_mul32(int32_t a, int32_t b) {
    const bool negative = (a < 0) != (b < 0);
    const uint32_t ua = a < 0 ? ~static_cast<uint32_t>(a) + 1u : static_cast<uint32_t>(a);
    const uint32_t ub = b < 0 ? ~static_cast<uint32_t>(b) + 1u : static_cast<uint32_t>(b);
    uint64_t p = karatsuba32(ua, ub);
    if (negative) p = ~p + 1u;
    return static_cast<int64_t>(p);
}

SplitSum add32_split(uint32_t a, uint32_t b) {
    const uint32_t lo = (a & 0xFFFFu) + (b & 0xFFFFu);
    const uint32_t half_carry = lo >> 16;
    const uint32_t hi = (a >> 16) + (b >> 16) + half_carry;

    SplitSum r;
    r.bits = (hi << 16) | (lo & 0xFFFFu);
    r.carry = (hi >> 16) != 0;
    // Same operand signs producing a different result sign.
    r.overflow = (~(a ^ b) & (a ^ r.bits) & 0x80000000u) != 0;
    if (r.overflow) ++g_counters.signed_overflow;
    return r;
}

SplitSum sub32_split(uint32_t a, uint32_t b) {
    const uint32_t lo = (a & 0xFFFFu) - (b & 0xFFFFu);
    const uint32_t borrow = (lo >> 16) & 1u;
    const uint32_t hi = (a >> 16) - (b >> 16) - borrow;

    SplitSum r;
    r.bits = (hi << 16) | (lo & 0xFFFFu);
    r.carry = (hi >> 16) != 0;
    r.overflow = ((a ^ b) & (a ^ r.bits) & 0x80000000u) != 0;
    if (r.overflow) ++g_counters.signed_overflow;
    return r;
}

int32_t quantize_product(int64_t p) {
    return static_cast<int32_t>(static_cast<uint32_t>(static_cast<uint64_t>(p >> 30)));
}

}  // namespace fftntt::fixed_point
