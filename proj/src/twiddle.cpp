// SPDX-License-Identifier: Apache-2.0
#include "fftntt/twiddle.hpp"

#include <cmath>

namespace fftntt::twiddle {

uint64_t mod_pow(uint64_t x, uint64_t e, uint64_t q) {
    uint64_t r = 1;
    x %= q;
    while (e) {
        if (e & 1) r = r * x % q;
        x = x * x % q;
        e >>= 1;
    }
    return r;
}

namespace {

// cos/sin of pi*t/256 for t in [0, 64], rounded to Q1.30. One folded
// quarter table keeps the symmetries exact at the bit level.
struct QuarterTable {
    std::array<int32_t, 65> cos30;
    std::array<int32_t, 65> sin30;
};

const QuarterTable& quarter_table() {
    static const QuarterTable table = [] {
        QuarterTable t;
        for (int i = 0; i <= 64; ++i) {
            const long double angle = M_PIl * i / 256.0L;
            t.cos30[i] = static_cast<int32_t>(llroundl(ldexpl(cosl(angle), 30)));
            t.sin30[i] = static_cast<int32_t>(llroundl(ldexpl(sinl(angle), 30)));
        }
        return t;
    }();
    return table;
}

// (cos, sin) of 2pi*k/512 in Q1.30 via octant folding.
std::pair<int32_t, int32_t> cos_sin30(uint32_t k) {
    const QuarterTable& t = quarter_table();
    k &= 511u;
    if (k > 256) {
        auto [c, s] = cos_sin30(512 - k);
        return {c, -s};
    }
    if (k > 128) {
        auto [c, s] = cos_sin30(256 - k);
        return {-c, s};
    }
    if (k > 64) {
        return {t.sin30[128 - k], t.cos30[128 - k]};
    }
    return {t.cos30[k], t.sin30[k]};
}

}  // namespace

std::array<TwiddleComplex, 512> gen_fft_twiddles() {
    std::array<TwiddleComplex, 512> table;
    for (uint32_t k = 0; k < 512; ++k) {
        auto [c, s] = cos_sin30(k);
        table[k].re.bits = c;
        table[k].im.bits = -s;
    }
    return table;
}

std::array<uint32_t, 128> gen_kyber_zetas() {
    std::array<uint32_t, 128> table;
    for (uint32_t k = 0; k < 128; ++k) {
        table[k] = static_cast<uint32_t>(mod_pow(17, memory::bit_reverse(k, 7), 3329));
    }
    return table;
}

std::array<uint32_t, 256> gen_dilithium_zetas() {
    std::array<uint32_t, 256> table;
    for (uint32_t k = 0; k < 256; ++k) {
        table[k] = static_cast<uint32_t>(mod_pow(1753, memory::bit_reverse(k, 8), 8380417));
    }
    return table;
}

memory::TwiddleRom serialize_fft_rom(const std::array<TwiddleComplex, 512>& table) {
    std::array<uint32_t, 1024> rows{};
    for (uint32_t k = 0; k < 512; ++k) {
        rows[2 * k] = static_cast<uint32_t>(table[k].re.bits);
        rows[2 * k + 1] = static_cast<uint32_t>(table[k].im.bits);
    }
    return memory::TwiddleRom(memory::TwiddleRom::Layout::Fft, rows);
}

memory::TwiddleRom serialize_ntt_rom(const std::array<uint32_t, 256>& dsa,
                                     const std::array<uint32_t, 128>& kem) {
    std::array<uint32_t, 1024> rows{};
    for (uint32_t k = 0; k < 256; ++k) {
        rows[k] = dsa[k];
    }
    for (uint32_t r = 0; r < 64; ++r) {
        rows[256 + r] = kem[2 * r] | (kem[2 * r + 1] << 16);
    }
    return memory::TwiddleRom(memory::TwiddleRom::Layout::Ntt, rows);
}

}  // namespace fftntt::twiddle
