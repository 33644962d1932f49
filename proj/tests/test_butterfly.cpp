// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <initializer_list>
#include <stdexcept>

#include <cmath>
#include <complex>

#include "fftntt/butterfly.hpp"
#include "fftntt/fixed_point.hpp"
#include "fftntt/twiddle.hpp"

using namespace fftntt;
using namespace fftntt::butterfly;
using modring::Residue;

namespace {

uint64_t xorshift64(uint64_t& s) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
}

constexpr int32_t kOne15 = 0x8000;          // 1.0 in Q16.15
constexpr int32_t kOne30 = 0x40000000;      // 1.0 in Q1.30

FixedComplex fc(int32_t re, int32_t im) { return {Q16_15{re}, Q16_15{im}}; }

// Random complex inside the unit disk, components quantized to Q16.15.
FixedComplex random_unit_disk(uint64_t& s) {
    for (;;) {
        const double re = static_cast<double>(xorshift64(s) % 65537u) / 32768.0 - 1.0;
        const double im = static_cast<double>(xorshift64(s) % 65537u) / 32768.0 - 1.0;
        if (re * re + im * im <= 1.0) {
            return fc(static_cast<int32_t>(re * 32768.0), static_cast<int32_t>(im * 32768.0));
        }
    }
}

}  // namespace

TEST_CASE("fft_butterfly with identity twiddle is (a+b, a-b)") {
    const TwiddleComplex one{Q1_30{kOne30}, Q1_30{0}};
    const FixedComplex a = fc(3 * kOne15, -2 * kOne15);
    const FixedComplex b = fc(kOne15 / 2, 5 * kOne15);
    const auto [u, v] = fft_butterfly(a, b, one);
    CHECK(u.re.bits == a.re.bits + b.re.bits);
    CHECK(u.im.bits == a.im.bits + b.im.bits);
    CHECK(v.re.bits == a.re.bits - b.re.bits);
    CHECK(v.im.bits == a.im.bits - b.im.bits);
}

TEST_CASE("fft_butterfly with zero b passes a through") {
    const TwiddleComplex w{Q1_30{123456789}, Q1_30{-987654321}};
    const FixedComplex a = fc(0x12345, -0x54321);
    const auto [u, v] = fft_butterfly(a, fc(0, 0), w);
    CHECK(u == a);
    CHECK(v == a);
}

TEST_CASE("fft_butterfly with w = -j") {
    const TwiddleComplex minus_j{Q1_30{0}, Q1_30{static_cast<int32_t>(0xC0000000)}};
    const auto [u, v] = fft_butterfly(fc(0, 0), fc(kOne15, 0), minus_j);
    CHECK(u.re.bits == 0);
    CHECK(u.im.bits == -kOne15);
    CHECK(v.re.bits == 0);
    CHECK(v.im.bits == kOne15);
}

TEST_CASE("fft_butterfly is exact for twiddles in {1, -1, j, -j}") {
    const int32_t patterns[][2] = {{kOne30, 0}, {-kOne30, 0}, {0, kOne30}, {0, -kOne30}};
    uint64_t s = 42;
    for (const auto& p : patterns) {
        const TwiddleComplex w{Q1_30{p[0]}, Q1_30{p[1]}};
        for (int i = 0; i < 1000; ++i) {
            const FixedComplex a = random_unit_disk(s);
            const FixedComplex b = random_unit_disk(s);
            const auto [u, v] = fft_butterfly(a, b, w);
            // w*b is an exact sign/swap of b's components.
            const int32_t wbr = p[0] == kOne30   ? b.re.bits
                                : p[0] == -kOne30 ? -b.re.bits
                                : p[1] == kOne30  ? -b.im.bits
                                                  : b.im.bits;
            const int32_t wbi = p[0] == kOne30   ? b.im.bits
                                : p[0] == -kOne30 ? -b.im.bits
                                : p[1] == kOne30  ? b.re.bits
                                                  : -b.re.bits;
            REQUIRE(u.re.bits == a.re.bits + wbr);
            REQUIRE(u.im.bits == a.im.bits + wbi);
            REQUIRE(v.re.bits == a.re.bits - wbr);
            REQUIRE(v.im.bits == a.im.bits - wbi);
        }
    }
}

TEST_CASE("fft_butterfly energy conservation within quantization tolerance") {
    const auto twiddles = twiddle::gen_fft_twiddles();
    uint64_t s = 7;
    for (int i = 0; i < 5000; ++i) {
        const FixedComplex a = random_unit_disk(s);
        const FixedComplex b = random_unit_disk(s);
        const TwiddleComplex w = twiddles[xorshift64(s) % 512];
        const auto [u, v] = fft_butterfly(a, b, w);

        const auto norm2 = [](const FixedComplex& z) {
            const double re = z.re.value();
            const double im = z.im.value();
            return re * re + im * im;
        };
        const double lhs = norm2(u) + norm2(v);
        const double rhs = 2.0 * (norm2(a) + norm2(b));
        REQUIRE(std::abs(lhs - rhs) <= std::ldexp(1.0, -12));
    }
}

TEST_CASE("kem_butterfly examples") {
    const auto& k = modring::kyber();
    auto r = kem_butterfly(Residue(1, k), Residue(0, k), Residue(17, k));
    CHECK(r.first.value() == 1);
    CHECK(r.second.value() == 1);

    r = kem_butterfly(Residue(0, k), Residue(1, k), Residue(17, k));
    CHECK(r.first.value() == 17);
    CHECK(r.second.value() == 3312);

    r = kem_butterfly(Residue(1, k), Residue(1, k), Residue(3328, k));
    CHECK(r.first.value() == 0);
    CHECK(r.second.value() == 2);
}

TEST_CASE("dsa_butterfly examples") {
    const auto& d = modring::dilithium();
    auto r = dsa_butterfly(Residue(0, d), Residue(1, d), Residue(3073009, d));
    CHECK(r.first.value() == 3073009);
    CHECK(r.second.value() == 5307408);

    r = dsa_butterfly(Residue(123456, d), Residue(0, d), Residue(999, d));
    CHECK(r.first.value() == 123456);
    CHECK(r.second.value() == 123456);

    r = dsa_butterfly(Residue(1, d), Residue(1, d), Residue(8380416, d));
    CHECK(r.first.value() == 0);
    CHECK(r.second.value() == 2);
}

TEST_CASE("ntt butterflies are invertible via inv2") {
    uint64_t s = 99;
    for (const auto* cfg : {&modring::kyber(), &modring::dilithium()}) {
        const uint64_t q = cfg->q;
        const uint64_t inv2 = (q + 1) / 2;
        for (int i = 0; i < 2000; ++i) {
            const uint32_t a = static_cast<uint32_t>(xorshift64(s) % q);
            const uint32_t b = static_cast<uint32_t>(xorshift64(s) % q);
            const uint32_t z = static_cast<uint32_t>(xorshift64(s) % q);
            const auto [u, v] = cfg->q == 3329
                                    ? kem_butterfly(Residue(a, *cfg), Residue(b, *cfg),
                                                    Residue(z, *cfg))
                                    : dsa_butterfly(Residue(a, *cfg), Residue(b, *cfg),
                                                    Residue(z, *cfg));
            const uint64_t a_rec = (u.value() + v.value()) % q * inv2 % q;
            const uint64_t zb_rec = (u.value() + q - v.value()) % q * inv2 % q;
            REQUIRE(a_rec == a);
            REQUIRE(zb_rec == static_cast<uint64_t>(z) * b % q);
        }
    }
}

TEST_CASE("issue matches the typed butterflies bit for bit") {
    uint64_t s = 0xBEEF;

    SUBCASE("fft") {
        const auto twiddles = twiddle::gen_fft_twiddles();
        for (int i = 0; i < 100000; ++i) {
            const FixedComplex a = fc(static_cast<int32_t>(xorshift64(s)),
                                      static_cast<int32_t>(xorshift64(s)));
            const FixedComplex b = fc(static_cast<int32_t>(xorshift64(s)),
                                      static_cast<int32_t>(xorshift64(s)));
            const TwiddleComplex w = twiddles[xorshift64(s) % 512];
            const auto lanes = issue(Mode::Fft, pack_fft_issue(a, b, w));
            const auto [u, v] = unpack_fft_result(lanes);
            const auto direct = fft_butterfly(a, b, w);
            REQUIRE(u == direct.first);
            REQUIRE(v == direct.second);
        }
    }

    SUBCASE("mldsa") {
        const auto& d = modring::dilithium();
        for (int i = 0; i < 100000; ++i) {
            std::array<NttOperands, 2> ops;
            for (auto& op : ops) {
                op = {static_cast<uint32_t>(xorshift64(s) % d.q),
                      static_cast<uint32_t>(xorshift64(s) % d.q),
                      static_cast<uint32_t>(xorshift64(s) % d.q)};
            }
            const auto out = unpack_dsa_result(issue(Mode::MlDsa, pack_dsa_issue(ops)));
            for (int j = 0; j < 2; ++j) {
                const auto direct = dsa_butterfly(Residue(ops[j].a, d), Residue(ops[j].b, d),
                                                  Residue(ops[j].zeta, d));
                REQUIRE(out[j].first == direct.first.value());
                REQUIRE(out[j].second == direct.second.value());
            }
        }
    }

    SUBCASE("mlkem") {
        const auto& k = modring::kyber();
        for (int i = 0; i < 100000; ++i) {
            std::array<NttOperands, 4> ops;
            for (auto& op : ops) {
                op = {static_cast<uint32_t>(xorshift64(s) % k.q),
                      static_cast<uint32_t>(xorshift64(s) % k.q),
                      static_cast<uint32_t>(xorshift64(s) % k.q)};
            }
            const auto out = unpack_kem_result(issue(Mode::MlKem, pack_kem_issue(ops)));
            for (int j = 0; j < 4; ++j) {
                const auto direct = kem_butterfly(Residue(ops[j].a, k), Residue(ops[j].b, k),
                                                  Residue(ops[j].zeta, k));
                REQUIRE(out[j].first == direct.first.value());
                REQUIRE(out[j].second == direct.second.value());
            }
        }
    }
}

TEST_CASE("issue rejects malformed packing") {
    LaneBundle bundle;
    bundle.in[0] = 3329;  // = q, not a reduced coefficient
    CHECK_THROWS_AS(issue(Mode::MlKem, bundle), std::invalid_argument);

    std::array<NttOperands, 2> ops{};
    ops[0].b = 8380417;  // = q
    CHECK_THROWS_AS(issue(Mode::MlDsa, pack_dsa_issue(ops)), std::invalid_argument);
}

TEST_CASE("multiplier activations per issue") {
    using fixed_point::op_counters;
    using fixed_point::reset_op_counters;

    SUBCASE("fft uses four 32-bit multipliers") {
        const auto twiddles = twiddle::gen_fft_twiddles();
        reset_op_counters();
        issue(Mode::Fft, pack_fft_issue(fc(kOne15, 2), fc(3, 4), twiddles[37]));
        CHECK(op_counters().karatsuba32 == 4);
        CHECK(op_counters().mul16 == 12);
    }
    SUBCASE("mldsa uses two of the four karatsuba instances") {
        std::array<NttOperands, 2> ops{};
        ops[0] = {1, 2, 3};
        ops[1] = {4, 5, 6};
        reset_op_counters();
        issue(Mode::MlDsa, pack_dsa_issue(ops));
        CHECK(op_counters().karatsuba32 == 2);
    }
    SUBCASE("mlkem uses only the 16-bit sub-multipliers") {
        std::array<NttOperands, 4> ops{};
        for (int i = 0; i < 4; ++i) ops[i] = {1u, 2u, 17u};
        reset_op_counters();
        issue(Mode::MlKem, pack_kem_issue(ops));
        CHECK(op_counters().karatsuba32 == 0);
        CHECK(op_counters().mul16 == 4);
    }
}
