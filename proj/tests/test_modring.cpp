// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <initializer_list>
#include <stdexcept>

#include <cstdint>

#include "fftntt/modring.hpp"

using namespace fftntt::modring;

namespace {

uint64_t xorshift64(uint64_t& s) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
}

}  // namespace

TEST_CASE("modulus configurations") {
    const ModulusConfig& k = kyber();
    CHECK(k.q == 3329);
    CHECK(k.width == 12);
    CHECK(k.k == 24);
    CHECK(k.m == 5039);
    CHECK(k.m == (uint64_t{1} << 24) / 3329);

    const ModulusConfig& d = dilithium();
    CHECK(d.q == 8380417);
    CHECK(d.q == (uint32_t{1} << 23) - (1u << 13) + 1);
    CHECK(d.width == 23);
    CHECK(d.k == 46);
    CHECK(d.m == (uint64_t{1} << 46) / 8380417);

    for (const ModulusConfig* cfg : {&k, &d}) {
        const auto pow2k = static_cast<unsigned __int128>(1) << cfg->k;
        CHECK(static_cast<unsigned __int128>(cfg->m) * cfg->q <= pow2k);
        CHECK(pow2k < static_cast<unsigned __int128>(cfg->m + 1) * cfg->q);
    }
}

TEST_CASE("barrett_reduce examples") {
    CHECK(barrett_reduce(0, kyber()).value() == 0);
    // (q-1)^2 mod q = 1
    CHECK(barrett_reduce(3328ull * 3328ull, kyber()).value() == 1);
    // product below q passes through; 1753^2 = 3073009
    CHECK(barrett_reduce(1753ull * 1753ull, dilithium()).value() == 3073009);
    CHECK_THROWS_AS(barrett_reduce(uint64_t{1} << 24, kyber()), std::invalid_argument);
}

TEST_CASE("barrett_reduce exhaustive for q=3329") {
    const ModulusConfig& cfg = kyber();
    for (uint64_t x = 0; x < (uint64_t{1} << 24); ++x) {
        if (barrett_reduce(x, cfg).value() != x % 3329) {
            REQUIRE(barrett_reduce(x, cfg).value() == x % 3329);
        }
    }
}

TEST_CASE("barrett_reduce randomized for q=8380417") {
    const ModulusConfig& cfg = dilithium();
    const uint64_t q = cfg.q;
    for (uint64_t x : {uint64_t{0}, q - 1, q, q + 1, (q - 1) * (q - 1),
                       (uint64_t{1} << 46) - 1}) {
        REQUIRE(barrett_reduce(x, cfg).value() == x % q);
    }
    uint64_t s = 0xABCDEF0123456789ull;
    for (int i = 0; i < 1000000; ++i) {
        const uint64_t x = xorshift64(s) & ((uint64_t{1} << 46) - 1);
        REQUIRE(barrett_reduce(x, cfg).value() == x % q);
    }
}

TEST_CASE("mod_add / mod_sub") {
    const ModulusConfig& k = kyber();
    const ModulusConfig& d = dilithium();

    CHECK(mod_add(Residue(3328, k), Residue(2, k)).value() == 1);
    CHECK(mod_add(Residue(0, k), Residue(0, k)).value() == 0);
    CHECK(mod_add(Residue(8380416, d), Residue(1, d)).value() == 0);

    CHECK(mod_sub(Residue(0, k), Residue(1, k)).value() == 3328);
    CHECK(mod_sub(Residue(0, d), Residue(3073009, d)).value() == 5307408);

    CHECK_THROWS_AS(mod_add(Residue(1, k), Residue(1, d)), std::invalid_argument);
    CHECK_THROWS_AS(Residue(3329, k), std::invalid_argument);

    uint64_t s = 0x1122334455667788ull;
    for (int i = 0; i < 10000; ++i) {
        for (const ModulusConfig* cfg : {&k, &d}) {
            const Residue a(static_cast<uint32_t>(xorshift64(s) % cfg->q), *cfg);
            const Residue b(static_cast<uint32_t>(xorshift64(s) % cfg->q), *cfg);
            REQUIRE(mod_add(a, b).value() < cfg->q);
            REQUIRE(mod_sub(a, b).value() < cfg->q);
            REQUIRE(mod_sub(a, a).value() == 0);
            // a + (0 - a) = 0
            REQUIRE(mod_add(a, mod_sub(Residue(0, *cfg), a)).value() == 0);
        }
    }
}
