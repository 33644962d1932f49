// SPDX-License-Identifier: Apache-2.0
#include "fftntt/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace fftntt::reference {

namespace {

uint64_t pow_mod(uint64_t x, uint64_t e, uint64_t q) {
    uint64_t r = 1;
    x %= q;
    while (e) {
        if (e & 1) r = r * x % q;
        x = x * x % q;
        e >>= 1;
    }
    return r;
}

uint32_t reverse_bits(uint32_t x, int bits) {
    uint32_t r = 0;
    for (int i = 0; i < bits; ++i) r = (r << 1) | ((x >> i) & 1u);
    return r;
}

}  // namespace

std::vector<uint32_t> naive_ntt(std::span<const uint32_t> poly,
                                const modring::ModulusConfig& cfg) {
    if (poly.size() != 256) {
        throw std::invalid_argument("naive_ntt expects 256 coefficients");
    }
    const uint64_t q = cfg.q;
    std::vector<uint32_t> out(256);

    if (q == 3329) {
        for (uint32_t i = 0; i < 128; ++i) {
            const uint64_t gamma = pow_mod(17, 2 * reverse_bits(i, 7) + 1, q);
            uint64_t even = 0;
            uint64_t odd = 0;
            uint64_t p = 1;
            for (uint32_t j = 0; j < 128; ++j) {
                even = (even + poly[2 * j] * p) % q;
                odd = (odd + poly[2 * j + 1] * p) % q;
                p = p * gamma % q;
            }
            out[2 * i] = static_cast<uint32_t>(even);
            out[2 * i + 1] = static_cast<uint32_t>(odd);
        }
    } else {
        for (uint32_t j = 0; j < 256; ++j) {
            const uint64_t gamma = pow_mod(1753, 2 * reverse_bits(j, 8) + 1, q);
            uint64_t acc = 0;
            uint64_t p = 1;
            for (uint32_t i = 0; i < 256; ++i) {
                acc = (acc + poly[i] * p) % q;
                p = p * gamma % q;
            }
            out[j] = static_cast<uint32_t>(acc);
        }
    }
    return out;
}

std::vector<std::complex<double>> float_fft(std::span<const std::complex<double>> x) {
    const size_t n = x.size();
    std::vector<std::complex<double>> roots(n);
    for (size_t t = 0; t < n; ++t) {
        const double angle = -2.0 * M_PI * static_cast<double>(t) / static_cast<double>(n);
        roots[t] = {std::cos(angle), std::sin(angle)};
    }
    std::vector<std::complex<double>> out(n);
    for (size_t k = 0; k < n; ++k) {
        std::complex<double> acc = 0.0;
        for (size_t m = 0; m < n; ++m) {
            acc += x[m] * roots[(m * k) % n];
        }
        out[k] = acc;
    }
    return out;
}

namespace {

// Local reimplementation of the datapath's bit-level rules: exact 64-bit
// product, arithmetic shift by 30 truncated to 32 bits, wrapping adds.
int32_t trunc30(int64_t p) {
    return static_cast<int32_t>(static_cast<uint32_t>(static_cast<uint64_t>(p >> 30)));
}

int32_t wrap_add(int32_t a, int32_t b) {
    return static_cast<int32_t>(static_cast<uint32_t>(a) + static_cast<uint32_t>(b));
}

int32_t wrap_sub(int32_t a, int32_t b) {
    return static_cast<int32_t>(static_cast<uint32_t>(a) - static_cast<uint32_t>(b));
}

struct TraceComplex {
    int32_t re = 0;
    int32_t im = 0;
};

// Q1.30 twiddle recomputed here with the same rounding rule (nearest,
// ties away from zero) via the folded quarter wave.
std::pair<int32_t, int32_t> trace_cos_sin30(uint32_t k) {
    k &= 511u;
    if (k > 256) {
        auto [c, s] = trace_cos_sin30(512 - k);
        return {c, -s};
    }
    if (k > 128) {
        auto [c, s] = trace_cos_sin30(256 - k);
        return {-c, s};
    }
    if (k > 64) {
        const long double a = M_PIl * (128 - k) / 256.0L;
        return {static_cast<int32_t>(llroundl(ldexpl(sinl(a), 30))),
                static_cast<int32_t>(llroundl(ldexpl(cosl(a), 30)))};
    }
    const long double a = M_PIl * k / 256.0L;
    return {static_cast<int32_t>(llroundl(ldexpl(cosl(a), 30))),
            static_cast<int32_t>(llroundl(ldexpl(sinl(a), 30)))};
}

memory::MemoryImage pack_trace(const std::vector<TraceComplex>& a) {
    std::vector<FixedComplex> data(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        data[i] = {Q16_15{a[i].re}, Q16_15{a[i].im}};
    }
    return memory::pack(data);
}

}  // namespace

GoldenTrace golden_trace(std::span<const FixedComplex> input) {
    if (input.size() != 512) {
        throw std::invalid_argument("fft trace expects 512 elements");
    }
    GoldenTrace trace{Mode::Fft, {}};

    std::vector<TraceComplex> a(512);
    for (uint32_t i = 0; i < 512; ++i) {
        a[reverse_bits(i, 9)] = {input[i].re.bits, input[i].im.bits};
    }

    for (int s = 0; s < 9; ++s) {
        const uint32_t span = 1u << s;
        for (uint32_t base = 0; base < 512; base += 2 * span) {
            for (uint32_t t = 0; t < span; ++t) {
                auto [wr, wi_pos] = trace_cos_sin30(t << (8 - s));
                const int32_t wi = -wi_pos;
                TraceComplex& p = a[base + t];
                TraceComplex& q = a[base + t + span];

                const int32_t rr = trunc30(static_cast<int64_t>(wr) * q.re);
                const int32_t ii = trunc30(static_cast<int64_t>(wi) * q.im);
                const int32_t ri = trunc30(static_cast<int64_t>(wr) * q.im);
                const int32_t ir = trunc30(static_cast<int64_t>(wi) * q.re);

                const TraceComplex u{wrap_sub(wrap_add(p.re, rr), ii),
                                     wrap_add(wrap_add(p.im, ri), ir)};
                const TraceComplex v{wrap_add(wrap_sub(p.re, rr), ii),
                                     wrap_sub(wrap_sub(p.im, ri), ir)};
                p = u;
                q = v;
            }
        }
        trace.snapshots.push_back(pack_trace(a));
    }
    return trace;
}

GoldenTrace golden_trace(Mode mode, std::span<const uint32_t> poly,
                         const modring::ModulusConfig& cfg) {
    if (mode == Mode::Fft) {
        throw std::invalid_argument("use the FixedComplex overload for the FFT trace");
    }
    if (poly.size() != 256) {
        throw std::invalid_argument("ntt trace expects 256 coefficients");
    }
    GoldenTrace trace{mode, {}};
    const uint64_t q = cfg.q;
    const uint32_t root = mode == Mode::MlKem ? 17 : 1753;
    const int zeta_bits = mode == Mode::MlKem ? 7 : 8;
    const uint32_t min_len = mode == Mode::MlKem ? 2 : 1;

    std::vector<uint32_t> f(poly.begin(), poly.end());
    uint32_t k = 0;
    for (uint32_t len = 128; len >= min_len; len >>= 1) {
        for (uint32_t start = 0; start < 256; start += 2 * len) {
            ++k;
            const uint64_t zeta = pow_mod(root, reverse_bits(k, zeta_bits), q);
            for (uint32_t j = start; j < start + len; ++j) {
                const uint64_t t = zeta * f[j + len] % q;
                f[j + len] = static_cast<uint32_t>((f[j] + q - t) % q);
                f[j] = static_cast<uint32_t>((f[j] + t) % q);
            }
        }
        trace.snapshots.push_back(memory::pack(mode, f, cfg));
    }
    return trace;
}

CompareReport stage_compare(const std::vector<memory::MemoryImage>& run_snapshots,
                            const GoldenTrace& trace) {
    CompareReport report;
    const size_t stages = std::min(run_snapshots.size(), trace.snapshots.size());
    for (size_t s = 0; s < stages; ++s) {
        for (int bank = 0; bank < memory::kBanks; ++bank) {
            for (int row = 0; row < memory::kRows; ++row) {
                const uint16_t expected = trace.snapshots[s].at(bank, row);
                const uint16_t actual = run_snapshots[s].at(bank, row);
                if (expected != actual) {
                    report.divergences.push_back(
                        {static_cast<int>(s), bank, row, expected, actual});
                }
            }
        }
    }
    return report;
}

}  // namespace fftntt::reference
