// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace fftntt {

// Operating mode of the unified datapath (2-bit selector in hardware).
enum class Mode { Fft, MlKem, MlDsa };

// Butterflies executed per issue: 1 FFT, 2 ML-DSA, 4 ML-KEM.
constexpr int parallelism(Mode m) {
    switch (m) {
        case Mode::Fft: return 1;
        case Mode::MlDsa: return 2;
        case Mode::MlKem: return 4;
    }
    return 0;
}

constexpr const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Fft: return "fft";
        case Mode::MlKem: return "mlkem";
        case Mode::MlDsa: return "mldsa";
    }
    return "?";
}

// Signed 32-bit word in Q16.15: value = bits / 2^15.
// Range [-65536.0, 65536.0 - 2^-15].
struct Q16_15 {
    int32_t bits = 0;

    double value() const { return static_cast<double>(bits) / 32768.0; }
    static Q16_15 from_value(double v) {
        return Q16_15{static_cast<int32_t>(v * 32768.0)};
    }
    bool operator==(const Q16_15&) const = default;
};

// Signed 32-bit word in Q1.30: value = bits / 2^30.
// Range [-2.0, 2.0 - 2^-30]; twiddles satisfy |value| <= 1.
struct Q1_30 {
    int32_t bits = 0;

    double value() const { return static_cast<double>(bits) / 1073741824.0; }
    bool operator==(const Q1_30&) const = default;
};

// Complex value with Q16.15 components (butterfly data operand).
struct FixedComplex {
    Q16_15 re;
    Q16_15 im;
    bool operator==(const FixedComplex&) const = default;
};

// Complex twiddle with Q1.30 components.
struct TwiddleComplex {
    Q1_30 re;
    Q1_30 im;
    bool operator==(const TwiddleComplex&) const = default;
};

}  // namespace fftntt
