// SPDX-License-Identifier: Apache-2.0
#include "fftntt/io.hpp"

#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <string>

namespace fftntt::io {

FormatError::FormatError(size_t line_, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}

uint64_t splitmix64(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::vector<FixedComplex> random_fft_input(uint64_t seed) {
    uint64_t state = seed;
    std::vector<FixedComplex> data(512);
    for (FixedComplex& c : data) {
        c.re.bits = static_cast<int32_t>(splitmix64(state) % 65537u) - 32768;
        c.im.bits = static_cast<int32_t>(splitmix64(state) % 65537u) - 32768;
    }
    return data;
}

std::vector<uint32_t> random_poly(uint64_t seed, const modring::ModulusConfig& cfg) {
    uint64_t state = seed;
    std::vector<uint32_t> poly(256);
    for (uint32_t& v : poly) {
        v = static_cast<uint32_t>(splitmix64(state) % cfg.q);
    }
    return poly;
}

namespace {

bool parse_hex32(const std::string& token, uint32_t& out) {
    if (token.size() != 8) return false;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), out, 16);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

std::vector<FixedComplex> read_fft_file(std::istream& is) {
    std::vector<FixedComplex> data;
    std::string line;
    size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        const size_t sep = line.find(' ');
        if (sep == std::string::npos) {
            throw FormatError(line_no, "expected two hex words");
        }
        uint32_t re = 0;
        uint32_t im = 0;
        if (!parse_hex32(line.substr(0, sep), re) || !parse_hex32(line.substr(sep + 1), im)) {
            throw FormatError(line_no, "malformed hex word");
        }
        data.push_back({Q16_15{static_cast<int32_t>(re)}, Q16_15{static_cast<int32_t>(im)}});
    }
    if (data.size() != 512) {
        throw FormatError(line_no, "expected 512 elements, got " + std::to_string(data.size()));
    }
    return data;
}

void write_fft_file(std::ostream& os, std::span<const FixedComplex> data) {
    for (const FixedComplex& c : data) {
        os << std::hex << std::setfill('0') << std::setw(8)
           << static_cast<uint32_t>(c.re.bits) << ' ' << std::setw(8)
           << static_cast<uint32_t>(c.im.bits) << '\n';
    }
    os << std::dec;
}

std::vector<uint32_t> read_ntt_file(std::istream& is, const modring::ModulusConfig& cfg) {
    std::vector<uint32_t> coeffs;
    std::string line;
    size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        uint32_t v = 0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v, 10);
        if (ec != std::errc{} || ptr != line.data() + line.size()) {
            throw FormatError(line_no, "malformed decimal coefficient");
        }
        if (v >= cfg.q) {
            throw FormatError(line_no, "coefficient " + std::to_string(v) + " >= q");
        }
        coeffs.push_back(v);
    }
    if (coeffs.size() != 256) {
        throw FormatError(line_no,
                          "expected 256 coefficients, got " + std::to_string(coeffs.size()));
    }
    return coeffs;
}

void write_ntt_file(std::ostream& os, std::span<const uint32_t> coeffs) {
    for (uint32_t v : coeffs) {
        os << v << '\n';
    }
}

}  // namespace fftntt::io
