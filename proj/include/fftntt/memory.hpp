// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "fftntt/modring.hpp"
#include "fftntt/types.hpp"

namespace fftntt::memory {

// Data RAM bank geometry: eight 256 x 16-bit true-dual-port memories.
// Word w lives in bank (w mod 8), row (w div 8). Total capacity is
// exactly the 512-point complex working set (2048 words).
constexpr int kBanks = 8;
constexpr int kRows = 256;
constexpr int kWords = kBanks * kRows;

constexpr int bank_of(uint32_t word) { return static_cast<int>(word % kBanks); }
constexpr int row_of(uint32_t word) { return static_cast<int>(word / kBanks); }

// Reverse the low `bits` bits of x.
uint32_t bit_reverse(uint32_t x, int bits);

// 9-bit address reversal used by the decimation-in-time load.
inline uint32_t brv9(uint32_t x) { return bit_reverse(x, 9); }

struct PortConflictError : std::runtime_error {
    PortConflictError(uint64_t cycle, int bank, bool write);
    uint64_t cycle;
    int bank;
    bool write;
};

// Per-cycle, per-bank access bookkeeping. Port A is dedicated to reads
// and port B to writes, so each bank allows at most one of each per
// cycle; a second access in the same cycle is a hard error.
class PortLedger {
public:
    void record_read(uint64_t cycle, int bank);
    void record_write(uint64_t cycle, int bank);

    uint64_t violations() const { return violations_; }
    uint64_t max_cycle() const { return max_cycle_; }

private:
    struct CycleUse {
        std::array<uint8_t, kBanks> reads{};
        std::array<uint8_t, kBanks> writes{};
    };
    std::vector<CycleUse> use_;
    uint64_t violations_ = 0;
    uint64_t max_cycle_ = 0;

    CycleUse& at(uint64_t cycle);
};

// Dual-port ROM ledger: at most two row reads per cycle.
class RomPortLedger {
public:
    void record_read(uint64_t cycle);
    uint64_t violations() const { return violations_; }

private:
    std::vector<uint8_t> reads_;
    uint64_t violations_ = 0;
};

class MemoryImage {
public:
    uint16_t word(uint32_t w) const { return banks_[bank_of(w)][row_of(w)]; }
    void set_word(uint32_t w, uint16_t v) { banks_[bank_of(w)][row_of(w)] = v; }

    uint16_t at(int bank, int row) const { return banks_[bank][row]; }
    void set(int bank, int row, uint16_t v) { banks_[bank][row] = v; }

    bool operator==(const MemoryImage&) const = default;

private:
    std::array<std::array<uint16_t, kRows>, kBanks> banks_{};
};

struct WordRead {
    int bank;
    int row;
};

struct WordWrite {
    int bank;
    int row;
    uint16_t value;
};

// One cycle of RAM traffic: reads observe pre-write contents, then
// writes commit. All accesses are recorded in the ledger; a port
// conflict throws with cycle/bank diagnostics. read_out.size() must
// equal reads.size().
void access(MemoryImage& image, PortLedger& ledger, uint64_t cycle,
            std::span<const WordRead> reads, std::span<uint16_t> read_out,
            std::span<const WordWrite> writes);

// Per-mode packing.
//
//   FFT     element i -> words 4i..4i+3 (Re lo, Re hi, Im lo, Im hi)
//   ML-DSA  coefficient i -> words 2i, 2i+1 (zero-padded to 32 bits)
//   ML-KEM  coefficient i -> word i (zero-padded to 16 bits)
MemoryImage pack(std::span<const FixedComplex> data);  // 512 elements
MemoryImage pack(Mode mode, std::span<const uint32_t> coeffs,
                 const modring::ModulusConfig& cfg);  // 256 reduced residues

// Stores input element i at packed position brv9(i) so the transform
// output emerges in natural order.
MemoryImage bit_reverse_load(std::span<const FixedComplex> data);

std::vector<FixedComplex> unpack_fft(const MemoryImage& image);
// Verifies that the zero-pad bits are still zero and every value < q.
std::vector<uint32_t> unpack_ntt(Mode mode, const MemoryImage& image,
                                 const modring::ModulusConfig& cfg);

// 1024 x 32-bit dual-port read-only memory holding twiddle factors.
// Contents are fixed at construction; the write port is tied off.
class TwiddleRom {
public:
    enum class Layout { Fft, Ntt };

    TwiddleRom(Layout layout, std::array<uint32_t, 1024> rows)
        : layout_(layout), rows_(rows) {}

    Layout layout() const { return layout_; }
    uint32_t read(uint32_t row) const { return rows_.at(row); }
    void write(uint32_t, uint32_t) {
        throw std::logic_error("twiddle rom is read-only after initialization");
    }

private:
    Layout layout_;
    std::array<uint32_t, 1024> rows_;
};

// Hex dump formats: data images are one 16-bit word per line (lowercase,
// 4 digits) in bank-major then row order; ROM dumps are 8 hex digits per
// line in row order.
void dump(const MemoryImage& image, std::ostream& os);
void dump(const TwiddleRom& rom, std::ostream& os, uint32_t rows);

}  // namespace fftntt::memory
