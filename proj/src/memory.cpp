// SPDX-License-Identifier: Apache-2.0
#include "fftntt/memory.hpp"

#include <iomanip>
#include <ostream>
#include <string>

namespace fftntt::memory {

uint32_t bit_reverse(uint32_t x, int bits) {
    uint32_t r = 0;
    for (int i = 0; i < bits; ++i) {
        r = (r << 1) | ((x >> i) & 1u);
    }
    return r;
}

PortConflictError::PortConflictError(uint64_t cycle_, int bank_, bool write_)
    : std::runtime_error("port conflict: second " + std::string(write_ ? "write" : "read") +
                         " to bank " + std::to_string(bank_) + " in cycle " +
                         std::to_string(cycle_)),
      cycle(cycle_),
      bank(bank_),
      write(write_) {}

PortLedger::CycleUse& PortLedger::at(uint64_t cycle) {
    if (cycle >= use_.size()) use_.resize(cycle + 1);
    if (cycle > max_cycle_) max_cycle_ = cycle;
    return use_[cycle];
}

void PortLedger::record_read(uint64_t cycle, int bank) {
    CycleUse& u = at(cycle);
    if (++u.reads[bank] > 1) {
        ++violations_;
        throw PortConflictError(cycle, bank, false);
    }
}

void PortLedger::record_write(uint64_t cycle, int bank) {
    CycleUse& u = at(cycle);
    if (++u.writes[bank] > 1) {
        ++violations_;
        throw PortConflictError(cycle, bank, true);
    }
}

void RomPortLedger::record_read(uint64_t cycle) {
    if (cycle >= reads_.size()) reads_.resize(cycle + 1);
    if (++reads_[cycle] > 2) {
        ++violations_;
        throw std::runtime_error("rom port conflict: more than two reads in cycle " +
                                 std::to_string(cycle));
    }
}

void access(MemoryImage& image, PortLedger& ledger, uint64_t cycle,
            std::span<const WordRead> reads, std::span<uint16_t> read_out,
            std::span<const WordWrite> writes) {
    if (reads.size() != read_out.size()) {
        throw std::invalid_argument("read_out size must match reads");
    }
    for (size_t i = 0; i < reads.size(); ++i) {
        ledger.record_read(cycle, reads[i].bank);
        read_out[i] = image.at(reads[i].bank, reads[i].row);
    }
    for (const WordWrite& w : writes) {
        ledger.record_write(cycle, w.bank);
        image.set(w.bank, w.row, w.value);
    }
}

MemoryImage pack(std::span<const FixedComplex> data) {
    if (data.size() != 512) {
        throw std::invalid_argument("fft image needs 512 complex elements");
    }
    MemoryImage image;
    for (uint32_t i = 0; i < 512; ++i) {
        const auto re = static_cast<uint32_t>(data[i].re.bits);
        const auto im = static_cast<uint32_t>(data[i].im.bits);
        image.set_word(4 * i + 0, static_cast<uint16_t>(re));
        image.set_word(4 * i + 1, static_cast<uint16_t>(re >> 16));
        image.set_word(4 * i + 2, static_cast<uint16_t>(im));
        image.set_word(4 * i + 3, static_cast<uint16_t>(im >> 16));
    }
    return image;
}

MemoryImage pack(Mode mode, std::span<const uint32_t> coeffs,
                 const modring::ModulusConfig& cfg) {
    if (mode == Mode::Fft) {
        throw std::invalid_argument("residue packing is for the NTT modes");
    }
    if (coeffs.size() != 256) {
        throw std::invalid_argument("ntt image needs 256 coefficients");
    }
    MemoryImage image;
    for (uint32_t i = 0; i < 256; ++i) {
        if (coeffs[i] >= cfg.q) {
            throw std::invalid_argument("coefficient " + std::to_string(i) + " = " +
                                        std::to_string(coeffs[i]) + " not reduced");
        }
        if (mode == Mode::MlDsa) {
            image.set_word(2 * i + 0, static_cast<uint16_t>(coeffs[i]));
            image.set_word(2 * i + 1, static_cast<uint16_t>(coeffs[i] >> 16));
        } else {
            image.set_word(i, static_cast<uint16_t>(coeffs[i]));
        }
    }
    return image;
}

MemoryImage bit_reverse_load(std::span<const FixedComplex> data) {
    if (data.size() != 512) {
        throw std::invalid_argument("fft image needs 512 complex elements");
    }
    std::vector<FixedComplex> permuted(512);
    for (uint32_t i = 0; i < 512; ++i) {
        permuted[brv9(i)] = data[i];
    }
    return pack(permuted);
}

std::vector<FixedComplex> unpack_fft(const MemoryImage& image) {
    std::vector<FixedComplex> data(512);
    for (uint32_t i = 0; i < 512; ++i) {
        const uint32_t re = static_cast<uint32_t>(image.word(4 * i)) |
                            (static_cast<uint32_t>(image.word(4 * i + 1)) << 16);
        const uint32_t im = static_cast<uint32_t>(image.word(4 * i + 2)) |
                            (static_cast<uint32_t>(image.word(4 * i + 3)) << 16);
        data[i].re.bits = static_cast<int32_t>(re);
        data[i].im.bits = static_cast<int32_t>(im);
    }
    return data;
}

std::vector<uint32_t> unpack_ntt(Mode mode, const MemoryImage& image,
                                 const modring::ModulusConfig& cfg) {
    if (mode == Mode::Fft) {
        throw std::invalid_argument("residue unpacking is for the NTT modes");
    }
    std::vector<uint32_t> coeffs(256);
    for (uint32_t i = 0; i < 256; ++i) {
        uint32_t v;
        if (mode == Mode::MlDsa) {
            v = static_cast<uint32_t>(image.word(2 * i)) |
                (static_cast<uint32_t>(image.word(2 * i + 1)) << 16);
        } else {
            v = image.word(i);
        }
        if (v >= cfg.q) {
            throw std::runtime_error("coefficient " + std::to_string(i) + " = " +
                                     std::to_string(v) +
                                     " has nonzero pad bits or is unreduced");
        }
        coeffs[i] = v;
    }
    return coeffs;
}

void dump(const MemoryImage& image, std::ostream& os) {
    for (int bank = 0; bank < kBanks; ++bank) {
        for (int row = 0; row < kRows; ++row) {
            os << std::hex << std::setw(4) << std::setfill('0') << image.at(bank, row) << '\n';
        }
    }
    os << std::dec;
}

void dump(const TwiddleRom& rom, std::ostream& os, uint32_t rows) {
    for (uint32_t r = 0; r < rows; ++r) {
        os << std::hex << std::setw(8) << std::setfill('0') << rom.read(r) << '\n';
    }
    os << std::dec;
}

}  // namespace fftntt::memory
