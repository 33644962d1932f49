// SPDX-License-Identifier: Apache-2.0
#include "fftntt/engine.hpp"

#include <stdexcept>
#include <string>

#include "fftntt/butterfly.hpp"
#include "fftntt/twiddle.hpp"

namespace fftntt::engine {

using memory::MemoryImage;
using memory::PortLedger;
using memory::RomPortLedger;
using memory::TwiddleRom;
using memory::WordRead;
using memory::WordWrite;

int stage_count(Mode mode) {
    switch (mode) {
        case Mode::Fft: return 9;
        case Mode::MlDsa: return 8;
        case Mode::MlKem: return 7;
    }
    return 0;
}

namespace {

StagePlan plan_fft_stage(int s) {
    StagePlan plan{Mode::Fft, s, {}};
    plan.issues.reserve(256);
    const uint32_t span = 1u << s;
    for (uint32_t base = 0; base < 512; base += 2 * span) {
        for (uint32_t t = 0; t < span; ++t) {
            StageIssue issue;
            issue.butterflies = 1;
            issue.pos_a[0] = base + t;
            issue.pos_b[0] = base + t + span;
            issue.zeta[0] = t << (8 - s);
            plan.issues.push_back(issue);
        }
    }
    return plan;
}

StagePlan plan_dsa_stage(int s) {
    StagePlan plan{Mode::MlDsa, s, {}};
    plan.issues.reserve(64);
    const uint32_t len = 128u >> s;
    const auto push = [&plan](uint32_t j1, uint32_t j2, uint32_t len_, uint32_t k1, uint32_t k2) {
        StageIssue issue;
        issue.butterflies = 2;
        issue.pos_a = {j1, j2, 0, 0};
        issue.pos_b = {j1 + len_, j2 + len_, 0, 0};
        issue.zeta = {k1, k2, 0, 0};
        plan.issues.push_back(issue);
    };
    if (len >= 4) {
        for (uint32_t g = 0; g < 128 / len; ++g) {
            const uint32_t start = 2 * len * g;
            const uint32_t k = (1u << s) + g;
            for (uint32_t m = 0; m < len / 4; ++m) {
                for (uint32_t r = 0; r < 2; ++r) {
                    const uint32_t j1 = start + 4 * m + r;
                    push(j1, j1 + 2, len, k, k);
                }
            }
        }
    } else if (len == 2) {
        for (uint32_t g = 0; g < 64; ++g) {
            push(4 * g, 4 * g + 1, 2, 64 + g, 64 + g);
        }
    } else {
        for (uint32_t h = 0; h < 64; ++h) {
            push(4 * h, 4 * h + 2, 1, 128 + 2 * h, 128 + 2 * h + 1);
        }
    }
    return plan;
}

StagePlan plan_kem_stage(int s) {
    StagePlan plan{Mode::MlKem, s, {}};
    plan.issues.reserve(32);
    const uint32_t len = 128u >> s;
    const auto push = [&plan, len](uint32_t b1, uint32_t b2, uint32_t k1, uint32_t k2) {
        // Two pairs of identical butterflies: the even/odd coefficient
        // twins at bases b1 and b2 share their group's zeta.
        StageIssue issue;
        issue.butterflies = 4;
        issue.pos_a = {b1, b1 + 1, b2, b2 + 1};
        issue.pos_b = {b1 + len, b1 + 1 + len, b2 + len, b2 + 1 + len};
        issue.zeta = {k1, k1, k2, k2};
        plan.issues.push_back(issue);
    };
    if (len >= 8) {
        for (uint32_t g = 0; g < 128 / len; ++g) {
            const uint32_t start = 2 * len * g;
            const uint32_t k = (1u << s) + g;
            for (uint32_t u = 0; u < len / 8; ++u) {
                push(start + 8 * u, start + 8 * u + 4, k, k);
                push(start + 8 * u + 2, start + 8 * u + 6, k, k);
            }
        }
    } else if (len == 4) {
        for (uint32_t g = 0; g < 32; ++g) {
            push(8 * g, 8 * g + 2, 32 + g, 32 + g);
        }
    } else {
        for (uint32_t h = 0; h < 32; ++h) {
            push(8 * h, 8 * h + 4, 64 + 2 * h, 64 + 2 * h + 1);
        }
    }
    return plan;
}

// Words holding one element position for the mode: 4 for FFT complexes,
// 2 for 32-bit ML-DSA coefficients, 1 for 16-bit ML-KEM coefficients.
int words_per_element(Mode mode) {
    switch (mode) {
        case Mode::Fft: return 4;
        case Mode::MlDsa: return 2;
        case Mode::MlKem: return 1;
    }
    return 0;
}

struct IssueWords {
    std::array<WordRead, 4> reads_a{};
    std::array<WordRead, 4> reads_b{};
    int count = 0;  // words per operand group, always 4 here
};

IssueWords operand_words(Mode mode, const StageIssue& issue) {
    IssueWords w;
    const int wpe = words_per_element(mode);
    int n = 0;
    for (int i = 0; i < issue.butterflies; ++i) {
        for (int j = 0; j < wpe; ++j) {
            const uint32_t wa = issue.pos_a[i] * wpe + j;
            const uint32_t wb = issue.pos_b[i] * wpe + j;
            w.reads_a[n] = {memory::bank_of(wa), memory::row_of(wa)};
            w.reads_b[n] = {memory::bank_of(wb), memory::row_of(wb)};
            ++n;
        }
    }
    w.count = n;
    return w;
}

struct RomFetch {
    std::array<uint32_t, 2> rows{};
    int count = 0;
};

RomFetch rom_rows(Mode mode, const StageIssue& issue) {
    RomFetch f;
    const auto add_row = [&f](uint32_t row) {
        for (int i = 0; i < f.count; ++i) {
            if (f.rows[i] == row) return;
        }
        f.rows[f.count++] = row;
    };
    switch (mode) {
        case Mode::Fft:
            add_row(2 * issue.zeta[0]);
            add_row(2 * issue.zeta[0] + 1);
            break;
        case Mode::MlDsa:
            for (int i = 0; i < issue.butterflies; ++i) add_row(issue.zeta[i]);
            break;
        case Mode::MlKem:
            for (int i = 0; i < issue.butterflies; ++i) add_row(256 + issue.zeta[i] / 2);
            break;
    }
    return f;
}

// Per-issue timing inside a stage starting at cycle t0:
//   t0+2+n  read first operands (and the twiddle ROM rows)
//   t0+3+n  read second operands
//   t0+4+n  enter the 9-stage pipeline
//   t0+13+n write sum outputs
//   t0+14+n write difference outputs
// The first operands of issue n share each read cycle with the second
// operands of issue n-1, and likewise for writes, so a stage with I
// issues drains completely in I + 14 cycles.
constexpr uint64_t kReadAOffset = 2;
constexpr uint64_t kReadBOffset = 3;
constexpr uint64_t kWriteUOffset = 2 + 2 + butterfly::kPipelineDepth;
constexpr uint64_t kWriteVOffset = kWriteUOffset + 1;

uint64_t run_stage(Mode mode, const StagePlan& plan, MemoryImage& image, const TwiddleRom& rom,
                   PortLedger& ledger, RomPortLedger& rom_ledger, uint64_t t0) {
    const int wpe = words_per_element(mode);
    uint64_t last_cycle = t0;

    for (size_t n = 0; n < plan.issues.size(); ++n) {
        const StageIssue& issue = plan.issues[n];
        const IssueWords words = operand_words(mode, issue);

        const uint64_t read_a_cycle = t0 + kReadAOffset + n;
        const uint64_t read_b_cycle = t0 + kReadBOffset + n;
        const uint64_t write_u_cycle = t0 + kWriteUOffset + n;
        const uint64_t write_v_cycle = t0 + kWriteVOffset + n;

        const RomFetch rom_fetch = rom_rows(mode, issue);
        std::array<uint32_t, 2> rom_words{};
        for (int i = 0; i < rom_fetch.count; ++i) {
            rom_ledger.record_read(read_a_cycle);
            rom_words[i] = rom.read(rom_fetch.rows[i]);
        }

        std::array<uint16_t, 4> data_a{};
        std::array<uint16_t, 4> data_b{};
        memory::access(image, ledger, read_a_cycle,
                       std::span(words.reads_a.data(), words.count),
                       std::span(data_a.data(), words.count), {});
        memory::access(image, ledger, read_b_cycle,
                       std::span(words.reads_b.data(), words.count),
                       std::span(data_b.data(), words.count), {});

        butterfly::LaneBundle bundle;
        switch (mode) {
            case Mode::Fft:
                for (int j = 0; j < 4; ++j) {
                    bundle.in[j] = data_a[j];
                    bundle.in[4 + j] = data_b[j];
                }
                bundle.in[8] = static_cast<uint16_t>(rom_words[0]);
                bundle.in[9] = static_cast<uint16_t>(rom_words[0] >> 16);
                bundle.in[10] = static_cast<uint16_t>(rom_words[1]);
                bundle.in[11] = static_cast<uint16_t>(rom_words[1] >> 16);
                break;
            case Mode::MlDsa:
                for (int i = 0; i < 2; ++i) {
                    bundle.in[4 * i] = data_a[2 * i];
                    bundle.in[4 * i + 1] = data_a[2 * i + 1];
                    bundle.in[4 * i + 2] = data_b[2 * i];
                    bundle.in[4 * i + 3] = data_b[2 * i + 1];
                    // Zeta row for butterfly i within the fetched rows.
                    const uint32_t row = issue.zeta[i];
                    const uint32_t value =
                        rom_fetch.rows[0] == row ? rom_words[0] : rom_words[1];
                    bundle.in[8 + 2 * i] = static_cast<uint16_t>(value);
                    bundle.in[8 + 2 * i + 1] = static_cast<uint16_t>(value >> 16);
                }
                break;
            case Mode::MlKem:
                for (int i = 0; i < 4; ++i) {
                    bundle.in[i] = data_a[i];
                    bundle.in[4 + i] = data_b[i];
                    const uint32_t row = 256 + issue.zeta[i] / 2;
                    const uint32_t value =
                        rom_fetch.rows[0] == row ? rom_words[0] : rom_words[1];
                    bundle.in[8 + i] = static_cast<uint16_t>(
                        (issue.zeta[i] & 1) ? (value >> 16) : (value & 0xFFFFu));
                }
                break;
        }

        const butterfly::OutLanes out = butterfly::issue(mode, bundle);

        // Sum outputs overwrite the first operands, differences the
        // second: in-place dataflow.
        std::array<WordWrite, 4> writes_u{};
        std::array<WordWrite, 4> writes_v{};
        int out_lane = 0;
        for (int i = 0; i < issue.butterflies; ++i) {
            for (int j = 0; j < wpe; ++j) {
                writes_u[out_lane] = {words.reads_a[out_lane].bank, words.reads_a[out_lane].row,
                                      out.out[i * wpe + j]};
                writes_v[out_lane] = {words.reads_b[out_lane].bank, words.reads_b[out_lane].row,
                                      out.out[4 + i * wpe + j]};
                ++out_lane;
            }
        }
        memory::access(image, ledger, write_u_cycle, {}, {},
                       std::span(writes_u.data(), words.count));
        memory::access(image, ledger, write_v_cycle, {}, {},
                       std::span(writes_v.data(), words.count));
        last_cycle = write_v_cycle;
    }

    return last_cycle - t0 + 1;
}

}  // namespace

StagePlan plan_stage(Mode mode, int stage) {
    if (stage < 0 || stage >= stage_count(mode)) {
        throw std::invalid_argument("stage " + std::to_string(stage) + " out of range");
    }
    switch (mode) {
        case Mode::Fft: return plan_fft_stage(stage);
        case Mode::MlDsa: return plan_dsa_stage(stage);
        case Mode::MlKem: return plan_kem_stage(stage);
    }
    throw std::invalid_argument("bad mode");
}

CycleReport cycle_model(Mode mode) {
    CycleReport report;
    report.mode = mode;
    const int butterflies_per_stage = mode == Mode::Fft ? 256 : 128;
    const int issues_per_stage = butterflies_per_stage / parallelism(mode);
    for (int s = 0; s < stage_count(mode); ++s) {
        StageCycles sc;
        sc.issues = issues_per_stage;
        sc.overhead = kStageOverhead;
        sc.cycles = static_cast<uint64_t>(issues_per_stage) + kStageOverhead;
        report.stages.push_back(sc);
        report.total += sc.cycles;
    }
    return report;
}

CycleReport run(Mode mode, MemoryImage& image, const TwiddleRom& rom,
                const RunOptions& options) {
    const auto expected_layout =
        mode == Mode::Fft ? TwiddleRom::Layout::Fft : TwiddleRom::Layout::Ntt;
    if (rom.layout() != expected_layout) {
        throw std::invalid_argument("twiddle rom not serialized for this mode");
    }

    CycleReport report;
    report.mode = mode;
    PortLedger ledger;
    RomPortLedger rom_ledger;
    uint64_t cycle = 0;

    for (int s = 0; s < stage_count(mode); ++s) {
        const StagePlan plan = plan_stage(mode, s);
        const uint64_t duration =
            run_stage(mode, plan, image, rom, ledger, rom_ledger, cycle);

        StageCycles sc;
        sc.issues = static_cast<int>(plan.issues.size());
        sc.overhead = static_cast<int>(duration) - sc.issues;
        sc.cycles = duration;
        report.stages.push_back(sc);
        cycle += duration;

        if (options.fault && options.fault->stage == s) {
            const FaultInjection& f = *options.fault;
            image.set(f.bank, f.row,
                      image.at(f.bank, f.row) ^ static_cast<uint16_t>(1u << f.bit));
        }
        if (options.observer) options.observer(s, image);
    }

    report.total = cycle;
    report.port_conflicts = ledger.violations() + rom_ledger.violations();
    return report;
}

void inverse_ntt(Mode mode, MemoryImage& image) {
    if (mode == Mode::Fft) {
        throw std::invalid_argument("inverse transform is provided for the NTT modes only");
    }
    const auto& cfg = mode == Mode::MlKem ? modring::kyber() : modring::dilithium();
    const uint64_t q = cfg.q;
    std::vector<uint32_t> f = memory::unpack_ntt(mode, image, cfg);

    std::vector<uint32_t> zetas;
    if (mode == Mode::MlKem) {
        const auto t = twiddle::gen_kyber_zetas();
        zetas.assign(t.begin(), t.end());
    } else {
        const auto t = twiddle::gen_dilithium_zetas();
        zetas.assign(t.begin(), t.end());
    }

    // Gentleman-Sande with the forward table consumed in reverse.
    size_t k = zetas.size() - 1;
    for (uint32_t len = mode == Mode::MlKem ? 2 : 1; len <= 128; len <<= 1) {
        for (uint32_t start = 0; start < 256; start += 2 * len) {
            const uint64_t z = zetas[k--];
            for (uint32_t j = start; j < start + len; ++j) {
                const uint64_t t = f[j];
                f[j] = static_cast<uint32_t>((t + f[j + len]) % q);
                f[j + len] = static_cast<uint32_t>((f[j + len] + q - t) % q * z % q);
            }
        }
    }

    // Scale by N^-1 mod q (128^-1 for the pairwise transform, 256^-1
    // otherwise).
    const uint64_t n_inv = twiddle::mod_pow(mode == Mode::MlKem ? 128 : 256, q - 2, q);
    for (uint32_t& v : f) {
        v = static_cast<uint32_t>(v * n_inv % q);
    }

    image = memory::pack(mode, f, cfg);
}

}  // namespace fftntt::engine
