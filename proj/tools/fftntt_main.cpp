// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: generate twiddle ROM images, run transforms on
// input files, verify runs against the golden oracles, dump golden trace
// vectors, and report cycle counts.

#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fftntt/engine.hpp"
#include "fftntt/io.hpp"
#include "fftntt/memory.hpp"
#include "fftntt/reference.hpp"
#include "fftntt/twiddle.hpp"
#include "fftntt/types.hpp"

namespace fs = std::filesystem;
using namespace fftntt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

Mode parse_mode(const std::string& name) {
    if (name == "fft") return Mode::Fft;
    if (name == "mlkem") return Mode::MlKem;
    if (name == "mldsa") return Mode::MlDsa;
    throw CLI::ValidationError("--mode", "expected fft, mlkem or mldsa");
}

const modring::ModulusConfig& config_for(Mode mode) {
    return mode == Mode::MlKem ? modring::kyber() : modring::dilithium();
}

memory::TwiddleRom rom_for(Mode mode) {
    if (mode == Mode::Fft) {
        return twiddle::serialize_fft_rom(twiddle::gen_fft_twiddles());
    }
    return twiddle::serialize_ntt_rom(twiddle::gen_dilithium_zetas(),
                                      twiddle::gen_kyber_zetas());
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << contents;
}

int cmd_gen_twiddles(const std::string& out_dir) {
    const fs::path dir(out_dir);
    fs::create_directories(dir);

    std::ostringstream fft_hex;
    memory::dump(twiddle::serialize_fft_rom(twiddle::gen_fft_twiddles()), fft_hex, 1024);
    write_file(dir / "fft_rom.hex", fft_hex.str());

    std::ostringstream ntt_hex;
    memory::dump(twiddle::serialize_ntt_rom(twiddle::gen_dilithium_zetas(),
                                            twiddle::gen_kyber_zetas()),
                 ntt_hex, twiddle::kNttRomRows);
    write_file(dir / "ntt_rom.hex", ntt_hex.str());

    std::cout << (dir / "fft_rom.hex").string() << '\n'
              << (dir / "ntt_rom.hex").string() << '\n';
    return kExitOk;
}

struct Input {
    std::vector<FixedComplex> fft;
    std::vector<uint32_t> ntt;
};

Input load_input(Mode mode, const std::string& in_path, uint64_t seed) {
    Input input;
    if (!in_path.empty()) {
        std::ifstream is(in_path);
        if (!is) throw std::runtime_error("cannot open " + in_path);
        if (mode == Mode::Fft) {
            input.fft = io::read_fft_file(is);
        } else {
            input.ntt = io::read_ntt_file(is, config_for(mode));
        }
    } else if (mode == Mode::Fft) {
        input.fft = io::random_fft_input(seed);
    } else {
        input.ntt = io::random_poly(seed, config_for(mode));
    }
    return input;
}

int cmd_run(Mode mode, const std::string& in_path, const std::string& out_path,
            uint64_t seed, bool cycles_only) {
    const Input input = load_input(mode, in_path, seed);
    const memory::TwiddleRom rom = rom_for(mode);

    memory::MemoryImage image = mode == Mode::Fft
                                    ? memory::bit_reverse_load(input.fft)
                                    : memory::pack(mode, input.ntt, config_for(mode));
    const engine::CycleReport report = engine::run(mode, image, rom);

    if (!cycles_only && !out_path.empty()) {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + out_path + " for writing");
        if (mode == Mode::Fft) {
            io::write_fft_file(os, memory::unpack_fft(image));
        } else {
            io::write_ntt_file(os, memory::unpack_ntt(mode, image, config_for(mode)));
        }
    }
    std::cout << "cycles: " << report.total << '\n';
    return kExitOk;
}

int verify_one(Mode mode, uint64_t seed, const std::string& in_path,
               const std::optional<engine::FaultInjection>& fault) {
    const Input input = load_input(mode, in_path, seed);
    const memory::TwiddleRom rom = rom_for(mode);

    reference::GoldenTrace trace =
        mode == Mode::Fft ? reference::golden_trace(input.fft)
                          : reference::golden_trace(mode, input.ntt, config_for(mode));

    memory::MemoryImage image = mode == Mode::Fft
                                    ? memory::bit_reverse_load(input.fft)
                                    : memory::pack(mode, input.ntt, config_for(mode));
    std::vector<memory::MemoryImage> snapshots;
    engine::RunOptions options;
    options.observer = [&snapshots](int, const memory::MemoryImage& img) {
        snapshots.push_back(img);
    };
    options.fault = fault;
    const engine::CycleReport report = engine::run(mode, image, rom, options);

    const reference::CompareReport cmp = reference::stage_compare(snapshots, trace);
    if (!cmp.ok()) {
        const reference::Divergence& d = cmp.divergences.front();
        std::cout << "divergence: seed " << seed << " stage " << d.stage << " bank " << d.bank
                  << " row " << d.row << " expected " << std::hex << d.expected << " actual "
                  << d.actual << std::dec << '\n';
        return kExitMismatch;
    }

    // End-to-end oracle on top of the stage-wise match.
    if (mode == Mode::Fft) {
        std::vector<std::complex<double>> x(512);
        for (size_t i = 0; i < 512; ++i) {
            x[i] = {input.fft[i].re.value(), input.fft[i].im.value()};
        }
        const auto expected = reference::float_fft(x);
        const auto actual = memory::unpack_fft(image);
        for (size_t k = 0; k < 512; ++k) {
            const std::complex<double> got(actual[k].re.value(), actual[k].im.value());
            if (std::abs(got - expected[k]) > 0.032) {
                std::cout << "divergence: seed " << seed << " bin " << k
                          << " exceeds fixed-point error bound\n";
                return kExitMismatch;
            }
        }
    } else {
        const auto expected = reference::naive_ntt(input.ntt, config_for(mode));
        const auto actual = memory::unpack_ntt(mode, image, config_for(mode));
        if (expected != actual) {
            std::cout << "divergence: seed " << seed << " engine output != direct oracle\n";
            return kExitMismatch;
        }
    }

    if (report.port_conflicts != 0) {
        std::cout << "divergence: seed " << seed << " port conflicts recorded\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_verify(Mode mode, uint64_t seed, int count, const std::string& in_path,
               const std::optional<engine::FaultInjection>& fault) {
    for (int i = 0; i < count; ++i) {
        const int rc = verify_one(mode, seed + static_cast<uint64_t>(i), in_path, fault);
        if (rc != kExitOk) return rc;
    }
    std::cout << "verify: mode=" << mode_name(mode) << " seeds=" << count << " ok\n";
    return kExitOk;
}

int cmd_vectors(Mode mode, uint64_t seed, const std::string& in_path,
                const std::string& trace_dir) {
    const Input input = load_input(mode, in_path, seed);
    const reference::GoldenTrace trace =
        mode == Mode::Fft ? reference::golden_trace(input.fft)
                          : reference::golden_trace(mode, input.ntt, config_for(mode));

    const fs::path dir(trace_dir);
    fs::create_directories(dir);
    for (size_t s = 0; s < trace.snapshots.size(); ++s) {
        std::ostringstream hex;
        memory::dump(trace.snapshots[s], hex);
        std::ostringstream name;
        name << "stage" << (s < 10 ? "0" : "") << s << ".hex";
        write_file(dir / name.str(), hex.str());
    }
    std::cout << trace.snapshots.size() << " snapshots written to " << dir.string() << '\n';
    return kExitOk;
}

int cmd_cycles(Mode mode) {
    const engine::CycleReport model = engine::cycle_model(mode);
    std::cout << "mode: " << mode_name(mode) << '\n'
              << "stages: " << model.stages.size() << "  issues/stage: "
              << model.stages.front().issues << "  overhead/stage: "
              << model.stages.front().overhead << '\n'
              << "cycles: " << model.total << '\n';
    return kExitOk;
}

std::optional<engine::FaultInjection> parse_fault(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    engine::FaultInjection f;
    char c1 = 0;
    char c2 = 0;
    char c3 = 0;
    std::istringstream is(spec);
    if (!(is >> f.stage >> c1 >> f.bank >> c2 >> f.row >> c3 >> f.bit) || c1 != ',' ||
        c2 != ',' || c3 != ',') {
        throw CLI::ValidationError("--inject-fault", "expected stage,bank,row,bit");
    }
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unified FFT/NTT accelerator model"};
    app.require_subcommand(1);

    std::string mode_name_arg = "fft";
    std::string in_path;
    std::string out_path;
    std::string out_dir = ".";
    std::string trace_dir = "trace";
    std::string fault_spec;
    uint64_t seed = 0;
    int count = 1;
    bool cycles_only = false;

    CLI::App* gen = app.add_subcommand("gen-twiddles", "write twiddle ROM hex images");
    gen->add_option("--out-dir", out_dir, "output directory");

    CLI::App* run = app.add_subcommand("run", "run one transform");
    run->add_option("--mode", mode_name_arg, "fft | mlkem | mldsa")->required();
    run->add_option("--in", in_path, "input data file");
    run->add_option("--out", out_path, "output data file");
    run->add_option("--seed", seed, "seed for a generated input (when --in is absent)");
    run->add_flag("--cycles-only", cycles_only, "skip writing the output file");

    CLI::App* verify = app.add_subcommand("verify", "stage-wise golden validation");
    verify->add_option("--mode", mode_name_arg, "fft | mlkem | mldsa")->required();
    verify->add_option("--seed", seed, "first seed");
    verify->add_option("--count", count, "number of seeds to sweep");
    verify->add_option("--in", in_path, "verify this input instead of seeded data");
    verify->add_option("--inject-fault", fault_spec,
                       "flip a RAM bit after a stage (stage,bank,row,bit)");

    CLI::App* vectors = app.add_subcommand("vectors", "dump golden trace snapshots");
    vectors->add_option("--mode", mode_name_arg, "fft | mlkem | mldsa")->required();
    vectors->add_option("--seed", seed, "input seed");
    vectors->add_option("--in", in_path, "trace this input instead of seeded data");
    vectors->add_option("--trace-dir", trace_dir, "snapshot output directory");

    CLI::App* cycles = app.add_subcommand("cycles", "print the cycle model");
    cycles->add_option("--mode", mode_name_arg, "fft | mlkem | mldsa")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen_twiddles(out_dir);
        const Mode mode = parse_mode(mode_name_arg);
        if (run->parsed()) return cmd_run(mode, in_path, out_path, seed, cycles_only);
        if (verify->parsed())
            return cmd_verify(mode, seed, count, in_path, parse_fault(fault_spec));
        if (vectors->parsed()) return cmd_vectors(mode, seed, in_path, trace_dir);
        if (cycles->parsed()) return cmd_cycles(mode);
    } catch (const io::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
