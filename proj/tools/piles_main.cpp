// Command-line surface for counting, listing, sampling, validating and
// decomposing sand/ice pile configurations.
//
// Exit codes: 0 success, 1 malformed input, 2 verification or validation
// failure. Diagnostics go to stderr.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "piles/counting.hpp"
#include "piles/decompose.hpp"
#include "piles/generate.hpp"
#include "piles/genseq.hpp"
#include "piles/ipm.hpp"
#include "piles/oracle.hpp"
#include "piles/sample.hpp"
#include "piles/staircase.hpp"
#include "piles/validity.hpp"

namespace {

using namespace piles;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitFailed = 2;

std::string json_parts(const Configuration& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.columns(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.at(i));
    }
    return out + "]";
}

void print_config_line(const Configuration& c, const std::string& format,
                       std::optional<long long> k) {
    if (format == "json") {
        std::string line = "{\"parts\":" + json_parts(c);
        if (k) {
            const IpmBasis basis = ipm_staircase_width(c, *k);
            line += ",\"basis\":[" + std::to_string(basis.w) + "," +
                    std::to_string(basis.l) + "]";
        } else {
            line += ",\"width\":" + std::to_string(staircase_width(c));
        }
        line += "}";
        std::cout << line << "\n";
    } else {
        std::cout << c.to_string() << "\n";
    }
}

int run_count(long long n, std::optional<long long> k) {
    if (k) {
        IpmCountTable table(*k, n);
        std::cout << table.count(n) << "\n";
    } else {
        CountTable table(n);
        std::cout << table.count_spm(n) << "\n";
    }
    return kExitOk;
}

int run_list(long long n, std::optional<long long> k, const std::string& format,
             long long limit) {
    long long printed = 0;
    if (k) {
        struct Done {};
        try {
            ipm_generate(n, *k, [&](const Configuration& c) {
                if (limit >= 0 && printed >= limit) throw Done{};
                print_config_line(c, format, k);
                ++printed;
            });
        } catch (const Done&) {
        }
    } else {
        SpmStream stream(n);
        while (stream.advance()) {
            if (limit >= 0 && printed >= limit) break;
            print_config_line(stream.current(), format, std::nullopt);
            ++printed;
        }
    }
    return kExitOk;
}

int run_random(long long n, std::uint64_t seed, long long count) {
    CountTable table(n);
    SpmSampler sampler(table, seed);
    for (long long i = 0; i < count; ++i) std::cout << sampler.sample(n).to_string() << "\n";
    return kExitOk;
}

int run_validate(const std::string& config, std::optional<long long> k) {
    const Configuration c = Configuration::parse(config);
    const ValidityReport report = k ? is_valid_ipm(c, *k) : is_valid_spm(c);
    if (report.valid) {
        std::cout << "valid\n";
        return kExitOk;
    }
    std::cout << "invalid " << pattern_name(report, k.value_or(1)) << " @ " << report.index
              << "\n";
    return kExitFailed;
}

int run_decompose(const std::string& config, std::optional<long long> k) {
    const Configuration c = Configuration::parse(config);
    if (k) {
        const IpmReducedForm r = ipm_reduce(c, *k);
        const IpmDecomp d = ipm_decompose(r);
        std::string u = "[";
        for (std::size_t i = 0; i < d.u.size(); ++i) {
            if (i) u += ',';
            u += std::to_string(d.u[i]);
        }
        u += "]";
        std::string tprime = "[";
        for (std::size_t i = 0; i < d.t_prime.entries.size(); ++i) {
            if (i) tprime += ',';
            tprime += std::to_string(d.t_prime.entries[i]);
        }
        tprime += "]";
        std::cout << "{\"basis\":[" << r.basis.w << "," << r.basis.l << "],\"p\":" << d.p
                  << ",\"c\":" << d.c << ",\"tprime\":" << tprime << ",\"tprime_basis\":["
                  << d.t_prime.basis.w << "," << d.t_prime.basis.l << "],\"u\":" << u << "}\n";
    } else {
        const DecompChain chain = decompose_full(reduce(c));
        std::cout << chain.to_string() << "\n";
    }
    return kExitOk;
}

int run_path(const std::string& config) {
    const Configuration c = Configuration::parse(config);
    std::cout << sequence_to_string(generating_sequence(c)) << "\n";
    return kExitOk;
}

int run_replay(long long n, const std::string& seq_text) {
    const GeneratingSequence seq = parse_sequence(seq_text);
    try {
        std::cout << verify_sequence(n, seq).to_string() << "\n";
    } catch (const InvalidStep& e) {
        std::cerr << "invalid step " << e.position << ": " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitOk;
}

int run_bench(long long n, std::optional<long long> k) {
    using Clock = std::chrono::steady_clock;
    if (k) {
        std::uint64_t nodes = 0;
        std::uint64_t objects = 0;
        const auto start = Clock::now();
        ipm_generate(n, *k, [&](const Configuration&) { ++objects; }, &nodes);
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        std::cout << "objects " << objects << " nodes " << nodes << " nodes/object "
                  << (objects ? static_cast<double>(nodes) / static_cast<double>(objects) : 0.0)
                  << " wall_ms " << ms << "\n";
        return kExitOk;
    }
    GenStats total;
    const auto start = Clock::now();
    for (long long w = 1; w * (w + 1) <= 2 * n; ++w) {
        GenStats stats;
        generate_spm_width(n, w, [](const Configuration&) {}, &stats);
        std::cout << "fiber w=" << w << " objects " << stats.yields << " nodes " << stats.nodes
                  << " nodes/object "
                  << (stats.yields ? static_cast<double>(stats.nodes) /
                                         static_cast<double>(stats.yields)
                                   : 0.0)
                  << "\n";
        total += stats;
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    std::cout << "objects " << total.yields << " nodes " << total.nodes << " nodes/object "
              << (total.yields ? static_cast<double>(total.nodes) /
                                     static_cast<double>(total.yields)
                               : 0.0)
              << " wall_ms " << ms << "\n";
    return kExitOk;
}

// Oracle sweep: recomputes everything two ways and reports the first divergence.
int run_check(long long max_n, std::optional<long long> k) {
    if (k) {
        IpmCountTable table(*k, max_n);
        for (long long n = 0; n <= max_n; ++n) {
            const auto set = bfs_ipm(n, *k, false);
            if (table.count(n) != set.size()) {
                std::cout << "divergence at n=" << n << ": count " << table.count(n)
                          << " vs oracle " << set.size() << "\n";
                return kExitFailed;
            }
            std::size_t emitted = 0;
            bool clean = true;
            ipm_generate(n, *k, [&](const Configuration& c) {
                ++emitted;
                clean = clean && set.contains(c);
            });
            if (!clean || emitted != set.size()) {
                std::cout << "divergence at n=" << n << ": generation emitted " << emitted
                          << " configurations (oracle " << set.size() << ")\n";
                return kExitFailed;
            }
            for (const auto& c : set.members()) {
                if (!is_valid_ipm(c, *k).valid) {
                    std::cout << "divergence at n=" << n << ": reachable " << c.to_string()
                              << " flagged invalid\n";
                    return kExitFailed;
                }
                if (c.empty()) continue;
                const IpmReducedForm r = ipm_reduce(c, *k);
                if (ipm_expand(r) != c || ipm_recompose(ipm_decompose(r)) != r) {
                    std::cout << "divergence at n=" << n
                              << ": decomposition round trip failed for " << c.to_string()
                              << "\n";
                    return kExitFailed;
                }
            }
            std::cerr << "n=" << n << " ok (" << set.size() << " configurations)\n";
        }
        std::cout << "agreement up to n=" << max_n << "\n";
        return kExitOk;
    }

    CountTable table(max_n);
    for (long long n = 0; n <= max_n; ++n) {
        const auto set = bfs_spm(n, false);
        if (table.count_spm(n) != set.size()) {
            std::cout << "divergence at n=" << n << ": count " << table.count_spm(n)
                      << " vs oracle " << set.size() << "\n";
            return kExitFailed;
        }
        std::size_t emitted = 0;
        bool clean = true;
        generate_spm(n, [&](const Configuration& c) {
            ++emitted;
            clean = clean && set.contains(c);
        });
        if (!clean || emitted != set.size()) {
            std::cout << "divergence at n=" << n << ": generation emitted " << emitted
                      << " configurations (oracle " << set.size() << ")\n";
            return kExitFailed;
        }
        for (const auto& c : set.members()) {
            if (!is_valid_spm(c).valid) {
                std::cout << "divergence at n=" << n << ": reachable " << c.to_string()
                          << " flagged invalid\n";
                return kExitFailed;
            }
            const ReducedForm r = reduce(c);
            if (expand(r) != c || recompose_full(decompose_full(r)) != r) {
                std::cout << "divergence at n=" << n << ": decomposition round trip failed for "
                          << c.to_string() << "\n";
                return kExitFailed;
            }
            if (verify_sequence(n, generating_sequence(c)) != c) {
                std::cout << "divergence at n=" << n << ": generating sequence of "
                          << c.to_string() << " does not replay\n";
                return kExitFailed;
            }
        }
        std::cerr << "n=" << n << " ok (" << set.size() << " configurations)\n";
    }
    std::cout << "agreement up to n=" << max_n << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sand and ice pile configurations: counting, generation, sampling"};
    app.require_subcommand(1);

    long long n = 0;
    long long k_value = 0;
    long long limit = -1;
    long long count = 1;
    long long max_n = 25;
    std::uint64_t seed = 0;
    std::string config;
    std::string seq_text;
    std::string format = "parts";

    auto add_k = [&](CLI::App* cmd) {
        return cmd->add_option("--k", k_value, "ice pile plateau parameter (omit for SPM)")
            ->check(CLI::PositiveNumber);
    };

    auto* cmd_count = app.add_subcommand("count", "number of reachable configurations");
    cmd_count->add_option("--n", n, "grain count")->required()->check(CLI::NonNegativeNumber);
    auto* count_k = add_k(cmd_count);

    auto* cmd_list = app.add_subcommand("list", "emit every configuration, one per line");
    cmd_list->add_option("--n", n, "grain count")->required()->check(CLI::NonNegativeNumber);
    auto* list_k = add_k(cmd_list);
    cmd_list->add_option("--format", format, "parts|json")
        ->check(CLI::IsMember({"parts", "json"}));
    cmd_list->add_option("--limit", limit, "stop after this many lines");

    auto* cmd_random = app.add_subcommand("random", "uniform samples from SPM(n)");
    cmd_random->add_option("--n", n, "grain count")->required()->check(CLI::NonNegativeNumber);
    cmd_random->add_option("--seed", seed, "64-bit seed")->required();
    cmd_random->add_option("--count", count, "number of samples");

    auto* cmd_validate = app.add_subcommand("validate", "check the forbidden patterns");
    cmd_validate->add_option("--config", config, "comma-separated heights")->required();
    auto* validate_k = add_k(cmd_validate);

    auto* cmd_decompose = app.add_subcommand("decompose", "recursive decomposition");
    cmd_decompose->add_option("--config", config, "comma-separated heights")->required();
    auto* decompose_k = add_k(cmd_decompose);

    auto* cmd_path = app.add_subcommand("path", "a generating sequence for a configuration");
    cmd_path->add_option("--config", config, "comma-separated heights")->required();

    auto* cmd_replay = app.add_subcommand("replay", "replay FALL moves from (n)");
    cmd_replay->add_option("--n", n, "grain count")->required()->check(CLI::NonNegativeNumber);
    cmd_replay->add_option("--seq", seq_text, "comma-separated column indices")->required();

    auto* cmd_bench = app.add_subcommand("bench", "generation counters and wall time");
    cmd_bench->add_option("--n", n, "grain count")->required()->check(CLI::NonNegativeNumber);
    auto* bench_k = add_k(cmd_bench);

    auto* cmd_check = app.add_subcommand("check", "library-vs-oracle sweep");
    cmd_check->add_option("--max-n", max_n, "sweep bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    auto* check_k = add_k(cmd_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitBadInput;
    }

    auto k_of = [&](CLI::Option* opt) -> std::optional<long long> {
        return opt->count() ? std::optional<long long>(k_value) : std::nullopt;
    };

    try {
        if (cmd_count->parsed()) return run_count(n, k_of(count_k));
        if (cmd_list->parsed()) return run_list(n, k_of(list_k), format, limit);
        if (cmd_random->parsed()) return run_random(n, seed, count);
        if (cmd_validate->parsed()) return run_validate(config, k_of(validate_k));
        if (cmd_decompose->parsed()) return run_decompose(config, k_of(decompose_k));
        if (cmd_path->parsed()) return run_path(config);
        if (cmd_replay->parsed()) return run_replay(n, seq_text);
        if (cmd_bench->parsed()) return run_bench(n, k_of(bench_k));
        if (cmd_check->parsed()) return run_check(max_n, k_of(check_k));
    } catch (const InvalidConfiguration& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitBadInput;
}
