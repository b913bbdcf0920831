// gtcodes command line tool: construct pooling designs, verify their
// combinatorial properties, decode result vectors, and run end-to-end
// simulations of the three test models.
//
// Exit codes: 0 success / property holds, 1 property fails or a simulated
// decoding failed, 2 usage or parameter error, 3 input format error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <gtcodes/combin.hpp>
#include <gtcodes/construct.hpp>
#include <gtcodes/decode.hpp>
#include <gtcodes/exec.hpp>
#include <gtcodes/models.hpp>
#include <gtcodes/verify.hpp>

namespace {

using namespace gtcodes;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot open '" + path + "' for writing");
    out << text;
}

BinaryCode load_code(const std::string& path) {
    return parse_code(read_input(path));
}

QaryCode load_qary(const std::string& path) {
    return parse_qary_code(read_input(path));
}

// 1-based CLI column list -> 0-based indices.
std::vector<std::uint32_t> parse_keep(const std::string& text,
                                      std::size_t num_cols) {
    std::vector<std::uint32_t> keep;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string token = text.substr(
            pos, comma == std::string::npos ? text.size() - pos : comma - pos);
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(token, &used);
        } catch (const std::exception&) {
            throw UsageError("bad column index '" + token + "'");
        }
        if (used != token.size() || v < 1 || v > num_cols)
            throw UsageError("bad column index '" + token + "'");
        keep.push_back(static_cast<std::uint32_t>(v - 1));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return keep;
}

struct ConstructArgs {
    std::uint32_t t = 0, s = 0, l = 0, q = 0, lambda = 0;
    std::string name, inner, external, code, keep, out;
};

int run_construct(const std::string& kind, const ConstructArgs& a) {
    std::string text;
    if (kind == "trivial") {
        text = serialize_code(trivial_code(a.t, a.s, a.l));
    } else if (kind == "identity") {
        text = serialize_code(identity_code(a.t));
    } else if (kind == "rs") {
        text = serialize_qary_code(reed_solomon(a.q, a.lambda).code);
    } else if (kind == "concat") {
        text = serialize_code(
            concatenate(load_qary(a.external), load_code(a.inner)));
    } else if (kind == "lemma8") {
        text = serialize_code(
            rs_concatenation(a.s, a.l, a.lambda, a.q, load_code(a.inner)));
    } else if (kind == "dedupe") {
        text = serialize_code(dedupe_rows(load_code(a.code)));
    } else if (kind == "restrict") {
        BinaryCode code = load_code(a.code);
        text = serialize_code(
            restrict_columns(code, parse_keep(a.keep, code.num_cols())));
    } else if (kind == "builtin") {
        auto matrix = builtin(a.name);
        text = std::holds_alternative<BinaryCode>(matrix)
                   ? serialize_code(std::get<BinaryCode>(matrix))
                   : serialize_qary_code(std::get<QaryCode>(matrix));
    }
    write_output(a.out, text);
    return kExitHolds;
}

struct VerifyArgs {
    std::uint32_t s = 0, l = 0, iota = 0, k = 0;
    std::uint64_t trials = 0, seed = 0;
    std::string code;
    bool verbose = false;
};

void print_report(const VerifyReport& report, bool verbose) {
    std::cout << report.verdict_line() << "\n";
    if (verbose && !report.holds)
        std::cout << "# no test row separates the witness sets; re-check by "
                     "scanning the rows against the definition\n";
}

int run_verify(const std::string& property, const VerifyArgs& a) {
    std::optional<VerifyReport> report;
    if (property == "superimposed") {
        report = is_superimposed(load_code(a.code), a.s);
    } else if (property == "sl") {
        report = is_superimposed_sl(load_code(a.code), a.s, a.l);
    } else if (property == "inhibitory") {
        report = is_inhibitory_code(load_code(a.code), a.s, a.iota);
    } else if (property == "separating") {
        report = is_separating(load_qary(a.code), a.s, a.l);
    } else if (property == "mds") {
        report = is_mds(load_qary(a.code), a.k);
    } else if (property == "design-disjunct") {
        report = oracle_disjunct_design(load_code(a.code), a.s);
    } else if (property == "design-superset") {
        report = oracle_superset_design(load_code(a.code), a.s, a.l);
    } else if (property == "design-inhibitor") {
        report = oracle_inhibitory_design(load_code(a.code), a.s, a.iota);
    } else if (property == "spot") {
        report = spot_check_sl(load_code(a.code), a.s, a.l, a.trials, a.seed);
    }
    print_report(*report, a.verbose);
    return report->holds ? kExitHolds : kExitFails;
}

struct DecodeArgs {
    std::uint32_t s = 0, l = 0, iota = 0;
    std::string code, result;
    bool verify_first = false;
};

int run_decode(const std::string& model, const DecodeArgs& a) {
    BinaryCode code = load_code(a.code);
    ResultVector r = BitVector::from_string(a.result);
    if (r.size() != code.num_rows())
        throw UsageError("result vector length does not match the code");

    if (a.verify_first) {
        VerifyReport report =
            model == "disjunct"   ? is_superimposed(code, a.s)
            : model == "superset" ? is_superimposed_sl(code, a.s, a.l)
                                  : is_inhibitory_code(code, a.s, a.iota);
        if (!report.holds) {
            std::cerr << report.verdict_line() << "\n";
            return kExitFails;
        }
    }

    if (model == "disjunct")
        std::cout << format_defective_set(decode_disjunct(code, r, a.s))
                  << "\n";
    else if (model == "superset")
        std::cout << format_complex(decode_superset(code, r, a.s, a.l))
                  << "\n";
    else
        std::cout << format_defective_set(
                         decode_inhibitor(code, r, a.s, a.iota))
                  << "\n";
    return kExitHolds;
}

struct SimulateArgs {
    std::uint32_t s = 0, l = 0, iota = 0;
    std::uint64_t trials = 1000, seed = 0;
    std::string code;
};

IndexSet sample_distinct(exec::SplitMix64& rng, std::uint32_t t,
                         std::size_t count, const IndexSet& avoid) {
    IndexSet out;
    while (out.size() < count) {
        auto v = static_cast<std::uint32_t>(rng.bounded(t));
        if (std::find(avoid.begin(), avoid.end(), v) != avoid.end())
            continue;
        if (std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Drops parts that contain another distinct part, then deduplicates, so the
// sampled parts become a valid antichain (the reachable ground truth).
Complex reduce_to_complex(std::uint32_t t, std::vector<IndexSet> parts) {
    std::vector<IndexSet> minimal;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < parts.size() && keep; ++j) {
            if (i == j)
                continue;
            const IndexSet& a = parts[j];
            const IndexSet& b = parts[i];
            bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
            if (a_in_b && (a.size() < b.size() || j < i))
                keep = false; // proper superset, or duplicate kept once
        }
        if (keep)
            minimal.push_back(parts[i]);
    }
    return Complex::make(t, std::move(minimal));
}

int run_simulate(const std::string& model, const SimulateArgs& a) {
    BinaryCode code = load_code(a.code);
    const auto t = static_cast<std::uint32_t>(code.num_cols());
    if (a.trials < 1)
        throw UsageError("need at least one trial");
    if (a.s < 1 || a.s >= t)
        throw UsageError("need 0 < s < t");
    if (model == "superset" && (a.l < 1 || std::uint64_t(a.s) + a.l > t))
        throw UsageError("need l >= 1 and s + l <= t");
    if (model == "inhibitor" && std::uint64_t(a.s) + a.iota > t)
        throw UsageError("need s + i <= t");

    auto start = std::chrono::steady_clock::now();

    struct Failure {
        std::uint64_t trial;
        std::string hidden, decoded;
    };
    std::optional<Failure> first_failure;
    std::atomic<std::uint64_t> failures{0};

    // Chunked like the verify kernels; each trial draws its own stream, so
    // the counts below do not depend on the worker split.
    auto body = [&](std::uint64_t lo, std::uint64_t hi)
        -> std::optional<Failure> {
        std::optional<Failure> local;
        std::uint64_t local_failures = 0;
        for (std::uint64_t trial = lo; trial < hi; ++trial) {
            exec::SplitMix64 rng(exec::mix_seed(a.seed, trial));
            std::string hidden, decoded;
            bool ok = true;
            if (model == "disjunct") {
                auto p = DefectiveSet::make(
                    t, sample_distinct(rng, t, rng.bounded(a.s + 1), {}));
                auto out = decode_disjunct(code, result_disjunct(code, p),
                                           a.s);
                ok = out == p;
                if (!ok) {
                    hidden = format_defective_set(p);
                    decoded = format_defective_set(out);
                }
            } else if (model == "superset") {
                std::vector<IndexSet> parts;
                std::uint64_t k = rng.bounded(a.s + 1);
                for (std::uint64_t i = 0; i < k; ++i)
                    parts.push_back(sample_distinct(
                        rng, t, 1 + rng.bounded(a.l), {}));
                Complex p = reduce_to_complex(t, std::move(parts));
                auto out = decode_superset(code, result_superset(code, p),
                                           a.s, a.l);
                ok = out == p;
                if (!ok) {
                    hidden = format_complex(p);
                    decoded = format_complex(out);
                }
            } else {
                auto p = sample_distinct(rng, t, 1 + rng.bounded(a.s), {});
                auto inh = sample_distinct(rng, t, rng.bounded(a.iota + 1), p);
                auto inst = InhibitorInstance::make(t, p, inh);
                auto out = decode_inhibitor(
                    code, result_inhibitor(code, inst), a.s, a.iota);
                ok = out.members == inst.defectives;
                if (!ok) {
                    hidden = format_inhibitor_instance(inst);
                    decoded = format_defective_set(out);
                }
            }
            if (!ok) {
                ++local_failures;
                if (!local)
                    local = Failure{trial, hidden, decoded};
            }
        }
        failures += local_failures;
        return local;
    };

    // Run every trial; report the earliest failure.
    first_failure = exec::first_hit<Failure>(a.trials, body);

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    std::uint64_t failed = failures.load();
    std::cout << "model=" << model << " code=" << code.num_rows() << "x"
              << code.num_cols() << " trials=" << a.trials
              << " seed=" << a.seed << "\n";
    std::cout << "successes=" << (a.trials - failed)
              << " failures=" << failed << "\n";
    if (first_failure)
        std::cout << "first_failure trial=" << first_failure->trial
                  << " hidden=" << first_failure->hidden
                  << " decoded=" << first_failure->decoded << "\n";
    std::cerr << "time_ms=" << elapsed << "\n";
    return failed == 0 ? kExitHolds : kExitFails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonadaptive group testing codes: construction, "
                 "verification, decoding and simulation"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads,
                   "Worker count (0 = THREADS env or hardware)");

    // construct
    auto* construct = app.add_subcommand("construct", "Emit a code file");
    construct->fallthrough();
    construct->require_subcommand(1);
    ConstructArgs ca;
    std::string construct_kind;
    for (const char* kind : {"trivial", "identity", "rs", "concat", "lemma8",
                             "builtin", "dedupe", "restrict"}) {
        auto* sub = construct->add_subcommand(kind);
        sub->fallthrough();
        sub->add_option("--t", ca.t);
        sub->add_option("--s", ca.s);
        sub->add_option("--l", ca.l);
        sub->add_option("--q", ca.q);
        sub->add_option("--lambda", ca.lambda);
        sub->add_option("--name", ca.name);
        sub->add_option("--inner", ca.inner);
        sub->add_option("--external", ca.external);
        sub->add_option("--code", ca.code);
        sub->add_option("--keep", ca.keep);
        sub->add_option("--out", ca.out);
        sub->callback([kind, &construct_kind] { construct_kind = kind; });
    }

    // verify
    auto* verify = app.add_subcommand("verify", "Check a code property");
    verify->fallthrough();
    verify->require_subcommand(1);
    VerifyArgs va;
    std::string verify_property;
    for (const char* property :
         {"superimposed", "sl", "inhibitory", "separating", "mds",
          "design-disjunct", "design-superset", "design-inhibitor", "spot"}) {
        auto* sub = verify->add_subcommand(property);
        sub->fallthrough();
        sub->add_option("--s", va.s);
        sub->add_option("--l", va.l);
        sub->add_option("--i", va.iota);
        sub->add_option("--k", va.k);
        sub->add_option("--trials", va.trials);
        sub->add_option("--seed", va.seed);
        sub->add_option("--code", va.code, "Code file (default: stdin)");
        sub->add_flag("--verbose", va.verbose);
        sub->callback([property, &verify_property] {
            verify_property = property;
        });
    }

    // decode
    auto* decode = app.add_subcommand("decode", "Decode a result vector");
    decode->fallthrough();
    decode->require_subcommand(1);
    DecodeArgs da;
    std::string decode_model;
    for (const char* model : {"disjunct", "superset", "inhibitor"}) {
        auto* sub = decode->add_subcommand(model);
        sub->fallthrough();
        sub->add_option("--s", da.s)->required();
        sub->add_option("--l", da.l);
        sub->add_option("--i", da.iota);
        sub->add_option("--code", da.code, "Code file (default: stdin)");
        sub->add_option("--result", da.result)->required();
        sub->add_flag("--verify", da.verify_first,
                      "Check the code property before decoding");
        sub->callback([model, &decode_model] { decode_model = model; });
    }

    // simulate
    auto* simulate = app.add_subcommand(
        "simulate", "Monte-Carlo round-trips of hidden instances");
    simulate->fallthrough();
    simulate->require_subcommand(1);
    SimulateArgs sa;
    std::string simulate_model;
    for (const char* model : {"disjunct", "superset", "inhibitor"}) {
        auto* sub = simulate->add_subcommand(model);
        sub->fallthrough();
        sub->add_option("--s", sa.s)->required();
        sub->add_option("--l", sa.l);
        sub->add_option("--i", sa.iota);
        sub->add_option("--code", sa.code, "Code file (default: stdin)");
        sub->add_option("--trials", sa.trials);
        sub->add_option("--seed", sa.seed);
        sub->callback([model, &simulate_model] { simulate_model = model; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (threads > 0)
            exec::set_max_threads(threads);
        if (construct->parsed())
            return run_construct(construct_kind, ca);
        if (verify->parsed())
            return run_verify(verify_property, va);
        if (decode->parsed())
            return run_decode(decode_model, da);
        return run_simulate(simulate_model, sa);
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
