// Copyright 2026 The tdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdepth/canonical.h"
#include "tdepth/census.h"
#include "tdepth/channel.h"
#include "tdepth/clifford.h"
#include "tdepth/error.h"

namespace tdepth::cli {

namespace {

const std::vector<std::string> SUBCOMMANDS = {"count", "table", "enumerate", "verify", "growth", "canonicalize"};
const std::vector<std::string> CHECKS = {"distinctness", "unit-rows", "hamming-weight",
                                         "spectrum",     "oracle",    "orthogonality"};

size_t require_qubits(const RunConfig &c) {
    if (!c.qubits) {
        throw UsageError("--qubits", "required for " + c.subcommand);
    }
    return *c.qubits;
}

uint64_t resolve_seed(const RunConfig &c) {
    if (c.seed.empty()) {
        return DEFAULT_SEED;
    }
    if (c.seed == "random") {
        std::random_device rd;
        return (uint64_t{rd()} << 32) ^ rd();
    }
    try {
        size_t used = 0;
        uint64_t v = std::stoull(c.seed, &used);
        if (used != c.seed.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception &) {
        throw UsageError("--seed", "expected a non-negative integer or 'random', got '" + c.seed + "'");
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("--in", "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Where a subcommand writes its main output.
class Sink {
   public:
    Sink(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) {
                throw UsageError("--out", "cannot open '" + path + "' for writing");
            }
            stream_ = &file_;
        }
    }
    std::ostream &operator*() {
        return *stream_;
    }
    bool to_file() const {
        return file_.is_open();
    }

   private:
    std::ofstream file_;
    std::ostream *stream_;
};

int emit_report(const VerificationReport &report, const RunConfig &c, std::ostream &out) {
    Sink sink(c.out_path, out);
    *sink << (c.json ? report.to_json() + "\n" : report.to_tsv());
    return report.passed() ? EXIT_PASS : EXIT_COUNTEREXAMPLE;
}

int run_count(const RunConfig &c, std::ostream &out) {
    size_t n = require_qubits(c);
    std::vector<size_t> ms;
    if (c.tcount) {
        ms.push_back(*c.tcount);
    } else {
        for (size_t m = 1; m <= n; m++) {
            ms.push_back(m);
        }
    }
    BigInt order = group_order(n);
    Sink sink(c.out_path, out);
    if (c.json) {
        nlohmann::json j;
        j["qubits"] = n;
        j["clifford_order"] = order.str();
        j["rows"] = nlohmann::json::array();
        for (size_t m : ms) {
            CensusRow row = census_row(n, m);
            j["rows"].push_back({{"tcount", m},
                                 {"tuples", row.tuple_count.str()},
                                 {"sets", row.set_count.str()},
                                 {"unitaries", row.unitary_count.str()}});
        }
        if (!c.tcount) {
            TDepthOneCount total = count_tdepth_one(n);
            j["sets_total"] = total.g_n.str();
            j["unitaries_total"] = total.total.str();
        }
        *sink << j.dump() << '\n';
        return EXIT_PASS;
    }
    *sink << "qubits\ttcount\ttuples\tsets\tclifford_order\tunitaries\n";
    for (size_t m : ms) {
        CensusRow row = census_row(n, m);
        *sink << n << '\t' << m << '\t' << row.tuple_count << '\t' << row.set_count << '\t' << order << '\t'
              << row.unitary_count << '\n';
    }
    if (!c.tcount) {
        TDepthOneCount total = count_tdepth_one(n);
        *sink << n << "\tall\t-\t" << total.g_n << '\t' << order << '\t' << total.total << '\n';
    }
    return EXIT_PASS;
}

int run_table(const RunConfig &c, std::ostream &out) {
    if (!c.max_qubits) {
        throw UsageError("--max-qubits", "required for table");
    }
    Sink sink(c.out_path, out);
    std::string table = emit_table(*c.max_qubits);
    if (!c.json) {
        *sink << table;
        return EXIT_PASS;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (size_t n = 1; n <= *c.max_qubits; n++) {
        nlohmann::json per_m = nlohmann::json::array();
        for (size_t m = 1; m <= n; m++) {
            per_m.push_back(count_sets(n, m).str());
        }
        rows.push_back({{"qubits", n},
                        {"tdepth_one", count_tdepth_one(n).g_n.str()},
                        {"clifford_order", group_order(n).str()},
                        {"tcount", per_m}});
    }
    *sink << nlohmann::json{{"rows", rows}}.dump() << '\n';
    return EXIT_PASS;
}

int run_enumerate(const RunConfig &c, std::ostream &out, std::ostream &err) {
    size_t n = require_qubits(c);
    if (!c.tcount) {
        throw UsageError("--tcount", "required for enumerate");
    }
    size_t m = *c.tcount;
    EnumerationOptions options;
    options.allow_large = c.allow_large;
    options.workers = c.workers;
    auto start = std::chrono::steady_clock::now();
    uint64_t emitted;
    bool to_file;
    {
        Sink sink(c.out_path, out);
        to_file = sink.to_file();
        emitted = enumerate_sets_parallel(n, m, &*sink, options);
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    BigInt expected = count_sets(n, m);

    VerificationReport report;
    report.check = "enumerate";
    report.counts["sets"] = emitted;
    report.elapsed_seconds = elapsed;
    if (BigInt(emitted) != expected) {
        report.failures.push_back("emitted " + std::to_string(emitted) + " sets, formula gives " + expected.str());
    }
    // The set stream owns stdout unless it went to a file.
    std::ostream &summary = to_file ? out : err;
    summary << (c.json ? report.to_json() + "\n" : report.to_tsv());
    return report.passed() ? EXIT_PASS : EXIT_COUNTEREXAMPLE;
}

int run_verify(const RunConfig &c, std::ostream &out) {
    size_t n = require_qubits(c);
    uint64_t seed = resolve_seed(c);
    VerificationReport report;
    if (c.check == "distinctness") {
        if (c.exhaustive) {
            report = verify_distinctness(n, DistinctnessMode::Exhaustive, 0, seed);
        } else {
            report = verify_distinctness(n, DistinctnessMode::Sampled, c.trials.value_or(10000), seed);
        }
    } else if (c.check == "unit-rows") {
        report = verify_unit_rows(n, c.trials.value_or(100), seed);
    } else if (c.check == "hamming-weight") {
        report = verify_hamming_weight(n, c.tcount.value_or(3));
    } else if (c.check == "spectrum") {
        report = verify_spectrum(n, c.exhaustive, c.trials.value_or(500), seed);
    } else if (c.check == "oracle") {
        report = verify_oracle(n, c.trials.value_or(100), seed);
    } else {
        report = verify_orthogonality(n, c.trials.value_or(1000), seed);
    }
    return emit_report(report, c, out);
}

int run_growth(const RunConfig &c, std::ostream &out) {
    if (!c.max_qubits) {
        throw UsageError("--max-qubits", "required for growth");
    }
    return emit_report(growth_check(*c.max_qubits), c, out);
}

int run_canonicalize(const RunConfig &c, std::ostream &out) {
    if (c.in_path.empty()) {
        throw UsageError("--in", "required for canonicalize");
    }
    TLayerCircuit circuit = parse_circuit(read_file(c.in_path));
    Sink sink(c.out_path, out);
    nlohmann::json j;
    if (circuit.depth() <= 1) {
        CanonicalForm form =
            circuit.depth() == 0
                ? CanonicalForm{PauliSet(circuit.num_qubits), circuit.cliffords.at(0)}
                : canonicalize_depth_one(circuit.cliffords.at(0), circuit.layers.at(0), circuit.cliffords.at(1));
        size_t t_count = form.num_qubits() <= MAX_CHANNEL_QUBITS ? infer_t_count(channel_of_canonical(form))
                                                                 : form.t_count();
        if (c.json) {
            j = {{"form", render(form)}, {"t_count", t_count}};
        } else {
            *sink << render(form) << "\n" << "t_count\t" << t_count << "\n";
        }
    } else {
        LayeredForm layered = canonicalize_depth_d(circuit);
        size_t t_count = 0;
        std::vector<std::string> layers;
        for (const auto &s : layered.layers) {
            layers.push_back(s.empty() ? "none" : s.str());
            t_count += s.size();
        }
        std::string clifford = layered.clifford.is_identity() ? "id" : layered.clifford.str();
        if (c.json) {
            j = {{"layers", layers}, {"clifford", clifford}, {"t_count", t_count}};
        } else {
            for (size_t k = 0; k < layers.size(); k++) {
                *sink << "P" << k + 1 << ": " << layers[k] << "\n";
            }
            *sink << "C: " << clifford << "\n" << "t_count\t" << t_count << "\n";
        }
    }
    if (c.json) {
        *sink << j.dump() << '\n';
    }
    return EXIT_PASS;
}

}  // namespace

void validate(const RunConfig &c) {
    if (std::find(SUBCOMMANDS.begin(), SUBCOMMANDS.end(), c.subcommand) == SUBCOMMANDS.end()) {
        throw UsageError("", "unknown subcommand '" + c.subcommand + "'");
    }
    if (c.subcommand == "verify" && std::find(CHECKS.begin(), CHECKS.end(), c.check) == CHECKS.end()) {
        throw UsageError("check", "unknown verification '" + c.check + "'");
    }
    if (c.qubits && *c.qubits == 0) {
        throw UsageError("--qubits", "must be at least 1");
    }
    if (c.max_qubits && *c.max_qubits == 0) {
        throw UsageError("--max-qubits", "must be at least 1");
    }
    if (c.tcount && c.subcommand != "verify" && c.qubits && (*c.tcount == 0 || *c.tcount > *c.qubits)) {
        throw UsageError("--tcount", "must lie in 1..qubits");
    }
    if (c.workers == 0) {
        throw UsageError("--workers", "must be at least 1");
    }
    if (c.exhaustive && c.subcommand == "verify" && c.check != "distinctness" && c.check != "spectrum") {
        throw UsageError("--exhaustive", "only distinctness and spectrum have an exhaustive mode");
    }
}

int dispatch(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        validate(config);
        const std::string &s = config.subcommand;
        if (s == "count") {
            return run_count(config, out);
        } else if (s == "table") {
            return run_table(config, out);
        } else if (s == "enumerate") {
            return run_enumerate(config, out, err);
        } else if (s == "verify") {
            return run_verify(config, out);
        } else if (s == "growth") {
            return run_growth(config, out);
        }
        return run_canonicalize(config, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"T-depth-one canonical forms and census"};
    app.require_subcommand(1);
    RunConfig config;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--out", config.out_path, "Write the report to FILE");
        sub->add_flag("--json", config.json, "Machine-readable report");
    };
    auto add_qubits = [&](CLI::App *sub) { sub->add_option("--qubits", config.qubits, "Number of qubits"); };

    CLI::App *count = app.add_subcommand("count", "Closed-form census for one width");
    add_qubits(count);
    count->add_option("--tcount", config.tcount, "Restrict to one T-count");
    add_common(count);

    CLI::App *table = app.add_subcommand("table", "Census table for 1..N qubits");
    table->add_option("--max-qubits", config.max_qubits, "Largest width");
    add_common(table);

    CLI::App *enumerate = app.add_subcommand("enumerate", "Stream every generator set of a given size");
    add_qubits(enumerate);
    enumerate->add_option("--tcount", config.tcount, "Set size");
    enumerate->add_option("--workers", config.workers, "Parallel partitions");
    enumerate->add_flag("--allow-large", config.allow_large, "Lift the width guard");
    add_common(enumerate);

    CLI::App *verify = app.add_subcommand("verify", "Machine-check one property");
    verify->add_option("check", config.check, "distinctness|unit-rows|hamming-weight|spectrum|oracle|orthogonality")
        ->required();
    add_qubits(verify);
    verify->add_option("--trials", config.trials, "Sample count");
    verify->add_option("--seed", config.seed, "PRNG seed, or 'random'");
    verify->add_option("--tcount", config.tcount, "Largest family size (hamming-weight)");
    verify->add_flag("--exhaustive", config.exhaustive, "Exhaustive instead of sampled");
    add_common(verify);

    CLI::App *growth = app.add_subcommand("growth", "Check g_n >= 2^(n^2)");
    growth->add_option("--max-qubits", config.max_qubits, "Largest width");
    add_common(growth);

    CLI::App *canonicalize = app.add_subcommand("canonicalize", "Canonical form of a circuit file");
    canonicalize->add_option("--in", config.in_path, "Circuit file")->required();
    add_common(canonicalize);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();  // argv[0]
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_PASS;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    for (CLI::App *sub : app.get_subcommands()) {
        config.subcommand = sub->get_name();
    }
    return dispatch(config, out, err);
}

}  // namespace tdepth::cli
