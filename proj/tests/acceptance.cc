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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <streambuf>
#include <string>
#include <vector>

#include "tdepth/canonical.h"
#include "tdepth/census.h"
#include "tdepth/channel.h"
#include "tdepth/clifford.h"
#include "tdepth/oracle.h"

using namespace tdepth;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void absorb(const VerificationReport &r) {
        require(r.passed(), r.check + ": " + std::to_string(r.failures.size()) + " failures" +
                                (r.failures.empty() ? "" : " (first: " + r.failures.front() + ")"));
    }
};

double since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

// Counts newlines written through it.
class LineCounter : public std::streambuf {
   public:
    uint64_t lines = 0;

   protected:
    int_type overflow(int_type c) override {
        if (c == '\n') {
            lines++;
        }
        return c;
    }
    std::streamsize xsputn(const char *s, std::streamsize n) override {
        for (std::streamsize k = 0; k < n; k++) {
            lines += s[k] == '\n';
        }
        return n;
    }
};

std::string random_word_text(size_t n, std::mt19937_64 &rng) {
    static const char *one[] = {"H", "S", "X", "Z"};
    static const char *two[] = {"CX", "CZ", "SWAP"};
    std::ostringstream out;
    size_t len = rng() % 7;
    for (size_t k = 0; k < len; k++) {
        out << (k ? "; " : "");
        size_t a = rng() % n;
        if (n > 1 && rng() % 3 == 0) {
            out << two[rng() % 3] << ' ' << a << ' ' << (a + 1 + rng() % (n - 1)) % n;
        } else {
            out << one[rng() % 4] << ' ' << a;
        }
    }
    return out.str();
}

std::string random_circuit_text(size_t n, size_t depth, std::mt19937_64 &rng) {
    std::string out = "QUBITS: " + std::to_string(n) + "\n";
    for (size_t k = 0; k < depth; k++) {
        out += "CLIFFORD: " + random_word_text(n, rng) + "\n";
        std::string t, tdg;
        while (t.empty() && tdg.empty()) {
            for (size_t q = 0; q < n; q++) {
                switch (rng() % 3) {
                    case 0:
                        t += (t.empty() ? "" : ",") + std::to_string(q);
                        break;
                    case 1:
                        tdg += (tdg.empty() ? "" : ",") + std::to_string(q);
                        break;
                    default:
                        break;
                }
            }
        }
        out += "TLAYER:";
        out += t.empty() ? "" : " t=" + t;
        out += tdg.empty() ? "" : " tdg=" + tdg;
        out += "\n";
    }
    out += "CLIFFORD: " + random_word_text(n, rng) + "\n";
    return out;
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, sep)) {
        out.push_back(cell);
    }
    return out;
}

Outcome check_table_formula() {
    Outcome o;
    auto start = Clock::now();
    std::string table = emit_table(4);
    double elapsed = since(start);
    // Rows: qubits, T-depth-one multiplier, Clifford order, then per-T-count multipliers.
    const std::vector<std::vector<std::string>> expected = {
        {"1", "3", "24", "3", "-", "-", "-"},
        {"2", "60", "11520", "15", "45", "-", "-"},
        {"3", "4788", "92897280", "63", "945", "3780", "-"},
        {"4", "2265420", "12128668876800", "255", "16065", "321300", "1927800"},
    };
    std::vector<std::string> lines = split(table, '\n');
    o.require(lines.size() == 5, "expected a header and 4 rows");
    for (size_t r = 0; r < expected.size() && r + 1 < lines.size(); r++) {
        o.require(split(lines[r + 1], '\t') == expected[r], "row " + std::to_string(r + 1) + " differs: " + lines[r + 1]);
    }
    std::ifstream fixture(std::string(TDEPTH_FIXTURE_DIR) + "/census_table.tsv");
    std::ostringstream stored;
    stored << fixture.rdbuf();
    o.require(stored.str() == table, "output differs from the stored fixture");
    o.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
    o.detail = o.detail.empty() ? "14 values exact, " + std::to_string(elapsed) + " s" : o.detail;
    return o;
}

Outcome check_table_enumeration() {
    Outcome o;
    const uint64_t expected[5][5] = {{}, {0, 3}, {0, 15, 45}, {0, 63, 945, 3780}, {0, 255, 16065, 321300, 1927800}};
    double small = 0, large = 0;
    for (size_t n = 1; n <= 4; n++) {
        for (size_t m = 1; m <= n; m++) {
            LineCounter counter;
            std::ostream sink(&counter);
            auto start = Clock::now();
            uint64_t emitted = enumerate_sets_parallel(n, m, &sink, EnumerationOptions{});
            sink.flush();
            (n <= 3 ? small : large) += since(start);
            std::string where = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
            o.require(counter.lines == expected[n][m], where + " streamed " + std::to_string(counter.lines) + " lines");
            o.require(emitted == counter.lines, where + " count and stream disagree");
            o.require(BigInt(counter.lines) == count_sets(n, m), where + " disagrees with the formula");
        }
    }
    o.require(small < 10, "n <= 3 took " + std::to_string(small) + " s");
    o.require(large < 300, "n = 4 took " + std::to_string(large) + " s");
    if (o.pass) {
        o.detail = "n<=3 " + std::to_string(small) + " s, n=4 " + std::to_string(large) + " s, single worker";
    }
    return o;
}

Outcome check_distinctness() {
    Outcome o;
    auto start = Clock::now();
    auto one = verify_distinctness(1, DistinctnessMode::Exhaustive, 0, DEFAULT_SEED);
    auto two = verify_distinctness(2, DistinctnessMode::Exhaustive, 0, DEFAULT_SEED);
    double exhaustive = since(start);
    o.absorb(one);
    o.absorb(two);
    o.require(one.counts["forms"] == 3 && one.counts["pairs"] == 3, "G_1 coverage");
    o.require(two.counts["forms"] == 60 && two.counts["pairs"] == 1770, "G_2 coverage");
    o.require(exhaustive < 30, "exhaustive part took " + std::to_string(exhaustive) + " s");
    auto three = verify_distinctness(3, DistinctnessMode::Sampled, 10000, DEFAULT_SEED);
    auto four = verify_distinctness(4, DistinctnessMode::Sampled, 10000, DEFAULT_SEED);
    o.absorb(three);
    o.absorb(four);
    o.require(three.counts["pairs"] >= 10000, "n=3 pair count");
    o.require(four.counts["pairs"] >= 1000, "n=4 pair count");
    if (o.pass) {
        o.detail = "3 + 1770 exhaustive pairs in " + std::to_string(exhaustive) + " s; " +
                   std::to_string(three.counts["pairs"]) + " sampled at n=3, " + std::to_string(four.counts["pairs"]) +
                   " at n=4";
    }
    return o;
}

Outcome check_unit_rows() {
    Outcome o;
    for (size_t n = 1; n <= 3; n++) {
        auto r = verify_unit_rows(n, 100, DEFAULT_SEED + n);
        o.absorb(r);
        o.require(r.counts["forms"] >= 100, "n=" + std::to_string(n) + " sample count");
    }
    if (o.pass) {
        o.detail = "100 random forms per n in {1,2,3}, unit rows == commutant";
    }
    return o;
}

Outcome check_hamming_weight() {
    Outcome o;
    uint64_t families = 0, instances = 0;
    for (size_t n = 1; n <= 3; n++) {
        auto r = verify_hamming_weight(n, 3);
        o.absorb(r);
        families += r.counts["families"];
        instances += r.counts["instances"];
    }
    // 1 + (3 + 3) + (7 + 21 + 28) independent families of nonzero bit strings.
    o.require(families == 63, "covered " + std::to_string(families) + " families");
    if (o.pass) {
        o.detail = std::to_string(families) + " families, " + std::to_string(instances) + " (family, qubit) pairs";
    }
    return o;
}

Outcome check_t_count() {
    Outcome o;
    auto one = verify_spectrum(1, true, 0, DEFAULT_SEED);
    auto two = verify_spectrum(2, true, 0, DEFAULT_SEED);
    auto three = verify_spectrum(3, false, 500, DEFAULT_SEED);
    for (const auto *r : {&one, &two, &three}) {
        o.absorb(*r);
    }
    o.require(two.counts["forms"] >= 60, "G_2 coverage");
    o.require(three.counts["forms"] == 500, "n=3 sample count");
    if (o.pass) {
        o.detail = "all of G_1, G_2 (with identity and random Cliffords) and 500 forms at n=3";
    }
    return o;
}

Outcome check_oracle_agreement() {
    Outcome o;
    uint64_t gates = 0, exps = 0, forms = 0;
    for (size_t n = 1; n <= 2; n++) {
        auto r = verify_oracle(n, 100, DEFAULT_SEED + n);
        o.absorb(r);
        gates += r.counts["gates"];
        exps += r.counts["exponentials"];
        forms += r.counts["forms"];
    }
    if (o.pass) {
        o.detail = std::to_string(gates) + " gates, " + std::to_string(exps) + " exponentials, " +
                   std::to_string(forms) + " random forms, exact";
    }
    return o;
}

Outcome check_canonicalizer() {
    Outcome o;
    std::mt19937_64 rng(DEFAULT_SEED);
    size_t failures = 0;
    std::string first;
    for (int t = 0; t < 100; t++) {
        TLayerCircuit c = parse_circuit(random_circuit_text(2, 1, rng));
        CanonicalForm f = canonicalize_depth_one(c.cliffords[0], c.layers[0], c.cliffords[1]);
        if (channel_of_canonical(f) != oracle::channel_bruteforce(oracle::dense_of_circuit(c))) {
            failures++;
            first = first.empty() ? render_circuit(c) : first;
        }
    }
    for (int t = 0; t < 50; t++) {
        TLayerCircuit c = parse_circuit(random_circuit_text(2, 3, rng));
        LayeredForm l = canonicalize_depth_d(c);
        if (channel_of_layered(l) != oracle::channel_bruteforce(oracle::dense_of_circuit(c))) {
            failures++;
            first = first.empty() ? render_circuit(c) : first;
        }
    }
    o.require(failures == 0, std::to_string(failures) + " unsound circuits, first:\n" + first);
    TLayerCircuit single = parse_circuit("TLAYER: t=0\n");
    CanonicalForm f = canonicalize_depth_one(single.cliffords[0], single.layers[0], single.cliffords[1]);
    o.require(f.set.str() == "+Z" && f.clifford == CliffordTableau::from_gate_word(1, "S 0"),
              "single T gave " + render(f));
    if (o.pass) {
        o.detail = "100 depth-1 + 50 depth-3 circuits at n=2; T -> " + render(f);
    }
    return o;
}

Outcome check_orthogonality() {
    Outcome o;
    uint64_t samples = 0;
    for (size_t n = 1; n <= 3; n++) {
        auto r = verify_orthogonality(n, 334, DEFAULT_SEED + n);
        o.absorb(r);
        samples += r.counts["samples"];
    }
    o.require(samples >= 1000, "only " + std::to_string(samples) + " samples");
    if (o.pass) {
        o.detail = std::to_string(samples) + " samples over n = 1..3";
    }
    return o;
}

Outcome check_growth() {
    Outcome o;
    auto start = Clock::now();
    auto r = growth_check(16);
    double elapsed = since(start);
    o.absorb(r);
    o.require(r.counts["qubits_checked"] == 16, "coverage");
    o.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
    if (o.pass) {
        o.detail = "g_n >= 2^(n^2) for n = 1..16";
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"census table, formula path", check_table_formula},
        {"census table, enumeration path", check_table_enumeration},
        {"distinctness", check_distinctness},
        {"unit rows", check_unit_rows},
        {"hamming weight", check_hamming_weight},
        {"t-count inference", check_t_count},
        {"oracle agreement", check_oracle_agreement},
        {"canonicalizer soundness", check_canonicalizer},
        {"orthogonality and signed permutations", check_orthogonality},
        {"growth witness", check_growth},
    };
    int failed = 0;
    for (size_t k = 0; k < criteria.size(); k++) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str(), since(start));
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
