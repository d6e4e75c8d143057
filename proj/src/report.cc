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

#include "tdepth/report.h"

#include <sstream>

#include "json.hpp"

namespace tdepth {

void VerificationReport::merge(const VerificationReport &other) {
    if (check.empty()) {
        check = other.check;
    }
    for (const auto &[k, v] : other.counts) {
        counts[k] += v;
    }
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    if (!seed) {
        seed = other.seed;
    }
    elapsed_seconds += other.elapsed_seconds;
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["pass"] = passed();
    j["counts"] = counts;
    j["failures"] = failures;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["elapsed_seconds"] = elapsed_seconds;
    return j.dump();
}

std::string VerificationReport::to_tsv() const {
    std::ostringstream out;
    out << "check\t" << check << '\n';
    out << "result\t" << (passed() ? "pass" : "FAIL") << '\n';
    for (const auto &[k, v] : counts) {
        out << k << '\t' << v << '\n';
    }
    if (seed) {
        out << "seed\t" << *seed << '\n';
    }
    out << "elapsed_seconds\t" << elapsed_seconds << '\n';
    for (const auto &f : failures) {
        out << "failure\t" << f << '\n';
    }
    return out.str();
}

}  // namespace tdepth
