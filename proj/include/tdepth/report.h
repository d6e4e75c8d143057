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

#ifndef TDEPTH_REPORT_H
#define TDEPTH_REPORT_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tdepth {

/// Outcome of one machine check. Passes iff `failures` is empty.
struct VerificationReport {
    std::string check;
    /// Named instance counters, e.g. {"pairs", 1770}.
    std::map<std::string, uint64_t> counts;
    std::vector<std::string> failures;
    std::optional<uint64_t> seed;
    double elapsed_seconds = 0;

    bool passed() const {
        return failures.empty();
    }
    /// Sums counters, concatenates failures and elapsed time. Associative.
    void merge(const VerificationReport &other);

    /// check, pass, counts, failures, seed, elapsed_seconds.
    std::string to_json() const;
    /// One "key<TAB>value" line per field.
    std::string to_tsv() const;
};

}  // namespace tdepth

#endif
