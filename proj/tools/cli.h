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

#ifndef TDEPTH_TOOLS_CLI_H
#define TDEPTH_TOOLS_CLI_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdepth::cli {

enum ExitCode : int { EXIT_PASS = 0, EXIT_COUNTEREXAMPLE = 1, EXIT_USAGE = 2 };

/// Raised for anything the user has to fix on the command line. `flag` names the culprit.
class UsageError : public std::runtime_error {
   public:
    UsageError(std::string flag, const std::string &message)
        : std::runtime_error(flag.empty() ? message : flag + ": " + message), flag_(std::move(flag)) {
    }
    const std::string &flag() const {
        return flag_;
    }

   private:
    std::string flag_;
};

struct RunConfig {
    /// count, table, enumerate, verify, growth, canonicalize.
    std::string subcommand;
    /// For verify: distinctness, unit-rows, hamming-weight, spectrum, oracle, orthogonality.
    std::string check;
    std::optional<size_t> qubits;
    std::optional<size_t> tcount;
    std::optional<size_t> max_qubits;
    std::optional<uint64_t> trials;
    /// Empty means the default constant; "random" draws one from the OS.
    std::string seed;
    bool exhaustive = false;
    bool allow_large = false;
    std::string in_path;
    std::string out_path;
    bool json = false;
    size_t workers = 1;
};

/// Checks flag combinations for the subcommand. Throws UsageError.
void validate(const RunConfig &config);

/// Runs one subcommand. Reports go to `out` (or the --out file), diagnostics to `err`.
/// Returns EXIT_PASS, EXIT_COUNTEREXAMPLE or EXIT_USAGE; never throws.
int dispatch(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Full command line entry point shared by the binary and the tests. argv[0] is skipped.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace tdepth::cli

#endif
