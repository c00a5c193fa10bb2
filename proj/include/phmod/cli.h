// Copyright 2026 The Photonic Module Authors
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

#ifndef PHMOD_CLI_H
#define PHMOD_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace phmod {

/// Process exit codes of the phmod tool, one per error class.
enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_UNEQUAL = 1,
    EXIT_PARSE = 2,
    EXIT_VALIDATION = 3,
    EXIT_INFEASIBLE = 4,
    EXIT_VERIFICATION = 5,
    EXIT_RANGE = 6,
    EXIT_INTERNAL = 7,
};

/// Runs the command line `args` (args[0] is the program name) and returns the exit code.
/// Subcommands: prepare | schedule | feasibility | verify.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace phmod

#endif
