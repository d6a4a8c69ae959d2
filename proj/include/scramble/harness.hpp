// Copyright 2026 The Scramble Authors
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


#ifndef SCRAMBLE_HARNESS_HPP
#define SCRAMBLE_HARNESS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace scramble {

/// Exit statuses of the command-line harness.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,
    kExitUsage = 2,
    kExitFailure = 3,
};

/// Runs one subcommand; args excludes the program name. Results go to the
/// --out file when given, otherwise to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace scramble

#endif  // SCRAMBLE_HARNESS_HPP
