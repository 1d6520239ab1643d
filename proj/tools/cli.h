// Copyright 2026 The wsnsynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WSNSYNTH_TOOLS_CLI_H_
#define WSNSYNTH_TOOLS_CLI_H_

#include <iosfwd>

namespace wsnsynth {

// Entry point of the wsnsynth command line. Exit codes: 0 success (and, for
// validate, every test Satisfied), 1 error, 2 at least one Rejected verdict.
int RunCli(int argc, char** argv);
int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace wsnsynth

#endif  // WSNSYNTH_TOOLS_CLI_H_
