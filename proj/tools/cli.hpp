// Copyright 2026 The ratbase Authors.
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

// The ratbase command line. RunCli is the whole tool minus process setup so
// tests can drive it in-process.

#ifndef RATBASE_TOOLS_CLI_HPP_
#define RATBASE_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ratbase::cli {

enum ExitCode : int {
  kOk = 0,
  kParse = 1,
  kValidation = 2,
  kBudget = 3,
  kNotIsometric = 4,
  kPrecondition = 5,
};

/// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratbase::cli

#endif  // RATBASE_TOOLS_CLI_HPP_
