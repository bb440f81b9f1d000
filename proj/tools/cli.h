// Copyright 2026 The stsp Authors.
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

#ifndef STSP_TOOLS_CLI_H_
#define STSP_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace stsp::cli {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kCap = 3,
  kVerifyFailed = 4,
};

// Runs one command line (args excludes the program name). All output goes
// to the two streams; files are read and written only where the arguments
// say so.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace stsp::cli

#endif  // STSP_TOOLS_CLI_H_
