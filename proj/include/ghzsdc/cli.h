// Copyright 2026 The ghzsdc Authors
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

#ifndef GHZSDC_CLI_H
#define GHZSDC_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace ghzsdc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kAborted = 2,
  /// `run` hit its round cap before the whole message was sent.
  kIncomplete = 3,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Human summaries go to `out`, diagnostics to `err`; machine
/// artifacts are only written to files.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghzsdc::cli

#endif  // GHZSDC_CLI_H
