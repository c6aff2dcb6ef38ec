// Copyright 2026 The optdyn Authors.
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

#ifndef OPTDYN_CLI_VERIFY_H_
#define OPTDYN_CLI_VERIFY_H_

#include <filesystem>
#include <string>
#include <vector>

namespace optdyn::cli {

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool AllPass() const;
};

struct VerifyOptions {
  // CSV artifacts go to out_dir/verify/<suite>/.
  std::filesystem::path out_dir = "out";
  int threads = 1;
};

// oracles, coincidence, reduction, lyapunov, lowerbound, bestiterate,
// determinism, all.
const std::vector<std::string>& SuiteNames();
bool IsKnownSuite(const std::string& name);

SuiteReport RunSuite(const std::string& name, const VerifyOptions& options);

// "PASS <id> <name>: <detail> [<seconds> s]".
std::string FormatCheck(const CheckResult& check);

}  // namespace optdyn::cli

#endif  // OPTDYN_CLI_VERIFY_H_
