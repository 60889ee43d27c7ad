// Copyright 2026 The cvmap Authors
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

#ifndef CVMAP_TOOLS_CLI_H
#define CVMAP_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

#include "cvmap/bell.h"

namespace cvmap::cli {

/// Process exit statuses. Stable contract.
enum ExitCode : int {
    kOk = 0,
    kInvariantFailure = 1,
    kUsageError = 2,
    kIoError = 3,
};

/// Runs one command line (args excludes the program name). Data goes to the
/// output file or `out`; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// `r,B` header plus one `%.6f,%.6f` row per point, newline-terminated.
std::string format_curve_csv(const BellCurve &curve);
std::string format_curve_json(const BellCurve &curve);

}  // namespace cvmap::cli

#endif
