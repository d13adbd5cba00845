/*
 * Copyright 2026 The isingff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <ostream>

namespace isingff::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

/// Runs one subcommand. Writes <subcommand>.csv, <subcommand>_summary.txt,
/// <subcommand>.gp and <subcommand>_config.txt into --out (default
/// isingff_out) and prints the summary to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isingff::cli
