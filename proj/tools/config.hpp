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

#include <string>
#include <utility>
#include <vector>

namespace isingff::cli {

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Reads `key = value` lines. Text after '#' is ignored, as are blank lines.
/// Throws std::runtime_error on a missing file or a line without '='.
ConfigEntries read_config(const std::string& path);

/// Flag tokens for the entries, `--key=value`, with '_' in keys read as '-'
/// and truncation_level mapped to --level.
std::vector<std::string> config_arguments(const ConfigEntries& entries);

}  // namespace isingff::cli
