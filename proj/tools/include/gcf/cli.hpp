// Copyright 2026 The gcf Authors
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

#ifndef GCF_CLI_HPP
#define GCF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gcf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitEngine = 1;
inline constexpr int kExitParse = 2;

/// Runs the gcf command line.  args excludes the program name.  Returns 0
/// for any answer (No and Unknown included), 1 when the engine rejects the
/// input, 2 when the input does not parse.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcf::cli

#endif  // GCF_CLI_HPP
