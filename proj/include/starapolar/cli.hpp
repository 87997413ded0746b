// Copyright 2026 The starapolar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STARAPOLAR_CLI_HPP
#define STARAPOLAR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace starapolar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // the computation raised an error
inline constexpr int kExitUsage = 2;

// Entry point of the starapolar tool. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starapolar::cli

#endif  // STARAPOLAR_CLI_HPP
