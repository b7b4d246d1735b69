// Copyright 2026 The qbochner Authors. All Rights Reserved.
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

#ifndef QBOCHNER_TOOLS_CLI_HPP
#define QBOCHNER_TOOLS_CLI_HPP

#include <iosfwd>

namespace qbochner::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one subcommand. Returns 0 on success, 1 on validation failure
/// (cone violation, failed PD check, invalid input), 2 on usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qbochner::cli

#endif  // QBOCHNER_TOOLS_CLI_HPP
