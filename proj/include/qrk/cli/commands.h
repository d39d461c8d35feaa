// Copyright 2026 The qrk Authors
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

#ifndef QRK_CLI_COMMANDS_H_
#define QRK_CLI_COMMANDS_H_

#include <ostream>

namespace qrk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 2;
inline constexpr int kExitInternalError = 3;

/// Entry point of the qrk tool. Subcommands: keyrate, sweep, mc, analytic.
/// CSV goes to `out` (or the --out file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qrk::cli

#endif  // QRK_CLI_COMMANDS_H_
