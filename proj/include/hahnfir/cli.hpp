// Copyright 2026 The hahnfir Authors.
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

#ifndef HAHNFIR_CLI_HPP_
#define HAHNFIR_CLI_HPP_

#include <ostream>

namespace hahnfir {

/// Exit codes: 0 success, 1 a verification check failed, 2 invalid
/// parameters or unreadable input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hahnfir

#endif  // HAHNFIR_CLI_HPP_
