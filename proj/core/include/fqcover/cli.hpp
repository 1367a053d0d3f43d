// Copyright 2026 The fqcover Authors
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

#ifndef FQCOVER_CLI_HPP
#define FQCOVER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fqcover::cli {

/// Command-line entry point, reusable from tests.
///
/// Subcommands: pi-table, check-cover, distort, bound, optimize-t1,
/// certify-paper, search. Exit codes: 0 on success (and on an overall
/// "pass" for certify-paper), 1 when certify-paper records a failing
/// verification row, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqcover::cli

#endif  // FQCOVER_CLI_HPP
