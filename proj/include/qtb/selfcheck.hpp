// Copyright 2026 The qtbounds Authors
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

#ifndef QTB_SELFCHECK_HPP
#define QTB_SELFCHECK_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qtb {

struct CheckResult {
  std::string name;
  bool pass = false;
  double slack = 0.0;  // measured margin, check-specific units
  std::string detail;
};

/// Aggregated invariant suites of all modules: tensor identities, local
/// detailed balance on the benchmark models, Gibbs certifications, the
/// counting-statistics oracle agreements, thermodynamic identities, the
/// Cramér-Rao and Fisher chains, and the derivative identity.
std::vector<CheckResult> run_selfcheck();

/// Prints one line per check; returns true when all pass.
bool print_selfcheck(std::ostream& out);

}  // namespace qtb

#endif  // QTB_SELFCHECK_HPP
