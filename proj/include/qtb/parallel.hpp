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

#ifndef QTB_PARALLEL_HPP
#define QTB_PARALLEL_HPP

#include <functional>

namespace qtb {

/// Worker count: QTB_WORKERS when set, hardware concurrency otherwise.
int worker_count();

/// Runs fn(0..n-1) on a work pool; results must be keyed by index so the
/// outcome is independent of scheduling. Exceptions are rethrown on the
/// calling thread.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace qtb

#endif  // QTB_PARALLEL_HPP
