//
// Copyright 2026 The DPClustX Authors
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
//

#ifndef DPCLUSTX_PARALLEL_H_
#define DPCLUSTX_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace dpclustx {

// Worker cap: DPCLUSTX_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
std::size_t MaxThreads();

// Runs body(i) for i in [0, n). Each index is executed exactly once; bodies
// must only write to state owned by their index. Exceptions thrown by a body
// are rethrown on the calling thread.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace dpclustx

#endif  // DPCLUSTX_PARALLEL_H_
