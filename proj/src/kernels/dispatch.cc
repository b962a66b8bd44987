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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "dpclustx/kernels.h"

namespace dpclustx::kernels {
namespace {

const KernelTable* Lookup(std::string_view name) {
  if (name == "scalar") return &ScalarKernels();
  if (name == "avx2") return Avx2Kernels();
  return nullptr;
}

const KernelTable* InitialTable() {
  if (const char* env = std::getenv("DPCLUSTX_SIMD")) {
    if (const KernelTable* table = Lookup(env)) return table;
  }
  if (const KernelTable* avx2 = Avx2Kernels()) return avx2;
  return &ScalarKernels();
}

std::atomic<const KernelTable*>& Active() {
  static std::atomic<const KernelTable*> active{InitialTable()};
  return active;
}

}  // namespace

const KernelTable& ActiveKernels() { return *Active().load(); }

bool SelectKernels(std::string_view name) {
  const KernelTable* table = Lookup(name);
  if (table == nullptr) return false;
  Active().store(table);
  return true;
}

}  // namespace dpclustx::kernels
