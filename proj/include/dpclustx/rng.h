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

#ifndef DPCLUSTX_RNG_H_
#define DPCLUSTX_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace dpclustx {

// A reproducible random stream identified by a master seed and a purpose
// tag with optional indices, e.g. ("cand", cluster, attribute). The same
// identity always yields the same sequence; different identities are
// seeded independently, so results do not depend on evaluation order.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::string_view purpose,
            std::initializer_list<std::uint64_t> indices = {});

  std::uint64_t NextU64() { return engine_(); }

  // Uniform draw in the open interval (0, 1).
  double Uniform();

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
};

}  // namespace dpclustx

#endif  // DPCLUSTX_RNG_H_
