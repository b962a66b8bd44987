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

#include "dpclustx/rng.h"

namespace dpclustx {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t StreamKey(std::uint64_t seed, std::string_view purpose,
                        std::initializer_list<std::uint64_t> indices) {
  std::uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ Fnv1a(purpose));
  // Mixing the arity keeps ("x", 0) and ("x") apart.
  h = SplitMix64(h ^ indices.size());
  for (std::uint64_t index : indices) h = SplitMix64(h ^ index);
  return h;
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::string_view purpose,
                     std::initializer_list<std::uint64_t> indices)
    : key_(StreamKey(master_seed, purpose, indices)), engine_(key_) {}

double RngStream::Uniform() {
  // 53 random bits centred in their cell: never exactly 0 or 1.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace dpclustx
