// Copyright 2026 The drbench Authors
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

#ifndef DRBENCH_RANDOM_H
#define DRBENCH_RANDOM_H

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace drbench {

/// Mixes a 64-bit value (SplitMix64 finalizer).
uint64_t mix64(uint64_t x);
/// Derives an independent child seed from a parent seed and a tag.
uint64_t derive_seed(uint64_t parent, uint64_t tag);
uint64_t derive_seed(uint64_t parent, std::string_view tag);

/// Deterministic random source. The engine is std::mt19937_64; the integer
/// and real helpers avoid std::*_distribution so streams are identical across
/// standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(mix64(seed)) {}

    uint64_t next() { return engine_(); }
    /// Uniform integer in [0, bound). bound must be positive.
    uint64_t uniform(uint64_t bound);
    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform01() < p; }
    bool coin() { return (engine_() >> 63) != 0; }

    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (size_t k = items.size(); k > 1; k--) {
            std::swap(items[k - 1], items[uniform(k)]);
        }
    }
    std::vector<int> permutation(int n);

   private:
    std::mt19937_64 engine_;
};

}  // namespace drbench

#endif
