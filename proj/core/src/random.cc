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

#include "drbench/random.h"

#include <numeric>

namespace drbench {

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t parent, uint64_t tag) { return mix64(mix64(parent) ^ (tag * 0xD6E8FEB86659FD93ULL)); }

uint64_t derive_seed(uint64_t parent, std::string_view tag) {
    // FNV-1a over the tag, then mixed with the parent.
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : tag) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return derive_seed(parent, h);
}

uint64_t Rng::uniform(uint64_t bound) {
    // Rejection on the top of the range keeps the result exactly uniform.
    uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
    uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % bound;
}

std::vector<int> Rng::permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    shuffle(p);
    return p;
}

}  // namespace drbench
