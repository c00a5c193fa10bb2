// Copyright 2026 The Photonic Module Authors
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

#ifndef PHMOD_RNG_H
#define PHMOD_RNG_H

#include <cstdint>
#include <random>

namespace phmod {

/// Seeded deterministic random source shared by every probabilistic operation.
///
/// Only the raw 64-bit engine output is consumed, so a seed reproduces the same
/// run on every platform. `split` derives an independent child stream.
class Rng {
   public:
    explicit Rng(uint64_t seed) : seed_(seed), engine_(seed) {
    }

    uint64_t seed() const {
        return seed_;
    }

    uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool coin() {
        return (engine_() >> 63) != 0;
    }

    /// Uniform integer in [0, bound).
    uint64_t below(uint64_t bound) {
        // Rejection sampling keeps the result independent of the standard library's distributions.
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % bound;
    }

    Rng split() {
        uint64_t child = engine_() ^ 0x9E3779B97F4A7C15ULL;
        return Rng(child);
    }

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace phmod

#endif
