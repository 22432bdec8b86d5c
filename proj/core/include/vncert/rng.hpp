// Copyright 2026 The vncert Authors
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

#ifndef VNCERT_RNG_HPP
#define VNCERT_RNG_HPP

#include <cstdint>
#include <random>

namespace vncert {

/// A reproducible random stream identified by (seed, stream). Distinct stream
/// indices under one seed give statistically independent sequences, so work
/// split into numbered batches is reproducible regardless of scheduling.
class RngStream {
   public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal deviate.
    double normal();

    std::mt19937_64 &engine() { return engine_; }

   private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

}  // namespace vncert

#endif  // VNCERT_RNG_HPP
