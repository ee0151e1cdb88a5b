// Copyright 2026 The CSDC Simulator Authors
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

#ifndef CSDC_RANDOM_H
#define CSDC_RANDOM_H

#include <cstdint>
#include <random>
#include <string_view>

namespace csdc {

/// Mixes a master seed with a stream name. Used to give every party its own substream.
uint64_t derive_seed(uint64_t master_seed, std::string_view stream_name);

/// A named, seedable random stream.
///
/// Draws are built directly from the 64-bit output of std::mt19937_64 (whose sequence is fixed by
/// the standard), so results are identical across standard library implementations.
class RandomStream {
   public:
    explicit RandomStream(uint64_t seed);
    RandomStream(uint64_t master_seed, std::string_view stream_name);

    uint64_t next();
    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform();
    /// Uniform in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound);
    bool coin();

   private:
    std::mt19937_64 engine_;
};

}  // namespace csdc

#endif
