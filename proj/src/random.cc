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

#include "csdc/random.h"

#include <stdexcept>

namespace csdc {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t fnv1a(std::string_view text) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace

uint64_t derive_seed(uint64_t master_seed, std::string_view stream_name) {
    return splitmix64(splitmix64(master_seed) ^ fnv1a(stream_name));
}

RandomStream::RandomStream(uint64_t seed) : engine_(seed) {
}

RandomStream::RandomStream(uint64_t master_seed, std::string_view stream_name)
    : engine_(derive_seed(master_seed, stream_name)) {
}

uint64_t RandomStream::next() {
    return engine_();
}

double RandomStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

uint64_t RandomStream::below(uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("RandomStream::below: bound must be positive");
    }
    // Rejection sampling keeps the draw unbiased.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

bool RandomStream::coin() {
    return (engine_() >> 63) != 0;
}

}  // namespace csdc
