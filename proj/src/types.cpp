// Copyright 2026 The Scramble Authors
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

#include "scramble/types.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>

namespace scramble {

namespace {

std::size_t initial_cap() {
    if (const char* env = std::getenv("SCRAMBLE_DENSE_CAP")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            return static_cast<std::size_t>(value);
        }
    }
    return 1024;
}

std::atomic<std::size_t>& cap_storage() {
    static std::atomic<std::size_t> cap{initial_cap()};
    return cap;
}

}  // namespace

std::size_t dense_cap() { return cap_storage().load(); }

void set_dense_cap(std::size_t cap) { cap_storage().store(cap); }

std::size_t ipow(std::size_t base, int exponent) {
    std::size_t out = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
            throw SizeCapExceeded("integer power overflow");
        }
        out *= base;
    }
    return out;
}

void require_dense(int n, int d) {
    const std::size_t dim = ipow(static_cast<std::size_t>(d), n);
    if (dim > dense_cap()) {
        throw SizeCapExceeded("dimension " + std::to_string(d) + "^" + std::to_string(n) + " = " +
                              std::to_string(dim) + " exceeds dense cap " + std::to_string(dense_cap()));
    }
}

}  // namespace scramble
