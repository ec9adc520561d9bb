// Copyright 2026 The qconcat Authors
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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace qconcat {

/// Exhaustive census of self-orthogonal additive codes of length n <= 3.
/// Vectors are 2n-bit keys (a-part in the low n bits); a code is the 64-bit
/// mask of its members. The fixed vector for sigma/tau is key 1 (w at 0).
struct SelfOrthogonalCensus {
    std::size_t n = 0;
    std::vector<uint64_t> phi;    // phi[k]: codes of dimension k
    std::vector<uint64_t> sigma;  // sigma[k]: those containing the fixed vector
    std::vector<uint64_t> tau;    // tau[k]: those with the fixed vector in C-perp \ C
};

inline bool key_trace_inner(uint32_t u, uint32_t v, std::size_t n) {
    const uint32_t mask = (uint32_t{1} << n) - 1;
    uint32_t x = ((u & mask) & (v >> n)) ^ ((u >> n) & (v & mask));
    return std::popcount(x) & 1;
}

inline SelfOrthogonalCensus enumerate_self_orthogonal(std::size_t n) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("self-orthogonal census supports 1 <= n <= 3");
    }
    const uint32_t space = uint32_t{1} << (2 * n);
    SelfOrthogonalCensus census;
    census.n = n;
    census.phi.assign(n + 1, 0);
    census.sigma.assign(n + 1, 0);
    census.tau.assign(n + 1, 0);

    auto orthogonal_to_all = [&](uint64_t members, uint32_t v) {
        for (uint32_t u = 0; u < space; u++) {
            if (((members >> u) & 1) && key_trace_inner(u, v, n)) {
                return false;
            }
        }
        return true;
    };
    auto tally = [&](uint64_t members, std::size_t k) {
        census.phi[k]++;
        if ((members >> 1) & 1) {
            census.sigma[k]++;
        } else if (orthogonal_to_all(members, 1)) {
            census.tau[k]++;
        }
    };

    std::set<uint64_t> level = {uint64_t{1}};
    for (std::size_t k = 0; k <= n; k++) {
        std::set<uint64_t> next;
        for (uint64_t members : level) {
            tally(members, k);
            if (k == n) {
                continue;
            }
            for (uint32_t v = 1; v < space; v++) {
                if (((members >> v) & 1) || !orthogonal_to_all(members, v)) {
                    continue;
                }
                uint64_t grown = members;
                for (uint32_t u = 0; u < space; u++) {
                    if ((members >> u) & 1) {
                        grown |= uint64_t{1} << (u ^ v);
                    }
                }
                next.insert(grown);
            }
        }
        level = std::move(next);
    }
    return census;
}

}  // namespace qconcat
