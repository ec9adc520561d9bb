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

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qconcat {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::size_t e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; i++) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace detail {

/// prod_{i=1}^{last} (2^{2(n-i)} - 1) / (2^i - 1), divided exactly at the end.
inline BigInt gaussian_ratio(std::size_t n, std::size_t last) {
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t i = 1; i <= last; i++) {
        num *= pow2(2 * (n - i)) - 1;
        den *= pow2(i) - 1;
    }
    if (num % den != 0) {
        throw std::logic_error("counting ratio is not an integer");
    }
    return num / den;
}

/// sum_{i=1}^{d-1} 3^i binom(n, i): vectors of weight 1..d-1 in GF(4)^n.
inline BigInt ball_count(std::size_t n, std::size_t d) {
    BigInt sum = 0;
    BigInt p3 = 1;
    for (std::size_t i = 1; i + 1 <= d; i++) {
        p3 *= 3;
        sum += p3 * binomial(n, i);
    }
    return sum;
}

}  // namespace detail

/// Number of self-orthogonal additive codes of length n and dimension k that
/// contain a fixed nonzero vector. 1 <= k <= n.
inline BigInt sigma_count(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("sigma_count needs 1 <= k <= n (n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ")");
    }
    return detail::gaussian_ratio(n, k - 1);
}

/// Number of self-orthogonal additive codes C of length n and dimension k with
/// a fixed nonzero vector in C-perp \ C. Defined for 1 <= k <= n; the k = n
/// value is 0, since a self-orthogonal code of dimension n is self-dual.
inline BigInt tau_count(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("tau_count needs 1 <= k <= n (n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ")");
    }
    return pow2(k) * detail::gaussian_ratio(n, k);
}

/// Existence of a stabilizer code [[n, k]] whose C-perp has minimum distance
/// at least d: sum_{i<d} 3^i binom(n,i) < (2^{2n} - 1) / (2^{n+k} - 1),
/// compared after cross-multiplication.
inline bool gv_exists(std::size_t n, std::size_t k, std::size_t d) {
    if (d < 1 || d > n || k > n) {
        throw std::invalid_argument("gv_exists needs 1 <= d <= n and 0 <= k <= n");
    }
    return detail::ball_count(n, d) * (pow2(n + k) - 1) < pow2(2 * n) - 1;
}

/// Nested variant: sum_{i<d} 3^i binom(n,i) < (2^{n-k1} - 1) / (2^{k2-k1} - 1).
/// k1 = k2 is the degenerate chain and returns true.
inline bool nested_gv_exists(std::size_t n, std::size_t k1, std::size_t k2, std::size_t d) {
    if (k1 > k2 || k2 > n) {
        throw std::invalid_argument("nested_gv_exists needs 0 <= k1 <= k2 <= n");
    }
    if (k1 == k2) {
        return true;
    }
    return detail::ball_count(n, d) * (pow2(k2 - k1) - 1) < pow2(n - k1) - 1;
}

/// Largest k for which gv_exists(n, k, ceil(delta n)) holds, divided by n; 0
/// if none. The existence rate at length n.
inline double gv_threshold_rate(std::size_t n, double delta) {
    std::size_t d = static_cast<std::size_t>(std::ceil(delta * static_cast<double>(n)));
    if (d < 1) {
        d = 1;
    }
    if (d > n) {
        return 0;
    }
    // The predicate is monotone in k: binary search for the last true.
    if (!gv_exists(n, 0, d)) {
        return 0;
    }
    std::size_t lo = 0;
    std::size_t hi = n;
    while (lo < hi) {
        std::size_t mid = (lo + hi + 1) / 2;
        if (gv_exists(n, mid, d)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return static_cast<double>(lo) / static_cast<double>(n);
}

}  // namespace qconcat
