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

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qconcat/additive_code.hpp"
#include "qconcat/distance.hpp"
#include "qconcat/gf2.hpp"

namespace qconcat {

class SearchExhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline SymplecticVec random_combination(const std::vector<SymplecticVec> &basis, std::size_t n, std::mt19937_64 &rng) {
    SymplecticVec v(n);
    for (std::size_t i = 0; i < basis.size(); i += 64) {
        uint64_t bits = rng();
        for (std::size_t j = i; j < std::min(basis.size(), i + 64); j++) {
            if ((bits >> (j - i)) & 1) {
                v += basis[j];
            }
        }
    }
    return v;
}

}  // namespace detail

/// A random self-orthogonal additive code of length n and dimension dim <= n,
/// grown one vector at a time from the dual of what has been chosen so far.
inline AdditiveCode random_self_orthogonal(std::size_t n, std::size_t dim, std::mt19937_64 &rng) {
    if (dim > n) {
        throw std::invalid_argument("self-orthogonal codes have dimension at most n");
    }
    std::vector<SymplecticVec> gens;
    RowEchelon span(n);
    while (gens.size() < dim) {
        AdditiveCode current(n, gens);
        std::vector<SymplecticVec> dual_basis = current.dual().generators();
        SymplecticVec v = detail::random_combination(dual_basis, n, rng);
        if (span.insert(v)) {
            gens.push_back(std::move(v));
        }
    }
    return AdditiveCode(n, std::move(gens));
}

/// A random subcode of dimension dim of `c`.
inline AdditiveCode random_subcode(const AdditiveCode &c, std::size_t dim, std::mt19937_64 &rng) {
    if (dim > c.dim()) {
        throw std::invalid_argument("subcode dimension exceeds code dimension");
    }
    std::vector<SymplecticVec> gens;
    RowEchelon span(c.length());
    while (gens.size() < dim) {
        SymplecticVec v = detail::random_combination(c.generators(), c.length(), rng);
        if (span.insert(v)) {
            gens.push_back(std::move(v));
        }
    }
    return AdditiveCode(c.length(), std::move(gens));
}

/// Seeded randomized search for stabilizer codes Q_1, ..., Q_s on n <= 12
/// qubits with k_j = dims[j] (strictly ascending), C_s in ... in C_1, and exact
/// distance of Q_j at least min_dists[j]. Each trial draws C_1 at random and
/// then nested random subcodes; every distance is verified by coset
/// enumeration and recorded as exact. Throws SearchExhausted after `trials`
/// unsuccessful draws, which does not prove nonexistence.
inline std::vector<StabilizerCode> find_nested_chain(std::size_t n, const std::vector<std::size_t> &dims,
                                                     const std::vector<std::size_t> &min_dists, uint64_t seed = 0,
                                                     std::size_t trials = 5000) {
    if (n < 1 || n > 12) {
        throw std::invalid_argument("find_nested_chain supports 1 <= n <= 12");
    }
    if (dims.empty() || dims.size() != min_dists.size()) {
        throw std::invalid_argument("dims and min_dists must be nonempty and of equal length");
    }
    for (std::size_t j = 0; j < dims.size(); j++) {
        if (dims[j] < 1 || dims[j] > n || (j > 0 && dims[j] <= dims[j - 1])) {
            throw std::invalid_argument("dims must be strictly ascending within [1, n]");
        }
    }
    for (std::size_t d : min_dists) {
        if (d > n) {
            throw SearchExhausted("no code on " + std::to_string(n) + " qubits has distance " + std::to_string(d));
        }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < trials; trial++) {
        std::vector<AdditiveCode> cs;
        cs.push_back(random_self_orthogonal(n, n - dims[0], rng));
        for (std::size_t j = 1; j < dims.size(); j++) {
            cs.push_back(random_subcode(cs.back(), n - dims[j], rng));
        }
        std::vector<StabilizerCode> chain;
        bool ok = true;
        for (std::size_t j = 0; j < dims.size() && ok; j++) {
            StabilizerCode q = StabilizerCode::from_stabilizers(cs[j], "search:" + std::to_string(n) + ":" +
                                                                           std::to_string(dims[j]) + ":" +
                                                                           std::to_string(min_dists[j]));
            std::size_t d = min_weight_outside(q).weight;
            if (d < min_dists[j]) {
                ok = false;
                break;
            }
            q.set_exact_distance(d);
            chain.push_back(std::move(q));
        }
        if (ok) {
            return chain;
        }
    }
    throw SearchExhausted("no nested chain found on " + std::to_string(n) + " qubits after " +
                          std::to_string(trials) + " trials (seed " + std::to_string(seed) + ")");
}

}  // namespace qconcat
