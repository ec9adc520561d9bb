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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qconcat/additive_code.hpp"
#include "qconcat/gf2m.hpp"
#include "qconcat/reed_solomon.hpp"

namespace qconcat {

/// Quantum Reed-Solomon code [[mn, m(n - 2k)]] with
///   C      = w B(C_RS)      + w-bar B(C_RS),
///   C-perp = w B(C_RS-perp) + w-bar B(C_RS-perp),
/// where C_RS is the [n, k] RS code over GF(2^m) and B() is binary expansion in
/// a self-dual basis. Outer symbol i occupies GF(4) coordinates [i*m, (i+1)*m),
/// in basis order.
struct QuantumRSCode {
    unsigned m = 0;
    uint32_t n = 0;
    uint32_t k = 0;
    SelfDualBasis basis;
    RSCode crs;
    RSCode crs_dual;
    StabilizerCode stab;

    std::size_t block_width() const { return m; }

    /// Splits a length-nm GF(4) word into its w-part and w-bar-part, each read
    /// as a length-n word over GF(2^m) through the self-dual basis.
    std::pair<std::vector<Gf2mElem>, std::vector<Gf2mElem>> split(const SymplecticVec &v) const {
        if (v.size() != static_cast<std::size_t>(m) * n) {
            throw std::invalid_argument("word length does not match quantum RS code");
        }
        std::vector<uint8_t> a(v.size()), b(v.size());
        for (std::size_t i = 0; i < v.size(); i++) {
            a[i] = v.a(i);
            b[i] = v.b(i);
        }
        return {binary_collapse(a, basis), binary_collapse(b, basis)};
    }

    /// Inverse of split.
    SymplecticVec merge(const std::vector<Gf2mElem> &a_word, const std::vector<Gf2mElem> &b_word) const {
        auto a = binary_expand(a_word, basis);
        auto b = binary_expand(b_word, basis);
        SymplecticVec v(a.size());
        for (std::size_t i = 0; i < a.size(); i++) {
            v.set(i, F4(a[i] != 0, b[i] != 0));
        }
        return v;
    }
};

namespace detail {

/// For each binary row r: (r, 0) then (0, r), i.e. w*r and w-bar*r.
inline std::vector<SymplecticVec> omega_pair_rows(const std::vector<std::vector<uint8_t>> &rows) {
    std::vector<SymplecticVec> out;
    for (int part = 0; part < 2; part++) {
        for (const auto &r : rows) {
            SymplecticVec v(r.size());
            for (std::size_t i = 0; i < r.size(); i++) {
                if (r[i]) {
                    v.set(i, part == 0 ? F4::omega() : F4::omega_bar());
                }
            }
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace detail

/// Builds the quantum RS code for 1 <= k <= 2^(m-1) - 1. Verifies C is
/// self-orthogonal and that the constructed C-perp is the trace dual of C.
inline QuantumRSCode quantum_rs(unsigned m, uint32_t k) {
    if (m < 1 || m > 8) {
        throw std::invalid_argument("quantum RS construction needs 1 <= m <= 8");
    }
    const uint32_t limit = (uint32_t{1} << (m - 1)) - 1;
    if (k < 1 || k > limit) {
        throw std::invalid_argument("k exceeds 2^{m-1}-1 = " + std::to_string(limit) + " (or is zero): k = " +
                                    std::to_string(k));
    }
    FieldPtr field = make_field(m);
    const uint32_t n = field->order();
    QuantumRSCode q{m, n, k, self_dual_basis(field), rs_build(field, n - k + 1), rs_build(field, n - k + 1), {}};
    q.crs_dual = rs_dual(q.crs);

    const std::size_t len = static_cast<std::size_t>(m) * n;
    AdditiveCode c(len, detail::omega_pair_rows(binary_expand_code(q.crs.generator_matrix(), q.basis)));
    AdditiveCode c_perp(len, detail::omega_pair_rows(binary_expand_code(q.crs_dual.generator_matrix(), q.basis)));
    if (!c.is_self_orthogonal()) {
        throw std::logic_error("quantum RS stabilizer is not self-orthogonal");
    }
    q.stab = StabilizerCode::from_pair(std::move(c), std::move(c_perp),
                                       "qrs:" + std::to_string(m) + ":" + std::to_string(k));
    if (q.stab.k() != static_cast<std::size_t>(m) * (n - 2 * k)) {
        throw std::logic_error("quantum RS dimension mismatch");
    }
    q.stab.certify(k + 1);
    return q;
}

}  // namespace qconcat
