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

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qconcat {

using Gf2mElem = uint32_t;

/// Primitive polynomials for GF(2^m), m = 1..16, as bit masks including the
/// leading term (bit m). Entry m = 1 is x + 1, whose root 1 generates GF(2)*.
inline constexpr std::array<uint32_t, 17> kDefaultPrimitivePolys = {
    0,        // unused
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x89,     // x^7 + x^3 + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

/// GF(2^m) with exp/log tables. Elements are integers below 2^m in the
/// polynomial basis {1, x, ..., x^(m-1)}; alpha is the class of x (of 1 when m = 1).
class GF2mField {
   public:
    /// Throws std::invalid_argument for m outside [1, 16] or a polynomial that
    /// is not primitive of degree m.
    explicit GF2mField(unsigned m, std::optional<uint32_t> primitive_poly = std::nullopt)
        : m_(m), poly_(0) {
        if (m < 1 || m > 16) {
            throw std::invalid_argument("field degree m must be in [1, 16], got " + std::to_string(m));
        }
        poly_ = primitive_poly.value_or(kDefaultPrimitivePolys[m]);
        if ((poly_ >> m) != 1) {
            throw std::invalid_argument("polynomial degree does not match m");
        }
        const uint32_t size = uint32_t{1} << m;
        order_ = size - 1;
        exp_.assign(2 * static_cast<std::size_t>(order_), 0);
        log_.assign(size, 0);
        uint32_t x = 1;
        const uint32_t alpha = m == 1 ? 1 : 2;
        for (uint32_t i = 0; i < order_; i++) {
            if (i > 0 && x == 1) {
                throw std::invalid_argument("polynomial is not primitive: element order " + std::to_string(i));
            }
            exp_[i] = x;
            log_[x] = i;
            x = mul_raw(x, alpha);
        }
        if (x != 1) {
            throw std::invalid_argument("polynomial is not primitive (not irreducible)");
        }
        for (uint32_t i = order_; i < 2 * order_; i++) {
            exp_[i] = exp_[i - order_];
        }
    }

    unsigned m() const { return m_; }
    uint32_t size() const { return order_ + 1; }
    /// Multiplicative order 2^m - 1, also the RS code length.
    uint32_t order() const { return order_; }
    uint32_t poly() const { return poly_; }
    Gf2mElem alpha() const { return exp_[1 % order_]; }

    Gf2mElem add(Gf2mElem x, Gf2mElem y) const { return x ^ y; }
    Gf2mElem mul(Gf2mElem x, Gf2mElem y) const {
        if (x == 0 || y == 0) {
            return 0;
        }
        return exp_[log_[x] + log_[y]];
    }
    Gf2mElem inv(Gf2mElem x) const {
        if (x == 0) {
            throw std::domain_error("inverse of zero");
        }
        return exp_[(order_ - log_[x]) % order_];
    }
    Gf2mElem div(Gf2mElem x, Gf2mElem y) const { return mul(x, inv(y)); }
    /// alpha^e for any integer e.
    Gf2mElem alpha_pow(int64_t e) const {
        int64_t r = e % static_cast<int64_t>(order_);
        if (r < 0) {
            r += order_;
        }
        return exp_[static_cast<std::size_t>(r)];
    }
    Gf2mElem pow(Gf2mElem x, uint64_t e) const {
        if (x == 0) {
            return e == 0 ? 1 : 0;
        }
        return exp_[(static_cast<uint64_t>(log_[x]) * (e % order_)) % order_];
    }
    uint32_t log(Gf2mElem x) const {
        if (x == 0) {
            throw std::domain_error("log of zero");
        }
        return log_[x];
    }

    /// Absolute trace Tr(x) = x + x^2 + ... + x^(2^(m-1)), in {0, 1}.
    bool trace(Gf2mElem x) const {
        Gf2mElem acc = 0;
        Gf2mElem p = x;
        for (unsigned i = 0; i < m_; i++) {
            acc ^= p;
            p = mul(p, p);
        }
        if (acc > 1) {
            throw std::logic_error("trace left GF(2)");
        }
        return acc == 1;
    }

   private:
    uint32_t mul_raw(uint32_t x, uint32_t y) const {
        uint32_t r = 0;
        while (y) {
            if (y & 1) {
                r ^= x;
            }
            y >>= 1;
            x <<= 1;
            if (x >> m_) {
                x ^= poly_;
            }
        }
        return r;
    }

    unsigned m_;
    uint32_t poly_;
    uint32_t order_ = 0;
    std::vector<Gf2mElem> exp_;
    std::vector<uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const GF2mField>;

inline FieldPtr make_field(unsigned m, std::optional<uint32_t> poly = std::nullopt) {
    return std::make_shared<const GF2mField>(m, poly);
}

/// A basis b_1..b_m of GF(2^m) over GF(2) with Tr(b_i b_j) = delta_ij.
struct SelfDualBasis {
    FieldPtr field;
    std::vector<Gf2mElem> elements;

    /// Coordinates of x: c_j = Tr(x b_j), so that x = sum_j c_j b_j.
    std::vector<uint8_t> coordinates(Gf2mElem x) const {
        std::vector<uint8_t> c(elements.size());
        for (std::size_t j = 0; j < elements.size(); j++) {
            c[j] = field->trace(field->mul(x, elements[j])) ? 1 : 0;
        }
        return c;
    }

    Gf2mElem combine(const std::vector<uint8_t> &coords) const {
        Gf2mElem x = 0;
        for (std::size_t j = 0; j < elements.size(); j++) {
            if (coords[j]) {
                x ^= elements[j];
            }
        }
        return x;
    }

    bool is_self_dual() const {
        for (std::size_t i = 0; i < elements.size(); i++) {
            for (std::size_t j = 0; j < elements.size(); j++) {
                if (field->trace(field->mul(elements[i], elements[j])) != (i == j)) {
                    return false;
                }
            }
        }
        return elements.size() == field->m();
    }
};

/// Lexicographically first self-dual basis (elements compared as integers, in
/// order b_1 < b_2 < ...), found by depth-first search over orthonormal prefixes.
/// Orthonormality already forces GF(2)-independence. Supports m <= 8.
inline SelfDualBasis self_dual_basis(const FieldPtr &field) {
    const unsigned m = field->m();
    if (m > 8) {
        throw std::invalid_argument("self-dual basis search is limited to m <= 8");
    }
    std::vector<Gf2mElem> chosen;
    // Tr(x^2) = Tr(x), so b_i must have trace 1.
    std::vector<Gf2mElem> candidates;
    for (Gf2mElem x = 1; x < field->size(); x++) {
        if (field->trace(x)) {
            candidates.push_back(x);
        }
    }
    auto search = [&](auto &&self, std::size_t from) -> bool {
        if (chosen.size() == m) {
            return true;
        }
        for (std::size_t c = from; c < candidates.size(); c++) {
            Gf2mElem x = candidates[c];
            bool ok = true;
            for (Gf2mElem y : chosen) {
                if (field->trace(field->mul(x, y))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            chosen.push_back(x);
            if (self(self, c + 1)) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    if (!search(search, 0)) {
        throw std::logic_error("no self-dual basis found");
    }
    SelfDualBasis basis{field, chosen};
    if (!basis.is_self_dual()) {
        throw std::logic_error("self-dual basis failed verification");
    }
    return basis;
}

/// Binary expansion of a word over GF(2^m): symbol i becomes bits
/// [i*m, (i+1)*m) holding its coordinates in the basis.
inline std::vector<uint8_t> binary_expand(const std::vector<Gf2mElem> &word, const SelfDualBasis &basis) {
    const std::size_t m = basis.elements.size();
    std::vector<uint8_t> bits(word.size() * m);
    for (std::size_t i = 0; i < word.size(); i++) {
        auto c = basis.coordinates(word[i]);
        for (std::size_t j = 0; j < m; j++) {
            bits[i * m + j] = c[j];
        }
    }
    return bits;
}

/// Inverse of binary_expand.
inline std::vector<Gf2mElem> binary_collapse(const std::vector<uint8_t> &bits, const SelfDualBasis &basis) {
    const std::size_t m = basis.elements.size();
    if (bits.size() % m != 0) {
        throw std::invalid_argument("bit length not a multiple of m");
    }
    std::vector<Gf2mElem> word(bits.size() / m);
    for (std::size_t i = 0; i < word.size(); i++) {
        std::vector<uint8_t> c(bits.begin() + static_cast<std::ptrdiff_t>(i * m),
                               bits.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
        word[i] = basis.combine(c);
    }
    return word;
}

/// Binary expansion of the GF(2^m)-span of `generator_rows`: each row r
/// contributes the m binary rows expand(b_j * r), j = 1..m, giving a binary
/// generator set of rank m * rank(rows).
inline std::vector<std::vector<uint8_t>> binary_expand_code(const std::vector<std::vector<Gf2mElem>> &generator_rows,
                                                            const SelfDualBasis &basis) {
    std::vector<std::vector<uint8_t>> out;
    for (const auto &row : generator_rows) {
        for (Gf2mElem b : basis.elements) {
            std::vector<Gf2mElem> scaled(row.size());
            for (std::size_t i = 0; i < row.size(); i++) {
                scaled[i] = basis.field->mul(b, row[i]);
            }
            out.push_back(binary_expand(scaled, basis));
        }
    }
    return out;
}

}  // namespace qconcat
