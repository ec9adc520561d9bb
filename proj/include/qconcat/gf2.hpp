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
#include <optional>
#include <vector>

#include "qconcat/symplectic.hpp"

namespace qconcat {

inline constexpr std::size_t kNoBit = static_cast<std::size_t>(-1);

/// Lowest set coordinate of the 2n-bit view, or kNoBit for the zero vector.
inline std::size_t lowest_bit(const SymplecticVec &v) {
    const std::size_t w = v.num_words();
    for (std::size_t i = 0; i < w; i++) {
        if (v.a_words()[i]) {
            return i * 64 + static_cast<std::size_t>(std::countr_zero(v.a_words()[i]));
        }
    }
    for (std::size_t i = 0; i < w; i++) {
        if (v.b_words()[i]) {
            return v.size() + i * 64 + static_cast<std::size_t>(std::countr_zero(v.b_words()[i]));
        }
    }
    return kNoBit;
}

/// Binary dot product of the 2n-bit views.
inline bool bit_dot(const SymplecticVec &u, const SymplecticVec &v) {
    u.check_same_length(v);
    uint64_t acc = 0;
    for (std::size_t i = 0; i < u.words().size(); i++) {
        acc ^= u.words()[i] & v.words()[i];
    }
    return std::popcount(acc) & 1;
}

/// Exchanges the a and b halves, so that bit_dot(u, swap_halves(v)) = <u, v>.
inline SymplecticVec swap_halves(const SymplecticVec &v) {
    SymplecticVec r(v.size());
    for (std::size_t i = 0; i < v.num_words(); i++) {
        r.a_words()[i] = v.b_words()[i];
        r.b_words()[i] = v.a_words()[i];
    }
    return r;
}

/// Small dynamically sized bitset used for combination coefficients.
class BitRow {
   public:
    BitRow() = default;
    explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool value) {
        uint64_t mask = uint64_t{1} << (i & 63);
        words_[i >> 6] = value ? (words_[i >> 6] | mask) : (words_[i >> 6] & ~mask);
    }
    void resize(std::size_t bits) {
        bits_ = bits;
        words_.resize((bits + 63) / 64, 0);
    }
    BitRow &operator^=(const BitRow &other) {
        for (std::size_t i = 0; i < other.words_.size() && i < words_.size(); i++) {
            words_[i] ^= other.words_[i];
        }
        return *this;
    }
    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool operator==(const BitRow &) const = default;

   private:
    std::size_t bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Incrementally maintained reduced row echelon form over GF(2) of 2n-bit
/// vectors. Each stored row has a pivot coordinate that is zero in every other
/// row. Every row also remembers which inserted vectors it is the sum of, so
/// that members of the span can be expressed in the original inputs.
class RowEchelon {
   public:
    RowEchelon() = default;
    explicit RowEchelon(std::size_t n) : n_(n) {}

    std::size_t length() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t num_inserted() const { return inserted_; }

    /// Returns v reduced against the stored rows (zero iff v is in the span).
    SymplecticVec reduce(SymplecticVec v) const { return reduce_tracked(std::move(v), nullptr); }

    bool contains(const SymplecticVec &v) const { return reduce(v).is_zero(); }

    /// Adds v. Returns false (and leaves the span unchanged) if v was already in
    /// the span. The inserted-vector counter advances either way.
    bool insert(const SymplecticVec &v) {
        if (v.size() != n_) {
            v.check_same_length(SymplecticVec(n_));
        }
        std::size_t index = inserted_++;
        for (auto &row : combos_) {
            row.resize(inserted_);
        }
        BitRow combo(inserted_);
        combo.set(index, true);
        SymplecticVec r = reduce_tracked(v, &combo);
        std::size_t p = lowest_bit(r);
        if (p == kNoBit) {
            return false;
        }
        for (std::size_t i = 0; i < rows_.size(); i++) {
            if (rows_[i].bit(p)) {
                rows_[i] += r;
                combos_[i] ^= combo;
            }
        }
        rows_.push_back(std::move(r));
        combos_.push_back(std::move(combo));
        pivots_.push_back(p);
        return true;
    }

    /// Coefficients c over the inserted vectors with sum_i c_i * input_i = v, if v
    /// lies in the span. Dependent inputs never receive a nonzero coefficient.
    std::optional<BitRow> express(const SymplecticVec &v) const {
        BitRow combo(inserted_);
        SymplecticVec r = v;
        for (std::size_t i = 0; i < rows_.size(); i++) {
            if (r.bit(pivots_[i])) {
                r += rows_[i];
                combo ^= combos_[i];
            }
        }
        if (!r.is_zero()) {
            return std::nullopt;
        }
        return combo;
    }

    const std::vector<SymplecticVec> &rows() const { return rows_; }
    const std::vector<std::size_t> &pivots() const { return pivots_; }

   private:
    SymplecticVec reduce_tracked(SymplecticVec v, BitRow *combo) const {
        for (std::size_t i = 0; i < rows_.size(); i++) {
            if (v.bit(pivots_[i])) {
                v += rows_[i];
                if (combo) {
                    *combo ^= combos_[i];
                }
            }
        }
        return v;
    }

    std::size_t n_ = 0;
    std::size_t inserted_ = 0;
    std::vector<SymplecticVec> rows_;
    std::vector<BitRow> combos_;
    std::vector<std::size_t> pivots_;
};

inline std::size_t gf2_rank(const std::vector<SymplecticVec> &vectors, std::size_t n) {
    RowEchelon e(n);
    for (const auto &v : vectors) {
        e.insert(v);
    }
    return e.rank();
}

/// Basis of {x : bit_dot(x, row) = 0 for every row}, ordered by free coordinate.
/// Each basis vector has exactly one free coordinate set, so with no rows the
/// result is the unit vectors in coordinate order.
inline std::vector<SymplecticVec> gf2_null_space(const std::vector<SymplecticVec> &rows, std::size_t n) {
    const std::size_t cols = 2 * n;
    std::vector<SymplecticVec> m = rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); c++) {
        std::size_t sel = kNoBit;
        for (std::size_t i = r; i < m.size(); i++) {
            if (m[i].bit(c)) {
                sel = i;
                break;
            }
        }
        if (sel == kNoBit) {
            continue;
        }
        std::swap(m[r], m[sel]);
        for (std::size_t i = 0; i < m.size(); i++) {
            if (i != r && m[i].bit(c)) {
                m[i] += m[r];
            }
        }
        pivot_cols.push_back(c);
        r++;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<SymplecticVec> basis;
    for (std::size_t f = 0; f < cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        SymplecticVec x(n);
        x.set_bit(f, true);
        for (std::size_t i = 0; i < pivot_cols.size(); i++) {
            if (m[i].bit(f)) {
                x.set_bit(pivot_cols[i], true);
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace qconcat
