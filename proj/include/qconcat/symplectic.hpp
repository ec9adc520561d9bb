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

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qconcat {

/// An element of GF(4) = {0, 1, w, w^2} written in the (w, w-bar) coordinates
/// x = a*w + b*w-bar. With w-bar = w^2 = w + 1 this gives
///   (0,0) -> 0, (1,0) -> w, (0,1) -> w^2, (1,1) -> w + w^2 = 1.
class F4 {
   public:
    constexpr F4() = default;
    constexpr F4(bool a, bool b) : bits_(static_cast<uint8_t>((a ? 1 : 0) | (b ? 2 : 0))) {}

    static constexpr F4 zero() { return F4(false, false); }
    static constexpr F4 one() { return F4(true, true); }
    static constexpr F4 omega() { return F4(true, false); }
    static constexpr F4 omega_bar() { return F4(false, true); }
    static constexpr F4 from_bits(uint8_t bits) {
        F4 r;
        r.bits_ = bits & 3;
        return r;
    }

    constexpr bool a() const { return bits_ & 1; }
    constexpr bool b() const { return bits_ & 2; }
    constexpr uint8_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }

    constexpr F4 operator+(F4 other) const { return from_bits(bits_ ^ other.bits_); }
    constexpr F4 &operator+=(F4 other) {
        bits_ ^= other.bits_;
        return *this;
    }

    constexpr F4 operator*(F4 other) const {
        if (is_zero() || other.is_zero()) {
            return zero();
        }
        return from_log((log() + other.log()) % 3);
    }

    /// x-bar = x^2: fixes 0 and 1, swaps w and w^2.
    constexpr F4 conj() const { return from_bits(static_cast<uint8_t>(((bits_ & 1) << 1) | ((bits_ >> 1) & 1))); }

    constexpr bool operator==(const F4 &) const = default;

    std::string str() const {
        switch (bits_) {
            case 0:
                return "0";
            case 1:
                return "w";
            case 2:
                return "W";
            default:
                return "1";
        }
    }

   private:
    // log base w of a nonzero element: 1 -> 0, w -> 1, w^2 -> 2.
    constexpr int log() const { return bits_ == 3 ? 0 : bits_; }
    static constexpr F4 from_log(int e) { return e == 0 ? one() : from_bits(static_cast<uint8_t>(e)); }

    uint8_t bits_ = 0;
};

/// The absolute trace GF(4) -> GF(2), Tr(x) = x + x^2.
constexpr bool f4_trace(F4 x) { return (x + x.conj()) == F4::one(); }

/// A vector of GF(4)^n stored as two packed n-bit halves: the w-parts (a) and the
/// w-bar parts (b). Storage is a single word array: words [0, W) hold a, words
/// [W, 2W) hold b, with W = ceil(n / 64). Bits past n are always zero.
///
/// Viewed as a 2n-bit binary vector, bit j < n is a_j and bit n + j is b_j. The
/// linear algebra helpers address coordinates this way.
class SymplecticVec {
   public:
    SymplecticVec() = default;
    explicit SymplecticVec(std::size_t n) : n_(n), num_words_((n + 63) / 64), words_(2 * num_words_, 0) {}

    /// Parses a string over {0,1,w,W} (W = w-bar), or Pauli letters {I,X,Z,Y}
    /// under X = w, Z = w-bar, Y = 1.
    static SymplecticVec parse(std::string_view text) {
        SymplecticVec v(text.size());
        for (std::size_t i = 0; i < text.size(); i++) {
            switch (text[i]) {
                case '0':
                case 'I':
                case '_':
                    break;
                case 'w':
                case 'X':
                    v.set(i, F4::omega());
                    break;
                case 'W':
                case 'Z':
                    v.set(i, F4::omega_bar());
                    break;
                case '1':
                case 'Y':
                    v.set(i, F4::one());
                    break;
                default:
                    throw std::invalid_argument("unrecognized GF(4) symbol '" + std::string(1, text[i]) + "'");
            }
        }
        return v;
    }

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return num_words_; }
    std::size_t num_bits() const { return 2 * n_; }

    bool a(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    bool b(std::size_t i) const { return (words_[num_words_ + (i >> 6)] >> (i & 63)) & 1; }
    F4 get(std::size_t i) const { return F4(a(i), b(i)); }

    void set(std::size_t i, F4 x) {
        set_bit(i, x.a());
        set_bit(n_ + i, x.b());
    }

    /// Bit j of the 2n-bit view.
    bool bit(std::size_t j) const {
        std::size_t half = j >= n_ ? 1 : 0;
        std::size_t i = j - half * n_;
        return (words_[half * num_words_ + (i >> 6)] >> (i & 63)) & 1;
    }
    void set_bit(std::size_t j, bool value) {
        std::size_t half = j >= n_ ? 1 : 0;
        std::size_t i = j - half * n_;
        uint64_t mask = uint64_t{1} << (i & 63);
        uint64_t &w = words_[half * num_words_ + (i >> 6)];
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip_bit(std::size_t j) {
        std::size_t half = j >= n_ ? 1 : 0;
        std::size_t i = j - half * n_;
        words_[half * num_words_ + (i >> 6)] ^= uint64_t{1} << (i & 63);
    }

    const uint64_t *a_words() const { return words_.data(); }
    const uint64_t *b_words() const { return words_.data() + num_words_; }
    uint64_t *a_words() { return words_.data(); }
    uint64_t *b_words() { return words_.data() + num_words_; }
    const std::vector<uint64_t> &words() const { return words_; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::size_t i = 0; i < num_words_; i++) {
            w += static_cast<std::size_t>(std::popcount(words_[i] | words_[num_words_ + i]));
        }
        return w;
    }

    bool is_zero() const {
        return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
    }

    SymplecticVec &operator+=(const SymplecticVec &other) {
        check_same_length(other);
        for (std::size_t i = 0; i < words_.size(); i++) {
            words_[i] ^= other.words_[i];
        }
        return *this;
    }
    SymplecticVec operator+(const SymplecticVec &other) const {
        SymplecticVec r = *this;
        r += other;
        return r;
    }

    /// Multiplies every coordinate by a GF(4) scalar.
    SymplecticVec scaled(F4 s) const {
        SymplecticVec r(n_);
        for (std::size_t i = 0; i < n_; i++) {
            r.set(i, get(i) * s);
        }
        return r;
    }

    /// Coordinates [start, start + len) as a new vector.
    SymplecticVec slice(std::size_t start, std::size_t len) const {
        SymplecticVec r(len);
        for (std::size_t i = 0; i < len; i++) {
            r.set(i, get(start + i));
        }
        return r;
    }

    /// Overwrites coordinates [start, start + v.size()) with v.
    void place(std::size_t start, const SymplecticVec &v) {
        for (std::size_t i = 0; i < v.size(); i++) {
            set(start + i, v.get(i));
        }
    }

    /// Integer key of the 2n-bit view with a_0 as least significant bit. Only
    /// meaningful for n <= 32.
    uint64_t key() const {
        uint64_t a = num_words_ ? words_[0] : 0;
        uint64_t b = num_words_ ? words_[num_words_] : 0;
        return n_ >= 64 ? a : (a | (b << n_));
    }
    static SymplecticVec from_key(std::size_t n, uint64_t key) {
        SymplecticVec v(n);
        for (std::size_t j = 0; j < 2 * n; j++) {
            v.set_bit(j, (key >> j) & 1);
        }
        return v;
    }

    bool operator==(const SymplecticVec &other) const { return n_ == other.n_ && words_ == other.words_; }

    /// Total order on the 2n-bit view: compares b-part words from most significant
    /// first, then a-part. For n <= 32 this agrees with comparing key().
    bool operator<(const SymplecticVec &other) const {
        check_same_length(other);
        for (std::size_t i = words_.size(); i-- > 0;) {
            std::size_t k = i;
            if (words_[k] != other.words_[k]) {
                return words_[k] < other.words_[k];
            }
        }
        return false;
    }

    std::string str() const {
        std::string s;
        s.reserve(n_);
        for (std::size_t i = 0; i < n_; i++) {
            s += get(i).str();
        }
        return s;
    }

    /// Pauli rendering with X = w, Z = w-bar, Y = 1.
    std::string pauli_str() const {
        static constexpr char letters[4] = {'I', 'X', 'Z', 'Y'};
        std::string s;
        for (std::size_t i = 0; i < n_; i++) {
            s += letters[get(i).bits()];
        }
        return s;
    }

    /// a-part then b-part as '0'/'1' characters.
    std::string bit_str() const {
        std::string s;
        for (std::size_t j = 0; j < 2 * n_; j++) {
            s += bit(j) ? '1' : '0';
        }
        return s;
    }

    void check_same_length(const SymplecticVec &other) const {
        if (n_ != other.n_) {
            throw std::invalid_argument(
                "length mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
        }
    }

   private:
    std::size_t n_ = 0;
    std::size_t num_words_ = 0;
    std::vector<uint64_t> words_;
};

/// Trace inner product <u, v> = sum_i (u_i conj(v_i) + conj(u_i) v_i), which in
/// the (a, b) coordinates is the parity of (a_u & b_v) ^ (b_u & a_v).
inline bool trace_inner(const SymplecticVec &u, const SymplecticVec &v) {
    u.check_same_length(v);
    uint64_t acc = 0;
    const std::size_t w = u.num_words();
    for (std::size_t i = 0; i < w; i++) {
        acc ^= (u.a_words()[i] & v.b_words()[i]) ^ (u.b_words()[i] & v.a_words()[i]);
    }
    return std::popcount(acc) & 1;
}

/// Number of nonzero blocks when the vector is cut into consecutive blocks of
/// `block_width` GF(4) symbols.
inline std::size_t block_weight(const SymplecticVec &v, std::size_t block_width) {
    if (block_width <= 1) {
        return v.weight();
    }
    std::size_t count = 0;
    for (std::size_t start = 0; start < v.size(); start += block_width) {
        for (std::size_t i = start; i < std::min(start + block_width, v.size()); i++) {
            if (!v.get(i).is_zero()) {
                count++;
                break;
            }
        }
    }
    return count;
}

}  // namespace qconcat
