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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qconcat/gf2m.hpp"

namespace qconcat {

/// Polynomial over GF(2^m), coefficient i multiplies x^i.
using Poly = std::vector<Gf2mElem>;

namespace poly {

inline void trim(Poly &p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

/// Degree, or -1 for the zero polynomial.
inline int degree(const Poly &p) {
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] != 0) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

inline Poly add(const Poly &a, const Poly &b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); i++) {
        r[i] ^= a[i];
    }
    for (std::size_t i = 0; i < b.size(); i++) {
        r[i] ^= b[i];
    }
    trim(r);
    return r;
}

inline Poly mul(const GF2mField &f, const Poly &a, const Poly &b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); j++) {
            r[i + j] ^= f.mul(a[i], b[j]);
        }
    }
    trim(r);
    return r;
}

inline Poly scale(const GF2mField &f, const Poly &a, Gf2mElem s) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        r[i] = f.mul(a[i], s);
    }
    trim(r);
    return r;
}

/// Quotient and remainder of a / b.
inline std::pair<Poly, Poly> divmod(const GF2mField &f, Poly a, const Poly &b) {
    const int db = degree(b);
    if (db < 0) {
        throw std::domain_error("polynomial division by zero");
    }
    trim(a);
    const Gf2mElem lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
    Poly q(a.size() > static_cast<std::size_t>(db) ? a.size() - static_cast<std::size_t>(db) : 0, 0);
    for (int i = degree(a); i >= db; i = degree(a)) {
        Gf2mElem coef = f.mul(a[static_cast<std::size_t>(i)], lead_inv);
        std::size_t shift = static_cast<std::size_t>(i - db);
        q[shift] = coef;
        for (int j = 0; j <= db; j++) {
            a[shift + static_cast<std::size_t>(j)] ^= f.mul(coef, b[static_cast<std::size_t>(j)]);
        }
    }
    trim(q);
    trim(a);
    return {q, a};
}

inline Gf2mElem eval(const GF2mField &f, const Poly &p, Gf2mElem x) {
    Gf2mElem acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = f.mul(acc, x) ^ p[i];
    }
    return acc;
}

/// Formal derivative; in characteristic 2 only odd-degree terms survive.
inline Poly derivative(const Poly &p) {
    Poly r(p.size() > 1 ? p.size() - 1 : 0, 0);
    for (std::size_t i = 1; i < p.size(); i += 2) {
        r[i - 1] = p[i];
    }
    trim(r);
    return r;
}

/// x^n - 1 (= x^n + 1 in characteristic 2).
inline Poly x_pow_minus_one(std::size_t n) {
    Poly r(n + 1, 0);
    r[0] = 1;
    r[n] = 1;
    return r;
}

}  // namespace poly

/// A Reed-Solomon code of length n = 2^m - 1: the cyclic code generated by
/// g(x) whose roots are the consecutive powers alpha^b, ..., alpha^(b+d-2),
/// b = root_offset. Dimension k = n - deg(g), distance d = n - k + 1.
class RSCode {
   public:
    /// Validates that g divides x^n - 1 and that its roots form one consecutive
    /// run of powers of alpha; the offset of the run is found by scanning.
    static RSCode from_generator(FieldPtr field, Poly g) {
        poly::trim(g);
        const uint32_t n = field->order();
        const int deg = poly::degree(g);
        if (deg < 0) {
            throw std::invalid_argument("zero generator polynomial");
        }
        if (static_cast<uint32_t>(deg) >= n) {
            throw std::invalid_argument("generator degree " + std::to_string(deg) + " leaves dimension 0");
        }
        auto [q, rem] = poly::divmod(*field, poly::x_pow_minus_one(n), g);
        if (!rem.empty()) {
            throw std::invalid_argument("generator does not divide x^n - 1");
        }
        // Normalize to monic.
        g = poly::scale(*field, g, field->inv(g.back()));

        std::vector<bool> is_root(n, false);
        std::size_t count = 0;
        for (uint32_t e = 0; e < n; e++) {
            if (poly::eval(*field, g, field->alpha_pow(e)) == 0) {
                is_root[e] = true;
                count++;
            }
        }
        if (count != static_cast<std::size_t>(deg)) {
            throw std::invalid_argument("generator has repeated or non-power roots");
        }
        uint32_t offset = 0;
        if (deg > 0) {
            bool found = false;
            for (uint32_t e = 0; e < n && !found; e++) {
                if (is_root[e] && !is_root[(e + n - 1) % n]) {
                    offset = e;
                    found = true;
                }
            }
            for (int i = 0; i < deg; i++) {
                if (!found || !is_root[(offset + static_cast<uint32_t>(i)) % n]) {
                    throw std::invalid_argument("generator roots are not consecutive powers of alpha");
                }
            }
        }
        RSCode c;
        c.field_ = std::move(field);
        c.n_ = n;
        c.k_ = n - static_cast<uint32_t>(deg);
        c.d_ = static_cast<uint32_t>(deg) + 1;
        c.generator_ = std::move(g);
        c.root_offset_ = offset;
        return c;
    }

    const FieldPtr &field() const { return field_; }
    uint32_t n() const { return n_; }
    uint32_t k() const { return k_; }
    uint32_t d() const { return d_; }
    uint32_t t() const { return (d_ - 1) / 2; }
    const Poly &generator() const { return generator_; }
    uint32_t root_offset() const { return root_offset_; }

    /// Codeword message(x) * g(x), as a length-n word.
    std::vector<Gf2mElem> encode(const std::vector<Gf2mElem> &message) const {
        if (message.size() != k_) {
            throw std::invalid_argument("message length must equal k");
        }
        Poly c = poly::mul(*field_, message, generator_);
        c.resize(n_, 0);
        return c;
    }

    /// Rows x^i g(x), i = 0..k-1.
    std::vector<std::vector<Gf2mElem>> generator_matrix() const {
        std::vector<std::vector<Gf2mElem>> rows;
        for (uint32_t i = 0; i < k_; i++) {
            std::vector<Gf2mElem> r(n_, 0);
            for (std::size_t j = 0; j < generator_.size(); j++) {
                r[i + j] = generator_[j];
            }
            rows.push_back(std::move(r));
        }
        return rows;
    }

    /// S_j = c(alpha^(b + j)), j = 0..d-2.
    std::vector<Gf2mElem> syndromes(const std::vector<Gf2mElem> &word) const {
        check_length(word);
        std::vector<Gf2mElem> s(d_ - 1);
        for (uint32_t j = 0; j + 1 < d_; j++) {
            s[j] = poly::eval(*field_, word, field_->alpha_pow(static_cast<int64_t>(root_offset_) + j));
        }
        return s;
    }

    bool is_codeword(const std::vector<Gf2mElem> &word) const {
        for (Gf2mElem s : syndromes(word)) {
            if (s != 0) {
                return false;
            }
        }
        return true;
    }

    void check_length(const std::vector<Gf2mElem> &word) const {
        if (word.size() != n_) {
            throw std::invalid_argument("word length " + std::to_string(word.size()) + " != n = " + std::to_string(n_));
        }
    }

   private:
    RSCode() = default;

    FieldPtr field_;
    uint32_t n_ = 0;
    uint32_t k_ = 0;
    uint32_t d_ = 0;
    Poly generator_;
    uint32_t root_offset_ = 0;
};

/// The [n, n-d+1, d] RS code with g(x) = prod_{i=0}^{d-2} (x - alpha^i).
inline RSCode rs_build(FieldPtr field, uint32_t d) {
    const uint32_t n = field->order();
    if (d < 2 || d > n) {
        throw std::invalid_argument("RS distance d must satisfy 2 <= d <= 2^m - 1 = " + std::to_string(n));
    }
    Poly g{1};
    for (uint32_t i = 0; i + 2 <= d; i++) {
        g = poly::mul(*field, g, Poly{field->alpha_pow(i), 1});
    }
    return RSCode::from_generator(std::move(field), std::move(g));
}

/// The dual under the standard inner product: generated by the monic
/// reciprocal of h(x) = (x^n - 1) / g(x). Its root offset is recovered by a
/// root scan of that polynomial.
inline RSCode rs_dual(const RSCode &code) {
    const auto &f = *code.field();
    auto [h, rem] = poly::divmod(f, poly::x_pow_minus_one(code.n()), code.generator());
    if (!rem.empty()) {
        throw std::logic_error("generator does not divide x^n - 1");
    }
    if (static_cast<uint32_t>(poly::degree(h)) == code.n()) {
        throw std::invalid_argument("dual of the full space is the zero code");
    }
    Poly rec(h.rbegin(), h.rend());
    return RSCode::from_generator(code.field(), rec);
}

/// Errors-only decoding: syndromes over the code's root run, Berlekamp-Massey
/// for the locator, Chien search, Forney magnitudes corrected for the root
/// offset. The result is re-checked for membership, so a returned word is
/// always a codeword; std::nullopt means the decoder gave up or the candidate
/// did not verify.
inline std::optional<std::vector<Gf2mElem>> rs_decode_bm(const RSCode &code, const std::vector<Gf2mElem> &received) {
    const auto &f = *code.field();
    const std::vector<Gf2mElem> s = code.syndromes(received);
    bool all_zero = true;
    for (Gf2mElem x : s) {
        all_zero = all_zero && x == 0;
    }
    if (all_zero) {
        return received;
    }
    const std::size_t num = s.size();

    // Berlekamp-Massey.
    Poly lambda{1};
    Poly prev{1};
    std::size_t len = 0;
    std::size_t shift = 1;
    Gf2mElem prev_disc = 1;
    for (std::size_t r = 0; r < num; r++) {
        Gf2mElem disc = s[r];
        for (std::size_t i = 1; i <= r && i < lambda.size(); i++) {
            disc ^= f.mul(lambda[i], s[r - i]);
        }
        if (disc == 0) {
            shift++;
            continue;
        }
        Poly correction(shift, 0);
        Poly scaled = poly::scale(f, prev, f.div(disc, prev_disc));
        correction.insert(correction.end(), scaled.begin(), scaled.end());
        Poly next = poly::add(lambda, correction);
        if (2 * len <= r) {
            prev = lambda;
            len = r + 1 - len;
            prev_disc = disc;
            shift = 1;
        } else {
            shift++;
        }
        lambda = std::move(next);
    }
    if (len > code.t() || poly::degree(lambda) != static_cast<int>(len)) {
        return std::nullopt;
    }

    // Chien search: X_i = alpha^pos is a locator when lambda(alpha^-pos) = 0.
    std::vector<uint32_t> positions;
    for (uint32_t pos = 0; pos < code.n(); pos++) {
        if (poly::eval(f, lambda, f.alpha_pow(-static_cast<int64_t>(pos))) == 0) {
            positions.push_back(pos);
        }
    }
    if (positions.size() != len) {
        return std::nullopt;
    }

    // Forney: e = X^(1-b) * omega(X^-1) / lambda'(X^-1), omega = S * lambda mod x^(d-1).
    Poly omega = poly::mul(f, Poly(s.begin(), s.end()), lambda);
    if (omega.size() > num) {
        omega.resize(num);
    }
    poly::trim(omega);
    const Poly dlambda = poly::derivative(lambda);
    std::vector<Gf2mElem> corrected = received;
    for (uint32_t pos : positions) {
        Gf2mElem x_inv = f.alpha_pow(-static_cast<int64_t>(pos));
        Gf2mElem denom = poly::eval(f, dlambda, x_inv);
        if (denom == 0) {
            return std::nullopt;
        }
        Gf2mElem mag = f.div(poly::eval(f, omega, x_inv), denom);
        mag = f.mul(mag, f.alpha_pow(static_cast<int64_t>(pos) * (1 - static_cast<int64_t>(code.root_offset()))));
        corrected[pos] ^= mag;
    }
    if (!code.is_codeword(corrected)) {
        return std::nullopt;
    }
    return corrected;
}

}  // namespace qconcat
