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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qconcat/gf2.hpp"
#include "qconcat/symplectic.hpp"

namespace qconcat {

/// An additive (GF(2)-linear) subgroup of GF(4)^n, stored as independent
/// generators together with their echelon form for membership tests.
class AdditiveCode {
   public:
    AdditiveCode() = default;

    /// Throws std::invalid_argument if the generators are dependent or of the
    /// wrong length.
    AdditiveCode(std::size_t n, std::vector<SymplecticVec> generators) : n_(n), echelon_(n) {
        for (const auto &g : generators) {
            if (g.size() != n) {
                throw std::invalid_argument("generator length " + std::to_string(g.size()) + " != " + std::to_string(n));
            }
            if (!echelon_.insert(g)) {
                throw std::invalid_argument("generators are not independent over GF(2)");
            }
        }
        generators_ = std::move(generators);
    }

    /// The code spanned by `vectors`, keeping the first independent subset.
    static AdditiveCode span(std::size_t n, const std::vector<SymplecticVec> &vectors) {
        RowEchelon e(n);
        std::vector<SymplecticVec> kept;
        for (const auto &v : vectors) {
            if (e.insert(v)) {
                kept.push_back(v);
            }
        }
        return AdditiveCode(n, std::move(kept));
    }

    static AdditiveCode zero(std::size_t n) { return AdditiveCode(n, {}); }

    static AdditiveCode full(std::size_t n) {
        std::vector<SymplecticVec> gens;
        for (std::size_t j = 0; j < 2 * n; j++) {
            SymplecticVec v(n);
            v.set_bit(j, true);
            gens.push_back(std::move(v));
        }
        return AdditiveCode(n, std::move(gens));
    }

    std::size_t length() const { return n_; }
    std::size_t dim() const { return generators_.size(); }
    const std::vector<SymplecticVec> &generators() const { return generators_; }
    const RowEchelon &echelon() const { return echelon_; }

    bool contains(const SymplecticVec &v) const { return v.size() == n_ && echelon_.contains(v); }

    bool is_subcode_of(const AdditiveCode &other) const {
        for (const auto &g : generators_) {
            if (!other.contains(g)) {
                return false;
            }
        }
        return true;
    }

    bool same_members(const AdditiveCode &other) const {
        return n_ == other.n_ && dim() == other.dim() && is_subcode_of(other);
    }

    /// The trace dual: null space of the pairing against every generator.
    AdditiveCode dual() const {
        std::vector<SymplecticVec> rows;
        rows.reserve(generators_.size());
        for (const auto &g : generators_) {
            rows.push_back(swap_halves(g));
        }
        return AdditiveCode(n_, gf2_null_space(rows, n_));
    }

    /// Pairwise trace orthogonality of the generators, i.e. C is inside its dual.
    bool is_self_orthogonal() const {
        for (std::size_t i = 0; i < generators_.size(); i++) {
            for (std::size_t j = i + 1; j < generators_.size(); j++) {
                if (trace_inner(generators_[i], generators_[j])) {
                    return false;
                }
            }
        }
        return true;
    }

    /// True when every element pairs trivially with every element of `other`.
    bool is_orthogonal_to(const AdditiveCode &other) const {
        for (const auto &g : generators_) {
            for (const auto &h : other.generators_) {
                if (trace_inner(g, h)) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Every member, by Gray-code enumeration. Only for small dimensions.
    std::vector<SymplecticVec> members() const {
        if (dim() > 24) {
            throw std::invalid_argument("refusing to list 2^" + std::to_string(dim()) + " members");
        }
        std::vector<SymplecticVec> out;
        out.reserve(std::size_t{1} << dim());
        SymplecticVec acc(n_);
        out.push_back(acc);
        for (uint64_t j = 1; j < (uint64_t{1} << dim()); j++) {
            acc += generators_[static_cast<std::size_t>(std::countr_zero(j))];
            out.push_back(acc);
        }
        return out;
    }

   private:
    std::size_t n_ = 0;
    std::vector<SymplecticVec> generators_;
    RowEchelon echelon_;
};

/// A stabilizer code [[n, k]] given by a self-orthogonal additive code C
/// (dimension n - k) and its dual.
class StabilizerCode {
   public:
    StabilizerCode() = default;

    /// Builds the code from C. Throws if C is not self-orthogonal.
    static StabilizerCode from_stabilizers(AdditiveCode c, std::string name = {}) {
        if (!c.is_self_orthogonal()) {
            throw std::invalid_argument("stabilizer generators are not self-orthogonal");
        }
        if (c.dim() > c.length()) {
            throw std::invalid_argument("self-orthogonal code cannot exceed dimension n");
        }
        AdditiveCode dual = c.dual();
        return StabilizerCode(std::move(c), std::move(dual), std::move(name));
    }

    /// Builds the code from C and an already computed dual, checking
    /// C inside C-perp, mutual orthogonality and dim(C) + dim(C-perp) = 2n.
    static StabilizerCode from_pair(AdditiveCode c, AdditiveCode c_perp, std::string name = {}) {
        if (c.length() != c_perp.length()) {
            throw std::invalid_argument("C and C-perp have different lengths");
        }
        if (c.dim() + c_perp.dim() != 2 * c.length()) {
            throw std::invalid_argument("dim(C) + dim(C-perp) != 2n");
        }
        if (!c.is_orthogonal_to(c_perp)) {
            throw std::invalid_argument("C-perp is not orthogonal to C");
        }
        if (!c.is_subcode_of(c_perp)) {
            throw std::invalid_argument("C is not contained in C-perp");
        }
        return StabilizerCode(std::move(c), std::move(c_perp), std::move(name));
    }

    const AdditiveCode &c() const { return c_; }
    const AdditiveCode &c_perp() const { return c_perp_; }
    std::size_t n() const { return c_.length(); }
    std::size_t k() const { return c_.length() - c_.dim(); }
    const std::string &name() const { return name_; }

    std::optional<std::size_t> d_lower() const { return d_lower_; }
    std::optional<std::size_t> d_exact() const { return d_exact_; }

    StabilizerCode &certify(std::size_t d_lower) {
        d_lower_ = d_lower;
        return *this;
    }
    /// Records an exact distance; also raises d_lower to it.
    StabilizerCode &set_exact_distance(std::size_t d) {
        if (d_lower_ && *d_lower_ > d) {
            throw std::logic_error("exact distance " + std::to_string(d) + " below certified bound " +
                                   std::to_string(*d_lower_));
        }
        d_exact_ = d;
        d_lower_ = d;
        return *this;
    }
    StabilizerCode &rename(std::string name) {
        name_ = std::move(name);
        return *this;
    }

    /// Coset representatives of C in C-perp: 2k vectors that, with C, span C-perp.
    std::vector<SymplecticVec> logical_representatives() const {
        RowEchelon e(n());
        for (const auto &g : c_.generators()) {
            e.insert(g);
        }
        std::vector<SymplecticVec> reps;
        for (const auto &g : c_perp_.generators()) {
            if (e.insert(g)) {
                reps.push_back(g);
            }
        }
        return reps;
    }

    std::string params() const { return "[[" + std::to_string(n()) + "," + std::to_string(k()) + "]]"; }

   private:
    StabilizerCode(AdditiveCode c, AdditiveCode c_perp, std::string name)
        : c_(std::move(c)), c_perp_(std::move(c_perp)), name_(std::move(name)) {}

    AdditiveCode c_;
    AdditiveCode c_perp_;
    std::optional<std::size_t> d_lower_;
    std::optional<std::size_t> d_exact_;
    std::string name_;
};

inline StabilizerCode stabilizer_code_from_strings(const std::vector<std::string> &rows, std::string name = {}) {
    if (rows.empty()) {
        throw std::invalid_argument("need at least one generator string");
    }
    std::vector<SymplecticVec> gens;
    for (const auto &r : rows) {
        gens.push_back(SymplecticVec::parse(r));
    }
    std::size_t n = gens.front().size();
    return StabilizerCode::from_stabilizers(AdditiveCode(n, std::move(gens)), std::move(name));
}

/// [[5,1,3]]: cyclic shifts of XZZXI.
inline StabilizerCode five_qubit_code() {
    auto q = stabilizer_code_from_strings({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, "five");
    q.certify(3);
    return q;
}

/// [[7,1,3]] Steane code from the [7,4] Hamming checks.
inline StabilizerCode steane_code() {
    auto q = stabilizer_code_from_strings(
        {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}, "steane");
    q.certify(3);
    return q;
}

/// [[m,m,1]]: C = {0}, C-perp = GF(4)^m.
inline StabilizerCode trivial_code(std::size_t m) {
    auto q = StabilizerCode::from_pair(AdditiveCode::zero(m), AdditiveCode::full(m), "trivial:" + std::to_string(m));
    q.certify(1);
    return q;
}

}  // namespace qconcat
