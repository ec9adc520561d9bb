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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qconcat/additive_code.hpp"
#include "qconcat/gf2.hpp"

namespace qconcat {

/// Hyperbolic pairs (g_i, h_i) in C-perp with <g_i, h_j> = delta_ij and
/// <g_i, g_j> = <h_i, h_j> = 0. Together with C they span C-perp.
struct SymplecticBasis {
    std::vector<SymplecticVec> g;
    std::vector<SymplecticVec> h;

    std::size_t size() const { return g.size(); }

    /// Checks the exact Gram pattern on the vectors themselves.
    bool has_standard_gram() const {
        if (g.size() != h.size()) {
            return false;
        }
        for (std::size_t i = 0; i < g.size(); i++) {
            for (std::size_t j = 0; j < g.size(); j++) {
                if (trace_inner(g[i], h[j]) != (i == j) || trace_inner(g[i], g[j]) || trace_inner(h[i], h[j])) {
                    return false;
                }
            }
        }
        return true;
    }

    /// True when every pair lies in C-perp and C plus the pairs span C-perp.
    bool completes(const StabilizerCode &q) const {
        RowEchelon e(q.n());
        for (const auto &c : q.c().generators()) {
            e.insert(c);
        }
        for (std::size_t i = 0; i < g.size(); i++) {
            if (!q.c_perp().contains(g[i]) || !q.c_perp().contains(h[i])) {
                return false;
            }
            e.insert(g[i]);
            e.insert(h[i]);
        }
        return e.rank() == q.c_perp().dim();
    }
};

namespace detail {

/// Symplectic Gram-Schmidt: turns a pool of vectors, independent modulo an
/// isotropic subspace on which the induced form is nondegenerate, into
/// hyperbolic pairs. Takes the first vector, pairs it with the first partner
/// that pairs to 1, projects every remaining vector onto the orthogonal
/// complement of the pair, and repeats.
inline std::vector<std::pair<SymplecticVec, SymplecticVec>> symplectify(std::vector<SymplecticVec> pool) {
    std::vector<std::pair<SymplecticVec, SymplecticVec>> pairs;
    while (!pool.empty()) {
        SymplecticVec v = pool.front();
        std::size_t partner = 0;
        for (std::size_t j = 1; j < pool.size(); j++) {
            if (trace_inner(v, pool[j])) {
                partner = j;
                break;
            }
        }
        if (partner == 0) {
            throw std::logic_error("degenerate quotient form: no partner for " + v.str());
        }
        SymplecticVec w = pool[partner];
        std::vector<SymplecticVec> rest;
        for (std::size_t j = 1; j < pool.size(); j++) {
            if (j == partner) {
                continue;
            }
            SymplecticVec u = pool[j];
            // u - <u,w> v - <u,v> w, so that <u,v> = <u,w> = 0 afterwards.
            bool uw = trace_inner(u, w);
            bool uv = trace_inner(u, v);
            if (uw) {
                u += v;
            }
            if (uv) {
                u += w;
            }
            rest.push_back(std::move(u));
        }
        pairs.emplace_back(std::move(v), std::move(w));
        pool = std::move(rest);
    }
    return pairs;
}

/// Projects u onto the orthogonal complement of the span of the given pairs.
inline SymplecticVec project_out(SymplecticVec u, const SymplecticBasis &b) {
    SymplecticVec orig = u;
    for (std::size_t i = 0; i < b.size(); i++) {
        if (trace_inner(orig, b.h[i])) {
            u += b.g[i];
        }
        if (trace_inner(orig, b.g[i])) {
            u += b.h[i];
        }
    }
    return u;
}

}  // namespace detail

/// k hyperbolic pairs for C-perp / C of a [[n, k]] code (k >= 1), built by the
/// inductive pairing procedure on coset representatives of C in C-perp.
inline SymplecticBasis symplectic_basis(const StabilizerCode &q) {
    if (q.k() == 0) {
        throw std::invalid_argument("symplectic basis needs k >= 1");
    }
    SymplecticBasis basis;
    for (auto &[g, h] : detail::symplectify(q.logical_representatives())) {
        basis.g.push_back(std::move(g));
        basis.h.push_back(std::move(h));
    }
    if (basis.size() != q.k() || !basis.has_standard_gram() || !basis.completes(q)) {
        throw std::logic_error("symplectic basis failed verification");
    }
    return basis;
}

/// A chain C_s in ... in C_1 of stabilizer codes with k_j = j*m, and the basis
/// sets B_1..B_s: pairs [(j-1)m, jm) form B_j. The pairs of B_1..B_j lie in
/// C_j-perp and together with C_j span it.
struct NestedInnerFamily {
    std::vector<StabilizerCode> codes;
    SymplecticBasis pairs;
    std::size_t m = 0;

    std::size_t order() const { return codes.size(); }
    const StabilizerCode &innermost() const { return codes.back(); }

    SymplecticBasis basis_set(std::size_t level) const {
        SymplecticBasis b;
        for (std::size_t i = level * m; i < (level + 1) * m; i++) {
            b.g.push_back(pairs.g[i]);
            b.h.push_back(pairs.h[i]);
        }
        return b;
    }

    /// Pairs of B_1..B_(level+1).
    SymplecticBasis prefix(std::size_t level) const {
        SymplecticBasis b;
        for (std::size_t i = 0; i < (level + 1) * m; i++) {
            b.g.push_back(pairs.g[i]);
            b.h.push_back(pairs.h[i]);
        }
        return b;
    }

    /// Inclusions, the full Gram pattern, and the per-level spanning property.
    bool verify() const {
        if (!pairs.has_standard_gram() || pairs.size() != m * codes.size()) {
            return false;
        }
        for (std::size_t j = 0; j < codes.size(); j++) {
            if (j > 0 && !codes[j].c().is_subcode_of(codes[j - 1].c())) {
                return false;
            }
            if (!prefix(j).completes(codes[j])) {
                return false;
            }
        }
        return true;
    }
};

/// Lifts the basis of C_1-perp / C_1 through each larger quotient, adding m
/// fresh hyperbolic pairs per level. Requires C_(j+1) inside C_j and
/// k_j = j * k_1 for every level.
inline NestedInnerFamily extend_symplectic_chain(std::vector<StabilizerCode> codes) {
    if (codes.empty()) {
        throw std::invalid_argument("empty code chain");
    }
    const std::size_t n = codes.front().n();
    const std::size_t m = codes.front().k();
    for (std::size_t j = 0; j < codes.size(); j++) {
        if (codes[j].n() != n) {
            throw std::invalid_argument("codes in the chain have different lengths");
        }
        if (codes[j].k() != (j + 1) * m) {
            throw std::invalid_argument("level " + std::to_string(j + 1) + " has k = " + std::to_string(codes[j].k()) +
                                        ", expected " + std::to_string((j + 1) * m) +
                                        " (dimension gap must be m per level)");
        }
        if (j > 0 && !codes[j].c().is_subcode_of(codes[j - 1].c())) {
            throw std::invalid_argument("chain is not nested at level " + std::to_string(j + 1));
        }
    }
    NestedInnerFamily family;
    family.m = m;
    family.pairs = symplectic_basis(codes.front());
    for (std::size_t j = 1; j < codes.size(); j++) {
        const StabilizerCode &q = codes[j];
        RowEchelon span(n);
        for (const auto &c : q.c().generators()) {
            span.insert(c);
        }
        for (std::size_t i = 0; i < family.pairs.size(); i++) {
            span.insert(family.pairs.g[i]);
            span.insert(family.pairs.h[i]);
        }
        std::vector<SymplecticVec> fresh;
        for (const auto &rep : q.logical_representatives()) {
            SymplecticVec u = detail::project_out(rep, family.pairs);
            if (span.insert(u)) {
                fresh.push_back(std::move(u));
            }
        }
        if (fresh.size() != 2 * m) {
            throw std::logic_error("quotient dimension mismatch at level " + std::to_string(j + 1));
        }
        for (auto &[g, h] : detail::symplectify(std::move(fresh))) {
            family.pairs.g.push_back(std::move(g));
            family.pairs.h.push_back(std::move(h));
        }
    }
    family.codes = std::move(codes);
    if (!family.verify()) {
        throw std::logic_error("nested symplectic basis failed verification");
    }
    return family;
}

/// The inner-product-preserving map from GF(4)^w into C-perp, realized as the
/// linear lift sum_i (a_i g_i + b_i h_i) for the symbol with components
/// x_i = a_i w + b_i w-bar.
class RhoMap {
   public:
    RhoMap() = default;
    RhoMap(SymplecticBasis basis, AdditiveCode host_c) : basis_(std::move(basis)), host_c_(std::move(host_c)) {}

    static RhoMap for_code(const StabilizerCode &q) { return RhoMap(symplectic_basis(q), q.c()); }
    static RhoMap for_family(const NestedInnerFamily &f) { return RhoMap(f.pairs, f.innermost().c()); }

    std::size_t width() const { return basis_.size(); }
    std::size_t length() const { return host_c_.length(); }
    const SymplecticBasis &basis() const { return basis_; }
    const AdditiveCode &host_c() const { return host_c_; }

    SymplecticVec apply(const SymplecticVec &symbol) const {
        if (symbol.size() != width()) {
            throw std::invalid_argument("symbol width " + std::to_string(symbol.size()) + " != " +
                                        std::to_string(width()));
        }
        SymplecticVec r(length());
        for (std::size_t i = 0; i < width(); i++) {
            if (symbol.a(i)) {
                r += basis_.g[i];
            }
            if (symbol.b(i)) {
                r += basis_.h[i];
            }
        }
        return r;
    }

    /// a_i = <r, h_i>, b_i = <r, g_i>. Throws if r is not in C-perp.
    SymplecticVec invert(const SymplecticVec &r) const {
        for (const auto &c : host_c_.generators()) {
            if (trace_inner(r, c)) {
                throw std::invalid_argument("vector is not in C-perp");
            }
        }
        return invert_unchecked(r);
    }

    SymplecticVec invert_unchecked(const SymplecticVec &r) const {
        SymplecticVec symbol(width());
        for (std::size_t i = 0; i < width(); i++) {
            symbol.set(i, F4(trace_inner(r, basis_.h[i]), trace_inner(r, basis_.g[i])));
        }
        return symbol;
    }

   private:
    SymplecticBasis basis_;
    AdditiveCode host_c_;
};

}  // namespace qconcat
