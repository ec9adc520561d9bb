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
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qconcat/additive_code.hpp"
#include "qconcat/quantum_rs.hpp"
#include "qconcat/symplectic_basis.hpp"

namespace qconcat {

/// An outer code read over the alphabet GF(4)^w: coordinates [i*w, (i+1)*w)
/// form outer symbol i. block_distance is a certified lower bound on the
/// number of nonzero blocks of any vector in C-perp \ C.
struct OuterCode {
    StabilizerCode stab;
    std::size_t block_width = 1;
    std::size_t block_distance = 0;
    std::shared_ptr<const QuantumRSCode> rs;

    std::size_t num_blocks() const { return stab.n() / block_width; }
};

inline OuterCode outer_view(QuantumRSCode q) {
    OuterCode o;
    o.stab = q.stab;
    o.block_width = q.m;
    o.block_distance = q.k + 1;
    o.rs = std::make_shared<const QuantumRSCode>(std::move(q));
    return o;
}

/// A qubit code used as an outer code with one qubit per block.
inline OuterCode outer_view(const StabilizerCode &q) {
    if (!q.d_lower()) {
        throw std::invalid_argument("outer code " + q.name() + " has no certified distance");
    }
    OuterCode o;
    o.stab = q;
    o.block_width = 1;
    o.block_distance = *q.d_lower();
    return o;
}

/// Result of (generalized) concatenation. Block l of the physical word is
/// qubits [l*n2, (l+1)*n2). For order s, outer level j feeds the pairs
/// [j*m, (j+1)*m) of the nested inner basis.
struct ConcatenatedCode {
    std::vector<OuterCode> outers;
    NestedInnerFamily inner;
    RhoMap rho;
    StabilizerCode stab;
    std::size_t d_lower = 0;

    std::size_t order() const { return outers.size(); }
    std::size_t num_blocks() const { return outers.front().num_blocks(); }
    std::size_t inner_length() const { return inner.innermost().n(); }
    std::size_t block_width() const { return inner.m; }
    const StabilizerCode &inner_code() const { return inner.innermost(); }

    /// rho of the outer vector v at level j, placed blockwise.
    SymplecticVec lift(std::size_t level, const SymplecticVec &v) const {
        const std::size_t m = block_width();
        const std::size_t n2 = inner_length();
        SymplecticVec out(num_blocks() * n2);
        SymplecticVec symbol(rho.width());
        for (std::size_t l = 0; l < num_blocks(); l++) {
            bool any = false;
            for (std::size_t i = 0; i < m; i++) {
                F4 x = v.get(l * m + i);
                symbol.set(level * m + i, x);
                any |= !x.is_zero();
            }
            if (any) {
                out.place(l * n2, rho.apply(symbol));
                for (std::size_t i = 0; i < m; i++) {
                    symbol.set(level * m + i, F4::zero());
                }
            }
        }
        return out;
    }
};

/// Parameters of the generic product construction: an outer [[n1 m, k, d1]]
/// code over blocks of m qubits, each block encoded by an [[n2, m, d2]] code.
struct ProductParams {
    std::size_t n;
    std::size_t k;
    std::size_t d;
};

inline ProductParams product_params(std::size_t n1, std::size_t k, std::size_t d1, std::size_t n2, std::size_t m,
                                    std::size_t d2) {
    if (m == 0 || k > n1 * m) {
        throw std::invalid_argument("invalid product parameters");
    }
    return {n1 * n2, k, d1 * d2};
}

/// R = r - (2r/s) sum_j k_j / n1 with r = s m / n2, the rate of a generalized
/// concatenation built from qRS outers with parameters k_j.
inline double generalized_rate(std::size_t m, std::size_t n2, std::size_t n1, const std::vector<std::size_t> &ks) {
    const double s = static_cast<double>(ks.size());
    const double r = s * static_cast<double>(m) / static_cast<double>(n2);
    double sum = 0;
    for (std::size_t kj : ks) {
        sum += static_cast<double>(kj) / static_cast<double>(n1);
    }
    return r - 2 * r / s * sum;
}

/// Order-s concatenation of outer codes through a nested inner family. Level j
/// (0-based) uses the basis set B_(j+1). Requires s outers sharing block
/// width m and block count, an inner chain with gap m per level, certified
/// inner distances that do not increase along the chain, and certified outer
/// block distances. d_lower = min_j d_j * D_j, where D_j is the block distance
/// of outer j.
inline ConcatenatedCode generalized_concatenate(std::vector<OuterCode> outers, NestedInnerFamily family) {
    const std::size_t s = outers.size();
    if (s == 0 || family.order() != s) {
        throw std::invalid_argument("need one outer code per inner level: " + std::to_string(s) + " outers, " +
                                    std::to_string(family.order()) + " levels");
    }
    const std::size_t m = family.m;
    const std::size_t n1 = outers.front().num_blocks();
    for (const auto &o : outers) {
        if (o.block_width != m) {
            throw std::invalid_argument("outer block width " + std::to_string(o.block_width) +
                                        " does not match inner k = " + std::to_string(m));
        }
        if (o.num_blocks() != n1 || o.stab.n() != n1 * m) {
            throw std::invalid_argument("outer codes have different block counts");
        }
        if (o.block_distance == 0) {
            throw std::invalid_argument("outer code without certified block distance");
        }
    }
    for (std::size_t j = 0; j < s; j++) {
        if (!family.codes[j].d_lower()) {
            throw std::invalid_argument("inner code at level " + std::to_string(j + 1) + " has no certified distance");
        }
        if (j > 0 && *family.codes[j].d_lower() > *family.codes[j - 1].d_lower()) {
            throw std::invalid_argument("inner distances must be nonincreasing along the chain");
        }
    }

    ConcatenatedCode out;
    out.rho = RhoMap::for_family(family);
    out.inner = std::move(family);
    out.outers = std::move(outers);
    const std::size_t n2 = out.inner_length();
    const std::size_t big_n = n1 * n2;

    std::vector<SymplecticVec> embedded;
    for (std::size_t l = 0; l < n1; l++) {
        for (const auto &g : out.inner_code().c().generators()) {
            SymplecticVec v(big_n);
            v.place(l * n2, g);
            embedded.push_back(std::move(v));
        }
    }
    std::vector<SymplecticVec> c_gens = embedded;
    std::vector<SymplecticVec> c_perp_gens = std::move(embedded);
    std::size_t k_total = 0;
    std::size_t d_lower = static_cast<std::size_t>(-1);
    for (std::size_t j = 0; j < s; j++) {
        const OuterCode &o = out.outers[j];
        for (const auto &g : o.stab.c().generators()) {
            c_gens.push_back(out.lift(j, g));
        }
        for (const auto &g : o.stab.c_perp().generators()) {
            c_perp_gens.push_back(out.lift(j, g));
        }
        k_total += o.stab.k();
        d_lower = std::min(d_lower, *out.inner.codes[j].d_lower() * o.block_distance);
    }

    std::string name;
    for (std::size_t j = 0; j < s; j++) {
        name += (j ? "," : "") + out.outers[j].stab.name();
    }
    name += "+";
    for (std::size_t j = 0; j < s; j++) {
        name += (j ? "," : "") + out.inner.codes[j].name();
    }
    AdditiveCode c(big_n, std::move(c_gens));
    AdditiveCode c_perp(big_n, std::move(c_perp_gens));
    out.stab = StabilizerCode::from_pair(std::move(c), std::move(c_perp), name);
    if (out.stab.k() != k_total) {
        throw std::logic_error("concatenated dimension mismatch");
    }
    out.d_lower = d_lower;
    out.stab.certify(d_lower);
    return out;
}

/// Plain concatenation: each outer block of width m = inner.k is encoded by
/// the inner code. d_lower = d2 * D, D the outer block distance.
inline ConcatenatedCode concatenate(OuterCode outer, const StabilizerCode &inner) {
    if (inner.k() != outer.block_width) {
        throw std::invalid_argument("inner k = " + std::to_string(inner.k()) + " does not match outer block width " +
                                    std::to_string(outer.block_width));
    }
    if (!inner.d_lower()) {
        throw std::invalid_argument("inner code " + inner.name() + " has no certified distance");
    }
    std::vector<OuterCode> outers;
    outers.push_back(std::move(outer));
    return generalized_concatenate(std::move(outers), extend_symplectic_chain({inner}));
}

inline ConcatenatedCode concatenate(const QuantumRSCode &outer, const StabilizerCode &inner) {
    return concatenate(outer_view(outer), inner);
}

}  // namespace qconcat
