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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qconcat/gf2m.hpp"

using namespace qconcat;

namespace {

// Oracle: shift-and-add multiplication modulo the field polynomial.
uint32_t clmul_mod(uint32_t x, uint32_t y, uint32_t poly, unsigned m) {
    uint64_t r = 0;
    for (unsigned i = 0; i < m; i++) {
        if ((y >> i) & 1) {
            r ^= static_cast<uint64_t>(x) << i;
        }
    }
    for (int bit = 2 * static_cast<int>(m); bit >= static_cast<int>(m); bit--) {
        if ((r >> bit) & 1) {
            r ^= static_cast<uint64_t>(poly) << (bit - static_cast<int>(m));
        }
    }
    return static_cast<uint32_t>(r);
}

}  // namespace

TEST(GF2m, MultiplicationMatchesShiftAndAdd) {
    for (unsigned m = 1; m <= 7; m++) {
        GF2mField f(m);
        for (uint32_t x = 0; x < f.size(); x++) {
            for (uint32_t y = 0; y < f.size(); y++) {
                ASSERT_EQ(f.mul(x, y), clmul_mod(x, y, f.poly(), m)) << "m=" << m;
            }
        }
    }
}

TEST(GF2m, InversesAndPowers) {
    for (unsigned m : {1u, 3u, 8u, 12u, 16u}) {
        GF2mField f(m);
        std::mt19937_64 rng(m);
        for (int t = 0; t < 500; t++) {
            uint32_t x = 1 + static_cast<uint32_t>(rng() % f.order());
            EXPECT_EQ(f.mul(x, f.inv(x)), 1u);
            EXPECT_EQ(f.alpha_pow(f.log(x)), x);
            EXPECT_EQ(f.pow(x, f.order()), 1u);
        }
        EXPECT_EQ(f.alpha_pow(-1), f.inv(f.alpha()));
        EXPECT_THROW(f.inv(0), std::domain_error);
    }
}

TEST(GF2m, DefaultPolynomialsArePrimitive) {
    for (unsigned m = 1; m <= 16; m++) {
        EXPECT_NO_THROW(GF2mField f(m)) << m;
    }
}

TEST(GF2m, RejectsNonPrimitivePolynomials) {
    // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5.
    EXPECT_THROW(GF2mField(4, 0x1F), std::invalid_argument);
    // x^4 + 1 = (x + 1)^4 is reducible.
    EXPECT_THROW(GF2mField(4, 0x11), std::invalid_argument);
    EXPECT_THROW(GF2mField(4, 0x7), std::invalid_argument);
    EXPECT_THROW(GF2mField(0), std::invalid_argument);
    EXPECT_THROW(GF2mField(17), std::invalid_argument);
    // x^4 + x^3 + 1 is another primitive polynomial.
    EXPECT_NO_THROW(GF2mField(4, 0x19));
}

TEST(GF2m, TraceIsLinearAndBalanced) {
    for (unsigned m = 1; m <= 8; m++) {
        GF2mField f(m);
        uint32_t ones = 0;
        for (uint32_t x = 0; x < f.size(); x++) {
            ones += f.trace(x);
            for (uint32_t y = 0; y < f.size(); y += 7) {
                EXPECT_EQ(f.trace(x ^ y), f.trace(x) != f.trace(y));
            }
        }
        EXPECT_EQ(ones, f.size() / 2);
    }
}

TEST(SelfDualBasis, ExistsAndIsOrthonormalForAllSmallFields) {
    for (unsigned m = 1; m <= 8; m++) {
        auto f = make_field(m);
        SelfDualBasis b = self_dual_basis(f);
        ASSERT_EQ(b.elements.size(), m);
        EXPECT_TRUE(b.is_self_dual());
        for (uint32_t x = 0; x < f->size(); x++) {
            EXPECT_EQ(b.combine(b.coordinates(x)), x);
        }
    }
    EXPECT_THROW(self_dual_basis(make_field(9)), std::invalid_argument);
}

TEST(SelfDualBasis, IsLexicographicallyFirst) {
    for (unsigned m = 1; m <= 5; m++) {
        auto f = make_field(m);
        std::vector<uint32_t> elems;
        for (uint32_t x = 1; x < f->size(); x++) {
            elems.push_back(x);
        }
        // Brute force: first increasing m-tuple that is orthonormal.
        std::vector<bool> pick(elems.size(), false);
        std::fill(pick.begin(), pick.begin() + m, true);
        std::vector<uint32_t> first;
        do {
            std::vector<uint32_t> cand;
            for (std::size_t i = 0; i < elems.size(); i++) {
                if (pick[i]) {
                    cand.push_back(elems[i]);
                }
            }
            SelfDualBasis b{f, cand};
            if (b.is_self_dual()) {
                first = cand;
                break;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
        EXPECT_EQ(self_dual_basis(f).elements, first) << "m=" << m;
    }
}

TEST(SelfDualBasis, ExpansionPreservesOrthogonality) {
    // sum_i x_i y_i = 0 in GF(2^m) implies the binary expansions are orthogonal
    // in the dot product; more precisely Tr(sum x_i y_i) = <B(x), B(y)>.
    auto f = make_field(4);
    SelfDualBasis b = self_dual_basis(f);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; t++) {
        std::vector<uint32_t> x(5), y(5);
        uint32_t acc = 0;
        for (int i = 0; i < 5; i++) {
            x[i] = static_cast<uint32_t>(rng() % 16);
            y[i] = static_cast<uint32_t>(rng() % 16);
            acc ^= f->mul(x[i], y[i]);
        }
        auto bx = binary_expand(x, b);
        auto by = binary_expand(y, b);
        int dot = 0;
        for (std::size_t i = 0; i < bx.size(); i++) {
            dot ^= bx[i] & by[i];
        }
        EXPECT_EQ(dot, f->trace(acc) ? 1 : 0);
        EXPECT_EQ(binary_collapse(bx, b), x);
    }
}
