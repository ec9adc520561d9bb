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

#include <array>
#include <cmath>
#include <memory>
#include <random>
#include <set>

#include "qconcat/decoder.hpp"
#include "qconcat/search.hpp"

using namespace qconcat;

namespace {

// Failures of five+five at p = 0.01 over 10^5 trials with seed 2026.
constexpr uint64_t kAnchorFailures = 1;

std::shared_ptr<const ConcatenatedCode> five_five() {
    return std::make_shared<const ConcatenatedCode>(concatenate(outer_view(five_qubit_code()), five_qubit_code()));
}

SymplecticVec random_vec(std::size_t n, std::mt19937_64 &rng) {
    SymplecticVec v(n);
    for (std::size_t i = 0; i < n; i++) {
        v.set(i, F4::from_bits(static_cast<uint8_t>(rng() & 3)));
    }
    return v;
}

SymplecticVec single(std::size_t n, std::size_t i, uint8_t s) {
    SymplecticVec v(n);
    v.set(i, F4::from_bits(s));
    return v;
}

}  // namespace

TEST(Channel, ZeroAndOne) {
    std::mt19937_64 rng(81);
    EXPECT_TRUE(sample_error({0.0, 1}, 100, rng).is_zero());
    EXPECT_EQ(sample_error({1.0, 1}, 100, rng).weight(), 100u);
    EXPECT_THROW(sample_error({1.5, 1}, 10, rng), std::invalid_argument);
    EXPECT_EQ(sample_error({0.3, 5}, 50), sample_error({0.3, 5}, 50));
}

TEST(Channel, MeanWeightAndPauliBalance) {
    const double p = 0.1;
    const std::size_t n = 200;
    const int samples = 2000;
    std::mt19937_64 rng(82);
    double total = 0;
    std::array<double, 4> kinds{};
    for (int t = 0; t < samples; t++) {
        PauliError e = sample_error({p, 0}, n, rng);
        total += static_cast<double>(e.weight());
        for (std::size_t i = 0; i < n; i++) {
            kinds[e.get(i).bits()] += 1;
        }
    }
    const double count = static_cast<double>(n) * samples;
    const double sigma = std::sqrt(count * p * (1 - p));
    EXPECT_NEAR(total, count * p, 3 * sigma);
    for (int k = 1; k <= 3; k++) {
        double sd = std::sqrt(count * p / 3 * (1 - p / 3));
        EXPECT_NEAR(kinds[k], count * p / 3, 3 * sd) << k;
    }
}

TEST(Syndrome, FiveQubitWeightOneErrorsAreDistinct) {
    StabilizerCode q = five_qubit_code();
    std::set<uint64_t> seen;
    for (std::size_t i = 0; i < 5; i++) {
        for (uint8_t s = 1; s <= 3; s++) {
            uint64_t syn = inner_syndrome(q, single(5, i, s));
            EXPECT_NE(syn, 0u);
            seen.insert(syn);
        }
    }
    EXPECT_EQ(seen.size(), 15u);
    EXPECT_EQ(inner_syndrome(q, SymplecticVec(5)), 0u);
    EXPECT_THROW(inner_syndrome(q, SymplecticVec(4)), std::invalid_argument);
}

TEST(Syndrome, LinearAndConstantOnCPerpCosets) {
    std::mt19937_64 rng(83);
    for (const StabilizerCode &q : {five_qubit_code(), steane_code(), quantum_rs(2, 1).stab}) {
        SyndromeTable table(q);
        for (int t = 0; t < 200; t++) {
            SymplecticVec e1 = random_vec(q.n(), rng);
            SymplecticVec e2 = random_vec(q.n(), rng);
            EXPECT_EQ(inner_syndrome(q, e1 + e2), inner_syndrome(q, e1) ^ inner_syndrome(q, e2));
            EXPECT_EQ(table.syndrome(e1), inner_syndrome(q, e1));
            SymplecticVec c(q.n());
            for (const auto &g : q.c_perp().generators()) {
                if (rng() & 1) {
                    c += g;
                }
            }
            EXPECT_EQ(inner_syndrome(q, e1 + c), inner_syndrome(q, e1));
        }
    }
}

TEST(SyndromeTable, LeadersAreMinimal) {
    for (const StabilizerCode &q : {five_qubit_code(), steane_code(), quantum_rs(2, 1).stab}) {
        SyndromeTable table(q);
        EXPECT_EQ(table.size(), std::size_t{1} << q.c().dim());
        EXPECT_TRUE(table.verify_exhaustive());
        EXPECT_EQ(table.leader_weight(0), 0u);
        for (uint64_t s = 0; s < table.size(); s++) {
            EXPECT_EQ(table.syndrome(table.leader(s)), s);
            EXPECT_EQ(table.leader(s).weight(), table.leader_weight(s));
        }
    }
    // Perfect code: every nonzero syndrome has a weight-1 leader.
    SyndromeTable five(five_qubit_code());
    for (uint64_t s = 1; s < 16; s++) {
        EXPECT_EQ(five.leader_weight(s), 1u);
    }
}

TEST(InnerDecode, CorrectsWeightOneAndFailsOnSomeWeightTwo) {
    StabilizerCode q = five_qubit_code();
    SyndromeTable table(q);
    RhoMap rho = RhoMap::for_code(q);
    for (std::size_t i = 0; i < 5; i++) {
        for (uint8_t s = 1; s <= 3; s++) {
            InnerDecodeResult r = inner_decode(table, rho, single(5, i, s));
            EXPECT_TRUE(r.symbol.is_zero());
            EXPECT_EQ(r.correction, single(5, i, s));
        }
    }
    bool failed = false;
    detail::for_each_error_of_weight(5, 2, [&](const std::vector<std::size_t> &pos, const std::vector<uint8_t> &sym) {
        SymplecticVec e(5);
        for (std::size_t i = 0; i < 2; i++) {
            e.set(pos[i], F4::from_bits(sym[i]));
        }
        if (!inner_decode(table, rho, e).symbol.is_zero()) {
            failed = true;
            return false;
        }
        return true;
    });
    EXPECT_TRUE(failed);
}

TEST(ErrorEnumeration, CountsMatchBinomials) {
    for (std::size_t n : {1u, 4u, 7u}) {
        for (std::size_t w = 0; w <= n + 1; w++) {
            uint64_t count = 0;
            detail::for_each_error_of_weight(n, w, [&](const auto &, const auto &) {
                count++;
                return true;
            });
            BigInt expected = binomial(n, w) * boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(w));
            EXPECT_EQ(BigInt(count), expected) << n << "," << w;
        }
    }
}

TEST(OuterDecode, RSCorrectsEverySingleBlockError) {
    QuantumRSCode q = quantum_rs(3, 3);
    ASSERT_EQ(q.crs_dual.d(), 4u);
    std::size_t checked = 0;
    for (std::size_t blk = 0; blk < q.n; blk++) {
        for (uint64_t key = 1; key < 64; key++) {
            SymplecticVec e(q.stab.n());
            e.place(blk * 3, SymplecticVec::from_key(3, key));
            auto est = outer_decode(q, e);
            ASSERT_TRUE(est.has_value());
            EXPECT_EQ(*est, e);
            checked++;
        }
    }
    EXPECT_EQ(checked, 7u * 63u);
}

TEST(OuterDecode, TwoSymbolErrorsInOneHalfAreFlagged) {
    QuantumRSCode q = quantum_rs(3, 3);
    std::mt19937_64 rng(84);
    for (int t = 0; t < 300; t++) {
        std::vector<Gf2mElem> a(7, 0);
        std::vector<Gf2mElem> b(7, 0);
        std::size_t i = rng() % 7;
        std::size_t j = (i + 1 + rng() % 6) % 7;
        a[i] = 1 + static_cast<Gf2mElem>(rng() % 7);
        a[j] = 1 + static_cast<Gf2mElem>(rng() % 7);
        EXPECT_FALSE(outer_decode(q, q.merge(a, b)).has_value());
    }
}

TEST(ConcatDecoder, FiveFiveCorrectsWeightTwoExhaustively) {
    ConcatDecoder dec(five_five());
    CorrectabilityReport r = verify_correctability(dec, 2);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.checked, 2776u);
    EXPECT_FALSE(r.counterexample.has_value());
}

TEST(ConcatDecoder, GuaranteedRadiusIsTightForFiveFive) {
    auto cc = five_five();
    ConcatDecoder dec(cc);
    EXPECT_EQ(guaranteed_radius(*cc), 3u);
    EXPECT_TRUE(verify_correctability(dec, 3).ok);
    CorrectabilityReport r = verify_correctability(dec, 4);
    ASSERT_FALSE(r.ok);
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_EQ(r.counterexample->weight(), 4u);
    EXPECT_FALSE(dec.decode(*r.counterexample).success);
    EXPECT_THROW(verify_correctability(dec, 6, 1000), BudgetExceeded);
}

TEST(ConcatDecoder, ResidualStaysInCPerpForTableOuters) {
    auto cc = five_five();
    ConcatDecoder dec(cc);
    std::mt19937_64 rng(85);
    int failures = 0;
    for (int t = 0; t < 2000; t++) {
        PauliError e = sample_error({0.08, 0}, 25, rng);
        DecodeResult r = dec.decode(e);
        EXPECT_TRUE(cc->stab.c_perp().contains(r.residual));
        EXPECT_EQ(r.success, cc->stab.c().contains(r.residual));
        failures += !r.success;
    }
    EXPECT_GT(failures, 0);
    // Stabilizers decode to success.
    for (const auto &g : cc->stab.c().generators()) {
        EXPECT_TRUE(dec.decode(g).success);
    }
    EXPECT_THROW(dec.decode(PauliError(24)), std::invalid_argument);
}

TEST(ConcatDecoder, QuantumRSOuterWithTrivialInner) {
    auto cc = std::make_shared<const ConcatenatedCode>(concatenate(quantum_rs(3, 3), trivial_code(3)));
    ConcatDecoder dec(cc);
    EXPECT_EQ(guaranteed_radius(*cc), 1u);
    EXPECT_TRUE(verify_correctability(dec, 1).ok);
    std::mt19937_64 rng(86);
    for (int t = 0; t < 200; t++) {
        PauliError e(21);
        e.place(3 * (rng() % 7), random_vec(3, rng));
        EXPECT_TRUE(dec.decode(e).success);
    }
}

TEST(ConcatDecoder, EvenDistanceInnerHasNoGuaranteedRadius) {
    // d_lower = 4 here, yet a single error can already defeat two-stage decoding.
    auto inner = find_nested_chain(6, {2}, {2}).front();
    auto cc = std::make_shared<const ConcatenatedCode>(concatenate(quantum_rs(2, 1), inner));
    ASSERT_EQ(cc->d_lower, 4u);
    EXPECT_EQ(guaranteed_radius(*cc), 0u);
    ConcatDecoder dec(cc);
    EXPECT_TRUE(verify_correctability(dec, 0).ok);
    EXPECT_FALSE(verify_correctability(dec, 1).ok);
}

TEST(ConcatDecoder, GeneralizedOrderTwoDecodesCPerpCosetsOfZero) {
    auto chain = find_nested_chain(4, {2, 4}, {2, 1}, 3);
    auto cc = std::make_shared<const ConcatenatedCode>(generalized_concatenate(
        {outer_view(quantum_rs(2, 1)), outer_view(quantum_rs(2, 1))}, extend_symplectic_chain(chain)));
    ConcatDecoder dec(cc);
    EXPECT_TRUE(dec.decode(PauliError(12)).success);
    for (const auto &g : cc->stab.c().generators()) {
        EXPECT_TRUE(dec.decode(g).success);
    }
}

TEST(Simulation, ZeroNoiseNeverFails) {
    ConcatDecoder dec(five_five());
    SimulationStats s = simulate(dec, 0.0, 10000, 1);
    EXPECT_EQ(s.failures, 0u);
    EXPECT_EQ(s.failure_rate, 0.0);
    EXPECT_EQ(s.wilson.lo, 0.0);
}

TEST(Simulation, IndependentOfThreadCount) {
    ConcatDecoder dec(five_five());
    SimulationStats a = simulate(dec, 0.05, 20000, 42, 1);
    SimulationStats b = simulate(dec, 0.05, 20000, 42, 8);
    SimulationStats c = simulate(dec, 0.05, 20000, 42, 3);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_EQ(a.failures, c.failures);
    EXPECT_EQ(a.wilson.lo, b.wilson.lo);
    EXPECT_EQ(a.wilson.hi, b.wilson.hi);
    std::mt19937_64 r42 = trial_rng(42, 0);
    std::mt19937_64 r43 = trial_rng(43, 0);
    EXPECT_NE(sample_error({0.5, 0}, 25, r42), sample_error({0.5, 0}, 25, r43));
}

TEST(Simulation, RegressionAnchorAtOnePercent) {
    ConcatDecoder dec(five_five());
    SimulationStats s = simulate(dec, 0.01, 100000, 2026);
    // Below the unencoded five-qubit failure probability 1 - 0.99^5.
    EXPECT_LT(s.failure_rate, 1 - std::pow(0.99, 5));
    EXPECT_LE(s.wilson.lo, s.failure_rate);
    EXPECT_GE(s.wilson.hi, s.failure_rate);
    EXPECT_EQ(s.failures, kAnchorFailures);
}

TEST(Wilson, WidthScaling) {
    auto width = [](uint64_t f, uint64_t n) {
        Interval i = wilson_interval(f, n);
        return i.hi - i.lo;
    };
    double w1 = width(1000, 10000);
    EXPECT_NEAR(width(4000, 40000) / w1, 0.5, 0.01);
    EXPECT_NEAR(width(2000, 20000) / w1, 1 / std::sqrt(2.0), 0.01);
    Interval z = wilson_interval(0, 100);
    EXPECT_EQ(z.lo, 0.0);
    EXPECT_NEAR(z.hi, 0.037, 0.001);
    Interval all = wilson_interval(100, 100);
    EXPECT_EQ(all.hi, 1.0);
    // Textbook value for 10 / 100.
    Interval ten = wilson_interval(10, 100);
    EXPECT_NEAR(ten.lo, 0.0552, 1e-4);
    EXPECT_NEAR(ten.hi, 0.1744, 1e-4);
}
