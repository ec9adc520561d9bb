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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qconcat/qconcat.hpp"

using namespace qconcat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string num(double x, int prec = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    return buf;
}

Outcome criterion_1() {
    Outcome o;
    auto t0 = Clock::now();
    ConcatenatedCode cc = concatenate(outer_view(five_qubit_code()), five_qubit_code());
    EnumerationOptions opts;
    opts.threads = 1;
    std::size_t d = min_weight_outside(cc.stab, opts).weight;
    double secs = seconds_since(t0);
    o.require(cc.stab.n() == 25 && cc.stab.k() == 1, "parameters " + cc.stab.params());
    o.require(cc.d_lower == 9, "d_lower " + std::to_string(cc.d_lower));
    o.require(d == 9, "exact distance " + std::to_string(d));
    o.require(secs <= 300, "runtime " + num(secs) + " s");
    o.detail = o.pass ? "[[25,1]] d=9 in " + num(secs, 3) + " s" : o.detail;
    return o;
}

Outcome criterion_2() {
    Outcome o;
    for (auto [m, k] : std::vector<std::pair<unsigned, uint32_t>>{{2, 1}, {3, 1}, {3, 2}, {3, 3}}) {
        QuantumRSCode q = quantum_rs(m, k);
        const std::size_t n = (std::size_t{1} << m) - 1;
        std::string tag = "m=" + std::to_string(m) + ",k=" + std::to_string(k);
        o.require(q.stab.n() == m * n && q.stab.k() == m * (n - 2 * k), tag + " parameters " + q.stab.params());
        o.require(q.stab.c().is_self_orthogonal() && q.stab.c().is_subcode_of(q.stab.c_perp()),
                  tag + " C not inside C-perp");
        o.require(q.stab.c().dual().same_members(q.stab.c_perp()), tag + " C-perp is not the dual of C");
        std::size_t bd = min_weight_outside_by_support(q.stab, m);
        o.require(bd == k + 1, tag + " block distance " + std::to_string(bd));
    }
    try {
        quantum_rs(3, 4);
        o.require(false, "m=3,k=4 accepted");
    } catch (const std::invalid_argument &) {
    }
    if (o.pass) {
        o.detail = "all valid (m,k) for m in {2,3}; block distances 2,2,3,4";
    }
    return o;
}

Outcome criterion_3() {
    Outcome o;
    auto cc = std::make_shared<const ConcatenatedCode>(concatenate(outer_view(five_qubit_code()), five_qubit_code()));
    auto t0 = Clock::now();
    ConcatDecoder dec(cc);
    CorrectabilityReport r = verify_correctability(dec, 2);
    double secs = seconds_since(t0);
    o.require(r.ok, "counterexample " + (r.counterexample ? r.counterexample->pauli_str() : std::string("?")));
    o.require(r.checked == 2776, "checked " + std::to_string(r.checked) + " patterns");
    o.require(secs <= 10, "runtime " + num(secs) + " s");
    if (o.pass) {
        o.detail = std::to_string(r.checked - 1) + " nonzero patterns of weight <= 2 in " + num(secs, 3) + " s";
    }
    return o;
}

Outcome criterion_4() {
    Outcome o;
    for (std::size_t n = 1; n <= 3; n++) {
        SelfOrthogonalCensus c = enumerate_self_orthogonal(n);
        for (std::size_t k = 1; k <= n; k++) {
            o.require(BigInt(c.sigma[k]) == sigma_count(n, k),
                      "sigma n=" + std::to_string(n) + " k=" + std::to_string(k));
            o.require(BigInt(c.tau[k]) == tau_count(n, k), "tau n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
        for (std::size_t k = 0; k < n; k++) {
            std::size_t dim = n - k;
            BigInt lhs = (sigma_count(n, dim) + tau_count(n, dim)) * (pow2(2 * n) - 1);
            BigInt rhs = BigInt(c.phi[dim]) * (pow2(n + k) - 1);
            o.require(lhs == rhs, "identity n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    if (o.pass) {
        o.detail = "n <= 3 census and identity exact";
    }
    return o;
}

Outcome criterion_5() {
    Outcome o;
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; t++) {
        std::size_t n = 1 + rng() % 10;
        StabilizerCode q = StabilizerCode::from_stabilizers(random_self_orthogonal(n, rng() % n, rng));
        SymplecticBasis b = symplectic_basis(q);
        o.require(b.size() == q.k() && b.has_standard_gram() && b.completes(q), "random code " + std::to_string(t));
    }
    NestedInnerFamily f = extend_symplectic_chain(find_nested_chain(6, {1, 2}, {2, 2}));
    o.require(f.order() == 2 && f.pairs.has_standard_gram() && f.verify(), "nested s=2 family");

    std::size_t rho_checks = 0;
    for (const StabilizerCode &q : {five_qubit_code(), quantum_rs(2, 1).stab, trivial_code(1), trivial_code(2)}) {
        RhoMap rho = RhoMap::for_code(q);
        const std::size_t m = rho.width();
        auto members = q.c().members();
        for (uint64_t u = 0; u < (uint64_t{1} << (2 * m)); u++) {
            SymplecticVec su = SymplecticVec::from_key(m, u);
            SymplecticVec ru = rho.apply(su);
            for (const auto &c : members) {
                rho_checks++;
                if (!(rho.invert(ru + c) == su)) {
                    o.require(false, "rho round trip " + q.name() + " " + su.str());
                }
            }
            for (uint64_t v = 0; v < (uint64_t{1} << (2 * m)); v++) {
                SymplecticVec sv = SymplecticVec::from_key(m, v);
                if (trace_inner(ru, rho.apply(sv)) != trace_inner(su, sv)) {
                    o.require(false, "rho inner product " + q.name());
                }
            }
        }
    }
    if (o.pass) {
        o.detail = "100 random Gram patterns, nested s=2 family, " + std::to_string(rho_checks) + " rho round trips";
    }
    return o;
}

Outcome criterion_6() {
    Outcome o;
    auto t0 = Clock::now();
    // (a)
    double worst = 0;
    for (int i = 0; i <= 10000; i++) {
        double y = i / 10000.0;
        worst = std::max(worst, std::abs(h4(h4_inv(y)) - y));
    }
    o.require(worst <= 1e-10, "(a) round trip error " + num(worst));
    // (b)
    std::string order_fail;
    for (int i = 1; i <= 99 && order_fail.empty(); i++) {
        double r = i / 100.0;
        double gv = gv_delta(r);
        double bz = bz_delta_at_rate(r);
        double z = zyablov_delta(r);
        double prev = bz;
        if (gv + 1e-9 < bz) {
            order_fail = "gv < bz at R=" + num(r);
        }
        for (std::size_t s : {4u, 2u, 1u}) {
            double g = gcq_delta_at_rate(r, s);
            if (prev + 1e-9 < g) {
                order_fail = "gcq(" + std::to_string(s) + ") above its predecessor at R=" + num(r);
            }
            prev = g;
        }
        if (prev + 1e-9 < z) {
            order_fail = "zyablov above gcq(1) at R=" + num(r);
        }
    }
    o.require(order_fail.empty(), "(b) " + order_fail);
    // (c)
    double gap_c = 0;
    for (int i = 0; i < 50; i++) {
        double r = i / 49.0;
        gap_c = std::max(gap_c, std::abs(gcq_delta_at_rate(r, 1) - zyablov_delta(r)));
    }
    o.require(gap_c <= 1e-6, "(c) gcq(1) vs zyablov " + num(gap_c));
    // (d)
    std::string d_detail;
    bool d_ok = true;
    for (double d : {0.02, 0.05, 0.08}) {
        double diff = gcq_rate(d, 256) - bz_rate(d);
        d_detail += (d_detail.empty() ? "" : ", ") + num(d, 2) + ":" + num(diff, 4);
        d_ok &= std::abs(diff) <= 1e-3;
    }
    o.require(d_ok, "(d) gcq(256) - bz = {" + d_detail + "} exceeds 1e-3");
    // (e)
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    double worst_e = 0;
    for (int t = 0; t < 10000; t++) {
        double r1 = u(rng);
        double r2 = u(rng);
        double d2 = u(rng);
        double q = std::ldexp(1.0, 2 + static_cast<int>(rng() % 8));
        worst_e = std::max(worst_e, std::abs(ktv_finite(r1, d2, 1 / (q - 1)) - ktv_limit(r1, d2, q)));
        worst_e = std::max(worst_e, std::abs(ktv_limit(r1, d2, q) - ktv_rate_form(r1 * r2, r2, d2, q)));
    }
    o.require(worst_e <= 1e-12, "(e) substitution error " + num(worst_e));
    double secs = seconds_since(t0);
    o.require(secs <= 60, "runtime " + num(secs) + " s");
    if (o.pass) {
        o.detail = "(a)-(e) hold in " + num(secs, 3) + " s";
    }
    return o;
}

std::vector<Gf2mElem> add_words(std::vector<Gf2mElem> a, const std::vector<Gf2mElem> &b) {
    for (std::size_t i = 0; i < a.size(); i++) {
        a[i] ^= b[i];
    }
    return a;
}

void exhaustive_rs(Outcome &o, const RSCode &code, const std::string &tag) {
    const uint32_t q = code.field()->size();
    std::vector<std::vector<Gf2mElem>> words;
    std::vector<Gf2mElem> msg(code.k(), 0);
    while (true) {
        words.push_back(code.encode(msg));
        std::size_t i = 0;
        while (i < msg.size() && ++msg[i] == q) {
            msg[i] = 0;
            i++;
        }
        if (i == msg.size()) {
            break;
        }
    }
    std::vector<Gf2mElem> e(code.n(), 0);
    bool ok = true;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
        for (const auto &c : words) {
            auto dec = rs_decode_bm(code, add_words(c, e));
            ok &= dec.has_value() && *dec == c;
        }
        if (left == 0) {
            return;
        }
        for (std::size_t pos = start; pos < code.n(); pos++) {
            for (uint32_t v = 1; v < q; v++) {
                e[pos] = v;
                rec(pos + 1, left - 1);
            }
            e[pos] = 0;
        }
    };
    rec(0, code.t());
    o.require(ok, tag + " half-distance decoding");
}

Outcome criterion_7() {
    Outcome o;
    RSCode c735 = rs_build(make_field(3), 5);
    RSCode c313 = rs_build(make_field(2), 3);
    o.require(c735.n() == 7 && c735.k() == 3 && c735.d() == 5, "[7,3,5] parameters");
    o.require(c313.n() == 3 && c313.k() == 1 && c313.d() == 3, "[3,1,3] parameters");
    exhaustive_rs(o, c735, "[7,3,5]");
    exhaustive_rs(o, c313, "[3,1,3]");

    QuantumRSCode q = quantum_rs(3, 3);
    const std::size_t radius = 3 / 2;
    o.require(q.crs_dual.t() >= radius, "dual RS code corrects fewer than floor(k/2) errors");
    std::size_t patterns = 0;
    for (std::size_t blk = 0; blk < q.n; blk++) {
        for (uint64_t key = 1; key < 64; key++) {
            SymplecticVec e(q.stab.n());
            e.place(blk * 3, SymplecticVec::from_key(3, key));
            auto est = outer_decode(q, e);
            patterns++;
            if (!est || !(*est == e)) {
                o.require(false, "qRS block error at block " + std::to_string(blk) + " not corrected");
            }
        }
    }
    if (o.pass) {
        o.detail = "[7,3,5], [3,1,3] exhaustive; qRS m=3,k=3 corrects all " + std::to_string(patterns) +
                   " single-block errors";
    }
    return o;
}

std::string render(const SimulationStats &s) {
    std::ostringstream out;
    out << s.trials << ' ' << s.failures << ' ' << fixed6(s.failure_rate) << ' ' << fixed6(s.wilson.lo) << ' '
        << fixed6(s.wilson.hi);
    return out.str();
}

Outcome criterion_8() {
    Outcome o;
    auto cc = std::make_shared<const ConcatenatedCode>(concatenate(outer_view(five_qubit_code()), five_qubit_code()));
    ConcatDecoder dec(cc);
    std::string one = render(simulate(dec, 0.05, 20000, 8, 1));
    std::string eight = render(simulate(dec, 0.05, 20000, 8, 8));
    o.require(one == eight, "1 thread '" + one + "' vs 8 threads '" + eight + "'");
    SimulationStats zero = simulate(dec, 0.0, 10000, 8, 1);
    o.require(zero.failures == 0 && zero.failure_rate == 0.0, "p=0 failures " + std::to_string(zero.failures));
    if (o.pass) {
        o.detail = "output '" + one + "' identical; p=0 gives 0/10000";
    }
    return o;
}

// Independent reimplementation: ball size from Pascal's rule, comparison by
// quotient and remainder instead of cross-multiplication.
BigInt ball(std::size_t n, std::size_t d) {
    std::vector<BigInt> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t r = 1; r <= n; r++) {
        for (std::size_t i = r; i >= 1; i--) {
            row[i] += row[i - 1];
        }
    }
    BigInt sum = 0;
    BigInt p = 1;
    for (std::size_t i = 1; i < d; i++) {
        p *= 3;
        sum += p * row[i];
    }
    return sum;
}

bool below(const BigInt &x, const BigInt &num, const BigInt &den) {
    BigInt q = num / den;
    return num % den == 0 ? x < q : x <= q;
}

Outcome criterion_9() {
    Outcome o;
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; t++) {
        std::size_t n = 1 + rng() % 50;
        std::size_t k = rng() % (n + 1);
        std::size_t d = 1 + rng() % n;
        bool ref = below(ball(n, d), (BigInt(1) << (2 * n)) - 1, (BigInt(1) << (n + k)) - 1);
        o.require(gv_exists(n, k, d) == ref, "gv_exists(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                                 std::to_string(d) + ")");
        std::size_t k1 = rng() % (n + 1);
        std::size_t k2 = k1 + rng() % (n - k1 + 1);
        bool nref = k1 == k2 || below(ball(n, d), (BigInt(1) << (n - k1)) - 1, (BigInt(1) << (k2 - k1)) - 1);
        o.require(nested_gv_exists(n, k1, k2, d) == nref, "nested_gv_exists(" + std::to_string(n) + "," +
                                                              std::to_string(k1) + "," + std::to_string(k2) + "," +
                                                              std::to_string(d) + ")");
    }
    double worst = 0;
    for (double delta : {0.02, 0.05, 0.1, 0.15}) {
        worst = std::max(worst, std::abs(gv_threshold_rate(2000, delta) - (1 - 2 * h4(delta))));
    }
    o.require(worst <= 0.01, "asymptotic gap " + num(worst));
    if (o.pass) {
        o.detail = "100 random inputs agree; n=2000 gap " + num(worst, 3);
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 product-bound construction", criterion_1}, {"2 quantum RS parameters", criterion_2},
        {"3 decoder guarantee", criterion_3},          {"4 counting", criterion_4},
        {"5 symplectic machinery", criterion_5},       {"6 bound-curve properties", criterion_6},
        {"7 RS decoding", criterion_7},                {"8 Monte Carlo determinism", criterion_8},
        {"9 GV-existence predicates", criterion_9},
    };
    int failed = 0;
    for (const auto &[name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " : " << o.detail << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
