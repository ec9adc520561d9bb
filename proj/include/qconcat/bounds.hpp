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

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qconcat {

/// Quaternary entropy H_4(x) = -x log_4(x/3) - (1-x) log_4(1-x) on [0, 1].
inline double h4(double x) {
    if (!(x >= 0 && x <= 1)) {
        throw std::domain_error("h4 argument outside [0, 1]: " + std::to_string(x));
    }
    double r = 0;
    if (x > 0) {
        r -= x * std::log(x / 3);
    }
    if (x < 1) {
        r -= (1 - x) * std::log1p(-x);
    }
    return r / std::log(4.0);
}

/// Inverse of h4 on its increasing branch [0, 3/4]. Newton steps kept inside
/// a bisection bracket; converges to a few ulps, well inside 1e-12.
inline double h4_inv(double y) {
    if (!(y >= 0 && y <= 1)) {
        throw std::domain_error("h4_inv argument outside [0, 1]: " + std::to_string(y));
    }
    if (y == 0) {
        return 0;
    }
    if (y == 1) {
        return 0.75;
    }
    const double kLn3 = std::log(3.0);
    const double kLn4 = std::log(4.0);
    double lo = 0;
    double hi = 0.75;
    double x = 0.375;
    for (int it = 0; it < 200 && hi - lo > 1e-300; it++) {
        const double lx = std::log(x);
        const double l1 = std::log1p(-x);
        double fx = -(x * (lx - kLn3) + (1 - x) * l1) / kLn4 - y;
        if (fx < 0) {
            lo = x;
        } else {
            hi = x;
        }
        double slope = (kLn3 + l1 - lx) / kLn4;
        double next = x - fx / slope;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        } else if (std::fabs(next - x) <= 1e-15 * x) {
            return next;
        }
        x = next;
    }
    return x;
}

/// Binary entropy, for the alternative form 1 - x log2(3) - H(x) of the GV rate.
inline double h2(double x) {
    if (x <= 0 || x >= 1) {
        return 0;
    }
    return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

struct Maximum {
    double x = 0;
    double value = 0;
};

/// Maximizes f on (a, b): best of `grid` interior sample points, then golden
/// section inside the neighbouring bracket down to width `tol`.
inline Maximum maximize_on_interval(const std::function<double(double)> &f, double a, double b, std::size_t grid,
                                    double tol = 1e-10) {
    if (!(b > a) || grid < 2) {
        throw std::invalid_argument("empty maximization interval");
    }
    const double step = (b - a) / static_cast<double>(grid);
    std::size_t best_i = 1;
    double best = f(a + step);
    for (std::size_t i = 2; i < grid; i++) {
        double v = f(a + step * static_cast<double>(i));
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double lo = a + step * static_cast<double>(best_i - 1);
    double hi = a + step * static_cast<double>(best_i + 1);
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    double xm = 0.5 * (lo + hi);
    double fm = f(xm);
    if (fm >= best) {
        return {xm, fm};
    }
    return {a + step * static_cast<double>(best_i), best};
}

/// Adaptive Gauss-Kronrod (15/31) quadrature of a smooth f on [a, b]; the
/// relative target 1e-12 keeps the absolute error of the integrals used here
/// below 1e-9.
inline double integrate(const std::function<double(double)> &f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-12);
}

/// Relative distance of the quantum GV bound at rate R: H_4^{-1}((1 - R)/2).
inline double gv_delta(double rate) {
    if (!(rate >= 0 && rate <= 1)) {
        throw std::domain_error("rate outside [0, 1]");
    }
    return h4_inv((1 - rate) / 2);
}

/// max_{R < r < 1} (1/2)(1 - R/r) H_4^{-1}((1 - r)/2) and its maximizer r.
/// The endpoints take their limits: R = 0 gives H_4^{-1}(1/2)/2, R = 1 gives 0.
inline Maximum zyablov_max(double rate) {
    if (!(rate >= 0 && rate <= 1)) {
        throw std::domain_error("rate outside [0, 1]");
    }
    if (rate == 0) {
        return {0, 0.5 * h4_inv(0.5)};
    }
    if (rate == 1) {
        return {1, 0};
    }
    auto f = [rate](double r) { return 0.5 * (1 - rate / r) * h4_inv((1 - r) / 2); };
    return maximize_on_interval(f, rate, 1, 10000);
}

inline double zyablov_delta(double rate) { return zyablov_max(rate).value; }

/// Largest relative distance argument accepted by the concatenated rate formulas.
inline double delta_limit() { return h4_inv(0.5); }

/// max over 0 < r < 1 - 2 H_4(delta) of r - (r/s) sum_{j=1}^{s} delta / H_4^{-1}((1 - rj/s)/2).
/// A code reaching this rate has relative distance delta / 2.
inline double gcq_rate(double delta, std::size_t s) {
    if (s < 1) {
        throw std::invalid_argument("order s must be at least 1");
    }
    if (!(delta > 0 && delta < delta_limit())) {
        throw std::domain_error("delta outside (0, H_4^{-1}(1/2))");
    }
    const double r_max = 1 - 2 * h4(delta);
    if (r_max <= 0) {
        return 0;
    }
    const double sd = static_cast<double>(s);
    auto f = [delta, s, sd](double r) {
        double sum = 0;
        for (std::size_t j = 1; j <= s; j++) {
            sum += delta / h4_inv(0.5 * (1 - r * static_cast<double>(j) / sd));
        }
        return r - r / sd * sum;
    };
    return std::max(0.0, maximize_on_interval(f, 0, r_max, 40).value);
}

/// 1 - 2 H_4(delta) - delta * integral_0^{1 - 2 H_4(delta)} dx / H_4^{-1}((1 - x)/2),
/// the s -> infinity limit of gcq_rate.
inline double bz_rate(double delta) {
    if (!(delta > 0 && delta < delta_limit())) {
        throw std::domain_error("delta outside (0, H_4^{-1}(1/2))");
    }
    const double r_max = 1 - 2 * h4(delta);
    if (r_max <= 0) {
        return 0;
    }
    auto g = [](double x) { return 1 / h4_inv((1 - x) / 2); };
    return std::max(0.0, r_max - delta * integrate(g, 0, r_max));
}

/// One inner code record (n, k, d); k = 2m with m >= 2.
struct InnerCodeRecord {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
};

using InnerCodeTable = std::vector<InnerCodeRecord>;

inline void validate_record(const InnerCodeRecord &rec) {
    if (rec.n == 0 || rec.k == 0 || rec.k > rec.n || rec.d < 1 || rec.d > rec.n) {
        throw std::invalid_argument("malformed inner code record (" + std::to_string(rec.n) + " " +
                                    std::to_string(rec.k) + " " + std::to_string(rec.d) + ")");
    }
    if (rec.k % 2 != 0 || rec.k < 4) {
        throw std::invalid_argument("inner code record needs even k >= 4, got k = " + std::to_string(rec.k));
    }
}

/// Finite-level AG bound delta_2 ((1 - r1)/2 - g/n).
inline double ktv_finite(double r1, double delta2, double genus_ratio) {
    return delta2 * ((1 - r1) / 2 - genus_ratio);
}

/// The limit g/n -> 1/(q - 1).
inline double ktv_limit(double r1, double delta2, double q) { return ktv_finite(r1, delta2, 1 / (q - 1)); }

/// The limit form at total rate R = r1 r2: delta_2 ((r2 - R)/(2 r2) - 1/(q - 1)).
inline double ktv_rate_form(double rate, double r2, double delta2, double q) {
    return delta2 * ((r2 - rate) / (2 * r2) - 1 / (q - 1));
}

/// Best KTV relative distance at rate R over the table; records need
/// r2 >= (q-1)/(q-3) R with q = 2^(k/2). 0 when no record qualifies.
inline double ktv_delta(double rate, const InnerCodeTable &table) {
    if (table.empty()) {
        throw std::invalid_argument("KTV bound needs a nonempty inner code table");
    }
    if (!(rate >= 0 && rate <= 1)) {
        throw std::domain_error("rate outside [0, 1]");
    }
    double best = 0;
    for (const auto &rec : table) {
        validate_record(rec);
        const double q = std::ldexp(1.0, static_cast<int>(rec.k / 2));
        const double r2 = static_cast<double>(rec.k) / static_cast<double>(rec.n);
        const double delta2 = static_cast<double>(rec.d) / static_cast<double>(rec.n);
        if (r2 * (q - 3) < (q - 1) * rate) {
            continue;
        }
        best = std::max(best, ktv_rate_form(rate, r2, delta2, q));
    }
    return best;
}

enum class BoundKind { kGv, kZyablov, kGcq, kBz, kKtv };

inline BoundKind parse_bound_kind(const std::string &s) {
    if (s == "gv") return BoundKind::kGv;
    if (s == "zyablov") return BoundKind::kZyablov;
    if (s == "gcq") return BoundKind::kGcq;
    if (s == "bz") return BoundKind::kBz;
    if (s == "ktv") return BoundKind::kKtv;
    throw std::invalid_argument("unknown bound kind '" + s + "'");
}

inline std::string bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::kGv:
            return "gv";
        case BoundKind::kZyablov:
            return "zyablov";
        case BoundKind::kGcq:
            return "gcq";
        case BoundKind::kBz:
            return "bz";
        default:
            return "ktv";
    }
}

/// Relative distance reached at rate R by a curve given as a decreasing rate
/// function of delta on (0, delta_max), found by bisection on delta. The
/// returned value is the code distance delta / 2.
inline double halved_delta_at_rate(const std::function<double(double)> &rate_of_delta, double rate) {
    const double dmax = delta_limit();
    if (rate <= 0) {
        return dmax / 2;
    }
    if (rate >= 1) {
        return 0;
    }
    double lo = 0;
    double hi = dmax;
    for (int it = 0; it < 60 && hi - lo > 1e-12; it++) {
        double mid = 0.5 * (lo + hi);
        if (mid <= 0 || mid >= dmax) {
            break;
        }
        if (rate_of_delta(mid) >= rate) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.25 * (lo + hi);
}

inline double gcq_delta_at_rate(double rate, std::size_t s) {
    return halved_delta_at_rate([s](double d) { return gcq_rate(d, s); }, rate);
}

inline double bz_delta_at_rate(double rate) { return halved_delta_at_rate(bz_rate, rate); }

struct BoundCurve {
    BoundKind kind = BoundKind::kGv;
    std::size_t s = 1;
    std::size_t grid = 0;
    std::vector<std::pair<double, double>> points;  // (R, delta)
};

struct CurveParams {
    std::size_t s = 1;
    const InnerCodeTable *table = nullptr;
};

/// Samples a bound on R = i / (grid - 1), i = 0..grid-1. gcq and bz are
/// reported as the code distance delta/2 at each rate.
inline BoundCurve curve_sample(BoundKind kind, std::size_t grid, const CurveParams &params = {}) {
    if (grid < 2) {
        throw std::invalid_argument("grid needs at least 2 points");
    }
    if (kind == BoundKind::kKtv && (params.table == nullptr || params.table->empty())) {
        throw std::invalid_argument("ktv bound needs an inner code table");
    }
    if (kind == BoundKind::kGcq && params.s < 1) {
        throw std::invalid_argument("gcq needs s >= 1");
    }
    BoundCurve curve;
    curve.kind = kind;
    curve.s = params.s;
    curve.grid = grid;
    for (std::size_t i = 0; i < grid; i++) {
        const double r = static_cast<double>(i) / static_cast<double>(grid - 1);
        double d = 0;
        switch (kind) {
            case BoundKind::kGv:
                d = gv_delta(r);
                break;
            case BoundKind::kZyablov:
                d = zyablov_delta(r);
                break;
            case BoundKind::kGcq:
                d = gcq_delta_at_rate(r, params.s);
                break;
            case BoundKind::kBz:
                d = bz_delta_at_rate(r);
                break;
            case BoundKind::kKtv:
                d = ktv_delta(r, *params.table);
                break;
        }
        curve.points.emplace_back(r, d);
    }
    return curve;
}

}  // namespace qconcat
