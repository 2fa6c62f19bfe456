#include "gluedtrees/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace gluedtrees {

namespace {

double pow2d(int k) { return std::ldexp(1.0, k); }

void check_domain(int n, std::uint64_t t) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    if (n < 64 && t >= (std::uint64_t(1) << n))
        throw std::domain_error("t must be < 2^n");
}

void check_height(int h, int n) {
    if (h < 0 || h > n) throw std::domain_error("height must be in [0, n]");
}

double denom(int n, std::uint64_t t) { return pow2d(n) - double(t); }

void check_exact_range(int n) {
    if (n > 30) throw std::domain_error("exact bound evaluation supports n <= 30");
}

Fraction power_gap(int n, std::uint64_t t) {  // 2^n - t as a Fraction
    return Fraction(static_cast<long long>((std::uint64_t(1) << n) - t));
}

}  // namespace

double exit_bound(std::uint64_t t, int n) {
    if (t < 1) throw std::domain_error("t must be >= 1");
    if (n < 1) throw std::domain_error("n must be >= 1");
    return double(t) * double(t) * pow2d(-n);
}

double reach_bound_series(int h, int n, std::uint64_t t) {
    check_domain(n, t);
    check_height(h, n);
    return (2.0 - pow2d(h - n)) / denom(n, t);
}

double pair_bound_both_sides(int n, std::uint64_t t) {
    check_domain(n, t);
    const double d = denom(n, t);
    return 4.0 / (d * d);
}

double pair_bound_refined(int n, std::uint64_t t) {
    check_domain(n, t);
    const double d = denom(n, t);
    return 1.5 / (d * d);
}

double ancestor_pair_bound(int h, int n, std::uint64_t t) {
    check_domain(n, t);
    check_height(h, n);
    return pow2d(h - n) / denom(n, t);
}

double ancestor_sum(int n, std::uint64_t t) {
    check_domain(n, t);
    return double(n + 1) / denom(n, t);
}

double improper_bound(std::uint64_t t, int n) {
    check_domain(n, t);
    const double d = denom(n, t);
    return (double(t) * double(t) / d) * (pow2d(n + 2) / d + double(n) + 1.0);
}

double improper_bound_terms(std::uint64_t t, int n) {
    check_domain(n, t);
    return double(t) * double(t) *
           (pow2d(n + 2) * pair_bound_both_sides(n, t) + ancestor_sum(n, t));
}

BoundReport total_win_bound(std::uint64_t t, int n) {
    check_domain(n, t);
    BoundReport r;
    r.n = n;
    r.t = t;
    r.exit_bound = exit_bound(t, n);
    r.improper_bound = improper_bound(t, n);
    r.total = r.exit_bound + r.improper_bound;
    r.vacuous = r.total >= 1.0;
    return r;
}

Fraction reach_bound_series_exact(int h, int n, std::uint64_t t) {
    check_exact_range(n);
    check_domain(n, t);
    check_height(h, n);
    Fraction sum;
    const Fraction gap = power_gap(n, t);
    for (int hp = h; hp <= n; ++hp) sum = sum + Fraction::pow2(h - hp) / gap;
    return sum;
}

Fraction reach_bound_limit_exact(int n, std::uint64_t t) {
    check_exact_range(n);
    check_domain(n, t);
    return Fraction(2) / power_gap(n, t);
}

Fraction pair_bound_both_sides_exact(int n, std::uint64_t t) {
    check_exact_range(n);
    check_domain(n, t);
    const Fraction gap = power_gap(n, t);
    return Fraction(4) / (gap * gap);
}

Fraction pair_bound_refined_exact(int n, std::uint64_t t) {
    check_exact_range(n);
    check_domain(n, t);
    const Fraction gap = power_gap(n, t);
    return Fraction(3) / (Fraction(2) * gap * gap);
}

Fraction ancestor_pair_bound_exact(int h, int n, std::uint64_t t) {
    check_exact_range(n);
    check_domain(n, t);
    check_height(h, n);
    return Fraction::pow2(h - n) / power_gap(n, t);
}

Fraction ancestor_sum_exact(int n, std::uint64_t t) {
    check_exact_range(n);
    check_domain(n, t);
    return Fraction(n + 1) / power_gap(n, t);
}

Fraction ancestor_sum_term_sum_exact(int n, std::uint64_t t) {
    check_exact_range(n);
    check_domain(n, t);
    Fraction sum;
    for (int h = 0; h <= n; ++h)
        sum = sum + Fraction::pow2(n - h) * ancestor_pair_bound_exact(h, n, t);
    return sum;
}

std::uint64_t floor_pow2_frac(int n, int k) {
    if (n < 0 || k < 1) throw std::domain_error("floor_pow2_frac needs n >= 0, k >= 1");
    if (n / k >= 63) throw std::domain_error("floor_pow2_frac result would overflow");
    // largest q with q^k <= 2^n
    const unsigned __int128 target = (unsigned __int128)(1) << n;
    std::uint64_t lo = 1, hi = (std::uint64_t(2) << (n / k));
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        unsigned __int128 p = 1;
        bool over = false;
        for (int i = 0; i < k && !over; ++i) {
            p *= mid;
            if (p > target) over = true;
        }
        if (over)
            hi = mid - 1;
        else
            lo = mid;
    }
    return lo;
}

OperatingPoint theorem1_point(int n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    return {floor_pow2_frac(n, 6), 4.0 * std::exp2(-double(n) / 6.0)};
}

OperatingPoint theorem2_point(int n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    const std::uint64_t q = floor_pow2_frac(n, 3);
    return {q, total_win_bound(q, n).total};
}

std::vector<TheoremScanRow> theorem_scan(int n_min, int n_max) {
    if (n_min < 1 || n_max < n_min) throw std::domain_error("bad scan range");
    std::vector<TheoremScanRow> rows;
    rows.reserve(std::size_t(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        TheoremScanRow row;
        row.n = n;
        row.t1 = theorem1_point(n);
        row.t2 = theorem2_point(n);
        row.normalized = row.t2.prob_bound * double(row.t2.queries) / double(n);
        rows.push_back(row);
    }
    return rows;
}

int crossover_n(const std::vector<TheoremScanRow>& scan) {
    int n0 = -1;
    for (auto it = scan.rbegin(); it != scan.rend(); ++it) {
        const bool better = it->t2.queries > it->t1.queries && it->t2.prob_bound < it->t1.prob_bound;
        if (!better) break;
        n0 = it->n;
    }
    return n0;
}

}  // namespace gluedtrees
