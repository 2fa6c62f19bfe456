// bounds.hpp — closed-form probability bounds for the embedding game on
// glued trees of height n with query trees of t vertices. Doubles for
// reports; exact Fraction variants (n <= 30) for identity checks. All
// evaluators are pure. Domain: t < 2^n wherever a 1/(2^n - t) term appears.
#pragma once

#include <cstdint>
#include <vector>

#include "gluedtrees/rational.hpp"

namespace gluedtrees {

struct BoundReport {
    int n = 0;
    std::uint64_t t = 0;
    double exit_bound = 0.0;
    double improper_bound = 0.0;
    double total = 0.0;
    bool vacuous = false;  // total >= 1 carries no information
};

// Pr[some path of T exits] <= t^2 * 2^{-n}
double exit_bound(std::uint64_t t, int n);

// sum_{h'=h}^{n} 2^{h-h'} / (2^n - t): chance one path reaches a fixed vertex
// of height h after its last middle-layer crossing; always < 2/(2^n - t)
double reach_bound_series(int h, int n, std::uint64_t t);

// both paths cross the middle: < 4/(2^n - t)^2, refined to 3/[2(2^n - t)^2]
double pair_bound_both_sides(int n, std::uint64_t t);
double pair_bound_refined(int n, std::uint64_t t);

// ancestor case (one path stays left): 2^{h-n}/(2^n - t) for height h, and
// its sum over the left half, (n+1)/(2^n - t)
double ancestor_pair_bound(int h, int n, std::uint64_t t);
double ancestor_sum(int n, std::uint64_t t);

// Pr[improper] bound, final closed form: (t^2/(2^n-t)) * (2^{n+2}/(2^n-t) + n + 1)
double improper_bound(std::uint64_t t, int n);
// per-term union-bound sum t^2 * (2^{n+2} * pair_bound_both_sides + ancestor_sum);
// larger than improper_bound by a constant factor on the first term
double improper_bound_terms(std::uint64_t t, int n);

BoundReport total_win_bound(std::uint64_t t, int n);

// exact variants for identity checks (throw beyond n = 30)
Fraction reach_bound_series_exact(int h, int n, std::uint64_t t);
Fraction reach_bound_limit_exact(int n, std::uint64_t t);  // 2/(2^n - t)
Fraction pair_bound_both_sides_exact(int n, std::uint64_t t);
Fraction pair_bound_refined_exact(int n, std::uint64_t t);
Fraction ancestor_pair_bound_exact(int h, int n, std::uint64_t t);
Fraction ancestor_sum_exact(int n, std::uint64_t t);
// the defining summation sum_{h=0}^{n} 2^{n-h} * ancestor_pair_bound(h, n, t)
Fraction ancestor_sum_term_sum_exact(int n, std::uint64_t t);

struct OperatingPoint {
    std::uint64_t queries = 0;
    double prob_bound = 0.0;
};

// floor(2^{n/k}) computed exactly in integers
std::uint64_t floor_pow2_frac(int n, int k);

// the 2^{n/6}-query regime: success probability at most 4 * 2^{-n/6}
OperatingPoint theorem1_point(int n);
// the 2^{n/3}-query regime: success probability at most total_win_bound
OperatingPoint theorem2_point(int n);

struct TheoremScanRow {
    int n = 0;
    OperatingPoint t1;
    OperatingPoint t2;
    double normalized = 0.0;  // t2.prob_bound * t2.queries / n
};

std::vector<TheoremScanRow> theorem_scan(int n_min, int n_max);

// smallest n0 such that for every scanned n >= n0 the second regime allows
// strictly more queries at a strictly smaller probability bound; -1 if none
int crossover_n(const std::vector<TheoremScanRow>& scan);

}  // namespace gluedtrees
