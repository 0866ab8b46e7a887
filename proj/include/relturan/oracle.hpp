#pragma once

#include <optional>
#include <vector>

#include "relturan/constructions.hpp"
#include "relturan/hypergraph.hpp"
#include "relturan/pattern.hpp"
#include "relturan/rational.hpp"

namespace relturan {

struct Budget {
    long long max_edges = 40;
    long long max_copies = 1000000;
};

struct ExactResult {
    long long value = 0;        // ex(H, family)
    Hypergraph witness;         // family-free subgraph with exactly `value` edges
    long long copies = 0;       // total copies enumerated
};

/// Exact ex(H, family) = e(H) minus a minimum hitting set of the copy
/// hypergraph, by branch and bound. Throws BudgetError with a message
/// carrying the best bounds found when the budget is exceeded.
ExactResult exact_relative_turan(const Hypergraph& h, const PatternFamily& family,
                                 const Budget& budget = {});

/// the derived exponents of a size vector, as exact rationals
struct ExponentProfile {
    SizeVector s;
    Rational alpha;   // 1/((r-1) a_r)
    Rational beta;    // 1/sum_{i=2}^r a_i
    Rational beta1;   // (sum s_i - r)/(a_{r+1} - 1)
    Rational beta2;   // (a_r (sum_{i<r} s_i - r) + 1)/((a_r - 1)(a_{r+1} - 1))
};

ExponentProfile exponents(const SizeVector& s);

/// iterate alpha_r = 4^{s_r} alpha_{r-1}^{s_r} s_r! from a caller-supplied
/// alpha_2 up the size vector
Rational alpha_recursion(const SizeVector& s, const Rational& alpha2);

struct SupersaturationReport {
    long long copy_count = 0;
    double threshold_bound = 0.0;   // alpha_r * n^{-1} * prod n_i
    double predicted_count = 0.0;   // alpha_r^{-1} m^{a_{r+1}} prod n_i^{s_i - a_{r+1}}
    bool above_threshold = false;
    bool illustrative_constant = true;  // alpha_2 is not the true nonconstructive constant
};

/// copy count in a subgraph of unbalanced_partite_host(n, s) against the
/// supersaturation prediction; qualitative comparison only
SupersaturationReport supersaturation_check(const Hypergraph& host,
                                            const Hypergraph& subgraph, const SizeVector& s,
                                            const Rational& alpha2 = Rational(1),
                                            const Budget& budget = {});

struct FitResult {
    double slope = 0.0;
    double max_residual = 0.0;
};

struct FitPoint {
    double delta = 0.0;
    double host_edges = 0.0;
    double extracted_edges = 0.0;
};

/// least-squares slope of log(host/extracted) against log(delta)
FitResult exponent_fit(const std::vector<FitPoint>& points);

}  // namespace relturan
