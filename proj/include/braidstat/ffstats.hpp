#pragma once

#include "braidstat/polyfq.hpp"

namespace braidstat {

// Exact desk-scale statistics over monic squarefree polynomials. All sums are
// exact integers; reruns are bit-identical. Enumeration is partitioned into
// lexicographic blocks by the constant coefficient; the reduction respects
// block order.

BigInt mobius_sum(long q, int n, int threads = 1);            // factorization route
BigInt mobius_sum_sign_route(long q, int n, int threads = 1); // permutation-sign route

// Single enumeration evaluating both formulas on each polynomial.
struct MobiusPair {
    BigInt factorization_route;
    BigInt sign_route;
    bool pointwise_equal = false;
};
MobiusPair mobius_sum_both(long q, int n, int threads = 1);

// Sum of chi(disc f) for the multiplicative character of the given order;
// returned as an exact element of Q(zeta_order).
Scalar chi_disc_sum(long q, int n, long order, int threads = 1);

struct IrrRatioRow {
    BigInt irr_count;
    BigInt conf_count;
    Rational ratio;        // irr / conf
    Rational main_term;    // q / ((q-1) n)
    bool within_bound = false;  // |ratio - main| <= 2 q^{-n/2}, squared comparison
};
IrrRatioRow irr_ratio(long q, int n);

struct LegendreRow {
    BigInt total;        // sum over f of the Jacobi convolution
    BigInt twice_conf;   // main term
    BigInt residual;     // total - twice_conf
};
LegendreRow legendre_main_term(long q, int n, int threads = 1);

struct ExperimentSpec {
    std::string kind;  // mobius | chidisc | irr | legendre
    long q = 3;
    int n_lo = 1, n_hi = 1;
    long char_order = 2;
    int threads = 1;
};

struct StatRow {
    long q = 0;
    int n = 0;
    std::string statistic;
    std::string value;
    std::string main_term;
    std::string residual;
    std::string verdict;  // PASS / FAIL / ""
};

std::vector<StatRow> run_experiment(const ExperimentSpec& spec);
std::string stat_rows_to_csv(const std::vector<StatRow>& rows);

void enforce_work_cap(long q, int n);

}  // namespace braidstat
