#pragma once

#include <optional>

#include "braidstat/coinv.hpp"

namespace braidstat {

// A finite-dimensional representation of the braid group, given by the images
// of the standard generators as column-sparse matrices.
struct BnModule {
    FieldPtr field;
    int strands = 0;
    long dim = 0;
    std::vector<SparseCols> gen;      // [s-1][col] -> entries, s = 1..strands-1
    std::vector<SparseCols> gen_inv;

    SparseRow apply_word(const BraidWord& w, long col) const;  // image of a basis vector
};

// Tensor power of a braided space, optionally restricted to a graded slice.
BnModule tensor_power_module(const BraidedSpace& v, int n, std::optional<int> grade = std::nullopt);
// Generic module; validates invertibility and the braid relations.
BnModule module_from_matrices(FieldPtr F, int strands, long dim, std::vector<SparseCols> gens);

// ---- homology of the braid group ----

// H_0 and H_1 via free differential calculus on the standard presentation.
std::pair<long, long> fox_h01_module(const BnModule& m);
std::pair<long, long> fox_h01(const BraidedSpace& v, int n, std::optional<int> grade = std::nullopt);
// degree-zero part only (skips the relator matrix)
long fox_h0(const BraidedSpace& v, int n, std::optional<int> grade = std::nullopt);

struct ResolutionResult {
    int n = 0;
    std::vector<long> dims;         // H_0 .. H_imax
    std::vector<long> free_ranks;   // binomial rank profile
    bool euler_checked = false;
};

// Homology in degrees 0..i_max via the finite free resolution whose degree-j
// term is free of rank binom(n-1, j). Differentials are assembled from
// minimal coset representatives of parabolic subgroups of the symmetric
// group; the composite of consecutive boundaries is verified to vanish on
// the module, and degrees 0,1 are checked against the presentation engine.
ResolutionResult resolution_homology_module(const BnModule& m, int i_max);
ResolutionResult resolution_homology(const BraidedSpace& v, int n, int i_max,
                                     std::optional<int> grade = std::nullopt);

// ---- predictors ----

BigInt binom_big(long n, long k);

// H_p vanishes for p < (m - d)/(d + 2 degV)
Rational vanishing_threshold(long d, long deg_v, long m);

struct CharSumBound {
    BigInt prefactor;        // 2^(n-1) |R|^n
    long q = 0;
    Rational q_exponent;     // n - (n-d)/(2d+4)
    bool power_saving = false;
    BigInt q_threshold;      // (2|R|)^(2d+4)
};
CharSumBound char_sum_bound(long n, long d, long rack_size, long q);

BigInt braid_betti_bound(long n, long j, long dim_module);
BigInt surface_betti_bound(long g, long f, long n, long j, long dim_module);

struct HomologyReport {
    int n = 0;
    std::string engine;
    std::vector<long> dims;
    long d = -1;           // degree of the coinvariant algebra, when known
    long deg_v = 1;
    Rational predicted_vanishing_below;
    bool conforms = false;
    nlohmann::json to_json() const;
};

HomologyReport homology_report(const BraidedSpace& v, int n, int i_max, const std::string& engine,
                               std::optional<long> d_coinv = std::nullopt);

}  // namespace braidstat
