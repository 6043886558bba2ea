#pragma once

#include <map>

#include "braidstat/braided.hpp"
#include "braidstat/polyfq.hpp"

namespace braidstat {

// partition of n, parts descending
using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int n);
BigInt partition_class_size(const Partition& ct);  // conjugacy class size in S_n
BigInt hook_length_dimension(const Partition& lam);

// Trace of the k-th exterior power of the permutation or standard
// representation at a permutation of the given cycle type, read off the
// eigenvalue generating function prod over parts (1 - (-x)^l).
long long wedge_trace(const Partition& ct, int k, bool standard);

// (1/n) sum_k (-1)^k tr(wedge^k std) is the indicator of a single n-cycle.
bool irr_identity_check(int n);

// Murnaghan-Nakayama character value chi_lambda(cycle type)
BigInt sn_character(const Partition& lambda, const Partition& ct);

// Multiplicities of the irreducible constituents of V^(x)n for a
// permutational braided space over a characteristic-zero field.
std::map<Partition, BigInt> sn_decompose(const BraidedSpace& v, int n);

// Pointwise check of the two-dimensional convolution identity over F_q:
// the convolution of 1 with (-1)^deg mu equals 0 in the presence of an
// even-degree irreducible factor and d_2 otherwise; also checks the sign
// trace identity against the Mobius function.
bool trace_convolution_check(long q, int n);

nlohmann::json decomposition_to_json(const std::map<Partition, BigInt>& mult);

}  // namespace braidstat
