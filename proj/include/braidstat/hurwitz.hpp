#pragma once

#include "braidstat/rack.hpp"

namespace braidstat {

// Tuples over a conjugacy-closed subset R of a finite group, optionally
// constrained to multiply to the identity and to generate the group.
struct NielsenClass {
    FiniteGroup G;
    std::vector<int> R;  // element ids, conjugacy-closed
    int n = 0;
    bool product_one = true;
    bool generating = true;
    std::vector<int> multidegree;  // per conjugacy class of R; empty = unconstrained

    std::vector<std::vector<int>> classes() const;  // conjugacy classes partitioning R
};

struct HurwitzOrbit {
    unsigned long long rep = 0;  // lexicographically minimal tuple index
    long long size = 0;
    int product = 0;                  // common product element
    std::vector<int> generated;       // subgroup generated by the entries
    std::vector<int> class_multiset;  // entry counts per class of R
};

struct OrbitSet {
    long long total_tuples = 0;
    std::vector<HurwitzOrbit> orbits;
    std::vector<int32_t> orbit_id;  // per tuple index; -1 for excluded tuples

    nlohmann::json to_json(const NielsenClass& nc) const;
};

long long nielsen_count(const NielsenClass& nc);

// Independent count of product-one tuples (no generating constraint) by
// convolution in the group algebra.
BigInt product_one_count_oracle(const FiniteGroup& G, const std::vector<int>& R, int n);

// Orbits of the Hurwitz moves sigma_i^{+-1}; the recorded invariants are
// verified to be constant along every edge.
OrbitSet braid_orbits(const NielsenClass& nc);

// Entrywise q-th power on tuples; verifies that it maps R into R and descends
// to orbits, then counts the fixed orbits.
long qpower_fixed_orbits(const NielsenClass& nc, const OrbitSet& orbits, long q);

struct ComponentRow {
    int n = 0;
    long long tuples = 0;
    long orbits = 0;
    long fixed = 0;
    BigInt estimate;  // fixed * (q^n - q^(n-1))
};

std::vector<ComponentRow> component_table(const FiniteGroup& G, const std::vector<int>& R,
                                          int n_lo, int n_hi, long q);

// Orbit counts agree across n = n' mod |G|^2 within the computed window.
bool component_periodicity(const std::vector<ComponentRow>& rows, long group_order);

BigInt point_estimate(long q, int n, long fixed_components);

}  // namespace braidstat
