#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidstat/field.hpp"

namespace braidstat {

// Finite rack: x^y = table[x][y]; every column is a bijection and the
// operation is self-distributive.
struct Rack {
    int size = 0;
    std::vector<std::vector<int>> table;
    std::vector<std::string> labels;

    int act(int x, int y) const { return table[x][y]; }
    // unique z with z^y = x
    int unact(int x, int y) const { return inverse_table[x][y]; }

    std::vector<std::vector<int>> inverse_table;

    nlohmann::json to_json() const;
    static Rack from_json(const nlohmann::json& j);
};

Rack rack_validate(const std::vector<std::vector<int>>& table,
                   std::vector<std::string> labels = {});

struct FiniteGroup {
    int size = 0;
    std::vector<std::vector<int>> mul;
    int id = 0;
    std::vector<int> inv;
    std::vector<std::string> labels;

    int op(int a, int b) const { return mul[a][b]; }
    int conj(int x, int g) const { return mul[mul[inv[g]][x]][g]; }  // g^{-1} x g

    static FiniteGroup from_table(const std::vector<std::vector<int>>& mul,
                                  std::vector<std::string> labels = {});
    static FiniteGroup symmetric(int n);
    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);  // order 2n
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& gens);

    std::vector<int> closure(std::vector<int> gens) const;  // sorted subgroup
    std::vector<std::vector<int>> all_subgroups(long cap = 100000) const;
    std::vector<int> conjugacy_class(int x) const;
    std::vector<std::vector<int>> conjugacy_classes() const;
    bool is_conjugacy_closed(const std::vector<int>& subset) const;
    int element_order(int x) const;
    long exponent() const;
    bool is_abelian() const;

    nlohmann::json to_json() const;
    static FiniteGroup from_json(const nlohmann::json& j);
};

// ---- constructions ----
Rack trivial_rack(int n);
Rack cyclic_rack(int m);  // x^y = x+1 mod m
Rack joyce_quandle();     // elements J1,J2,J3
Rack wedge_rack();        // one-point rack joined with the 2-element cyclic rack
Rack conjugation_rack(const FiniteGroup& G, const std::vector<int>& subset);
Rack s3_transposition_quandle();
Rack s4_transposition_quandle();
Rack disjoint_union(const Rack& a, const Rack& b);
Rack product_rack(const Rack& a, const Rack& b);  // element (x,y) -> x*b.size + y
Rack quotient_rack(const Rack& r, const std::vector<int>& ideal,
                   std::vector<int>* projection = nullptr);

// Inner automorphism group, materialized as permutations of the rack.
struct InnData {
    std::vector<std::vector<int>> generators;  // x -> x^y, one per y
    std::vector<std::vector<int>> elements;    // full closure, sorted
    bool abelian = false;
    std::vector<int> component_of;
    int num_components = 0;
};
InnData inner_group(const Rack& r);

std::vector<int> subrack_closure(const Rack& r, std::vector<int> seed);
bool rack_generates(const Rack& r, const std::vector<int>& subset);
bool is_quandle(const Rack& r);
bool is_connected(const Rack& r);
Rack subrack(const Rack& r, const std::vector<int>& elements);  // induced table
bool hereditarily_connected(const Rack& r);                     // size-capped
bool is_ideal(const Rack& r, const std::vector<int>& subset);

struct RackReport {
    bool quandle = false;
    bool connected = false;
    std::optional<bool> hereditarily_conn;  // absent when the rack exceeds the size cap
    int num_components = 0;
    bool inn_abelian = false;
    long inn_order = 0;
    std::vector<std::vector<int>> ideals;
    std::optional<bool> subset_generates;  // when a probe subset was supplied
    nlohmann::json to_json() const;
};
RackReport rack_predicates(const Rack& r, const std::vector<int>* probe_subset = nullptr);

bool nonsplitting_check(const FiniteGroup& G, const std::vector<int>& R);

// Product-generation criterion: R connected, Inn(S) abelian, and some element
// of S acting trivially. Returns whether X generates R x S; self-checks
// against the closure computation.
bool goursat_generates(const Rack& R, const Rack& S, const std::vector<std::pair<int, int>>& X);

bool synchronized(const Rack& R, const Rack& S);

bool racks_isomorphic(const Rack& a, const Rack& b);  // exhaustive, small sizes

// ---- 2-cocycles ----
struct Cocycle2 {
    FieldPtr field;
    int rack_size = 0;
    std::vector<Scalar> values;  // flattened rack_size^2, values[x*n+y] = c(x,y)
    long cyclotomic_order = 0;   // 0 when some value is not a root of unity
    std::vector<int> exps;       // value = zeta^exps[..] when cyclotomic
    Scalar zeta;                 // canonical root of order cyclotomic_order

    const Scalar& value(int x, int y) const { return values[x * rack_size + y]; }
    int exponent(int x, int y) const { return exps[x * rack_size + y]; }

    nlohmann::json to_json() const;
};

Cocycle2 cocycle_validate(const Rack& r, FieldPtr F, std::vector<Scalar> values);
Cocycle2 constant_cocycle(const Rack& r, FieldPtr F, const Scalar& lambda);
// c_wedge and c_pm on a product rack R x T2 (element (x,eps) -> x*2+eps).
Cocycle2 wedge_cocycle(const Rack& r_times_t2, FieldPtr F);
Cocycle2 pm_cocycle(const Rack& r_times_t2, FieldPtr F);

// R_c on R x A for a cyclotomic cocycle valued in the group of d-th roots of
// unity; element (r, j) -> r*d + j encodes (r, zeta^j).
Rack rackify(const Rack& r, const Cocycle2& c);

}  // namespace braidstat
