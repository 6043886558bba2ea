#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braidstat/rack.hpp"

namespace braidstat {

// Sparse column-major operator on a tensor square: columns indexed by
// a*dim+b for basis pairs (a,b).
using SparseCols = std::vector<std::vector<std::pair<int, Scalar>>>;

struct BraidedSpace {
    FieldPtr field;
    int dim = 0;
    SparseCols braiding;      // T on V (x) V
    SparseCols braiding_inv;  // T^{-1}
    bool monomial = false;
    bool permutational = false;
    std::vector<int> mono_perm, mono_perm_inv;   // when monomial
    std::vector<Scalar> mono_scal, mono_scal_inv;
    std::vector<int> grades;  // per basis element; empty means ungraded
    std::vector<std::string> basis_labels;

    // provenance for rack-type spaces
    std::shared_ptr<const Rack> rack;
    std::shared_ptr<const Cocycle2> cocycle;

    bool graded() const { return !grades.empty(); }
    int max_grade() const;

    nlohmann::json to_json() const;
};

// Validates Yang-Baxter and invertibility, computes the inverse braiding and
// structure flags. Grades, when supplied, must be preserved by T.
BraidedSpace braided_space(FieldPtr F, int dim, const SparseCols& braiding,
                           std::vector<int> grades = {},
                           std::vector<std::string> labels = {});

BraidedSpace kappa_zeta(FieldPtr F, const Scalar& zeta);
BraidedSpace kappa_wedge(FieldPtr F);  // graded: grade 0 and grade 1 lines
BraidedSpace kappa_pm(FieldPtr F);
BraidedSpace rack_space(const Rack& r, const Cocycle2& c);
// kappa R_wedge and kappa R_pm realized as rack spaces on R x T2; the wedge
// variant carries the two-color grading.
BraidedSpace rack_wedge_space(const Rack& r, FieldPtr F);
BraidedSpace rack_pm_space(const Rack& r, FieldPtr F);
BraidedSpace tensor_space(const BraidedSpace& a, const BraidedSpace& b);
BraidedSpace dual_space(const BraidedSpace& v);
BraidedSpace with_grades(BraidedSpace v, std::vector<int> grades);

struct AddablePair {
    BraidedSpace first, second;
    SparseCols cross_fs;  // first (x) second -> second (x) first
    SparseCols cross_sf;
};

// Checks all mixed-color braid identities of the prospective direct sum
// (the hexagon diagrams); throws AddableHexagonFails naming the coloring.
AddablePair addable_validate(BraidedSpace first, BraidedSpace second, SparseCols cross_fs,
                             SparseCols cross_sf);
AddablePair plain_pair(const BraidedSpace& a, const BraidedSpace& b);
AddablePair weighted_pair(const BraidedSpace& a, const BraidedSpace& b, const Scalar& alpha,
                          const Scalar& beta);
BraidedSpace direct_sum(const AddablePair& p);

struct BraidWord {
    int strands = 0;
    std::vector<std::pair<int, int>> letters;  // (i, +-1), 1 <= i <= strands-1

    static BraidWord parse(int strands, const std::string& text);  // "s1 s2 s1^-1"
    std::string to_string() const;
};

// Sparse vector in V^{(x) n}: multi-index encoded base dim, first slot most
// significant.
using TensorVec = std::map<unsigned long long, Scalar>;

unsigned long long tuple_to_index(const std::vector<int>& tuple, int dim);
std::vector<int> index_to_tuple(unsigned long long idx, int dim, int n);

TensorVec braid_act(const BraidedSpace& v, const BraidWord& w, const TensorVec& vec);

// Scalar by which a braid twists a pure rack tensor, with the image tuple.
std::pair<Scalar, std::vector<int>> nabla(const Rack& r, const Cocycle2& c,
                                          const std::vector<int>& tuple, const BraidWord& w);

// Verifies that r -> sum_a a^{-1} (r,a) intertwines the braidings of the
// cocycle space and its rackification.
bool rackify_embedding_check(const Rack& r, const Cocycle2& c);

}  // namespace braidstat
