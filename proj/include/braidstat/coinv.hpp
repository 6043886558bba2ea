#pragma once

#include <map>
#include <optional>

#include "braidstat/braided.hpp"
#include "braidstat/linalg.hpp"

namespace braidstat {

// ---- generic linear-algebra engine ----
struct CoinvLinearResult {
    long dim = 0;
    std::vector<unsigned long long> quotient_basis;  // non-pivot tensor indices
};
CoinvLinearResult coinv_dim_linear(const BraidedSpace& v, int n,
                                   std::optional<int> grade = std::nullopt);

// ---- labeled-orbit engine for rack spaces ----
// Explores the braid action graph on R^n. Each node carries a scalar
// potential; an inconsistent non-tree edge kills the whole orbit. Surviving
// orbits give a basis of the degree-n coinvariants, represented by their
// lexicographically minimal tuples.
class OrbitEngine {
public:
    OrbitEngine(Rack r, Cocycle2 c);

    struct Level {
        int n = 0;
        unsigned long long nodes = 0;
        std::vector<int32_t> orbit_id;
        std::vector<int16_t> pot;              // exponent of zeta (cyclotomic case)
        std::vector<Scalar> pot_scalar;        // generic case
        std::vector<uint8_t> orbit_alive;
        std::vector<unsigned long long> orbit_rep;
        std::vector<unsigned long long> kill_witness;  // node where the orbit died, or max()
        long alive = 0;
    };

    const Rack& rack() const { return rack_; }
    const Cocycle2& cocycle() const { return coc_; }
    const Field& field() const { return *coc_.field; }
    bool cyclotomic() const { return coc_.cyclotomic_order > 0; }

    const Level& level(int n);
    void drop_level(int n);
    long dim(int n) { return level(n).alive; }

    // class of a pure tensor tuple in the coinvariant basis: orbit column and
    // scalar coefficient; nullopt when the orbit is killed
    std::optional<std::pair<long, Scalar>> tuple_class(int n, unsigned long long idx);

    // alive orbit columns at level n; when generating_only, restricted to
    // orbits whose representative tuple generates the rack
    std::vector<long> basis_columns(int n, bool generating_only);

    // matrix of left multiplication by the pure tensor `prefix`, from the
    // (possibly restricted) degree-n basis to the degree-(n+|prefix|) basis
    SpMat multiplication_matrix(const std::vector<int>& prefix, int n, bool generating_only);

    // dimension of the multidegree piece: counts of each color in the tuple,
    // colors given per rack element
    long dim_multidegree(int n, const std::vector<int>& color_of, const std::vector<int>& target);

private:
    Rack rack_;
    Cocycle2 coc_;
    std::map<int, Level> levels_;
    void compute_level(int n, Level& lv);
};

// ---- central elements ----
struct CentralityData {
    int x = 0, y = 0;
    long q_period = 0;  // minimal t with x^(y^t) = x
    long p_period = 0;  // minimal t as above with trivial accumulated cocycle
};
CentralityData central_powers(const Rack& r, const Cocycle2& c, int x, int y);
long central_power_lcm(const Rack& r, const Cocycle2& c, int y);  // lcm of p over x

// ---- degree of the coinvariant algebra ----
struct DegResult {
    enum class Kind { Exact, UpToBound, ExceedsBound };
    Kind kind = Kind::UpToBound;
    int degree = 0;          // meaningful for Exact/UpToBound
    int certified_bound = 0; // a-priori vanishing bound when Exact
    std::vector<long> dims;  // computed dims, index = degree (from 0)
};
DegResult deg_coinv_rack(OrbitEngine& eng, int bound);
DegResult deg_coinv_linear(const BraidedSpace& v, int bound);

// ---- 1-controlledness certification ----
struct ControlledReport {
    int m = 0, N = 0;
    std::vector<long> dims;                         // dim C_n for n <= N+m
    std::vector<std::pair<long, long>> ker_coker;   // per source degree n <= N
    bool centrality_verified = false;
    bool pass = false;
    nlohmann::json to_json() const;
};
// h = sum over rack elements of the m-th power; requires m divisible by the
// cocycle order and by every central-power period.
ControlledReport one_controlled_check(const Rack& r, const Cocycle2& c, int m, int N);

// ---- splitting of two-colored coinvariant algebras ----
struct SplittingReport {
    bool splits = false;
    int n0 = -1;                       // least degree from which all mixed pieces vanish
    std::vector<long> mixed_dims;      // total mixed-multidegree dim per degree n <= N
    nlohmann::json to_json() const;
};
SplittingReport splitting_check(const Rack& base, const Cocycle2& c_on_product, int N);

}  // namespace braidstat
