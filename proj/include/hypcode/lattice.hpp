#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hypcode {

// An exponent vector for a monomial X_1^{e_1} ... X_m^{e_m}. Reduced vectors
// keep every coordinate in [0, q-1]; Minkowski sums may exceed that.
using Exponent = std::vector<int>;

// A finite set of reduced exponent vectors in [0, q-1]^m. The member list is
// kept sorted lexicographically and duplicate-free, which makes subset tests,
// equality, and serialization deterministic.
struct ExponentSet {
    int q = 0;
    int m = 0;
    std::string tag = "CUSTOM"; // RM(s), HYP(d), CUBE(s), or CUSTOM
    std::vector<Exponent> members;

    bool contains(const Exponent& e) const;
    int size() const { return (int)members.size(); }
    bool empty() const { return members.empty(); }

    // Equality ignores the tag: two sets with the same (q, m, members)
    // define the same code.
    bool operator==(const ExponentSet& o) const {
        return q == o.q && m == o.m && members == o.members;
    }
};

// Product of (q - e_j) over the coordinates; the per-monomial quantity whose
// minimum over a set lower-bounds the code's minimum distance.
long long footprint(const Exponent& e, int q);

// Minimum footprint over the set; q^m for the empty set never arises in
// practice (callers treat an empty set as the zero code).
long long footprint_bound(const ExponentSet& a);

ExponentSet build_rm_set(int q, int m, int s);          // sum of coords <= s
ExponentSet build_hyp_set(int q, int m, long long d);   // footprint >= d
ExponentSet build_cube_set(int q, int m, int s);        // box [0, s]^m

// subset / superset on members (q and m must agree)
bool is_subset(const ExponentSet& inner, const ExponentSet& outer);

// Exact minimum distance of the weighted-degree-s code on m variables:
// write s = t(q-1) + r with 0 <= r < q-1 and return (q-r) q^{m-1-t}.
long long rm_min_distance(int q, int m, int s);

// Largest footprint over exponent vectors with fixed coordinate sum s:
// write s = mt + r with 0 <= r <= m-1 and return (q-t-1)^r (q-t)^{m-r}.
long long max_product_at_sum(int q, int m, int s);

// True when the degree-s code already has the largest dimension possible at
// its distance, i.e. equals the footprint-d family at d = its own distance.
// When true the set equality is verified literally; witness_d receives the
// distance either way.
bool rm_is_hyperbolic(int q, int m, int s, long long* witness_d = nullptr);

// Smallest s with Hyp_q(d,m) inside RM_q(s,m), and largest s with
// RM_q(s,m) inside Hyp_q(d,m). Both verified by literal set containment
// before returning.
int smallest_rm_containing_hyp(int q, int m, long long d);
int largest_rm_inside_hyp(int q, int m, long long d);

// (s_inside, s_outside): largest s with Cube_q(s,m) inside Hyp_q(d,m) and
// smallest s with Hyp_q(d,m) inside Cube_q(s,m). Integer tests only, then
// verified set-wise.
std::pair<int, int> cube_hyp_bounds(int q, int m, long long d);

// i-fold Minkowski sum of the members (i = 0 gives the zero vector alone).
// Coordinates may exceed q-1; the result is sorted and duplicate-free.
std::vector<Exponent> minkowski_power(const ExponentSet& h, int i);

// Reduction under X^q = X: a coordinate c > q-1 maps to ((c-1) mod (q-1)) + 1.
Exponent reduce_exponent(const Exponent& e, int q);

enum class LMode { strict, reduced };

// The coefficient-support set for interpolation level i: all reduced a such
// that a + iH lies in the footprint-(r+1) family. strict additionally
// requires a + iH to stay inside the exponent box; reduced first folds the
// sums back into the box under X^q = X.
ExponentSet l_set(int q, int m, long long d, long long r, int i, LMode mode);

// Closed form of the strict level set for m = 2: the cube [0, q-1-ia]^2,
// valid when d > q and r < a - b + 1 with a = floor(q - d/q) and
// b = q - d/(q-a). Throws outside that domain.
ExponentSet l_set_closed_form_m2(int q, long long d, long long r, int i);

// Distance bound for the code on a Minkowski-sum support:
// d_A + d_B - q^m when positive, else the vacuous bound 1.
long long sum_code_distance_bound(int q, int m, long long d_a, long long d_b);

std::string exponent_to_string(const Exponent& e);   // "3,0"
Exponent exponent_from_string(const std::string& s);

} // namespace hypcode
