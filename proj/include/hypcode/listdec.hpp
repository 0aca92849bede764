#pragma once

#include <vector>

#include "hypcode/code.hpp"

namespace hypcode {

// Feasibility data for list decoding the design-distance-d hyperbolic code
// at radius r: the level sets L(d,r,i) for the interpolation polynomial's
// coefficients, computed until their sizes sum past n or a level empties.
struct ListPlan {
    int q = 0;
    int m = 0;
    long long d = 0;
    int r = 0;
    LMode mode = LMode::strict;
    bool feasible = false;
    int t = 0;                       // Y-degree of the interpolation polynomial
    std::vector<ExponentSet> levels; // L(d,r,0..t) when feasible
    long long unknowns = 0;          // sum of level sizes
    long long n = 0;
};

ListPlan plan(int q, int m, long long d, int r, LMode mode = LMode::strict);

// Largest feasible radius; 0 when even r = 1 has no plan.
int max_radius(int q, int m, long long d, LMode mode = LMode::strict);

// Two-variable sufficient bound a - b + 1 with a = floor(q - d/q) and
// b = q - d/(q-a); every radius strictly below it is feasible. Wants d > q.
double sufficient_radius_bound_m2(int q, long long d);

struct YPolynomial {
    std::vector<SparsePolynomial> coeff; // coeff[i] multiplies Y^i
    int degree() const;                  // largest i with a nonzero coeff, -1 when zero
};

// One homogeneous linear system: a row per evaluation point, a column per
// (level, exponent) pair in level-major lex order, entry = P^a * y^i. The
// kernel vector with first free variable 1 and the rest 0 is returned,
// split back into the Q_i.
YPolynomial interpolate(const FieldPtr& field, const ListPlan& pl, const Word& y);

// Roots f of Q with every variable degree <= q-1. The digit recursion finds
// the ring roots, which include every candidate supported on the design set;
// a pointwise fast path handles Y-degree 1. Each candidate is re-verified by
// substitution (with exponent folding) before being returned.
std::vector<SparsePolynomial> roots_in_y(const Field& f, const YPolynomial& q, int m);

struct ListEntry {
    Word codeword;
    SparsePolynomial message;
    int distance = 0;
};

// plan -> interpolate -> roots -> keep only message support inside the
// code's set and distance <= r. Sorted by (distance, codeword).
// Throws when the radius is infeasible.
std::vector<ListEntry> list_decode(const EvaluationCode& code, long long d,
                                   const Word& y, int r, LMode mode = LMode::strict);
std::vector<ListEntry> list_decode_with_plan(const EvaluationCode& code,
                                             const ListPlan& pl, const Word& y);

// Largest r for which counting just two levels certifies Y-degree 1: the
// footprint-(r+1) family plus the footprint family at q^m + r - d (clamped
// to 1) together exceeding n means decoding reduces to one linear solve.
int unique_radius_via_welch(int q, int m, long long d);

} // namespace hypcode
