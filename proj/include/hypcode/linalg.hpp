#pragma once

#include <optional>
#include <vector>

#include "hypcode/field.hpp"

namespace hypcode {

// Dense row-major matrix over GF(q). Just enough linear algebra for
// generator ranks, interpolation, and kernel extraction; nothing clever.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<int> a; // rows * cols entries

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
    int& at(int r, int c) { return a[(size_t)r * cols + c]; }
    int at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

// Reduced row echelon form in place, scanning columns left to right with
// the first nonzero entry as pivot. Returns the pivot column indices, so
// rank is the returned size and free columns are the complement.
std::vector<int> rref_in_place(const Field& f, Mat& m);

// Solve x * g = w for a full-row-rank k x n generator g. Returns the unique
// solution or nothing when w is outside the row space.
std::optional<std::vector<int>> solve_left(const Field& f, const Mat& g,
                                           const std::vector<int>& w);

// One deterministic nonzero kernel vector of m (viewed as equations
// m * x = 0): after elimination the first free variable is set to 1 and all
// later free variables to 0. Returns nothing when the kernel is trivial.
std::optional<std::vector<int>> kernel_vector(const Field& f, Mat m);

// Row spaces as canonical forms: RREF with zero rows dropped.
Mat row_space_canonical(const Field& f, Mat m);

std::vector<int> mat_vec_mul(const Field& f, const Mat& m, const std::vector<int>& v);

} // namespace hypcode
