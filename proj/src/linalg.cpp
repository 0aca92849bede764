#include "hypcode/linalg.hpp"

#include <stdexcept>

namespace hypcode {

std::vector<int> rref_in_place(const Field& f, Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r) {
            if (m.at(r, col) != 0) { pr = r; break; }
        }
        if (pr < 0) continue;
        if (pr != row) {
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
        }
        int inv = f.inv(m.at(row, col));
        for (int c = col; c < m.cols; ++c) m.at(row, c) = f.mul(m.at(row, c), inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            int factor = m.at(r, col);
            if (factor == 0) continue;
            for (int c = col; c < m.cols; ++c) {
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::optional<std::vector<int>> solve_left(const Field& f, const Mat& g,
                                           const std::vector<int>& w) {
    if ((int)w.size() != g.cols) throw std::invalid_argument("solve_left: length mismatch");
    // Transpose to the usual Ax = b shape and eliminate on the augmented matrix.
    Mat aug(g.cols, g.rows + 1);
    for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.cols; ++c) aug.at(c, r) = g.at(r, c);
    for (int c = 0; c < g.cols; ++c) aug.at(c, g.rows) = w[c];
    std::vector<int> pivots = rref_in_place(f, aug);

    std::vector<int> x(g.rows, 0);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == g.rows) return std::nullopt; // inconsistent system
        x[pivots[i]] = aug.at((int)i, g.rows);
    }
    // With full row rank every unknown is a pivot; if not, reject rather
    // than return one of many solutions.
    if ((int)pivots.size() != g.rows) throw std::invalid_argument("solve_left: generator is rank deficient");
    return x;
}

std::optional<std::vector<int>> kernel_vector(const Field& f, Mat m) {
    std::vector<int> pivots = rref_in_place(f, m);
    if ((int)pivots.size() == m.cols) return std::nullopt;
    int free_col = -1;
    {
        size_t pi = 0;
        for (int c = 0; c < m.cols; ++c) {
            if (pi < pivots.size() && pivots[pi] == c) { ++pi; continue; }
            free_col = c;
            break;
        }
    }
    std::vector<int> x(m.cols, 0);
    x[free_col] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) {
        // Pivot row i reads x_pivot + sum(coeff * x_free) = 0.
        x[pivots[i]] = f.neg(m.at((int)i, free_col));
    }
    return x;
}

Mat row_space_canonical(const Field& f, Mat m) {
    std::vector<int> pivots = rref_in_place(f, m);
    Mat out((int)pivots.size(), m.cols);
    for (int r = 0; r < out.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c);
    return out;
}

std::vector<int> mat_vec_mul(const Field& f, const Mat& m, const std::vector<int>& v) {
    if ((int)v.size() != m.cols) throw std::invalid_argument("mat_vec_mul: length mismatch");
    std::vector<int> out(m.rows, 0);
    for (int r = 0; r < m.rows; ++r) {
        int acc = 0;
        for (int c = 0; c < m.cols; ++c) acc = f.add(acc, f.mul(m.at(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

} // namespace hypcode
