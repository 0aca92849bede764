#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hypcode/field.hpp"
#include "hypcode/lattice.hpp"
#include "hypcode/linalg.hpp"
#include "hypcode/poly.hpp"

namespace hypcode {

// The evaluation code of an exponent set: codewords are the values of
// polynomials with support in the set at every point of F_q^m.
//
// Orderings are fixed once so serialized fixtures stay stable: generator
// rows follow the lex order of the exponent set, points are lex ordered
// with the first coordinate most significant.
class EvaluationCode {
public:
    // Throws on q mismatch or when q^m exceeds the table guard.
    EvaluationCode(FieldPtr field, ExponentSet exponents);

    int n() const { return (int)points_.size(); }
    int k() const { return exponents_.size(); }
    int m() const { return exponents_.m; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const ExponentSet& exponents() const { return exponents_; }
    const std::vector<Exponent>& points() const { return points_; }
    const Mat& generator() const { return gen_; }
    long long footprint_bound() const { return fb_; }

    // Message polynomial to word. Support outside the exponent set throws.
    Word encode(const SparsePolynomial& message) const;

    // Evaluate an arbitrary polynomial (any support inside the box) at all
    // points, in point order. Used by decoders that shift by monomials
    // outside the code's own set.
    Word eval(const SparsePolynomial& f) const;

    // Coefficient recovery. try_interpolate returns nothing when the word
    // is not in the code; interpolate_exact throws instead.
    std::optional<SparsePolynomial> try_interpolate(const Word& w) const;
    SparsePolynomial interpolate_exact(const Word& w) const;
    bool contains(const Word& w) const { return try_interpolate(w).has_value(); }

private:
    FieldPtr field_;
    ExponentSet exponents_;
    std::vector<Exponent> points_;
    Mat gen_;
    long long fb_ = 0;

    // Solving x * G = w goes through a fixed information set: J is a set of
    // k pivot columns and inv_ the inverse of G restricted to J (transposed),
    // so candidate coefficients are inv_ * w_J. Built on first interpolation,
    // since encode-only uses never need the O(k^2 n) elimination.
    void ensure_solver() const;
    mutable bool solver_ready_ = false;
    mutable std::vector<int> info_cols_;
    mutable Mat inv_;
};

// The q^m points of F_q^m in the fixed word order: lexicographic, first
// coordinate most significant. Every word in the project is indexed this way.
std::vector<Exponent> enumerate_points(int q, int m);

using CodePtr = std::shared_ptr<const EvaluationCode>;

inline CodePtr make_code(FieldPtr field, ExponentSet exponents) {
    return std::make_shared<const EvaluationCode>(std::move(field), std::move(exponents));
}

Word schur(const Field& f, const Word& u, const Word& v);
Word schur_power(const Field& f, const Word& u, long long j); // j = 0 gives all-ones

int hamming_distance(const Word& a, const Word& b);
int hamming_weight(const Word& a);

// Exhaustive oracles. Both walk all q^k messages with incremental codeword
// updates and refuse to start when q^k > 2^22.
long long min_weight_bruteforce(const EvaluationCode& code);

struct NearestResult {
    Word codeword;
    SparsePolynomial message;
    int distance = 0;
};
// Minimum-distance codeword to y; among equals the one with the
// lexicographically smallest message coefficient vector wins.
NearestResult nearest_codeword(const EvaluationCode& code, const Word& y);

// Flip exactly t coordinates of y to uniformly random different values.
// Reproducible for a fixed seed. Returns the new word and the sorted
// changed positions.
std::pair<Word, std::vector<int>> corrupt(const Field& f, const Word& y, int t,
                                          unsigned long long seed);

} // namespace hypcode
