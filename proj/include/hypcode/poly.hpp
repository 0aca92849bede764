#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypcode/field.hpp"
#include "hypcode/lattice.hpp"

namespace hypcode {

// A polynomial in m variables over GF(q), stored as a map from exponent
// vector to nonzero coefficient index. The map's lexicographic key order
// doubles as the canonical term order for printing and iteration.
class SparsePolynomial {
public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(int m) : m_(m) {}

    int vars() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return (int)terms_.size(); }

    int coeff(const Exponent& e) const;
    void set_coeff(const Exponent& e, int c); // c == 0 erases the term

    const std::map<Exponent, int>& terms() const { return terms_; }

    // Largest exponent of variable v (0-based) over all terms; -1 when zero.
    int degree_in(int v) const;

    int eval(const Field& f, const std::vector<int>& point) const;

    bool operator==(const SparsePolynomial& o) const {
        return m_ == o.m_ && terms_ == o.terms_;
    }

    std::string to_string() const; // "e1,e2:c e1,e2:c ..." or "0"

private:
    int m_ = 0;
    std::map<Exponent, int> terms_;
};

SparsePolynomial poly_add(const Field& f, const SparsePolynomial& a,
                          const SparsePolynomial& b);
SparsePolynomial poly_sub(const Field& f, const SparsePolynomial& a,
                          const SparsePolynomial& b);
SparsePolynomial poly_scale(const Field& f, const SparsePolynomial& a, int c);

// Ring product: exponents add coordinate-wise with no folding, so repeated
// multiplication can leave the box. Root finding works in this ring.
SparsePolynomial poly_mul(const Field& f, const SparsePolynomial& a,
                          const SparsePolynomial& b);

// Fold every exponent back into [0, q-1]^m under X^q = X, combining
// coefficients that collide. Matches evaluation semantics on all of GF(q)^m.
SparsePolynomial poly_reduce(const Field& f, const SparsePolynomial& a);

// Product followed by folding; the multiplication used wherever results
// feed evaluations.
SparsePolynomial poly_mul_reduced(const Field& f, const SparsePolynomial& a,
                                  const SparsePolynomial& b);

} // namespace hypcode
