#pragma once

#include <memory>
#include <string>
#include <vector>

namespace hypcode {

// Arithmetic in GF(p^k). An element is an integer index in [0, q) encoding
// its coefficient vector (c_0, ..., c_{k-1}) over GF(p) in base p; the
// element itself is sum c_i x^i modulo the canonical modulus polynomial.
// Index 0 is the additive identity, index 1 the multiplicative identity.
//
// The modulus is pinned to the lexicographically smallest monic irreducible
// of degree k (coefficients compared from the constant term upward), so two
// fields built from the same (p, k) are bit-identical and every downstream
// fixture is reproducible.
class Field {
public:
    // Throws std::invalid_argument if p is not prime, k < 1, or p^k > 2^20.
    Field(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    // Monic degree-k modulus, coefficients c_0..c_k over GF(p).
    // For k = 1 this is x, which prime-field arithmetic never consults.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;              // throws on a == 0
    int div(int a, int b) const;       // throws on b == 0
    int pow(int a, long long e) const; // square-and-multiply; 0^0 == 1

    std::vector<int> elements() const; // 0, 1, ..., q-1

    std::string spec_line() const;     // "GF p=<p> k=<k> mod=<c0,...,ck>"
    static Field parse_spec_line(const std::string& line);

private:
    int p_ = 0;
    int k_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;

    // Discrete log / antilog tables for a fixed generator of the unit group.
    // exp_[i] = g^i for i in [0, q-1); log_[exp_[i]] = i; log_[0] unused.
    std::vector<int> exp_;
    std::vector<int> log_;

    // Full addition table for small fields (q <= 1024); larger fields fall
    // back to digit-wise base-p addition.
    std::vector<int> add_table_;

    int add_digits(int a, int b) const;
    int mul_poly(int a, int b) const;  // table-free polynomial multiply
    void check_element(int a) const;
};

// Shared handle used by code and decoder objects so a single table set
// backs arbitrarily many codes over the same field.
using FieldPtr = std::shared_ptr<const Field>;

// A received or transmitted vector: element indices, one per evaluation point.
using Word = std::vector<int>;

FieldPtr make_field(int p, int k);

// Convenience for q itself when the caller has a prime power and not (p, k).
// Throws if q is not a prime power.
FieldPtr make_field_q(int q);

} // namespace hypcode
