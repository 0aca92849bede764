#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "hypcode/code.hpp"

namespace hypcode {

struct DecodeResult {
    Word codeword;
    SparsePolynomial message;
    int errors_corrected = 0; // always d_H(input word, codeword)
    std::map<std::string, long long> oracle_calls;
};

// Classical one-variable decoder for the full-length code: evaluations of
// degree <= s polynomials at every field element, zero included, so n = q
// and up to t = (q-s-1)/2 errors are correctable. Backend: power-sum
// syndromes, Berlekamp-Massey, root scan over the whole field, and a
// final membership verification of the corrected word.
class RSDecoder {
public:
    RSDecoder(FieldPtr field, int s); // requires 0 <= s <= q-1
    int s() const { return s_; }
    int n() const { return field_->q(); }
    int t() const { return (field_->q() - s_ - 1) / 2; }
    const EvaluationCode& code() const { return code_; }

    // Failure (more errors than t, or an inconsistent pattern) is a value.
    std::optional<DecodeResult> decode(const Word& y) const;

private:
    FieldPtr field_;
    int s_;
    EvaluationCode code_;
};

// Bounded-distance decoding oracle: the codeword within `radius` of y, or
// nothing. Unique whenever 2*radius < minimum distance; implementations
// return an arbitrary-but-deterministic choice beyond that.
class BoundedDecoder {
public:
    virtual ~BoundedDecoder() = default;
    virtual const EvaluationCode& code() const = 0;
    virtual int radius() const = 0;
    virtual std::optional<DecodeResult> decode(const Word& y) const = 0;
};

// Full message-space scan per decode call. Guard: q^k <= 2^22.
std::unique_ptr<BoundedDecoder> make_exhaustive_decoder(CodePtr code, int radius);

// Precomputed syndrome table over all error patterns of weight <= radius.
// Guard: table entries <= 2^22; radius must stay within half the footprint
// bound so patterns cannot collide.
std::unique_ptr<BoundedDecoder> make_syndrome_decoder(CodePtr code, int radius);

// Chooses a syndrome table when it fits, else the exhaustive scan, else
// refuses. Covers every code this project decodes at desk scale.
std::unique_ptr<BoundedDecoder> make_bounded_decoder(CodePtr code, int radius);

// Decode the subcode through a decoder of a containing code: accept the
// outer result only when it lies in the inner code. Corrects up to the
// outer decoder's radius.
std::optional<DecodeResult> decode_supercode(const EvaluationCode& inner,
                                             const BoundedDecoder& outer,
                                             const Word& y);

// Coset decoding of C_B (B = dec_a's set plus extra exponents) through the
// subcode decoder dec_a: every polynomial f supported on B minus A is
// shifted out in turn and y - ev(f) decoded in C_A; a result is accepted
// when the reassembled word is within t_B = (FB(B)-1)/2 of y. Iteration
// over the coefficient vectors of f is lexicographic, first exponent most
// significant; reverse_order flips it (the answer must not change within
// radius, which the tests exercise).
std::optional<DecodeResult> decode_coset(const BoundedDecoder& dec_a,
                                         const EvaluationCode& b,
                                         const Word& y,
                                         bool reverse_order = false);

// Two-variable decoder for Hyp_q(d,2) run as coset decoding over the
// largest weighted-degree code one step below the containing one: with s
// the smallest degree whose code contains the hyperbolic set, candidates
// range over H minus RM(s-1) and the base decoder corrects in RM(s-1).
// Corrects up to min(t_{RM(s-1)}, (FB(H)-1)/2) errors.
std::optional<DecodeResult> decode_intermediate_m2(FieldPtr field, long long d,
                                                   const Word& y);

// Recursive decoder for the m-fold tensor code on exponent box [0,s]^m,
// correcting up to (t_RS+1)^m - 1 errors: split by the first coordinate
// into q blocks, decode each block in the (m-1)-variable code, then decode
// every per-coefficient column with the one-variable decoder. The RS call
// count is deterministic (failures do not shortcut the schedule) and is
// reported in oracle_calls["rs"].
std::optional<DecodeResult> decode_cube(FieldPtr field, int s, int m, const Word& y);

// (t_RS+1)^m - 1, the guaranteed radius of decode_cube.
long long cube_decode_radius(int q, int s, int m);

// Expected number of one-variable decoder invocations of decode_cube:
// f(1) = 1, f(m) = q f(m-1) + (s+1)^{m-1}.
long long cube_rs_call_count(int q, int s, int m);

} // namespace hypcode
