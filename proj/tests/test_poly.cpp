#include "doctest.h"

#include <vector>

#include "hypcode/poly.hpp"

using namespace hypcode;

namespace {

SparsePolynomial from_terms(int m, std::vector<std::pair<Exponent, int>> terms) {
    SparsePolynomial p(m);
    for (auto& [e, c] : terms) p.set_coeff(e, c);
    return p;
}

} // namespace

TEST_CASE("term storage") {
    SparsePolynomial p(2);
    CHECK(p.is_zero());
    CHECK(p.to_string() == "0");
    p.set_coeff({1, 0}, 2);
    p.set_coeff({0, 0}, 3);
    CHECK(p.term_count() == 2);
    CHECK(p.coeff({1, 0}) == 2);
    CHECK(p.coeff({2, 2}) == 0);
    p.set_coeff({1, 0}, 0); // erases
    CHECK(p.term_count() == 1);
    CHECK(p.degree_in(0) == 0);
    CHECK(SparsePolynomial(2).degree_in(0) == -1);
}

TEST_CASE("add sub scale over a prime field") {
    auto f = make_field(5, 1);
    auto p = from_terms(1, {{{1}, 2}, {{0}, 3}});
    auto q = from_terms(1, {{{1}, 3}, {{0}, 2}});
    // (2x+3) + (3x+2) = 5x + 5 = 0
    CHECK(poly_add(*f, p, q).is_zero());
    CHECK(poly_sub(*f, p, p).is_zero());
    CHECK(poly_scale(*f, p, 2) == from_terms(1, {{{1}, 4}, {{0}, 1}}));
    CHECK(poly_scale(*f, p, 0).is_zero());
}

TEST_CASE("ring product over GF(3)") {
    auto f = make_field(3, 1);
    auto p = from_terms(1, {{{1}, 1}, {{0}, 1}}); // x + 1
    auto q = from_terms(1, {{{1}, 1}, {{0}, 2}}); // x + 2
    auto prod = poly_mul(*f, p, q);
    // (x+1)(x+2) = x^2 + 3x + 2 = x^2 + 2
    CHECK(prod == from_terms(1, {{{2}, 1}, {{0}, 2}}));
    CHECK(poly_mul(*f, p, SparsePolynomial(1)).is_zero());
}

TEST_CASE("ring product leaves the box, reduction folds it back") {
    auto f = make_field_q(4);
    auto x3 = from_terms(1, {{{3}, 1}});
    auto sq = poly_mul(*f, x3, x3); // x^6, outside the box
    CHECK(sq.degree_in(0) == 6);
    // 6 folds to (6-1) % 3 + 1 = 3
    CHECK(poly_reduce(*f, sq) == from_terms(1, {{{3}, 1}}));
    CHECK(poly_mul_reduced(*f, x3, x3) == from_terms(1, {{{3}, 1}}));

    auto x4 = from_terms(1, {{{4}, 1}});
    CHECK(poly_reduce(*f, x4) == from_terms(1, {{{1}, 1}}));
    // x^4 + x folds to x + x = 0 in characteristic 2
    auto p = from_terms(1, {{{4}, 1}, {{1}, 1}});
    CHECK(poly_reduce(*f, p).is_zero());
}

TEST_CASE("reduction fixes evaluations") {
    for (int q : {3, 4, 5, 9}) {
        auto f = make_field_q(q);
        auto p = from_terms(2, {{{q, 1}, 2}, {{1, q + 2}, 1}, {{0, 0}, 1}});
        auto r = poly_reduce(*f, p);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(p.eval(*f, {a, b}) == r.eval(*f, {a, b}));
        CHECK(r.degree_in(0) <= q - 1);
        CHECK(r.degree_in(1) <= q - 1);
    }
}

TEST_CASE("evaluation by horner") {
    auto f = make_field(5, 1);
    auto p = from_terms(2, {{{2, 1}, 1}, {{0, 0}, 2}}); // x0^2 x1 + 2
    CHECK(p.eval(*f, {3, 4}) == 3);                     // 9*4 + 2 = 38 = 3 mod 5
    CHECK(p.eval(*f, {0, 0}) == 2);
    CHECK(SparsePolynomial(2).eval(*f, {1, 1}) == 0);
}

TEST_CASE("product evaluates pointwise") {
    auto f = make_field_q(9);
    auto p = from_terms(2, {{{1, 0}, 4}, {{0, 2}, 7}, {{0, 0}, 1}});
    auto q = from_terms(2, {{{2, 1}, 3}, {{1, 1}, 8}});
    auto prod = poly_mul(*f, p, q);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            CHECK(prod.eval(*f, {a, b}) ==
                  f->mul(p.eval(*f, {a, b}), q.eval(*f, {a, b})));
}

TEST_CASE("printing is stable") {
    auto p = from_terms(2, {{{0, 1}, 2}, {{1, 0}, 1}});
    CHECK(p.to_string() == "0,1:2 1,0:1");
}
