#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

#include "hypcode/field.hpp"

using namespace hypcode;

namespace {

// Exhaustive field axiom check. Cheap for q <= 64, which covers every field
// the tests below construct.
void check_axioms(const Field& f) {
    int q = f.q();
    REQUIRE(q <= 64);
    for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.div(a, a) == 1);
        }
        for (int b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
            for (int c = 0; c < q; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
    // nonzero elements form a group: products of nonzeros are nonzero
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b) CHECK(f.mul(a, b) != 0);
}

} // namespace

TEST_CASE("canonical moduli are frozen") {
    CHECK(make_field(2, 2)->modulus() == std::vector<int>{1, 1, 1});
    CHECK(make_field(2, 3)->modulus() == std::vector<int>{1, 0, 1, 1});
    CHECK(make_field(2, 4)->modulus() == std::vector<int>{1, 0, 0, 1, 1});
    CHECK(make_field(2, 5)->modulus() == std::vector<int>{1, 0, 0, 1, 0, 1});
    CHECK(make_field(2, 6)->modulus() == std::vector<int>{1, 0, 0, 0, 0, 1, 1});
    CHECK(make_field(3, 2)->modulus() == std::vector<int>{1, 0, 1});
    CHECK(make_field(3, 3)->modulus() == std::vector<int>{1, 0, 2, 1});
    CHECK(make_field(5, 2)->modulus() == std::vector<int>{1, 1, 1});
    CHECK(make_field(7, 2)->modulus() == std::vector<int>{1, 0, 1});
    // prime fields get the formal modulus x - 0 shifted to degree 1
    CHECK(make_field(5, 1)->modulus().size() == 2);
}

TEST_CASE("prime field arithmetic matches integers mod p") {
    auto f = make_field(7, 1);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            CHECK(f->add(a, b) == (a + b) % 7);
            CHECK(f->mul(a, b) == (a * b) % 7);
        }
    CHECK(f->inv(3) == 5);
    CHECK(f->pow(3, 6) == 1);
}

TEST_CASE("field axioms hold exhaustively") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64})
        check_axioms(*make_field_q(q));
}

TEST_CASE("frobenius is additive in characteristic p") {
    for (int q : {4, 8, 9, 16, 27, 25}) {
        auto f = make_field_q(q);
        int p = f->p();
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
    }
}

TEST_CASE("multiplicative order divides q-1") {
    for (int q : {8, 9, 16, 27}) {
        auto f = make_field_q(q);
        for (int a = 1; a < q; ++a) CHECK(f->pow(a, q - 1) == 1);
    }
}

TEST_CASE("pow handles edge exponents") {
    auto f = make_field_q(9);
    CHECK(f->pow(0, 0) == 1);
    CHECK(f->pow(0, 5) == 0);
    CHECK(f->pow(1, 1000000007LL) == 1);
    for (int a = 1; a < 9; ++a) CHECK(f->pow(a, 0) == 1);
}

TEST_CASE("spec line round trips") {
    for (int q : {2, 9, 16, 27}) {
        auto f = make_field_q(q);
        Field g = Field::parse_spec_line(f->spec_line());
        CHECK(g.p() == f->p());
        CHECK(g.k() == f->k());
        CHECK(g.modulus() == f->modulus());
    }
}

TEST_CASE("parse rejects a non-canonical modulus") {
    // x^3 + x + 1 is irreducible over GF(2) but not the canonical pick
    CHECK_THROWS_AS(Field::parse_spec_line("GF p=2 k=3 mod=1,1,0,1"),
                    std::invalid_argument);
    CHECK_THROWS_AS(Field::parse_spec_line("GF p=2 k=3"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse_spec_line("XX p=2 k=3 mod=1,0,1,1"),
                    std::invalid_argument);
}

TEST_CASE("constructor guards") {
    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_field_q(6), std::invalid_argument);
    CHECK_THROWS_AS(make_field_q(1), std::invalid_argument);
    CHECK_THROWS_AS(make_field_q(9)->inv(0), std::invalid_argument);
    CHECK_THROWS_AS(make_field_q(9)->div(1, 0), std::invalid_argument);
}

TEST_CASE("elements enumerates the whole field once") {
    auto f = make_field_q(16);
    auto all = f->elements();
    CHECK(all.size() == 16);
    CHECK(std::set<int>(all.begin(), all.end()).size() == 16);
}
