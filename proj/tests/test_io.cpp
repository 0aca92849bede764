#include "doctest.h"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "hypcode/io.hpp"

using namespace hypcode;

TEST_CASE("set round trip through a stream") {
    ExponentSet s = build_hyp_set(9, 2, 27);
    std::stringstream buf;
    write_set(buf, s);
    ExponentSet back = read_set(buf);
    CHECK(back == s);
    CHECK(back.tag == "HYP(27)");
    CHECK(back.q == 9);
    CHECK(back.m == 2);
}

TEST_CASE("set reading sorts and dedupes") {
    std::stringstream buf("SET q=4 m=2 tag=CUSTOM\n1,0\n0,1\n1,0\n");
    ExponentSet s = read_set(buf);
    REQUIRE(s.size() == 2);
    CHECK(s.members[0] == Exponent{0, 1});
    CHECK(s.members[1] == Exponent{1, 0});
}

TEST_CASE("set reading rejects malformed input") {
    std::stringstream no_header("1,0\n");
    CHECK_THROWS_AS(read_set(no_header), std::runtime_error);
    std::stringstream bad_kv("SET x=4 m=2 tag=T\n");
    CHECK_THROWS_AS(read_set(bad_kv), std::runtime_error);
    std::stringstream bad_arity("SET q=4 m=2 tag=T\n1,0,0\n");
    CHECK_THROWS_AS(read_set(bad_arity), std::runtime_error);
    std::stringstream out_of_range("SET q=4 m=2 tag=T\n4,0\n");
    CHECK_THROWS_AS(read_set(out_of_range), std::runtime_error);
    std::stringstream junk("SET q=4 m=2 tag=T\n1,x\n");
    CHECK_THROWS(read_set(junk));
}

TEST_CASE("word round trip") {
    Word w = {0, 5, 3, 1};
    std::stringstream buf;
    write_word(buf, w);
    CHECK(buf.str() == "0,5,3,1\n");
    CHECK(read_word(buf) == w);

    std::stringstream empty("");
    CHECK_THROWS_AS(read_word(empty), std::runtime_error);
    std::stringstream garbage("1,zz,3\n");
    CHECK_THROWS(read_word(garbage));
}

TEST_CASE("code spec round trip") {
    auto f = make_field_q(9);
    ExponentSet s = build_rm_set(9, 2, 4);
    std::stringstream buf;
    write_code_spec(buf, *f, s);
    auto [field, set] = read_code_spec(buf);
    CHECK(field->q() == 9);
    CHECK(field->modulus() == f->modulus());
    CHECK(set == s);
}

TEST_CASE("code spec rejects a q mismatch") {
    std::stringstream buf;
    buf << make_field_q(4)->spec_line() << "\n";
    write_set(buf, build_rm_set(5, 2, 1));
    CHECK_THROWS_AS(read_code_spec(buf), std::runtime_error);
}

TEST_CASE("file helpers") {
    const char* path = "io_test_scratch.txt";
    ExponentSet s = build_cube_set(4, 2, 2);
    save_set(path, s);
    CHECK(load_set(path) == s);
    Word w = {1, 2, 3};
    save_word(path, w);
    CHECK(load_word(path) == w);
    std::remove(path);
    CHECK_THROWS_AS(load_set("definitely_not_here.txt"), std::runtime_error);
}
