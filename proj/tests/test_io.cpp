#include <doctest.h>

#include "axcheck/io.hpp"
#include "helpers.hpp"

using namespace axc;
using namespace axc::testing;

TEST_CASE("emit/parse round trip is byte-stable for the zoo") {
    for (const char* name : {"2a", "bplus", "matsuo-line", "matsuo-pair",
                             "matsuo-sym4", "diag2", "zero"}) {
        ZooEntry z = zoo_by_name(name, QQ(), std::nullopt, 3);
        std::string once = emit_entry(z);
        AlgebraFile parsed = parse_algebra(once);
        std::string twice = emit_algebra(parsed.algebra, parsed.axes,
                                         parsed.law ? &*parsed.law : nullptr);
        CHECK_MESSAGE(once == twice, name);
    }
    ZooEntry z7 = zoo_by_name("2a", FieldSpec::prime(7));
    std::string once = emit_entry(z7);
    AlgebraFile parsed = parse_algebra(once);
    CHECK(emit_algebra(parsed.algebra, parsed.axes,
                       parsed.law ? &*parsed.law : nullptr) == once);
}

TEST_CASE("the emitted 2A file reparses to the paper's constants") {
    ZooEntry z = norton_sakuma_2a(QQ());
    AlgebraFile parsed = parse_algebra(emit_entry(z));
    std::size_t a = parsed.algebra.index_of("eA");
    std::size_t b = parsed.algebra.index_of("eB");
    Vec ab = parsed.algebra.structure_constant(a, b);
    CHECK(ab[parsed.algebra.index_of("eA")] == q(1, 8));
    CHECK(ab[parsed.algebra.index_of("eB")] == q(1, 8));
    CHECK(ab[parsed.algebra.index_of("eC")] == q(-1, 8));
    CHECK(parsed.axes.size() == 3);
    REQUIRE(parsed.law.has_value());
    CHECK(parsed.law->name() == "jordan");
}

TEST_CASE("symmetric completion and duplicate detection") {
    std::string good =
        "field Q\nbasis x y\nmul x x -> 1 x\nmul x y -> 1/2 y\n";
    AlgebraFile f = parse_algebra(good);
    CHECK(f.algebra.structure_constant(1, 0) ==
          f.algebra.structure_constant(0, 1));
    std::string bad =
        "field Q\nbasis x y\nmul x y -> 1 y\nmul y x -> 1 x\n";
    CHECK_THROWS_WITH_AS(parse_algebra(bad),
                         doctest::Contains("asymmetric duplicate"),
                         std::invalid_argument);
    std::string dup_ok =
        "field Q\nbasis x y\nmul x y -> 1 y\nmul y x -> 1 y\n";
    CHECK_NOTHROW(parse_algebra(dup_ok));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_algebra("field F 4\nbasis x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra("field Q\nbasis x\nmul x z -> 1 x\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra("field Q\ndim 2\nbasis x\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra("basis x\n"), std::invalid_argument);
    // coefficient not in the field: 1/7 over F7
    CHECK_THROWS_AS(parse_algebra("field F 7\nbasis x\nmul x x -> 1/7 x\n"),
                    std::domain_error);
    // law parameter collisions
    CHECK_THROWS_AS(parse_algebra("field Q\nbasis x\nlaw jordan 1\n"),
                    std::invalid_argument);
}

TEST_CASE("linear combination parsing") {
    ZooEntry z = norton_sakuma_2a(QQ());
    const Algebra& a = *z.algebra;
    CHECK(parse_linear_combo(a, "eA") == vec(QQ(), {1, 0, 0}));
    CHECK(parse_linear_combo(a, "eB - eC") == vec(QQ(), {0, 1, -1}));
    CHECK(parse_linear_combo(a, "-eA + 4eB + 4 eC") == vec(QQ(), {-1, 4, 4}));
    CHECK(parse_linear_combo(a, "1/2 eA") == q(1, 2) * vec(QQ(), {1, 0, 0}));
    CHECK(parse_linear_combo(a, "2*eA - 1/2*eB") ==
          q(2) * vec(QQ(), {1, 0, 0}) - q(1, 2) * vec(QQ(), {0, 1, 0}));
    CHECK_THROWS_AS(parse_linear_combo(a, "eZ"), std::invalid_argument);
    CHECK_THROWS_AS(parse_linear_combo(a, ""), std::invalid_argument);
}

TEST_CASE("map file round trip") {
    std::vector<std::uint32_t> tab = {0, 1, 2, 4, 3};
    MapFileData parsed = parse_map_file(emit_map_table(tab), QQ());
    CHECK(parsed.is_table());
    CHECK(parsed.table == tab);

    Matrix m(QQ(), 2, 2);
    m.at(0, 0) = q(1, 2);
    m.at(1, 0) = q(-3);
    m.at(1, 1) = q(2, 7);
    MapFileData lin = parse_map_file(emit_linmap(m), QQ());
    REQUIRE(lin.matrix.has_value());
    CHECK(*lin.matrix == m);
    CHECK_THROWS_AS(parse_map_file("garbage\n", QQ()), std::invalid_argument);
}

TEST_CASE("lazy marker round trip") {
    ZooEntry z = highwater(QQ());
    std::string text = emit_entry(z);
    ParsedInput in = parse_input(text);
    REQUIRE(std::holds_alternative<LazyMarker>(in));
    CHECK(std::get<LazyMarker>(in).name == "highwater");
    CHECK(std::get<LazyMarker>(in).field == QQ());
    // ordinary algebra files parse as AlgebraFile through the same entry
    ParsedInput fin = parse_input(emit_entry(norton_sakuma_2a(QQ())));
    CHECK(std::holds_alternative<AlgebraFile>(fin));
}

TEST_CASE("basis key parsing") {
    CHECK(parse_basis_key("a0") == BasisKey{'a', 0});
    CHECK(parse_basis_key("a-3") == BasisKey{'a', -3});
    CHECK(parse_basis_key("a(5)") == BasisKey{'a', 5});
    CHECK(parse_basis_key("s12") == BasisKey{'s', 12});
    CHECK_THROWS_AS(parse_basis_key("7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_basis_key("a"), std::invalid_argument);
}

TEST_CASE("field tokens") {
    CHECK(parse_field_token("Q") == FieldSpec::rationals());
    CHECK(parse_field_token("F7") == FieldSpec::prime(7));
    CHECK_THROWS_AS(parse_field_token("F8"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_token("X"), std::invalid_argument);
}

TEST_CASE("digest is stable") {
    CHECK(fnv1a_digest("abc") == fnv1a_digest("abc"));
    CHECK(fnv1a_digest("abc") != fnv1a_digest("abd"));
}
