#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "steiner/cohomology.hpp"
#include "steiner/families.hpp"
#include "steiner/random.hpp"
#include "steiner/serialize.hpp"

using namespace steiner;
using fixtures::display;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("evaluate at points") {
    const auto xyt = display("[ x y t ]");
    CHECK(evaluate(xyt, fixtures::point(Q, {1, 0, 0})) == ScalarMatrix::from_ints(Q, 1, 3, {1, 0, 0}));
    CHECK(evaluate(xyt, fixtures::point(Q, {0, 0, 1})) == ScalarMatrix::from_ints(Q, 1, 3, {0, 0, 1}));

    const auto a = display(fixtures::kP2MinC3);
    const auto m = evaluate(a, fixtures::point(Q, {0, 0, 1}));
    std::vector<long long> expected(24, 0);
    for (auto [i, j] : {std::pair{1, 3}, {2, 6}, {3, 1}, {3, 5}}) expected[(i - 1) * 8 + (j - 1)] = 1;
    CHECK(m == ScalarMatrix::from_ints(Q, 3, 8, expected));

    CHECK_THROWS_AS(evaluate(xyt, fixtures::point(Q, {0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(xyt, fixtures::point(Q, {1, 0})), std::invalid_argument);
}

TEST_CASE("pointwise surjectivity") {
    CHECK(pointwise_surjective(display("[ x y t ]"), 2).surjective);
    const auto bad = pointwise_surjective(display("[ x y ]"), 2);
    CHECK_FALSE(bad.surjective);
    REQUIRE(bad.witness);
    CHECK(*bad.witness == fixtures::point(Field::prime(2), {0, 0, 1}));
    CHECK(pointwise_surjective(display(fixtures::kP2MinC3), 3).surjective);
    CHECK(enumerate_points(2, 3).size() == 13);
    CHECK(enumerate_points(3, 2).size() == 15);
}

TEST_CASE("row and column transforms") {
    const auto xyt = display("[ x y t ]");
    CHECK(row_col_transform(xyt, ScalarMatrix::identity(Q, 1), ScalarMatrix::identity(Q, 3)) == xyt);
    const auto swap = ScalarMatrix::from_ints(Q, 3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    CHECK(row_col_transform(xyt, ScalarMatrix::identity(Q, 1), swap) == display("[ y x t ]"));
    CHECK_THROWS_AS(row_col_transform(xyt, ScalarMatrix::from_ints(Q, 1, 1, {0}),
                                      ScalarMatrix::identity(Q, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(row_col_transform(xyt, ScalarMatrix::identity(Q, 1),
                                      ScalarMatrix::from_ints(Q, 3, 3, {1, 1, 0, 1, 1, 0, 0, 0, 1})),
                    std::invalid_argument);
}

TEST_CASE("property: evaluation commutes with transforms") {
    Rng rng(21);
    const auto a = display(fixtures::kP2MinC4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto r = random_invertible(Q, a.rows(), rng);
        const auto c = random_invertible(Q, a.cols(), rng);
        const auto b = row_col_transform(a, r, c);
        Point pt;
        do {
            pt = make_point(Q, {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)});
        } while (std::all_of(pt.begin(), pt.end(), [](auto& e) { return e.is_zero(); }));
        CHECK(evaluate(b, pt) == r * evaluate(a, pt) * c);
    }
}

TEST_CASE("property: surjectivity survives transforms") {
    Rng rng(22);
    const Field f3 = Field::prime(3);
    for (const auto* text : {fixtures::kP2MinC3, "[ x y ]"}) {
        const auto a = display(text, 2, f3);
        const bool before = pointwise_surjective(a, 3).surjective;
        for (int trial = 0; trial < 5; ++trial) {
            const auto b = row_col_transform(a, random_invertible(f3, a.rows(), rng),
                                             random_invertible(f3, a.cols(), rng));
            CHECK(pointwise_surjective(b, 3).surjective == before);
        }
    }
}

TEST_CASE("delete and append columns") {
    const auto a = display(fixtures::kP2MinC3);
    CHECK(delete_columns(a, {}) == a);
    CHECK_THROWS_AS(delete_columns(a, {8}), std::out_of_range);
    CHECK_THROWS_AS(delete_columns(a, {1, 1}), std::invalid_argument);

    // delete then append the same columns restores the shape
    const std::vector<std::size_t> idx{6, 1, 3};
    std::vector<std::vector<LinearForm>> cols;
    for (auto j : idx) cols.push_back(a.column(j));
    const auto back = append_columns(delete_columns(a, idx), cols);
    CHECK(back.rows() == a.rows());
    CHECK(back.cols() == a.cols());

    // a zero column is a trivial summand: h0 goes up by one
    const auto xyt = display("[ x y t ]");
    const auto padded = append_columns(xyt, {{LinearForm(Q, 3)}});
    CHECK(h0(padded, 0) == h0(xyt, 0) + 1);
    CHECK_THROWS_AS(append_columns(xyt, {{LinearForm(Q, 3), LinearForm(Q, 3)}}),
                    std::invalid_argument);
}

TEST_CASE("rewiring by hand reproduces the 13 x 23 block matrix") {
    KTypeRecipe r;
    r.k = 3;
    r.alphas = {1, 2, 1};
    const auto a = ktype_build(r);
    REQUIRE(a.rows() == 13);
    REQUIRE(a.cols() == 25);
    LinFormMatrix b = a;
    const FieldElement one = FieldElement::one(Q);
    // rows 12, 13 and columns 1, 14, 11, 20 (1-based, before deletion)
    b.add_term(11, 0, 2, one);
    b.add_term(11, 13, 2, one);
    b.add_term(12, 10, 2, one);
    b.add_term(12, 19, 2, one);
    b = delete_columns(b, {21, 24});
    CHECK(b == display(fixtures::kKTypeRewired));
}

TEST_CASE("json schema instance") {
    const Field f5 = Field::prime(5);
    LinFormMatrix a(f5, 2, 1, 1);
    a.set(0, 0, LinearForm::variable(f5, 3, 0));
    CHECK(serialize(a, Format::json) ==
          R"({"n":2,"c":1,"x":1,"field":"Fp:5","entries":[[[1,0,0]]]})");
}

TEST_CASE("round trips") {
    std::vector<LinFormMatrix> all{display(fixtures::kP2MinC3), display(fixtures::kKTypeRewired),
                                   display(fixtures::kPnMinN5C4, 5),
                                   display(fixtures::kP2MinC4, 2, Field::prime(3))};
    LinFormMatrix frac(Q, 3, 1, 2);
    frac.add_term(0, 0, 1, FieldElement(Q, mpq_class(-1, 2)));
    frac.add_term(0, 0, 3, FieldElement(Q, 7));
    frac.add_term(0, 1, 2, FieldElement(Q, mpq_class(5, 3)));
    all.push_back(frac);
    for (const auto& a : all) {
        CHECK(parse(serialize(a, Format::json)) == a);
        CHECK(parse_display(serialize(a, Format::display), a.n(), a.field()) == a);
    }
    CHECK(serialize(display("[ x y t ]"), Format::display) == "[ x y t ]");
    CHECK(serialize(frac, Format::display) == "[ -1/2*x_1+7*x_3 5/3*x_2 ]");
}

TEST_CASE("cas export") {
    const auto text = serialize(display("[ x -y 0 ]"), Format::cas_export);
    CHECK(text.find("QQ[x_0..x_2]") != std::string::npos);
    CHECK(text.find("A = matrix{{(1)*x_0, (-1)*x_1, 0}};") != std::string::npos);
}

TEST_CASE("malformed input reports a position") {
    auto position_of = [](const std::string& text) {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string("no error");
    };
    CHECK(position_of("{\"n\":2,") == "byte 8");
    CHECK(position_of("[1,2]") == "$");
    CHECK(position_of(R"({"n":2,"c":1,"x":1,"field":"Fp:4","entries":[[[1,0,0]]]})") == "$.field");
    CHECK(position_of(R"({"n":2,"c":1,"x":1,"field":"Q","entries":[[[1,0]]]})") ==
          "$.entries[0][0]");
    CHECK(position_of(R"({"n":2,"c":1,"x":1,"field":"Q","entries":[[[1,0,true]]]})") ==
          "$.entries[0][0][2]");
    CHECK(position_of(R"({"n":2,"c":2,"x":1,"field":"Q","entries":[[[1,0,0]]]})") ==
          "$.entries");
    CHECK(position_of(R"({"c":1,"x":1,"field":"Q","entries":[]})") == "$");
    // extra keys are ignored
    CHECK_NOTHROW(parse(R"({"n":2,"c":1,"x":1,"field":"Q","entries":[[[1,0,0]]],"family":{}})"));

    CHECK_THROWS_AS(parse_display("[ x y ", 2, Q), ParseError);
    CHECK_THROWS_AS(parse_display("[ x y ]\n[ x ]", 2, Q), ParseError);
    CHECK_THROWS_AS(parse_display("[ x w ]", 2, Q), ParseError);
    CHECK_THROWS_AS(parse_display("[ x_3 ]", 2, Q), ParseError);
}

TEST_CASE("lines reject dependent points") {
    CHECK_THROWS_AS(fixtures::line(Q, {1, 2, 3}, {2, 4, 6}), std::invalid_argument);
    CHECK_THROWS_AS(fixtures::line(Q, {0, 0, 0}, {1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(fixtures::line(Q, {1, 0, 0}, {0, 1}), std::invalid_argument);
    CHECK_NOTHROW(fixtures::line(Q, {1, 0, 0}, {0, 1, 0}));
}
