#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "holomat/complex_matrix.hpp"
#include "holomat/holo_function.hpp"
#include "holomat/serialization.hpp"

using namespace holomat;

namespace {

std::string temp_path(const std::string& stem) {
    const auto dir = std::filesystem::temp_directory_path();
    return (dir / ("holomat_test_" + stem + "_" + std::to_string(::getpid()) + ".json")).string();
}

StandardFormSpec sample_spec() {
    StandardFormSpec spec;
    spec.lambdas = {Complex(1.0 / 3.0, -0.25), Complex(0.0), Complex(2.0, 1e-13)};
    spec.S = ComplexMatrix::identity(2);
    spec.S(0, 1) = Complex(0.5, -1.5);
    spec.transpose = true;
    spec.radius = 2.5;
    return spec;
}

}  // namespace

TEST_SUITE("serialization") {

TEST_CASE("writer emits fixed bytes") {
    JsonWriter w;
    w.begin_object();
    w.key("a");
    w.value(1);
    w.key("b");
    w.begin_array();
    w.value(true);
    w.null();
    w.value("x\"y");
    w.end_array();
    w.key("z");
    w.value(Complex(1.5, -2.0));
    w.end_object();
    CHECK(w.str() == R"({"a":1,"b":[true,null,"x\"y"],"z":[1.5,-2]})");
}

TEST_CASE("doubles render with enough digits to round trip") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.5) == "-0.5");
    const double third = 1.0 / 3.0;
    CHECK(std::stod(format_double(third)) == third);
    CHECK(std::stod(format_double(0.1)) == 0.1);
    CHECK(std::stod(format_double(1e-300)) == 1e-300);
    CHECK(std::stod(format_double(1.7976931348623157e308)) == 1.7976931348623157e308);
}

TEST_CASE("matrix documents have a pinned layout") {
    ComplexMatrix m(1, 2);
    m(0, 0) = Complex(1.0);
    m(0, 1) = Complex(-0.5, 0.25);
    CHECK(matrix_to_json(m) == "{\"rows\":1,\"cols\":2,\"re\":[1,-0.5],\"im\":[0,0.25]}\n");
}

TEST_CASE("matrix round trip is exact") {
    ComplexMatrix m(2, 3);
    m(0, 0) = Complex(1.0 / 3.0, -1.0 / 7.0);
    m(0, 2) = Complex(1e-300, 2.5);
    m(1, 1) = Complex(-123456789.123456789, 1e17);
    const std::string text = matrix_to_json(m);
    const ComplexMatrix back = matrix_from_json(text);
    REQUIRE(back.rows() == 2);
    REQUIRE(back.cols() == 3);
    CHECK(distance(m, back) == 0.0);
    // Emission is a fixpoint: parse and re-emit yields the same bytes.
    CHECK(matrix_to_json(back) == text);
}

TEST_CASE("function documents round trip and stay byte stable") {
    const StandardFormSpec spec = sample_spec();
    const std::string text = standard_form_to_json(spec);
    CHECK(standard_form_to_json(spec) == text);

    const StandardFormSpec back = standard_form_from_json(text);
    REQUIRE(back.lambdas.size() == spec.lambdas.size());
    for (std::size_t i = 0; i < spec.lambdas.size(); ++i)
        CHECK(back.lambdas[i] == spec.lambdas[i]);
    CHECK(distance(back.S, spec.S) == 0.0);
    CHECK(back.transpose == spec.transpose);
    CHECK(back.radius == spec.radius);
    CHECK(standard_form_to_json(back) == text);
}

TEST_CASE("missing fields are reported by name") {
    try {
        matrix_from_json(R"({"rows":1,"cols":1,"re":[1]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.field == "im");
    }
}

TEST_CASE("type errors point at the offending field") {
    const std::string text = R"({"rows":"two","cols":1,"re":[1],"im":[0]})";
    try {
        matrix_from_json(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.field == "rows");
        CHECK(e.byte_offset == text.find("\"rows\""));
    }
    CHECK_THROWS_AS(matrix_from_json(R"({"rows":0,"cols":1,"re":[],"im":[]})"), ParseError);
    CHECK_THROWS_AS(matrix_from_json(R"({"rows":1,"cols":1,"re":[1,2],"im":[0]})"), ParseError);
    CHECK_THROWS_AS(matrix_from_json(R"({"rows":1,"cols":1,"re":["x"],"im":[0]})"), ParseError);
    CHECK_THROWS_AS(matrix_from_json("[1,2]"), ParseError);
}

TEST_CASE("syntax errors carry a byte offset") {
    try {
        matrix_from_json("{\"rows\": \n  oops");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.field == "(syntax)");
        CHECK(e.byte_offset > 0);
    }
}

TEST_CASE("function document validation rejects malformed fields") {
    const std::string good = standard_form_to_json(sample_spec());

    auto expect_field = [](const std::string& text, const std::string& field) {
        try {
            standard_form_from_json(text);
            FAIL_CHECK("expected ParseError for field " << field);
        } catch (const ParseError& e) {
            CHECK(e.field == field);
        }
    };

    expect_field(R"({"lambdas":[[1]],"S":{"rows":1,"cols":1,"re":[1],"im":[0]},"transpose":false,"radius":1})",
                 "lambdas");
    expect_field(R"({"lambdas":[],"S":5,"transpose":false,"radius":1})", "S");
    expect_field(R"({"lambdas":[],"S":{"rows":1,"cols":2,"re":[1,0],"im":[0,0]},"transpose":false,"radius":1})",
                 "S");
    expect_field(R"({"lambdas":[],"S":{"rows":1,"cols":1,"re":[1],"im":[0]},"transpose":1,"radius":1})",
                 "transpose");
    expect_field(R"({"lambdas":[],"S":{"rows":1,"cols":1,"re":[1],"im":[0]},"transpose":false,"radius":-2})",
                 "radius");
    // The untouched document still parses.
    CHECK_NOTHROW(standard_form_from_json(good));
}

TEST_CASE("file round trips and IO failures") {
    const std::string m_path = temp_path("matrix");
    const std::string f_path = temp_path("form");

    ComplexMatrix m(2, 2);
    m(1, 0) = Complex(0.125, -8.0);
    save_matrix(m_path, m);
    CHECK(distance(load_matrix(m_path), m) == 0.0);

    const StandardFormSpec spec = sample_spec();
    save_standard_form(f_path, spec);
    const StandardFormSpec back = load_standard_form(f_path);
    CHECK(standard_form_to_json(back) == standard_form_to_json(spec));

    std::filesystem::remove(m_path);
    std::filesystem::remove(f_path);

    CHECK_THROWS_AS(load_matrix("/nonexistent/holomat/matrix.json"), Error);
    CHECK_THROWS_AS(write_text_file("/nonexistent/holomat/out.json", "x"), Error);
}

}  // TEST_SUITE
