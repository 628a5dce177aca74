#include <catch2/catch.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "scx/document.hpp"

using namespace scx;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(SCX_FIXTURE_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ScxParseError capture(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ScxParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ScxParseError(0, 0, "unreachable");
}

}  // namespace

TEST_CASE("triangle fixture parses", "[document]") {
    ComplexDocument doc = parse_document(fixture("triangle.scx"));
    CHECK(doc.ambient_dim == 2);
    CHECK(doc.vertices.size() == 3);
    CHECK(doc.simplices.size() == 7);
    CHECK(doc.vertices.at("a2") == Vector{R(2), R(3)});
    CHECK_FALSE(doc.values.has_value());

    SimplicialComplex k = doc.to_complex();
    CHECK(validate_definitional(k).ok);
}

TEST_CASE("values block parses scalars and vectors", "[document]") {
    ComplexDocument doc = parse_document(fixture("pl_triangle.scx"));
    REQUIRE(doc.values.has_value());
    CHECK(doc.values->at("a2") == Vector{R(2)});
    REQUIRE(doc.pl_map().has_value());

    ComplexDocument vec = parse_document(R"({
      "ambient_dim": 1,
      "simplices": [["p"], ["q"], ["p", "q"]],
      "values": {"p": ["1", "1/2"], "q": ["0", "-3"]},
      "vertices": {"p": ["0"], "q": ["1"]}
    })");
    CHECK(vec.values->at("p") == Vector{R(1), R(1, 2)});
}

TEST_CASE("strict parse failures carry positions", "[document]") {
    // zero denominator
    ScxParseError zero = capture(R"({
      "ambient_dim": 1,
      "simplices": [["p"]],
      "vertices": {"p": ["1/0"]}
    })");
    CHECK(std::string(zero.what()).find("zero denominator") != std::string::npos);
    CHECK(zero.line == 4);

    // empty simplex collection
    ScxParseError empty = capture(R"({
      "ambient_dim": 1,
      "simplices": [],
      "vertices": {"p": ["1"]}
    })");
    CHECK(std::string(empty.what()).find("at least one simplex") != std::string::npos);

    // ragged coordinates
    CHECK_THROWS_AS(parse_document(R"({
      "ambient_dim": 2,
      "simplices": [["p"]],
      "vertices": {"p": ["1"]}
    })"),
                    ScxParseError);

    // duplicate vertex label
    CHECK_THROWS_AS(parse_document(R"({
      "ambient_dim": 1,
      "simplices": [["p"]],
      "vertices": {"p": ["1"], "p": ["2"]}
    })"),
                    ScxParseError);

    // duplicate simplex
    CHECK_THROWS_AS(parse_document(R"({
      "ambient_dim": 1,
      "simplices": [["p"], ["p"]],
      "vertices": {"p": ["1"]}
    })"),
                    ScxParseError);

    // repeated label inside one simplex
    CHECK_THROWS_AS(parse_document(R"({
      "ambient_dim": 1,
      "simplices": [["p", "p"]],
      "vertices": {"p": ["1"]}
    })"),
                    ScxParseError);

    // unknown label in a simplex
    CHECK_THROWS_AS(parse_document(R"({
      "ambient_dim": 1,
      "simplices": [["q"]],
      "vertices": {"p": ["1"]}
    })"),
                    ScxParseError);

    // unknown top-level key
    CHECK_THROWS_AS(parse_document(R"({
      "ambient_dim": 1,
      "simplices": [["p"]],
      "vertices": {"p": ["1"]},
      "extra": 1
    })"),
                    ScxParseError);

    // floats are not rationals
    CHECK_THROWS_AS(parse_document(R"({
      "ambient_dim": 1,
      "simplices": [["p"]],
      "vertices": {"p": [1.5]}
    })"),
                    ScxParseError);

    // syntax errors
    CHECK_THROWS_AS(parse_document("{"), ScxParseError);
    CHECK_THROWS_AS(parse_document(""), ScxParseError);
    CHECK_THROWS_AS(parse_document("{}{}"), ScxParseError);
}

TEST_CASE("integers are accepted as rational literals", "[document]") {
    ComplexDocument doc = parse_document(R"({
      "ambient_dim": 2,
      "simplices": [["p"]],
      "vertices": {"p": [3, "-7/4"]}
    })");
    CHECK(doc.vertices.at("p") == Vector{R(3), R(-7, 4)});
}

TEST_CASE("serialize/parse round trip is the identity", "[document]") {
    for (const char* name : {"segment.scx", "triangle.scx", "tetrahedron.scx", "shared_edge.scx",
                             "shared_vertex.scx", "nonexample.scx", "star_link.scx",
                             "lambda_triangle.scx", "pl_triangle.scx"}) {
        ComplexDocument doc = parse_document(fixture(name));
        std::string canonical = serialize_document(doc);
        ComplexDocument again = parse_document(canonical);
        CHECK(again == doc);
        // the serializer is a fixed point on its own output
        CHECK(serialize_document(again) == canonical);
    }
}

TEST_CASE("fixtures are stored in canonical form", "[document]") {
    for (const char* name : {"segment.scx", "triangle.scx", "tetrahedron.scx", "shared_edge.scx",
                             "shared_vertex.scx", "nonexample.scx", "star_link.scx",
                             "lambda_triangle.scx", "pl_triangle.scx"}) {
        std::string raw = fixture(name);
        CHECK(serialize_document(parse_document(raw)) == raw);
    }
}

TEST_CASE("round trip on randomized documents", "[document][property]") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        ComplexDocument doc;
        doc.ambient_dim = 1 + rng() % 3;
        std::size_t nverts = 1 + rng() % 5;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < nverts; ++i) {
            std::string label = "v" + std::to_string(i);
            labels.push_back(label);
            std::vector<Rational> coords(doc.ambient_dim);
            for (auto& c : coords) c = R(num(rng), den(rng));
            doc.vertices.emplace(label, Vector(std::move(coords)));
        }
        SimplexSet set;
        for (const auto& l : labels) set.insert(AbstractSimplex{l});
        if (nverts >= 2) set.insert(AbstractSimplex{labels[0], labels[1]});
        doc.simplices.assign(set.begin(), set.end());
        if (trial % 2) {
            std::map<std::string, Vector> values;
            for (const auto& l : labels) values.emplace(l, Vector{R(num(rng), den(rng))});
            doc.values = std::move(values);
        }
        ComplexDocument back = parse_document(serialize_document(doc));
        CHECK(back == doc);
    }
}
