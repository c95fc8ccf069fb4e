#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include "slocc2mn/catalog.hpp"
#include "slocc2mn/state_io.hpp"

using namespace slocc;
using namespace slocc::io;
using nlohmann::json;

namespace {

GaussianRational gr(long num, long den = 1) { return {Rational(num, den)}; }

const char* kStateJson = R"({
  "m": 2, "n": 3,
  "gamma1": [["1", "0", "1/2"], ["0", "1", "0"]],
  "gamma2": [["0", "2+3i", "0"], ["1", "0", "-i"]]
})";

} // namespace

TEST_CASE("state documents parse to exact states") {
    auto doc = parse_state_document(kStateJson);
    CHECK(doc.m == 2);
    CHECK(doc.n == 3);
    auto state = to_state(doc);
    CHECK(state.gamma1.at(0, 2) == gr(1, 2));
    CHECK(state.gamma2.at(0, 1) == GaussianRational(Rational(2), Rational(3)));
    CHECK(state.gamma2.at(1, 2) == -GaussianRational::i());
}

TEST_CASE("state serialization round-trips") {
    auto state = to_state(parse_state_document(kStateJson));
    auto again = to_state(parse_state_document(state_to_json(state)));
    CHECK(again.gamma1 == state.gamma1);
    CHECK(again.gamma2 == state.gamma2);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_state_document("{"), ParseError);
    CHECK_THROWS_AS(parse_state_document(R"({"m": 2, "n": 2})"), ParseError);
    CHECK_THROWS_AS(
        to_state(parse_state_document(
            R"({"m": 2, "n": 2, "gamma1": [["1","0"],["0","1"]], "gamma2": [["1","0"]]})")),
        ParseError);
    CHECK_THROWS_AS(
        to_state(parse_state_document(
            R"({"m": 2, "n": 2, "gamma1": [["1.5","0"],["0","1"]], "gamma2": [["1","0"],["0","1"]]})")),
        ParseError);
    CHECK_THROWS_AS(
        to_state(parse_state_document(
            R"({"m": 1, "n": 2, "gamma1": [["1","0"]], "gamma2": [["1","0"]]})")),
        ParseError);
}

TEST_CASE("label JSON carries the full discrete and continuous data") {
    pencil::PencilState s = to_state(parse_state_document(R"({
        "m": 5, "n": 5,
        "gamma1": [["0","0","0","0","0"],["0","1","0","0","0"],["0","0","2","0","0"],
                   ["0","0","0","1","0"],["0","0","0","0","1"]],
        "gamma2": [["1","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],
                   ["0","0","0","0","0"],["0","0","0","0","0"]]
    })"));
    json j = json::parse(label_to_json(pencil::class_label(s)));
    CHECK(j["m"] == 5);
    CHECK(j["null_rows"] == 0);
    CHECK(j["b_rank_excess"] == 0);
    CHECK(j["params"] == json::array({"-1"}));
    CHECK(j["segre"].size() == 4);
    CHECK(j["b_index"].is_null());
}

TEST_CASE("catalog JSON lists labels with representatives where constructible") {
    json j = json::parse(catalog_to_json(3, 3));
    CHECK(j["count"] == 6);
    REQUIRE(j["labels"].size() == 6);
    int with_rep = 0;
    for (const auto& entry : j["labels"]) {
        if (!entry["representative"].is_null()) {
            ++with_rep;
            auto rep = to_state(parse_state_document(entry["representative"].dump()));
            CHECK(rep.m_dim == 3);
            CHECK(pencil::is_true_tripartite(rep));
        } else {
            CHECK(!entry["b_index"].is_null());
        }
    }
    CHECK(with_rep == 6); // every (3,3) label has j = 0
}

TEST_CASE("catalog JSON representatives classify back to the listed label") {
    json j = json::parse(catalog_to_json(4, 4));
    for (const auto& entry : j["labels"]) {
        if (entry["representative"].is_null()) continue;
        auto rep = to_state(parse_state_document(entry["representative"].dump()));
        json direct = json::parse(label_to_json(pencil::class_label(rep)));
        CHECK(direct["segre"] == entry["segre"]);
        CHECK(direct["null_rows"] == entry["null_rows"]);
        CHECK(direct["b_rank_excess"] == entry["b_rank_excess"]);
        CHECK(direct["params"] == entry["params"]);
    }
}
