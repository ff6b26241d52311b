#include <doctest.h>

#include "multitilde/json_io.hpp"

using namespace multitilde;

namespace {

std::string field_of(const auto& decode, const std::string& text) {
    try {
        decode(Json::parse(text));
    } catch (const JsonError& e) {
        return e.field();
    }
    return "<no error>";
}

} // namespace

TEST_CASE("round trips") {
    const Multitilde t(3, {{1, 2}, {3, 3}});
    CHECK(to_json(t).dump() == R"({"arity":3,"pairs":[[1,2],[3,3]]})");
    CHECK(multitilde_from_json(to_json(t)) == t);

    const BoolVectorSet e(2, {{1, 0}, {0, 0}});
    CHECK(to_json(e).dump() == R"({"arity":2,"vectors":[[0,0],[1,0]]})");
    CHECK(bool_vector_set_from_json(to_json(e)) == e);

    const Relation r(2, {{1, 1}, {2, 2}, {1, 2}});
    CHECK(to_json(r).dump() == R"({"size":2,"pairs":[[1,1],[1,2],[2,2]]})");
    CHECK(relation_from_json(to_json(r)) == r);

    const FiniteLanguage l{Word{}, Word{"a1", "b"}};
    CHECK(to_json(l).dump() == R"({"words":[[],["a1","b"]]})");
    CHECK(language_from_json(to_json(l)) == l);

    const CountReport c{3, 40, "recursive-extension", std::chrono::duration<double>(0.5)};
    CHECK(to_json(c).dump() == R"({"arity":3,"ptt_count":40,"method":"recursive-extension","elapsed_seconds":0.5})");
}

TEST_CASE("decoders name the offending field") {
    const auto tilde = [](const Json& j) { return multitilde_from_json(j); };
    CHECK(field_of(tilde, R"([1])") == "<document>");
    CHECK(field_of(tilde, R"({"pairs":[]})") == "arity");
    CHECK(field_of(tilde, R"({"arity":0,"pairs":[]})") == "arity");
    CHECK(field_of(tilde, R"({"arity":"2","pairs":[]})") == "arity");
    CHECK(field_of(tilde, R"({"arity":2})") == "pairs");
    CHECK(field_of(tilde, R"({"arity":2,"pairs":{}})") == "pairs");
    CHECK(field_of(tilde, R"({"arity":2,"pairs":[[1,1],[1]]})") == "pairs[1]");
    CHECK(field_of(tilde, R"({"arity":2,"pairs":[[1,"2"]]})") == "pairs[0][1]");
    CHECK(field_of(tilde, R"({"arity":2,"pairs":[[1,3]]})") == "pairs[0]");
    CHECK(field_of([](const Json& j) { return multitilde_from_json(j, "t1"); }, R"({"arity":2,"pairs":[[2,1]]})") ==
          "t1.pairs[0]");

    const auto vectors = [](const Json& j) { return bool_vector_set_from_json(j); };
    CHECK(field_of(vectors, R"({"arity":2,"vectors":[[1,0,1]]})") == "vectors[0]");
    CHECK(field_of(vectors, R"({"arity":2,"vectors":[[1,2]]})") == "vectors[0][1]");

    const auto relation = [](const Json& j) { return relation_from_json(j); };
    CHECK(field_of(relation, R"({"size":2,"pairs":[[1,1]]})") == "pairs");
    CHECK(field_of(relation, R"({"size":2,"pairs":[[1,1],[2,2],[2,1]]})") == "pairs[2]");

    const auto language = [](const Json& j) { return language_from_json(j); };
    CHECK(field_of(language, R"({"words":[["a"],"b"]})") == "words[1]");
    CHECK(field_of(language, R"({"words":[["a",""]]})") == "words[0][1]");
    CHECK(field_of(language, R"({"words":[["a b"]]})") == "words[0][0]");

    const auto languages = [](const Json& j) { return languages_from_json(j); };
    CHECK(field_of(languages, R"({"languages":[{"words":[]},{"nope":[]}]})") == "languages[1].words");
    CHECK(field_of(languages, R"(3)") == "<document>");

    CHECK_THROWS_AS(parse_json("{"), JsonError);
    CHECK(parse_json(R"({"a":1})")["a"] == 1);
}
