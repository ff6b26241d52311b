#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "multitilde/error.hpp"

#include "multitilde/bool_operad.hpp"
#include "multitilde/emtre.hpp"
#include "multitilde/enumeration.hpp"
#include "multitilde/lang.hpp"
#include "multitilde/poset.hpp"
#include "multitilde/tilde.hpp"

namespace multitilde {

using Json = nlohmann::ordered_json;

/// Malformed JSON input. `field` names the offending location, e.g. "pairs[2]".
class JsonError : public Error {
public:
    JsonError(const std::string& field, const std::string& message)
        : Error("field '" + field + "': " + message), field_(field) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Encoders produce the canonical documents:
//   Multitilde      {"arity": n, "pairs": [[x,y], ...]}           pairs sorted
//   BoolVectorSet   {"arity": n, "vectors": [[0|1, ...], ...]}    vectors sorted
//   Relation        {"size": n, "pairs": [[x,y], ...]}            diagonal included
//   FiniteLanguage  {"words": [["a","b"], [], ...]}               shortlex order
//   CompiledTilde   {"tilde": <Multitilde>, "leaves": ["a", null, ...]}
//   CountReport     {"arity", "ptt_count", "method", "elapsed_seconds"}
Json to_json(const Multitilde& t);
Json to_json(const BoolVectorSet& e);
Json to_json(const Relation& r);
Json to_json(const FiniteLanguage& l);
Json to_json(const CompiledTilde& c);
Json to_json(const CountReport& r);

// Decoders validate every field and throw JsonError naming the first bad one.
// `where` prefixes field names for nested documents.
Multitilde multitilde_from_json(const Json& j, const std::string& where = "");
BoolVectorSet bool_vector_set_from_json(const Json& j, const std::string& where = "");
Relation relation_from_json(const Json& j, const std::string& where = "");
FiniteLanguage language_from_json(const Json& j, const std::string& where = "");
/// Either a JSON array of FiniteLanguage documents or {"languages": [...]}.
std::vector<FiniteLanguage> languages_from_json(const Json& j);

/// Parses text, turning syntax errors into JsonError on field "<document>".
Json parse_json(const std::string& text);

} // namespace multitilde
