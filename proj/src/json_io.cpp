#include "multitilde/json_io.hpp"

#include <cctype>

namespace multitilde {

namespace {

std::string join(const std::string& where, const std::string& field) {
    return where.empty() ? field : where + "." + field;
}

std::string at_index(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const Json& require_object_field(const Json& j, const std::string& where, const char* field) {
    if (!j.is_object()) {
        throw JsonError(where.empty() ? "<document>" : where, "expected a JSON object");
    }
    auto it = j.find(field);
    if (it == j.end()) {
        throw JsonError(join(where, field), "missing");
    }
    return *it;
}

int require_int(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) {
        throw JsonError(field, "expected an integer");
    }
    const auto v = j.get<long long>();
    if (v < -1'000'000 || v > 1'000'000) {
        throw JsonError(field, "integer out of range");
    }
    return static_cast<int>(v);
}

const Json& require_array(const Json& j, const std::string& field) {
    if (!j.is_array()) {
        throw JsonError(field, "expected an array");
    }
    return j;
}

std::vector<Pair> pairs_from_json(const Json& j, const std::string& field) {
    std::vector<Pair> pairs;
    const Json& arr = require_array(j, field);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string f = at_index(field, i);
        const Json& p = arr[i];
        if (!p.is_array() || p.size() != 2) {
            throw JsonError(f, "expected a pair [x, y]");
        }
        pairs.push_back({require_int(p[0], f + "[0]"), require_int(p[1], f + "[1]")});
    }
    return pairs;
}

Json pairs_to_json(std::span<const Pair> pairs) {
    Json out = Json::array();
    for (const Pair& p : pairs) {
        out.push_back(Json::array({p.x, p.y}));
    }
    return out;
}

} // namespace

Json to_json(const Multitilde& t) {
    Json j;
    j["arity"] = t.arity();
    j["pairs"] = pairs_to_json(t.pairs());
    return j;
}

Json to_json(const BoolVectorSet& e) {
    Json j;
    j["arity"] = e.arity();
    Json vectors = Json::array();
    for (const auto& v : e.vectors()) {
        Json bits = Json::array();
        for (int i = 1; i <= v.size(); ++i) {
            bits.push_back(v[i] ? 1 : 0);
        }
        vectors.push_back(std::move(bits));
    }
    j["vectors"] = std::move(vectors);
    return j;
}

Json to_json(const Relation& r) {
    Json j;
    j["size"] = r.size();
    j["pairs"] = pairs_to_json(r.pairs());
    return j;
}

Json to_json(const FiniteLanguage& l) {
    Json words = Json::array();
    for (const auto& w : l.words()) {
        words.push_back(w);
    }
    Json j;
    j["words"] = std::move(words);
    return j;
}

Json to_json(const CompiledTilde& c) {
    Json leaves = Json::array();
    for (const auto& leaf : c.leaves) {
        leaves.push_back(leaf ? Json(*leaf) : Json(nullptr));
    }
    Json j;
    j["tilde"] = to_json(c.tilde);
    j["leaves"] = std::move(leaves);
    return j;
}

Json to_json(const CountReport& r) {
    Json j;
    j["arity"] = r.arity;
    j["ptt_count"] = r.ptt_count;
    j["method"] = r.method;
    j["elapsed_seconds"] = r.elapsed.count();
    return j;
}

Multitilde multitilde_from_json(const Json& j, const std::string& where) {
    const int arity = require_int(require_object_field(j, where, "arity"), join(where, "arity"));
    if (arity < 1) {
        throw JsonError(join(where, "arity"), "must be at least 1");
    }
    const std::string field = join(where, "pairs");
    const auto pairs = pairs_from_json(require_object_field(j, where, "pairs"), field);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Pair& p = pairs[i];
        if (p.x < 1 || p.x > p.y || p.y > arity) {
            throw JsonError(at_index(field, i), "pair " + to_string(p) + " must satisfy 1 <= x <= y <= " +
                                                    std::to_string(arity));
        }
    }
    return Multitilde(arity, pairs);
}

BoolVectorSet bool_vector_set_from_json(const Json& j, const std::string& where) {
    const int arity = require_int(require_object_field(j, where, "arity"), join(where, "arity"));
    if (arity < 1) {
        throw JsonError(join(where, "arity"), "must be at least 1");
    }
    const std::string field = join(where, "vectors");
    const Json& arr = require_array(require_object_field(j, where, "vectors"), field);
    std::vector<BoolVector> vectors;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string f = at_index(field, i);
        const Json& v = arr[i];
        if (!v.is_array() || static_cast<int>(v.size()) != arity) {
            throw JsonError(f, "expected an array of " + std::to_string(arity) + " bits");
        }
        BoolVector bits = BoolVector::zeros(arity);
        for (std::size_t b = 0; b < v.size(); ++b) {
            const int bit = require_int(v[b], at_index(f, b));
            if (bit != 0 && bit != 1) {
                throw JsonError(at_index(f, b), "expected 0 or 1");
            }
            bits.set(static_cast<int>(b) + 1, bit == 1);
        }
        vectors.push_back(std::move(bits));
    }
    return BoolVectorSet(arity, std::move(vectors));
}

Relation relation_from_json(const Json& j, const std::string& where) {
    const int size = require_int(require_object_field(j, where, "size"), join(where, "size"));
    if (size < 1) {
        throw JsonError(join(where, "size"), "must be at least 1");
    }
    const std::string field = join(where, "pairs");
    const auto pairs = pairs_from_json(require_object_field(j, where, "pairs"), field);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Pair& p = pairs[i];
        if (p.x < 1 || p.x > p.y || p.y > size) {
            throw JsonError(at_index(field, i), "pair " + to_string(p) + " must satisfy 1 <= x <= y <= " +
                                                    std::to_string(size));
        }
    }
    try {
        return Relation(size, pairs);
    } catch (const InvalidValue& e) {
        throw JsonError(field, e.what());
    }
}

FiniteLanguage language_from_json(const Json& j, const std::string& where) {
    const std::string field = join(where, "words");
    const Json& arr = require_array(require_object_field(j, where, "words"), field);
    FiniteLanguage out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string f = at_index(field, i);
        const Json& w = arr[i];
        if (!w.is_array()) {
            throw JsonError(f, "expected an array of symbols");
        }
        Word word;
        for (std::size_t s = 0; s < w.size(); ++s) {
            if (!w[s].is_string()) {
                throw JsonError(at_index(f, s), "expected a symbol string");
            }
            auto symbol = w[s].get<std::string>();
            if (symbol.empty()) {
                throw JsonError(at_index(f, s), "symbols must be non-empty");
            }
            for (char c : symbol) {
                if (std::isspace(static_cast<unsigned char>(c))) {
                    throw JsonError(at_index(f, s), "symbols must not contain whitespace");
                }
            }
            word.push_back(std::move(symbol));
        }
        out.insert(std::move(word));
    }
    return out;
}

std::vector<FiniteLanguage> languages_from_json(const Json& j) {
    const Json* arr = &j;
    std::string field = "";
    if (j.is_object()) {
        arr = &require_object_field(j, "", "languages");
        field = "languages";
    }
    if (!arr->is_array()) {
        throw JsonError(field.empty() ? "<document>" : field, "expected an array of languages");
    }
    std::vector<FiniteLanguage> out;
    for (std::size_t i = 0; i < arr->size(); ++i) {
        out.push_back(language_from_json((*arr)[i], field.empty() ? at_index("", i) : at_index(field, i)));
    }
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonError("<document>", std::string("invalid JSON: ") + e.what());
    }
}

} // namespace multitilde
