#include "multitilde/lang.hpp"

#include <algorithm>

#include "multitilde/error.hpp"

namespace multitilde {

bool ShortlexLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

FiniteLanguage FiniteLanguage::from_strings(std::initializer_list<std::string> words) {
    FiniteLanguage out;
    for (const auto& s : words) {
        Word w;
        for (char c : s) {
            w.emplace_back(1, c);
        }
        out.insert(std::move(w));
    }
    return out;
}

std::size_t FiniteLanguage::max_length() const noexcept {
    return words_.empty() ? 0 : words_.rbegin()->size();
}

FiniteLanguage FiniteLanguage::truncated(std::size_t bound) const {
    Words out;
    for (const auto& w : words_) {
        if (w.size() > bound) {
            break;
        }
        out.insert(out.end(), w);
    }
    return FiniteLanguage(std::move(out));
}

bool FiniteLanguage::is_subset_of(const FiniteLanguage& other) const {
    return std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end(), ShortlexLess{});
}

std::string to_string(const Word& w) {
    if (w.empty()) {
        return "ε";
    }
    const bool single = std::all_of(w.begin(), w.end(), [](const Symbol& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single && i > 0) {
            out += '.';
        }
        out += w[i];
    }
    return out;
}

std::string to_string(const FiniteLanguage& l) {
    std::string out = "{";
    bool first = true;
    for (const auto& w : l.words()) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += to_string(w);
    }
    return out + "}";
}

FiniteLanguage unite(const FiniteLanguage& a, const FiniteLanguage& b) {
    FiniteLanguage out = a;
    out.unite(b);
    return out;
}

FiniteLanguage catenate(const FiniteLanguage& l1, const FiniteLanguage& l2, std::size_t max_len) {
    FiniteLanguage out;
    for (const auto& u : l1.words()) {
        if (u.size() > max_len) {
            break;
        }
        for (const auto& v : l2.words()) {
            if (u.size() + v.size() > max_len) {
                break;
            }
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.insert(std::move(w));
        }
    }
    return out;
}

FiniteLanguage star(const FiniteLanguage& l, std::size_t max_len) {
    FiniteLanguage result = FiniteLanguage::epsilon();
    FiniteLanguage frontier = result;
    while (!frontier.empty()) {
        FiniteLanguage next;
        const FiniteLanguage extended = catenate(frontier, l, max_len);
        for (const auto& w : extended.words()) {
            if (!result.contains(w)) {
                next.insert(w);
            }
        }
        result.unite(next);
        frontier = std::move(next);
    }
    return result;
}

FiniteLanguage act_bool(const BoolVectorSet& e, std::span<const FiniteLanguage> langs, std::size_t max_len) {
    if (static_cast<int>(langs.size()) != e.arity()) {
        throw ArityMismatch("an arity-" + std::to_string(e.arity()) + " operator acts on " +
                            std::to_string(e.arity()) + " languages, got " + std::to_string(langs.size()));
    }
    FiniteLanguage out;
    for (const auto& v : e.vectors()) {
        FiniteLanguage term = FiniteLanguage::epsilon();
        for (int i = 1; i <= e.arity() && !term.empty(); ++i) {
            if (v[i]) {
                term = catenate(term, langs[static_cast<std::size_t>(i - 1)], max_len);
            }
        }
        out.unite(term);
    }
    return out;
}

FiniteLanguage act_tilde(const Multitilde& t, std::span<const FiniteLanguage> langs, std::size_t max_len) {
    if (static_cast<int>(langs.size()) != t.arity()) {
        throw ArityMismatch("an arity-" + std::to_string(t.arity()) + " multitilde acts on " +
                            std::to_string(t.arity()) + " languages, got " + std::to_string(langs.size()));
    }
    return act_bool(vectorize(t), langs, max_len);
}

namespace {

void require_positive(int k, const char* what) {
    if (k < 1) {
        throw InvalidValue(std::string(what) + " needs k >= 1, got " + std::to_string(k));
    }
}

} // namespace

Multitilde prefix_tilde(int k) {
    require_positive(k, "prefix_tilde");
    std::vector<Pair> pairs;
    for (int i = 1; i <= k; ++i) {
        pairs.push_back({i, k});
    }
    return Multitilde(k, std::move(pairs));
}

Multitilde suffix_tilde(int k) {
    require_positive(k, "suffix_tilde");
    std::vector<Pair> pairs;
    for (int i = 1; i <= k; ++i) {
        pairs.push_back({1, i});
    }
    return Multitilde(k, std::move(pairs));
}

Multitilde factor_tilde(int k) {
    require_positive(k, "factor_tilde");
    return union_tilde(prefix_tilde(k), suffix_tilde(k));
}

Multitilde subword_tilde(int k) {
    require_positive(k, "subword_tilde");
    std::vector<Pair> pairs;
    for (int i = 1; i <= k; ++i) {
        pairs.push_back({i, i});
    }
    return Multitilde(k, std::move(pairs));
}

FiniteLanguage prefixes(const FiniteLanguage& l) {
    FiniteLanguage out;
    for (const auto& w : l.words()) {
        for (std::size_t n = 0; n <= w.size(); ++n) {
            out.insert(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n)));
        }
    }
    return out;
}

FiniteLanguage suffixes(const FiniteLanguage& l) {
    FiniteLanguage out;
    for (const auto& w : l.words()) {
        for (std::size_t n = 0; n <= w.size(); ++n) {
            out.insert(Word(w.begin() + static_cast<std::ptrdiff_t>(n), w.end()));
        }
    }
    return out;
}

FiniteLanguage factors(const FiniteLanguage& l) {
    FiniteLanguage out;
    for (const auto& w : l.words()) {
        for (std::size_t i = 0; i <= w.size(); ++i) {
            for (std::size_t j = i; j <= w.size(); ++j) {
                out.insert(Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j)));
            }
        }
    }
    return out;
}

} // namespace multitilde
