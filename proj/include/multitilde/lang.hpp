#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "multitilde/bool_operad.hpp"
#include "multitilde/tilde.hpp"

namespace multitilde {

/// A letter name. Any non-empty string without whitespace, so multi-character
/// names such as "a1" are allowed.
using Symbol = std::string;

/// A word is a sequence of symbols; the empty sequence is epsilon.
using Word = std::vector<Symbol>;

/// Length first, then lexicographic on symbols.
struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const;
};

/// Sentinel for "no length bound".
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// A finite set of words. The empty language and {epsilon} are distinct.
class FiniteLanguage {
public:
    using Words = std::set<Word, ShortlexLess>;

    FiniteLanguage() = default;
    explicit FiniteLanguage(Words words) : words_(std::move(words)) {}
    FiniteLanguage(std::initializer_list<Word> words) : words_(words) {}

    /// The empty language.
    static FiniteLanguage none() { return {}; }
    /// The language {epsilon}.
    static FiniteLanguage epsilon() { return FiniteLanguage{Word{}}; }
    /// The language {a} for a single letter.
    static FiniteLanguage letter(const Symbol& a) { return FiniteLanguage{Word{a}}; }
    /// Builds from strings of single-character letters, e.g. {"ab", ""}.
    static FiniteLanguage from_strings(std::initializer_list<std::string> words);

    const Words& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    bool contains(const Word& w) const { return words_.contains(w); }
    void insert(Word w) { words_.insert(std::move(w)); }
    void unite(const FiniteLanguage& other) { words_.insert(other.words_.begin(), other.words_.end()); }
    /// Length of the longest word; 0 for the empty language.
    std::size_t max_length() const noexcept;
    /// Words of length <= bound.
    FiniteLanguage truncated(std::size_t bound) const;
    bool is_subset_of(const FiniteLanguage& other) const;

    friend bool operator==(const FiniteLanguage&, const FiniteLanguage&) = default;

private:
    Words words_;
};

/// Concatenates symbols, separating multi-character symbols with '.'.
std::string to_string(const Word& w);
/// {w1, w2, ...} in shortlex order, with epsilon written as "ε".
std::string to_string(const FiniteLanguage& l);

FiniteLanguage unite(const FiniteLanguage& a, const FiniteLanguage& b);

/// {uv : u in l1, v in l2}, keeping only words of length <= max_len.
FiniteLanguage catenate(const FiniteLanguage& l1, const FiniteLanguage& l2, std::size_t max_len = kUnbounded);

/// Words of l* of length <= max_len, found by iterated catenation until no new
/// word appears.
FiniteLanguage star(const FiniteLanguage& l, std::size_t max_len);

/// E(L_1, ..., L_n): union over vectors e of L_1^{e_1} ... L_n^{e_n}, where
/// L^0 = {epsilon}. Throws ArityMismatch unless langs.size() == e.arity().
FiniteLanguage act_bool(const BoolVectorSet& e, std::span<const FiniteLanguage> langs,
                        std::size_t max_len = kUnbounded);

/// T(L_1, ..., L_n) = V(T)(L_1, ..., L_n).
FiniteLanguage act_tilde(const Multitilde& t, std::span<const FiniteLanguage> langs,
                         std::size_t max_len = kUnbounded);

/// P_k = {(i,k) : 1 <= i <= k}. Throws InvalidValue for k < 1.
Multitilde prefix_tilde(int k);
/// S_k = {(1,i) : 1 <= i <= k}.
Multitilde suffix_tilde(int k);
/// F_k = P_k u S_k.
Multitilde factor_tilde(int k);
/// {(i,i) : 1 <= i <= k}.
Multitilde subword_tilde(int k);

FiniteLanguage prefixes(const FiniteLanguage& l);
FiniteLanguage suffixes(const FiniteLanguage& l);
FiniteLanguage factors(const FiniteLanguage& l);

} // namespace multitilde
