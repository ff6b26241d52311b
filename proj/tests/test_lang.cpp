#include <doctest.h>

#include <random>

#include "multitilde/bool_operad.hpp"
#include "multitilde/error.hpp"
#include "multitilde/lang.hpp"
#include "oracles.hpp"

using namespace multitilde;

namespace {

FiniteLanguage L(std::initializer_list<std::string> words) { return FiniteLanguage::from_strings(words); }

const FiniteLanguage kEmpty = FiniteLanguage::none();
const FiniteLanguage kEps = FiniteLanguage::epsilon();

FiniteLanguage letter(const char* a) { return FiniteLanguage::letter(a); }

std::vector<oracle::Lang> to_langs(const std::vector<FiniteLanguage>& ls) {
    std::vector<oracle::Lang> out;
    for (const auto& l : ls) {
        out.push_back(oracle::to_lang(l));
    }
    return out;
}

} // namespace

TEST_CASE("languages distinguish empty from epsilon") {
    CHECK(kEmpty.empty());
    CHECK_FALSE(kEps.empty());
    CHECK(kEmpty != kEps);
    CHECK(kEps.contains(Word{}));
    CHECK(L({"ab", ""}).size() == 2);
    CHECK(L({"ab", "b", "abc"}).max_length() == 3);
    CHECK(kEmpty.max_length() == 0);
    CHECK(L({"ab", "b", "abc"}).truncated(2) == L({"ab", "b"}));
    CHECK(L({"a"}).is_subset_of(L({"a", "b"})));
    CHECK_FALSE(L({"c"}).is_subset_of(L({"a", "b"})));
}

TEST_CASE("shortlex order and printing") {
    const FiniteLanguage l = L({"ba", "b", "", "ab", "a"});
    std::vector<Word> order(l.words().begin(), l.words().end());
    CHECK(order == std::vector<Word>{{}, {"a"}, {"b"}, {"a", "b"}, {"b", "a"}});
    CHECK(to_string(Word{}) == "ε");
    CHECK(to_string(Word{"a", "b"}) == "ab");
    CHECK(to_string(L({"", "a"})) == "{ε, a}");
}

TEST_CASE("multi-character symbols") {
    const FiniteLanguage a1 = FiniteLanguage::letter("a1");
    const FiniteLanguage a2 = FiniteLanguage::letter("a2");
    const auto cat = catenate(a1, a2);
    CHECK(cat.contains(Word{"a1", "a2"}));
    CHECK(cat.max_length() == 2);
}

TEST_CASE("catenate") {
    CHECK(catenate(letter("a"), letter("b")) == L({"ab"}));
    CHECK(catenate(L({"a", "b"}), kEmpty) == kEmpty);
    CHECK(catenate(kEmpty, L({"a"})) == kEmpty);
    CHECK(catenate(L({"", "a"}), L({"", "b"})) == L({"", "a", "b", "ab"}));
    CHECK(catenate(L({"", "a"}), L({"", "b"}), 1) == L({"", "a", "b"}));
    CHECK(catenate(L({"aa"}), L({"b"}), 2) == kEmpty);
    CHECK(unite(L({"a"}), L({"b"})) == L({"a", "b"}));
}

TEST_CASE("bounded star") {
    CHECK(star(letter("a"), 3) == L({"", "a", "aa", "aaa"}));
    CHECK(star(kEmpty, 5) == kEps);
    CHECK(star(kEps, 5) == kEps);
    CHECK(star(L({"ab", "c"}), 3) == L({"", "c", "cc", "ab", "ccc", "abc", "cab"}));
    CHECK(star(letter("a"), 0) == kEps);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        FiniteLanguage l;
        const int words = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int i = 0; i < words; ++i) {
            Word w;
            const int len = std::uniform_int_distribution<int>(0, 3)(rng);
            for (int j = 0; j < len; ++j) {
                w.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? "a" : "b");
            }
            l.insert(w);
        }
        const std::size_t bound = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
        CHECK(oracle::to_lang(star(l, bound)) == oracle::kleene(oracle::to_lang(l), bound));
    }
}

TEST_CASE("act_bool") {
    const std::vector<FiniteLanguage> ab{letter("a"), letter("b")};
    CHECK(act_bool(BoolVectorSet(2, {{1, 1}, {0, 0}}), ab) == L({"ab", ""}));
    CHECK(act_bool(BoolVectorSet(2), ab) == kEmpty);
    const std::vector<FiniteLanguage> abc{letter("a"), letter("b"), letter("c")};
    const Multitilde f3(3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
    CHECK(act_bool(vectorize(f3), abc) == L({"abc", "bc", "c", "", "a", "ab", "b"}));
    CHECK_THROWS_AS(act_bool(BoolVectorSet(3), ab), ArityMismatch);
}

TEST_CASE("act_tilde") {
    const std::vector<FiniteLanguage> a_empty_b{letter("a"), kEmpty, letter("b")};
    CHECK(act_tilde(Multitilde(3, {{1, 2}, {2, 3}}), a_empty_b) == L({"a", "b"}));
    const std::vector<FiniteLanguage> ab{letter("a"), letter("b")};
    CHECK(act_tilde(Multitilde(2), ab) == L({"ab"}));
    const std::vector<FiniteLanguage> none{kEmpty};
    CHECK(act_tilde(Multitilde(1, {{1, 1}}), none) == kEps);
    CHECK(act_tilde(subword_tilde(2), ab) == L({"ab", "a", "b", ""}));
    const std::vector<FiniteLanguage> a{letter("a")};
    CHECK(act_tilde(subword_tilde(1), a) == L({"a", ""}));
    CHECK(act_tilde(Multitilde(2, {{1, 2}}), ab, 1) == L({""}));
    CHECK_THROWS_AS(act_tilde(Multitilde(1), ab), ArityMismatch);
}

TEST_CASE("act_tilde agrees with the definition on random inputs") {
    std::mt19937_64 rng(31);
    const std::vector<FiniteLanguage> pool{kEmpty, kEps, letter("a"), letter("b"), L({"", "ab"}), L({"a", "bb"})};
    for (int trial = 0; trial < 1500; ++trial) {
        const Multitilde t = oracle::random_tilde_up_to(rng, 5);
        std::vector<FiniteLanguage> ls;
        for (int i = 0; i < t.arity(); ++i) {
            ls.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
        }
        CHECK(oracle::to_lang(act_tilde(t, ls)) == oracle::act(t, to_langs(ls)));
    }
}

TEST_CASE("prefix, suffix, factor and subword tildes") {
    CHECK(prefix_tilde(3) == Multitilde(3, {{1, 3}, {2, 3}, {3, 3}}));
    CHECK(suffix_tilde(3) == Multitilde(3, {{1, 1}, {1, 2}, {1, 3}}));
    CHECK(factor_tilde(3) == Multitilde(3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}}));
    CHECK(subword_tilde(3) == Multitilde(3, {{1, 1}, {2, 2}, {3, 3}}));
    CHECK(prefix_tilde(1) == Multitilde(1, {{1, 1}}));
    CHECK(suffix_tilde(1) == prefix_tilde(1));
    CHECK_THROWS_AS(prefix_tilde(0), InvalidValue);
    CHECK_THROWS_AS(suffix_tilde(0), InvalidValue);
    CHECK_THROWS_AS(factor_tilde(-1), InvalidValue);
    CHECK_THROWS_AS(subword_tilde(0), InvalidValue);
    const std::vector<FiniteLanguage> abc{letter("a"), letter("b"), letter("c")};
    CHECK(act_tilde(prefix_tilde(3), abc) == L({"", "a", "ab", "abc"}));
    CHECK(act_tilde(suffix_tilde(3), abc) == L({"", "c", "bc", "abc"}));
}

TEST_CASE("prefixes, suffixes, factors") {
    CHECK(prefixes(L({"ab", "cd"})) == L({"", "a", "ab", "c", "cd"}));
    CHECK(prefixes(kEmpty) == kEmpty);
    CHECK(suffixes(L({"ab"})) == L({"", "b", "ab"}));
    CHECK(factors(L({"ab"})) == L({"", "a", "b", "ab"}));
    CHECK(factors(L({"abc"})) == L({"", "a", "b", "c", "ab", "bc", "abc"}));
}

TEST_CASE("module law on languages from {0, 1, a, b}") {
    const std::vector<FiniteLanguage> pool{kEmpty, kEps, letter("a"), letter("b")};
    const auto small = oracle::all_tildes_up_to(2);
    for (const auto& t1 : small) {
        for (const auto& t2 : small) {
            const int m = t1.arity();
            const int n = t2.arity();
            const int total = m + n - 1;
            int tuples = 1;
            for (int i = 0; i < total; ++i) {
                tuples *= 4;
            }
            for (int code = 0; code < tuples; ++code) {
                std::vector<FiniteLanguage> ls;
                for (int c = code, i = 0; i < total; ++i, c /= 4) {
                    ls.push_back(pool[static_cast<std::size_t>(c % 4)]);
                }
                for (int i = 1; i <= m; ++i) {
                    const std::vector<FiniteLanguage> inner(ls.begin() + (i - 1), ls.begin() + (i - 1 + n));
                    std::vector<FiniteLanguage> outer(ls.begin(), ls.begin() + (i - 1));
                    outer.push_back(act_tilde(t2, inner));
                    outer.insert(outer.end(), ls.begin() + (i - 1 + n), ls.end());
                    CHECK(act_tilde(t1, outer) == act_tilde(compose_partial(t1, i, t2), ls));
                }
            }
        }
    }
}

namespace {

struct Regime {
    Multitilde (*tilde)(int);
    oracle::Lang (*close)(const oracle::Lang&);
};

const Regime kRegimes[] = {
    {prefix_tilde, oracle::prefixes},
    {suffix_tilde, oracle::suffixes},
    {factor_tilde, oracle::factors},
};

} // namespace

TEST_CASE("prefix/suffix/factor closure is an equality on letter tuples") {
    const std::vector<FiniteLanguage> letters{letter("a"), letter("b"), letter("c")};
    for (const auto& t : oracle::all_tildes_up_to(3)) {
        const int k = t.arity();
        int tuples = 1;
        for (int i = 0; i < k; ++i) {
            tuples *= 3;
        }
        for (int code = 0; code < tuples; ++code) {
            std::vector<FiniteLanguage> ls;
            for (int c = code, i = 0; i < k; ++i, c /= 3) {
                ls.push_back(letters[static_cast<std::size_t>(c % 3)]);
            }
            const auto base = oracle::to_lang(act_tilde(t, ls));
            for (const auto& r : kRegimes) {
                CHECK(oracle::to_lang(act_tilde(union_tilde(t, r.tilde(k)), ls)) == r.close(base));
            }
        }
    }
}

TEST_CASE("prefix/suffix/factor closure contains the closed language on letter-or-empty tuples") {
    const std::vector<FiniteLanguage> leaves{letter("a"), letter("b"), kEmpty};
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 3000; ++trial) {
        const Multitilde t = oracle::random_tilde_up_to(rng, 6);
        const int k = t.arity();
        std::vector<FiniteLanguage> ls;
        for (int i = 0; i < k; ++i) {
            ls.push_back(leaves[std::uniform_int_distribution<std::size_t>(0, 2)(rng)]);
        }
        const auto base = oracle::to_lang(act_tilde(t, ls));
        for (const auto& r : kRegimes) {
            const auto closed = r.close(base);
            const auto got = oracle::to_lang(act_tilde(union_tilde(t, r.tilde(k)), ls));
            CHECK(std::includes(got.begin(), got.end(), closed.begin(), closed.end()));
        }
    }
}

TEST_CASE("prefix witnesses") {
    const std::vector<FiniteLanguage> abc0{letter("a"), letter("b"), letter("c"), kEmpty};
    CHECK(act_tilde(Multitilde(4), abc0) == kEmpty);
    CHECK(act_tilde(union_tilde(Multitilde(4), prefix_tilde(4)), abc0) == L({"", "a", "ab", "abc"}));

    const std::vector<FiniteLanguage> ab0cd{letter("a"), letter("b"), kEmpty, letter("c"), letter("d")};
    const Multitilde t(5, {{1, 3}, {3, 5}});
    CHECK(act_tilde(t, ab0cd) == L({"ab", "cd"}));
    CHECK(act_tilde(union_tilde(t, prefix_tilde(5)), ab0cd) == prefixes(L({"ab", "cd"})));
    CHECK(prefixes(L({"ab", "cd"})) == L({"", "a", "ab", "c", "cd"}));
}
