#include "multitilde/worked_examples.hpp"

#include <functional>
#include <set>

#include "multitilde/bool_operad.hpp"
#include "multitilde/emtre.hpp"
#include "multitilde/enumeration.hpp"
#include "multitilde/error.hpp"
#include "multitilde/lang.hpp"
#include "multitilde/poset.hpp"
#include "multitilde/tilde.hpp"

namespace multitilde {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

template <typename T>
std::string expect_eq(const T& got, const T& want) {
    using multitilde::to_string;
    if (got == want) {
        return {};
    }
    return "got " + to_string(got) + ", want " + to_string(want);
}

std::string expect_true(bool ok, const std::string& what) { return ok ? std::string{} : what; }

FiniteLanguage L(std::initializer_list<std::string> words) { return FiniteLanguage::from_strings(words); }

FiniteLanguage letter(const char* a) { return FiniteLanguage::letter(a); }

const Multitilde& f3() {
    static const Multitilde t(3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
    return t;
}

std::vector<Multitilde> all_tildes(int arity) {
    std::vector<Pair> universe;
    for (int x = 1; x <= arity; ++x) {
        for (int y = x; y <= arity; ++y) {
            universe.push_back({x, y});
        }
    }
    std::vector<Multitilde> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << universe.size()); ++m) {
        std::vector<Pair> pairs;
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if ((m >> i) & 1U) {
                pairs.push_back(universe[i]);
            }
        }
        out.emplace_back(arity, std::move(pairs));
    }
    return out;
}

std::vector<std::pair<std::string, Check>> examples() {
    std::vector<std::pair<std::string, Check>> ex;

    ex.emplace_back("dec commutes", [] {
        const Pair a = dec(5, dec(2, {1, 1}));
        const Pair b = dec(2, dec(5, {1, 1}));
        return expect_true(a == Pair{8, 8} && b == a, "dec(5, dec(2,(1,1))) = " + to_string(a));
    });
    ex.emplace_back("shift(5,6) on (1,3)", [] { return expect_eq(shift(5, 6, {1, 3}), Pair{1, 3}); });
    ex.emplace_back("shift(5,6) on (3,7)", [] { return expect_eq(shift(5, 6, {3, 7}), Pair{3, 12}); });
    ex.emplace_back("shift(5,6) on (7,8)", [] { return expect_eq(shift(5, 6, {7, 8}), Pair{12, 13}); });
    ex.emplace_back("shift(5,6) on a set", [] {
        const std::vector<Pair> in{{1, 3}, {3, 7}, {7, 8}};
        const std::vector<Pair> want{{1, 3}, {3, 12}, {12, 13}};
        return expect_true(shift_set(5, 6, in) == want, "shift_set mismatch");
    });
    ex.emplace_back("sequential composition commutes (arity <= 2 exhaustive)", [] {
        std::vector<Multitilde> small;
        for (int a = 1; a <= 2; ++a) {
            for (auto& t : all_tildes(a)) {
                small.push_back(t);
            }
        }
        for (const auto& t1 : all_tildes(2)) {
            for (const auto& t2 : small) {
                for (const auto& t3 : small) {
                    const int p = t3.arity();
                    if (compose_partial(compose_partial(t1, 2, t2), 1, t3) !=
                        compose_partial(compose_partial(t1, 1, t3), 2 + p - 1, t2)) {
                        return to_string(t1) + " " + to_string(t2) + " " + to_string(t3);
                    }
                }
            }
        }
        return std::string{};
    });
    ex.emplace_back("identity is the empty arity-1 tilde", [] { return expect_eq(identity(), Multitilde(1)); });
    ex.emplace_back("V(identity) = {[1]}", [] { return expect_eq(vectorize(identity()), bool_identity()); });

    ex.emplace_back("free subsets of F3", [] {
        const std::vector<FreeSubset> want{{},
                                           {{1, 1}},
                                           {{1, 1}, {2, 3}},
                                           {{1, 1}, {3, 3}},
                                           {{1, 2}},
                                           {{1, 2}, {3, 3}},
                                           {{1, 3}},
                                           {{2, 3}},
                                           {{3, 3}}};
        return expect_true(free_subsets(f3()) == want, "free subset list differs");
    });
    ex.emplace_back("V of {(1,2),(2,3),(3,4),(4,4)}", [] {
        const BoolVectorSet want(4, {{0, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 1, 1},
                                     {1, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}});
        return expect_eq(vectorize(Multitilde(4, {{1, 2}, {2, 3}, {3, 4}, {4, 4}})), want);
    });
    ex.emplace_back("V of F3", [] {
        const BoolVectorSet want(3, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}, {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
        return expect_eq(vectorize(f3()), want);
    });
    ex.emplace_back("vector-set identity on the left", [] {
        const BoolVectorSet f(2, {{1, 0}, {0, 0}});
        return expect_eq(bool_compose_partial(bool_identity(), 1, f), f);
    });
    ex.emplace_back("vector-set identity on the right", [] {
        const BoolVectorSet e(3, {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
        for (int k = 1; k <= 3; ++k) {
            if (bool_compose_partial(e, k, bool_identity()) != e) {
                return "slot " + std::to_string(k);
            }
        }
        return std::string{};
    });

    ex.emplace_back("{[1,1],[0,0]} on (a, b)", [] {
        const std::vector<FiniteLanguage> ls{letter("a"), letter("b")};
        return expect_eq(act_bool(BoolVectorSet(2, {{1, 1}, {0, 0}}), ls), L({"ab", ""}));
    });
    ex.emplace_back("F3 on (a, b, c)", [] {
        const std::vector<FiniteLanguage> ls{letter("a"), letter("b"), letter("c")};
        return expect_eq(act_bool(vectorize(f3()), ls), L({"abc", "bc", "c", "", "a", "ab", "b"}));
    });
    ex.emplace_back("union as a tilde", [] {
        const std::vector<FiniteLanguage> ls{letter("a"), FiniteLanguage::none(), letter("b")};
        return expect_eq(act_tilde(Multitilde(3, {{1, 2}, {2, 3}}), ls), L({"a", "b"}));
    });
    ex.emplace_back("catenation as a tilde", [] {
        const std::vector<FiniteLanguage> ls{letter("a"), letter("b")};
        return expect_eq(act_tilde(Multitilde(2), ls), L({"ab"}));
    });
    ex.emplace_back("epsilon as a tilde", [] {
        const std::vector<FiniteLanguage> ls{FiniteLanguage::none()};
        return expect_eq(act_tilde(Multitilde(1, {{1, 1}}), ls), FiniteLanguage::epsilon());
    });
    ex.emplace_back("F3 = P3 u S3", [] { return expect_eq(factor_tilde(3), f3()); });
    ex.emplace_back("subwords of ab", [] {
        const std::vector<FiniteLanguage> ls{letter("a"), letter("b")};
        return expect_eq(act_tilde(subword_tilde(2), ls), L({"ab", "a", "b", ""}));
    });
    ex.emplace_back("Pref({ab, cd})", [] {
        return expect_eq(prefixes(L({"ab", "cd"})), L({"", "a", "ab", "c", "cd"}));
    });
    ex.emplace_back("prefix inclusion can be strict", [] {
        const std::vector<FiniteLanguage> ls{letter("a"), letter("b"), letter("c"), FiniteLanguage::none()};
        const Multitilde empty4(4);
        if (!act_tilde(empty4, ls).empty()) {
            return std::string("empty tilde should give the empty language");
        }
        return expect_eq(act_tilde(union_tilde(empty4, prefix_tilde(4)), ls), L({"", "a", "ab", "abc"}));
    });
    ex.emplace_back("prefix equality without nonempty leaves", [] {
        const std::vector<FiniteLanguage> ls{letter("a"), letter("b"), FiniteLanguage::none(), letter("c"),
                                             letter("d")};
        const Multitilde t(5, {{1, 3}, {3, 5}});
        const auto base = act_tilde(t, ls);
        if (base != L({"ab", "cd"})) {
            return "base language " + to_string(base);
        }
        return expect_eq(act_tilde(union_tilde(t, prefix_tilde(5)), ls), prefixes(base));
    });

    ex.emplace_back("phi is a bijection (arity <= 4)", [] {
        for (int a = 1; a <= 4; ++a) {
            for (const auto& t : all_tildes(a)) {
                if (phi_inv(phi(t)) != t) {
                    return to_string(t);
                }
            }
        }
        return std::string{};
    });
    ex.emplace_back("phi carries composition to diamond (arity <= 3)", [] {
        std::vector<Multitilde> small;
        for (int a = 1; a <= 3; ++a) {
            for (auto& t : all_tildes(a)) {
                small.push_back(t);
            }
        }
        for (const auto& t1 : small) {
            for (const auto& t2 : small) {
                for (int k = 1; k <= t1.arity(); ++k) {
                    if (phi(compose_partial(t1, k, t2)) != diamond(phi(t1), k, phi(t2))) {
                        return to_string(t1) + " o_" + std::to_string(k) + " " + to_string(t2);
                    }
                }
            }
        }
        return std::string{};
    });
    ex.emplace_back("closure commutes with diamond (size <= 4)", [] {
        std::vector<Relation> rels;
        for (int a = 1; a <= 3; ++a) {
            for (const auto& t : all_tildes(a)) {
                rels.push_back(phi(t));
            }
        }
        for (const auto& r1 : rels) {
            for (const auto& r2 : rels) {
                for (int k = 1; k <= r1.size() - 1; ++k) {
                    const auto lhs =
                        transitive_closure(diamond(transitive_closure(r1), k, transitive_closure(r2)));
                    if (lhs != transitive_closure(diamond(r1, k, r2))) {
                        return to_string(r1) + " <>_" + std::to_string(k) + " " + to_string(r2);
                    }
                }
            }
        }
        return std::string{};
    });
    ex.emplace_back("{(1,1)} and {(2,2)} are inequivalent", [] {
        const Multitilde a(2, {{1, 1}});
        const Multitilde b(2, {{2, 2}});
        const std::vector<FiniteLanguage> ls{letter("a"), letter("b")};
        if (equivalent(a, b)) {
            return std::string("reported equivalent");
        }
        if (act_tilde(a, ls) != L({"ab", "b"}) || act_tilde(b, ls) != L({"ab", "a"})) {
            return std::string("actions differ from the table");
        }
        return std::string{};
    });

    ex.emplace_back("PTTs of arity 1", [] {
        std::vector<Multitilde> got;
        PttEnumerator e(1);
        while (auto t = e.next()) {
            got.push_back(*t);
        }
        return expect_true(got == std::vector<Multitilde>{Multitilde(1), Multitilde(1, {{1, 1}})},
                           "unexpected arity-1 PTTs");
    });
    const std::uint64_t counts[] = {2, 7, 40, 357, 4824, 96428};
    for (int k = 1; k <= 6; ++k) {
        const std::uint64_t want = counts[k - 1];
        ex.emplace_back("p_" + std::to_string(k) + " = " + std::to_string(want), [k, want] {
            const auto got = count_ptt(k).ptt_count;
            return expect_true(got == want, "counted " + std::to_string(got));
        });
    }
    ex.emplace_back("seven languages on (a, b)", [] {
        const auto report = distinct_action_report(2);
        std::set<FiniteLanguage::Words> got;
        for (const auto& l : report.languages) {
            got.insert(l.words());
        }
        const std::set<FiniteLanguage::Words> want{
            L({"ab"}).words(),      L({"ab", "b"}).words(),          L({"ab", "b", ""}).words(), L({"ab", "a"}).words(),
            L({"ab", "a", ""}).words(), L({"ab", "a", "b", ""}).words(), L({"ab", ""}).words()};
        if (report.ptt_count != 7 || !report.languages_injective() || !report.vectors_injective()) {
            return std::string("expected 7 pairwise distinct languages");
        }
        return expect_true(got == want, "language table differs");
    });
    ex.emplace_back("count of distinct languages on (a, b)", [] {
        const std::vector<FiniteLanguage> ls{letter("a"), letter("b")};
        const auto n = count_distinct_languages(ls);
        return expect_true(n == 7, "counted " + std::to_string(n));
    });

    ex.emplace_back("compile a+b", [] {
        const auto c = compile_star_free(parse("a+b"));
        if (c.tilde != Multitilde(3, {{1, 2}, {2, 3}})) {
            return "tilde " + to_string(c.tilde);
        }
        if (c.leaves != std::vector<LeafSymbol>{"a", std::nullopt, "b"}) {
            return std::string("leaves differ");
        }
        return expect_eq(c.language(), L({"a", "b"}));
    });
    ex.emplace_back("compile 1", [] {
        const auto c = compile_star_free(parse("1"));
        if (c.tilde != Multitilde(1, {{1, 1}}) || c.leaves != std::vector<LeafSymbol>{std::nullopt}) {
            return "tilde " + to_string(c.tilde);
        }
        return expect_eq(c.language(), FiniteLanguage::epsilon());
    });
    ex.emplace_back("star of star collapses", [] {
        return expect_true(normalize(StarTree::star(StarTree::star(StarTree::leaf(1)))) ==
                               StarTree::star(StarTree::leaf(1)),
                           "not collapsed");
    });
    return ex;
}

} // namespace

std::vector<ExampleResult> run_worked_examples() {
    std::vector<ExampleResult> results;
    for (auto& [name, check] : examples()) {
        ExampleResult r{name, false, {}};
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("threw: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace multitilde
