#include <doctest.h>

#include <random>
#include <set>

#include "multitilde/bool_operad.hpp"
#include "multitilde/error.hpp"
#include "oracles.hpp"

using namespace multitilde;

namespace {

std::set<std::vector<int>> as_ints(const BoolVectorSet& e) {
    std::set<std::vector<int>> out;
    for (const auto& v : e.vectors()) {
        std::vector<int> bits;
        for (int i = 1; i <= v.size(); ++i) {
            bits.push_back(v[i] ? 1 : 0);
        }
        out.insert(bits);
    }
    return out;
}

// Every vector set of the given arity.
std::vector<BoolVectorSet> all_vector_sets(int n) {
    std::vector<BoolVector> all;
    for (int m = 0; m < (1 << n); ++m) {
        BoolVector v = BoolVector::zeros(n);
        for (int i = 1; i <= n; ++i) {
            v.set(i, (m >> (n - i)) & 1);
        }
        all.push_back(v);
    }
    std::vector<BoolVectorSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << all.size()); ++m) {
        std::vector<BoolVector> vs;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if ((m >> i) & 1U) {
                vs.push_back(all[i]);
            }
        }
        out.emplace_back(n, std::move(vs));
    }
    return out;
}

} // namespace

TEST_CASE("BoolVector basics") {
    const BoolVector v{1, 0, 1};
    CHECK(v.size() == 3);
    CHECK(v[1]);
    CHECK_FALSE(v[2]);
    CHECK(v[3]);
    CHECK_FALSE(v.all());
    CHECK(BoolVector::ones(70).all());
    CHECK_FALSE(BoolVector::zeros(70)[70]);
    CHECK(BoolVector{0, 1} < BoolVector{1, 0});
    CHECK(BoolVector{0, 1, 1} < BoolVector{1, 0, 0});
    CHECK_THROWS_AS(BoolVector::ones(0), InvalidValue);

    BoolVector w = BoolVector::zeros(130);
    w.set(65, true);
    w.set(130, true);
    CHECK(w[65]);
    CHECK(w[130]);
    CHECK_FALSE(w[64]);
    CHECK(w.to_bools().size() == 130);
}

TEST_CASE("BoolVectorSet canonical form") {
    const BoolVectorSet e(2, {{1, 1}, {0, 0}, {1, 1}});
    CHECK(e.size() == 2);
    CHECK(e.vectors()[0] == BoolVector{0, 0});
    CHECK(e.contains({1, 1}));
    CHECK_THROWS_AS(BoolVectorSet(2, {{1, 1, 1}}), InvalidValue);
    CHECK_THROWS_AS(BoolVectorSet(0), InvalidValue);
}

TEST_CASE("bool_compose_partial examples") {
    CHECK(bool_compose_partial(BoolVectorSet(2, {{1, 0}}), 1, BoolVectorSet(2, {{1, 1}, {0, 0}})) ==
          BoolVectorSet(3, {{1, 1, 0}, {0, 0, 0}}));
    const BoolVectorSet f(2, {{1, 0}, {0, 0}});
    CHECK(bool_compose_partial(bool_identity(), 1, f) == f);
    const BoolVectorSet e(3, {{1, 0, 1}, {0, 1, 1}});
    for (int k = 1; k <= 3; ++k) {
        CHECK(bool_compose_partial(e, k, bool_identity()) == e);
    }
    CHECK(bool_compose_partial(BoolVectorSet(2), 1, f) == BoolVectorSet(3));
    CHECK_THROWS_AS(bool_compose_partial(e, 4, f), IndexOutOfRange);
    CHECK_THROWS_AS(bool_compose_partial(e, 0, f), IndexOutOfRange);
}

namespace {

void check_laws(const BoolVectorSet& e1, const BoolVectorSet& e2, const BoolVectorSet& e3) {
    const int m = e1.arity();
    const int p = e3.arity();
    for (int k = 1; k <= m; ++k) {
        for (int l = k + 1; l <= m; ++l) {
            CHECK(bool_compose_partial(bool_compose_partial(e1, l, e2), k, e3) ==
                  bool_compose_partial(bool_compose_partial(e1, k, e3), l + p - 1, e2));
        }
        for (int i = 1; i <= e2.arity(); ++i) {
            CHECK(bool_compose_partial(e1, k, bool_compose_partial(e2, i, e3)) ==
                  bool_compose_partial(bool_compose_partial(e1, k, e2), k + i - 1, e3));
        }
    }
}

} // namespace

TEST_CASE("vector-set operad laws") {
    std::vector<BoolVectorSet> small;
    std::vector<BoolVectorSet> sets;
    for (int n = 1; n <= 3; ++n) {
        for (auto& e : all_vector_sets(n)) {
            if (n <= 2) {
                small.push_back(e);
            }
            sets.push_back(std::move(e));
        }
    }
    // Every outer set of arity <= 3 against every inner pair of arity <= 2.
    for (const auto& e1 : sets) {
        for (const auto& e2 : small) {
            for (const auto& e3 : small) {
                check_laws(e1, e2, e3);
            }
        }
    }
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> any(0, sets.size() - 1);
    for (int trial = 0; trial < 20000; ++trial) {
        check_laws(sets[any(rng)], sets[any(rng)], sets[any(rng)]);
    }
    for (const auto& e : sets) {
        CHECK(bool_compose_partial(bool_identity(), 1, e) == e);
        for (int k = 1; k <= e.arity(); ++k) {
            CHECK(bool_compose_partial(e, k, bool_identity()) == e);
        }
    }
}

TEST_CASE("free subsets: examples") {
    using FS = std::vector<FreeSubset>;
    CHECK(free_subsets(Multitilde(3, {{1, 2}, {2, 3}})) == FS{{}, {{1, 2}}, {{2, 3}}});
    CHECK(free_subsets(Multitilde(4)) == FS{{}});
    const FS f3{{}, {{1, 1}}, {{1, 1}, {2, 3}}, {{1, 1}, {3, 3}}, {{1, 2}}, {{1, 2}, {3, 3}}, {{1, 3}}, {{2, 3}}, {{3, 3}}};
    CHECK(free_subsets(Multitilde(3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}})) == f3);
}

TEST_CASE("free subsets: backtracking equals the power-set filter") {
    for (const auto& t : oracle::all_tildes_up_to(4)) {
        CHECK(free_subsets(t) == oracle::free_subsets_powerset(t));
    }
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const Multitilde t = oracle::random_tilde_up_to(rng, 8);
        if (t.size() > 22) {
            continue;  // keep the power-set oracle affordable
        }
        CHECK(free_subsets(t) == oracle::free_subsets_powerset(t));
    }
}

TEST_CASE("for_each_free_subset visits each subset once") {
    const Multitilde t(4, {{1, 1}, {1, 2}, {2, 2}, {2, 4}, {3, 4}, {4, 4}});
    std::set<std::vector<Pair>> seen;
    std::size_t calls = 0;
    for_each_free_subset(t, [&](std::span<const Pair> s) {
        ++calls;
        std::vector<Pair> v(s.begin(), s.end());
        std::sort(v.begin(), v.end());
        seen.insert(v);
    });
    CHECK(calls == seen.size());
    CHECK(calls == oracle::free_subsets_powerset(t).size());
}

TEST_CASE("coverage vector") {
    const std::vector<Pair> s{{1, 2}, {4, 4}};
    CHECK(coverage_vector(5, s) == BoolVector{0, 0, 1, 0, 1});
    CHECK(coverage_vector(3, {}) == BoolVector::ones(3));
}

TEST_CASE("vectorize examples") {
    CHECK(vectorize(Multitilde(4, {{1, 2}, {2, 3}, {3, 4}, {4, 4}})) ==
          BoolVectorSet(4, {{0, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}, {1, 1, 0, 0},
                            {1, 1, 1, 0}, {1, 1, 1, 1}}));
    CHECK(vectorize(Multitilde(3)) == BoolVectorSet(3, {BoolVector::ones(3)}));
    CHECK(vectorize(Multitilde(3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}})) ==
          BoolVectorSet(3, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}, {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}));
    CHECK(vectorize(Multitilde(2, {{1, 1}, {2, 2}})) == BoolVectorSet(2, {{1, 1}, {0, 1}, {1, 0}, {0, 0}}));
    CHECK(vectorize(identity()) == bool_identity());
}

TEST_CASE("vectorize equals the brute-force vector set and contains all ones") {
    for (const auto& t : oracle::all_tildes_up_to(4)) {
        const auto v = vectorize(t);
        CHECK(as_ints(v) == oracle::vectors(t));
        CHECK(v.contains(BoolVector::ones(t.arity())));
    }
}

TEST_CASE("V is a morphism") {
    const auto small = oracle::all_tildes_up_to(3);
    for (const auto& t1 : small) {
        for (const auto& t2 : small) {
            for (int k = 1; k <= t1.arity(); ++k) {
                CHECK(vectorize(compose_partial(t1, k, t2)) == bool_compose_partial(vectorize(t1), k, vectorize(t2)));
            }
        }
    }
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 2000; ++trial) {
        const Multitilde t1 = oracle::random_tilde_up_to(rng, 5);
        const Multitilde t2 = oracle::random_tilde_up_to(rng, 5);
        const int k = std::uniform_int_distribution<int>(1, t1.arity())(rng);
        CHECK(vectorize(compose_partial(t1, k, t2)) == bool_compose_partial(vectorize(t1), k, vectorize(t2)));
    }
}

namespace {

std::set<std::vector<Pair>> sorted_set(std::vector<std::vector<Pair>> subsets) {
    std::set<std::vector<Pair>> out;
    for (auto& s : subsets) {
        std::sort(s.begin(), s.end());
        out.insert(std::move(s));
    }
    return out;
}

// Right-hand side of the free-subset decomposition of T1 o_k T2, with the
// admissibility test on the pairs of S supplied by the caller.
template <typename Admissible>
std::set<std::vector<Pair>> composed_free_subsets(const Multitilde& t1, int k, const Multitilde& t2,
                                                  Admissible admissible) {
    const int n = t2.arity();
    std::vector<std::vector<Pair>> out;
    for (const auto& s : free_subsets(t1)) {
        out.push_back(shift_set(k, n, s));
        if (!std::all_of(s.begin(), s.end(), [&](Pair p) { return admissible(p, k); })) {
            continue;
        }
        for (const auto& u : free_subsets(t2)) {
            auto both = shift_set(k, n, s);
            const auto moved = dec_set(k - 1, u);
            both.insert(both.end(), moved.begin(), moved.end());
            out.push_back(std::move(both));
        }
    }
    return sorted_set(std::move(out));
}

} // namespace

TEST_CASE("free subsets of a composition split along slot k") {
    // S combines with a free subset of T2 exactly when no pair of S covers k.
    const auto small = oracle::all_tildes_up_to(3);
    for (const auto& t1 : small) {
        for (const auto& t2 : small) {
            for (int k = 1; k <= t1.arity(); ++k) {
                const auto got = sorted_set(free_subsets(compose_partial(t1, k, t2)));
                CHECK(got == composed_free_subsets(t1, k, t2, [](Pair p, int kk) { return p.x > kk || p.y < kk; }));
            }
        }
    }
}

TEST_CASE("free subsets of a composition: the 'x >= k or y < k-1' reading is wrong") {
    // With that condition S = {(1,1)} in {(1,1)} o_2 {(1,1)} is excluded, yet
    // {(1,1),(2,2)} is free in the composite.
    const Multitilde t1(2, {{1, 1}});
    const Multitilde t2(1, {{1, 1}});
    const auto got = sorted_set(free_subsets(compose_partial(t1, 2, t2)));
    const auto literal = composed_free_subsets(t1, 2, t2, [](Pair p, int k) { return p.x >= k || p.y < k - 1; });
    CHECK(got.contains({{1, 1}, {2, 2}}));
    CHECK_FALSE(literal.contains({{1, 1}, {2, 2}}));
    CHECK(got != literal);
}
