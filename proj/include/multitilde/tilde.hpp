#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace multitilde {

/// A couple (x, y) of 1-based positions. Multitildes require x <= y; the
/// index operators below accept any couple and leave validation to callers.
struct Pair {
    int x = 1;
    int y = 1;

    friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

std::string to_string(const Pair& p);

/// An n-ary multitilde operator: an arity n >= 1 and a set of couples
/// (x, y) with 1 <= x <= y <= n. Pairs are kept sorted and deduplicated, so
/// two multitildes are equal iff they have the same arity and pair set.
class Multitilde {
public:
    /// Throws InvalidValue when arity < 1 or a pair falls outside [1, arity]^2_<=.
    explicit Multitilde(int arity, std::vector<Pair> pairs = {});
    Multitilde(int arity, std::initializer_list<Pair> pairs);

    int arity() const noexcept { return arity_; }
    std::span<const Pair> pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    bool contains(const Pair& p) const;

    friend bool operator==(const Multitilde&, const Multitilde&) = default;
    /// Orders by arity first, then lexicographically by canonical pair list.
    friend std::strong_ordering operator<=>(const Multitilde& a, const Multitilde& b);

private:
    int arity_;
    std::vector<Pair> pairs_;
};

std::string to_string(const Multitilde& t);

// Index arithmetic ----------------------------------------------------------

/// Dec_k: translate both coordinates by k.
constexpr Pair dec(int k, Pair p) noexcept { return {p.x + k, p.y + k}; }

/// Shift_{k,n}: insert n positions in place of position k. The left end moves
/// when x >= k+1, the right end when y >= k; each by n-1.
constexpr Pair shift(int k, int n, Pair p) noexcept {
    return {p.x + (p.x >= k + 1 ? n - 1 : 0), p.y + (p.y >= k ? n - 1 : 0)};
}

std::vector<Pair> dec_set(int k, std::span<const Pair> pairs);
std::vector<Pair> shift_set(int k, int n, std::span<const Pair> pairs);

// Operad structure ---------------------------------------------------------

/// The identity of the operad: the arity-1 multitilde with no pairs.
Multitilde identity();

/// Partial composition t1 o_k t2 = Shift_{k,n}(t1) u Dec_{k-1}(t2), n = t2.arity().
/// Throws IndexOutOfRange unless 1 <= k <= t1.arity().
Multitilde compose_partial(const Multitilde& t1, int k, const Multitilde& t2);

/// Full composition t o (a_1, ..., a_m), folded right to left:
/// (...((t o_m a_m) o_{m-1} a_{m-1}) ...) o_1 a_1.
/// Throws ArityMismatch unless args.size() == t.arity().
Multitilde compose_full(const Multitilde& t, std::span<const Multitilde> args);

/// Union of pair sets at equal arity. Throws ArityMismatch otherwise.
Multitilde union_tilde(const Multitilde& a, const Multitilde& b);

} // namespace multitilde

template <>
struct std::hash<multitilde::Multitilde> {
    std::size_t operator()(const multitilde::Multitilde& t) const noexcept;
};
