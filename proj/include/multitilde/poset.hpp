#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "multitilde/tilde.hpp"

namespace multitilde {

/// A reflexive subrelation of the natural order on {1, ..., size}. Every
/// (x, x) is present and every (x, y) has x <= y; pairs are kept sorted.
class Relation {
public:
    /// Throws InvalidValue when the relation is not reflexive, has a pair above
    /// the diagonal order (x > y) or leaves the ground set.
    Relation(int size, std::vector<Pair> pairs);
    Relation(int size, std::initializer_list<Pair> pairs);

    /// The diagonal relation on {1, ..., size}.
    static Relation diagonal(int size);

    int size() const noexcept { return size_; }
    std::span<const Pair> pairs() const noexcept { return pairs_; }
    bool contains(const Pair& p) const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    int size_;
    std::vector<Pair> pairs_;
};

std::string to_string(const Relation& r);

/// T -> {(x, y+1) : (x,y) in T} u diagonal of {1, ..., n+1}.
Relation phi(const Multitilde& t);

/// R -> {(x, y-1) : (x,y) in R, x < y}; arity is size - 1. Throws InvalidValue
/// for a relation of size 1 (it has no multitilde preimage).
Multitilde phi_inv(const Relation& r);

/// Relabelling used by the relation-side composition: a coordinate moves by
/// n-1 when it exceeds k.
constexpr Pair shift_diamond(int n, int k, Pair p) noexcept {
    if (p.y <= k) {
        return p;
    }
    if (p.x <= k) {
        return {p.x, p.y + n - 1};
    }
    return {p.x + n - 1, p.y + n - 1};
}

/// r1 <>_k r2 = ShiftDiamond_{n,k}(r1) u Dec_{k-1}(r2) with n = r2.size() - 1.
/// Throws IndexOutOfRange unless 1 <= k <= r1.size() - 1.
Relation diamond(const Relation& r1, int k, const Relation& r2);

/// Smallest transitive superset, computed by saturation until fixpoint.
Relation transitive_closure(const Relation& r);

bool is_transitive(const Relation& r);

/// Pseudotransitive closure: the smallest superset of t's pairs closed under
/// (i,k), (k+1,j) => (i,j).
Multitilde pseudo_closure(const Multitilde& t);

/// True iff t equals its pseudotransitive closure.
bool is_ptt(const Multitilde& t);

/// Semantic equivalence: same arity and same pseudotransitive closure.
/// Mismatched arities are simply not equivalent.
bool equivalent(const Multitilde& a, const Multitilde& b);

} // namespace multitilde
