#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "multitilde/tilde.hpp"

namespace multitilde {

/// A packed boolean vector of length >= 1. Positions are 1-based in the
/// public interface to match multitilde pair coordinates.
///
/// Bits are stored most-significant first within each 64-bit block, so the
/// defaulted comparison of blocks is the lexicographic order with 0 < 1.
class BoolVector {
public:
    /// All-ones vector of the given length. Throws InvalidValue if length < 1.
    static BoolVector ones(int length);
    static BoolVector zeros(int length);
    /// Builds from explicit 0/1 entries.
    BoolVector(std::initializer_list<int> bits);
    explicit BoolVector(std::span<const bool> bits);

    int size() const noexcept { return length_; }
    bool operator[](int position) const noexcept;
    void set(int position, bool value) noexcept;
    bool all() const noexcept;
    std::vector<bool> to_bools() const;
    std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }

    friend bool operator==(const BoolVector&, const BoolVector&) = default;
    friend std::strong_ordering operator<=>(const BoolVector& a, const BoolVector& b);

private:
    explicit BoolVector(int length, bool value);

    int length_;
    std::vector<std::uint64_t> blocks_;
};

std::string to_string(const BoolVector& v);

/// An element of the operad of boolean-vector sets: an arity and a duplicate-free
/// set of vectors of that length, kept in lexicographic order.
class BoolVectorSet {
public:
    /// Throws InvalidValue if arity < 1 or any vector has the wrong length.
    explicit BoolVectorSet(int arity, std::vector<BoolVector> vectors = {});
    BoolVectorSet(int arity, std::initializer_list<BoolVector> vectors);

    int arity() const noexcept { return arity_; }
    std::span<const BoolVector> vectors() const noexcept { return vectors_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    bool contains(const BoolVector& v) const;

    friend bool operator==(const BoolVectorSet&, const BoolVectorSet&) = default;

private:
    int arity_;
    std::vector<BoolVector> vectors_;
};

std::string to_string(const BoolVectorSet& e);

/// The unit {[1]} of the operad of vector sets.
BoolVectorSet bool_identity();

/// E o_k F: for every e in E and f in F, splice e_k AND f_j in place of position k.
/// Throws IndexOutOfRange unless 1 <= k <= e.arity().
BoolVectorSet bool_compose_partial(const BoolVectorSet& e, int k, const BoolVectorSet& f);

/// A subset of a multitilde's pairs with pairwise disjoint intervals [x,y].
/// Pairs are sorted.
using FreeSubset = std::vector<Pair>;

/// Calls `visit` once per free subset of t's pairs, including the empty one.
/// Enumeration backtracks over pairs ordered by left endpoint and never builds
/// a non-free subset.
void for_each_free_subset(const Multitilde& t, const std::function<void(std::span<const Pair>)>& visit);

/// Every free subset of t's pairs, sorted lexicographically.
std::vector<FreeSubset> free_subsets(const Multitilde& t);

/// v(S): 0 on every position covered by an interval of S, 1 elsewhere.
BoolVector coverage_vector(int arity, std::span<const Pair> subset);

/// V(T) = { v(S) : S free subset of T }.
BoolVectorSet vectorize(const Multitilde& t);

} // namespace multitilde

template <>
struct std::hash<multitilde::BoolVector> {
    std::size_t operator()(const multitilde::BoolVector& v) const noexcept;
};
