#include "multitilde/tilde.hpp"

#include <algorithm>
#include <iterator>

#include "multitilde/error.hpp"

namespace multitilde {

namespace {

void canonicalize(std::vector<Pair>& pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

} // namespace

std::string to_string(const Pair& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

Multitilde::Multitilde(int arity, std::vector<Pair> pairs) : arity_(arity), pairs_(std::move(pairs)) {
    if (arity_ < 1) {
        throw InvalidValue("multitilde arity must be at least 1, got " + std::to_string(arity_));
    }
    for (const Pair& p : pairs_) {
        if (p.x < 1 || p.x > p.y || p.y > arity_) {
            throw InvalidValue("pair " + to_string(p) + " is not in [1," + std::to_string(arity_) + "]^2 with x <= y");
        }
    }
    canonicalize(pairs_);
}

Multitilde::Multitilde(int arity, std::initializer_list<Pair> pairs)
    : Multitilde(arity, std::vector<Pair>(pairs)) {}

bool Multitilde::contains(const Pair& p) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

std::strong_ordering operator<=>(const Multitilde& a, const Multitilde& b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.pairs_.begin(), a.pairs_.end(), b.pairs_.begin(),
                                                  b.pairs_.end());
}

std::string to_string(const Multitilde& t) {
    std::string out = "{" + std::to_string(t.arity()) + ": ";
    bool first = true;
    for (const Pair& p : t.pairs()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += to_string(p);
    }
    return out + "}";
}

std::vector<Pair> dec_set(int k, std::span<const Pair> pairs) {
    std::vector<Pair> out;
    out.reserve(pairs.size());
    std::transform(pairs.begin(), pairs.end(), std::back_inserter(out), [k](Pair p) { return dec(k, p); });
    canonicalize(out);
    return out;
}

std::vector<Pair> shift_set(int k, int n, std::span<const Pair> pairs) {
    std::vector<Pair> out;
    out.reserve(pairs.size());
    std::transform(pairs.begin(), pairs.end(), std::back_inserter(out),
                   [k, n](Pair p) { return shift(k, n, p); });
    canonicalize(out);
    return out;
}

Multitilde identity() { return Multitilde(1); }

Multitilde compose_partial(const Multitilde& t1, int k, const Multitilde& t2) {
    if (k < 1 || k > t1.arity()) {
        throw IndexOutOfRange("composition slot " + std::to_string(k) + " outside [1," +
                              std::to_string(t1.arity()) + "]");
    }
    const int n = t2.arity();
    std::vector<Pair> pairs = shift_set(k, n, t1.pairs());
    std::vector<Pair> inner = dec_set(k - 1, t2.pairs());
    pairs.insert(pairs.end(), inner.begin(), inner.end());
    return Multitilde(t1.arity() + n - 1, std::move(pairs));
}

Multitilde compose_full(const Multitilde& t, std::span<const Multitilde> args) {
    if (static_cast<int>(args.size()) != t.arity()) {
        throw ArityMismatch("full composition of an arity-" + std::to_string(t.arity()) + " multitilde needs " +
                            std::to_string(t.arity()) + " arguments, got " + std::to_string(args.size()));
    }
    Multitilde result = t;
    for (int k = t.arity(); k >= 1; --k) {
        result = compose_partial(result, k, args[static_cast<std::size_t>(k - 1)]);
    }
    return result;
}

Multitilde union_tilde(const Multitilde& a, const Multitilde& b) {
    if (a.arity() != b.arity()) {
        throw ArityMismatch("union of multitildes of arities " + std::to_string(a.arity()) + " and " +
                            std::to_string(b.arity()));
    }
    std::vector<Pair> pairs(a.pairs().begin(), a.pairs().end());
    pairs.insert(pairs.end(), b.pairs().begin(), b.pairs().end());
    return Multitilde(a.arity(), std::move(pairs));
}

} // namespace multitilde

std::size_t std::hash<multitilde::Multitilde>::operator()(const multitilde::Multitilde& t) const noexcept {
    std::size_t h = static_cast<std::size_t>(t.arity());
    for (const auto& p : t.pairs()) {
        h ^= (static_cast<std::size_t>(p.x) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(p.y)) + (h << 6) +
             (h >> 2);
    }
    return h;
}
