#include "multitilde/bool_operad.hpp"

#include <algorithm>

#include "multitilde/error.hpp"

namespace multitilde {

namespace {

constexpr int kBlockBits = 64;

std::size_t block_count(int length) { return static_cast<std::size_t>((length + kBlockBits - 1) / kBlockBits); }

std::uint64_t bit_mask(int position) {
    return std::uint64_t{1} << (kBlockBits - 1 - (position - 1) % kBlockBits);
}

std::size_t block_of(int position) { return static_cast<std::size_t>((position - 1) / kBlockBits); }

void canonicalize(std::vector<BoolVector>& vectors) {
    std::sort(vectors.begin(), vectors.end());
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
}

} // namespace

BoolVector::BoolVector(int length, bool value) : length_(length) {
    if (length < 1) {
        throw InvalidValue("boolean vectors have length at least 1, got " + std::to_string(length));
    }
    blocks_.assign(block_count(length), 0);
    if (value) {
        for (int i = 1; i <= length; ++i) {
            set(i, true);
        }
    }
}

BoolVector BoolVector::ones(int length) { return BoolVector(length, true); }

BoolVector BoolVector::zeros(int length) { return BoolVector(length, false); }

BoolVector::BoolVector(std::initializer_list<int> bits) : BoolVector(static_cast<int>(bits.size()), false) {
    int i = 1;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw InvalidValue("boolean vector entries must be 0 or 1");
        }
        set(i++, b == 1);
    }
}

BoolVector::BoolVector(std::span<const bool> bits) : BoolVector(static_cast<int>(bits.size()), false) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
        set(static_cast<int>(i) + 1, bits[i]);
    }
}

bool BoolVector::operator[](int position) const noexcept {
    return (blocks_[block_of(position)] & bit_mask(position)) != 0;
}

void BoolVector::set(int position, bool value) noexcept {
    if (value) {
        blocks_[block_of(position)] |= bit_mask(position);
    } else {
        blocks_[block_of(position)] &= ~bit_mask(position);
    }
}

bool BoolVector::all() const noexcept {
    for (int i = 1; i <= length_; ++i) {
        if (!(*this)[i]) {
            return false;
        }
    }
    return true;
}

std::vector<bool> BoolVector::to_bools() const {
    std::vector<bool> out(static_cast<std::size_t>(length_));
    for (int i = 1; i <= length_; ++i) {
        out[static_cast<std::size_t>(i - 1)] = (*this)[i];
    }
    return out;
}

std::strong_ordering operator<=>(const BoolVector& a, const BoolVector& b) {
    // Unused trailing bits are always zero, so block comparison is lexicographic.
    if (auto c = a.length_ <=> b.length_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(),
                                                  b.blocks_.end());
}

std::string to_string(const BoolVector& v) {
    std::string out = "(";
    for (int i = 1; i <= v.size(); ++i) {
        if (i > 1) {
            out += ',';
        }
        out += v[i] ? '1' : '0';
    }
    return out + ")";
}

BoolVectorSet::BoolVectorSet(int arity, std::vector<BoolVector> vectors) : arity_(arity), vectors_(std::move(vectors)) {
    if (arity_ < 1) {
        throw InvalidValue("vector set arity must be at least 1, got " + std::to_string(arity_));
    }
    for (const auto& v : vectors_) {
        if (v.size() != arity_) {
            throw InvalidValue("vector " + to_string(v) + " does not have length " + std::to_string(arity_));
        }
    }
    canonicalize(vectors_);
}

BoolVectorSet::BoolVectorSet(int arity, std::initializer_list<BoolVector> vectors)
    : BoolVectorSet(arity, std::vector<BoolVector>(vectors)) {}

bool BoolVectorSet::contains(const BoolVector& v) const {
    return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

std::string to_string(const BoolVectorSet& e) {
    std::string out = "{" + std::to_string(e.arity()) + ": ";
    bool first = true;
    for (const auto& v : e.vectors()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += to_string(v);
    }
    return out + "}";
}

BoolVectorSet bool_identity() { return BoolVectorSet(1, {BoolVector::ones(1)}); }

BoolVectorSet bool_compose_partial(const BoolVectorSet& e, int k, const BoolVectorSet& f) {
    if (k < 1 || k > e.arity()) {
        throw IndexOutOfRange("composition slot " + std::to_string(k) + " outside [1," + std::to_string(e.arity()) +
                              "]");
    }
    const int m = e.arity();
    const int n = f.arity();
    std::vector<BoolVector> out;
    out.reserve(e.size() * f.size());
    for (const auto& ev : e.vectors()) {
        BoolVector spliced = BoolVector::zeros(m + n - 1);
        for (int i = 1; i < k; ++i) {
            spliced.set(i, ev[i]);
        }
        for (int i = k + 1; i <= m; ++i) {
            spliced.set(i + n - 1, ev[i]);
        }
        const bool gate = ev[k];
        for (const auto& fv : f.vectors()) {
            for (int j = 1; j <= n; ++j) {
                spliced.set(k + j - 1, gate && fv[j]);
            }
            out.push_back(spliced);
        }
    }
    return BoolVectorSet(m + n - 1, std::move(out));
}

namespace {

void backtrack_free(std::span<const Pair> pairs, std::size_t start, int last_end, std::vector<Pair>& chosen,
                    const std::function<void(std::span<const Pair>)>& visit) {
    visit(chosen);
    for (std::size_t i = start; i < pairs.size(); ++i) {
        // Pairs are sorted by left endpoint, so disjointness from every chosen
        // interval reduces to starting after the last chosen right endpoint.
        if (pairs[i].x > last_end) {
            chosen.push_back(pairs[i]);
            backtrack_free(pairs, i + 1, pairs[i].y, chosen, visit);
            chosen.pop_back();
        }
    }
}

} // namespace

void for_each_free_subset(const Multitilde& t, const std::function<void(std::span<const Pair>)>& visit) {
    std::vector<Pair> chosen;
    chosen.reserve(static_cast<std::size_t>(t.arity()));
    backtrack_free(t.pairs(), 0, 0, chosen, visit);
}

std::vector<FreeSubset> free_subsets(const Multitilde& t) {
    std::vector<FreeSubset> out;
    for_each_free_subset(t, [&out](std::span<const Pair> s) { out.emplace_back(s.begin(), s.end()); });
    std::sort(out.begin(), out.end());
    return out;
}

BoolVector coverage_vector(int arity, std::span<const Pair> subset) {
    BoolVector v = BoolVector::ones(arity);
    for (const Pair& p : subset) {
        for (int j = p.x; j <= p.y; ++j) {
            v.set(j, false);
        }
    }
    return v;
}

BoolVectorSet vectorize(const Multitilde& t) {
    std::vector<BoolVector> out;
    for_each_free_subset(t, [&](std::span<const Pair> s) { out.push_back(coverage_vector(t.arity(), s)); });
    return BoolVectorSet(t.arity(), std::move(out));
}

} // namespace multitilde

std::size_t std::hash<multitilde::BoolVector>::operator()(const multitilde::BoolVector& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.size());
    for (auto b : v.blocks()) {
        h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}
