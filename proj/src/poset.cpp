#include "multitilde/poset.hpp"

#include <algorithm>
#include <deque>

#include "multitilde/error.hpp"

namespace multitilde {

namespace {

void canonicalize(std::vector<Pair>& pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

// Dense membership table over [1, n]^2.
class PairTable {
public:
    explicit PairTable(int n) : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    bool test(int x, int y) const { return cells_[index(x, y)] != 0; }
    // Returns true when the pair was absent.
    bool insert(int x, int y) {
        auto& c = cells_[index(x, y)];
        const bool fresh = c == 0;
        c = 1;
        return fresh;
    }
    int n() const { return n_; }

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y - 1);
    }

    int n_;
    std::vector<char> cells_;
};

} // namespace

Relation::Relation(int size, std::vector<Pair> pairs) : size_(size), pairs_(std::move(pairs)) {
    if (size_ < 1) {
        throw InvalidValue("relation ground set size must be at least 1, got " + std::to_string(size_));
    }
    for (const Pair& p : pairs_) {
        if (p.x < 1 || p.y > size_ || p.x > p.y) {
            throw InvalidValue("relation pair " + to_string(p) + " is not a sub-order pair on [1," +
                               std::to_string(size_) + "]");
        }
    }
    canonicalize(pairs_);
    for (int x = 1; x <= size_; ++x) {
        if (!contains({x, x})) {
            throw InvalidValue("relation is not reflexive: missing " + to_string(Pair{x, x}));
        }
    }
}

Relation::Relation(int size, std::initializer_list<Pair> pairs) : Relation(size, std::vector<Pair>(pairs)) {}

Relation Relation::diagonal(int size) {
    std::vector<Pair> pairs;
    for (int x = 1; x <= size; ++x) {
        pairs.push_back({x, x});
    }
    return Relation(size, std::move(pairs));
}

bool Relation::contains(const Pair& p) const { return std::binary_search(pairs_.begin(), pairs_.end(), p); }

std::string to_string(const Relation& r) {
    std::string out = "{size " + std::to_string(r.size()) + ": ";
    bool first = true;
    for (const Pair& p : r.pairs()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += to_string(p);
    }
    return out + "}";
}

Relation phi(const Multitilde& t) {
    const int size = t.arity() + 1;
    std::vector<Pair> pairs;
    pairs.reserve(t.size() + static_cast<std::size_t>(size));
    for (const Pair& p : t.pairs()) {
        pairs.push_back({p.x, p.y + 1});
    }
    for (int x = 1; x <= size; ++x) {
        pairs.push_back({x, x});
    }
    return Relation(size, std::move(pairs));
}

Multitilde phi_inv(const Relation& r) {
    if (r.size() < 2) {
        throw InvalidValue("a relation on a single point has no multitilde preimage");
    }
    std::vector<Pair> pairs;
    for (const Pair& p : r.pairs()) {
        if (p.x != p.y) {
            pairs.push_back({p.x, p.y - 1});
        }
    }
    return Multitilde(r.size() - 1, std::move(pairs));
}

Relation diamond(const Relation& r1, int k, const Relation& r2) {
    const int m = r1.size() - 1;
    const int n = r2.size() - 1;
    if (k < 1 || k > m) {
        throw IndexOutOfRange("diamond slot " + std::to_string(k) + " outside [1," + std::to_string(m) + "]");
    }
    std::vector<Pair> pairs;
    pairs.reserve(r1.pairs().size() + r2.pairs().size());
    for (const Pair& p : r1.pairs()) {
        pairs.push_back(shift_diamond(n, k, p));
    }
    for (const Pair& p : r2.pairs()) {
        pairs.push_back(dec(k - 1, p));
    }
    return Relation(m + n, std::move(pairs));
}

Relation transitive_closure(const Relation& r) {
    std::vector<Pair> pairs(r.pairs().begin(), r.pairs().end());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Pair> added;
        for (const Pair& a : pairs) {
            for (const Pair& b : pairs) {
                if (a.y == b.x && !std::binary_search(pairs.begin(), pairs.end(), Pair{a.x, b.y})) {
                    added.push_back({a.x, b.y});
                }
            }
        }
        if (!added.empty()) {
            changed = true;
            pairs.insert(pairs.end(), added.begin(), added.end());
            canonicalize(pairs);
        }
    }
    return Relation(r.size(), std::move(pairs));
}

bool is_transitive(const Relation& r) { return transitive_closure(r) == r; }

Multitilde pseudo_closure(const Multitilde& t) {
    const int n = t.arity();
    PairTable table(n);
    std::deque<Pair> work;
    for (const Pair& p : t.pairs()) {
        table.insert(p.x, p.y);
        work.push_back(p);
    }
    // Each newly known pair is combined once as the left and once as the right
    // premise of (i,k), (k+1,j) => (i,j).
    while (!work.empty()) {
        const Pair p = work.front();
        work.pop_front();
        for (int j = p.y + 1; j <= n; ++j) {
            if (table.test(p.y + 1, j) && table.insert(p.x, j)) {
                work.push_back({p.x, j});
            }
        }
        for (int i = 1; i <= p.x - 1; ++i) {
            if (table.test(i, p.x - 1) && table.insert(i, p.y)) {
                work.push_back({i, p.y});
            }
        }
    }
    std::vector<Pair> pairs;
    for (int x = 1; x <= n; ++x) {
        for (int y = x; y <= n; ++y) {
            if (table.test(x, y)) {
                pairs.push_back({x, y});
            }
        }
    }
    return Multitilde(n, std::move(pairs));
}

bool is_ptt(const Multitilde& t) { return pseudo_closure(t) == t; }

bool equivalent(const Multitilde& a, const Multitilde& b) {
    return a.arity() == b.arity() && pseudo_closure(a) == pseudo_closure(b);
}

} // namespace multitilde
