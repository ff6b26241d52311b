#include "multitilde/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <thread>

#include "multitilde/bool_operad.hpp"
#include "multitilde/error.hpp"

namespace multitilde {

namespace {

using Mask = std::uint64_t;
// Node u of the order on {0, ..., k}; bit v of rows[u] means u < v are related.
using Rows = std::array<std::uint32_t, kMaxEnumerationArity + 1>;

void check_arity(int k, int max, const char* what) {
    if (k < 1 || k > max) {
        throw OutOfSupportedRange(std::string(what) + " supports arities 1.." + std::to_string(max) + ", got " +
                                  std::to_string(k));
    }
}

// Pair (x, y) of an arity-k multitilde has lexicographic index
// base[x] + (y - x); it is the edge x-1 -> y in the order on {0, ..., k}.
class PairIndex {
public:
    explicit PairIndex(int k) : k_(k) {
        int idx = 0;
        for (int x = 1; x <= k; ++x) {
            base_[static_cast<std::size_t>(x)] = idx;
            for (int y = x; y <= k; ++y) {
                pairs_[static_cast<std::size_t>(idx++)] = {x, y};
            }
        }
        count_ = idx;
    }

    int count() const { return count_; }
    Pair pair(int idx) const { return pairs_[static_cast<std::size_t>(idx)]; }

    Mask mask_of(const Rows& rows) const {
        Mask m = 0;
        for (int u = 0; u < k_; ++u) {
            const Mask row = rows[static_cast<std::size_t>(u)] >> (u + 1);
            m |= row << base_[static_cast<std::size_t>(u + 1)];
        }
        return m;
    }

    Multitilde decode(Mask m) const {
        std::vector<Pair> pairs;
        for (int i = 0; i < count_; ++i) {
            if ((m >> i) & 1U) {
                pairs.push_back(pairs_[static_cast<std::size_t>(i)]);
            }
        }
        return Multitilde(k_, std::move(pairs));
    }

private:
    static constexpr std::size_t kMaxPairs = kMaxEnumerationArity * (kMaxEnumerationArity + 1) / 2;

    int k_;
    int count_ = 0;
    std::array<int, kMaxEnumerationArity + 2> base_{};
    std::array<Pair, kMaxPairs> pairs_{};
};

// Adds the edge a -> b to a transitively closed order.
Rows with_edge(Rows rows, int a, int b) {
    const std::uint32_t gain = rows[static_cast<std::size_t>(b)] | (std::uint32_t{1} << b);
    for (int u = 0; u <= a; ++u) {
        if (u == a || (rows[static_cast<std::size_t>(u)] >> a) & 1U) {
            rows[static_cast<std::size_t>(u)] |= gain;
        }
    }
    return rows;
}

Mask low_bits(int idx) { return (Mask{2} << idx) - 1; }

struct Frame {
    Rows rows{};
    Mask prefix = 0;
    int next = 0;
};

// Depth-first search over viable prefixes. The root frame may be the empty
// prefix (whole tree) or a single first-level branch.
class PrefixSearch {
public:
    explicit PrefixSearch(int k) : index_(k) {}

    // Whole tree; the empty set is emitted first.
    void start_root() {
        stack_.clear();
        stack_.push_back(Frame{});
        pending_ = Mask{0};
    }

    // Subtree of prefixes whose smallest element has index first.
    // Returns false if the branch is empty.
    bool start_branch(int first) {
        stack_.clear();
        pending_.reset();
        Frame root{};
        root.next = first;
        std::optional<Mask> emitted;
        if (!extend(root, first, emitted)) {
            return false;
        }
        // The branch frame must not try further first elements.
        stack_.clear();
        stack_.push_back(child_);
        pending_ = emitted;
        return true;
    }

    std::optional<Mask> next() {
        if (pending_) {
            auto out = pending_;
            pending_.reset();
            return out;
        }
        while (!stack_.empty()) {
            Frame& top = stack_.back();
            if (top.next >= index_.count()) {
                stack_.pop_back();
                continue;
            }
            const int i = top.next++;
            std::optional<Mask> emitted;
            if (extend(top, i, emitted)) {
                stack_.push_back(child_);
                if (emitted) {
                    return emitted;
                }
            }
        }
        return std::nullopt;
    }

    const PairIndex& index() const { return index_; }

private:
    // Tries prefix u {i}; on success leaves the child frame in child_ and sets
    // emitted when the new prefix is already closed.
    bool extend(const Frame& parent, int i, std::optional<Mask>& emitted) {
        const Pair p = index_.pair(i);
        Rows rows = with_edge(parent.rows, p.x - 1, p.y);
        const Mask closed = index_.mask_of(rows);
        const Mask prefix = parent.prefix | (Mask{1} << i);
        if ((closed & low_bits(i)) != prefix) {
            return false;
        }
        child_ = Frame{rows, prefix, i + 1};
        if (closed == prefix) {
            emitted = prefix;
        }
        return true;
    }

    PairIndex index_;
    std::vector<Frame> stack_;
    std::optional<Mask> pending_;
    Frame child_{};
};

unsigned resolve_workers(unsigned workers) {
    if (workers == 0) {
        workers = std::max(1U, std::thread::hardware_concurrency());
    }
    return workers;
}

// Runs `body(branch)` for every first-level branch on a pool of workers.
template <typename Body>
void for_each_branch(int branches, unsigned workers, Body body) {
    workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(branches));
    if (workers <= 1) {
        for (int b = 0; b < branches; ++b) {
            body(b);
        }
        return;
    }
    std::atomic<int> cursor{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int b = cursor++; b < branches; b = cursor++) {
                body(b);
            }
        });
    }
}

} // namespace

struct PttEnumerator::Search {
    explicit Search(int k) : search(k) { search.start_root(); }
    PrefixSearch search;
};

PttEnumerator::PttEnumerator(int k) {
    check_arity(k, kMaxEnumerationArity, "PTT enumeration");
    search_ = std::make_unique<Search>(k);
}

PttEnumerator::~PttEnumerator() = default;
PttEnumerator::PttEnumerator(PttEnumerator&&) noexcept = default;
PttEnumerator& PttEnumerator::operator=(PttEnumerator&&) noexcept = default;

std::optional<Multitilde> PttEnumerator::next() {
    auto m = search_->search.next();
    if (!m) {
        return std::nullopt;
    }
    return search_->search.index().decode(*m);
}

std::vector<Multitilde> enumerate_ptt(int k, unsigned workers) {
    check_arity(k, kMaxEnumerationArity, "PTT enumeration");
    const PairIndex index(k);
    std::vector<std::vector<Mask>> per_branch(static_cast<std::size_t>(index.count()));
    for_each_branch(index.count(), workers, [&](int b) {
        PrefixSearch search(k);
        if (search.start_branch(b)) {
            auto& out = per_branch[static_cast<std::size_t>(b)];
            while (auto m = search.next()) {
                out.push_back(*m);
            }
        }
    });
    std::vector<Multitilde> out;
    out.push_back(Multitilde(k));
    for (const auto& branch : per_branch) {
        for (Mask m : branch) {
            out.push_back(index.decode(m));
        }
    }
    return out;
}

CountReport count_ptt(int k, unsigned workers) {
    check_arity(k, kMaxEnumerationArity, "PTT counting");
    const auto started = std::chrono::steady_clock::now();
    const PairIndex index(k);
    std::vector<std::uint64_t> per_branch(static_cast<std::size_t>(index.count()), 0);
    for_each_branch(index.count(), workers, [&](int b) {
        PrefixSearch search(k);
        if (search.start_branch(b)) {
            std::uint64_t n = 0;
            while (search.next()) {
                ++n;
            }
            per_branch[static_cast<std::size_t>(b)] = n;
        }
    });
    CountReport report;
    report.arity = k;
    report.ptt_count = 1;  // the empty multitilde
    for (auto n : per_branch) {
        report.ptt_count += n;
    }
    report.method = "recursive-extension";
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

std::vector<FiniteLanguage> distinct_letters(int k) {
    check_arity(k, kMaxActionCheckArity, "distinct-letter tuples");
    std::vector<FiniteLanguage> out;
    for (int i = 0; i < k; ++i) {
        out.push_back(FiniteLanguage::letter(std::string(1, static_cast<char>('a' + i))));
    }
    return out;
}

DistinctActionReport distinct_action_report(int k) {
    check_arity(k, kMaxActionCheckArity, "distinct-action check");
    const auto letters = distinct_letters(k);
    DistinctActionReport report;
    report.arity = k;
    std::set<FiniteLanguage::Words> languages;
    std::set<std::vector<BoolVector>> vector_sets;
    PttEnumerator ptts(k);
    while (auto t = ptts.next()) {
        ++report.ptt_count;
        const BoolVectorSet v = vectorize(*t);
        vector_sets.emplace(v.vectors().begin(), v.vectors().end());
        FiniteLanguage l = act_bool(v, letters);
        languages.insert(l.words());
        report.languages.push_back(std::move(l));
    }
    report.distinct_languages = languages.size();
    report.distinct_vector_sets = vector_sets.size();
    return report;
}

bool verify_distinct_actions(int k) {
    const auto report = distinct_action_report(k);
    return report.languages_injective() && report.vectors_injective();
}

std::size_t count_distinct_languages(std::span<const FiniteLanguage> langs) {
    const int k = static_cast<int>(langs.size());
    check_arity(k, kMaxActionCheckArity, "distinct-language count");
    std::set<FiniteLanguage::Words> languages;
    PttEnumerator ptts(k);
    while (auto t = ptts.next()) {
        languages.insert(act_tilde(*t, langs).words());
    }
    return languages.size();
}

} // namespace multitilde
