#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multitilde/lang.hpp"
#include "multitilde/tilde.hpp"

namespace multitilde {

/// Largest arity accepted by the enumerators.
inline constexpr int kMaxEnumerationArity = 7;
/// Largest arity accepted by the language-level distinctness checks.
inline constexpr int kMaxActionCheckArity = 4;

struct CountReport {
    int arity = 0;
    std::uint64_t ptt_count = 0;
    std::string method;
    std::chrono::duration<double> elapsed{};
};

/// Pull-based stream of every pseudotransitive multitilde of arity k, each
/// exactly once, in lexicographic order of canonical pair lists.
///
/// The search adds pairs in lexicographic order to a prefix set S and keeps
/// the pseudotransitive closure of S in transitively closed bit rows. A prefix
/// whose closure adds a pair smaller than its last element can never be
/// completed to a closed set, so its subtree is pruned; a prefix equal to its
/// own closure is emitted.
class PttEnumerator {
public:
    /// Throws OutOfSupportedRange unless 1 <= k <= kMaxEnumerationArity.
    explicit PttEnumerator(int k);
    ~PttEnumerator();
    PttEnumerator(PttEnumerator&&) noexcept;
    PttEnumerator& operator=(PttEnumerator&&) noexcept;

    std::optional<Multitilde> next();

private:
    struct Search;
    std::unique_ptr<Search> search_;
};

/// All PTTs of arity k in stream order. With workers > 1 the first-level
/// branches are searched concurrently and concatenated in branch order, so the
/// result does not depend on the worker count. workers == 0 means one per
/// hardware thread.
std::vector<Multitilde> enumerate_ptt(int k, unsigned workers = 1);

/// Number of PTTs of arity k (p_k), with the same search and partitioning.
CountReport count_ptt(int k, unsigned workers = 1);

struct DistinctActionReport {
    int arity = 0;
    std::size_t ptt_count = 0;
    /// Distinct languages T({a_1}, ..., {a_k}) over all PTTs T.
    std::size_t distinct_languages = 0;
    /// Distinct vector sets V(T) over all PTTs T.
    std::size_t distinct_vector_sets = 0;
    std::vector<FiniteLanguage> languages;

    bool languages_injective() const { return distinct_languages == ptt_count; }
    bool vectors_injective() const { return distinct_vector_sets == ptt_count; }
};

/// Letters used for distinct-letter checks: a, b, c, d.
std::vector<FiniteLanguage> distinct_letters(int k);

/// Evaluates every PTT of arity k on distinct letters; languages are listed
/// in PTT stream order. Throws OutOfSupportedRange unless 1 <= k <= 4.
DistinctActionReport distinct_action_report(int k);

/// True iff both the language map and V are injective over PTTs of arity k.
bool verify_distinct_actions(int k);

/// |{ T(langs) : T a PTT of arity langs.size() }|. At most p_k.
std::size_t count_distinct_languages(std::span<const FiniteLanguage> langs);

} // namespace multitilde
