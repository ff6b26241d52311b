#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "multitilde/lang.hpp"
#include "multitilde/tilde.hpp"

namespace multitilde {

class Emtre;

namespace expr {
struct Empty {};
struct Epsilon {};
struct Letter {
    Symbol symbol;
};
struct Sum;
struct Cat;
struct Star;
struct Tilde;
} // namespace expr

/// Regular expression extended with multitilde nodes. Immutable; subtrees are
/// shared between copies.
class Emtre {
public:
    using Node = std::variant<expr::Empty, expr::Epsilon, expr::Letter, expr::Sum, expr::Cat, expr::Star, expr::Tilde>;

    static Emtre empty();
    static Emtre epsilon();
    static Emtre letter(Symbol a);
    static Emtre sum(Emtre left, Emtre right);
    static Emtre cat(Emtre left, Emtre right);
    static Emtre star(Emtre child);
    /// Throws ArityMismatch unless children.size() == t.arity().
    static Emtre tilde(Multitilde t, std::vector<Emtre> children);

    const Node& node() const;

    /// Structural equality.
    friend bool operator==(const Emtre& a, const Emtre& b);

private:
    explicit Emtre(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

namespace expr {
struct Sum {
    Emtre left;
    Emtre right;
};
struct Cat {
    Emtre left;
    Emtre right;
};
struct Star {
    Emtre child;
};
struct Tilde {
    Multitilde tilde;
    std::vector<Emtre> children;
};
} // namespace expr

inline const Emtre::Node& Emtre::node() const { return *node_; }

/// Parses the concrete syntax
///
///     expr   := term ('+' term)*
///     term   := factor+
///     factor := atom '*'*
///     atom   := '0' | '1' | letter | '(' expr ')' | '~{[' pairs ']}(' expr (',' expr)* ')'
///     pairs  := ( '(' int ',' int ')' (',' '(' int ',' int ')')* )?
///
/// '0' is the empty set, '1' is epsilon, a letter is any other single ASCII
/// alphanumeric. Whitespace is ignored. Throws ParseError on malformed input and
/// ArityMismatch when a tilde literal's pairs exceed its child count.
Emtre parse(std::string_view input);

/// Prints in the syntax accepted by parse (minimal parentheses).
std::string to_string(const Emtre& e);

bool contains_star(const Emtre& e);

/// Number of leaves after compilation: one per atom, plus one empty leaf per sum.
std::size_t compiled_leaf_count(const Emtre& e);

/// A leaf of a compiled operator: a single letter, or nullopt for the empty set.
using LeafSymbol = std::optional<Symbol>;

FiniteLanguage leaf_language(const LeafSymbol& leaf);
std::vector<FiniteLanguage> leaf_languages(std::span<const LeafSymbol> leaves);

/// A single multitilde applied to letters and empty-set leaves.
struct CompiledTilde {
    Multitilde tilde;
    std::vector<LeafSymbol> leaves;

    FiniteLanguage language() const;
};

/// Compiles a star-free expression into one multitilde acting on leaves that
/// are single letters or the empty set, via
///   0 = {}(0), 1 = {(1,1)}(0), a = {}(a),
///   E1 + E2 = {(1,2),(2,3)}(E1, 0, E2), E1 E2 = {}(E1, E2),
/// with nested operators flattened by full composition. Throws StarNotSupported
/// if the expression contains a star.
CompiledTilde compile_star_free(const Emtre& e);

/// Words of L(e) of length <= max_len. Exact for every operator, including star.
FiniteLanguage eval_emtre(const Emtre& e, std::size_t max_len = kUnbounded);

// Star trees ---------------------------------------------------------------

class StarTree;

namespace star_tree {
struct Leaf {
    int index;
};
struct Star;
struct Tilde;
} // namespace star_tree

/// An element of the operad generated by multitildes and a unary star,
/// applied to numbered leaves (1-based).
class StarTree {
public:
    using Node = std::variant<star_tree::Leaf, star_tree::Star, star_tree::Tilde>;

    static StarTree leaf(int index);
    static StarTree star(StarTree child);
    /// Throws ArityMismatch unless children.size() == t.arity().
    static StarTree tilde(Multitilde t, std::vector<StarTree> children);

    const Node& node() const;

    friend bool operator==(const StarTree& a, const StarTree& b);

private:
    explicit StarTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

namespace star_tree {
struct Star {
    StarTree child;
};
struct Tilde {
    Multitilde tilde;
    std::vector<StarTree> children;
};
} // namespace star_tree

inline const StarTree::Node& StarTree::node() const { return *node_; }

std::string to_string(const StarTree& s);

std::size_t leaf_count(const StarTree& s);

/// Collapses star(star(x)) to star(x) and merges a tilde child into its parent
/// by partial composition, bottom-up. Idempotent.
StarTree normalize(const StarTree& s);

bool is_normalized(const StarTree& s);

/// Bottom-up evaluation: leaf i is leaves[i-1], tildes act on their children,
/// stars are bounded Kleene stars. Result is the length <= max_len slice.
/// Throws ArityMismatch when the leaf count or a leaf index does not match.
FiniteLanguage eval_star_tree(const StarTree& s, std::span<const FiniteLanguage> leaves, std::size_t max_len);

/// A star tree over letter and empty-set leaves denoting the same language as
/// a regular expression.
struct CompiledStarTree {
    StarTree tree;
    std::vector<LeafSymbol> leaves;
};

/// Translates e with the same rules as compile_star_free, keeping stars as
/// star nodes, then normalizes.
CompiledStarTree compile_regular(const Emtre& e);

} // namespace multitilde
