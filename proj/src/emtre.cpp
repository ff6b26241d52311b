#include "multitilde/emtre.hpp"

#include <cctype>
#include <charconv>

#include "multitilde/error.hpp"

namespace multitilde {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Construction ---------------------------------------------------------------

Emtre Emtre::empty() { return Emtre(std::make_shared<const Node>(expr::Empty{})); }
Emtre Emtre::epsilon() { return Emtre(std::make_shared<const Node>(expr::Epsilon{})); }
Emtre Emtre::letter(Symbol a) { return Emtre(std::make_shared<const Node>(expr::Letter{std::move(a)})); }

Emtre Emtre::sum(Emtre left, Emtre right) {
    return Emtre(std::make_shared<const Node>(expr::Sum{std::move(left), std::move(right)}));
}

Emtre Emtre::cat(Emtre left, Emtre right) {
    return Emtre(std::make_shared<const Node>(expr::Cat{std::move(left), std::move(right)}));
}

Emtre Emtre::star(Emtre child) { return Emtre(std::make_shared<const Node>(expr::Star{std::move(child)})); }

Emtre Emtre::tilde(Multitilde t, std::vector<Emtre> children) {
    if (static_cast<int>(children.size()) != t.arity()) {
        throw ArityMismatch("tilde node of arity " + std::to_string(t.arity()) + " has " +
                            std::to_string(children.size()) + " children");
    }
    return Emtre(std::make_shared<const Node>(expr::Tilde{std::move(t), std::move(children)}));
}

bool operator==(const Emtre& a, const Emtre& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.node().index() != b.node().index()) {
        return false;
    }
    return std::visit(
        overloaded{
            [](const expr::Empty&) { return true; },
            [](const expr::Epsilon&) { return true; },
            [&](const expr::Letter& l) { return l.symbol == std::get<expr::Letter>(b.node()).symbol; },
            [&](const expr::Sum& s) {
                const auto& o = std::get<expr::Sum>(b.node());
                return s.left == o.left && s.right == o.right;
            },
            [&](const expr::Cat& c) {
                const auto& o = std::get<expr::Cat>(b.node());
                return c.left == o.left && c.right == o.right;
            },
            [&](const expr::Star& s) { return s.child == std::get<expr::Star>(b.node()).child; },
            [&](const expr::Tilde& t) {
                const auto& o = std::get<expr::Tilde>(b.node());
                return t.tilde == o.tilde && t.children == o.children;
            },
        },
        a.node());
}

// Parsing --------------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(std::string_view input) : input_(input) {}

    Emtre parse_all() {
        Emtre e = parse_expr();
        skip_space();
        if (pos_ != input_.size()) {
            fail(std::string("unexpected '") + input_[pos_] + "'");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_space() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_space();
        return pos_ >= input_.size();
    }

    char peek() {
        skip_space();
        return pos_ < input_.size() ? input_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) {
            if (pos_ >= input_.size()) {
                fail(std::string("expected '") + c + "' but input ended");
            }
            fail(std::string("expected '") + c + "' but found '" + input_[pos_] + "'");
        }
        ++pos_;
    }

    static bool starts_atom(char c) {
        return c == '(' || c == '~' || std::isalnum(static_cast<unsigned char>(c)) != 0;
    }

    Emtre parse_expr() {
        Emtre left = parse_term();
        while (peek() == '+') {
            ++pos_;
            left = Emtre::sum(std::move(left), parse_term());
        }
        return left;
    }

    Emtre parse_term() {
        if (at_end() || !starts_atom(peek())) {
            if (at_end()) {
                fail("expected an expression but input ended");
            }
            fail(std::string("expected an expression but found '") + input_[pos_] + "'");
        }
        Emtre left = parse_factor();
        while (!at_end() && starts_atom(peek())) {
            left = Emtre::cat(std::move(left), parse_factor());
        }
        return left;
    }

    Emtre parse_factor() {
        Emtre e = parse_atom();
        while (peek() == '*') {
            ++pos_;
            e = Emtre::star(std::move(e));
        }
        return e;
    }

    Emtre parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Emtre e = parse_expr();
            expect(')');
            return e;
        }
        if (c == '~') {
            return parse_tilde();
        }
        ++pos_;
        if (c == '0') {
            return Emtre::empty();
        }
        if (c == '1') {
            return Emtre::epsilon();
        }
        return Emtre::letter(std::string(1, c));
    }

    int parse_int() {
        skip_space();
        int value = 0;
        const char* first = input_.data() + pos_;
        const char* last = input_.data() + input_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) {
            fail("expected an integer");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    Emtre parse_tilde() {
        const std::size_t start = pos_;
        expect('~');
        expect('{');
        expect('[');
        std::vector<Pair> pairs;
        if (peek() != ']') {
            while (true) {
                expect('(');
                const int x = parse_int();
                expect(',');
                const int y = parse_int();
                expect(')');
                pairs.push_back({x, y});
                if (peek() != ',') {
                    break;
                }
                ++pos_;
            }
        }
        expect(']');
        expect('}');
        expect('(');
        std::vector<Emtre> children;
        children.push_back(parse_expr());
        while (peek() == ',') {
            ++pos_;
            children.push_back(parse_expr());
        }
        expect(')');
        const int arity = static_cast<int>(children.size());
        for (const Pair& p : pairs) {
            if (p.x < 1 || p.x > p.y) {
                throw ParseError("tilde pair " + to_string(p) + " must satisfy 1 <= x <= y", start);
            }
            if (p.y > arity) {
                throw ArityMismatch("tilde literal at offset " + std::to_string(start) + " has pair " + to_string(p) +
                                    " but only " + std::to_string(arity) + " operands");
            }
        }
        return Emtre::tilde(Multitilde(arity, std::move(pairs)), std::move(children));
    }

    std::string_view input_;
    std::size_t pos_ = 0;
};

enum Precedence { kSum = 0, kCat = 1, kStar = 2, kAtom = 3 };

int precedence(const Emtre& e) {
    return std::visit(overloaded{
                          [](const expr::Sum&) { return int{kSum}; },
                          [](const expr::Cat&) { return int{kCat}; },
                          [](const expr::Star&) { return int{kStar}; },
                          [](const auto&) { return int{kAtom}; },
                      },
                      e.node());
}

std::string print(const Emtre& e, int context);

std::string wrap(const Emtre& e, int context) {
    std::string s = print(e, context);
    return precedence(e) < context ? "(" + s + ")" : s;
}

std::string print(const Emtre& e, int /*context*/) {
    return std::visit(overloaded{
                          [](const expr::Empty&) { return std::string("0"); },
                          [](const expr::Epsilon&) { return std::string("1"); },
                          [](const expr::Letter& l) { return l.symbol; },
                          [](const expr::Sum& s) { return wrap(s.left, kSum) + "+" + wrap(s.right, kCat); },
                          [](const expr::Cat& c) { return wrap(c.left, kCat) + wrap(c.right, kStar); },
                          [](const expr::Star& s) { return wrap(s.child, kStar) + "*"; },
                          [](const expr::Tilde& t) {
                              std::string out = "~{[";
                              bool first = true;
                              for (const Pair& p : t.tilde.pairs()) {
                                  if (!first) {
                                      out += ',';
                                  }
                                  first = false;
                                  out += to_string(p);
                              }
                              out += "]}(";
                              for (std::size_t i = 0; i < t.children.size(); ++i) {
                                  if (i > 0) {
                                      out += ',';
                                  }
                                  out += wrap(t.children[i], kSum);
                              }
                              return out + ")";
                          },
                      },
                      e.node());
}

} // namespace

Emtre parse(std::string_view input) { return Parser(input).parse_all(); }

std::string to_string(const Emtre& e) { return print(e, kSum); }

bool contains_star(const Emtre& e) {
    return std::visit(overloaded{
                          [](const expr::Sum& s) { return contains_star(s.left) || contains_star(s.right); },
                          [](const expr::Cat& c) { return contains_star(c.left) || contains_star(c.right); },
                          [](const expr::Star&) { return true; },
                          [](const expr::Tilde& t) {
                              for (const auto& c : t.children) {
                                  if (contains_star(c)) {
                                      return true;
                                  }
                              }
                              return false;
                          },
                          [](const auto&) { return false; },
                      },
                      e.node());
}

std::size_t compiled_leaf_count(const Emtre& e) {
    return std::visit(overloaded{
                          [](const expr::Sum& s) { return compiled_leaf_count(s.left) + 1 + compiled_leaf_count(s.right); },
                          [](const expr::Cat& c) { return compiled_leaf_count(c.left) + compiled_leaf_count(c.right); },
                          [](const expr::Star& s) { return compiled_leaf_count(s.child); },
                          [](const expr::Tilde& t) {
                              std::size_t n = 0;
                              for (const auto& c : t.children) {
                                  n += compiled_leaf_count(c);
                              }
                              return n;
                          },
                          [](const auto&) { return std::size_t{1}; },
                      },
                      e.node());
}

// Compilation ----------------------------------------------------------------

FiniteLanguage leaf_language(const LeafSymbol& leaf) {
    return leaf ? FiniteLanguage::letter(*leaf) : FiniteLanguage::none();
}

std::vector<FiniteLanguage> leaf_languages(std::span<const LeafSymbol> leaves) {
    std::vector<FiniteLanguage> out;
    out.reserve(leaves.size());
    for (const auto& leaf : leaves) {
        out.push_back(leaf_language(leaf));
    }
    return out;
}

FiniteLanguage CompiledTilde::language() const { return act_tilde(tilde, leaf_languages(leaves)); }

namespace {

const Multitilde& sum_tilde() {
    static const Multitilde t(3, {{1, 2}, {2, 3}});
    return t;
}

const Multitilde& cat_tilde() {
    static const Multitilde t(2);
    return t;
}

CompiledTilde compose_compiled(const Multitilde& outer, std::vector<CompiledTilde> parts) {
    std::vector<Multitilde> args;
    std::vector<LeafSymbol> leaves;
    for (auto& part : parts) {
        args.push_back(std::move(part.tilde));
        leaves.insert(leaves.end(), part.leaves.begin(), part.leaves.end());
    }
    return {compose_full(outer, args), std::move(leaves)};
}

CompiledTilde compile(const Emtre& e) {
    return std::visit(
        overloaded{
            [](const expr::Empty&) { return CompiledTilde{Multitilde(1), {std::nullopt}}; },
            [](const expr::Epsilon&) { return CompiledTilde{Multitilde(1, {{1, 1}}), {std::nullopt}}; },
            [](const expr::Letter& l) { return CompiledTilde{Multitilde(1), {l.symbol}}; },
            [](const expr::Sum& s) {
                return compose_compiled(sum_tilde(),
                                        {compile(s.left), CompiledTilde{identity(), {std::nullopt}}, compile(s.right)});
            },
            [](const expr::Cat& c) { return compose_compiled(cat_tilde(), {compile(c.left), compile(c.right)}); },
            [](const expr::Star&) -> CompiledTilde {
                throw StarNotSupported("star-free compilation received an expression with a Kleene star");
            },
            [](const expr::Tilde& t) {
                std::vector<CompiledTilde> parts;
                for (const auto& c : t.children) {
                    parts.push_back(compile(c));
                }
                return compose_compiled(t.tilde, std::move(parts));
            },
        },
        e.node());
}

} // namespace

CompiledTilde compile_star_free(const Emtre& e) {
    if (contains_star(e)) {
        throw StarNotSupported("star-free compilation received an expression with a Kleene star");
    }
    return compile(e);
}

FiniteLanguage eval_emtre(const Emtre& e, std::size_t max_len) {
    return std::visit(
        overloaded{
            [](const expr::Empty&) { return FiniteLanguage::none(); },
            [](const expr::Epsilon&) { return FiniteLanguage::epsilon(); },
            [&](const expr::Letter& l) {
                return max_len >= 1 ? FiniteLanguage::letter(l.symbol) : FiniteLanguage::none();
            },
            [&](const expr::Sum& s) { return unite(eval_emtre(s.left, max_len), eval_emtre(s.right, max_len)); },
            [&](const expr::Cat& c) {
                return catenate(eval_emtre(c.left, max_len), eval_emtre(c.right, max_len), max_len);
            },
            [&](const expr::Star& s) {
                if (max_len == kUnbounded) {
                    throw InvalidValue("evaluating a starred expression needs a finite length bound");
                }
                return multitilde::star(eval_emtre(s.child, max_len), max_len);
            },
            [&](const expr::Tilde& t) {
                std::vector<FiniteLanguage> langs;
                for (const auto& c : t.children) {
                    langs.push_back(eval_emtre(c, max_len));
                }
                return act_tilde(t.tilde, langs, max_len);
            },
        },
        e.node());
}

// Star trees -----------------------------------------------------------------

StarTree StarTree::leaf(int index) {
    if (index < 1) {
        throw InvalidValue("star-tree leaf indices start at 1, got " + std::to_string(index));
    }
    return StarTree(std::make_shared<const Node>(star_tree::Leaf{index}));
}

StarTree StarTree::star(StarTree child) {
    return StarTree(std::make_shared<const Node>(star_tree::Star{std::move(child)}));
}

StarTree StarTree::tilde(Multitilde t, std::vector<StarTree> children) {
    if (static_cast<int>(children.size()) != t.arity()) {
        throw ArityMismatch("star-tree tilde node of arity " + std::to_string(t.arity()) + " has " +
                            std::to_string(children.size()) + " children");
    }
    return StarTree(std::make_shared<const Node>(star_tree::Tilde{std::move(t), std::move(children)}));
}

bool operator==(const StarTree& a, const StarTree& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.node().index() != b.node().index()) {
        return false;
    }
    return std::visit(overloaded{
                          [&](const star_tree::Leaf& l) { return l.index == std::get<star_tree::Leaf>(b.node()).index; },
                          [&](const star_tree::Star& s) { return s.child == std::get<star_tree::Star>(b.node()).child; },
                          [&](const star_tree::Tilde& t) {
                              const auto& o = std::get<star_tree::Tilde>(b.node());
                              return t.tilde == o.tilde && t.children == o.children;
                          },
                      },
                      a.node());
}

std::string to_string(const StarTree& s) {
    return std::visit(overloaded{
                          [](const star_tree::Leaf& l) { return "#" + std::to_string(l.index); },
                          [](const star_tree::Star& st) { return "star(" + to_string(st.child) + ")"; },
                          [](const star_tree::Tilde& t) {
                              std::string out = to_string(t.tilde) + "(";
                              for (std::size_t i = 0; i < t.children.size(); ++i) {
                                  if (i > 0) {
                                      out += ", ";
                                  }
                                  out += to_string(t.children[i]);
                              }
                              return out + ")";
                          },
                      },
                      s.node());
}

namespace {

void collect_leaves(const StarTree& s, std::vector<int>& out) {
    std::visit(overloaded{
                   [&](const star_tree::Leaf& l) { out.push_back(l.index); },
                   [&](const star_tree::Star& st) { collect_leaves(st.child, out); },
                   [&](const star_tree::Tilde& t) {
                       for (const auto& c : t.children) {
                           collect_leaves(c, out);
                       }
                   },
               },
               s.node());
}

} // namespace

std::size_t leaf_count(const StarTree& s) {
    std::vector<int> indices;
    collect_leaves(s, indices);
    return indices.size();
}

StarTree normalize(const StarTree& s) {
    return std::visit(
        overloaded{
            [&](const star_tree::Leaf&) { return s; },
            [](const star_tree::Star& st) {
                StarTree child = normalize(st.child);
                if (std::holds_alternative<star_tree::Star>(child.node())) {
                    return child;
                }
                return StarTree::star(std::move(child));
            },
            [](const star_tree::Tilde& t) {
                Multitilde merged = t.tilde;
                std::vector<StarTree> children;
                // Slot of the current child in `merged`, which grows as tilde
                // children are composed in.
                int slot = 1;
                for (const auto& c : t.children) {
                    StarTree child = normalize(c);
                    if (const auto* inner = std::get_if<star_tree::Tilde>(&child.node())) {
                        merged = compose_partial(merged, slot, inner->tilde);
                        children.insert(children.end(), inner->children.begin(), inner->children.end());
                        slot += inner->tilde.arity();
                    } else {
                        children.push_back(std::move(child));
                        ++slot;
                    }
                }
                return StarTree::tilde(std::move(merged), std::move(children));
            },
        },
        s.node());
}

bool is_normalized(const StarTree& s) {
    return std::visit(overloaded{
                          [](const star_tree::Leaf&) { return true; },
                          [](const star_tree::Star& st) {
                              return !std::holds_alternative<star_tree::Star>(st.child.node()) &&
                                     is_normalized(st.child);
                          },
                          [](const star_tree::Tilde& t) {
                              for (const auto& c : t.children) {
                                  if (std::holds_alternative<star_tree::Tilde>(c.node()) || !is_normalized(c)) {
                                      return false;
                                  }
                              }
                              return true;
                          },
                      },
                      s.node());
}

namespace {

FiniteLanguage eval_tree(const StarTree& s, std::span<const FiniteLanguage> leaves, std::size_t max_len) {
    return std::visit(overloaded{
                          [&](const star_tree::Leaf& l) {
                              return leaves[static_cast<std::size_t>(l.index - 1)].truncated(max_len);
                          },
                          [&](const star_tree::Star& st) {
                              return multitilde::star(eval_tree(st.child, leaves, max_len), max_len);
                          },
                          [&](const star_tree::Tilde& t) {
                              std::vector<FiniteLanguage> langs;
                              for (const auto& c : t.children) {
                                  langs.push_back(eval_tree(c, leaves, max_len));
                              }
                              return act_tilde(t.tilde, langs, max_len);
                          },
                      },
                      s.node());
}

} // namespace

FiniteLanguage eval_star_tree(const StarTree& s, std::span<const FiniteLanguage> leaves, std::size_t max_len) {
    std::vector<int> indices;
    collect_leaves(s, indices);
    if (indices.size() != leaves.size()) {
        throw ArityMismatch("star tree has " + std::to_string(indices.size()) + " leaves but " +
                            std::to_string(leaves.size()) + " languages were given");
    }
    for (int i : indices) {
        if (i > static_cast<int>(leaves.size())) {
            throw ArityMismatch("star-tree leaf #" + std::to_string(i) + " has no language");
        }
    }
    return eval_tree(s, leaves, max_len);
}

namespace {

StarTree translate(const Emtre& e, std::vector<LeafSymbol>& leaves) {
    auto next_leaf = [&](LeafSymbol symbol) {
        leaves.push_back(std::move(symbol));
        return StarTree::leaf(static_cast<int>(leaves.size()));
    };
    return std::visit(
        overloaded{
            [&](const expr::Empty&) { return StarTree::tilde(Multitilde(1), {next_leaf(std::nullopt)}); },
            [&](const expr::Epsilon&) { return StarTree::tilde(Multitilde(1, {{1, 1}}), {next_leaf(std::nullopt)}); },
            [&](const expr::Letter& l) { return next_leaf(l.symbol); },
            [&](const expr::Sum& s) {
                StarTree left = translate(s.left, leaves);
                StarTree middle = next_leaf(std::nullopt);
                StarTree right = translate(s.right, leaves);
                return StarTree::tilde(sum_tilde(), {std::move(left), std::move(middle), std::move(right)});
            },
            [&](const expr::Cat& c) {
                StarTree left = translate(c.left, leaves);
                StarTree right = translate(c.right, leaves);
                return StarTree::tilde(cat_tilde(), {std::move(left), std::move(right)});
            },
            [&](const expr::Star& st) { return StarTree::star(translate(st.child, leaves)); },
            [&](const expr::Tilde& t) {
                std::vector<StarTree> children;
                for (const auto& c : t.children) {
                    children.push_back(translate(c, leaves));
                }
                return StarTree::tilde(t.tilde, std::move(children));
            },
        },
        e.node());
}

} // namespace

CompiledStarTree compile_regular(const Emtre& e) {
    std::vector<LeafSymbol> leaves;
    StarTree tree = translate(e, leaves);
    return {normalize(tree), std::move(leaves)};
}

} // namespace multitilde
