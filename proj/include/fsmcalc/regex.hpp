#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fsmcalc/merge.hpp"
#include "fsmcalc/network.hpp"

namespace fsmcalc {

/// Named networks, kept in insertion order. Rebinding a name replaces its
/// value in place.
class Definitions {
public:
  void bind(const std::string &name, Network net);
  const Network *find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  const std::vector<std::pair<std::string, Network>> &entries() const { return entries_; }

private:
  std::vector<std::pair<std::string, Network>> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class TokenKind {
  Symbol,
  Colon,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Star,
  Plus,
  Caret,
  Integer,
  Amp,
  Bar,
  Minus,
  Reverse,
  Any,
  Zero,
  Cross,
  Compose,
  MergeLeft,  // .<m.  template on the left
  MergeRight, // .m>.  template on the right
  DefRef,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset = 0;
  bool quoted = false;

  friend bool operator==(const Token &a, const Token &b) {
    return a.kind == b.kind && a.text == b.text;
  }
};

/// Splits regex source into tokens. Bare words that name an entry of
/// `defs` become DefRef tokens. Throws RegexError on an unterminated quote
/// or brace.
std::vector<Token> tokenize(std::string_view text, const Definitions *defs = nullptr);

/// Joins token texts with single spaces, quoting where needed so the result
/// re-tokenizes to the same stream.
std::string join_tokens(const std::vector<Token> &tokens);

struct RegexAst {
  enum class Kind {
    Symbol,
    Pair,    // children: two leaves (Symbol or Epsilon)
    Epsilon,
    Any,
    DefRef,
    Concat,
    Union,
    Intersect,
    Subtract,
    Star,
    Plus,
    Repeat,  // count
    Reverse,
    Cross,
    Compose,
    Merge,   // children: template, filler; template_left records the operator
  };

  Kind kind = Kind::Epsilon;
  std::string text;
  std::size_t count = 0;
  bool template_left = true;
  std::vector<RegexAst> children;

  static RegexAst leaf(Kind kind, std::string text = {}) {
    RegexAst node;
    node.kind = kind;
    node.text = std::move(text);
    return node;
  }
  static RegexAst node(Kind kind, std::vector<RegexAst> children) {
    RegexAst n;
    n.kind = kind;
    n.children = std::move(children);
    return n;
  }
};

/// Recursive-descent parser. Binding strength, tightest first:
/// postfix (`*` `+` `^n` `.r`), concatenation, `&` `-`, `|`,
/// `.<m.` `.m>.`, `.x.`, `.o.`; all binary operators are left-associative.
RegexAst parse(const std::vector<Token> &tokens);

/// Fully bracketed source for `ast`; parse(tokenize(print(ast))) gives back
/// an equivalent tree.
std::string print(const RegexAst &ast);

/// Maps the tree onto network operations. `?` stands for any symbol of the
/// whole expression's alphabet (its literal symbols plus the alphabets of
/// referenced definitions). The result is normalized.
Network compile(const RegexAst &ast, const Definitions &defs,
                const ClassRegistry &classes, const SymbolTablePtr &table);

/// tokenize + parse + compile.
Network compile_regex(std::string_view source, const Definitions &defs,
                      const ClassRegistry &classes, const SymbolTablePtr &table);

} // namespace fsmcalc

namespace fsmcalc {

/// Splits UTF-8 text into one string per code point. Malformed lead bytes
/// are taken as single bytes.
std::vector<std::string> utf8_characters(std::string_view text);

} // namespace fsmcalc
