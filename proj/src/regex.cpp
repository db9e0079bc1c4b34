#include "fsmcalc/regex.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "fsmcalc/error.hpp"
#include "fsmcalc/operations.hpp"

namespace fsmcalc {

// ---------------------------------------------------------------------------
// Definitions

void Definitions::bind(const std::string &name, Network net) {
  if (auto it = index_.find(name); it != index_.end()) {
    entries_[it->second].second = std::move(net);
    return;
  }
  index_.emplace(name, entries_.size());
  entries_.emplace_back(name, std::move(net));
}

const Network *Definitions::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

// ---------------------------------------------------------------------------
// Tokenizer

namespace {

struct DotOperator {
  std::string_view text;
  TokenKind kind;
};

constexpr std::array<DotOperator, 5> kDotOperators{{
    {".<m.", TokenKind::MergeLeft},
    {".m>.", TokenKind::MergeRight},
    {".x.", TokenKind::Cross},
    {".o.", TokenKind::Compose},
    {".r", TokenKind::Reverse},
}};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_special(char c) {
  switch (c) {
  case '[': case ']': case '{': case '}': case '*': case '|': case '&':
  case '-': case '?': case ':': case '"': case '^': case '+':
    return true;
  default:
    return false;
  }
}

bool is_boundary(std::string_view text, std::size_t i) {
  return i >= text.size() || is_space(text[i]) || is_special(text[i]) || text[i] == '.';
}

const DotOperator *match_dot_operator(std::string_view text, std::size_t i) {
  for (const DotOperator &op : kDotOperators)
    if (text.substr(i).starts_with(op.text) && is_boundary(text, i + op.text.size()))
      return &op;
  return nullptr;
}

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

std::string_view single_char_text(TokenKind kind) {
  switch (kind) {
  case TokenKind::Colon: return ":";
  case TokenKind::LBracket: return "[";
  case TokenKind::RBracket: return "]";
  case TokenKind::LBrace: return "{";
  case TokenKind::RBrace: return "}";
  case TokenKind::Star: return "*";
  case TokenKind::Plus: return "+";
  case TokenKind::Caret: return "^";
  case TokenKind::Amp: return "&";
  case TokenKind::Bar: return "|";
  case TokenKind::Minus: return "-";
  case TokenKind::Any: return "?";
  case TokenKind::Zero: return "0";
  case TokenKind::Reverse: return ".r";
  case TokenKind::Cross: return ".x.";
  case TokenKind::Compose: return ".o.";
  case TokenKind::MergeLeft: return ".<m.";
  case TokenKind::MergeRight: return ".m>.";
  default: return {};
  }
}

} // namespace

std::vector<Token> tokenize(std::string_view text, const Definitions *defs) {
  std::vector<Token> tokens;
  auto emit = [&](TokenKind kind, std::string t, std::size_t offset, bool quoted = false) {
    tokens.push_back({kind, std::move(t), offset, quoted});
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;

    if (c == '"') {
      std::size_t close = text.find('"', i + 1);
      if (close == std::string_view::npos)
        throw RegexError("unterminated quote", start);
      if (close == i + 1)
        throw RegexError("empty quoted symbol", start);
      emit(TokenKind::Symbol, std::string(text.substr(i + 1, close - i - 1)), start, true);
      i = close + 1;
      continue;
    }

    if (c == '{') {
      emit(TokenKind::LBrace, "{", start);
      ++i;
      for (;;) {
        while (i < text.size() && is_space(text[i]))
          ++i;
        if (i >= text.size())
          throw RegexError("unterminated brace", start);
        if (text[i] == '}') {
          emit(TokenKind::RBrace, "}", i);
          ++i;
          break;
        }
        std::size_t len = std::min(utf8_length(static_cast<unsigned char>(text[i])),
                                   text.size() - i);
        emit(TokenKind::Symbol, std::string(text.substr(i, len)), i);
        i += len;
      }
      continue;
    }

    if (c == '.') {
      if (const DotOperator *op = match_dot_operator(text, i)) {
        emit(op->kind, std::string(op->text), start);
        i += op->text.size();
        continue;
      }
    }

    if (c == '+' && !is_boundary(text, i + 1)) {
      // `+Noun`: a tag symbol, not the plus operator.
    } else if (is_special(c)) {
      TokenKind kind{};
      switch (c) {
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case '}': throw RegexError("unbalanced '}'", start);
      case '*': kind = TokenKind::Star; break;
      case '+': kind = TokenKind::Plus; break;
      case '|': kind = TokenKind::Bar; break;
      case '&': kind = TokenKind::Amp; break;
      case '-': kind = TokenKind::Minus; break;
      case '?': kind = TokenKind::Any; break;
      case ':': kind = TokenKind::Colon; break;
      case '^': kind = TokenKind::Caret; break;
      default: break;
      }
      emit(kind, std::string(1, c), start);
      ++i;
      if (kind == TokenKind::Caret) {
        std::size_t j = i;
        while (j < text.size() && is_space(text[j]))
          ++j;
        std::size_t k = j;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
          ++k;
        if (k > j) {
          emit(TokenKind::Integer, std::string(text.substr(j, k - j)), j);
          i = k;
        }
      }
      continue;
    }

    // Symbol run.
    std::size_t j = i + 1;
    while (j < text.size() && !is_space(text[j]) && !is_special(text[j]) &&
           !(text[j] == '.' && match_dot_operator(text, j)))
      ++j;
    std::string run(text.substr(i, j - i));
    i = j;
    if (run == "0")
      emit(TokenKind::Zero, std::move(run), start);
    else if (defs && defs->contains(run))
      emit(TokenKind::DefRef, std::move(run), start);
    else
      emit(TokenKind::Symbol, std::move(run), start);
  }
  return tokens;
}

namespace {

bool needs_quotes(const std::string &name) {
  if (name.find('"') != std::string::npos)
    throw RegexError("symbol '" + name + "' cannot be written in regex source");
  std::vector<Token> probe;
  try {
    probe = tokenize(name);
  } catch (const RegexError &) {
    return true;
  }
  return probe.size() != 1 || probe[0].kind != TokenKind::Symbol || probe[0].text != name;
}

std::string symbol_source(const std::string &name, bool force_quotes = false) {
  if (force_quotes || needs_quotes(name))
    return '"' + name + '"';
  return name;
}

} // namespace

std::string join_tokens(const std::vector<Token> &tokens) {
  std::string out;
  for (const Token &tok : tokens) {
    if (!out.empty())
      out += ' ';
    switch (tok.kind) {
    case TokenKind::Symbol:
      out += symbol_source(tok.text, tok.quoted);
      break;
    case TokenKind::Integer:
    case TokenKind::DefRef:
      out += tok.text;
      break;
    default:
      out += single_char_text(tok.kind);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

using Kind = RegexAst::Kind;

class Parser {
public:
  explicit Parser(const std::vector<Token> &tokens) : tokens_(tokens) {}

  RegexAst parse_all() {
    if (tokens_.empty())
      return RegexAst::leaf(Kind::Epsilon);
    RegexAst ast = parse_compose();
    if (pos_ != tokens_.size())
      fail("unexpected token '" + tokens_[pos_].text + "'");
    return ast;
  }

private:
  const std::vector<Token> &tokens_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string &what) const {
    throw RegexError("syntax error: " + what, pos_);
  }
  bool at(TokenKind kind) const { return pos_ < tokens_.size() && tokens_[pos_].kind == kind; }
  bool accept(TokenKind kind) {
    if (!at(kind))
      return false;
    ++pos_;
    return true;
  }

  template <class Next>
  RegexAst binary(Next next, std::initializer_list<std::pair<TokenKind, Kind>> ops) {
    RegexAst left = (this->*next)();
    for (;;) {
      const std::pair<TokenKind, Kind> *found = nullptr;
      for (const auto &op : ops)
        if (at(op.first))
          found = &op;
      if (!found)
        return left;
      ++pos_;
      RegexAst right = (this->*next)();
      left = RegexAst::node(found->second, {std::move(left), std::move(right)});
    }
  }

  RegexAst parse_compose() { return binary(&Parser::parse_cross, {{TokenKind::Compose, Kind::Compose}}); }
  RegexAst parse_cross() { return binary(&Parser::parse_merge, {{TokenKind::Cross, Kind::Cross}}); }

  RegexAst parse_merge() {
    RegexAst left = parse_union();
    for (;;) {
      bool template_left;
      if (accept(TokenKind::MergeLeft))
        template_left = true;
      else if (accept(TokenKind::MergeRight))
        template_left = false;
      else
        return left;
      RegexAst right = parse_union();
      RegexAst node;
      node.kind = Kind::Merge;
      node.template_left = template_left;
      if (template_left)
        node.children = {std::move(left), std::move(right)};
      else
        node.children = {std::move(right), std::move(left)};
      left = std::move(node);
    }
  }

  RegexAst parse_union() { return binary(&Parser::parse_inter, {{TokenKind::Bar, Kind::Union}}); }
  RegexAst parse_inter() {
    return binary(&Parser::parse_concat,
                  {{TokenKind::Amp, Kind::Intersect}, {TokenKind::Minus, Kind::Subtract}});
  }

  bool starts_operand() const {
    return at(TokenKind::Symbol) || at(TokenKind::DefRef) || at(TokenKind::Zero) ||
           at(TokenKind::Any) || at(TokenKind::LBracket) || at(TokenKind::LBrace);
  }

  RegexAst parse_concat() {
    if (!starts_operand())
      fail(pos_ < tokens_.size() ? "unexpected token '" + tokens_[pos_].text + "'"
                                 : "unexpected end of expression");
    std::vector<RegexAst> parts;
    while (starts_operand())
      parts.push_back(parse_postfix());
    if (parts.size() == 1)
      return std::move(parts.front());
    return RegexAst::node(Kind::Concat, std::move(parts));
  }

  RegexAst parse_postfix() {
    RegexAst operand = parse_primary();
    for (;;) {
      if (accept(TokenKind::Star)) {
        operand = RegexAst::node(Kind::Star, {std::move(operand)});
      } else if (accept(TokenKind::Plus)) {
        operand = RegexAst::node(Kind::Plus, {std::move(operand)});
      } else if (accept(TokenKind::Reverse)) {
        operand = RegexAst::node(Kind::Reverse, {std::move(operand)});
      } else if (accept(TokenKind::Caret)) {
        if (!at(TokenKind::Integer))
          fail("'^' must be followed by an integer");
        RegexAst node = RegexAst::node(Kind::Repeat, {std::move(operand)});
        node.count = std::stoul(tokens_[pos_].text);
        ++pos_;
        operand = std::move(node);
      } else {
        return operand;
      }
    }
  }

  RegexAst parse_side() {
    if (accept(TokenKind::Zero))
      return RegexAst::leaf(Kind::Epsilon);
    if (at(TokenKind::Symbol))
      return RegexAst::leaf(Kind::Symbol, tokens_[pos_++].text);
    fail("expected a symbol in pair");
  }

  RegexAst parse_primary() {
    if (accept(TokenKind::LBracket)) {
      if (accept(TokenKind::RBracket))
        return RegexAst::leaf(Kind::Epsilon);
      RegexAst inner = parse_compose();
      if (!accept(TokenKind::RBracket))
        fail("expected ']'");
      return inner;
    }
    if (accept(TokenKind::LBrace)) {
      std::vector<RegexAst> symbols;
      while (at(TokenKind::Symbol))
        symbols.push_back(RegexAst::leaf(Kind::Symbol, tokens_[pos_++].text));
      if (!accept(TokenKind::RBrace))
        fail("expected '}'");
      if (symbols.empty())
        return RegexAst::leaf(Kind::Epsilon);
      if (symbols.size() == 1)
        return std::move(symbols.front());
      return RegexAst::node(Kind::Concat, std::move(symbols));
    }
    if (accept(TokenKind::Any))
      return RegexAst::leaf(Kind::Any);
    if (at(TokenKind::DefRef))
      return RegexAst::leaf(Kind::DefRef, tokens_[pos_++].text);
    if (at(TokenKind::Symbol) || at(TokenKind::Zero)) {
      RegexAst upper = parse_side();
      if (!accept(TokenKind::Colon))
        return upper;
      RegexAst lower = parse_side();
      return RegexAst::node(Kind::Pair, {std::move(upper), std::move(lower)});
    }
    fail(pos_ < tokens_.size() ? "unexpected token '" + tokens_[pos_].text + "'"
                               : "unexpected end of expression");
  }
};

} // namespace

RegexAst parse(const std::vector<Token> &tokens) { return Parser(tokens).parse_all(); }

// ---------------------------------------------------------------------------
// Printer

std::string print(const RegexAst &ast) {
  auto infix = [&](const char *op) {
    std::string out = "[ ";
    for (std::size_t i = 0; i < ast.children.size(); ++i) {
      if (i)
        out += std::string(" ") + op + " ";
      out += print(ast.children[i]);
    }
    return out + " ]";
  };
  auto postfix = [&](const std::string &op) {
    return "[ " + print(ast.children.at(0)) + " ] " + op;
  };
  switch (ast.kind) {
  case Kind::Symbol: return symbol_source(ast.text);
  case Kind::Epsilon: return "0";
  case Kind::Any: return "?";
  case Kind::DefRef: return ast.text;
  case Kind::Pair: return print(ast.children.at(0)) + ":" + print(ast.children.at(1));
  case Kind::Concat: {
    std::string out = "[";
    for (const RegexAst &child : ast.children)
      out += " " + print(child);
    return out + " ]";
  }
  case Kind::Union: return infix("|");
  case Kind::Intersect: return infix("&");
  case Kind::Subtract: return infix("-");
  case Kind::Cross: return infix(".x.");
  case Kind::Compose: return infix(".o.");
  case Kind::Star: return postfix("*");
  case Kind::Plus: return postfix("+");
  case Kind::Reverse: return postfix(".r");
  case Kind::Repeat: return postfix("^ " + std::to_string(ast.count));
  case Kind::Merge: {
    const std::string templ = print(ast.children.at(0));
    const std::string filler = print(ast.children.at(1));
    return ast.template_left ? "[ " + templ + " .<m. " + filler + " ]"
                             : "[ " + filler + " .m>. " + templ + " ]";
  }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Compiler

namespace {

class Compiler {
public:
  Compiler(const Definitions &defs, const ClassRegistry &classes, const SymbolTablePtr &table)
      : defs_(defs), classes_(classes), table_(table) {}

  Network run(const RegexAst &ast) {
    collect_alphabet(ast);
    return normalize(compile(ast));
  }

private:
  const Definitions &defs_;
  const ClassRegistry &classes_;
  const SymbolTablePtr &table_;
  std::set<SymbolId> alphabet_;

  const Network &lookup(const std::string &name) const {
    const Network *net = defs_.find(name);
    if (!net)
      throw RegexError("unbound definition '" + name + "'");
    if (net->table() != table_)
      throw TableMismatch();
    return *net;
  }

  void collect_alphabet(const RegexAst &ast) {
    switch (ast.kind) {
    case Kind::Symbol:
      alphabet_.insert(table_->intern(ast.text));
      break;
    case Kind::DefRef: {
      const auto &sigma = lookup(ast.text).sigma();
      alphabet_.insert(sigma.begin(), sigma.end());
      break;
    }
    default:
      for (const RegexAst &child : ast.children)
        collect_alphabet(child);
    }
  }

  SymbolId side_symbol(const RegexAst &leaf) {
    return leaf.kind == Kind::Epsilon ? kEpsilon : table_->intern(leaf.text);
  }

  Network compile(const RegexAst &ast) {
    switch (ast.kind) {
    case Kind::Symbol: {
      SymbolId s = table_->intern(ast.text);
      return atom(table_, s, s);
    }
    case Kind::Epsilon:
      return epsilon_network(table_);
    case Kind::Any: {
      if (alphabet_.empty())
        return empty_network(table_);
      NetworkBuilder b(table_);
      StateId s = b.add_state();
      StateId t = b.add_state(true);
      for (SymbolId sym : alphabet_)
        b.add_arc(s, {sym, sym}, t);
      return std::move(b).build();
    }
    case Kind::DefRef:
      return lookup(ast.text);
    case Kind::Pair:
      return atom(table_, side_symbol(ast.children.at(0)), side_symbol(ast.children.at(1)));
    case Kind::Concat: {
      if (std::all_of(ast.children.begin(), ast.children.end(),
                      [](const RegexAst &c) { return c.kind == Kind::Symbol; })) {
        Word word;
        for (const RegexAst &c : ast.children)
          word.push_back(table_->intern(c.text));
        return string_network(table_, word);
      }
      Network result = compile(ast.children.at(0));
      for (std::size_t i = 1; i < ast.children.size(); ++i)
        result = concatenate(result, compile(ast.children[i]));
      return result;
    }
    case Kind::Union:
      return fold(ast, unite);
    case Kind::Intersect:
      return fold(ast, intersect);
    case Kind::Subtract:
      return fold(ast, subtract);
    case Kind::Cross:
      return fold(ast, crossproduct);
    case Kind::Compose:
      return fold(ast, compose);
    case Kind::Star:
      return star(compile(ast.children.at(0)));
    case Kind::Plus:
      return plus(compile(ast.children.at(0)));
    case Kind::Repeat:
      return repeat(compile(ast.children.at(0)), ast.count);
    case Kind::Reverse:
      return reverse(compile(ast.children.at(0)));
    case Kind::Merge:
      return merge(compile(ast.children.at(0)), compile(ast.children.at(1)), classes_);
    }
    throw RegexError("unknown node");
  }

  Network fold(const RegexAst &ast, Network (*op)(const Network &, const Network &)) {
    Network result = compile(ast.children.at(0));
    for (std::size_t i = 1; i < ast.children.size(); ++i)
      result = op(result, compile(ast.children[i]));
    return result;
  }
};

} // namespace

Network compile(const RegexAst &ast, const Definitions &defs, const ClassRegistry &classes,
                const SymbolTablePtr &table) {
  return Compiler(defs, classes, table).run(ast);
}

Network compile_regex(std::string_view source, const Definitions &defs,
                      const ClassRegistry &classes, const SymbolTablePtr &table) {
  return compile(parse(tokenize(source, &defs)), defs, classes, table);
}

} // namespace fsmcalc

namespace fsmcalc {

std::vector<std::string> utf8_characters(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t len = std::min(utf8_length(static_cast<unsigned char>(text[i])),
                               text.size() - i);
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

} // namespace fsmcalc
