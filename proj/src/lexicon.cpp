#include "fsmcalc/lexicon.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "fsmcalc/error.hpp"
#include "fsmcalc/operations.hpp"
#include "raw_network.hpp"

namespace fsmcalc {

namespace {

struct LexToken {
  enum class Kind { Word, Colon, Semicolon } kind;
  std::string text;
  bool quoted = false;
  std::size_t line = 0;
};

std::vector<LexToken> scan(std::string_view text) {
  std::vector<LexToken> tokens;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '!') {
      while (i < text.size() && text[i] != '\n')
        ++i;
    } else if (c == ':') {
      tokens.push_back({LexToken::Kind::Colon, ":", false, line});
      ++i;
    } else if (c == ';') {
      tokens.push_back({LexToken::Kind::Semicolon, ";", false, line});
      ++i;
    } else if (c == '"') {
      std::size_t close = text.find('"', i + 1);
      if (close == std::string_view::npos)
        throw FormatError("unterminated quote", line);
      std::string word(text.substr(i + 1, close - i - 1));
      if (word.empty() || word.find('\n') != std::string::npos)
        throw FormatError("bad quoted symbol", line);
      tokens.push_back({LexToken::Kind::Word, std::move(word), true, line});
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r' &&
             text[j] != '\n' && text[j] != ':' && text[j] != ';' && text[j] != '"' &&
             text[j] != '!')
        ++j;
      tokens.push_back({LexToken::Kind::Word, std::string(text.substr(i, j - i)), false, line});
      i = j;
    }
  }
  return tokens;
}

std::vector<std::string> side_tokens(std::vector<LexToken>::const_iterator begin,
                                     std::vector<LexToken>::const_iterator end) {
  std::vector<std::string> out;
  for (auto it = begin; it != end; ++it)
    out.push_back(!it->quoted && it->text == "0" ? std::string(kEpsilonName) : it->text);
  return out;
}

} // namespace

const LexiconSection *LexiconSource::find(std::string_view name) const {
  for (const LexiconSection &section : sections)
    if (section.name == name)
      return &section;
  return nullptr;
}

LexiconSource parse_lexicon(std::string_view text) {
  const std::vector<LexToken> tokens = scan(text);
  LexiconSource source;
  bool in_section = false;
  std::vector<LexToken> pending;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const LexToken &tok = tokens[i];
    if (pending.empty() && tok.kind == LexToken::Kind::Word && !tok.quoted &&
        tok.text == "LEXICON") {
      if (i + 1 >= tokens.size() || tokens[i + 1].kind != LexToken::Kind::Word)
        throw FormatError("LEXICON without a name", tok.line);
      const std::string &name = tokens[++i].text;
      if (source.find(name))
        throw FormatError("duplicate LEXICON '" + name + "'", tok.line);
      source.sections.push_back({name, {}});
      in_section = true;
      continue;
    }
    if (tok.kind != LexToken::Kind::Semicolon) {
      pending.push_back(tok);
      continue;
    }
    if (!in_section)
      throw FormatError("entry before the first LEXICON", tok.line);
    if (pending.empty() || pending.back().kind != LexToken::Kind::Word || pending.back().quoted)
      throw FormatError("entry without a continuation", tok.line);

    LexiconEntry entry;
    entry.line = pending.front().line;
    entry.continuation = pending.back().text;
    auto body_end = pending.end() - 1;
    auto colon = body_end;
    for (auto it = pending.begin(); it != body_end; ++it)
      if (it->kind == LexToken::Kind::Colon) {
        if (colon != body_end)
          throw FormatError("more than one ':' in entry", it->line);
        colon = it;
      }
    if (colon == body_end) {
      entry.upper = side_tokens(pending.begin(), body_end);
      entry.lower = entry.upper;
    } else {
      entry.upper = side_tokens(pending.begin(), colon);
      entry.lower = side_tokens(colon + 1, body_end);
    }
    source.sections.back().entries.push_back(std::move(entry));
    pending.clear();
  }
  if (!pending.empty())
    throw FormatError("missing ';' after entry", pending.front().line);
  if (source.sections.empty())
    throw FormatError("no LEXICON sections", 1);
  source.root = source.find("Root") ? "Root" : source.sections.front().name;
  return source;
}

LexiconSource read_lexicon(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_lexicon(buffer.str());
}

Network compile_lexicon(const LexiconSource &source, const SymbolTablePtr &table) {
  detail::RawNetwork raw;
  std::map<std::string, StateId> section_state;
  for (const LexiconSection &section : source.sections)
    section_state.emplace(section.name, raw.add_state());
  const StateId end = raw.add_state(true);
  if (!section_state.contains(source.root))
    throw FormatError("root LEXICON '" + source.root + "' not found", 1);
  raw.start = section_state.at(source.root);

  auto intern = [&](const std::string &name) {
    return name == kEpsilonName ? kEpsilon : table->intern(name);
  };
  for (const LexiconSection &section : source.sections) {
    const StateId from = section_state.at(section.name);
    for (const LexiconEntry &entry : section.entries) {
      StateId to = end;
      if (entry.continuation != "#") {
        auto it = section_state.find(entry.continuation);
        if (it == section_state.end())
          throw FormatError("unknown continuation '" + entry.continuation + "'", entry.line);
        to = it->second;
      }
      Word upper, lower;
      for (const auto &t : entry.upper)
        if (SymbolId s = intern(t); s != kEpsilon)
          upper.push_back(s);
      for (const auto &t : entry.lower)
        if (SymbolId s = intern(t); s != kEpsilon)
          lower.push_back(s);
      const std::size_t len = std::max<std::size_t>({upper.size(), lower.size(), 1});
      StateId cur = from;
      for (std::size_t i = 0; i < len; ++i) {
        Label label{i < upper.size() ? upper[i] : kEpsilon, i < lower.size() ? lower[i] : kEpsilon};
        StateId next = i + 1 == len ? to : raw.add_state();
        raw.arcs[static_cast<std::size_t>(cur)].push_back({label, next});
        cur = next;
      }
    }
  }
  return normalize(detail::from_raw(table, raw));
}

} // namespace fsmcalc
