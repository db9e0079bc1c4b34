#include "fsmcalc/session.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fsmcalc/compile_replace.hpp"
#include "fsmcalc/demos.hpp"
#include "fsmcalc/error.hpp"
#include "fsmcalc/lexicon.hpp"
#include "fsmcalc/operations.hpp"
#include "fsmcalc/text_format.hpp"

namespace fsmcalc {

namespace {

struct Statement {
  std::string text;
  std::size_t line = 0;
};

// Splits at `;` outside double quotes and drops `#` comment lines.
std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  Statement current;
  bool quoted = false;
  bool line_start = true;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (line_start && c == '#' && !quoted) {
      while (i < text.size() && text[i] != '\n')
        ++i;
      if (i < text.size())
        ++line;
      if (!current.text.empty())
        current.text += '\n';
      continue;
    }
    if (c == '\n') {
      ++line;
      line_start = true;
      if (!current.text.empty())
        current.text += c;
      continue;
    }
    if (c != ' ' && c != '\t' && c != '\r')
      line_start = false;
    if (c == '"')
      quoted = !quoted;
    if (c == ';' && !quoted) {
      if (current.text.find_first_not_of(" \t\r\n") != std::string::npos)
        out.push_back(std::move(current));
      current = {};
      continue;
    }
    if (current.text.empty()) {
      if (c == ' ' || c == '\t' || c == '\r')
        continue;
      current.line = line;
    }
    current.text += c;
  }
  if (current.text.find_first_not_of(" \t\r\n") != std::string::npos)
    throw FormatError("missing ';' at end of statement", current.line);
  return out;
}

// Whitespace-separated words; double quotes group and are removed.
std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::string word;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      if (text[i] == '"') {
        const auto close = text.find('"', i + 1);
        if (close == std::string_view::npos)
          throw Error("unterminated quote");
        word.append(text.substr(i + 1, close - i - 1));
        i = close + 1;
      } else {
        word += text[i++];
      }
    }
    words.push_back(std::move(word));
  }
  return words;
}

// First word of `text` and the remainder after it.
std::pair<std::string, std::string_view> head(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos)
    return {{}, {}};
  auto end = text.find_first_of(" \t\r\n", start);
  if (end == std::string_view::npos)
    end = text.size();
  return {std::string(text.substr(start, end - start)), text.substr(end)};
}

void expect_args(const std::vector<std::string> &args, std::size_t min, std::size_t max,
                 const char *usage) {
  if (args.size() < min || args.size() > max)
    throw Error(std::string("usage: ") + usage);
}

Side parse_side(const std::string &word) {
  if (word == "lower")
    return Side::Lower;
  if (word == "upper")
    return Side::Upper;
  throw Error("expected 'upper' or 'lower', got '" + word + "'");
}

bool valid_name(std::string_view name) {
  if (name.empty())
    return false;
  for (char c : name)
    if (std::isspace(static_cast<unsigned char>(c)) ||
        std::string_view("[]{}*|&-?:\"^+;#.").find(c) != std::string_view::npos)
      return false;
  return !(name.front() >= '0' && name.front() <= '9');
}

std::size_t parse_count(const std::string &text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error("expected a number, got '" + text + "'");
  return value;
}

std::filesystem::path resolve(const std::filesystem::path &base, const std::string &file) {
  std::filesystem::path p(file);
  return p.is_absolute() || base.empty() ? p : base / p;
}

} // namespace

void write_lookups(const Network &net, Direction direction, std::istream &in,
                   std::ostream &out, const ApplyOptions &options) {
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    out << line << '\n';
    const ApplyResult result = apply(net, direction, line, options);
    if (result.outputs.empty())
      out << "\t+?\n";
    for (const std::string &o : result.outputs)
      out << '\t' << o << '\n';
    if (result.truncated)
      out << "\t+TRUNCATED\n";
  }
}

Session::Session(SymbolTablePtr table) : table_(std::move(table)) {}

const Network &Session::get(std::string_view name) const {
  if (name == "_") {
    if (!last_)
      throw Error("no previous result for '_'");
    return *last_;
  }
  const Network *net = defs_.find(name);
  if (!net)
    throw Error("undefined network '" + std::string(name) + "'");
  return *net;
}

void Session::bind(const std::string &name, Network net) {
  if (name == "_")
    throw Error("'_' cannot be assigned");
  if (!valid_name(name))
    throw Error("invalid network name '" + name + "'");
  defs_.bind(name, net);
  defs_.bind("_", net);
  last_ = std::move(net);
}

void Session::execute(std::string_view statement, const std::filesystem::path &base_dir,
                      std::istream &in, std::ostream &out) {
  const auto [command, rest] = head(statement);

  if (command == "define") {
    const auto [name, regex] = head(rest);
    if (name.empty())
      throw Error("usage: define <name> <regex>");
    bind(name, compile_regex(regex, defs_, classes_, table_));
    return;
  }
  if (command == "regex") {
    Network net = compile_regex(rest, defs_, classes_, table_);
    defs_.bind("_", net);
    last_ = std::move(net);
    return;
  }

  const std::vector<std::string> args = split_words(rest);
  try {
    execute_words(command, args, base_dir, in, out);
  } catch (const FormatError &e) {
    // Errors inside a file read by the command; name the file.
    if ((command == "read" || command == "load") && args.size() > 1)
      throw Error(args[1] + ": " + e.what());
    throw;
  }
}

void Session::execute_words(const std::string &command, const std::vector<std::string> &args,
                            const std::filesystem::path &base_dir, std::istream &in,
                            std::ostream &out) {
  if (command == "class") {
    if (args.size() < 3 || args[1] != "=")
      throw Error("usage: class <name> = <symbol>...");
    std::set<SymbolId> members;
    for (std::size_t i = 2; i < args.size(); ++i)
      members.insert(table_->intern(args[i]));
    classes_ = classes_.define(table_->intern(args[0]), std::move(members));
  } else if (command == "read") {
    expect_args(args, 3, 3, "read lexicon|wordlist <file> <name>");
    const auto path = resolve(base_dir, args[1]);
    if (args[0] == "lexicon") {
      bind(args[2], compile_lexicon(read_lexicon(path), table_));
    } else if (args[0] == "wordlist") {
      std::vector<Word> words;
      for (const std::string &w : read_word_list(path)) {
        Word word;
        for (const std::string &c : utf8_characters(w))
          word.push_back(table_->intern(c));
        words.push_back(std::move(word));
      }
      bind(args[2], words_network(table_, words));
    } else {
      throw Error("usage: read lexicon|wordlist <file> <name>");
    }
  } else if (command == "compile-replace") {
    expect_args(args, 2, 3, "compile-replace lower|upper <name> [<result>]");
    Network net = compile_replace(get(args[1]), parse_side(args[0]), defs_, classes_);
    bind(args.size() == 3 ? args[2] : args[1], std::move(net));
  } else if (command == "substitute") {
    if (args.size() < 3 || args[2] != "->")
      throw Error("usage: substitute <name> <symbol> -> <symbol>... [upper|lower|both]");
    std::vector<std::string> targets(args.begin() + 3, args.end());
    SideSelect side = SideSelect::Both;
    if (!targets.empty()) {
      const std::string &last = targets.back();
      if (last == "upper" || last == "lower" || last == "both") {
        side = last == "upper" ? SideSelect::Upper
               : last == "lower" ? SideSelect::Lower
                                 : SideSelect::Both;
        targets.pop_back();
      }
    }
    std::vector<SymbolId> to;
    for (const std::string &t : targets)
      if (t != "0")
        to.push_back(table_->intern(t));
    const SymbolId from = table_->intern(args[1]);
    bind(args[0], substitute_symbol(get(args[0]), from, to, side));
  } else if (command == "apply") {
    expect_args(args, 2, 2, "apply up|down <name>");
    if (args[0] != "up" && args[0] != "down")
      throw Error("usage: apply up|down <name>");
    write_lookups(get(args[1]), args[0] == "up" ? Direction::Up : Direction::Down, in, out);
  } else if (command == "words") {
    expect_args(args, 2, 3, "words <name> <maxlen> [upper|lower|pairs]");
    Projection projection = Projection::Lower;
    if (args.size() == 3) {
      if (args[2] == "upper")
        projection = Projection::Upper;
      else if (args[2] == "pairs")
        projection = Projection::Pairs;
      else if (args[2] != "lower")
        throw Error("expected 'upper', 'lower' or 'pairs', got '" + args[2] + "'");
    }
    for (const std::string &w : enumerate_words(get(args[0]), parse_count(args[1]), projection))
      out << w << '\n';
  } else if (command == "save") {
    expect_args(args, 2, 2, "save <name> <file>");
    save_network(get(args[0]), resolve(base_dir, args[1]));
  } else if (command == "load") {
    expect_args(args, 2, 2, "load <name> <file>");
    bind(args[0], load_network(resolve(base_dir, args[1]), table_));
  } else if (command == "equivalent") {
    expect_args(args, 2, 2, "equivalent <name> <name>");
    out << (equivalent(get(args[0]), get(args[1])) ? "equivalent" : "not equivalent") << '\n';
  } else if (command == "print") {
    expect_args(args, 1, 1, "print <name>");
    out << write_text(get(args[0]));
  } else {
    throw Error("unknown command '" + command + "'");
  }
}

int Session::run(std::string_view text, const std::filesystem::path &base_dir,
                 std::istream &in, std::ostream &out, std::ostream &err) {
  std::vector<Statement> statements;
  try {
    statements = split_statements(text);
  } catch (const FormatError &e) {
    err << e.what() << '\n';
    return 1;
  }
  for (const Statement &s : statements) {
    try {
      execute(s.text, base_dir, in, out);
    } catch (const std::exception &e) {
      err << "line " << s.line << ": " << e.what() << '\n';
      return 1;
    }
  }
  return 0;
}

} // namespace fsmcalc
