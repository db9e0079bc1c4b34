#include "fsmcalc/demos.hpp"

#include <algorithm>
#include <fstream>

#include "fsmcalc/apply.hpp"
#include "fsmcalc/compile_replace.hpp"
#include "fsmcalc/error.hpp"
#include "fsmcalc/operations.hpp"
#include "fsmcalc/regex.hpp"
#include "raw_network.hpp"

namespace fsmcalc {

namespace {

using Path = std::vector<Label>;

void add_path(detail::RawNetwork &raw, const Path &path) {
  StateId cur = raw.start;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const StateId next = raw.add_state(i + 1 == path.size());
    raw.arcs[static_cast<std::size_t>(cur)].push_back({path[i], next});
    cur = next;
  }
  if (path.empty())
    raw.final[static_cast<std::size_t>(cur)] = 1;
}

std::vector<SymbolId> chars(const SymbolTablePtr &table, const std::string &text) {
  std::vector<SymbolId> out;
  for (const std::string &c : utf8_characters(text))
    out.push_back(table->intern(c));
  return out;
}

void identity(Path &path, const std::vector<SymbolId> &word) {
  for (SymbolId s : word)
    path.push_back({s, s});
}

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

} // namespace

std::vector<std::string> read_word_list(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path.string() + "'");
  std::vector<std::string> words;
  for (std::string line; std::getline(in, line);) {
    line = trim(line);
    if (!line.empty() && line.front() != '#')
      words.push_back(line);
  }
  return words;
}

Network build_malay(const std::vector<std::string> &roots, const SymbolTablePtr &table) {
  const SymbolId noun = table->intern("+Noun");
  const SymbolId plural = table->intern("+Plural");
  const SymbolId open = table->intern(kRegionOpen);
  const SymbolId close = table->intern(kRegionClose);
  const SymbolId lbrace = table->intern("{");
  const SymbolId rbrace = table->intern("}");
  const SymbolId caret = table->intern("^");
  const SymbolId two = table->intern("2");

  detail::RawNetwork raw;
  raw.start = raw.add_state();
  for (const std::string &root : roots) {
    const auto word = chars(table, root);
    Path singular;
    identity(singular, word);
    singular.push_back({noun, kEpsilon});
    add_path(raw, singular);

    // The tags ride along with the closing brace and the repeat operator.
    Path reduplicated{{kEpsilon, open}, {kEpsilon, lbrace}};
    identity(reduplicated, word);
    reduplicated.insert(reduplicated.end(), {{noun, rbrace},
                                             {plural, caret},
                                             {kEpsilon, two},
                                             {kEpsilon, close}});
    add_path(raw, reduplicated);
  }
  const Network lexicon = normalize(detail::from_raw(table, raw));
  return compile_replace(lexicon, Side::Lower, Definitions{}, ClassRegistry{});
}

ArabicBuild build_arabic(const std::vector<std::string> &roots,
                         const std::vector<std::string> &templates,
                         const std::vector<std::string> &vocalisms,
                         const ClassRegistry &classes, const SymbolTablePtr &table) {
  const SymbolId open = table->intern(kRegionOpen);
  const SymbolId close = table->intern(kRegionClose);
  const SymbolId root_tag = table->intern("=Root");
  const SymbolId templ_tag = table->intern("=Template");
  const SymbolId voc_tag = table->intern("=Voc");
  const SymbolId right_merge = table->intern(".m>.");
  const SymbolId left_merge = table->intern(".<m.");

  detail::RawNetwork raw;
  raw.start = raw.add_state();
  for (const std::string &root : roots)
    for (const std::string &templ : templates)
      for (const std::string &voc : vocalisms) {
        Path path{{kEpsilon, open}};
        identity(path, chars(table, root));
        path.push_back({root_tag, right_merge});
        identity(path, chars(table, templ));
        path.push_back({templ_tag, left_merge});
        identity(path, chars(table, voc));
        path.push_back({voc_tag, close});
        add_path(raw, path);
      }
  const Network source = normalize(detail::from_raw(table, raw));
  Network stems = compile_replace(source, Side::Lower, Definitions{}, classes);

  // Keep only lower strings free of class symbols.
  detail::RawNetwork filter;
  filter.start = filter.add_state(true);
  for (SymbolId sym : stems.side_sigma(/*upper=*/false))
    if (sym != kEpsilon && !classes.is_class(sym))
      filter.arcs[0].push_back({{sym, sym}, 0});
  stems = compose(stems, detail::from_raw(table, filter));

  ArabicBuild build{stems, {}};
  for (const std::string &root : roots)
    for (const std::string &templ : templates)
      for (const std::string &voc : vocalisms) {
        const std::string upper = root + "=Root" + templ + "=Template" + voc + "=Voc";
        if (apply(stems, Direction::Down, upper).outputs.empty())
          build.warnings.push_back("no stem for root '" + root + "', template '" + templ +
                                   "', vocalism '" + voc + "'");
      }
  return build;
}

std::set<std::string> extract_palindromes(const std::vector<std::string> &words) {
  const SymbolTablePtr table = make_symbol_table();
  std::vector<Word> spelled;
  std::size_t longest = 0;
  for (const std::string &w : words) {
    if (w.empty())
      continue;
    Word word;
    for (const std::string &c : utf8_characters(w)) {
      const auto tokens = tokenize(c, nullptr);
      if (tokens.size() != 1 || tokens.front().kind != TokenKind::Symbol || c == "0")
        throw Error("word '" + w + "' contains a character that is not a plain symbol");
      word.push_back(table->intern(c));
    }
    longest = std::max(longest, word.size());
    spelled.push_back(std::move(word));
  }

  Definitions defs;
  const ClassRegistry classes;
  auto step = [&](std::string_view regex) {
    defs.bind("L", compile_regex(regex, defs, classes, table));
  };
  defs.bind("L", words_network(table, spelled));
  step("[L & L.r]");
  step(R"("^[" "[" L XX "]" "^" 2 "^]")");
  defs.bind("L", compile_replace(*defs.find("L"), Side::Lower, defs, classes));
  step(R"(L .o. [[0 .x. "^["] [? - XX]* [XX .x. "&" "["] [? - XX]* )"
       R"([XX .x. "]" ".r"] [0 .x. "^]"]])");
  const Network result = compile_replace(*defs.find("L"), Side::Lower, defs, classes);
  return enumerate_words(result, longest, Projection::Lower);
}

} // namespace fsmcalc
