#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "fsmcalc/merge.hpp"
#include "fsmcalc/network.hpp"
#include "fsmcalc/operations.hpp"
#include "fsmcalc/regex.hpp"

namespace fsmcalc::testing {

// Compiles with no definitions and no classes.
inline Network rx(const SymbolTablePtr &table, std::string_view source,
                  const Definitions &defs = {}, const ClassRegistry &classes = {}) {
  return compile_regex(source, defs, classes, table);
}

inline std::set<std::string> lower(const Network &n, std::size_t len = 12) {
  return enumerate_words(n, len, Projection::Lower);
}
inline std::set<std::string> upper(const Network &n, std::size_t len = 12) {
  return enumerate_words(n, len, Projection::Upper);
}
inline std::set<std::string> pairs(const Network &n, std::size_t len = 8) {
  return enumerate_words(n, len, Projection::Pairs);
}

struct RandomNetworkOptions {
  std::size_t max_states = 6;
  std::vector<std::string> alphabet{"a", "b", "c"};
  bool transducer = true;
  double epsilon_rate = 0.15;
  std::size_t max_arcs_per_state = 3;
  // Arcs only go to higher-numbered states, so every path is short.
  bool acyclic = false;
};

// Unnormalized random network; may contain epsilon arcs and dead states.
inline Network random_network(std::mt19937 &rng, const SymbolTablePtr &table,
                              const RandomNetworkOptions &opt = {}) {
  std::uniform_int_distribution<std::size_t> nstates(1, opt.max_states);
  const std::size_t n = nstates(rng);
  std::uniform_int_distribution<std::size_t> pick_state(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_sym(0, opt.alphabet.size() - 1);
  std::uniform_int_distribution<std::size_t> narcs(0, opt.max_arcs_per_state);
  std::bernoulli_distribution eps(opt.epsilon_rate);
  std::bernoulli_distribution fin(0.35);

  NetworkBuilder b(table);
  for (std::size_t s = 0; s < n; ++s)
    b.add_state(fin(rng));
  auto symbol = [&] {
    return eps(rng) ? kEpsilon : table->intern(opt.alphabet[pick_sym(rng)]);
  };
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t k = narcs(rng); k > 0; --k) {
      SymbolId u = symbol();
      SymbolId l = opt.transducer ? symbol() : u;
      std::size_t t = pick_state(rng);
      if (opt.acyclic) {
        if (s + 1 == n)
          break;
        t = std::uniform_int_distribution<std::size_t>(s + 1, n - 1)(rng);
      }
      b.add_arc(static_cast<StateId>(s), {u, l}, static_cast<StateId>(t));
    }
  b.set_start(0);
  return std::move(b).build();
}

// The relation as (upper, lower) symbol strings, read off bounded paths.
using Relation = std::set<std::pair<Word, Word>>;
inline Relation relation(const Network &n, std::size_t max_labels = 16) {
  Relation out;
  for (const PairWord &path : enumerate_pairs(n, max_labels)) {
    Word u, l;
    for (const Label &lab : path) {
      if (lab.upper != kEpsilon)
        u.push_back(lab.upper);
      if (lab.lower != kEpsilon)
        l.push_back(lab.lower);
    }
    out.emplace(std::move(u), std::move(l));
  }
  return out;
}

inline Word word_of(const SymbolTablePtr &table, const std::string &chars) {
  Word w;
  for (const std::string &c : utf8_characters(chars))
    w.push_back(table->intern(c));
  return w;
}

inline Network words(const SymbolTablePtr &table, const std::vector<std::string> &list) {
  std::vector<Word> ws;
  for (const auto &s : list)
    ws.push_back(word_of(table, s));
  return words_network(table, ws);
}

} // namespace fsmcalc::testing
