#include <catch_amalgamated.hpp>

#include <sstream>

#include "fsmcalc/error.hpp"
#include "merge_oracle.hpp"
#include "support.hpp"

using namespace fsmcalc;
using namespace fsmcalc::testing;
using Strings = std::set<std::string>;

namespace {

ClassRegistry arabic_classes(const SymbolTablePtr &t) {
  std::set<SymbolId> c, v;
  for (const char *s : {"b", "d", "k", "r", "s", "t"})
    c.insert(t->intern(s));
  for (const char *s : {"a", "i", "u"})
    v.insert(t->intern(s));
  return ClassRegistry{}.define(t->intern("C"), c).define(t->intern("V"), v);
}

// Lower strings free of class symbols.
Strings filled(const Network &n, const ClassRegistry &classes, const SymbolTablePtr &t) {
  Strings out;
  for (const Word &w : enumerate(n, 12, Side::Lower)) {
    bool residue = false;
    for (SymbolId s : w)
      residue = residue || classes.is_class(s);
    if (!residue)
      out.insert(spell(*t, w));
  }
  return out;
}

Word random_word(std::mt19937 &rng, const std::vector<SymbolId> &alphabet, std::size_t max_len) {
  Word w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (SymbolId &s : w)
    s = alphabet[pick(rng)];
  return w;
}

struct Fixture {
  SymbolTablePtr table = make_symbol_table();
  ClassRegistry classes;
  std::vector<SymbolId> ordinary;
  std::vector<SymbolId> template_alphabet;

  explicit Fixture(std::mt19937 &rng) {
    for (const char *s : {"k", "t", "b", "a", "i"})
      ordinary.push_back(table->intern(s));
    const SymbolId c = table->intern("C"), v = table->intern("V");
    // Small random, possibly overlapping, classes.
    std::bernoulli_distribution in(0.5);
    std::set<SymbolId> cm, vm;
    for (SymbolId s : ordinary) {
      if (in(rng))
        cm.insert(s);
      if (in(rng))
        vm.insert(s);
    }
    if (cm.empty())
      cm.insert(ordinary[0]);
    if (vm.empty())
      vm.insert(ordinary[3]);
    classes = classes.define(c, cm).define(v, vm);
    template_alphabet = {c, v, c, v, ordinary[1], ordinary[3]};
  }
};

} // namespace

TEST_CASE("merge fills class slots") {
  auto t = make_symbol_table();
  const ClassRegistry classes = arabic_classes(t);
  SECTION("consonants first, vowel slots survive") {
    const Network n = merge(rx(t, "C V V C V C"), rx(t, "d r s"), classes);
    CHECK(lower(n) == Strings{"dVVrVs"});
  }
  SECTION("operators pick template and filler sides") {
    CHECK(lower(rx(t, "d r s .m>. C V V C V C", {}, classes)) == Strings{"dVVrVs"});
    CHECK(lower(rx(t, "C V V C V C .<m. d r s", {}, classes)) == Strings{"dVVrVs"});
  }
  SECTION("competing vowel fills") {
    const Network n = merge(rx(t, "d V V r V s"), rx(t, "u* i"), classes);
    // Slots left unfilled when the filler ends early are copied.
    CHECK(lower(n) == Strings{"diVrVs", "duirVs", "duuris"});
    CHECK(filled(n, classes, t) == Strings{"duuris"});
  }
  SECTION("ordinary template symbols are copied") {
    const Network stem = merge(rx(t, "C t V C V C"), rx(t, "k t b"), classes);
    CHECK(lower(stem) == Strings{"ktVtVb"});
    CHECK(lower(merge(stem, rx(t, "a+"), classes)) == Strings{"ktatab"});
  }
  SECTION("redefined class") {
    const ClassRegistry e = classes.define(t->intern("V"), {t->intern("e")});
    CHECK(lower(merge(rx(t, "C V"), rx(t, "e"), e)) == Strings{"Ce"});
  }
  SECTION("final only when both sides are done") {
    CHECK(is_empty(merge(rx(t, "C"), rx(t, "k t"), classes)));
    CHECK(lower(merge(rx(t, "C C"), rx(t, "k"), classes)) == Strings{"kC"});
  }
}

TEST_CASE("merge rejects bad operands") {
  auto t = make_symbol_table();
  const ClassRegistry classes = arabic_classes(t);
  CHECK_THROWS_AS(merge(rx(t, "C:a"), rx(t, "k"), classes), NotAnAutomaton);
  CHECK_THROWS_AS(merge(rx(t, "C"), rx(t, "k:a"), classes), NotAnAutomaton);
  CHECK_THROWS_AS(merge(rx(t, "C"), rx(t, "V"), classes), MergeError);
  auto t2 = make_symbol_table();
  CHECK_THROWS_AS(merge(rx(t, "C"), rx(t2, "k"), classes), TableMismatch);
}

TEST_CASE("class registry validation") {
  auto t = make_symbol_table();
  const SymbolId c = t->intern("C"), v = t->intern("V"), a = t->intern("a");
  const ClassRegistry r = ClassRegistry{}.define(v, {a});
  CHECK(r.matches(v, a));
  CHECK_FALSE(r.matches(c, a));
  CHECK_THROWS_AS(r.define(c, {}), MergeError);
  CHECK_THROWS_AS(r.define(c, {v}), MergeError);
  CHECK_THROWS_AS(r.define(c, {kEpsilon}), MergeError);
  CHECK_THROWS_AS(ClassRegistry{}.define(c, {v}).define(v, {a}), MergeError);
  // Overlap is allowed.
  CHECK_NOTHROW(r.define(c, {a}));
  CHECK(define_class(r, c, {a}).matches(c, a));
}

TEST_CASE("class files") {
  auto t = make_symbol_table();
  const ClassRegistry r = parse_classes("# comment\n\nclass V = a i u\nclass C = k t b ;\n", t);
  CHECK(r.classes().size() == 2);
  CHECK(r.matches(t->intern("C"), t->intern("t")));
  try {
    parse_classes("class V = a\nclass X a b\n", t);
    FAIL("no error");
  } catch (const FormatError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_classes("class V = a\nclass C = V\n", t), FormatError);
}

TEST_CASE("random: merge equals the per-string scan for single strings") {
  std::mt19937 rng(41);
  for (int i = 0; i < 300; ++i) {
    Fixture fx(rng);
    const Word t = random_word(rng, fx.template_alphabet, 6);
    const Word f = random_word(rng, fx.ordinary, 6);
    const Network n = merge(string_network(fx.table, t), string_network(fx.table, f), fx.classes);
    REQUIRE(enumerate(n, 6, Side::Lower) == merge_strings(t, f, fx.classes));
  }
}

TEST_CASE("random: merge equals the prefix-aware scan on word sets") {
  std::mt19937 rng(42);
  for (int i = 0; i < 300; ++i) {
    Fixture fx(rng);
    std::set<Word> ts, fs;
    for (int k = std::uniform_int_distribution<int>(1, 4)(rng); k > 0; --k)
      ts.insert(random_word(rng, fx.template_alphabet, 6));
    for (int k = std::uniform_int_distribution<int>(1, 4)(rng); k > 0; --k)
      fs.insert(random_word(rng, fx.ordinary, 6));
    const Network n = merge(words_network(fx.table, {ts.begin(), ts.end()}),
                            words_network(fx.table, {fs.begin(), fs.end()}), fx.classes);
    REQUIRE(enumerate(n, 6, Side::Lower) == merge_languages(ts, fs, fx.classes));
  }
}

TEST_CASE("random: merged strings follow the template and exhaust the filler") {
  std::mt19937 rng(43);
  RandomNetworkOptions topt, fopt;
  topt.transducer = fopt.transducer = false;
  topt.epsilon_rate = fopt.epsilon_rate = 0.0;
  topt.alphabet = {"C", "V", "t", "a"};
  fopt.alphabet = {"k", "t", "b", "a", "i"};
  for (int i = 0; i < 200; ++i) {
    Fixture fx(rng);
    const Network tn = random_network(rng, fx.table, topt);
    const Network fn = random_network(rng, fx.table, fopt);
    const std::set<Word> ts = enumerate(tn, 8, Side::Upper);
    const std::set<Word> fs = enumerate(fn, 8, Side::Upper);
    for (const Word &m : enumerate(merge(tn, fn, fx.classes), 8, Side::Lower)) {
      bool explained = false;
      for (const Word &t : ts) {
        if (t.size() != m.size())
          continue;
        bool fits = true;
        Word used;
        for (std::size_t k = 0; k < t.size() && fits; ++k) {
          if (m[k] == t[k])
            continue;
          fits = fx.classes.matches(t[k], m[k]);
          used.push_back(m[k]);
        }
        if (fits && fs.contains(used)) {
          explained = true;
          break;
        }
      }
      REQUIRE(explained);
    }
  }
}

TEST_CASE("random: disjoint fillers merge in either order") {
  std::mt19937 rng(44);
  auto t = make_symbol_table();
  const ClassRegistry classes = arabic_classes(t);
  RandomNetworkOptions topt, copt, vopt;
  topt.transducer = copt.transducer = vopt.transducer = false;
  topt.epsilon_rate = copt.epsilon_rate = vopt.epsilon_rate = 0.0;
  topt.alphabet = {"C", "V", "t"};
  copt.alphabet = {"k", "t", "b"};
  vopt.alphabet = {"a", "i", "u"};
  for (int i = 0; i < 200; ++i) {
    const Network tn = random_network(rng, t, topt);
    const Network fc = random_network(rng, t, copt);
    const Network fv = random_network(rng, t, vopt);
    REQUIRE(equivalent(merge(merge(tn, fc, classes), fv, classes),
                       merge(merge(tn, fv, classes), fc, classes)));
  }
}
