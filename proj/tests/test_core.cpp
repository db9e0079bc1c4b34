#include <catch_amalgamated.hpp>

#include "fsmcalc/error.hpp"
#include "fsmcalc/text_format.hpp"
#include "support.hpp"

using namespace fsmcalc;
using namespace fsmcalc::testing;
using Strings = std::set<std::string>;

namespace {

Relation compose_relations(const Relation &a, const Relation &b) {
  Relation out;
  for (const auto &[x, y] : a)
    for (const auto &[y2, z] : b)
      if (y == y2)
        out.emplace(x, z);
  return out;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

} // namespace

TEST_CASE("symbol table interns names once") {
  auto t = make_symbol_table();
  SymbolId a = t->intern("+Noun");
  CHECK(t->intern("+Noun") == a);
  CHECK(t->name(a) == "+Noun");
  CHECK(t->intern("@0@") == kEpsilon);
  CHECK(t->find("nope") == std::nullopt);
  CHECK_THROWS(t->intern(""));
  CHECK_THROWS(t->intern("a b"));
}

TEST_CASE("atoms") {
  auto t = make_symbol_table();
  const SymbolId a = t->intern("a");
  CHECK(lower(atom(t, a, a)) == Strings{"a"});
  CHECK(lower(atom(t, kEpsilon, kEpsilon)) == Strings{""});
  const Network del = atom(t, t->intern("+Adj"), kEpsilon);
  CHECK(upper(del) == Strings{"+Adj"});
  CHECK(lower(del) == Strings{""});
  CHECK_FALSE(del.is_automaton());
}

TEST_CASE("concatenation union intersection difference") {
  auto t = make_symbol_table();
  const Network a = rx(t, "a"), b = rx(t, "b");
  CHECK(lower(concatenate(a, b)) == Strings{"ab"});
  CHECK(equivalent(concatenate(a, epsilon_network(t)), a));
  CHECK(lower(concatenate(rx(t, "b"), rx(t, "a g i"))) == Strings{"bagi"});

  CHECK(lower(unite(a, b)) == Strings{"a", "b"});
  CHECK(equivalent(unite(a, empty_network(t)), a));

  const Network l = words(t, {"dog", "god", "madam"});
  CHECK(lower(intersect(l, reverse(l))) == Strings{"dog", "god", "madam"});
  CHECK(is_empty(intersect(a, b)));
  CHECK(is_empty(rx(t, "d o g & [d o g].r")));

  CHECK(lower(subtract(rx(t, "a|b"), b)) == Strings{"a"});
  CHECK(is_empty(subtract(l, l)));
  CHECK(lower(rx(t, "[? - XX] & [d|o|g|XX]")) == Strings{"d", "g", "o"});
  CHECK_THROWS_AS(intersect(atom(t, t->intern("a"), t->intern("b")), a), NotAnAutomaton);
  CHECK_THROWS_AS(subtract(a, atom(t, t->intern("a"), t->intern("b"))), NotAnAutomaton);
}

TEST_CASE("closures and repetition") {
  auto t = make_symbol_table();
  const Network a = rx(t, "a");
  CHECK(lower(star(a), 3) == Strings{"", "a", "aa", "aaa"});
  CHECK(lower(plus(a), 3) == Strings{"a", "aa", "aaa"});
  CHECK(lower(star(empty_network(t))) == Strings{""});
  CHECK(lower(repeat(rx(t, "{bagi}"), 2)) == Strings{"bagibagi"});
  CHECK(equivalent(repeat(a, 1), a));
  CHECK(lower(repeat(rx(t, "a b"), 3)) == Strings{"ababab"});
  CHECK(lower(repeat(a, 0)) == Strings{""});
}

TEST_CASE("reverse") {
  auto t = make_symbol_table();
  CHECK(lower(reverse(rx(t, "{dog}"))) == Strings{"god"});
  CHECK(lower(reverse(rx(t, "{madam}"))) == Strings{"madam"});
  // Labels stay paired: reverse of a:x b:y is b:y a:x.
  CHECK(pairs(reverse(rx(t, "a:x b:y"))) == Strings{"b:y a:x"});
}

TEST_CASE("crossproduct pads the shorter side at the end") {
  auto t = make_symbol_table();
  const Network x = crossproduct(rx(t, "XX"), rx(t, "\"&\" \"[\""));
  CHECK(pairs(x) == Strings{"XX:& 0:["});
  CHECK(lower(crossproduct(epsilon_network(t), epsilon_network(t))) == Strings{""});
  CHECK(pairs(crossproduct(rx(t, "a b c"), rx(t, "d"))) == Strings{"a:d b:0 c:0"});
  CHECK_THROWS_AS(crossproduct(rx(t, "a:b"), rx(t, "a")), NotAnAutomaton);
}

TEST_CASE("composition") {
  auto t = make_symbol_table();
  CHECK(pairs(compose(rx(t, "a:b"), rx(t, "b:c"))) == Strings{"a:c"});
  const Network l = words(t, {"ab", "abc", "c"}), m = words(t, {"abc", "c", "x"});
  CHECK(equivalent(compose(l, m), intersect(l, m)));
  // Epsilons on both inner sides: a:0 followed by 0:b gives one path a:b or
  // a:0 0:b, never duplicates after normalization.
  const Network c = compose(rx(t, "a:0"), rx(t, "0:b"));
  CHECK(relation(c) == Relation{{word_of(t, "a"), word_of(t, "b")}});
}

TEST_CASE("projection") {
  auto t = make_symbol_table();
  // b i g 0:g +Adj:0 0:e +Comp:r
  const Network path = rx(t, "b i g 0:g +Adj:0 0:e +Comp:r");
  CHECK(lower(project(path, Side::Lower)) == Strings{"bigger"});
  CHECK(lower(project(path, Side::Upper)) == Strings{"big+Adj+Comp"});
  const Network l = words(t, {"x", "yz"});
  CHECK(equivalent(project(l, Side::Upper), l));
}

TEST_CASE("symbol substitution") {
  auto t = make_symbol_table();
  const Word amp_bracket{t->intern("&"), t->intern("[")};
  CHECK(lower(substitute_symbol(rx(t, "d o g XX d o g"), t->intern("XX"), amp_bracket,
                                SideSelect::Both)) == Strings{"dog&[dog"});
  const Network aba = rx(t, "{aba}");
  const Word just_a{t->intern("a")};
  CHECK(equivalent(substitute_symbol(aba, t->intern("a"), just_a, SideSelect::Both), aba));
  CHECK(lower(substitute_symbol(aba, t->intern("a"), {}, SideSelect::Both)) == Strings{"b"});
  // One side only.
  const Network lo = substitute_symbol(aba, t->intern("b"), Word{t->intern("c"), t->intern("c")},
                                       SideSelect::Lower);
  CHECK(upper(lo) == Strings{"aba"});
  CHECK(lower(lo) == Strings{"acca"});
}

TEST_CASE("normalize") {
  auto t = make_symbol_table();
  const SymbolId a = t->intern("a");
  NetworkBuilder b(t);
  for (int i = 0; i < 5; ++i)
    b.add_state(i == 4);
  b.add_arc(0, {kEpsilon, kEpsilon}, 1);
  b.add_arc(1, {a, a}, 2);
  b.add_arc(2, {kEpsilon, kEpsilon}, 3);
  b.add_arc(3, {kEpsilon, kEpsilon}, 4);
  const Network five = std::move(b).build();
  const Network two = normalize(five);
  CHECK(two.num_states() == 2);
  CHECK(write_text(two) == write_text(normalize(atom(t, a, a))));
  CHECK(write_text(normalize(two)) == write_text(two));

  const Network k = unite(rx(t, "{katab}"), rx(t, "{katab}"));
  CHECK(k.num_states() == 6);
  CHECK(lower(k) == Strings{"katab"});

  const Network empty = empty_network(t);
  CHECK(empty.num_states() == 1);
  CHECK(empty.num_arcs() == 0);
  CHECK_FALSE(empty.is_final(empty.start()));
  CHECK(lower(empty, 5).empty());
}

TEST_CASE("enumeration and equivalence") {
  auto t = make_symbol_table();
  CHECK(lower(rx(t, "a*"), 3) == Strings{"", "a", "aa", "aaa"});
  CHECK(equivalent(rx(t, "a|b"), normalize(rx(t, "b|a"))));
  CHECK_FALSE(equivalent(rx(t, "a"), rx(t, "b")));
  // Across tables, symbols are matched by name.
  auto t2 = make_symbol_table();
  t2->intern("zzz");
  CHECK(equivalent(rx(t, "a b*"), rx(t2, "a b*")));
  CHECK_THROWS_AS(unite(rx(t, "a"), rx(t2, "a")), TableMismatch);
}

TEST_CASE("random: union is enumeration union") {
  std::mt19937 rng(11);
  for (int i = 0; i < 150; ++i) {
    auto t = make_symbol_table();
    const Network a = random_network(rng, t), b = random_network(rng, t);
    const Network u = unite(a, b);
    for (std::size_t n = 0; n <= 8; ++n)
      for (Projection p : {Projection::Lower, Projection::Upper}) {
        Strings expected = enumerate_words(a, n, p);
        const Strings rhs = enumerate_words(b, n, p);
        expected.insert(rhs.begin(), rhs.end());
        REQUIRE(enumerate_words(u, n, p) == expected);
      }
  }
}

TEST_CASE("random: union keeps the relation") {
  std::mt19937 rng(21);
  RandomNetworkOptions opt;
  opt.acyclic = true;
  for (int i = 0; i < 150; ++i) {
    auto t = make_symbol_table();
    const Network a = random_network(rng, t, opt), b = random_network(rng, t, opt);
    Relation expected = relation(a);
    const Relation rb = relation(b);
    expected.insert(rb.begin(), rb.end());
    REQUIRE(relation(unite(a, b)) == expected);
  }
}

TEST_CASE("random: reverse is an involution") {
  std::mt19937 rng(12);
  for (int i = 0; i < 150; ++i) {
    auto t = make_symbol_table();
    const Network a = random_network(rng, t);
    REQUIRE(equivalent(reverse(reverse(a)), a));
  }
}

TEST_CASE("random: reverse against a string oracle") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    auto t = make_symbol_table();
    RandomNetworkOptions opt;
    opt.acyclic = true;
    const Network a = random_network(rng, t, opt);
    Relation expected;
    for (const auto &[u, l] : relation(a, 10))
      expected.emplace(reversed(u), reversed(l));
    REQUIRE(relation(reverse(a), 10) == expected);
  }
}

TEST_CASE("random: crossproduct projections") {
  std::mt19937 rng(14);
  RandomNetworkOptions opt;
  opt.transducer = false;
  for (int i = 0; i < 150; ++i) {
    auto t = make_symbol_table();
    const Network a = random_network(rng, t, opt), b = random_network(rng, t, opt);
    if (is_empty(a) || is_empty(b))
      continue;
    const Network x = crossproduct(a, b);
    REQUIRE(equivalent(project(x, Side::Upper), project(a, Side::Upper)));
    REQUIRE(equivalent(project(x, Side::Lower), project(b, Side::Upper)));
  }
}

TEST_CASE("random: composition against a relational oracle") {
  std::mt19937 rng(15);
  RandomNetworkOptions opt;
  opt.acyclic = true;
  opt.epsilon_rate = 0.3;
  for (int i = 0; i < 200; ++i) {
    auto t = make_symbol_table();
    const Network a = random_network(rng, t, opt), b = random_network(rng, t, opt);
    REQUIRE(relation(compose(a, b), 24) == compose_relations(relation(a), relation(b)));
  }
}

TEST_CASE("random: composition is associative") {
  std::mt19937 rng(16);
  for (int i = 0; i < 100; ++i) {
    auto t = make_symbol_table();
    const Network a = random_network(rng, t), b = random_network(rng, t),
                  c = random_network(rng, t);
    REQUIRE(equivalent(compose(compose(a, b), c), compose(a, compose(b, c))));
  }
}

TEST_CASE("random: normalize preserves the relation") {
  std::mt19937 rng(17);
  RandomNetworkOptions opt;
  opt.max_states = 8;
  opt.acyclic = true;
  for (int i = 0; i < 200; ++i) {
    auto t = make_symbol_table();
    const Network a = random_network(rng, t, opt);
    const Network n = normalize(a);
    // Normalization drops epsilon:epsilon labels only, so pair spellings
    // agree once those are removed.
    Strings before;
    for (const PairWord &w : enumerate_pairs(a, 12)) {
      PairWord kept;
      for (const Label &l : w)
        if (!l.is_epsilon())
          kept.push_back(l);
      if (kept.size() <= 8)
        before.insert(spell_pairs(*t, kept));
    }
    REQUIRE(pairs(n, 8) == before);
    REQUIRE(write_text(normalize(n)) == write_text(n));
  }
}

TEST_CASE("random: repeat is iterated concatenation") {
  std::mt19937 rng(18);
  for (int i = 0; i < 60; ++i) {
    auto t = make_symbol_table();
    const Network a = random_network(rng, t);
    Network acc = epsilon_network(t);
    for (std::size_t n = 0; n <= 4; ++n) {
      REQUIRE(equivalent(repeat(a, n), acc));
      acc = concatenate(acc, a);
    }
  }
}

TEST_CASE("random: intersection and difference against set oracles") {
  std::mt19937 rng(19);
  RandomNetworkOptions opt;
  opt.transducer = false;
  for (int i = 0; i < 150; ++i) {
    auto t = make_symbol_table();
    const Network a = random_network(rng, t, opt), b = random_network(rng, t, opt);
    const Strings la = lower(a, 7), lb = lower(b, 7);
    Strings both, only;
    std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(),
                          std::inserter(both, both.end()));
    std::set_difference(la.begin(), la.end(), lb.begin(), lb.end(),
                        std::inserter(only, only.end()));
    REQUIRE(lower(intersect(a, b), 7) == both);
    REQUIRE(lower(subtract(a, b), 7) == only);
  }
}
