#include "fsmcalc/operations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "fsmcalc/error.hpp"
#include "raw_network.hpp"

namespace fsmcalc {

using detail::RawNetwork;

namespace {

constexpr Label kEpsilonLabel{kEpsilon, kEpsilon};

void require_automaton(const Network &a, const char *op) {
  if (!a.is_automaton())
    throw NotAnAutomaton(op);
}

// Interns product-state tuples and hands them out in BFS order.
template <class Key> class ProductBuilder {
public:
  RawNetwork raw;

  StateId intern(const Key &key, bool final) {
    auto [it, inserted] = ids_.emplace(key, static_cast<StateId>(raw.size()));
    if (inserted) {
      raw.add_state(final);
      queue_.push_back(key);
    }
    return it->second;
  }
  bool next(Key &key) {
    if (queue_.empty())
      return false;
    key = queue_.front();
    queue_.pop_front();
    return true;
  }
  StateId id(const Key &key) const { return ids_.at(key); }
  // Interns the target before touching the arc list; interning may grow it.
  void add_arc(StateId source, Label label, const Key &target, bool final) {
    const StateId t = intern(target, final);
    raw.arcs[static_cast<std::size_t>(source)].push_back({label, t});
  }

private:
  std::map<Key, StateId> ids_;
  std::deque<Key> queue_;
};

} // namespace

Network epsilon_network(const SymbolTablePtr &table) {
  NetworkBuilder b(table);
  b.add_state(true);
  return std::move(b).build();
}

Network empty_network(const SymbolTablePtr &table) { return Network(table); }

Network atom(const SymbolTablePtr &table, SymbolId upper, SymbolId lower) {
  if (upper == kEpsilon && lower == kEpsilon)
    return epsilon_network(table);
  NetworkBuilder b(table);
  StateId s = b.add_state();
  StateId t = b.add_state(true);
  b.add_arc(s, {upper, lower}, t);
  return std::move(b).build();
}

Network string_network(const SymbolTablePtr &table,
                       std::span<const SymbolId> word) {
  NetworkBuilder b(table);
  StateId s = b.add_state();
  for (SymbolId sym : word) {
    if (sym == kEpsilon)
      continue;
    StateId t = b.add_state();
    b.add_arc(s, {sym, sym}, t);
    s = t;
  }
  b.set_final(s);
  return std::move(b).build();
}

Network words_network(const SymbolTablePtr &table,
                      const std::vector<Word> &words) {
  RawNetwork raw;
  raw.add_state();
  std::vector<std::map<SymbolId, StateId>> children(1);
  for (const Word &word : words) {
    StateId s = 0;
    for (SymbolId sym : word) {
      if (sym == kEpsilon)
        continue;
      auto &kids = children[static_cast<std::size_t>(s)];
      auto it = kids.find(sym);
      if (it == kids.end()) {
        StateId t = raw.add_state();
        children.emplace_back();
        raw.arcs[static_cast<std::size_t>(s)].push_back({{sym, sym}, t});
        it = children[static_cast<std::size_t>(s)].emplace(sym, t).first;
      }
      s = it->second;
    }
    raw.final[static_cast<std::size_t>(s)] = 1;
  }
  return normalize(detail::from_raw(table, raw));
}

Network concatenate(const Network &a, const Network &b) {
  require_same_table(a, b);
  NetworkBuilder builder(a.table());
  StateId oa = builder.append(a);
  StateId ob = builder.append(b);
  for (std::size_t s = 0; s < a.num_states(); ++s)
    if (a.is_final(static_cast<StateId>(s))) {
      builder.set_final(static_cast<StateId>(s) + oa, false);
      builder.add_arc(static_cast<StateId>(s) + oa, kEpsilonLabel,
                      b.start() + ob);
    }
  builder.set_start(a.start() + oa);
  return normalize(std::move(builder).build());
}

Network unite(const Network &a, const Network &b) {
  require_same_table(a, b);
  NetworkBuilder builder(a.table());
  StateId start = builder.add_state();
  StateId oa = builder.append(a);
  StateId ob = builder.append(b);
  builder.add_arc(start, kEpsilonLabel, a.start() + oa);
  builder.add_arc(start, kEpsilonLabel, b.start() + ob);
  builder.set_start(start);
  return normalize(std::move(builder).build());
}

Network intersect(const Network &a, const Network &b) {
  require_same_table(a, b);
  require_automaton(a, "intersect");
  require_automaton(b, "intersect");
  const Network na = normalize(a);
  const Network nb = normalize(b);
  using Key = std::pair<StateId, StateId>;
  ProductBuilder<Key> product;
  auto final_of = [&](const Key &k) {
    return na.is_final(k.first) && nb.is_final(k.second);
  };
  Key start{na.start(), nb.start()};
  product.raw.start = product.intern(start, final_of(start));
  Key key;
  while (product.next(key)) {
    const StateId source = product.id(key);
    auto out_b = nb.arcs(key.second);
    for (const Arc &x : na.arcs(key.first))
      for (const Arc &y : out_b)
        if (x.label == y.label) {
          Key t{x.target, y.target};
          StateId target = product.intern(t, final_of(t));
          product.raw.arcs[static_cast<std::size_t>(source)].push_back(
              {x.label, target});
        }
  }
  return normalize(detail::from_raw(a.table(), product.raw));
}

Network subtract(const Network &a, const Network &b) {
  require_same_table(a, b);
  require_automaton(a, "subtract");
  require_automaton(b, "subtract");
  const Network na = normalize(a);
  const Network nb = normalize(b); // deterministic over labels
  constexpr StateId kSink = -1;
  using Key = std::pair<StateId, StateId>;
  ProductBuilder<Key> product;
  auto final_of = [&](const Key &k) {
    return na.is_final(k.first) && (k.second == kSink || !nb.is_final(k.second));
  };
  Key start{na.start(), nb.start()};
  product.raw.start = product.intern(start, final_of(start));
  Key key;
  while (product.next(key)) {
    const StateId source = product.id(key);
    for (const Arc &x : na.arcs(key.first)) {
      StateId tb = kSink;
      if (key.second != kSink)
        for (const Arc &y : nb.arcs(key.second))
          if (y.label == x.label) {
            tb = y.target;
            break;
          }
      Key t{x.target, tb};
      StateId target = product.intern(t, final_of(t));
      product.raw.arcs[static_cast<std::size_t>(source)].push_back(
          {x.label, target});
    }
  }
  return normalize(detail::from_raw(a.table(), product.raw));
}

Network closure(const Network &a, ClosureKind kind) {
  if (kind == ClosureKind::Plus)
    return concatenate(a, closure(a, ClosureKind::Star));
  NetworkBuilder builder(a.table());
  StateId start = builder.add_state(true);
  StateId offset = builder.append(a);
  builder.add_arc(start, kEpsilonLabel, a.start() + offset);
  for (std::size_t s = 0; s < a.num_states(); ++s)
    if (a.is_final(static_cast<StateId>(s)))
      builder.add_arc(static_cast<StateId>(s) + offset, kEpsilonLabel, start);
  builder.set_start(start);
  return normalize(std::move(builder).build());
}

Network repeat(const Network &a, std::size_t n) {
  Network result = epsilon_network(a.table());
  for (std::size_t i = 0; i < n; ++i)
    result = concatenate(result, a);
  return result;
}

Network reverse(const Network &a) {
  NetworkBuilder builder(a.table());
  for (std::size_t s = 0; s < a.num_states(); ++s)
    builder.add_state(static_cast<StateId>(s) == a.start());
  StateId start = builder.add_state();
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    if (a.is_final(static_cast<StateId>(s)))
      builder.add_arc(start, kEpsilonLabel, static_cast<StateId>(s));
    for (const Arc &arc : a.arcs(static_cast<StateId>(s)))
      builder.add_arc(arc.target, arc.label, static_cast<StateId>(s));
  }
  builder.set_start(start);
  return normalize(std::move(builder).build());
}

Network crossproduct(const Network &a, const Network &b) {
  require_same_table(a, b);
  require_automaton(a, "crossproduct");
  require_automaton(b, "crossproduct");
  const Network na = normalize(a);
  const Network nb = normalize(b);
  // -1 in a component marks that side as exhausted.
  using Key = std::pair<StateId, StateId>;
  ProductBuilder<Key> product;
  auto final_of = [&](const Key &k) {
    bool fa = k.first < 0 || na.is_final(k.first);
    bool fb = k.second < 0 || nb.is_final(k.second);
    return fa && fb;
  };
  Key start{na.start(), nb.start()};
  product.raw.start = product.intern(start, final_of(start));
  Key key;
  while (product.next(key)) {
    const StateId source = product.id(key);
    auto [p, q] = key;
    if (p >= 0 && q >= 0) {
      for (const Arc &x : na.arcs(p))
        for (const Arc &y : nb.arcs(q)) {
          Key t{x.target, y.target};
          product.add_arc(source, {x.label.upper, y.label.upper}, t, final_of(t));
        }
    }
    if (p >= 0 && (q < 0 || nb.is_final(q)))
      for (const Arc &x : na.arcs(p)) {
        Key t{x.target, -1};
        product.add_arc(source, {x.label.upper, kEpsilon}, t, final_of(t));
      }
    if (q >= 0 && (p < 0 || na.is_final(p)))
      for (const Arc &y : nb.arcs(q)) {
        Key t{-1, y.target};
        product.add_arc(source, {kEpsilon, y.label.upper}, t, final_of(t));
      }
  }
  return normalize(detail::from_raw(a.table(), product.raw));
}

Network compose(const Network &a, const Network &b) {
  require_same_table(a, b);
  const Network na = normalize(a);
  const Network nb = normalize(b);
  // Filter state: 0 = free, 1 = after an epsilon move in `a` alone. Between
  // two matched moves, lone moves in `b` must precede lone moves in `a`, so
  // each interleaving is produced once.
  using Key = std::tuple<StateId, StateId, int>;
  ProductBuilder<Key> product;
  auto final_of = [&](const Key &k) {
    return na.is_final(std::get<0>(k)) && nb.is_final(std::get<1>(k));
  };
  Key start{na.start(), nb.start(), 0};
  product.raw.start = product.intern(start, final_of(start));
  Key key;
  while (product.next(key)) {
    const StateId source = product.id(key);
    auto [p, q, filter] = key;
    for (const Arc &x : na.arcs(p)) {
      if (x.label.lower == kEpsilon) {
        Key t{x.target, q, 1};
        product.add_arc(source, {x.label.upper, kEpsilon}, t, final_of(t));
        continue;
      }
      for (const Arc &y : nb.arcs(q))
        if (y.label.upper == x.label.lower) {
          Key t{x.target, y.target, 0};
          product.add_arc(source, {x.label.upper, y.label.lower}, t, final_of(t));
        }
    }
    if (filter == 0)
      for (const Arc &y : nb.arcs(q))
        if (y.label.upper == kEpsilon) {
          Key t{p, y.target, 0};
          product.add_arc(source, {kEpsilon, y.label.lower}, t, final_of(t));
        }
  }
  return normalize(detail::from_raw(a.table(), product.raw));
}

Network project(const Network &a, Side side) {
  RawNetwork raw = detail::to_raw(a);
  for (auto &out : raw.arcs)
    for (Arc &arc : out) {
      SymbolId s = side == Side::Upper ? arc.label.upper : arc.label.lower;
      arc.label = {s, s};
    }
  return normalize(detail::from_raw(a.table(), raw));
}

Network substitute_symbol(const Network &a, SymbolId from,
                          std::span<const SymbolId> to, SideSelect side) {
  if (from == kEpsilon)
    throw Error("substitute_symbol: cannot substitute epsilon");
  const bool on_upper = side != SideSelect::Lower;
  const bool on_lower = side != SideSelect::Upper;
  std::vector<SymbolId> replacement;
  for (SymbolId s : to)
    if (s != kEpsilon)
      replacement.push_back(s);

  RawNetwork raw = detail::to_raw(a);
  const std::size_t original = raw.size();
  std::vector<SymbolId> upper, lower;
  for (std::size_t s = 0; s < original; ++s) {
    std::vector<Arc> out = std::move(raw.arcs[s]);
    raw.arcs[s].clear();
    for (const Arc &arc : out) {
      auto side_of = [&](SymbolId sym, bool selected, std::vector<SymbolId> &dst) {
        dst.clear();
        if (selected && sym == from)
          dst = replacement;
        else if (sym != kEpsilon)
          dst.push_back(sym);
      };
      side_of(arc.label.upper, on_upper, upper);
      side_of(arc.label.lower, on_lower, lower);
      const std::size_t len = std::max<std::size_t>({upper.size(), lower.size(), 1});
      StateId cur = static_cast<StateId>(s);
      for (std::size_t i = 0; i < len; ++i) {
        Label label{i < upper.size() ? upper[i] : kEpsilon,
                    i < lower.size() ? lower[i] : kEpsilon};
        StateId next = i + 1 == len ? arc.target : raw.add_state();
        raw.arcs[static_cast<std::size_t>(cur)].push_back({label, next});
        cur = next;
      }
    }
  }
  return normalize(detail::from_raw(a.table(), raw));
}

namespace {

template <class Item, class Step>
void enumerate_dfs(const Network &net, std::size_t max_len, Step step,
                   std::set<std::vector<Item>> &out) {
  std::vector<Item> word;
  struct Frame {
    StateId state;
    std::size_t next;
  };
  std::vector<Frame> stack{{net.start(), 0}};
  if (net.is_final(net.start()))
    out.insert(word);
  while (!stack.empty()) {
    Frame &frame = stack.back();
    auto arcs = net.arcs(frame.state);
    if (frame.next == arcs.size() || word.size() == max_len) {
      stack.pop_back();
      if (!word.empty())
        word.pop_back();
      continue;
    }
    const Arc &arc = arcs[frame.next++];
    word.push_back(step(arc));
    if (net.is_final(arc.target))
      out.insert(word);
    stack.push_back({arc.target, 0});
  }
}

} // namespace

std::set<Word> enumerate(const Network &a, std::size_t max_len, Side side) {
  const Network p = project(a, side);
  std::set<Word> out;
  enumerate_dfs<SymbolId>(p, max_len, [](const Arc &arc) { return arc.label.upper; }, out);
  return out;
}

std::set<PairWord> enumerate_pairs(const Network &a, std::size_t max_len) {
  const Network n = normalize(a);
  std::set<PairWord> out;
  enumerate_dfs<Label>(n, max_len, [](const Arc &arc) { return arc.label; }, out);
  return out;
}

std::string spell(const SymbolTable &table, std::span<const SymbolId> word) {
  std::string s;
  for (SymbolId sym : word)
    if (sym != kEpsilon)
      s += table.name(sym);
  return s;
}

std::string spell_pairs(const SymbolTable &table, std::span<const Label> word) {
  auto name = [&](SymbolId sym) -> std::string {
    return sym == kEpsilon ? "0" : table.name(sym);
  };
  std::string s;
  for (const Label &label : word) {
    if (!s.empty())
      s += ' ';
    s += name(label.upper);
    if (!label.is_identity()) {
      s += ':';
      s += name(label.lower);
    }
  }
  return s;
}

std::set<std::string> enumerate_words(const Network &a, std::size_t max_len,
                                      Projection projection) {
  std::set<std::string> out;
  if (projection == Projection::Pairs) {
    for (const PairWord &w : enumerate_pairs(a, max_len))
      out.insert(spell_pairs(*a.table(), w));
    return out;
  }
  const Side side = projection == Projection::Upper ? Side::Upper : Side::Lower;
  for (const Word &w : enumerate(a, max_len, side))
    out.insert(spell(*a.table(), w));
  return out;
}

bool equivalent(const Network &a, const Network &b) {
  const Network na = normalize(a);
  const Network nb = normalize(b);
  if (na.num_states() != nb.num_states())
    return false;
  const SymbolTable &ta = *na.table();
  const SymbolTable &tb = *nb.table();
  const bool same_table = na.table() == nb.table();
  auto same_symbol = [&](SymbolId x, SymbolId y) {
    if (same_table || x == kEpsilon || y == kEpsilon)
      return x == y;
    return ta.name(x) == tb.name(y);
  };
  for (std::size_t s = 0; s < na.num_states(); ++s) {
    const auto state = static_cast<StateId>(s);
    if (na.is_final(state) != nb.is_final(state))
      return false;
    auto xa = na.arcs(state);
    auto xb = nb.arcs(state);
    if (xa.size() != xb.size())
      return false;
    for (std::size_t i = 0; i < xa.size(); ++i)
      if (xa[i].target != xb[i].target ||
          !same_symbol(xa[i].label.upper, xb[i].label.upper) ||
          !same_symbol(xa[i].label.lower, xb[i].label.lower))
        return false;
  }
  return true;
}

} // namespace fsmcalc
