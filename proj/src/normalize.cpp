#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "fsmcalc/operations.hpp"
#include "raw_network.hpp"

namespace fsmcalc {
namespace detail {

RawNetwork to_raw(const Network &net) {
  RawNetwork raw;
  raw.start = net.start();
  raw.arcs.resize(net.num_states());
  raw.final.resize(net.num_states());
  for (std::size_t s = 0; s < net.num_states(); ++s) {
    auto out = net.arcs(static_cast<StateId>(s));
    raw.arcs[s].assign(out.begin(), out.end());
    raw.final[s] = net.is_final(static_cast<StateId>(s)) ? 1 : 0;
  }
  return raw;
}

Network from_raw(const SymbolTablePtr &table, const RawNetwork &raw) {
  NetworkBuilder b(table);
  for (std::size_t s = 0; s < raw.size(); ++s)
    b.add_state(raw.final[s] != 0);
  for (std::size_t s = 0; s < raw.size(); ++s)
    for (const Arc &arc : raw.arcs[s])
      b.add_arc(static_cast<StateId>(s), arc.label, arc.target);
  if (raw.size() > 0)
    b.set_start(raw.start);
  return std::move(b).build();
}

RawNetwork remove_epsilons(const RawNetwork &in) {
  bool any = false;
  for (const auto &out : in.arcs)
    for (const Arc &arc : out)
      any = any || arc.label.is_epsilon();
  if (!any)
    return in;

  const std::size_t n = in.size();
  RawNetwork result;
  result.start = in.start;
  result.arcs.resize(n);
  result.final.assign(n, 0);

  std::vector<StateId> stack;
  std::vector<std::size_t> mark(n, static_cast<std::size_t>(-1));
  for (std::size_t s = 0; s < n; ++s) {
    stack.assign(1, static_cast<StateId>(s));
    mark[s] = s;
    std::vector<Arc> &out = result.arcs[s];
    while (!stack.empty()) {
      const auto q = static_cast<std::size_t>(stack.back());
      stack.pop_back();
      if (in.final[q])
        result.final[s] = 1;
      for (const Arc &arc : in.arcs[q]) {
        if (arc.label.is_epsilon()) {
          const auto t = static_cast<std::size_t>(arc.target);
          if (mark[t] != s) {
            mark[t] = s;
            stack.push_back(arc.target);
          }
        } else {
          out.push_back(arc);
        }
      }
    }
    std::sort(out.begin(), out.end(), [](const Arc &x, const Arc &y) {
      return std::tie(x.label, x.target) < std::tie(y.label, y.target);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return result;
}

RawNetwork trim(const RawNetwork &in) {
  const std::size_t n = in.size();
  std::vector<char> forward(n, 0), backward(n, 0);
  std::vector<StateId> stack;
  if (n == 0) {
    RawNetwork empty;
    empty.add_state();
    return empty;
  }
  forward[static_cast<std::size_t>(in.start)] = 1;
  stack.push_back(in.start);
  while (!stack.empty()) {
    auto s = static_cast<std::size_t>(stack.back());
    stack.pop_back();
    for (const Arc &arc : in.arcs[s]) {
      auto t = static_cast<std::size_t>(arc.target);
      if (!forward[t]) {
        forward[t] = 1;
        stack.push_back(arc.target);
      }
    }
  }
  std::vector<std::vector<StateId>> incoming(n);
  for (std::size_t s = 0; s < n; ++s)
    for (const Arc &arc : in.arcs[s])
      incoming[static_cast<std::size_t>(arc.target)].push_back(
          static_cast<StateId>(s));
  for (std::size_t s = 0; s < n; ++s)
    if (in.final[s] && forward[s]) {
      backward[s] = 1;
      stack.push_back(static_cast<StateId>(s));
    }
  while (!stack.empty()) {
    auto s = static_cast<std::size_t>(stack.back());
    stack.pop_back();
    for (StateId p : incoming[s]) {
      auto pi = static_cast<std::size_t>(p);
      if (forward[pi] && !backward[pi]) {
        backward[pi] = 1;
        stack.push_back(p);
      }
    }
  }

  RawNetwork result;
  if (!backward[static_cast<std::size_t>(in.start)]) {
    result.add_state();
    return result;
  }
  std::vector<StateId> remap(n, -1);
  for (std::size_t s = 0; s < n; ++s)
    if (backward[s])
      remap[s] = result.add_state(in.final[s] != 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (!backward[s])
      continue;
    auto &out = result.arcs[static_cast<std::size_t>(remap[s])];
    for (const Arc &arc : in.arcs[s]) {
      StateId t = remap[static_cast<std::size_t>(arc.target)];
      if (t >= 0)
        out.push_back({arc.label, t});
    }
  }
  result.start = remap[static_cast<std::size_t>(in.start)];
  return result;
}

namespace {

bool is_deterministic(const RawNetwork &in) {
  std::vector<Label> labels;
  for (const auto &out : in.arcs) {
    labels.clear();
    for (const Arc &arc : out)
      labels.push_back(arc.label);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      return false;
  }
  return true;
}

} // namespace

RawNetwork determinize(const RawNetwork &in) {
  if (is_deterministic(in))
    return in;

  RawNetwork result;
  std::map<std::vector<StateId>, StateId> ids;
  std::deque<std::vector<StateId>> queue;

  auto intern = [&](std::vector<StateId> subset) {
    auto [it, inserted] =
        ids.emplace(subset, static_cast<StateId>(result.size()));
    if (inserted) {
      bool final = std::any_of(subset.begin(), subset.end(), [&](StateId s) {
        return in.final[static_cast<std::size_t>(s)] != 0;
      });
      result.add_state(final);
      queue.push_back(std::move(subset));
    }
    return it->second;
  };

  result.start = intern({in.start});
  std::map<Label, std::vector<StateId>> moves;
  while (!queue.empty()) {
    std::vector<StateId> subset = std::move(queue.front());
    queue.pop_front();
    const StateId source = ids.at(subset);
    moves.clear();
    for (StateId s : subset)
      for (const Arc &arc : in.arcs[static_cast<std::size_t>(s)])
        moves[arc.label].push_back(arc.target);
    for (auto &[label, targets] : moves) {
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      StateId t = intern(std::move(targets));
      result.arcs[static_cast<std::size_t>(source)].push_back({label, t});
    }
  }
  return result;
}

bool has_cycle(const RawNetwork &in) {
  // Iterative three-colour DFS.
  const std::size_t n = in.size();
  std::vector<char> colour(n, 0);
  std::vector<std::pair<StateId, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root])
      continue;
    stack.push_back({static_cast<StateId>(root), 0});
    colour[root] = 1;
    while (!stack.empty()) {
      auto &[s, next] = stack.back();
      const auto &out = in.arcs[static_cast<std::size_t>(s)];
      if (next == out.size()) {
        colour[static_cast<std::size_t>(s)] = 2;
        stack.pop_back();
        continue;
      }
      StateId t = out[next++].target;
      auto ti = static_cast<std::size_t>(t);
      if (colour[ti] == 1)
        return true;
      if (colour[ti] == 0) {
        colour[ti] = 1;
        stack.push_back({t, 0});
      }
    }
  }
  return false;
}

namespace {

using Signature = std::pair<int, std::vector<std::pair<Label, int>>>;

Signature signature_of(const RawNetwork &in, std::size_t s,
                       const std::vector<int> &cls, int head) {
  Signature sig{head, {}};
  for (const Arc &arc : in.arcs[s])
    sig.second.emplace_back(arc.label, cls[static_cast<std::size_t>(arc.target)]);
  std::sort(sig.second.begin(), sig.second.end());
  return sig;
}

// Partition of states into right-language classes for an acyclic DFA,
// computed in one pass ordered by height (longest path to a sink).
std::vector<int> acyclic_classes(const RawNetwork &in) {
  const std::size_t n = in.size();
  std::vector<int> height(n, -1);
  std::vector<std::pair<StateId, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (height[root] >= 0)
      continue;
    stack.push_back({static_cast<StateId>(root), 0});
    height[root] = -2;
    while (!stack.empty()) {
      auto &[s, next] = stack.back();
      const auto &out = in.arcs[static_cast<std::size_t>(s)];
      if (next == out.size()) {
        int h = 0;
        for (const Arc &arc : out)
          h = std::max(h, height[static_cast<std::size_t>(arc.target)] + 1);
        height[static_cast<std::size_t>(s)] = h;
        stack.pop_back();
        continue;
      }
      StateId t = out[next++].target;
      if (height[static_cast<std::size_t>(t)] == -1) {
        height[static_cast<std::size_t>(t)] = -2;
        stack.push_back({t, 0});
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return height[a] < height[b];
  });
  std::vector<int> cls(n, -1);
  std::map<Signature, int> table;
  for (std::size_t s : order) {
    auto sig = signature_of(in, s, cls, in.final[s]);
    auto [it, inserted] =
        table.emplace(std::move(sig), static_cast<int>(table.size()));
    cls[s] = it->second;
  }
  return cls;
}

std::vector<int> moore_classes(const RawNetwork &in) {
  const std::size_t n = in.size();
  std::vector<int> cls(n);
  for (std::size_t s = 0; s < n; ++s)
    cls[s] = in.final[s] ? 1 : 0;
  std::size_t count = 0;
  for (;;) {
    std::map<Signature, int> table;
    std::vector<int> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      auto sig = signature_of(in, s, cls, cls[s]);
      auto [it, inserted] =
          table.emplace(std::move(sig), static_cast<int>(table.size()));
      next[s] = it->second;
    }
    cls = std::move(next);
    if (table.size() == count)
      break;
    count = table.size();
  }
  return cls;
}

} // namespace

RawNetwork minimize(const RawNetwork &in) {
  std::vector<int> cls = has_cycle(in) ? moore_classes(in) : acyclic_classes(in);
  int num_classes = 0;
  for (int c : cls)
    num_classes = std::max(num_classes, c + 1);
  RawNetwork result;
  for (int c = 0; c < num_classes; ++c)
    result.add_state();
  std::vector<char> done(static_cast<std::size_t>(num_classes), 0);
  for (std::size_t s = 0; s < in.size(); ++s) {
    auto c = static_cast<std::size_t>(cls[s]);
    if (done[c])
      continue;
    done[c] = 1;
    result.final[c] = in.final[s];
    for (const Arc &arc : in.arcs[s])
      result.arcs[c].push_back(
          {arc.label, cls[static_cast<std::size_t>(arc.target)]});
  }
  result.start = cls[static_cast<std::size_t>(in.start)];
  return result;
}

namespace {

// Breadth-first renumbering with arcs ordered by print name, so the result
// does not depend on interning order.
RawNetwork canonicalize(const RawNetwork &in, const SymbolTable &table) {
  std::vector<SymbolId> symbols;
  for (const auto &out : in.arcs)
    for (const Arc &arc : out) {
      symbols.push_back(arc.label.upper);
      symbols.push_back(arc.label.lower);
    }
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  std::vector<SymbolId> by_name = symbols;
  std::sort(by_name.begin(), by_name.end(), [&](SymbolId a, SymbolId b) {
    if (a == kEpsilon || b == kEpsilon)
      return a == kEpsilon && b != kEpsilon;
    return table.name(a) < table.name(b);
  });
  std::unordered_map<SymbolId, int> rank;
  for (std::size_t i = 0; i < by_name.size(); ++i)
    rank[by_name[i]] = static_cast<int>(i);
  auto key = [&](const Arc &arc) {
    return std::pair{rank.at(arc.label.upper), rank.at(arc.label.lower)};
  };

  RawNetwork result;
  std::vector<StateId> remap(in.size(), -1);
  std::deque<StateId> queue;
  remap[static_cast<std::size_t>(in.start)] = result.add_state();
  queue.push_back(in.start);
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    std::vector<Arc> out = in.arcs[static_cast<std::size_t>(s)];
    std::sort(out.begin(), out.end(),
              [&](const Arc &a, const Arc &b) { return key(a) < key(b); });
    const auto source = static_cast<std::size_t>(remap[static_cast<std::size_t>(s)]);
    result.final[source] = in.final[static_cast<std::size_t>(s)];
    for (const Arc &arc : out) {
      auto &t = remap[static_cast<std::size_t>(arc.target)];
      if (t < 0) {
        t = result.add_state();
        queue.push_back(arc.target);
      }
      result.arcs[source].push_back({arc.label, t});
    }
  }
  result.start = 0;
  return result;
}

} // namespace
} // namespace detail

Network normalize(const Network &a) {
  using namespace detail;
  RawNetwork raw = trim(remove_epsilons(to_raw(a)));
  raw = minimize(determinize(raw));
  raw = canonicalize(trim(raw), *a.table());
  return from_raw(a.table(), raw);
}

bool is_empty(const Network &a) {
  using namespace detail;
  RawNetwork raw = trim(to_raw(a));
  return raw.size() == 1 && !raw.final[0] && raw.arcs[0].empty();
}

bool is_cyclic(const Network &a) {
  using namespace detail;
  return has_cycle(trim(remove_epsilons(to_raw(a))));
}

} // namespace fsmcalc
