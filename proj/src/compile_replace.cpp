#include "fsmcalc/compile_replace.hpp"

#include <map>
#include <set>
#include <unordered_map>

#include "fsmcalc/error.hpp"
#include "raw_network.hpp"

namespace fsmcalc {

namespace {

struct RegionKey {
  StateId origin;
  StateId terminus;
  std::string text;
  friend auto operator<=>(const RegionKey &, const RegionKey &) = default;
};

class CompileReplace {
public:
  CompileReplace(const Network &net, Side side, const Definitions &defs,
                 const ClassRegistry &classes)
      : net_(net), side_(side), defs_(defs), classes_(classes), table_(net.table()),
        open_(table_->intern(kRegionOpen)), close_(table_->intern(kRegionClose)) {}

  Network run() {
    detail::RawNetwork out;
    for (std::size_t s = 0; s < net_.num_states(); ++s)
      out.add_state(net_.is_final(static_cast<StateId>(s)));
    out.start = net_.start();

    std::vector<char> seen(net_.num_states(), 0);
    std::vector<StateId> queue{net_.start()};
    seen[static_cast<std::size_t>(net_.start())] = 1;
    auto visit = [&](StateId s) {
      if (!seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = 1;
        queue.push_back(s);
      }
    };
    while (!queue.empty()) {
      StateId s = queue.back();
      queue.pop_back();
      for (const Arc &arc : net_.arcs(s)) {
        SymbolId sym = chosen(arc.label);
        if (sym == close_)
          throw CompileReplaceError("unbalanced delimiters: '^]' without a preceding '^['");
        if (sym == open_) {
          collect_region(s, arc, visit);
          continue;
        }
        out.arcs[static_cast<std::size_t>(s)].push_back(arc);
        visit(arc.target);
      }
    }

    for (const auto &[key, opposite] : regions_)
      splice(out, key, opposite);
    return normalize(detail::from_raw(table_, out));
  }

private:
  const Network &net_;
  Side side_;
  const Definitions &defs_;
  const ClassRegistry &classes_;
  SymbolTablePtr table_;
  SymbolId open_;
  SymbolId close_;
  std::map<RegionKey, std::vector<Word>> regions_;
  std::unordered_map<std::string, Network> compiled_;

  SymbolId chosen(const Label &l) const { return side_ == Side::Upper ? l.upper : l.lower; }
  SymbolId opposite(const Label &l) const { return side_ == Side::Upper ? l.lower : l.upper; }

  // Enumerates every delimiter-to-delimiter path starting with `open_arc`.
  template <class Visit>
  void collect_region(StateId origin, const Arc &open_arc, Visit &visit) {
    struct Frame {
      StateId state;
      std::size_t next;
    };
    std::vector<const Arc *> path{&open_arc};
    std::set<StateId> on_path{origin, open_arc.target};
    std::vector<Frame> stack{{open_arc.target, 0}};
    if (net_.is_final(open_arc.target))
      throw CompileReplaceError("unbalanced delimiters: path ends inside a '^[' region");

    while (!stack.empty()) {
      Frame &frame = stack.back();
      auto arcs = net_.arcs(frame.state);
      if (frame.next == arcs.size()) {
        on_path.erase(frame.state);
        stack.pop_back();
        path.pop_back();
        continue;
      }
      const Arc &arc = arcs[frame.next++];
      SymbolId sym = chosen(arc.label);
      if (sym == open_)
        throw CompileReplaceError("nested '^[' inside a region");
      if (sym == close_) {
        path.push_back(&arc);
        record(origin, arc.target, path);
        path.pop_back();
        visit(arc.target);
        continue;
      }
      if (on_path.contains(arc.target))
        throw CompileReplaceError("cyclic region between '^[' and '^]'");
      if (net_.is_final(arc.target))
        throw CompileReplaceError("unbalanced delimiters: path ends inside a '^[' region");
      path.push_back(&arc);
      on_path.insert(arc.target);
      stack.push_back({arc.target, 0});
    }
  }

  void record(StateId origin, StateId terminus, const std::vector<const Arc *> &path) {
    std::string text;
    Word other;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const bool delimiter_arc = i == 0 || i + 1 == path.size();
      SymbolId sym = chosen(path[i]->label);
      if (!delimiter_arc && sym != kEpsilon) {
        if (!text.empty())
          text += ' ';
        text += table_->name(sym);
      }
      SymbolId opp = opposite(path[i]->label);
      if (opp == kEpsilon || (delimiter_arc && (opp == open_ || opp == close_)))
        continue;
      other.push_back(opp);
    }
    regions_[RegionKey{origin, terminus, std::move(text)}].push_back(std::move(other));
  }

  const Network &compiled(const std::string &text) {
    if (auto it = compiled_.find(text); it != compiled_.end())
      return it->second;
    Network net(table_);
    try {
      net = compile_regex(text, defs_, classes_, table_);
    } catch (const Error &e) {
      throw CompileReplaceError("in region '" + text + "': " + e.what());
    }
    if (!net.is_automaton())
      throw CompileReplaceError("in region '" + text + "': result is not an automaton");
    if (net.contains_symbol(open_) || net.contains_symbol(close_))
      throw CompileReplaceError("in region '" + text + "': result contains a delimiter symbol");
    return compiled_.emplace(text, std::move(net)).first->second;
  }

  void splice(detail::RawNetwork &out, const RegionKey &key, const std::vector<Word> &opposite) {
    const Network &inner = compiled(key.text);
    const Network kept = words_network(table_, opposite);
    const Network piece = side_ == Side::Lower ? crossproduct(kept, inner)
                                               : crossproduct(inner, kept);
    if (is_empty(piece))
      return;
    const auto offset = static_cast<StateId>(out.size());
    for (std::size_t s = 0; s < piece.num_states(); ++s) {
      StateId id = out.add_state();
      for (const Arc &arc : piece.arcs(static_cast<StateId>(s)))
        out.arcs[static_cast<std::size_t>(id)].push_back({arc.label, arc.target + offset});
      if (piece.is_final(static_cast<StateId>(s)))
        out.arcs[static_cast<std::size_t>(id)].push_back({{kEpsilon, kEpsilon}, key.terminus});
    }
    out.arcs[static_cast<std::size_t>(key.origin)].push_back(
        {{kEpsilon, kEpsilon}, piece.start() + offset});
  }
};

} // namespace

Network compile_replace(const Network &net, Side side, const Definitions &defs,
                        const ClassRegistry &classes) {
  const Network normalized = normalize(net);
  return CompileReplace(normalized, side, defs, classes).run();
}

} // namespace fsmcalc
