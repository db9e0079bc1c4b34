#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fsmcalc/symbol_table.hpp"

namespace fsmcalc {

using StateId = std::int32_t;

/// An `upper:lower` symbol pair. Identity pairs denote automaton arcs.
struct Label {
  SymbolId upper = kEpsilon;
  SymbolId lower = kEpsilon;

  constexpr bool is_identity() const { return upper == lower; }
  constexpr bool is_epsilon() const {
    return upper == kEpsilon && lower == kEpsilon;
  }
  friend constexpr auto operator<=>(const Label &, const Label &) = default;
};

struct Arc {
  Label label;
  StateId target = 0;

  friend constexpr bool operator==(const Arc &, const Arc &) = default;
};

/// Unweighted finite-state network over symbol-pair labels. Immutable once
/// built; every operation returns a new network. Construct through
/// NetworkBuilder.
class Network {
public:
  /// The canonical empty network: one non-final start state, no arcs.
  explicit Network(SymbolTablePtr table);

  const SymbolTablePtr &table() const { return table_; }
  StateId start() const { return start_; }
  std::size_t num_states() const { return arcs_.size(); }
  std::size_t num_arcs() const;
  bool is_final(StateId s) const { return final_[static_cast<std::size_t>(s)]; }
  std::span<const Arc> arcs(StateId s) const {
    return arcs_[static_cast<std::size_t>(s)];
  }

  /// Non-epsilon symbols occurring on arcs, ascending by id.
  const std::vector<SymbolId> &sigma() const { return sigma_; }
  bool contains_symbol(SymbolId sym) const;

  /// Symbols occurring on one side only.
  std::vector<SymbolId> side_sigma(bool upper) const;

  /// True when every label is an identity pair.
  bool is_automaton() const;

  /// Print name of a symbol in this network's table.
  const std::string &name(SymbolId sym) const { return table_->name(sym); }

private:
  friend class NetworkBuilder;
  Network() = default;

  SymbolTablePtr table_;
  StateId start_ = 0;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<bool> final_;
  std::vector<SymbolId> sigma_;
};

/// Mutable staging area for a Network.
class NetworkBuilder {
public:
  explicit NetworkBuilder(SymbolTablePtr table);

  StateId add_state(bool final = false);
  void add_arc(StateId source, Label label, StateId target);
  void set_final(StateId s, bool final = true);
  void set_start(StateId s);

  /// Copies every state and arc of `net`; returns the id offset of the copy.
  StateId append(const Network &net);

  std::size_t num_states() const { return arcs_.size(); }
  const SymbolTablePtr &table() const { return table_; }

  Network build() &&;

private:
  SymbolTablePtr table_;
  StateId start_ = 0;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<bool> final_;
};

/// Throws TableMismatch unless both networks use the same table.
void require_same_table(const Network &a, const Network &b);

} // namespace fsmcalc
