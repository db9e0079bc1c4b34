#include "fsmcalc/network.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fsmcalc/error.hpp"

namespace fsmcalc {

Network::Network(SymbolTablePtr table)
    : table_(std::move(table)), arcs_(1), final_(1, false) {}

std::size_t Network::num_arcs() const {
  std::size_t n = 0;
  for (const auto &out : arcs_)
    n += out.size();
  return n;
}

bool Network::contains_symbol(SymbolId sym) const {
  return std::binary_search(sigma_.begin(), sigma_.end(), sym);
}

std::vector<SymbolId> Network::side_sigma(bool upper) const {
  std::set<SymbolId> seen;
  for (const auto &out : arcs_)
    for (const auto &arc : out) {
      SymbolId s = upper ? arc.label.upper : arc.label.lower;
      if (s != kEpsilon)
        seen.insert(s);
    }
  return {seen.begin(), seen.end()};
}

bool Network::is_automaton() const {
  for (const auto &out : arcs_)
    for (const auto &arc : out)
      if (!arc.label.is_identity())
        return false;
  return true;
}

NetworkBuilder::NetworkBuilder(SymbolTablePtr table) : table_(std::move(table)) {}

StateId NetworkBuilder::add_state(bool final) {
  arcs_.emplace_back();
  final_.push_back(final);
  return static_cast<StateId>(arcs_.size() - 1);
}

void NetworkBuilder::add_arc(StateId source, Label label, StateId target) {
  if (source < 0 || target < 0 ||
      static_cast<std::size_t>(source) >= arcs_.size() ||
      static_cast<std::size_t>(target) >= arcs_.size())
    throw std::out_of_range("add_arc: state out of range");
  arcs_[static_cast<std::size_t>(source)].push_back({label, target});
}

void NetworkBuilder::set_final(StateId s, bool final) {
  final_.at(static_cast<std::size_t>(s)) = final;
}

void NetworkBuilder::set_start(StateId s) {
  if (s < 0 || static_cast<std::size_t>(s) >= arcs_.size())
    throw std::out_of_range("set_start: state out of range");
  start_ = s;
}

StateId NetworkBuilder::append(const Network &net) {
  if (net.table() != table_)
    throw TableMismatch();
  const auto offset = static_cast<StateId>(arcs_.size());
  for (std::size_t s = 0; s < net.num_states(); ++s) {
    auto &out = arcs_.emplace_back();
    final_.push_back(net.is_final(static_cast<StateId>(s)));
    for (const Arc &arc : net.arcs(static_cast<StateId>(s)))
      out.push_back({arc.label, arc.target + offset});
  }
  return offset;
}

Network NetworkBuilder::build() && {
  if (arcs_.empty())
    add_state();
  Network net;
  net.table_ = std::move(table_);
  net.start_ = start_;
  net.arcs_ = std::move(arcs_);
  net.final_ = std::move(final_);
  std::set<SymbolId> sigma;
  for (const auto &out : net.arcs_)
    for (const auto &arc : out) {
      if (arc.label.upper != kEpsilon)
        sigma.insert(arc.label.upper);
      if (arc.label.lower != kEpsilon)
        sigma.insert(arc.label.lower);
    }
  net.sigma_.assign(sigma.begin(), sigma.end());
  return net;
}

void require_same_table(const Network &a, const Network &b) {
  if (a.table() != b.table())
    throw TableMismatch();
}

} // namespace fsmcalc
