#include "fsmcalc/symbol_table.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "fsmcalc/error.hpp"

namespace fsmcalc {

SymbolTable::SymbolTable() {
  names_.emplace_back(kEpsilonName);
  ids_.emplace(std::string(kEpsilonName), kEpsilon);
}

SymbolId SymbolTable::intern(std::string_view name) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end())
      return it->second;
  }
  if (name.empty())
    throw Error("empty symbol name");
  if (std::any_of(name.begin(), name.end(),
                  [](unsigned char c) { return std::isspace(c); }))
    throw Error("symbol name contains whitespace: '" + std::string(name) +
                "'");
  std::unique_lock lock(mutex_);
  auto [it, inserted] =
      ids_.emplace(std::string(name), static_cast<SymbolId>(names_.size()));
  if (inserted)
    names_.emplace_back(name);
  return it->second;
}

std::optional<SymbolId> SymbolTable::find(std::string_view name) const {
  std::shared_lock lock(mutex_);
  if (auto it = ids_.find(std::string(name)); it != ids_.end())
    return it->second;
  return std::nullopt;
}

const std::string &SymbolTable::name(SymbolId id) const {
  std::shared_lock lock(mutex_);
  return names_.at(static_cast<std::size_t>(id));
}

std::size_t SymbolTable::size() const {
  std::shared_lock lock(mutex_);
  return names_.size();
}

} // namespace fsmcalc
