#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace fsmcalc {

using SymbolId = std::int32_t;

/// Epsilon is always id 0. Its print name is reserved.
inline constexpr SymbolId kEpsilon = 0;
inline constexpr std::string_view kEpsilonName = "@0@";

/// Interns print names to dense ids. Single-character and multicharacter
/// names (`+Noun`, `.m>.`, `^[`) are treated alike. Interning is guarded by
/// a lock so one table can back concurrent compilations.
class SymbolTable {
public:
  SymbolTable();
  SymbolTable(const SymbolTable &) = delete;
  SymbolTable &operator=(const SymbolTable &) = delete;

  /// Returns the id for `name`, creating it on first use. Throws Error when
  /// the name is empty or contains whitespace.
  SymbolId intern(std::string_view name);

  std::optional<SymbolId> find(std::string_view name) const;

  /// References stay valid for the lifetime of the table.
  const std::string &name(SymbolId id) const;

  std::size_t size() const;

private:
  mutable std::shared_mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, SymbolId> ids_;
};

using SymbolTablePtr = std::shared_ptr<SymbolTable>;

inline SymbolTablePtr make_symbol_table() {
  return std::make_shared<SymbolTable>();
}

} // namespace fsmcalc
