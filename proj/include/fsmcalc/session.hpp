#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsmcalc/apply.hpp"
#include "fsmcalc/merge.hpp"
#include "fsmcalc/network.hpp"
#include "fsmcalc/regex.hpp"

namespace fsmcalc {

/// Runs lookups for every line of `in` and writes them as
///
///     <input>
///     \t<output>        one line per result, or `\t+?` when there is none
///     \t+TRUNCATED      when the result cap was hit
void write_lookups(const Network &net, Direction direction, std::istream &in,
                   std::ostream &out, const ApplyOptions &options = {});

/// Script interpreter. See SCRIPT.md for the command language.
class Session {
public:
  explicit Session(SymbolTablePtr table = make_symbol_table());

  /// Executes every statement of `text`. Relative file names resolve
  /// against `base_dir`. `in` feeds `apply` commands. Returns 0 on success;
  /// on the first error writes `line N: message` to `err` and returns 1.
  int run(std::string_view text, const std::filesystem::path &base_dir,
          std::istream &in, std::ostream &out, std::ostream &err);

  /// Executes one statement (without the trailing `;`). Throws on error.
  void execute(std::string_view statement, const std::filesystem::path &base_dir,
               std::istream &in, std::ostream &out);

  const SymbolTablePtr &table() const { return table_; }
  const Definitions &definitions() const { return defs_; }
  const ClassRegistry &classes() const { return classes_; }
  /// Network bound to `name`; `_` is the last result. Throws if unbound.
  const Network &get(std::string_view name) const;

private:
  void execute_words(const std::string &command, const std::vector<std::string> &args,
                     const std::filesystem::path &base_dir, std::istream &in, std::ostream &out);
  void bind(const std::string &name, Network net);

  SymbolTablePtr table_;
  Definitions defs_;
  ClassRegistry classes_;
  std::optional<Network> last_;
};

} // namespace fsmcalc
