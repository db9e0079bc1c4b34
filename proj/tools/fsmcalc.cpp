// fsmcalc: command-line front end for scripts, lookups and the demos.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fsmcalc/demos.hpp"
#include "fsmcalc/error.hpp"
#include "fsmcalc/operations.hpp"
#include "fsmcalc/session.hpp"
#include "fsmcalc/text_format.hpp"

#ifndef FSMCALC_DATA_DIR
#define FSMCALC_DATA_DIR "data"
#endif

namespace {

using namespace fsmcalc;
namespace fs = std::filesystem;

std::string slurp(std::istream &in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_script(const std::string &file) {
  Session session;
  if (file == "-")
    return session.run(slurp(std::cin), fs::current_path(), std::cin, std::cout, std::cerr);
  std::ifstream in(file);
  if (!in) {
    std::cerr << "fsmcalc: cannot open '" << file << "'\n";
    return 1;
  }
  const fs::path base = fs::path(file).parent_path();
  return session.run(slurp(in), base, std::cin, std::cout, std::cerr);
}

// Prints lower-side words, or runs lookups when a direction was given.
void report(const Network &net, const std::string &lookup, std::size_t max_len) {
  if (lookup.empty()) {
    for (const std::string &w : enumerate_words(net, max_len, Projection::Lower))
      std::cout << w << '\n';
  } else {
    write_lookups(net, lookup == "up" ? Direction::Up : Direction::Down, std::cin, std::cout);
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Finite-state calculus with compile-replace and merge"};
  app.require_subcommand(1);

  std::string script_file;
  auto *script = app.add_subcommand("script", "Run a script file ('-' for stdin)");
  script->add_option("file", script_file, "Script file")->required();

  bool up = false;
  bool down = false;
  std::string net_file;
  auto *apply_cmd = app.add_subcommand("apply", "Look up stdin lines in a saved network");
  auto *up_flag = apply_cmd->add_flag("-u,--up", up, "Lower side to upper side");
  auto *down_flag = apply_cmd->add_flag("-d,--down", down, "Upper side to lower side");
  up_flag->excludes(down_flag);
  apply_cmd->add_option("netfile", net_file, "Network in text format")
      ->required()
      ->check(CLI::ExistingFile);

  std::string demo_name;
  std::string data_dir = FSMCALC_DATA_DIR;
  std::string classes_file;
  std::string words_file;
  std::string out_file;
  std::string lookup;
  auto *demo = app.add_subcommand("demo", "Build one of the demo networks");
  demo->add_option("name", demo_name, "malay, arabic or palindromes")
      ->required()
      ->check(CLI::IsMember({"malay", "arabic", "palindromes"}));
  demo->add_option("--data", data_dir, "Directory with the demo data files");
  demo->add_option("--classes", classes_file, "Class definitions (arabic)");
  demo->add_option("--words", words_file, "Word list (palindromes)");
  demo->add_option("--out", out_file, "Save the network (or the palindrome list) here");
  demo->add_option("--lookup", lookup, "Read stdin lines and look them up instead of listing")
      ->check(CLI::IsMember({"up", "down"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*script)
      return run_script(script_file);

    if (*apply_cmd) {
      if (!up && !down) {
        std::cerr << "fsmcalc apply: give -u or -d\n";
        return 2;
      }
      const Network net = load_network(net_file, make_symbol_table());
      write_lookups(net, up ? Direction::Up : Direction::Down, std::cin, std::cout);
      return 0;
    }

    const fs::path data(data_dir);
    const SymbolTablePtr table = make_symbol_table();
    if (demo_name == "malay") {
      const Network net = build_malay(read_word_list(data / "malay_roots.txt"), table);
      if (!out_file.empty())
        save_network(net, out_file);
      report(net, lookup, 32);
    } else if (demo_name == "arabic") {
      std::ifstream cls(classes_file.empty() ? data / "arabic_classes.txt" : fs::path(classes_file));
      if (!cls)
        throw Error("cannot open the class file");
      const ClassRegistry classes = parse_classes(slurp(cls), table);
      const ArabicBuild build = build_arabic(read_word_list(data / "arabic_roots.txt"),
                                             read_word_list(data / "arabic_templates.txt"),
                                             read_word_list(data / "arabic_vocalisms.txt"),
                                             classes, table);
      for (const std::string &w : build.warnings)
        std::cerr << "warning: " << w << '\n';
      if (!out_file.empty())
        save_network(build.network, out_file);
      report(build.network, lookup, 32);
    } else {
      const auto words =
          read_word_list(words_file.empty() ? data / "words_small.txt" : fs::path(words_file));
      const auto found = extract_palindromes(words);
      std::ofstream file;
      if (!out_file.empty())
        file.open(out_file);
      std::ostream &out = out_file.empty() ? std::cout : file;
      for (const std::string &w : found)
        out << w << '\n';
    }
  } catch (const std::exception &e) {
    std::cerr << "fsmcalc: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
