#include "fsmcalc/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "fsmcalc/error.hpp"

namespace fsmcalc {

namespace {

constexpr std::string_view kHeader = "fsmcalc 1";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  for (;;) {
    std::size_t tab = line.find('\t', begin);
    fields.push_back(line.substr(begin, tab - begin));
    if (tab == std::string_view::npos)
      return fields;
    begin = tab + 1;
  }
}

StateId parse_state(std::string_view field, std::size_t line) {
  StateId value = -1;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value < 0)
    throw FormatError("bad state id '" + std::string(field) + "'", line);
  return value;
}

} // namespace

std::string write_text(const Network &net) {
  // Swap the start state into slot 0.
  auto id = [&](StateId s) {
    if (s == net.start())
      return StateId{0};
    if (s == 0)
      return net.start();
    return s;
  };
  auto symbol = [&](SymbolId sym) -> const std::string & { return net.name(sym); };

  std::ostringstream out;
  out << kHeader << '\n';
  const auto n = static_cast<StateId>(net.num_states());
  for (StateId printed = 0; printed < n; ++printed) {
    StateId s = id(printed);
    for (const Arc &arc : net.arcs(s))
      out << printed << '\t' << id(arc.target) << '\t' << symbol(arc.label.upper)
          << '\t' << symbol(arc.label.lower) << '\n';
  }
  for (StateId printed = 0; printed < n; ++printed)
    if (net.is_final(id(printed)))
      out << "final\t" << printed << '\n';
  return out.str();
}

Network read_text(std::string_view text, const SymbolTablePtr &table) {
  struct PendingArc {
    StateId source, target;
    Label label;
  };
  std::vector<PendingArc> arcs;
  std::vector<StateId> finals;
  StateId max_state = 0;

  std::size_t line_no = 0;
  bool seen_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (!seen_header) {
      if (line != kHeader)
        throw FormatError("expected header '" + std::string(kHeader) + "'", line_no);
      seen_header = true;
      continue;
    }
    if (line.empty())
      continue;
    auto fields = split_tabs(line);
    if (fields.size() == 2 && fields[0] == "final") {
      StateId s = parse_state(fields[1], line_no);
      finals.push_back(s);
      max_state = std::max(max_state, s);
      continue;
    }
    if (fields.size() != 4)
      throw FormatError("expected 4 tab-separated fields", line_no);
    StateId source = parse_state(fields[0], line_no);
    StateId target = parse_state(fields[1], line_no);
    if (fields[2].empty() || fields[3].empty())
      throw FormatError("empty symbol", line_no);
    Label label{table->intern(fields[2]), table->intern(fields[3])};
    arcs.push_back({source, target, label});
    max_state = std::max({max_state, source, target});
  }
  if (!seen_header)
    throw FormatError("empty input", 1);

  NetworkBuilder builder(table);
  for (StateId s = 0; s <= max_state; ++s)
    builder.add_state();
  for (const PendingArc &arc : arcs)
    builder.add_arc(arc.source, arc.label, arc.target);
  for (StateId s : finals)
    builder.set_final(s);
  builder.set_start(0);
  return std::move(builder).build();
}

void save_network(const Network &net, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot open '" + path.string() + "' for writing");
  out << write_text(net);
  if (!out)
    throw Error("write failed: '" + path.string() + "'");
}

Network load_network(const std::filesystem::path &path,
                     const SymbolTablePtr &table) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_text(buffer.str(), table);
}

} // namespace fsmcalc
