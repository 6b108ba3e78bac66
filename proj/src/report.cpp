#include "cpt/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cpt {

Format parse_format(std::string_view text) {
  if (text == "md" || text == "markdown") return Format::markdown;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw UsageError("unknown format '" + std::string(text) + "' (expected md, csv or json)");
}

RenderedTable make_rendered_table(const SignedCayleyTable& table) {
  RenderedTable t;
  for (const SignedBlade& r : table.reps) t.rows.push_back(blade_label(r));
  t.cols = t.rows;
  for (const auto& row : table.cells) {
    std::vector<std::string> out;
    for (const SignedBlade& c : row) out.push_back(blade_label(c));
    t.cells.push_back(std::move(out));
  }
  return t;
}

RenderedTable make_rendered_table(const FiniteGroup& group) {
  RenderedTable t;
  t.rows = group.labels();
  t.cols = group.labels();
  for (int r = 0; r < group.order(); ++r) {
    std::vector<std::string> out;
    for (int c = 0; c < group.order(); ++c) out.push_back(group.label(group.mul(r, c)));
    t.cells.push_back(std::move(out));
  }
  return t;
}

namespace {

std::string unicode_label(const std::string& ascii) {
  try {
    return blade_label_unicode(parse_blade(ascii));
  } catch (const UsageError&) {
    return ascii;  // not a blade label; render as is
  }
}

}  // namespace

std::string render_table(const RenderedTable& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::markdown: {
      os << "|   |";
      for (const auto& c : table.cols) os << ' ' << unicode_label(c) << " |";
      os << "\n|---|";
      for (std::size_t k = 0; k < table.cols.size(); ++k) os << "---|";
      os << '\n';
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << "| " << unicode_label(table.rows[r]) << " |";
        for (const auto& cell : table.cells[r]) os << ' ' << unicode_label(cell) << " |";
        os << '\n';
      }
      break;
    }
    case Format::csv: {
      for (const auto& c : table.cols) os << ',' << c;
      os << '\n';
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << table.rows[r];
        for (const auto& cell : table.cells[r]) os << ',' << cell;
        os << '\n';
      }
      break;
    }
    case Format::json: {
      nlohmann::ordered_json j;
      j["rows"] = table.rows;
      j["cols"] = table.cols;
      j["cells"] = table.cells;
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

namespace {

std::vector<std::string> split_csv_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> fields;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += ch;
    }
  }
  fields.push_back(field);
  return fields;
}

}  // namespace

RenderedTable parse_csv_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    lines.push_back(split_csv_line(line));
  }
  if (lines.empty()) throw UsageError("reference table is empty");

  RenderedTable t;
  const auto& header = lines.front();
  if (header.size() < 2 || !header.front().empty())
    throw UsageError("reference header must start with an empty corner cell");
  t.cols.assign(header.begin() + 1, header.end());
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& row = lines[k];
    if (row.size() != header.size())
      throw UsageError("reference row " + std::to_string(k) + " has " + std::to_string(row.size()) +
                       " fields, expected " + std::to_string(header.size()));
    t.rows.push_back(row.front());
    t.cells.emplace_back(row.begin() + 1, row.end());
  }
  for (const auto* labels : {&t.rows, &t.cols})
    for (const auto& l : *labels) parse_blade(l);
  for (const auto& row : t.cells)
    for (const auto& cell : row) parse_blade(cell);
  return t;
}

RenderedTable load_reference_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read reference table '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv_table(buffer.str());
}

std::vector<CellMismatch> diff_against_reference(const RenderedTable& computed, const RenderedTable& reference) {
  std::vector<CellMismatch> out;
  const std::size_t nr = std::max(computed.rows.size(), reference.rows.size());
  const std::size_t nc = std::max(computed.cols.size(), reference.cols.size());
  auto at = [](const std::vector<std::string>& v, std::size_t k) { return k < v.size() ? v[k] : std::string("<missing>"); };

  for (std::size_t c = 0; c < nc; ++c) {
    if (at(computed.cols, c) != at(reference.cols, c))
      out.push_back({"<header>", std::to_string(c), at(reference.cols, c), at(computed.cols, c)});
  }
  for (std::size_t r = 0; r < nr; ++r) {
    const std::string rlabel = at(reference.rows, r);
    if (at(computed.rows, r) != rlabel) out.push_back({rlabel, "<label>", rlabel, at(computed.rows, r)});
    for (std::size_t c = 0; c < nc; ++c) {
      const std::string expected = r < reference.cells.size() ? at(reference.cells[r], c) : "<missing>";
      const std::string actual = r < computed.cells.size() ? at(computed.cells[r], c) : "<missing>";
      if (expected != actual) out.push_back({rlabel, at(reference.cols, c), expected, actual});
    }
  }
  return out;
}

std::vector<CellMismatch> diff_against_reference(const RenderedTable& computed, const std::string& reference_path) {
  return diff_against_reference(computed, load_reference_table(reference_path));
}

}  // namespace cpt
