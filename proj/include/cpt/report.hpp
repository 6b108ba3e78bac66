#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cpt/cpt_groups.hpp"

namespace cpt {

enum class Format { markdown, csv, json };

Format parse_format(std::string_view text);

/// Cayley table as labels in the ASCII blade grammar.
struct RenderedTable {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> cells;

  friend bool operator==(const RenderedTable&, const RenderedTable&) = default;
};

RenderedTable make_rendered_table(const SignedCayleyTable& table);
/// Labels of the group elements; cells are the product labels.
RenderedTable make_rendered_table(const FiniteGroup& group);

/// Markdown swaps the ASCII "g" prefix for a unicode gamma; csv and json keep ASCII.
std::string render_table(const RenderedTable& table, Format format);

/// CSV contract: header row is an empty corner cell followed by the column
/// labels; each later row is a row label followed by its cells.
RenderedTable parse_csv_table(std::string_view text);
/// Reads and parses a reference file; UsageError when unreadable or ill-formed.
RenderedTable load_reference_table(const std::string& path);

struct CellMismatch {
  std::string row;
  std::string col;
  std::string expected;  // reference
  std::string actual;    // computed
};

/// Empty iff the tables agree on every label and cell.
std::vector<CellMismatch> diff_against_reference(const RenderedTable& computed, const RenderedTable& reference);
std::vector<CellMismatch> diff_against_reference(const RenderedTable& computed, const std::string& reference_path);

/// Executes one CLI command. Returns 0 on success, 1 when a verification
/// fails, 2 on usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpt
