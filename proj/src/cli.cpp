#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpt/report.hpp"

namespace cpt {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

CptElementSet named_set(const std::string& name) {
  if (name == "dt") return build_dt_set();
  if (name == "ext") return build_ext_set(derive_automorphism_set(build_gamma_basis()));
  throw UsageError("unknown set '" + name + "' (expected dt or ext)");
}

Json order_structure_json(const OrderStructure& os) {
  Json j = Json::object();
  for (const auto& [order, count] : os) j[std::to_string(order)] = count;
  return j;
}

std::string order_structure_text(const OrderStructure& os) {
  const auto [n2, n4] = order_pair(os);
  std::string s = "(" + std::to_string(n2) + "," + std::to_string(n4) + ")";
  std::string extra;
  for (const auto& [order, count] : os)
    if (order != 2 && order != 4) extra += " " + std::to_string(count) + "x order " + std::to_string(order);
  return extra.empty() ? s : s + " plus" + extra;
}

Json mapping_json(const FiniteGroup& a, const FiniteGroup& b, const GroupHom& hom) {
  Json j = Json::object();
  for (int x = 0; x < a.order(); ++x) j[a.label(x)] = b.label(hom.mapping[x]);
  return j;
}

void print_kv_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  out << "key,value\n";
  for (const auto& [k, v] : rows) out << k << ',' << v << '\n';
}

int cmd_verify_gamma(Format fmt, std::ostream& out) {
  const CliffordReport report = verify_clifford_relations(build_gamma_basis());
  const SymmetryPatterns patterns = symmetry_patterns(build_gamma_basis());
  if (fmt == Format::json) {
    Json j;
    j["checked"] = report.checked;
    j["holding"] = report.holding();
    Json failures = Json::array();
    for (const auto& f : report.failures)
      failures.push_back({{"alpha", f.alpha}, {"beta", f.beta}, {"residual", f.residual.to_string()}});
    j["failures"] = failures;
    j["transpose_pattern"] = pattern_string(patterns.transpose);
    j["conjugation_pattern"] = pattern_string(patterns.conjugation);
    out << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    print_kv_csv(out, {{"checked", std::to_string(report.checked)},
                       {"holding", std::to_string(report.holding())},
                       {"transpose_pattern", pattern_string(patterns.transpose)},
                       {"conjugation_pattern", pattern_string(patterns.conjugation)}});
  } else {
    out << report.holding() << "/" << report.checked << " relations hold\n";
    for (const auto& f : report.failures)
      out << "  fails: (" << f.alpha << "," << f.beta << ") residual " << f.residual << '\n';
  }
  return report.passed() ? kOk : kFailed;
}

int cmd_generate(int p, int q, Format fmt, std::ostream& out) {
  const AlgebraSignature sig(p, q);
  if (sig.dim() > 10) throw UsageError("generate supports p + q <= 10");
  const BladeGroup g = clifford_group(sig);
  const OrderStructure os = order_structure(g.group);
  std::vector<std::string> center_labels;
  for (int z : center(g.group)) center_labels.push_back(g.group.label(z));

  if (fmt == Format::json) {
    Json j;
    j["p"] = p;
    j["q"] = q;
    j["order"] = g.group.order();
    j["order_structure"] = order_structure_json(os);
    j["center"] = center_labels;
    j["type_mod8"] = type_mod8(sig);
    out << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    std::vector<std::pair<std::string, std::string>> rows{{"p", std::to_string(p)},
                                                          {"q", std::to_string(q)},
                                                          {"order", std::to_string(g.group.order())},
                                                          {"type_mod8", std::to_string(type_mod8(sig))}};
    for (const auto& [order, count] : os) rows.emplace_back("order_" + std::to_string(order), std::to_string(count));
    print_kv_csv(out, rows);
  } else {
    out << "G(" << p << "," << q << "): order " << g.group.order() << ", order structure " << order_structure_text(os)
        << '\n';
    out << "center:";
    for (const auto& l : center_labels) out << ' ' << l;
    out << "\ntype p-q mod 8: " << type_mod8(sig) << '\n';
  }
  return kOk;
}

int cmd_table(const std::string& set_name, Format fmt, std::ostream& out) {
  out << render_table(make_rendered_table(cayley_table_signed(named_set(set_name))), fmt);
  return kOk;
}

int cmd_signature(const std::string& set_name, Format fmt, std::ostream& out) {
  const CptElementSet set = named_set(set_name);
  const CptSignature sig = compute_signature(set);
  if (fmt == Format::json) {
    Json j;
    j["set"] = set_name;
    Json signs = Json::array();
    for (int s : sig.signs) signs.push_back(s > 0 ? "+" : "-");
    j["signature"] = signs;
    Json elements = Json::object();
    for (std::size_t k = 0; k < 8; ++k) elements[set.names[k]] = blade_label(set.elements[k].representative());
    j["elements"] = elements;
    j["plus"] = sig.plus_count();
    j["minus"] = sig.minus_count();
    out << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    out << "P,T,PT,C,CP,CT,CPT\n";
    for (std::size_t k = 0; k < sig.signs.size(); ++k) out << (k ? "," : "") << (sig.signs[k] > 0 ? '+' : '-');
    out << '\n';
  } else {
    out << sig.to_string() << '\n';
  }
  return kOk;
}

int cmd_iso(const std::string& left, const std::string& right, Format fmt, std::ostream& out) {
  const BladeGroup a = signed_closure(named_set(left));
  const BladeGroup b = signed_closure(named_set(right));
  const auto hom = find_isomorphism(a.group, b.group);
  if (fmt == Format::json) {
    Json j;
    j["left"] = left;
    j["right"] = right;
    j["order"] = a.group.order();
    j["left_order_structure"] = order_structure_json(order_structure(a.group));
    j["right_order_structure"] = order_structure_json(order_structure(b.group));
    j["isomorphic"] = hom.has_value();
    if (hom) j["mapping"] = mapping_json(a.group, b.group, *hom);
    out << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    out << "left,right\n";
    if (hom)
      for (int x = 0; x < a.group.order(); ++x) out << a.group.label(x) << ',' << b.group.label(hom->mapping[x]) << '\n';
  } else {
    out << left << " (order " << a.group.order() << ") vs " << right << " (order " << b.group.order()
        << "): " << (hom ? "isomorphic" : "not isomorphic") << '\n';
    if (hom)
      for (int x = 0; x < a.group.order(); ++x)
        out << "  " << blade_label_unicode(parse_blade(a.group.label(x))) << " -> "
            << blade_label_unicode(parse_blade(b.group.label(hom->mapping[x]))) << '\n';
  }
  return hom ? kOk : kFailed;
}

int cmd_solve(const std::string& pattern_text, Format fmt, std::ostream& out) {
  const CommutationPattern pattern = parse_pattern(pattern_text);
  const auto solutions = solve_commutation_pattern(AlgebraSignature(1, 4), pattern);
  std::vector<std::string> labels;
  for (const auto& b : solutions) labels.push_back(blade_label(b));
  if (fmt == Format::json) {
    Json j;
    j["pattern"] = pattern_string(pattern);
    j["solutions"] = labels;
    out << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    out << "solution\n";
    for (const auto& l : labels) out << l << '\n';
  } else if (labels.empty()) {
    out << "no solutions\n";
  } else {
    for (std::size_t k = 0; k < labels.size(); ++k) out << (k ? " " : "") << labels[k];
    out << '\n';
  }
  return kOk;
}

int cmd_salingaros(Format fmt, std::ostream& out) {
  const SalingarosReport report = salingaros_check();
  if (fmt == Format::json) {
    Json j;
    j["order"] = report.construct_invariants.order;
    j["order_structure"] = order_structure_json(report.construct_invariants.orders);
    j["center_size"] = report.construct_invariants.center_size;
    j["g14_order"] = report.g14_invariants.order;
    j["g14_order_structure"] = order_structure_json(report.g14_invariants.orders);
    j["g14_center_size"] = report.g14_invariants.center_size;
    j["isomorphic"] = report.isomorphism.has_value();
    if (report.isomorphism) j["mapping"] = mapping_json(report.construct, report.g14, *report.isomorphism);
    out << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    print_kv_csv(out, {{"order", std::to_string(report.construct_invariants.order)},
                       {"order_structure", order_structure_text(report.construct_invariants.orders)},
                       {"center_size", std::to_string(report.construct_invariants.center_size)},
                       {"isomorphic", report.isomorphism ? "true" : "false"}});
  } else {
    out << "Q4 o D4 o (Z2 x Z2): order " << report.construct_invariants.order << ", order structure "
        << order_structure_text(report.construct_invariants.orders) << ", center size "
        << report.construct_invariants.center_size << '\n';
    out << "G(1,4): order " << report.g14_invariants.order << ", order structure "
        << order_structure_text(report.g14_invariants.orders) << ", center size "
        << report.g14_invariants.center_size << '\n';
    out << (report.isomorphism ? "explicit isomorphism found" : "no isomorphism found") << '\n';
  }
  return report.passed() ? kOk : kFailed;
}

int cmd_diff(const std::string& set_name, const std::string& path, Format fmt, std::ostream& out) {
  const RenderedTable computed = make_rendered_table(cayley_table_signed(named_set(set_name)));
  const auto mismatches = diff_against_reference(computed, path);
  if (fmt == Format::json) {
    Json j;
    j["set"] = set_name;
    j["reference"] = path;
    Json list = Json::array();
    for (const auto& m : mismatches)
      list.push_back({{"row", m.row}, {"col", m.col}, {"expected", m.expected}, {"actual", m.actual}});
    j["mismatches"] = list;
    out << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    out << "row,col,expected,actual\n";
    for (const auto& m : mismatches) out << m.row << ',' << m.col << ',' << m.expected << ',' << m.actual << '\n';
  } else if (mismatches.empty()) {
    out << "tables agree on all " << computed.rows.size() * computed.cols.size() << " cells\n";
  } else {
    out << mismatches.size() << " mismatched cell(s)\n";
    for (const auto& m : mismatches)
      out << "  row " << m.row << ", col " << m.col << ": reference " << m.expected << ", computed " << m.actual
          << '\n';
  }
  return mismatches.empty() ? kOk : kFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete symmetry groups of Cl(1,4)", "cptgroups"};
  app.require_subcommand(1);
  std::string format_text = "md";
  app.add_option("--format", format_text, "Output format: md, csv or json")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  app.fallthrough();

  const std::vector<std::string> set_names{"dt", "ext"};
  std::string set_name, left, right, pattern, reference;
  int p = 1, q = 4;

  auto* verify = app.add_subcommand("verify-gamma", "Check the 25 Clifford anticommutation relations");
  auto* generate = app.add_subcommand("generate", "Order and order structure of G(p,q)");
  generate->add_option("--p", p, "Generators squaring to +1")->required();
  generate->add_option("--q", q, "Generators squaring to -1")->required();
  auto* table = app.add_subcommand("table", "Signed Cayley table of a CPT set");
  table->add_option("--set", set_name)->required()->check(CLI::IsMember(set_names));
  auto* signature = app.add_subcommand("signature", "Signs of the squares of P, T, PT, C, CP, CT, CPT");
  signature->add_option("--set", set_name)->required()->check(CLI::IsMember(set_names));
  auto* iso = app.add_subcommand("iso", "Isomorphism between the order-16 CPT closures");
  iso->add_option("--left", left)->required()->check(CLI::IsMember(set_names));
  iso->add_option("--right", right)->required()->check(CLI::IsMember(set_names));
  auto* solve = app.add_subcommand("solve", "Blades with a prescribed commutation pattern");
  solve->add_option("--pattern", pattern, "Five signs, e.g. ++-+-")->required()->allow_extra_args(false);
  auto* salingaros = app.add_subcommand("salingaros", "Check G(1,4) against Q4 o D4 o (Z2 x Z2)");
  auto* diff = app.add_subcommand("diff", "Compare a computed table with a reference CSV");
  diff->add_option("--set", set_name)->required()->check(CLI::IsMember(set_names));
  diff->add_option("--reference", reference)->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    const Format fmt = parse_format(format_text);
    if (verify->parsed()) return cmd_verify_gamma(fmt, out);
    if (generate->parsed()) return cmd_generate(p, q, fmt, out);
    if (table->parsed()) return cmd_table(set_name, fmt, out);
    if (signature->parsed()) return cmd_signature(set_name, fmt, out);
    if (iso->parsed()) return cmd_iso(left, right, fmt, out);
    if (solve->parsed()) return cmd_solve(pattern, fmt, out);
    if (salingaros->parsed()) return cmd_salingaros(fmt, out);
    if (diff->parsed()) return cmd_diff(set_name, reference, fmt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StructureError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kFailed;
  }
  err << app.help();
  return kUsage;
}

}  // namespace cpt
