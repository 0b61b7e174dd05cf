#include "groupmin/reports.hpp"

#include <sstream>

#include <json.hpp>

#include "groupmin/boolean_ops.hpp"
#include "groupmin/errors.hpp"
#include "groupmin/product.hpp"

namespace groupmin {

namespace {

using nlohmann::json;

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string points_1based(const std::vector<Point>& pts) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ',';
    out << pts[i] + 1;
  }
  out << '}';
  return out.str();
}

json points_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (Point p : pts) arr.push_back(p + 1);
  return arr;
}

struct GroupFacts {
  std::size_t order = 0;
  bool transitive = false;
  bool primitive = false;
};

GroupFacts group_facts(const PermGroup& g) {
  GroupFacts f;
  f.order = g.order();
  f.transitive = is_transitive(g);
  f.primitive = f.transitive && is_primitive(g);
  return f;
}

}  // namespace

std::string analyze_report(const Dfa& d, const ReportOptions& opts) {
  json rep;
  rep["states"] = d.state_count;
  rep["alphabet"] = d.alphabet;
  rep["initial"] = d.initial + 1;
  rep["final"] = points_json(d.finals);
  bool accessible = is_accessible(d);
  rep["accessible"] = accessible;
  rep["strongly_connected"] = is_strongly_connected(d);
  bool perm = is_permutation_dfa(d);
  rep["permutation_dfa"] = perm;
  rep["minimal"] = is_minimal(d);
  rep["state_complexity"] = state_complexity(d);

  std::vector<std::string> block_strings;
  bool has_group = false;
  GroupFacts facts;
  bool brute_ran = false, brute_verdict = false;
  bool prim_route = false;
  bool saturation_ran = false, saturation_verdict = false;
  if (perm) {
    has_group = true;
    PermGroup g = transition_group(d, opts.element_cap);
    facts = group_facts(g);
    prim_route = facts.primitive;
    if (d.state_count <= opts.subset_limit) {
      for (const auto& b : all_nontrivial_blocks(g, opts.subset_limit))
        block_strings.push_back(points_1based(b));
    }
    if (d.state_count >= 2 && d.state_count <= opts.subset_limit) {
      brute_ran = true;
      brute_verdict = is_uniformly_minimal_bruteforce(d);
    }
    if (accessible && !d.finals.empty() && d.finals.size() < d.state_count) {
      saturation_ran = true;
      saturation_verdict = minimality_via_saturation(d);
    }
  }

  if (opts.json) {
    if (has_group) {
      rep["transition_group_order"] = facts.order;
      rep["transitive"] = facts.transitive;
      rep["primitive"] = facts.primitive;
      rep["uniformly_minimal_primitivity"] = prim_route;
      if (d.state_count <= opts.subset_limit)
        rep["nontrivial_blocks"] = block_strings;
      if (brute_ran) rep["uniformly_minimal_bruteforce"] = brute_verdict;
      if (saturation_ran) rep["minimal_via_saturation"] = saturation_verdict;
    }
    return rep.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "states: " << d.state_count << '\n';
  out << "alphabet:";
  for (const auto& a : d.alphabet) out << ' ' << a;
  out << '\n';
  out << "initial: " << d.initial + 1 << '\n';
  out << "final: " << points_1based(d.finals) << '\n';
  out << "accessible: " << yesno(accessible) << '\n';
  out << "strongly-connected: " << yesno(rep["strongly_connected"].get<bool>())
      << '\n';
  out << "permutation-dfa: " << yesno(perm) << '\n';
  out << "minimal: " << yesno(rep["minimal"].get<bool>()) << '\n';
  out << "state-complexity: " << rep["state_complexity"].get<std::size_t>()
      << '\n';
  if (has_group) {
    out << "transition-group-order: " << facts.order << '\n';
    out << "transitive: " << yesno(facts.transitive) << '\n';
    out << "primitive: " << yesno(facts.primitive) << '\n';
    if (d.state_count <= opts.subset_limit) {
      out << "nontrivial-blocks:";
      if (block_strings.empty()) {
        out << " none";
      } else {
        for (const auto& b : block_strings) out << ' ' << b;
      }
      out << '\n';
    } else {
      out << "nontrivial-blocks: skipped (degree above subset limit)\n";
    }
    out << "uniformly-minimal-primitivity: " << yesno(prim_route) << '\n';
    if (brute_ran) {
      out << "uniformly-minimal-bruteforce: " << yesno(brute_verdict) << '\n';
    } else {
      out << "uniformly-minimal-bruteforce: skipped\n";
    }
    if (saturation_ran)
      out << "minimal-via-saturation: " << yesno(saturation_verdict) << '\n';
  }
  return out.str();
}

std::string product_report(const Dfa& a, const Dfa& ap,
                           const ReportOptions& opts) {
  ProductGroup gx = product_group(a, ap, opts.element_cap);
  PermGroup g = proj_left(gx);
  PermGroup gp = proj_right(gx);
  GroupFacts gf = group_facts(g), gpf = group_facts(gp);

  Similarity sim = similarity_class(a, ap, opts.element_cap);
  PermGroup r_proj = full_row_stabilizer(gx);
  PermGroup c_proj = full_column_stabilizer(gx);
  AccessibilityReport acc = accessibility_report(a, ap, opts.element_cap);
  bool graph = check_prop_graph(a, ap);

  std::string verdict_str, verdict_reason;
  bool verdict_applicable = sim != Similarity::Similar &&
                            a.state_count >= 2 && ap.state_count >= 2 &&
                            (a.state_count >= 3 || ap.state_count >= 3);
  if (verdict_applicable) {
    DissimilarResult res =
        theorem_dissimilar_verdict(a, ap, opts.element_cap);
    verdict_str = to_string(res.verdict);
    verdict_reason = res.reason;
  } else {
    verdict_str = "not-applicable";
    verdict_reason = sim == Similarity::Similar
                         ? "certificate applies to dissimilar pairs only"
                         : "needs a factor with >= 3 states";
  }

  auto labels_of = [](const PermGroup& grp) {
    std::vector<std::string> out;
    for (GroupClassLabel label : corollary_dissimilar_case(grp))
      out.push_back(to_string(label));
    return out;
  };
  std::vector<std::string> labels_left = labels_of(g);
  std::vector<std::string> labels_right = labels_of(gp);

  auto stab_line = [](const PermGroup& s) {
    std::ostringstream o;
    o << "order " << s.order() << ", transitive " << yesno(is_transitive(s))
      << ", primitive " << yesno(is_primitive(s));
    return o.str();
  };
  std::vector<std::string> row_lines, col_lines;
  for (Point q = 0; q < a.state_count; ++q)
    row_lines.push_back(stab_line(row_stabilizer(gx, {q})));
  for (Point qp = 0; qp < ap.state_count; ++qp)
    col_lines.push_back(stab_line(column_stabilizer(gx, {qp})));

  bool ubm_ran = false, ubm_verdict = false;
  if (opts.ubm) {
    ubm_verdict = is_uniformly_boolean_minimal(a, ap);
    ubm_ran = true;
  }
  std::vector<std::pair<std::string, std::size_t>> op_complexities;
  if (opts.boolean_table) {
    for (BooleanFn op : all_proper_boolean_functions())
      op_complexities.emplace_back(
          op.name(), state_complexity(apply_boolean_op(a, ap, op)));
  }

  if (opts.json) {
    json rep;
    rep["left_states"] = a.state_count;
    rep["right_states"] = ap.state_count;
    rep["product_group_order"] = gx.order();
    rep["left_group"] = {{"order", gf.order},
                         {"transitive", gf.transitive},
                         {"primitive", gf.primitive},
                         {"labels", labels_left}};
    rep["right_group"] = {{"order", gpf.order},
                          {"transitive", gpf.transitive},
                          {"primitive", gpf.primitive},
                          {"labels", labels_right}};
    rep["similarity"] = to_string(sim);
    rep["full_row_stabilizer_order"] = r_proj.order();
    rep["full_column_stabilizer_order"] = c_proj.order();
    rep["accessible"] = acc.verdict;
    rep["accessibility_conditions"] = {
        {"bfs", acc.bfs_accessible},
        {"all_stabilizers", acc.all_stabilizers_transitive},
        {"row_or_column", acc.some_row_or_column},
        {"pair_orbit", acc.pair_orbit_transitive}};
    rep["graph_condition"] = graph;
    rep["certificate_verdict"] = verdict_str;
    rep["certificate_reason"] = verdict_reason;
    rep["row_stabilizers"] = row_lines;
    rep["column_stabilizers"] = col_lines;
    if (ubm_ran) rep["uniformly_boolean_minimal"] = ubm_verdict;
    if (opts.boolean_table) {
      json table = json::object();
      for (const auto& [name, sc] : op_complexities) table[name] = sc;
      rep["boolean_complexities"] = table;
    }
    return rep.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "left-states: " << a.state_count << '\n';
  out << "right-states: " << ap.state_count << '\n';
  out << "product-group-order: " << gx.order() << '\n';
  out << "left-group: order " << gf.order << ", transitive "
      << yesno(gf.transitive) << ", primitive " << yesno(gf.primitive) << '\n';
  out << "right-group: order " << gpf.order << ", transitive "
      << yesno(gpf.transitive) << ", primitive " << yesno(gpf.primitive)
      << '\n';
  out << "similarity: " << to_string(sim) << '\n';
  out << "full-row-stabilizer-order: " << r_proj.order() << '\n';
  out << "full-column-stabilizer-order: " << c_proj.order() << '\n';
  out << "accessible: " << yesno(acc.verdict) << " (bfs "
      << yesno(acc.bfs_accessible) << ", stabilizers "
      << yesno(acc.all_stabilizers_transitive) << ", row-or-column "
      << yesno(acc.some_row_or_column) << ", pair-orbit "
      << yesno(acc.pair_orbit_transitive) << ")\n";
  out << "graph-condition: " << yesno(graph) << '\n';
  out << "certificate-verdict: " << verdict_str << " (" << verdict_reason
      << ")\n";
  auto print_labels = [&](const char* side,
                          const std::vector<std::string>& labels) {
    out << side << "-group-labels:";
    if (labels.empty()) {
      out << " none";
    } else {
      for (const auto& l : labels) out << ' ' << l;
    }
    out << '\n';
  };
  print_labels("left", labels_left);
  print_labels("right", labels_right);
  for (Point q = 0; q < a.state_count; ++q)
    out << "row-stabilizer[" << q + 1 << "]: " << row_lines[q] << '\n';
  for (Point qp = 0; qp < ap.state_count; ++qp)
    out << "column-stabilizer[" << qp + 1 << "]: " << col_lines[qp] << '\n';
  if (ubm_ran)
    out << "uniformly-boolean-minimal: " << yesno(ubm_verdict) << '\n';
  for (const auto& [name, sc] : op_complexities)
    out << "complexity[" << name << "]: " << sc << '\n';
  return out.str();
}

}  // namespace groupmin
