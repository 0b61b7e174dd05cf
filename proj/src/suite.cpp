#include "groupmin/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "groupmin/boolean_ops.hpp"
#include "groupmin/dfa.hpp"
#include "groupmin/examples.hpp"
#include "groupmin/gf2k.hpp"
#include "groupmin/perm.hpp"
#include "groupmin/perm_group.hpp"
#include "groupmin/product.hpp"

namespace groupmin {

namespace {

struct Check {
  std::ostringstream log;
  bool ok = true;
  int failures_logged = 0;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (++failures_logged > 5) return;
      if (log.tellp() > 0) log << "; ";
      log << (failures_logged == 5 ? "FAILED: " + what + "; ..."
                                   : "FAILED: " + what);
    }
  }
  void note(const std::string& what) {
    if (log.tellp() > 0) log << "; ";
    log << what;
  }
};

using Rng = std::mt19937_64;

std::size_t rand_index(Rng& rng, std::size_t n) { return rng() % n; }

Permutation random_permutation(Rng& rng, std::size_t degree) {
  std::vector<Point> im(degree);
  for (Point i = 0; i < degree; ++i) im[i] = i;
  for (std::size_t i = degree; i > 1; --i)
    std::swap(im[i - 1], im[rand_index(rng, i)]);
  return Permutation(std::move(im));
}

std::vector<std::string> letters(std::size_t count) {
  static const std::vector<std::string> pool = {"a", "b", "c", "d"};
  return {pool.begin(), pool.begin() + count};
}

Dfa random_permutation_dfa(Rng& rng, std::size_t degree, std::size_t letter_count,
                           std::vector<Point> finals) {
  std::vector<Transformation> delta;
  for (std::size_t l = 0; l < letter_count; ++l)
    delta.push_back(random_permutation(rng, degree));
  Point initial = static_cast<Point>(rand_index(rng, degree));
  return Dfa(degree, letters(letter_count), std::move(delta), initial,
             std::move(finals));
}

std::vector<Point> random_nontrivial_subset(Rng& rng, std::size_t n) {
  while (true) {
    std::vector<Point> s;
    for (Point q = 0; q < n; ++q)
      if (rng() & 1) s.push_back(q);
    if (!s.empty() && s.size() < n) return s;
  }
}

// --- the sixteen checks ---------------------------------------------

void check_cyc_comp(Check& c) {
  PermGroup g = PermGroup::from_generators({parse_cycles("(1,2,3,4,5,6)", 6)});
  c.expect(is_transitive(g), "<(1..6)> transitive");
  c.expect(!is_primitive(g), "<(1..6)> imprimitive");
  std::vector<std::vector<Point>> expected = {
      {0, 3}, {1, 4}, {2, 5}, {0, 2, 4}, {1, 3, 5}};
  std::vector<std::vector<Point>> blocks = all_nontrivial_blocks(g);
  c.expect(blocks == expected, "exactly the five known non-trivial blocks");
  for (const auto& b : blocks)
    c.expect(b.size() != 4 && b.size() != 5, "no blocks of size 4 or 5");
}

void check_cyc_prime(Check& c) {
  c.expect(is_primitive(PermGroup::from_generators({parse_cycles(
               "(1,2,3,4,5)", 5)})),
           "<(1..5)> primitive");
  Rng rng(0x9a375cf1u);
  std::size_t transitive_seen = 0;
  for (std::size_t degree : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t gens = 1 + rand_index(rng, 3);
      std::vector<Permutation> gen_list;
      for (std::size_t i = 0; i < gens; ++i)
        gen_list.push_back(random_permutation(rng, degree));
      PermGroup g = PermGroup::from_generators(std::move(gen_list));
      if (!is_transitive(g)) continue;
      ++transitive_seen;
      c.expect(is_primitive(g), "transitive group of prime degree " +
                                    std::to_string(degree) + " primitive");
    }
  }
  c.expect(transitive_seen > 50, "enough transitive samples");
}

void check_altdfa(Check& c) {
  Dfa d = examples::altdfa();
  c.expect(is_strongly_connected(d), "altdfa strongly connected");
  PermGroup g = transition_group(d);
  c.expect(g.order() == 12, "transition group order 12");
  c.expect(classify_sym_or_alt(g) == SymOrAlt::Alternating,
           "transition group is alternating");
  bool brute = is_uniformly_minimal_bruteforce(d);
  bool prim = is_uniformly_minimal_via_primitivity(d);
  c.expect(brute, "uniformly minimal by brute force over 14 cognates");
  c.expect(prim, "uniformly minimal via primitivity");
  c.expect(brute == prim, "the two routes agree");
}

void check_cycdfa(Check& c) {
  Dfa d = examples::cycdfa();
  c.expect(!is_minimal(d), "cycdfa not minimal");
  StatePartition p = indistinguishability_partition(d, d.finals);
  c.expect(p.same_class(0, 2) && p.same_class(2, 4),
           "states 1,3,5 share an indistinguishability class");
}

void check_symdiff2(Check& c) {
  auto [a, ap] = examples::symdiff2_pair();
  c.expect(!has_maximal_boolean_complexity(a, ap),
           "pair fails maximal boolean complexity");
  Dfa prod = apply_boolean_op(a, ap, BooleanFn::symmetric_difference());
  StatePartition p = indistinguishability_partition(prod, prod.finals);
  c.expect(p.same_class(1, 2), "(1,2) and (2,1) indistinguishable");
  c.expect(state_complexity(prod) < 4, "symmetric difference complexity < 4");
}

void check_ubm(Check& c) {
  auto [a, ap] = examples::ubm_pair();
  bool brute = is_uniformly_boolean_minimal(a, ap);
  c.expect(brute, "uniformly boolean minimal by brute force");
  c.expect(similarity_class(a, ap) == Similarity::Dissimilar,
           "pair is dissimilar");
  c.expect(classify_sym_or_alt(transition_group(ap)) == SymOrAlt::Symmetric,
           "right group is S3");
  DissimilarResult verdict = theorem_dissimilar_verdict(a, ap);
  c.expect(verdict.verdict == DissimilarVerdict::UbmGuaranteed,
           "certificate guarantees uniform boolean minimality");
  c.expect(brute == (verdict.verdict == DissimilarVerdict::UbmGuaranteed),
           "both routes agree");
}

void check_wit(Check& c) {
  for (std::size_t m = 3; m <= 5; ++m) {
    for (std::size_t n = 3; n <= 5; ++n) {
      auto [ml, mr] = maslov_pair(m, n);
      auto [yl, yr] = yzs_pair(m, n);
      for (BooleanFn op : all_proper_boolean_functions()) {
        c.expect(state_complexity(apply_boolean_op(ml, mr, op)) == m * n,
                 "maslov(" + std::to_string(m) + "," + std::to_string(n) +
                     ") " + op.name() + " reaches " + std::to_string(m * n));
        c.expect(state_complexity(apply_boolean_op(yl, yr, op)) == m * n,
                 "yzs(" + std::to_string(m) + "," + std::to_string(n) + ") " +
                     op.name() + " reaches " + std::to_string(m * n));
      }
    }
  }
}

void check_thm1_property(Check& c) {
  Rng rng(0x51a7e20bu);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 3 + rand_index(rng, 4);
    std::size_t np = 3 + rand_index(rng, 4);
    std::size_t k = 1 + rand_index(rng, 3);
    Dfa a = random_permutation_dfa(rng, n, k,
                                   {static_cast<Point>(rand_index(rng, n))});
    Dfa ap = random_permutation_dfa(rng, np, k,
                                    {static_cast<Point>(rand_index(rng, np))});
    try {
      Theorem1fstateReport rep = theorem_1fstate_check(a, ap);
      c.expect(rep.consistent, "one-final-state equivalence");
    } catch (const std::exception& e) {
      c.expect(false, std::string("trial ") + std::to_string(trial) + ": " +
                          e.what());
      return;
    }
  }
}

void check_lemma2_property(Check& c) {
  Rng rng(0xd00dfeedu);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rand_index(rng, 5);
    std::size_t np = 2 + rand_index(rng, 5);
    std::size_t k = 1 + rand_index(rng, 3);
    Dfa a = random_permutation_dfa(rng, n, k, {0});
    Dfa ap = random_permutation_dfa(rng, np, k, {0});
    try {
      AccessibilityReport rep = accessibility_report(a, ap);
      c.expect(check_prop_graph(a, ap) == rep.verdict,
               "graph condition matches, trial " + std::to_string(trial));
    } catch (const std::exception& e) {
      c.expect(false, std::string("trial ") + std::to_string(trial) + ": " +
                          e.what());
      return;
    }
  }
}

std::vector<Point> block_pattern_finals(const ProductDfa& prod,
                                        const std::vector<Point>& b) {
  std::vector<bool> in_b(prod.left.state_count, false);
  for (Point q : b) in_b[q] = true;
  std::vector<Point> finals;
  for (Point q = 0; q < prod.left.state_count; ++q)
    for (Point qp = 0; qp < prod.right.state_count; ++qp)
      if (in_b[q] == in_b[qp]) finals.push_back(prod.pack(q, qp));
  return finals;
}

void check_affine8(Check& c) {
  Gf2kField field(3);
  c.expect(field.pow(field.x(), 7) == 1, "x^7 = 1 in F_8");
  c.expect(agl_group(field).order() == 56, "|AGL(1,8)| = 56");
  c.expect(translation_block(field) == std::vector<Point>({0, 1, 2, 3}),
           "B = {0, 1, x, x+1}");
  auto [a, ap] = affine_pair_non_ubm(field);
  ProductDfa prod = direct_product(a, ap);
  Dfa cognate = prod.packed.cognate(
      block_pattern_finals(prod, translation_block(field)));
  c.expect(!is_minimal(cognate),
           "product on (BxB) u (~Bx~B) is not minimal");
  StatePartition p = indistinguishability_partition(cognate, cognate.finals);
  c.expect(p.same_class(prod.pack(0, 0), prod.pack(1, 1)),
           "(0,0) and (1,1) indistinguishable");
}

void check_affine_ns(Check& c) {
  Gf2kField field(3);
  auto [a, ap] = affine_pair_non_ubm(field);
  ProductGroup gx = product_group(a, ap);
  PermGroup agl = agl_group(field);
  for (Point alpha = 0; alpha < 8; ++alpha) {
    PermGroup r = row_stabilizer(gx, {alpha});
    PermGroup col = column_stabilizer(gx, {alpha});
    c.expect(r.order() == 56 && same_element_set(r, agl),
             "R_" + std::to_string(alpha) + " pi' equals AGL(1,8)");
    c.expect(col.order() == 56 && same_element_set(col, agl),
             "C_" + std::to_string(alpha) + " pi equals AGL(1,8)");
    c.expect(is_primitive(r) && is_primitive(col),
             "single stabilizers primitive");
  }
  PropNsReport rep = prop_ns_check(a, ap);
  c.expect(rep.condition_prim && rep.condition_min && rep.consistent,
           "rectangle-minimality condition holds");
  c.expect(!is_uniformly_boolean_minimal(a, ap),
           "yet the pair is not uniformly boolean minimal");
}

void check_affine_bp(Check& c) {
  Gf2kField field(3);
  auto [a, ap] = affine_pair_ubm(field);
  c.expect(is_uniformly_boolean_minimal(a, ap),
           "pair uniformly boolean minimal by brute force");
  ProductGroup gx = product_group(a, ap);
  std::vector<Permutation> translations;
  for (Gf2kField::Elem beta = 0; beta < 8; ++beta)
    translations.push_back(affine_permutation(field, 1, beta));
  PermGroup t = PermGroup::from_elements(std::move(translations));
  PermGroup r01 = row_stabilizer(gx, {0, 1});
  PermGroup c01 = column_stabilizer(gx, {0, 1});
  c.expect(r01.order() == 8 && same_element_set(r01, t),
           "R_{0,1} pi' equals the translation subgroup");
  c.expect(c01.order() == 8 && same_element_set(c01, t),
           "C_{0,1} pi equals the translation subgroup");
  c.expect(!is_primitive(r01) && !is_primitive(c01),
           "double stabilizers imprimitive");
  BoolprimConditions cond = lemma_boolprim_conditions(a, ap);
  c.expect(cond.neither(), "sufficient conditions fail on both sides");
}

void check_similar_it(Check& c) {
  auto [a, ap] = examples::similar_intransitive_pair();
  c.expect(similarity_class(a, ap) == Similarity::Similar, "pair similar");
  AccessibilityReport rep = accessibility_report(a, ap);
  c.expect(!rep.verdict, "product group intransitive");

  auto [b, bp] = examples::dissimilar_swapped_pair();
  c.expect(similarity_class(b, bp) != Similarity::Similar,
           "swapped pair dissimilar");
  PermGroup g = transition_group(b);
  c.expect(classify_sym_or_alt(g) == SymOrAlt::Symmetric && g.degree() != 4,
           "left group is S5");
  auto labels = corollary_dissimilar_case(g);
  c.expect(std::find(labels.begin(), labels.end(),
                     GroupClassLabel::SymOrAltNot4) != labels.end(),
           "S5 carries the symmetric-or-alternating label");
  DissimilarResult verdict = theorem_dissimilar_verdict(b, bp);
  c.expect(verdict.verdict == DissimilarVerdict::UbmGuaranteed,
           "certificate guarantees uniform boolean minimality");
  c.expect(is_uniformly_boolean_minimal(b, bp),
           "confirmed by brute force at 5 x 10");
}

void check_similar(Check& c) {
  auto evaluate = [](const std::pair<Dfa, Dfa>& pair, bool* transitive,
                     bool* nonminimal) {
    ProductDfa prod = direct_product(pair.first, pair.second);
    *transitive =
        accessibility_report(pair.first, pair.second).verdict;
    std::vector<Point> finals;
    for (Point qp : {0u, 2u, 4u}) finals.push_back(prod.pack(0, qp));
    *nonminimal = !is_minimal(prod.packed.cognate(finals));
  };

  bool trans_text = false, nonmin_text = false;
  evaluate(examples::similar_s5_s6_pair(), &trans_text, &nonmin_text);
  c.expect(trans_text, "b' = (1,2,3,4,5,6): product group transitive");
  c.expect(nonmin_text, "b' = (1,2,3,4,5,6): cognate {1}x{1,3,5} not minimal");

  bool trans_gap = false, nonmin_gap = false;
  evaluate(examples::similar_s5_s6_pair_gap_variant(), &trans_gap, &nonmin_gap);
  auto describe = [](bool t, bool n) {
    return std::string(t ? "transitive" : "intransitive") + ", cognate " +
           (n ? "non-minimal" : "minimal");
  };
  c.note("DFA-definition variant: " + describe(trans_text, nonmin_text) +
         (trans_text && nonmin_text ? " (reproduces both facts)" : ""));
  c.note("isomorphism-output variant (1,2,3,5,4,6): " +
         describe(trans_gap, nonmin_gap) +
         (trans_gap && nonmin_gap ? " (reproduces both facts)" : ""));
}

void check_prop3(Check& c) {
  c.expect(all_boolean_functions().size() == 16, "16 boolean tables");
  std::vector<BooleanFn> proper = all_proper_boolean_functions();
  c.expect(proper.size() == 10, "exactly 10 proper");
  Rng rng(0xfeedbee5u);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rand_index(rng, 5);
    std::size_t np = 2 + rand_index(rng, 5);
    std::vector<Point> f = random_nontrivial_subset(rng, n);
    std::vector<Point> fp = random_nontrivial_subset(rng, np);
    for (BooleanFn op : proper) {
      std::vector<Point> set = compatible_set(op, f, fp, n, np);
      // Exactly one of the ten candidate sets matches.
      std::size_t matches = 0;
      constexpr CompatibleTag tags[] = {
          CompatibleTag::FxF, CompatibleTag::FxNotF, CompatibleTag::NotFxF,
          CompatibleTag::NotFxNotF, CompatibleTag::SymDiff};
      for (CompatibleTag tag : tags) {
        std::vector<Point> base = form_set(tag, f, fp, n, np);
        std::vector<Point> complement;
        for (Point s = 0; s < n * np; ++s)
          if (!std::binary_search(base.begin(), base.end(), s))
            complement.push_back(s);
        if (base == set) ++matches;
        if (complement == set) ++matches;
      }
      c.expect(matches == 1, op.name() + " classifies into exactly one form");
      try {
        classify_compatible(set, f, fp, n, np);
      } catch (const std::exception& e) {
        c.expect(false, std::string("classification failed: ") + e.what());
      }
    }
  }
}

void check_prop6_lemma3_property(Check& c) {
  Rng rng(0xabad1deau);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rand_index(rng, 4);
    std::size_t np = 2 + rand_index(rng, 4);
    std::size_t k = 1 + rand_index(rng, 3);
    Dfa a = random_permutation_dfa(rng, n, k, {0});
    Dfa ap = random_permutation_dfa(rng, np, k, {0});
    try {
      PropNsReport rep = prop_ns_check(a, ap);
      c.expect(rep.consistent, "rectangle equivalence, trial " +
                                   std::to_string(trial));
      BoolprimConditions cond = lemma_boolprim_conditions(a, ap);
      if (!cond.neither())
        c.expect(is_uniformly_boolean_minimal(a, ap),
                 "positive sufficient-condition verdict implies uniform "
                 "boolean minimality, trial " + std::to_string(trial));
    } catch (const std::exception& e) {
      c.expect(false, std::string("trial ") + std::to_string(trial) + ": " +
                          e.what());
      return;
    }
  }
}

struct Entry {
  const char* id;
  const char* claim;
  bool asserted;
  std::function<void(Check&)> body;
};

const std::vector<Entry>& suite_entries() {
  static const std::vector<Entry> entries = {
      {"cyc-comp",
       "<(1..6)> transitive, imprimitive, exactly five non-trivial blocks",
       true, check_cyc_comp},
      {"cyc-prime",
       "<(1..5)> primitive; random transitive groups of prime degree primitive",
       true, check_cyc_prime},
      {"altdfa",
       "A4 DFA strongly connected, uniformly minimal by both routes", true,
       check_altdfa},
      {"cycdfa", "cycle DFA with finals {1,3,5} not minimal", true,
       check_cycdfa},
      {"symdiff2",
       "2x2 pair fails maximal boolean complexity at symmetric difference",
       true, check_symdiff2},
      {"ubm",
       "2x3 pair uniformly boolean minimal by brute force and by certificate",
       true, check_ubm},
      {"wit", "maslov and yzs pairs reach mn for all 10 proper operations",
       true, check_wit},
      {"thm1-property",
       "200 random one-final-state pairs: accessibility = maximal complexity",
       true, check_thm1_property},
      {"lemma2-prop5",
       "200 random pairs: four accessibility conditions + graph condition agree",
       true, check_lemma2_property},
      {"affine8",
       "k=3: block-pattern cognate not minimal, |AGL(1,8)| = 56, x^7 = 1",
       true, check_affine8},
      {"affine-ns",
       "k=3: all single stabilizers equal AGL(1,8) yet the pair is not UBM",
       true, check_affine_ns},
      {"affine-bp",
       "k=3 two-letter pair UBM while double stabilizers are the translations",
       true, check_affine_bp},
      {"similar-it",
       "5x10 pair similar with intransitive product; swapped pair dissimilar "
       "and UBM",
       true, check_similar_it},
      {"similar",
       "S5-in-S6 pair: transitive product, cognate {1}x{1,3,5} not minimal; "
       "variant comparison reported",
       true, check_similar},
      {"prop3",
       "16 tables, 10 proper, each compatible set classifies uniquely", true,
       check_prop3},
      {"prop6-lemma3",
       "100 random pairs: rectangle equivalence and sufficient-condition "
       "soundness",
       true, check_prop6_lemma3_property},
  };
  return entries;
}

}  // namespace

SuiteResult run_example_suite() {
  SuiteResult result;
  for (const Entry& entry : suite_entries()) {
    SuiteRow row;
    row.id = entry.id;
    row.claim = entry.claim;
    row.asserted = entry.asserted;
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      entry.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    auto stop = std::chrono::steady_clock::now();
    row.pass = check.ok;
    row.detail = check.log.str();
    row.seconds = std::chrono::duration<double>(stop - start).count();
    result.rows.push_back(std::move(row));
  }
  return result;
}

void print_suite(std::ostream& out, const SuiteResult& result, bool timings) {
  std::size_t width = 0;
  for (const auto& row : result.rows) width = std::max(width, row.id.size());
  for (const auto& row : result.rows) {
    out << std::left << std::setw(static_cast<int>(width)) << row.id << "  "
        << (row.pass ? "PASS" : (row.asserted ? "FAIL" : "INFO")) << "  "
        << row.claim;
    if (timings) {
      out << "  (" << std::fixed << std::setprecision(2) << row.seconds
          << "s)";
    }
    out << '\n';
    if (!row.detail.empty()) out << "      " << row.detail << '\n';
  }
  out << (result.all_passed() ? "example suite: all checks passed"
                              : "example suite: FAILURES PRESENT")
      << '\n';
}

}  // namespace groupmin
