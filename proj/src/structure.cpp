#include "twconj/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace twconj {

namespace {

std::vector<int> element_order_histogram(const GroupPtr& g) {
  std::vector<int> h;
  for (Elem x = 0; x < g->order(); ++x) h.push_back(g->element_order(x));
  std::sort(h.begin(), h.end());
  return h;
}

std::vector<int> class_size_profile(const GroupPtr& g) {
  std::vector<int> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Nontrivial entry positions of one matrix row/column pattern; empty
// string when the permutation-of-isomorphisms shape holds.
std::string pattern_violation(const EndoMatrix& m, Perm* out_perm) {
  const int n = m.arity();
  std::vector<int> row_col(n, -1);
  std::vector<int> col_hits(n, 0);
  for (int i = 0; i < n; ++i) {
    int nontrivial = 0;
    for (int j = 0; j < n; ++j) {
      if (!m.at(i, j).is_trivial()) {
        ++nontrivial;
        row_col[i] = j;
      }
    }
    if (nontrivial != 1)
      return "row " + std::to_string(i) + " has " + std::to_string(nontrivial) +
             " non-trivial homomorphisms";
    ++col_hits[row_col[i]];
  }
  for (int j = 0; j < n; ++j)
    if (col_hits[j] != 1)
      return "column " + std::to_string(j) + " has " + std::to_string(col_hits[j]) +
             " non-trivial homomorphisms";
  for (int i = 0; i < n; ++i)
    if (!m.at(i, row_col[i]).is_bijective())
      return "entry (" + std::to_string(i) + ", " + std::to_string(row_col[i]) +
             ") is not an isomorphism";
  if (out_perm) *out_perm = row_col;
  return "";
}

}  // namespace

bool is_centerless(const GroupPtr& g) { return center(g).is_trivial(); }

std::vector<Subgroup> normal_subgroups(const GroupPtr& g, std::int64_t budget) {
  auto classes = conjugacy_classes(g);
  // The identity class is forced into every subgroup; subsets range over
  // the rest. Every normal subgroup is the closure of the classes it
  // contains, and every such closure is normal.
  const int k = static_cast<int>(classes.size()) - 1;
  if (k >= 62 || (std::int64_t{1} << k) > budget)
    throw Error(ErrorKind::SearchBudgetExceeded,
                std::to_string(classes.size()) + " conjugacy classes need 2^" +
                    std::to_string(k) + " subset closures");
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  for (std::int64_t mask = 0; mask < (std::int64_t{1} << k); ++mask) {
    std::vector<Elem> seed;
    for (int b = 0; b < k; ++b)
      if (mask & (std::int64_t{1} << b))
        seed.insert(seed.end(), classes[b + 1].begin(), classes[b + 1].end());
    Subgroup s = Subgroup::generated(g, seed);
    if (seen.insert(s.elements()).second) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

bool is_directly_indecomposable(const GroupPtr& g, std::int64_t budget) {
  auto normals = normal_subgroups(g, budget);
  for (size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].is_trivial() || normals[i].is_whole()) continue;
    for (size_t j = i; j < normals.size(); ++j) {
      if (normals[j].is_trivial() || normals[j].is_whole()) continue;
      if (internal_direct_product_check(g, {normals[i], normals[j]})) return false;
    }
  }
  return true;
}

std::pair<GroupPtr, GroupHom> subgroup_as_group(const Subgroup& s) {
  const auto& parent = *s.parent();
  const auto& elems = s.elements();
  const int n = s.order();
  std::vector<int> index_of(parent.order(), -1);
  for (int i = 0; i < n; ++i) index_of[elems[i]] = i;
  std::vector<Elem> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[static_cast<size_t>(i) * n + j] = index_of[parent.mul(elems[i], elems[j])];
  std::vector<std::string> names;
  if (parent.has_names()) {
    names.resize(n);
    for (int i = 0; i < n; ++i) names[i] = parent.name_of(elems[i]);
  }
  GroupPtr sub = FiniteGroup::from_table_with_generators(std::move(flat), n, std::move(names), {});
  std::vector<Elem> incl(elems.begin(), elems.end());
  return {sub, hom_from_map(sub, s.parent(), std::move(incl))};
}

bool are_isomorphic(const GroupPtr& a, const GroupPtr& b, std::int64_t budget) {
  if (a->order() != b->order()) return false;
  if (a->is_abelian() != b->is_abelian()) return false;
  if (a->same_table(*b)) return true;
  if (element_order_histogram(a) != element_order_histogram(b)) return false;
  if (class_size_profile(a) != class_size_profile(b)) return false;
  if (center(a).order() != center(b).order()) return false;
  return exists_isomorphism(a, b, budget);
}

std::vector<Subgroup> direct_factors(const GroupPtr& g, std::int64_t budget) {
  auto normals = normal_subgroups(g, budget);
  std::vector<Subgroup> factors;
  for (const auto& n : normals) {
    if (n.is_trivial()) continue;
    for (const auto& m : normals) {
      if (internal_direct_product_check(g, {n, m})) {
        factors.push_back(n);
        break;
      }
    }
  }
  return factors;
}

AutPatternReport aut_matrix_pattern_check(const std::vector<GroupPtr>& factors,
                                          int order_cap, std::int64_t budget) {
  AutPatternReport report;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i]->order() == 1) {
      report.hypothesis = {false, "factor " + std::to_string(i) + " is trivial"};
      return report;
    }
    if (!is_centerless(factors[i])) {
      report.hypothesis = {false, "factor " + std::to_string(i) + " has non-trivial center"};
      return report;
    }
    if (!is_directly_indecomposable(factors[i], budget)) {
      report.hypothesis = {false, "factor " + std::to_string(i) + " decomposes"};
      return report;
    }
  }
  ProductGroup product = direct_product(factors, order_cap);
  auto auts = enumerate_automorphisms(product.group, budget);
  report.automorphism_count = static_cast<int>(auts.size());
  report.pattern_holds = true;
  for (size_t a = 0; a < auts.size(); ++a) {
    EndoMatrix m = to_matrix(product, auts[a]);
    Perm p;
    std::string violation = pattern_violation(m, &p);
    if (!violation.empty()) {
      report.pattern_holds = false;
      report.counterexample = "automorphism " + std::to_string(a) + ": " + violation;
      break;
    }
    report.row_permutations.push_back(std::move(p));
  }
  return report;
}

JohnsonReport johnson_decomposition_check(const std::vector<GroupPtr>& distinct_factors,
                                          const std::vector<int>& multiplicities,
                                          int order_cap, std::int64_t budget) {
  JohnsonReport report;
  if (distinct_factors.empty() || distinct_factors.size() != multiplicities.size())
    throw Error(ErrorKind::InvalidInput, "factor and multiplicity lists must match");
  for (int r : multiplicities)
    if (r < 1) throw Error(ErrorKind::InvalidInput, "multiplicities must be >= 1");

  for (size_t i = 0; i < distinct_factors.size(); ++i) {
    const auto& gi = distinct_factors[i];
    if (gi->order() == 1) {
      report.hypothesis = {false, "factor " + std::to_string(i) + " is trivial"};
      return report;
    }
    if (!is_centerless(gi)) {
      report.hypothesis = {false, "factor " + std::to_string(i) + " has non-trivial center"};
      return report;
    }
    if (!is_directly_indecomposable(gi, budget)) {
      report.hypothesis = {false, "factor " + std::to_string(i) + " decomposes"};
      return report;
    }
    for (size_t j = i + 1; j < distinct_factors.size(); ++j)
      if (are_isomorphic(gi, distinct_factors[j], budget)) {
        report.hypothesis = {false, "factors " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are isomorphic"};
        return report;
      }
  }

  std::vector<GroupPtr> expanded;
  std::vector<int> block_of;
  report.expected_order = 1;
  for (size_t i = 0; i < distinct_factors.size(); ++i) {
    std::uint64_t aut_order = enumerate_automorphisms(distinct_factors[i], budget).size();
    for (int r = 0; r < multiplicities[i]; ++r) {
      expanded.push_back(distinct_factors[i]);
      block_of.push_back(static_cast<int>(i));
      report.expected_order *= aut_order;
    }
    for (int r = 2; r <= multiplicities[i]; ++r)
      report.expected_order *= static_cast<std::uint64_t>(r);
  }

  ProductGroup product = direct_product(expanded, order_cap);
  auto auts = enumerate_automorphisms(product.group, budget);
  report.computed_order = auts.size();
  report.order_match = report.computed_order == report.expected_order;

  report.block_structure_holds = true;
  for (size_t a = 0; a < auts.size(); ++a) {
    EndoMatrix m = to_matrix(product, auts[a]);
    Perm p;
    std::string violation = pattern_violation(m, &p);
    if (violation.empty()) {
      for (size_t i = 0; i < p.size(); ++i)
        if (block_of[i] != block_of[p[i]]) {
          violation = "entry (" + std::to_string(i) + ", " + std::to_string(p[i]) +
                      ") crosses factor blocks";
          break;
        }
    }
    if (!violation.empty()) {
      report.block_structure_holds = false;
      report.counterexample = "automorphism " + std::to_string(a) + ": " + violation;
      break;
    }
  }
  return report;
}

CharFactorReport characteristic_factor_check(const std::vector<GroupPtr>& g_factors,
                                             const GroupPtr& h, int order_cap,
                                             std::int64_t budget) {
  CharFactorReport report;
  if (g_factors.empty()) throw Error(ErrorKind::InvalidInput, "need at least one G factor");
  for (size_t i = 0; i < g_factors.size(); ++i) {
    if (g_factors[i]->order() == 1) {
      report.hypothesis = {false, "factor " + std::to_string(i) + " is trivial"};
      return report;
    }
    if (!is_centerless(g_factors[i])) {
      report.hypothesis = {false, "factor " + std::to_string(i) + " has non-trivial center"};
      return report;
    }
    if (!is_directly_indecomposable(g_factors[i], budget)) {
      report.hypothesis = {false, "factor " + std::to_string(i) + " decomposes"};
      return report;
    }
  }
  for (const auto& factor : direct_factors(h, budget)) {
    auto [fg, incl] = subgroup_as_group(factor);
    for (size_t i = 0; i < g_factors.size(); ++i)
      if (are_isomorphic(fg, g_factors[i], budget)) {
        report.hypothesis = {false, "H has a direct factor isomorphic to factor " +
                                        std::to_string(i)};
        return report;
      }
  }

  const int ng = static_cast<int>(g_factors.size());
  std::vector<GroupPtr> all = g_factors;
  all.push_back(h);
  ProductGroup product = direct_product(all, order_cap);

  // Expected |Aut| = |Aut(G)| |Aut(H)| |Hom(G, Z(H))|.
  ProductGroup g_part = direct_product(g_factors, order_cap);
  auto [zh, zh_incl] = subgroup_as_group(center(h));
  report.expected_order =
      static_cast<std::uint64_t>(enumerate_automorphisms(g_part.group, budget).size()) *
      enumerate_automorphisms(h, budget).size() *
      enumerate_homs(g_part.group, zh, budget).size();

  auto auts = enumerate_automorphisms(product.group, budget);
  report.computed_order = auts.size();
  report.order_match = report.computed_order == report.expected_order;

  // Embedded copy of H.
  std::set<Elem> embedded;
  for (Elem k = 0; k < h->order(); ++k) embedded.insert(product.embed[ng].map[k]);
  Subgroup z_h = center(h);

  report.h_preserved = true;
  report.triangular_shape = true;
  for (size_t a = 0; a < auts.size() && report.h_preserved && report.triangular_shape; ++a) {
    for (Elem x : embedded)
      if (!embedded.count(auts[a].map[x])) {
        report.h_preserved = false;
        report.counterexample = "automorphism " + std::to_string(a) + " moves embedded H";
        break;
      }
    if (!report.h_preserved) break;
    EndoMatrix m = to_matrix(product, auts[a]);
    std::string violation;
    for (int i = 0; i < ng && violation.empty(); ++i)
      if (!m.at(i, ng).is_trivial())
        violation = "beta block (" + std::to_string(i) + ") is non-trivial";
    for (int j = 0; j < ng && violation.empty(); ++j)
      for (Elem v : m.at(ng, j).map)
        if (!z_h.contains(v)) {
          violation = "gamma entry " + std::to_string(j) + " leaves Z(H)";
          break;
        }
    if (violation.empty() && !m.at(ng, ng).is_bijective())
      violation = "delta is not an automorphism of H";
    if (violation.empty()) {
      // Top-left block must be a permutation of isomorphisms.
      EndoMatrix top{g_part, {}};
      for (int i = 0; i < ng; ++i)
        for (int j = 0; j < ng; ++j) top.entries.push_back(m.at(i, j));
      violation = pattern_violation(top, nullptr);
    }
    if (!violation.empty()) {
      report.triangular_shape = false;
      report.counterexample = "automorphism " + std::to_string(a) + ": " + violation;
    }
  }
  return report;
}

Spectrum spectrum_of_centreless_product(const std::vector<GroupPtr>& distinct_factors,
                                        const std::vector<int>& multiplicities,
                                        std::int64_t budget) {
  if (distinct_factors.empty() || distinct_factors.size() != multiplicities.size())
    throw Error(ErrorKind::InvalidInput, "factor and multiplicity lists must match");
  for (size_t i = 0; i < distinct_factors.size(); ++i) {
    const auto& gi = distinct_factors[i];
    if (gi->order() == 1 || !is_centerless(gi) || !is_directly_indecomposable(gi, budget))
      throw Error(ErrorKind::HypothesisViolated,
                  "factor " + std::to_string(i) + " is not nontrivial centerless indecomposable");
    if (multiplicities[i] < 1)
      throw Error(ErrorKind::InvalidInput, "multiplicities must be >= 1");
    for (size_t j = i + 1; j < distinct_factors.size(); ++j)
      if (are_isomorphic(gi, distinct_factors[j], budget))
        throw Error(ErrorKind::HypothesisViolated,
                    "factors " + std::to_string(i) + " and " + std::to_string(j) +
                        " are isomorphic");
  }
  std::vector<Spectrum> parts;
  for (size_t i = 0; i < distinct_factors.size(); ++i)
    parts.push_back(nfold_union(reidemeister_spectrum(distinct_factors[i], budget),
                                multiplicities[i]));
  return spectrum_product(parts);
}

}  // namespace twconj
