#include "twconj/json_io.hpp"

#include <fstream>

namespace twconj {

namespace {

GroupHom hom_from_shorthand(const Json& spec, const GroupPtr& domain,
                            const GroupPtr& codomain) {
  if (spec.is_string()) {
    std::string s = spec.get<std::string>();
    if (s == "id") {
      if (!same_group(domain, codomain))
        throw Error(ErrorKind::InvalidInput, "\"id\" needs matching domain and codomain");
      return identity_hom(domain);
    }
    if (s == "trivial" || s == "0") return trivial_hom(domain, codomain);
    throw Error(ErrorKind::InvalidInput, "unknown hom shorthand '" + s + "'");
  }
  if (spec.is_object() && spec.contains("map"))
    return hom_from_json(spec, domain, codomain);
  if (spec.is_object() && spec.contains("images"))
    return hom_from_generator_images(domain, codomain,
                                     spec.at("images").get<std::vector<Elem>>());
  throw Error(ErrorKind::InvalidInput, "hom spec must be \"id\", \"trivial\", or a map object");
}

Perm perm_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw Error(ErrorKind::InvalidInput, "sigma must list n 1-based images");
  Perm sigma(n);
  for (int i = 0; i < n; ++i) {
    int v = j.at(i).get<int>();
    if (v < 1 || v > n)
      throw Error(ErrorKind::InvalidInput, "sigma entries are 1-based images");
    sigma[i] = v - 1;
  }
  if (!is_permutation(sigma))
    throw Error(ErrorKind::InvalidInput, "sigma is not a permutation");
  return sigma;
}

}  // namespace

GroupPtr group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw Error(ErrorKind::InvalidInput, "expected {\"order\", \"table\", [\"names\"]}");
  int order = j.at("order").get<int>();
  auto table = j.at("table").get<std::vector<std::vector<Elem>>>();
  if (static_cast<int>(table.size()) != order)
    throw Error(ErrorKind::InvalidInput, "table size does not match order");
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return FiniteGroup::from_cayley_table(table, std::move(names));
}

Json group_to_json(const GroupPtr& g) {
  Json j;
  j["order"] = g->order();
  std::vector<std::vector<Elem>> table(g->order(), std::vector<Elem>(g->order()));
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = 0; b < g->order(); ++b) table[a][b] = g->mul(a, b);
  j["table"] = table;
  if (g->has_names()) j["names"] = g->names();
  return j;
}

Json hom_to_json(const GroupHom& f) {
  Json j;
  j["domain_order"] = f.domain->order();
  j["codomain_order"] = f.codomain->order();
  j["map"] = f.map;
  return j;
}

GroupHom hom_from_json(const Json& j, const GroupPtr& domain, const GroupPtr& codomain) {
  if (j.contains("domain_order") && j.at("domain_order").get<int>() != domain->order())
    throw Error(ErrorKind::InvalidInput, "domain_order does not match the domain");
  if (j.contains("codomain_order") && j.at("codomain_order").get<int>() != codomain->order())
    throw Error(ErrorKind::InvalidInput, "codomain_order does not match the codomain");
  return hom_from_map(domain, codomain, j.at("map").get<std::vector<Elem>>());
}

Json partition_to_json(const ReidemeisterPartition& p) {
  Json j;
  j["group_order"] = p.group->order();
  j["count"] = p.count();
  j["representatives"] = p.representatives;
  j["classes"] = p.classes;
  return j;
}

Json extnat_to_json(const ExtNat& v) {
  if (v.is_infinite()) return Json("inf");
  return Json(v.value());
}

Json spectrum_to_json(const Spectrum& s) {
  Json arr = Json::array();
  for (const auto& v : s.values()) arr.push_back(extnat_to_json(v));
  return arr;
}

Spectrum spectrum_from_json(const Json& j) {
  Spectrum s;
  for (const auto& v : j) {
    if (v.is_string()) {
      if (v.get<std::string>() != "inf")
        throw Error(ErrorKind::InvalidInput, "spectrum entries are numbers or \"inf\"");
      s.insert(ExtNat::infinity());
    } else {
      s.insert(ExtNat(v.get<std::uint64_t>()));
    }
  }
  return s;
}

Json matrix_to_json(const EndoMatrix& m) {
  Json rows = Json::array();
  const int n = m.arity();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(hom_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  Json out;
  out["kind"] = "matrix";
  out["factor_orders"] = Json::array();
  for (const auto& f : m.product.factors) out["factor_orders"].push_back(f->order());
  out["entries"] = rows;
  return out;
}

GroupHom endo_from_spec(const Json& spec, const ProductGroup& product) {
  if (!spec.is_object() || !spec.contains("kind"))
    throw Error(ErrorKind::InvalidInput, "endo spec needs a \"kind\" field");
  const std::string kind = spec.at("kind").get<std::string>();
  const int n = product.arity();

  if (kind == "map") return hom_from_shorthand(spec, product.group, product.group);
  if (kind == "diag" || kind == "wreath") {
    const auto& homs_json = spec.at("homs");
    if (static_cast<int>(homs_json.size()) != n)
      throw Error(ErrorKind::InvalidInput, "need one hom per factor");
    std::vector<GroupHom> homs;
    for (int i = 0; i < n; ++i)
      homs.push_back(hom_from_shorthand(homs_json.at(i), product.factors[i], product.factors[i]));
    if (kind == "diag") {
      if (spec.contains("sigma"))
        return permuted_diag_endo(product, homs, perm_from_json(spec.at("sigma"), n));
      return diag_endo(product, homs);
    }
    Perm sigma = spec.contains("sigma") ? perm_from_json(spec.at("sigma"), n) : perm_identity(n);
    return wreath_embed(product, homs, sigma);
  }
  if (kind == "perm") return perm_endo(product, perm_from_json(spec.at("sigma"), n)).endo;
  if (kind == "matrix") {
    const auto& rows = spec.at("entries");
    if (static_cast<int>(rows.size()) != n)
      throw Error(ErrorKind::InvalidInput, "matrix spec needs n rows");
    EndoMatrix m{product, {}};
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows.at(i).size()) != n)
        throw Error(ErrorKind::InvalidInput, "matrix spec needs n columns per row");
      for (int j = 0; j < n; ++j)
        m.entries.push_back(
            hom_from_shorthand(rows.at(i).at(j), product.factors[j], product.factors[i]));
    }
    return from_matrix(m);
  }
  throw Error(ErrorKind::InvalidInput, "unknown endo kind '" + kind + "'");
}

GroupHom endo_from_spec_single(const Json& spec, const GroupPtr& g) {
  if (spec.is_object() && spec.contains("kind") && spec.at("kind").get<std::string>() != "map") {
    ProductGroup p = direct_product({g});
    GroupHom f = endo_from_spec(spec, p);
    // Single-factor products share the factor's table, so the map carries over.
    return hom_from_map(g, g, f.map);
  }
  return hom_from_shorthand(spec, g, g);
}

Json seq_to_json(const FinSuppIntSeq& s) {
  Json j = Json::object();
  for (const auto& [i, v] : s.entries()) j[std::to_string(i)] = v;
  return j;
}

FinSuppIntSeq seq_from_json(const Json& j) {
  FinSuppIntSeq s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int index = 0;
    try {
      index = std::stoi(it.key());
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "sequence keys are 1-based indices");
    }
    s.set(index, it.value().get<std::int64_t>());
  }
  return s;
}

namespace {

const char* triangular_status_name(TriangularStatus s) {
  switch (s) {
    case TriangularStatus::AllUpper: return "all_upper";
    case TriangularStatus::AllLower: return "all_lower";
    case TriangularStatus::AllDiagonal: return "all_diagonal";
    case TriangularStatus::Mixed: return "mixed";
  }
  return "mixed";
}

Json hypothesis_json(const HypothesisStatus& h) {
  return h.ok ? Json("ok") : Json("violated: " + h.reason);
}

}  // namespace

Json triangular_report_to_json(const TriangularAutReport& r) {
  Json j;
  j["hypothesis_status"] = r.hypothesis_holds ? "ok" : "violated: not all triangular";
  j["status"] = triangular_status_name(r.status);
  j["automorphism_count"] = r.automorphism_count;
  j["diagonal_entries_are_automorphisms"] = r.diagonal_entries_are_automorphisms;
  j["offdiagonal_into_center"] = r.offdiagonal_into_center;
  j["counterexample"] = r.violation.empty() ? Json(nullptr) : Json(r.violation);
  return j;
}

Json pattern_report_to_json(const AutPatternReport& r) {
  Json j;
  j["hypothesis_status"] = hypothesis_json(r.hypothesis);
  j["counterexample"] = r.counterexample.empty() ? Json(nullptr) : Json(r.counterexample);
  j["computed_order"] = r.automorphism_count;
  j["pattern_holds"] = r.pattern_holds;
  Json perms = Json::array();
  for (const auto& p : r.row_permutations) {
    Json one = Json::array();
    for (int v : p) one.push_back(v + 1);
    perms.push_back(one);
  }
  j["row_permutations"] = perms;
  return j;
}

Json johnson_report_to_json(const JohnsonReport& r) {
  Json j;
  j["hypothesis_status"] = hypothesis_json(r.hypothesis);
  j["counterexample"] = r.counterexample.empty() ? Json(nullptr) : Json(r.counterexample);
  j["computed_order"] = r.computed_order;
  j["expected_order"] = r.expected_order;
  j["order_match"] = r.order_match;
  j["block_structure_holds"] = r.block_structure_holds;
  return j;
}

Json charfactor_report_to_json(const CharFactorReport& r) {
  Json j;
  j["hypothesis_status"] = hypothesis_json(r.hypothesis);
  j["counterexample"] = r.counterexample.empty() ? Json(nullptr) : Json(r.counterexample);
  j["computed_order"] = r.computed_order;
  j["expected_order"] = r.expected_order;
  j["order_match"] = r.order_match;
  j["h_preserved"] = r.h_preserved;
  j["triangular_shape"] = r.triangular_shape;
  return j;
}

Json containment_report_to_json(const ContainmentReport& r) {
  Json j;
  Json spectra = Json::array();
  for (const auto& s : r.factor_spectra) spectra.push_back(spectrum_to_json(s));
  j["factor_spectra"] = spectra;
  j["product_of_spectra"] = spectrum_to_json(r.product_of_spectra);
  j["product_spectrum"] = spectrum_to_json(r.product_spectrum);
  j["contained"] = r.contained;
  j["equal"] = r.equal;
  return j;
}

Json wreath_report_to_json(const WreathSpectrumReport& r) {
  Json j;
  j["aut_power_order"] = r.aut_power_order;
  j["wreath_order"] = r.wreath_order;
  j["order_match"] = r.order_match;
  j["all_in_wreath_image"] = r.all_in_wreath_image;
  j["equality_case"] = r.equality_case;
  j["base_spectrum"] = spectrum_to_json(r.base_spectrum);
  j["formula"] = spectrum_to_json(r.formula);
  j["brute"] = spectrum_to_json(r.brute);
  j["spectra_equal"] = r.spectra_equal;
  return j;
}

GroupPtr parse_group_spec(const std::string& spec, int order_cap) {
  // Known preset heads resolve as presets; anything else is a file path.
  auto head = spec.substr(0, spec.find(':'));
  for (const char* name : {"cyclic", "dihedral", "symmetric", "alternating", "quaternion8",
                           "klein4", "trivial"}) {
    if (head == name) {
      if (head == "trivial") return preset("cyclic", {1}, order_cap);
      return preset_from_spec(spec, order_cap);
    }
  }
  std::ifstream in(spec);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open group file '" + spec + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::InvalidInput, "bad JSON in '" + spec + "': " + e.what());
  }
  GroupPtr g = group_from_json(j);
  if (g->order() > order_cap)
    throw Error(ErrorKind::OrderCapExceeded, "group order exceeds cap");
  return g;
}

}  // namespace twconj
