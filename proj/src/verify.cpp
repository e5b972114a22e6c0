#include "twconj/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "twconj/json_io.hpp"
#include "twconj/rng.hpp"

namespace twconj {

namespace {

using DriverFn = std::function<VerifyResult(const VerifyOptions&)>;

std::vector<GroupPtr> small_factor_set() {
  return {preset("cyclic", {2}), preset("cyclic", {3}), preset("cyclic", {4}),
          preset("symmetric", {3})};
}

std::vector<std::string> small_factor_names() { return {"Z2", "Z3", "Z4", "S3"}; }

VerifyResult fail(VerifyResult r, Json counterexample, const std::string& summary) {
  r.ok = false;
  r.counterexample = std::move(counterexample);
  r.summary = summary;
  return r;
}

VerifyResult pass(VerifyResult r, const std::string& summary) {
  r.ok = true;
  r.counterexample = nullptr;
  r.summary = summary;
  return r;
}

// --- monoid-iso ------------------------------------------------------------

VerifyResult verify_monoid_iso(const VerifyOptions& opt) {
  VerifyResult r{"monoid-iso"};
  std::vector<std::vector<GroupPtr>> product_specs = {
      {preset("cyclic", {2}), preset("cyclic", {3})},
      {preset("cyclic", {3}), preset("cyclic", {3})},
      {preset("symmetric", {3}), preset("cyclic", {2})},
  };
  for (const auto& factors : product_specs) {
    ProductGroup p = direct_product(factors);
    auto endos = enumerate_homs(p.group, p.group, opt.budget);
    std::vector<EndoMatrix> mats;
    mats.reserve(endos.size());
    for (const auto& f : endos) {
      EndoMatrix m = to_matrix(p, f);
      GroupHom back = from_matrix(m);
      ++r.cases;
      if (!(back == f))
        return fail(std::move(r),
                    Json{{"product_order", p.group->order()}, {"endo", hom_to_json(f)}},
                    "from_matrix(to_matrix(f)) != f");
      mats.push_back(std::move(m));
    }
    for (size_t i = 0; i < endos.size(); ++i)
      for (size_t j = 0; j < endos.size(); ++j) {
        ++r.cases;
        EndoMatrix lhs = to_matrix(p, compose(endos[i], endos[j]));
        EndoMatrix rhs = matrix_compose(mats[i], mats[j]);
        if (!(lhs == rhs))
          return fail(std::move(r),
                      Json{{"product_order", p.group->order()},
                           {"f", hom_to_json(endos[i])},
                           {"g", hom_to_json(endos[j])}},
                      "to_matrix(f.g) != to_matrix(f) * to_matrix(g)");
      }
  }
  return pass(std::move(r), "monoid isomorphism exhaustive on 3 products");
}

// --- diag-product ----------------------------------------------------------

void nondecreasing_sequences(const std::vector<int>& orders, int max_order,
                             std::vector<int>& current, int first, std::int64_t product,
                             const std::function<void(const std::vector<int>&)>& visit) {
  if (!current.empty()) visit(current);
  for (int i = first; i < static_cast<int>(orders.size()); ++i) {
    if (product * orders[i] > max_order) continue;
    current.push_back(i);
    nondecreasing_sequences(orders, max_order, current, i, product * orders[i], visit);
    current.pop_back();
  }
}

VerifyResult verify_diag_product(const VerifyOptions& opt) {
  VerifyResult r{"diag-product"};
  const int max_order = opt.max_order > 0 ? opt.max_order : 81;
  auto factors = small_factor_set();
  auto names = small_factor_names();
  std::vector<int> orders;
  std::vector<std::vector<GroupHom>> endos;
  for (const auto& g : factors) {
    orders.push_back(g->order());
    endos.push_back(enumerate_homs(g, g, opt.budget));
  }

  Json counterexample = nullptr;
  std::vector<int> seq;
  nondecreasing_sequences(orders, max_order, seq, 0, 1, [&](const std::vector<int>& pick) {
    if (!counterexample.is_null()) return;
    std::vector<GroupPtr> fs;
    for (int i : pick) fs.push_back(factors[i]);
    ProductGroup p = direct_product(fs, max_order);
    std::vector<size_t> idx(pick.size(), 0);
    while (true) {
      std::vector<GroupHom> tuple;
      for (size_t k = 0; k < pick.size(); ++k) tuple.push_back(endos[pick[k]][idx[k]]);
      ++r.cases;
      ExtNat formula = diag_reidemeister(tuple);
      ExtNat brute = reidemeister_number(p.group, diag_endo(p, tuple));
      if (!(formula == brute)) {
        Json homs = Json::array();
        for (const auto& f : tuple) homs.push_back(hom_to_json(f));
        Json fs_names = Json::array();
        for (int i : pick) fs_names.push_back(names[i]);
        counterexample = Json{{"factors", fs_names},
                              {"homs", homs},
                              {"formula", extnat_to_json(formula)},
                              {"brute", extnat_to_json(brute)}};
        return;
      }
      size_t d = pick.size();
      while (d > 0 && idx[d - 1] + 1 == endos[pick[d - 1]].size()) idx[--d] = 0;
      if (d == 0) break;
      ++idx[d - 1];
    }
  });
  if (!counterexample.is_null())
    return fail(std::move(r), counterexample, "diagonal formula mismatch");
  return pass(std::move(r), "R(Diag) = prod R(phi_i) exhaustive up to order " +
                                std::to_string(max_order));
}

// --- permuted-diag ---------------------------------------------------------

VerifyResult verify_permuted_diag(const VerifyOptions& opt) {
  VerifyResult r{"permuted-diag"};
  const int samples = opt.samples > 0 ? opt.samples : 200;
  std::vector<GroupPtr> bases = {preset("cyclic", {3}), preset("symmetric", {3})};
  for (size_t gi = 0; gi < bases.size(); ++gi) {
    const auto& g = bases[gi];
    auto endos = enumerate_homs(g, g, opt.budget);
    for (int n = 2; n <= 3; ++n) {
      ProductGroup p = direct_product(std::vector<GroupPtr>(n, g));
      Perm sigma = perm_identity(n);
      int sigma_index = 0;
      do {
        auto check_tuple = [&](const std::vector<GroupHom>& tuple) -> bool {
          ++r.cases;
          ExtNat formula = permuted_diag_reidemeister(tuple, sigma);
          ExtNat brute = reidemeister_number(p.group, permuted_diag_endo(p, tuple, sigma));
          if (formula == brute) return true;
          Json homs = Json::array();
          for (const auto& f : tuple) homs.push_back(hom_to_json(f));
          Json sig = Json::array();
          for (int v : sigma) sig.push_back(v + 1);
          r = fail(std::move(r),
                   Json{{"group_order", g->order()},
                        {"n", n},
                        {"sigma", sig},
                        {"homs", homs},
                        {"formula", extnat_to_json(formula)},
                        {"brute", extnat_to_json(brute)}},
                   "cycle formula mismatch");
          return false;
        };
        if (opt.exhaustive) {
          std::vector<size_t> idx(n, 0);
          while (true) {
            std::vector<GroupHom> tuple;
            for (int i = 0; i < n; ++i) tuple.push_back(endos[idx[i]]);
            if (!check_tuple(tuple)) return r;
            int d = n - 1;
            while (d >= 0 && idx[d] + 1 == endos.size()) idx[d--] = 0;
            if (d < 0) break;
            ++idx[d];
          }
        } else {
          Rng rng(opt.seed + 7919 * gi + 131 * n + sigma_index);
          for (int s = 0; s < samples; ++s) {
            std::vector<GroupHom> tuple;
            for (int i = 0; i < n; ++i) tuple.push_back(endos[rng.below(endos.size())]);
            if (!check_tuple(tuple)) return r;
          }
        }
        ++sigma_index;
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
  return pass(std::move(r), opt.exhaustive
                                ? "cycle decomposition formula on all hom tuples"
                                : "cycle decomposition formula on sampled tuples");
}

// --- sum-formula and upper-bound -------------------------------------------

VerifyResult sweep_triangular(const char* id, bool check_sum, const VerifyOptions& opt) {
  VerifyResult r{id};
  const int max_order = opt.max_order > 0 ? opt.max_order : 36;
  auto factors = small_factor_set();
  auto names = small_factor_names();
  for (size_t hi = 0; hi < factors.size(); ++hi)
    for (size_t ki = 0; ki < factors.size(); ++ki) {
      const auto& h = factors[hi];
      const auto& k = factors[ki];
      if (h->order() * k->order() > max_order) continue;
      ProductGroup p = direct_product({h, k});
      auto alphas = enumerate_homs(h, h, opt.budget);
      auto betas = enumerate_homs(k, h, opt.budget);
      auto deltas = enumerate_homs(k, k, opt.budget);
      for (const auto& alpha : alphas)
        for (const auto& beta : betas) {
          if (!images_commute(alpha, beta)) continue;
          for (const auto& delta : deltas) {
            ++r.cases;
            GroupHom phi = triangular_endo(p, alpha, beta, delta);
            ExtNat brute = reidemeister_number(p.group, phi);
            bool ok;
            Json detail;
            if (check_sum) {
              ExtNat formula = sum_formula_reidemeister(alpha, beta, delta);
              ok = formula == brute;
              detail = Json{{"formula", extnat_to_json(formula)},
                            {"brute", extnat_to_json(brute)}};
            } else {
              ExtNat bound = reidemeister_number(h, alpha) * reidemeister_number(k, delta);
              ok = brute < bound || brute == bound;
              detail = Json{{"R(phi)", extnat_to_json(brute)},
                            {"R(alpha)R(delta)", extnat_to_json(bound)}};
            }
            if (!ok) {
              detail["H"] = names[hi];
              detail["K"] = names[ki];
              detail["alpha"] = hom_to_json(alpha);
              detail["beta"] = hom_to_json(beta);
              detail["delta"] = hom_to_json(delta);
              return fail(std::move(r), detail,
                          check_sum ? "orbit sum mismatch" : "upper bound violated");
            }
          }
        }
    }
  return pass(std::move(r), check_sum ? "R(phi) = sum of orbit counts, exhaustive triples"
                                      : "R(phi) <= R(alpha)R(delta), exhaustive triples");
}

// --- invariance sweeps -----------------------------------------------------

VerifyResult verify_inner_invariance(const VerifyOptions& opt) {
  VerifyResult r{"inner-invariance"};
  const int max_order = opt.max_order > 0 ? opt.max_order : 12;
  for (const auto& entry : catalog_groups(max_order)) {
    auto endos = enumerate_homs(entry.group, entry.group, opt.budget);
    for (const auto& endo : endos)
      for (Elem a = 0; a < entry.group->order(); ++a) {
        ++r.cases;
        if (!check_inner_invariance(entry.group, endo, a))
          return fail(std::move(r),
                      Json{{"group", entry.name}, {"endo", hom_to_json(endo)}, {"g", a}},
                      "R(tau_g . phi) != R(phi)");
      }
  }
  return pass(std::move(r), "inner invariance exhaustive on catalog");
}

VerifyResult verify_conj_invariance(const VerifyOptions& opt) {
  VerifyResult r{"conj-invariance"};
  const int max_order = opt.max_order > 0 ? opt.max_order : 12;
  for (const auto& entry : catalog_groups(max_order)) {
    auto endos = enumerate_homs(entry.group, entry.group, opt.budget);
    auto auts = enumerate_automorphisms(entry.group, opt.budget);
    for (const auto& endo : endos)
      for (const auto& aut : auts) {
        ++r.cases;
        if (!check_conjugate_invariance(entry.group, endo, aut))
          return fail(std::move(r),
                      Json{{"group", entry.name},
                           {"endo", hom_to_json(endo)},
                           {"aut", hom_to_json(aut)}},
                      "R(phi) != R(phi^psi)");
      }
  }
  return pass(std::move(r), "conjugate invariance exhaustive on catalog");
}

VerifyResult verify_cyclic_shift(const VerifyOptions& opt) {
  VerifyResult r{"cyclic-shift"};
  const int max_order = opt.max_order > 0 ? opt.max_order : 12;
  const int samples = opt.samples > 0 ? opt.samples : 200;
  for (const auto& entry : catalog_groups(max_order)) {
    auto endos = enumerate_homs(entry.group, entry.group, opt.budget);
    for (const auto& f : endos)
      for (const auto& g : endos) {
        ++r.cases;
        if (!cyclic_shift_check({f, g}))
          return fail(std::move(r),
                      Json{{"group", entry.name},
                           {"f", hom_to_json(f)},
                           {"g", hom_to_json(g)}},
                      "R(f.g) != R(g.f)");
      }
    // Sampled triples cover the general statement.
    Rng rng(opt.seed + entry.group->order());
    for (int s = 0; s < samples / 10 + 1; ++s) {
      std::vector<GroupHom> triple = {endos[rng.below(endos.size())],
                                      endos[rng.below(endos.size())],
                                      endos[rng.below(endos.size())]};
      ++r.cases;
      if (!cyclic_shift_check(triple)) {
        Json homs = Json::array();
        for (const auto& t : triple) homs.push_back(hom_to_json(t));
        return fail(std::move(r), Json{{"group", entry.name}, {"homs", homs}},
                    "cyclic shift failed on a triple");
      }
    }
  }
  return pass(std::move(r), "cyclic shifts exhaustive on pairs, sampled triples");
}

// --- jabara ----------------------------------------------------------------

VerifyResult verify_jabara(const VerifyOptions& opt) {
  VerifyResult r{"jabara"};
  const int max_order = opt.max_order > 0 ? opt.max_order : 24;
  for (const auto& entry : catalog_groups(max_order)) {
    for (const auto& aut : enumerate_automorphisms(entry.group, opt.budget)) {
      ExtNat rn = reidemeister_number(entry.group, aut);
      if (rn.value() > 5) continue;
      ++r.cases;
      if (!jabara_bound_check(entry.group, aut))
        return fail(std::move(r),
                    Json{{"group", entry.name},
                         {"aut", hom_to_json(aut)},
                         {"R", extnat_to_json(rn)},
                         {"fixed_points", fixed_points(aut).order()}},
                    "|Fix(phi)| > 2^(2^R)");
    }
  }
  return pass(std::move(r), "fixed-point bound on all catalog automorphisms with R <= 5");
}

// --- johnson ---------------------------------------------------------------

VerifyResult verify_johnson(const VerifyOptions& opt) {
  VerifyResult r{"johnson"};
  GroupPtr s3 = preset("symmetric", {3});

  JohnsonReport base = johnson_decomposition_check({s3}, {1}, kDefaultOrderCap, opt.budget);
  ++r.cases;
  if (!base.hypothesis.ok || !base.order_match || base.computed_order != 6)
    return fail(std::move(r), johnson_report_to_json(base), "|Aut(S3)| != 6");

  JohnsonReport rep = johnson_decomposition_check({s3}, {2}, kDefaultOrderCap, opt.budget);
  ++r.cases;
  if (!rep.hypothesis.ok || !rep.order_match || rep.computed_order != 72 ||
      !rep.block_structure_holds)
    return fail(std::move(r), johnson_report_to_json(rep), "Aut(S3^2) structure mismatch");

  AutPatternReport pattern = aut_matrix_pattern_check({s3, s3}, kDefaultOrderCap, opt.budget);
  ++r.cases;
  if (!pattern.hypothesis.ok || !pattern.pattern_holds || pattern.automorphism_count != 72)
    return fail(std::move(r), pattern_report_to_json(pattern),
                "permutation-of-isomorphisms pattern failed");

  Spectrum expectation(std::vector<ExtNat>{ExtNat(3), ExtNat(9)});
  Spectrum formula = spectrum_of_centreless_product({s3}, {2}, opt.budget);
  ProductGroup p = direct_product({s3, s3});
  Spectrum brute = reidemeister_spectrum(p.group, opt.budget);
  ++r.cases;
  if (!(formula == expectation) || !(brute == expectation))
    return fail(std::move(r),
                Json{{"formula", spectrum_to_json(formula)},
                     {"brute", spectrum_to_json(brute)}},
                "Spec_R(S3^2) != {3, 9}");
  return pass(std::move(r), "|Aut(S3^2)| = 72, pattern holds, Spec_R(S3^2) = {3, 9}");
}

// --- wreath-spectrum -------------------------------------------------------

VerifyResult verify_wreath_spectrum(const VerifyOptions& opt) {
  VerifyResult r{"wreath-spectrum"};
  GroupPtr s3 = preset("symmetric", {3});
  WreathSpectrumReport rep = check_wreath_spectrum_equality(s3, 2, kDefaultOrderCap, opt.budget);
  ++r.cases;
  if (!rep.equality_case || !rep.spectra_equal || rep.aut_power_order != 72)
    return fail(std::move(r), wreath_report_to_json(rep), "S3 wreath equality failed");

  GroupPtr z3 = preset("cyclic", {3});
  WreathSpectrumReport z3rep = check_wreath_spectrum_equality(z3, 2, kDefaultOrderCap, opt.budget);
  ++r.cases;
  if (z3rep.equality_case || z3rep.aut_power_order != 48 || z3rep.wreath_order != 8 ||
      !z3rep.brute.contains_all(z3rep.formula))
    return fail(std::move(r), wreath_report_to_json(z3rep),
                "Z3 power should report GL(2,3) without equality");

  GroupPtr trivial = preset("cyclic", {1});
  WreathSpectrumReport triv = check_wreath_spectrum_equality(trivial, 3, kDefaultOrderCap,
                                                             opt.budget);
  ++r.cases;
  if (!triv.equality_case || !triv.spectra_equal ||
      !(triv.brute == Spectrum(std::vector<ExtNat>{ExtNat(1)})))
    return fail(std::move(r), wreath_report_to_json(triv), "trivial power misbehaved");
  return pass(std::move(r), "wreath image membership and spectrum equality cases");
}

// --- characteristic-factor ---------------------------------------------------

VerifyResult verify_characteristic_factor(const VerifyOptions& opt) {
  VerifyResult r{"characteristic-factor"};
  GroupPtr s3 = preset("symmetric", {3});
  GroupPtr z4 = preset("cyclic", {4});

  CharFactorReport rep = characteristic_factor_check({s3}, z4, kDefaultOrderCap, opt.budget);
  ++r.cases;
  if (!rep.hypothesis.ok || !rep.order_match || rep.computed_order != 24 || !rep.h_preserved ||
      !rep.triangular_shape)
    return fail(std::move(r), charfactor_report_to_json(rep), "S3 x Z4 check failed");

  CharFactorReport trivial_rep = characteristic_factor_check({s3}, preset("cyclic", {1}),
                                                             kDefaultOrderCap, opt.budget);
  ++r.cases;
  if (!trivial_rep.hypothesis.ok || !trivial_rep.order_match || !trivial_rep.h_preserved)
    return fail(std::move(r), charfactor_report_to_json(trivial_rep), "trivial H failed");

  CharFactorReport guard = characteristic_factor_check({s3}, s3, kDefaultOrderCap, opt.budget);
  ++r.cases;
  if (guard.hypothesis.ok)
    return fail(std::move(r), charfactor_report_to_json(guard),
                "guard should reject H isomorphic to G");
  return pass(std::move(r), "characteristic factor: S3 x Z4 (|Aut| = 24), trivial H, guard");
}

// --- product-containment -----------------------------------------------------

VerifyResult verify_product_containment(const VerifyOptions& opt) {
  VerifyResult r{"product-containment"};
  const int max_order = opt.max_order > 0 ? opt.max_order : 64;
  auto catalog = catalog_groups(max_order);
  for (size_t i = 0; i < catalog.size(); ++i)
    for (size_t j = i; j < catalog.size(); ++j) {
      std::int64_t order = static_cast<std::int64_t>(catalog[i].group->order()) *
                           catalog[j].group->order();
      if (order > max_order) continue;
      ++r.cases;
      ContainmentReport rep = check_product_containment(
          {catalog[i].group, catalog[j].group}, max_order, opt.budget);
      if (!rep.contained)
        return fail(std::move(r),
                    Json{{"factors", Json::array({catalog[i].name, catalog[j].name})},
                         {"report", containment_report_to_json(rep)}},
                    "product spectrum containment failed");
    }
  // Square powers also satisfy the n-fold union containment.
  for (const auto& entry : catalog) {
    std::int64_t sq = static_cast<std::int64_t>(entry.group->order()) * entry.group->order();
    if (sq > max_order) continue;
    ++r.cases;
    Spectrum base = reidemeister_spectrum(entry.group, opt.budget);
    ProductGroup p = direct_product({entry.group, entry.group}, max_order);
    Spectrum brute = reidemeister_spectrum(p.group, opt.budget);
    if (!brute.contains_all(nfold_union(base, 2)))
      return fail(std::move(r),
                  Json{{"group", entry.name},
                       {"nfold_union", spectrum_to_json(nfold_union(base, 2))},
                       {"brute", spectrum_to_json(brute)}},
                  "n-fold union containment failed");
  }
  return pass(std::move(r), "spectrum containments on all catalog pairs up to order " +
                                std::to_string(max_order));
}

// --- zdirectsum --------------------------------------------------------------

FinSuppIntSeq random_seq(Rng& rng, int max_support, int max_index) {
  FinSuppIntSeq s;
  int support = static_cast<int>(rng.below(max_support + 1));
  for (int i = 0; i < support; ++i) {
    int index = 1 + static_cast<int>(rng.below(max_index));
    std::int64_t value = static_cast<std::int64_t>(rng.below(201)) - 100;
    s.set(index, value);
  }
  return s;
}

VerifyResult verify_zdirectsum(const VerifyOptions& opt) {
  VerifyResult r{"zdirectsum"};
  const int samples = opt.samples > 0 ? opt.samples : 1000;
  Rng rng(opt.seed);

  ++r.cases;
  if (!(phi_example(FinSuppIntSeq::basis(1)) == FinSuppIntSeq::basis(1)))
    return fail(std::move(r), Json{{"input", "e1"}}, "e1 should be fixed by phi");

  for (int s = 0; s < samples; ++s) {
    FinSuppIntSeq a = random_seq(rng, 30, 40);
    ++r.cases;
    if (!(psi_example(phi_example(a)) == a) || !(phi_example(psi_example(a)) == a))
      return fail(std::move(r), Json{{"sequence", seq_to_json(a)}},
                  "psi is not inverse to phi");
  }
  for (int s = 0; s < samples; ++s) {
    FinSuppIntSeq t = random_seq(rng, 30, 40);
    ++r.cases;
    FinSuppIntSeq a = solve_phi_minus_id(t);
    if (!(phi_minus_id(a) == t))
      return fail(std::move(r), Json{{"target", seq_to_json(t)}},
                  "(phi - id) solve round-trip failed");
  }
  return pass(std::move(r), "phi/psi inverses and (phi - id) surjectivity on seeded samples");
}

const std::map<std::string, DriverFn>& drivers() {
  static const std::map<std::string, DriverFn> table = {
      {"monoid-iso", verify_monoid_iso},
      {"diag-product", verify_diag_product},
      {"permuted-diag", verify_permuted_diag},
      {"cyclic-shift", verify_cyclic_shift},
      {"sum-formula",
       [](const VerifyOptions& o) { return sweep_triangular("sum-formula", true, o); }},
      {"upper-bound",
       [](const VerifyOptions& o) { return sweep_triangular("upper-bound", false, o); }},
      {"inner-invariance", verify_inner_invariance},
      {"conj-invariance", verify_conj_invariance},
      {"jabara", verify_jabara},
      {"johnson", verify_johnson},
      {"wreath-spectrum", verify_wreath_spectrum},
      {"characteristic-factor", verify_characteristic_factor},
      {"product-containment", verify_product_containment},
      {"zdirectsum", verify_zdirectsum},
  };
  return table;
}

}  // namespace

std::vector<std::string> verifier_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : drivers()) ids.push_back(id);
  return ids;
}

VerifyResult run_verifier(const std::string& id, const VerifyOptions& options) {
  auto it = drivers().find(id);
  if (it == drivers().end())
    throw Error(ErrorKind::InvalidInput, "unknown lemma id '" + id + "'");
  return it->second(options);
}

}  // namespace twconj
