#include "twconj/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <variant>

#include "twconj/product_matrix.hpp"

namespace twconj {

Spectrum spectrum_product(const std::vector<Spectrum>& sets) {
  Spectrum acc(std::vector<ExtNat>{ExtNat(1)});
  for (const auto& s : sets) {
    Spectrum next;
    for (const ExtNat& a : acc.values())
      for (const ExtNat& b : s.values()) next.insert(a * b);
    acc = std::move(next);
  }
  return acc;
}

Spectrum nfold_product(const Spectrum& a, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "n-fold product needs n >= 1");
  return spectrum_product(std::vector<Spectrum>(static_cast<size_t>(n), a));
}

Spectrum nfold_union(const Spectrum& a, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "n-fold union needs n >= 1");
  Spectrum acc = a;
  Spectrum power = a;
  for (int i = 2; i <= n; ++i) {
    power = spectrum_product({power, a});
    for (const ExtNat& v : power.values()) acc.insert(v);
  }
  return acc;
}

struct SpectrumExpr::Node {
  std::variant<Spectrum, std::vector<SpectrumExpr>, std::pair<SpectrumExpr, int>> payload;
};

SpectrumExpr SpectrumExpr::lit(Spectrum s) {
  SpectrumExpr e;
  e.node_ = std::make_shared<Node>(Node{std::move(s)});
  return e;
}

SpectrumExpr SpectrumExpr::product(std::vector<SpectrumExpr> children) {
  SpectrumExpr e;
  e.node_ = std::make_shared<Node>(Node{std::move(children)});
  return e;
}

SpectrumExpr SpectrumExpr::nfold_union_product(SpectrumExpr child, int n) {
  SpectrumExpr e;
  e.node_ = std::make_shared<Node>(Node{std::make_pair(std::move(child), n)});
  return e;
}

Spectrum SpectrumExpr::eval() const {
  if (!node_) return Spectrum();
  if (const auto* lit = std::get_if<Spectrum>(&node_->payload)) return *lit;
  if (const auto* prod = std::get_if<std::vector<SpectrumExpr>>(&node_->payload)) {
    std::vector<Spectrum> parts;
    parts.reserve(prod->size());
    for (const auto& c : *prod) parts.push_back(c.eval());
    return spectrum_product(parts);
  }
  const auto& [child, n] = std::get<std::pair<SpectrumExpr, int>>(node_->payload);
  return nfold_union(child.eval(), n);
}

ContainmentReport check_product_containment(const std::vector<GroupPtr>& factors,
                                            int order_cap, std::int64_t budget) {
  ContainmentReport report;
  for (const auto& f : factors) report.factor_spectra.push_back(reidemeister_spectrum(f, budget));
  report.product_of_spectra = spectrum_product(report.factor_spectra);
  ProductGroup p = direct_product(factors, order_cap);
  report.product_spectrum = reidemeister_spectrum(p.group, budget);
  report.contained = report.product_spectrum.contains_all(report.product_of_spectra);
  report.equal = report.contained && report.product_spectrum == report.product_of_spectra;
  return report;
}

WreathSpectrumReport check_wreath_spectrum_equality(const GroupPtr& g, int n,
                                                    int order_cap, std::int64_t budget) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "power must be >= 1");
  WreathSpectrumReport report;
  report.base_spectrum = reidemeister_spectrum(g, budget);
  report.formula = nfold_union(report.base_spectrum, n);

  ProductGroup power = direct_product(std::vector<GroupPtr>(static_cast<size_t>(n), g),
                                      order_cap);
  auto auts = enumerate_automorphisms(power.group, budget);
  report.aut_power_order = auts.size();

  auto base_auts = enumerate_automorphisms(g, budget);
  std::uint64_t wreath = 1;
  for (int i = 0; i < n; ++i) wreath *= base_auts.size();
  for (int i = 2; i <= n; ++i) wreath *= static_cast<std::uint64_t>(i);
  report.wreath_order = wreath;
  report.order_match = report.aut_power_order == report.wreath_order;

  // Elementwise membership in the wreath image {Diag(phi) P_{sigma^-1}}.
  std::set<std::vector<Elem>> wreath_maps;
  std::vector<int> idx(static_cast<size_t>(n), 0);
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<GroupHom> homs;
      homs.reserve(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) homs.push_back(base_auts[static_cast<size_t>(idx[i])]);
      wreath_maps.insert(wreath_embed(power, homs, sigma).map);
      int d = n - 1;
      while (d >= 0 && idx[d] + 1 == static_cast<int>(base_auts.size())) idx[d--] = 0;
      if (d < 0) break;
      ++idx[d];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  report.all_in_wreath_image = true;
  Spectrum brute;
  for (const auto& aut : auts) {
    brute.insert(reidemeister_number(power.group, aut));
    if (!wreath_maps.count(aut.map)) report.all_in_wreath_image = false;
  }
  report.brute = brute;
  // Equality of subgroups is a statement about the image; the abstract
  // wreath order overcounts when the embedding degenerates (trivial G).
  report.equality_case =
      report.all_in_wreath_image && wreath_maps.size() == report.aut_power_order;
  report.spectra_equal = report.brute == report.formula;
  return report;
}

}  // namespace twconj
