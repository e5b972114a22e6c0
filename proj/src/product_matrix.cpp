#include "twconj/product_matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace twconj {

namespace {

void require_product_match(const EndoMatrix& a, const EndoMatrix& b) {
  if (!same_group(a.product.group, b.product.group))
    throw Error(ErrorKind::DomainMismatch, "matrices over different products");
}

void check_row_commuting(const EndoMatrix& m) {
  const int n = m.arity();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l)
        if (!images_commute(m.at(i, k), m.at(i, l)))
          throw Error(ErrorKind::CommutingConditionViolated,
                      "row " + std::to_string(i) + " entries " + std::to_string(k) + " and " +
                          std::to_string(l) + " have non-commuting images");
}

void require_endo_of_factor(const ProductGroup& product, const GroupHom& f, int i,
                            ErrorKind kind) {
  if (!same_group(f.domain, product.factors[i]) || !f.is_endo())
    throw Error(kind, "hom " + std::to_string(i) + " is not an endomorphism of factor " +
                          std::to_string(i));
}

GroupHom compose_along(const std::vector<GroupHom>& homs, const std::vector<int>& order) {
  GroupHom acc = homs[order.front()];
  for (size_t k = 1; k < order.size(); ++k) acc = compose(acc, homs[order[k]]);
  return acc;
}

}  // namespace

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<char> hit(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

Perm perm_inverse(const Perm& p) {
  Perm inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

std::vector<std::vector<int>> cycle_decomposition(const Perm& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(p.size(), 0);
  for (size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int x = static_cast<int>(start);
    while (!seen[x]) {
      seen[x] = 1;
      cycle.push_back(x);
      x = p[x];
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool EndoMatrix::operator==(const EndoMatrix& other) const {
  if (!same_group(product.group, other.product.group) || entries.size() != other.entries.size())
    return false;
  for (size_t i = 0; i < entries.size(); ++i)
    if (!(entries[i] == other.entries[i])) return false;
  return true;
}

EndoMatrix to_matrix(const ProductGroup& product, const GroupHom& endo) {
  if (!same_group(endo.domain, product.group) || !endo.is_endo())
    throw Error(ErrorKind::DomainMismatch, "expected an endomorphism of the product");
  const int n = product.arity();
  EndoMatrix m{product, {}};
  m.entries.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.entries.push_back(compose(product.project[i], compose(endo, product.embed[j])));
  check_row_commuting(m);
  return m;
}

GroupHom from_matrix(const EndoMatrix& m) {
  check_row_commuting(m);
  const int n = m.arity();
  const auto& product = m.product;
  std::vector<Elem> map(product.group->order());
  for (Elem x = 0; x < product.group->order(); ++x) {
    std::vector<Elem> tuple = product.decode(x);
    std::vector<Elem> out(n);
    for (int i = 0; i < n; ++i) {
      const auto& factor = *product.factors[i];
      Elem acc = FiniteGroup::kIdentity;
      for (int k = 0; k < n; ++k) acc = factor.mul(acc, m.at(i, k).map[tuple[k]]);
      out[i] = acc;
    }
    map[x] = product.encode(out);
  }
  return hom_from_map(product.group, product.group, std::move(map));
}

EndoMatrix matrix_compose(const EndoMatrix& a, const EndoMatrix& b) {
  require_product_match(a, b);
  const int n = a.arity();
  EndoMatrix c{a.product, {}};
  c.entries.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GroupHom acc = compose(a.at(i, 0), b.at(0, j));
      for (int k = 1; k < n; ++k) acc = pointwise_product(acc, compose(a.at(i, k), b.at(k, j)));
      c.entries.push_back(std::move(acc));
    }
  check_row_commuting(c);
  return c;
}

EndoMatrix diag(const ProductGroup& product, const std::vector<GroupHom>& homs) {
  const int n = product.arity();
  if (static_cast<int>(homs.size()) != n)
    throw Error(ErrorKind::FactorMismatch, "one endomorphism per factor expected");
  for (int i = 0; i < n; ++i) require_endo_of_factor(product, homs[i], i, ErrorKind::FactorMismatch);
  EndoMatrix m{product, {}};
  m.entries.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        m.entries.push_back(homs[i]);
      else
        m.entries.push_back(trivial_hom(product.factors[j], product.factors[i]));
    }
  return m;
}

GroupHom diag_endo(const ProductGroup& product, const std::vector<GroupHom>& homs) {
  const int n = product.arity();
  if (static_cast<int>(homs.size()) != n)
    throw Error(ErrorKind::FactorMismatch, "one endomorphism per factor expected");
  for (int i = 0; i < n; ++i) require_endo_of_factor(product, homs[i], i, ErrorKind::FactorMismatch);
  std::vector<Elem> map(product.group->order());
  for (Elem x = 0; x < product.group->order(); ++x) {
    std::vector<Elem> tuple = product.decode(x);
    for (int i = 0; i < n; ++i) tuple[i] = homs[i].map[tuple[i]];
    map[x] = product.encode(tuple);
  }
  return hom_from_map(product.group, product.group, std::move(map));
}

ExtNat diag_reidemeister(const std::vector<GroupHom>& homs) {
  ExtNat acc(1);
  for (const auto& f : homs) {
    if (!f.is_endo())
      throw Error(ErrorKind::DomainMismatch, "diagonal entries must be endomorphisms");
    acc = acc * reidemeister_number(f.domain, f);
  }
  return acc;
}

PermEndo perm_endo(const ProductGroup& product, const Perm& sigma) {
  const int n = product.arity();
  if (static_cast<int>(sigma.size()) != n || !is_permutation(sigma))
    throw Error(ErrorKind::InvalidInput, "sigma is not a permutation of the factors");
  Perm sinv = perm_inverse(sigma);
  for (int i = 0; i < n; ++i)
    if (!same_group(product.factors[i], product.factors[sinv[i]]))
      throw Error(ErrorKind::FactorsNotIdentical,
                  "factors " + std::to_string(i) + " and " + std::to_string(sinv[i]) +
                      " differ as tables");

  PermEndo pe;
  pe.sigma = sigma;
  pe.matrix.product = product;
  pe.matrix.entries.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == sinv[i]) {
        std::vector<Elem> id(product.factors[j]->order());
        std::iota(id.begin(), id.end(), 0);
        pe.matrix.entries.push_back(GroupHom{product.factors[j], product.factors[i], std::move(id)});
      } else {
        pe.matrix.entries.push_back(trivial_hom(product.factors[j], product.factors[i]));
      }
    }

  std::vector<Elem> map(product.group->order());
  std::vector<Elem> out(n);
  for (Elem x = 0; x < product.group->order(); ++x) {
    std::vector<Elem> tuple = product.decode(x);
    for (int i = 0; i < n; ++i) out[i] = tuple[sinv[i]];
    map[x] = product.encode(out);
  }
  pe.endo = hom_from_map(product.group, product.group, std::move(map));
  return pe;
}

std::vector<GroupHom> rewrite_perm_diag(const Perm& sigma, const std::vector<GroupHom>& homs) {
  if (sigma.size() != homs.size() || !is_permutation(sigma))
    throw Error(ErrorKind::InvalidInput, "sigma must permute the hom list");
  Perm sinv = perm_inverse(sigma);
  std::vector<GroupHom> out;
  out.reserve(homs.size());
  for (size_t i = 0; i < homs.size(); ++i) out.push_back(homs[sinv[i]]);
  return out;
}

bool rewrite_perm_diag_check(const ProductGroup& product, const Perm& sigma,
                             const std::vector<GroupHom>& homs) {
  GroupHom p = perm_endo(product, sigma).endo;
  GroupHom lhs = compose(p, diag_endo(product, homs));
  GroupHom rhs = compose(diag_endo(product, rewrite_perm_diag(sigma, homs)), p);
  return lhs.map == rhs.map;
}

GroupHom wreath_embed(const ProductGroup& product, const std::vector<GroupHom>& homs,
                      const Perm& sigma) {
  const int n = product.arity();
  if (static_cast<int>(homs.size()) != n || static_cast<int>(sigma.size()) != n ||
      !is_permutation(sigma))
    throw Error(ErrorKind::InvalidInput, "wreath element needs n homs and a permutation");
  for (int i = 0; i < n; ++i) {
    require_endo_of_factor(product, homs[i], i, ErrorKind::NotAutomorphism);
    if (!homs[i].is_bijective())
      throw Error(ErrorKind::NotAutomorphism, "hom " + std::to_string(i) + " is not bijective");
  }
  Perm sinv = perm_inverse(sigma);
  for (int i = 0; i < n; ++i)
    if (!same_group(product.factors[i], product.factors[sinv[i]]))
      throw Error(ErrorKind::FactorsNotIdentical, "permuted factors differ as tables");

  std::vector<Elem> map(product.group->order());
  std::vector<Elem> out(n);
  for (Elem x = 0; x < product.group->order(); ++x) {
    std::vector<Elem> tuple = product.decode(x);
    for (int i = 0; i < n; ++i) out[i] = homs[i].map[tuple[sinv[i]]];
    map[x] = product.encode(out);
  }
  return hom_from_map(product.group, product.group, std::move(map));
}

GroupHom permuted_diag_endo(const ProductGroup& product, const std::vector<GroupHom>& homs,
                            const Perm& sigma) {
  const int n = product.arity();
  if (static_cast<int>(homs.size()) != n || static_cast<int>(sigma.size()) != n ||
      !is_permutation(sigma))
    throw Error(ErrorKind::InvalidInput, "needs n homs and a permutation of size n");
  for (int i = 0; i < n; ++i) require_endo_of_factor(product, homs[i], i, ErrorKind::FactorMismatch);
  for (int i = 0; i < n; ++i)
    if (!same_group(product.factors[i], product.factors[sigma[i]]))
      throw Error(ErrorKind::FactorsNotIdentical, "permuted factors differ as tables");

  std::vector<Elem> map(product.group->order());
  std::vector<Elem> out(n);
  for (Elem x = 0; x < product.group->order(); ++x) {
    std::vector<Elem> tuple = product.decode(x);
    for (int i = 0; i < n; ++i) out[i] = homs[i].map[tuple[sigma[i]]];
    map[x] = product.encode(out);
  }
  return hom_from_map(product.group, product.group, std::move(map));
}

ExtNat permuted_diag_reidemeister(const std::vector<GroupHom>& homs, const Perm& sigma) {
  if (sigma.size() != homs.size() || !is_permutation(sigma))
    throw Error(ErrorKind::InvalidInput, "sigma must permute the hom list");
  for (const auto& f : homs)
    if (!f.is_endo() || !same_group(f.domain, homs.front().domain))
      throw Error(ErrorKind::DomainMismatch, "homs must be endomorphisms of a common factor");
  ExtNat acc(1);
  for (const auto& cycle : cycle_decomposition(sigma)) {
    GroupHom composed = compose_along(homs, cycle);
    acc = acc * reidemeister_number(composed.domain, composed);
  }
  return acc;
}

bool cyclic_shift_check(const std::vector<GroupHom>& homs) {
  if (homs.empty()) throw Error(ErrorKind::InvalidInput, "need at least one endomorphism");
  for (const auto& f : homs)
    if (!f.is_endo() || !same_group(f.domain, homs.front().domain))
      throw Error(ErrorKind::DomainMismatch, "homs must be endomorphisms of a common group");
  std::vector<int> straight(homs.size());
  std::iota(straight.begin(), straight.end(), 0);
  std::vector<int> shifted(straight.begin() + 1, straight.end());
  shifted.push_back(0);
  GroupHom a = compose_along(homs, straight);
  GroupHom b = compose_along(homs, shifted);
  return reidemeister_number(a.domain, a) == reidemeister_number(b.domain, b);
}

GroupHom triangular_endo(const ProductGroup& product, const GroupHom& alpha,
                         const GroupHom& beta, const GroupHom& delta) {
  if (product.arity() != 2)
    throw Error(ErrorKind::InvalidInput, "triangular form needs exactly two factors");
  require_endo_of_factor(product, alpha, 0, ErrorKind::DomainMismatch);
  require_endo_of_factor(product, delta, 1, ErrorKind::DomainMismatch);
  if (!same_group(beta.domain, product.factors[1]) ||
      !same_group(beta.codomain, product.factors[0]))
    throw Error(ErrorKind::DomainMismatch, "beta must map the second factor into the first");
  if (!images_commute(alpha, beta))
    throw Error(ErrorKind::CommutingConditionViolated, "[im alpha, im beta] != 1");

  const auto& h = *product.factors[0];
  std::vector<Elem> map(product.group->order());
  for (Elem x = 0; x < product.group->order(); ++x) {
    std::vector<Elem> t = product.decode(x);
    map[x] = product.encode({h.mul(alpha.map[t[0]], beta.map[t[1]]), delta.map[t[1]]});
  }
  return hom_from_map(product.group, product.group, std::move(map));
}

int rho_orbits(const GroupHom& alpha, const GroupHom& beta, const GroupHom& delta,
               Elem k_rep) {
  if (!alpha.is_endo() || !delta.is_endo())
    throw Error(ErrorKind::DomainMismatch, "alpha and delta must be endomorphisms");
  if (!same_group(beta.domain, delta.domain) || !same_group(beta.codomain, alpha.domain))
    throw Error(ErrorKind::DomainMismatch, "beta must map K into H");
  if (!images_commute(alpha, beta))
    throw Error(ErrorKind::CommutingConditionViolated, "[im alpha, im beta] != 1");

  const GroupPtr& h = alpha.domain;
  ReidemeisterPartition part = reidemeister_partition(h, alpha);
  Subgroup stab = twisted_stabilizer(delta.domain, delta, k_rep);

  std::vector<int> parent(part.classes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (size_t c = 0; c < part.classes.size(); ++c) {
    Elem rep = part.representatives[c];
    for (Elem y : stab.elements()) {
      int a = find(static_cast<int>(c));
      int b = find(part.class_index[h->mul(rep, beta.map[y])]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  int orbits = 0;
  for (size_t c = 0; c < parent.size(); ++c)
    if (find(static_cast<int>(c)) == static_cast<int>(c)) ++orbits;
  return orbits;
}

ExtNat sum_formula_reidemeister(const GroupHom& alpha, const GroupHom& beta,
                                const GroupHom& delta) {
  ReidemeisterPartition delta_part = reidemeister_partition(delta.domain, delta);
  ExtNat total(0);
  for (Elem k_rep : delta_part.representatives)
    total = total + ExtNat(static_cast<std::uint64_t>(rho_orbits(alpha, beta, delta, k_rep)));
  return total;
}

bool upper_bound_check(const GroupHom& alpha, const GroupHom& beta, const GroupHom& delta) {
  ProductGroup product = direct_product({alpha.domain, delta.domain});
  GroupHom phi = triangular_endo(product, alpha, beta, delta);
  ExtNat lhs = reidemeister_number(product.group, phi);
  ExtNat rhs = reidemeister_number(alpha.domain, alpha) * reidemeister_number(delta.domain, delta);
  return lhs < rhs || lhs == rhs;
}

TriangularAutReport triangular_aut_check(const ProductGroup& product, std::int64_t budget) {
  if (product.arity() != 2)
    throw Error(ErrorKind::InvalidInput, "triangular check needs exactly two factors");
  TriangularAutReport report;
  auto auts = enumerate_automorphisms(product.group, budget);
  report.automorphism_count = static_cast<int>(auts.size());

  bool all_upper = true, all_lower = true;
  std::vector<EndoMatrix> matrices;
  matrices.reserve(auts.size());
  for (const auto& aut : auts) {
    EndoMatrix m = to_matrix(product, aut);
    if (!m.at(1, 0).is_trivial()) all_upper = false;
    if (!m.at(0, 1).is_trivial()) all_lower = false;
    matrices.push_back(std::move(m));
  }
  if (all_upper && all_lower)
    report.status = TriangularStatus::AllDiagonal;
  else if (all_upper)
    report.status = TriangularStatus::AllUpper;
  else if (all_lower)
    report.status = TriangularStatus::AllLower;
  else
    report.status = TriangularStatus::Mixed;
  report.hypothesis_holds = all_upper || all_lower;
  if (!report.hypothesis_holds) {
    report.violation = "automorphisms are not all triangular the same way";
    return report;
  }

  report.diagonal_entries_are_automorphisms = true;
  report.offdiagonal_into_center = true;
  std::vector<Subgroup> centers{center(product.factors[0]), center(product.factors[1])};
  for (size_t a = 0; a < matrices.size(); ++a) {
    const auto& m = matrices[a];
    for (int i = 0; i < 2; ++i) {
      if (!m.at(i, i).is_bijective()) {
        report.diagonal_entries_are_automorphisms = false;
        report.violation =
            "diagonal entry of automorphism " + std::to_string(a) + " is not bijective";
      }
      for (Elem v : m.at(i, 1 - i).map)
        if (!centers[i].contains(v)) {
          report.offdiagonal_into_center = false;
          report.violation = "off-diagonal image of automorphism " + std::to_string(a) +
                             " leaves the center";
          break;
        }
    }
  }
  return report;
}

}  // namespace twconj
