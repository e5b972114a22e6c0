#include "twconj/twisted.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace twconj {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void require_endo(const GroupPtr& g, const GroupHom& endo) {
  if (!same_group(endo.domain, g) || !same_group(endo.codomain, g))
    throw Error(ErrorKind::DomainMismatch, "expected an endomorphism of the given group");
}

}  // namespace

ReidemeisterPartition reidemeister_partition(const GroupPtr& g, const GroupHom& endo) {
  require_endo(g, endo);
  const int n = g->order();
  UnionFind uf(n);
  // Twisted conjugation is a group action, so generator moves suffice.
  for (Elem y = 0; y < n; ++y)
    for (Elem a : g->generators()) uf.merge(y, g->mul(g->mul(a, y), g->inv(endo.map[a])));

  std::map<int, std::vector<Elem>> buckets;
  for (Elem x = 0; x < n; ++x) buckets[uf.find(x)].push_back(x);

  ReidemeisterPartition p;
  p.group = g;
  p.endo = endo;
  p.class_index.assign(n, -1);
  for (auto& [root, members] : buckets) {
    std::sort(members.begin(), members.end());
    p.representatives.push_back(members.front());
    for (Elem x : members) p.class_index[x] = static_cast<int>(p.classes.size());
    p.classes.push_back(std::move(members));
  }
  return p;
}

ExtNat reidemeister_number(const GroupPtr& g, const GroupHom& endo) {
  return ExtNat(static_cast<std::uint64_t>(reidemeister_partition(g, endo).count()));
}

Subgroup twisted_stabilizer(const GroupPtr& g, const GroupHom& endo, Elem a) {
  require_endo(g, endo);
  std::vector<Elem> members;
  for (Elem b = 0; b < g->order(); ++b)
    if (g->mul(g->mul(b, a), g->inv(endo.map[b])) == a) members.push_back(b);
  return Subgroup(g, std::move(members));
}

Subgroup fixed_points(const GroupHom& endo) {
  if (!endo.is_endo())
    throw Error(ErrorKind::DomainMismatch, "fixed points need an endomorphism");
  std::vector<Elem> fix;
  for (Elem x = 0; x < endo.domain->order(); ++x)
    if (endo.map[x] == x) fix.push_back(x);
  return Subgroup(endo.domain, std::move(fix));
}

Spectrum reidemeister_spectrum(const GroupPtr& g, std::int64_t budget) {
  Spectrum s;
  for (const GroupHom& aut : enumerate_automorphisms(g, budget))
    s.insert(reidemeister_number(g, aut));
  return s;
}

bool check_inner_invariance(const GroupPtr& g, const GroupHom& endo, Elem a) {
  GroupHom twisted = compose(inner_automorphism(g, a), endo);
  return reidemeister_number(g, twisted) == reidemeister_number(g, endo);
}

bool check_conjugate_invariance(const GroupPtr& g, const GroupHom& endo,
                                const GroupHom& aut) {
  GroupHom conjugated = compose(inverse_automorphism(aut), compose(endo, aut));
  return reidemeister_number(g, conjugated) == reidemeister_number(g, endo);
}

std::pair<GroupPtr, GroupHom> quotient_endo(const GroupPtr& g, const Subgroup& n,
                                            const GroupHom& endo) {
  require_endo(g, endo);
  if (!same_group(n.parent(), g))
    throw Error(ErrorKind::DomainMismatch, "subgroup belongs to a different group");
  if (!n.is_normal()) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  for (Elem x : n.elements())
    if (!n.contains(endo.map[x]))
      throw Error(ErrorKind::NotInvariant,
                  "subgroup is not endo-invariant at " + std::to_string(x));

  // Cosets keyed by minimal member; the identity coset sorts first.
  const int order = g->order();
  std::vector<Elem> coset_min(order, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (coset_min[x] != -1) continue;
    std::vector<Elem> coset;
    for (Elem h : n.elements()) coset.push_back(g->mul(x, h));
    Elem m = *std::min_element(coset.begin(), coset.end());
    for (Elem y : coset) coset_min[y] = m;
    reps.push_back(m);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<int> index_of(order, -1);
  for (size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<int>(i);

  const int q = static_cast<int>(reps.size());
  std::vector<Elem> flat(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      flat[static_cast<size_t>(i) * q + j] = index_of[coset_min[g->mul(reps[i], reps[j])]];

  std::vector<std::string> names;
  if (g->has_names()) {
    names.resize(q);
    for (int i = 0; i < q; ++i) names[i] = g->name_of(reps[i]) + " N";
  }
  GroupPtr quotient = FiniteGroup::from_table_with_generators(std::move(flat), q,
                                                              std::move(names), {});
  std::vector<Elem> induced(q);
  for (int i = 0; i < q; ++i) induced[i] = index_of[coset_min[endo.map[reps[i]]]];
  return {quotient, hom_from_map(quotient, quotient, std::move(induced))};
}

bool jabara_bound_check(const GroupPtr& g, const GroupHom& aut) {
  if (!aut.is_bijective())
    throw Error(ErrorKind::NotAutomorphism, "bound applies to automorphisms");
  ExtNat r = reidemeister_number(g, aut);
  std::uint64_t fix = fixed_points(aut).elements().size();
  if (r.value() > 5) return true;  // 2^(2^6) already exceeds any table we can hold
  std::uint64_t bound = std::uint64_t{1} << (std::uint64_t{1} << r.value());
  return fix <= bound;
}

}  // namespace twconj
