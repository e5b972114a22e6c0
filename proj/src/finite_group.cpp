#include "twconj/finite_group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "twconj/hom.hpp"

namespace twconj {

namespace {

std::string triple_str(Elem x, Elem y, Elem z) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ", " << z << ")";
  return os.str();
}

// Closure of the seed under multiplication, as a membership mask.
std::vector<char> closure_mask(const std::vector<Elem>& table, int n,
                               const std::vector<Elem>& seed) {
  std::vector<char> in(n, 0);
  std::vector<Elem> worklist;
  in[FiniteGroup::kIdentity] = 1;
  worklist.push_back(FiniteGroup::kIdentity);
  for (Elem s : seed) {
    if (!in[s]) {
      in[s] = 1;
      worklist.push_back(s);
    }
  }
  std::vector<Elem> members = worklist;
  size_t head = 0;
  while (head < worklist.size()) {
    Elem x = worklist[head++];
    for (size_t i = 0; i < members.size(); ++i) {
      Elem a = table[static_cast<size_t>(x) * n + members[i]];
      if (!in[a]) {
        in[a] = 1;
        worklist.push_back(a);
        members.push_back(a);
      }
      Elem b = table[static_cast<size_t>(members[i]) * n + x];
      if (!in[b]) {
        in[b] = 1;
        worklist.push_back(b);
        members.push_back(b);
      }
    }
  }
  return in;
}

bool mask_full(const std::vector<char>& mask) {
  return std::all_of(mask.begin(), mask.end(), [](char c) { return c != 0; });
}

}  // namespace

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ImagesDoNotCommute: return "ImagesDoNotCommute";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::CommutingConditionViolated: return "CommutingConditionViolated";
    case ErrorKind::FactorMismatch: return "FactorMismatch";
    case ErrorKind::FactorsNotIdentical: return "FactorsNotIdentical";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

GroupPtr FiniteGroup::from_cayley_table(const std::vector<std::vector<Elem>>& table,
                                        std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty table");
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error(ErrorKind::InvalidInput, "table is not square at row " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      Elem v = table[i][j];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::NotClosed, "entry (" + std::to_string(i) + ", " +
                                              std::to_string(j) + ") = " + std::to_string(v) +
                                              " is out of range");
      flat.push_back(v);
    }
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw Error(ErrorKind::InvalidInput, "names length does not match order");

  // Two-sided identity.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = flat[static_cast<size_t>(e) * n + x] == x && flat[static_cast<size_t>(x) * n + e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");

  // Relabel so the identity sits at index 0 (swap 0 <-> identity).
  if (identity != 0) {
    auto relabel = [&](Elem x) -> Elem {
      if (x == identity) return 0;
      if (x == 0) return identity;
      return x;
    };
    std::vector<Elem> moved(flat.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        moved[static_cast<size_t>(relabel(i)) * n + relabel(j)] =
            relabel(flat[static_cast<size_t>(i) * n + j]);
    flat.swap(moved);
    if (!names.empty()) std::swap(names[0], names[identity]);
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Elem xy = flat[static_cast<size_t>(x) * n + y];
      for (int z = 0; z < n; ++z) {
        Elem yz = flat[static_cast<size_t>(y) * n + z];
        if (flat[static_cast<size_t>(xy) * n + z] != flat[static_cast<size_t>(x) * n + yz])
          throw Error(ErrorKind::NotAssociative,
                      "triple " + triple_str(x, y, z) + " violates associativity");
      }
    }

  return from_table_with_generators(std::move(flat), n, std::move(names), {});
}

GroupPtr FiniteGroup::from_table_with_generators(std::vector<Elem> flat_table, int order,
                                                 std::vector<std::string> names,
                                                 std::vector<Elem> generators) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = order;
  g->table_ = std::move(flat_table);
  g->names_ = std::move(names);

  g->inv_.assign(order, -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      if (g->mul(x, y) == kIdentity && g->mul(y, x) == kIdentity) {
        g->inv_[x] = y;
        break;
      }
    }
    if (g->inv_[x] < 0)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(x) + " has no inverse");
  }

  g->element_order_.assign(order, 0);
  for (int x = 0; x < order; ++x) {
    int k = 1;
    Elem p = x;
    while (p != kIdentity) {
      p = g->mul(p, x);
      ++k;
    }
    g->element_order_[x] = k;
  }

  g->abelian_ = true;
  for (int x = 0; x < order && g->abelian_; ++x)
    for (int y = x + 1; y < order; ++y)
      if (g->mul(x, y) != g->mul(y, x)) {
        g->abelian_ = false;
        break;
      }

  if (generators.empty()) {
    // Greedy: repeatedly adjoin the smallest element outside the closure.
    std::vector<char> in = closure_mask(g->table_, order, {});
    while (!mask_full(in)) {
      Elem next = 0;
      while (in[next]) ++next;
      generators.push_back(next);
      in = closure_mask(g->table_, order, generators);
    }
    if (generators.empty()) generators.push_back(kIdentity);  // trivial group
    // Drop generators made redundant by the rest.
    for (size_t i = 0; i < generators.size() && generators.size() > 1;) {
      std::vector<Elem> rest;
      for (size_t j = 0; j < generators.size(); ++j)
        if (j != i) rest.push_back(generators[j]);
      if (mask_full(closure_mask(g->table_, order, rest)))
        generators = std::move(rest);
      else
        ++i;
    }
  } else {
    if (!mask_full(closure_mask(g->table_, order, generators)))
      throw Error(ErrorKind::InvalidInput, "provided generators do not generate");
  }
  g->generators_ = std::move(generators);

  // BFS over the Cayley graph for short evaluation words.
  g->words_.assign(order, {});
  std::vector<char> seen(order, 0);
  std::queue<Elem> queue;
  seen[kIdentity] = 1;
  queue.push(kIdentity);
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop();
    for (size_t gi = 0; gi < g->generators_.size(); ++gi) {
      Elem y = g->mul(x, g->generators_[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        g->words_[y] = g->words_[x];
        g->words_[y].push_back(static_cast<int>(gi));
        queue.push(y);
      }
    }
  }

  return g;
}

std::string FiniteGroup::name_of(Elem a) const {
  if (!names_.empty()) return names_[a];
  return "g" + std::to_string(a);
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return order_ == other.order_ && table_ == other.table_;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  return a && b && a->same_table(*b);
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_[0] != FiniteGroup::kIdentity)
    throw Error(ErrorKind::InvalidInput, "subgroup must contain the identity");
  for (Elem x : elements_) {
    if (x < 0 || x >= parent_->order())
      throw Error(ErrorKind::InvalidInput, "subgroup element out of range");
    if (!contains(parent_->inv(x)))
      throw Error(ErrorKind::InvalidInput,
                  "subgroup not closed under inverses at " + std::to_string(x));
    for (Elem y : elements_)
      if (!contains(parent_->mul(x, y)))
        throw Error(ErrorKind::InvalidInput,
                    "subgroup not closed under product at (" + std::to_string(x) + ", " +
                        std::to_string(y) + ")");
  }
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {FiniteGroup::kIdentity});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<Elem>& seed) {
  const int n = parent->order();
  std::vector<char> in(n, 0);
  in[FiniteGroup::kIdentity] = 1;
  std::vector<Elem> members{FiniteGroup::kIdentity};
  std::vector<Elem> work{FiniteGroup::kIdentity};
  for (Elem s : seed)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
      work.push_back(s);
    }
  size_t head = 0;
  while (head < work.size()) {
    Elem x = work[head++];
    for (size_t i = 0; i < members.size(); ++i) {
      for (Elem p : {parent->mul(x, members[i]), parent->mul(members[i], x)}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
          work.push_back(p);
        }
      }
    }
  }
  return Subgroup(std::move(parent), std::move(members));
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subgroup::is_normal() const {
  const auto& g = *parent_;
  for (Elem x : elements_)
    for (Elem a = 0; a < g.order(); ++a)
      if (!contains(g.conj(a, x))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Products

Elem ProductGroup::encode(const std::vector<Elem>& tuple) const {
  Elem x = 0;
  for (size_t i = 0; i < factors.size(); ++i) x = x * factors[i]->order() + tuple[i];
  return x;
}

std::vector<Elem> ProductGroup::decode(Elem x) const {
  std::vector<Elem> tuple(factors.size());
  for (size_t i = factors.size(); i-- > 0;) {
    tuple[i] = x % factors[i]->order();
    x /= factors[i]->order();
  }
  return tuple;
}

ProductGroup direct_product(const std::vector<GroupPtr>& factors, int order_cap) {
  if (factors.empty()) throw Error(ErrorKind::InvalidInput, "empty factor list");
  std::int64_t order = 1;
  for (const auto& f : factors) {
    order *= f->order();
    if (order > order_cap)
      throw Error(ErrorKind::OrderCapExceeded,
                  "product order exceeds cap " + std::to_string(order_cap));
  }
  const int n = static_cast<int>(order);
  const int k = static_cast<int>(factors.size());

  std::vector<int> weight(k, 1);
  for (int i = k - 2; i >= 0; --i) weight[i] = weight[i + 1] * factors[i + 1]->order();

  std::vector<Elem> flat(static_cast<size_t>(n) * n);
  {
    std::vector<Elem> ta(k), tb(k);
    for (Elem a = 0; a < n; ++a) {
      Elem ra = a;
      for (int i = 0; i < k; ++i) {
        ta[i] = ra / weight[i];
        ra %= weight[i];
      }
      for (Elem b = 0; b < n; ++b) {
        Elem rb = b;
        Elem prod = 0;
        for (int i = 0; i < k; ++i) {
          tb[i] = rb / weight[i];
          rb %= weight[i];
          prod += weight[i] * factors[i]->mul(ta[i], tb[i]);
        }
        flat[static_cast<size_t>(a) * n + b] = prod;
      }
    }
  }

  std::vector<std::string> names;
  bool any_names = std::any_of(factors.begin(), factors.end(),
                               [](const GroupPtr& f) { return f->has_names(); });
  if (any_names) {
    names.resize(n);
    for (Elem a = 0; a < n; ++a) {
      std::string s = "(";
      Elem ra = a;
      for (int i = 0; i < k; ++i) {
        Elem c = ra / weight[i];
        ra %= weight[i];
        if (i) s += ", ";
        s += factors[i]->name_of(c);
      }
      names[a] = s + ")";
    }
  }

  // Embedded factor generators, factor by factor.
  std::vector<Elem> gens;
  for (int i = 0; i < k; ++i)
    for (Elem ge : factors[i]->generators())
      if (ge != FiniteGroup::kIdentity) gens.push_back(weight[i] * ge);
  if (gens.empty()) gens.push_back(FiniteGroup::kIdentity);

  ProductGroup p;
  p.factors = factors;
  p.group = FiniteGroup::from_table_with_generators(std::move(flat), n, std::move(names),
                                                    std::move(gens));
  for (int i = 0; i < k; ++i) {
    std::vector<Elem> emb(factors[i]->order());
    for (Elem x = 0; x < factors[i]->order(); ++x) emb[x] = weight[i] * x;
    p.embed.push_back(hom_from_map(factors[i], p.group, std::move(emb)));
    std::vector<Elem> proj(n);
    for (Elem x = 0; x < n; ++x) proj[x] = (x / weight[i]) % factors[i]->order();
    p.project.push_back(hom_from_map(p.group, factors[i], std::move(proj)));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Structural primitives

Subgroup center(const GroupPtr& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g->order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g->order() && central; ++y) central = g->mul(x, y) == g->mul(y, x);
    if (central) z.push_back(x);
  }
  return Subgroup(g, std::move(z));
}

std::vector<std::vector<Elem>> conjugacy_classes(const GroupPtr& g) {
  const int n = g->order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Elem> cls;
    for (Elem a = 0; a < n; ++a) {
      Elem y = g->conj(a, x);
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool internal_direct_product_check(const GroupPtr& g, const std::vector<Subgroup>& parts) {
  for (const auto& p : parts) {
    if (p.parent() != g && !same_group(p.parent(), g))
      throw Error(ErrorKind::DomainMismatch, "subgroup belongs to a different group");
    if (!p.is_normal()) return false;
  }
  // Pairwise elementwise commuting.
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      for (Elem x : parts[i].elements())
        for (Elem y : parts[j].elements())
          if (g->mul(x, y) != g->mul(y, x)) return false;
  // Product of all parts is the whole group.
  std::vector<char> prod(g->order(), 0);
  prod[FiniteGroup::kIdentity] = 1;
  std::vector<Elem> cur{FiniteGroup::kIdentity};
  for (const auto& p : parts) {
    std::vector<char> next(g->order(), 0);
    std::vector<Elem> nxt;
    for (Elem a : cur)
      for (Elem b : p.elements()) {
        Elem ab = g->mul(a, b);
        if (!next[ab]) {
          next[ab] = 1;
          nxt.push_back(ab);
        }
      }
    prod.swap(next);
    cur.swap(nxt);
  }
  if (static_cast<int>(cur.size()) != g->order()) return false;
  // Each part meets the product of the others trivially.
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<char> others(g->order(), 0);
    others[FiniteGroup::kIdentity] = 1;
    std::vector<Elem> acc{FiniteGroup::kIdentity};
    for (size_t j = 0; j < parts.size(); ++j) {
      if (j == i) continue;
      std::vector<char> next(g->order(), 0);
      std::vector<Elem> nxt;
      for (Elem a : acc)
        for (Elem b : parts[j].elements()) {
          Elem ab = g->mul(a, b);
          if (!next[ab]) {
            next[ab] = 1;
            nxt.push_back(ab);
          }
        }
      others.swap(next);
      acc.swap(nxt);
    }
    for (Elem x : parts[i].elements())
      if (x != FiniteGroup::kIdentity && others[x]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Presets

namespace {

std::vector<std::vector<Elem>> cyclic_table(int n) {
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

// Elements 0..n-1 are rotations r^a, n..2n-1 reflections r^a s.
Elem dihedral_mul(int n, Elem x, Elem y) {
  bool rx = x >= n, ry = y >= n;
  int a = rx ? x - n : x, b = ry ? y - n : y;
  if (!rx && !ry) return (a + b) % n;
  if (!rx && ry) return n + (a + b) % n;
  if (rx && !ry) return n + (a - b + n) % n;
  return (a - b + n) % n;
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

bool perm_even(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

std::string perm_cycle_name(const std::vector<int>& p) {
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) s += " ";
      s += std::to_string(j);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

GroupPtr perm_group(const std::vector<std::vector<int>>& perms,
                    const std::vector<std::vector<int>>& gen_perms) {
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  const size_t deg = perms[0].size();
  std::vector<Elem> flat(static_cast<size_t>(n) * n);
  std::vector<int> comp(deg);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (size_t x = 0; x < deg; ++x) comp[x] = perms[i][static_cast<size_t>(perms[j][x])];
      flat[static_cast<size_t>(i) * n + j] = index.at(comp);
    }
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = perm_cycle_name(perms[i]);
  std::vector<Elem> gens;
  for (const auto& gp : gen_perms) gens.push_back(index.at(gp));
  if (gens.empty()) gens.push_back(0);
  return FiniteGroup::from_table_with_generators(std::move(flat), n, std::move(names),
                                                 std::move(gens));
}

std::vector<int> cycle_perm(int deg, const std::vector<int>& cycle) {
  std::vector<int> p(deg);
  std::iota(p.begin(), p.end(), 0);
  for (size_t i = 0; i < cycle.size(); ++i)
    p[static_cast<size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
  return p;
}

}  // namespace

GroupPtr preset(const std::string& name, const std::vector<int>& params, int order_cap) {
  auto need_param = [&](const char* what) -> int {
    if (params.size() != 1)
      throw Error(ErrorKind::UnknownPreset, std::string(what) + " expects one parameter");
    return params[0];
  };
  auto check_cap = [&](std::int64_t order) {
    if (order > order_cap)
      throw Error(ErrorKind::OrderCapExceeded, "order " + std::to_string(order) +
                                                   " exceeds cap " + std::to_string(order_cap));
  };

  if (name == "cyclic") {
    int n = need_param("cyclic");
    if (n < 1) throw Error(ErrorKind::UnknownPreset, "cyclic requires n >= 1");
    check_cap(n);
    std::vector<Elem> flat(static_cast<size_t>(n) * n);
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
      names[i] = std::to_string(i);
      for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = (i + j) % n;
    }
    std::vector<Elem> gens{n > 1 ? 1 : 0};
    return FiniteGroup::from_table_with_generators(std::move(flat), n, std::move(names),
                                                   std::move(gens));
  }
  if (name == "dihedral") {
    int n = need_param("dihedral");
    if (n < 1) throw Error(ErrorKind::UnknownPreset, "dihedral requires n >= 1");
    check_cap(2 * n);
    const int m = 2 * n;
    std::vector<Elem> flat(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) flat[static_cast<size_t>(i) * m + j] = dihedral_mul(n, i, j);
    std::vector<std::string> names(m);
    for (int i = 0; i < n; ++i) names[i] = "r" + std::to_string(i);
    for (int i = 0; i < n; ++i) names[n + i] = "r" + std::to_string(i) + " s";
    std::vector<Elem> gens = n > 1 ? std::vector<Elem>{1, n} : std::vector<Elem>{1};
    return FiniteGroup::from_table_with_generators(std::move(flat), m, std::move(names),
                                                   std::move(gens));
  }
  if (name == "symmetric" || name == "alternating") {
    int n = need_param(name.c_str());
    if (n < 1 || n > 5)
      throw Error(ErrorKind::UnknownPreset, name + " supports 1 <= n <= 5");
    auto all = permutations_of(n);
    std::vector<std::vector<int>> perms;
    for (auto& p : all)
      if (name == "symmetric" || perm_even(p)) perms.push_back(p);
    check_cap(static_cast<int>(perms.size()));
    std::vector<std::vector<int>> gens;
    if (name == "symmetric") {
      if (n >= 2) gens.push_back(cycle_perm(n, {0, 1}));
      if (n >= 3) {
        std::vector<int> full(n);
        std::iota(full.begin(), full.end(), 0);
        gens.push_back(cycle_perm(n, full));
      }
    } else {
      if (n >= 3) gens.push_back(cycle_perm(n, {0, 1, 2}));
      if (n >= 4) {
        std::vector<int> cyc;
        if (n % 2 == 1) {
          cyc.resize(n);
          std::iota(cyc.begin(), cyc.end(), 0);
        } else {
          cyc.resize(n - 1);
          std::iota(cyc.begin(), cyc.end(), 1);
        }
        gens.push_back(cycle_perm(n, cyc));
      }
    }
    return perm_group(perms, gens);
  }
  if (name == "quaternion8") {
    if (!params.empty()) throw Error(ErrorKind::UnknownPreset, "quaternion8 takes no parameters");
    check_cap(8);
    // 0..7 = 1, -1, i, -i, j, -j, k, -k
    auto mulq = [](int a, int b) -> int {
      // unit index 0..3 (1, i, j, k), sign bit
      int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
      // sign[a][b] = 1 when unit_a * unit_b is negative: i*i = -1, i*k = -j, ...
      int u = unit[ua][ub];
      int s = (sa + sb + sign[ua][ub]) % 2;
      return 2 * u + s;
    };
    std::vector<Elem> flat(64);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) flat[static_cast<size_t>(a) * 8 + b] = mulq(a, b);
    std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return FiniteGroup::from_table_with_generators(std::move(flat), 8, std::move(names), {2, 4});
  }
  if (name == "klein4") {
    if (!params.empty()) throw Error(ErrorKind::UnknownPreset, "klein4 takes no parameters");
    check_cap(4);
    std::vector<Elem> flat{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
    std::vector<std::string> names{"e", "a", "b", "ab"};
    return FiniteGroup::from_table_with_generators(std::move(flat), 4, std::move(names), {1, 2});
  }
  throw Error(ErrorKind::UnknownPreset, "unknown preset '" + name + "'");
}

GroupPtr preset_from_spec(const std::string& spec, int order_cap) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ':')) {
      try {
        params.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw Error(ErrorKind::UnknownPreset, "bad parameter '" + tok + "' in '" + spec + "'");
      }
    }
  }
  return preset(name, params, order_cap);
}

std::vector<CatalogEntry> catalog_groups(int max_order) {
  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& name, GroupPtr g) {
    if (g->order() <= max_order) out.push_back({name, std::move(g)});
  };
  for (int n = 1; n <= 12 && n <= max_order; ++n)
    add("cyclic:" + std::to_string(n), preset("cyclic", {n}));
  if (max_order >= 4) add("klein4", preset("klein4", {}));
  for (int n = 3; n <= 12 && 2 * n <= max_order; ++n)
    add("dihedral:" + std::to_string(n), preset("dihedral", {n}));
  if (max_order >= 8) add("quaternion8", preset("quaternion8", {}));
  if (max_order >= 6) add("symmetric:3", preset("symmetric", {3}));
  if (max_order >= 24) add("symmetric:4", preset("symmetric", {4}));
  if (max_order >= 12) add("alternating:4", preset("alternating", {4}));
  if (max_order >= 60) add("alternating:5", preset("alternating", {5}));
  return out;
}

}  // namespace twconj
