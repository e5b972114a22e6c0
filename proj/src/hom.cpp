#include "twconj/hom.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace twconj {

namespace {

std::string pair_str(Elem x, Elem y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

// Identity preserved plus the law on all (x, generator) pairs; since the
// generators generate, this extends to all pairs by induction on words.
void validate_hom(const GroupPtr& domain, const GroupPtr& codomain,
                  const std::vector<Elem>& map) {
  if (static_cast<int>(map.size()) != domain->order())
    throw Error(ErrorKind::InvalidInput, "map length does not match domain order");
  for (Elem v : map)
    if (v < 0 || v >= codomain->order())
      throw Error(ErrorKind::InvalidInput, "map value out of codomain range");
  if (map[FiniteGroup::kIdentity] != FiniteGroup::kIdentity)
    throw Error(ErrorKind::NotAHomomorphism, "identity is not preserved");
  for (Elem x = 0; x < domain->order(); ++x)
    for (Elem g : domain->generators()) {
      Elem xg = domain->mul(x, g);
      if (map[xg] != codomain->mul(map[x], map[g]))
        throw Error(ErrorKind::NotAHomomorphism,
                    "law fails at pair " + pair_str(x, g));
    }
}

struct HomSearch {
  const FiniteGroup& dom;
  const FiniteGroup& cod;
  bool automorphism_mode;
  std::int64_t budget;
  std::int64_t nodes = 0;
  const std::function<void(const GroupHom&)>* emit;
  GroupPtr dom_ptr, cod_ptr;

  // Per-depth snapshots of the partial map and its closed domain.
  std::vector<std::vector<Elem>> img_at;
  std::vector<std::vector<Elem>> known_at;
  std::vector<std::vector<Elem>> candidates;  // per generator

  void run() {
    const auto& gens = dom.generators();
    const int depth_max = static_cast<int>(gens.size());
    candidates.resize(depth_max);
    for (int d = 0; d < depth_max; ++d) {
      int go = dom.element_order(gens[d]);
      for (Elem y = 0; y < cod.order(); ++y) {
        int yo = cod.element_order(y);
        if (automorphism_mode ? yo == go : go % yo == 0) candidates[d].push_back(y);
      }
    }
    img_at.assign(depth_max + 1, std::vector<Elem>(dom.order(), -1));
    known_at.assign(depth_max + 1, {});
    img_at[0][FiniteGroup::kIdentity] = FiniteGroup::kIdentity;
    known_at[0] = {FiniteGroup::kIdentity};
    descend(0);
  }

  // Closes known_at[d] under right multiplication by gens[0..d-1] while
  // propagating images; false on the first inconsistency.
  bool close(int d) {
    auto& img = img_at[d];
    auto& known = known_at[d];
    const auto& gens = dom.generators();
    for (size_t head = 0; head < known.size(); ++head) {
      Elem x = known[head];
      for (int j = 0; j < d; ++j) {
        Elem xg = dom.mul(x, gens[j]);
        Elem want = cod.mul(img[x], img[gens[j]]);
        if (img[xg] == -1) {
          img[xg] = want;
          known.push_back(xg);
        } else if (img[xg] != want) {
          return false;
        }
      }
    }
    return true;
  }

  void descend(int d) {
    const auto& gens = dom.generators();
    if (d == static_cast<int>(gens.size())) {
      if (static_cast<int>(known_at[d].size()) != dom.order()) return;  // unreachable
      GroupHom f{dom_ptr, cod_ptr, img_at[d]};
      if (automorphism_mode && !f.is_bijective()) return;
      (*emit)(f);
      return;
    }
    for (Elem y : candidates[d]) {
      if (++nodes > budget)
        throw Error(ErrorKind::SearchBudgetExceeded,
                    "visited more than " + std::to_string(budget) + " candidate nodes");
      img_at[d + 1] = img_at[d];
      known_at[d + 1] = known_at[d];
      Elem g = gens[d];
      if (img_at[d + 1][g] == -1) {
        img_at[d + 1][g] = y;
        known_at[d + 1].push_back(g);
      } else if (img_at[d + 1][g] != y) {
        continue;
      }
      if (close(d + 1)) descend(d + 1);
    }
  }
};

void search_homs(const GroupPtr& g, const GroupPtr& h, bool automorphism_mode,
                 std::int64_t budget, const std::function<void(const GroupHom&)>& fn) {
  HomSearch s{*g, *h, automorphism_mode, budget, 0, &fn, g, h, {}, {}, {}};
  s.run();
}

}  // namespace

bool GroupHom::is_identity() const {
  for (Elem x = 0; x < domain->order(); ++x)
    if (map[x] != x) return false;
  return true;
}

bool GroupHom::is_trivial() const {
  for (Elem v : map)
    if (v != FiniteGroup::kIdentity) return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (domain->order() != codomain->order()) return false;
  std::vector<char> hit(map.size(), 0);
  for (Elem v : map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Elem> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return GroupHom{g, g, std::move(map)};
}

GroupHom trivial_hom(const GroupPtr& domain, const GroupPtr& codomain) {
  return GroupHom{domain, codomain, std::vector<Elem>(domain->order(), FiniteGroup::kIdentity)};
}

GroupHom hom_from_map(const GroupPtr& domain, const GroupPtr& codomain,
                      std::vector<Elem> map) {
  validate_hom(domain, codomain, map);
  return GroupHom{domain, codomain, std::move(map)};
}

GroupHom hom_from_generator_images(const GroupPtr& domain, const GroupPtr& codomain,
                                   const std::vector<Elem>& images) {
  if (images.size() != domain->generators().size())
    throw Error(ErrorKind::InvalidInput, "one image per generator expected");
  for (Elem v : images)
    if (v < 0 || v >= codomain->order())
      throw Error(ErrorKind::InvalidInput, "generator image out of codomain range");
  std::vector<Elem> map(domain->order());
  for (Elem x = 0; x < domain->order(); ++x) {
    Elem acc = FiniteGroup::kIdentity;
    for (int gi : domain->words()[x]) acc = codomain->mul(acc, images[gi]);
    map[x] = acc;
  }
  validate_hom(domain, codomain, map);
  return GroupHom{domain, codomain, std::move(map)};
}

void for_each_hom(const GroupPtr& g, const GroupPtr& h,
                  const std::function<void(const GroupHom&)>& fn, std::int64_t budget) {
  search_homs(g, h, false, budget, fn);
}

std::vector<GroupHom> enumerate_homs(const GroupPtr& g, const GroupPtr& h,
                                     std::int64_t budget) {
  std::vector<GroupHom> out;
  search_homs(g, h, false, budget, [&](const GroupHom& f) { out.push_back(f); });
  return out;
}

std::vector<GroupHom> enumerate_automorphisms(const GroupPtr& g, std::int64_t budget) {
  std::vector<GroupHom> out;
  search_homs(g, g, true, budget, [&](const GroupHom& f) { out.push_back(f); });
  // Identity and inverse closure are cheap enough to verify on the spot.
  std::vector<std::vector<Elem>> maps;
  maps.reserve(out.size());
  for (const auto& f : out) maps.push_back(f.map);
  std::sort(maps.begin(), maps.end());
  bool ok = !out.empty();
  for (const auto& f : out) {
    std::vector<Elem> inv(f.map.size());
    for (Elem x = 0; x < static_cast<Elem>(f.map.size()); ++x) inv[f.map[x]] = x;
    if (!std::binary_search(maps.begin(), maps.end(), inv)) {
      ok = false;
      break;
    }
  }
  if (!ok || !std::binary_search(maps.begin(), maps.end(), identity_hom(g).map))
    throw Error(ErrorKind::NotAutomorphism, "automorphism set is not inverse-closed");
  return out;
}

bool exists_isomorphism(const GroupPtr& a, const GroupPtr& b, std::int64_t budget) {
  if (a->order() != b->order()) return false;
  struct Found {};
  try {
    search_homs(a, b, true, budget, [](const GroupHom&) { throw Found{}; });
  } catch (const Found&) {
    return true;
  }
  return false;
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (!same_group(f.domain, g.codomain))
    throw Error(ErrorKind::DomainMismatch, "compose: domain of outer != codomain of inner");
  std::vector<Elem> map(g.map.size());
  for (size_t x = 0; x < g.map.size(); ++x) map[x] = f.map[g.map[x]];
  return GroupHom{g.domain, f.codomain, std::move(map)};
}

bool images_commute(const GroupHom& f, const GroupHom& g) {
  std::vector<Elem> imf(f.map), img(g.map);
  std::sort(imf.begin(), imf.end());
  imf.erase(std::unique(imf.begin(), imf.end()), imf.end());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  const auto& h = *f.codomain;
  for (Elem a : imf)
    for (Elem b : img)
      if (h.mul(a, b) != h.mul(b, a)) return false;
  return true;
}

GroupHom pointwise_product(const GroupHom& f, const GroupHom& g) {
  if (!same_group(f.domain, g.domain) || !same_group(f.codomain, g.codomain))
    throw Error(ErrorKind::DomainMismatch, "pointwise product needs matching domains");
  if (!images_commute(f, g))
    throw Error(ErrorKind::ImagesDoNotCommute, "[im f, im g] != 1");
  std::vector<Elem> map(f.map.size());
  for (size_t x = 0; x < f.map.size(); ++x) map[x] = f.codomain->mul(f.map[x], g.map[x]);
  return hom_from_map(f.domain, f.codomain, std::move(map));
}

GroupHom inner_automorphism(const GroupPtr& g, Elem a) {
  std::vector<Elem> map(g->order());
  for (Elem x = 0; x < g->order(); ++x) map[x] = g->conj(a, x);
  return GroupHom{g, g, std::move(map)};
}

GroupHom inverse_automorphism(const GroupHom& f) {
  if (!f.is_bijective() || !f.is_endo())
    throw Error(ErrorKind::NotAutomorphism, "inverse requires a bijective endomorphism");
  std::vector<Elem> inv(f.map.size());
  for (Elem x = 0; x < static_cast<Elem>(f.map.size()); ++x) inv[f.map[x]] = x;
  return GroupHom{f.domain, f.codomain, std::move(inv)};
}

Subgroup hom_image(const GroupHom& f) {
  std::vector<Elem> im(f.map);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return Subgroup(f.codomain, std::move(im));
}

Subgroup hom_kernel(const GroupHom& f) {
  std::vector<Elem> ker;
  for (Elem x = 0; x < f.domain->order(); ++x)
    if (f.map[x] == FiniteGroup::kIdentity) ker.push_back(x);
  return Subgroup(f.domain, std::move(ker));
}

}  // namespace twconj
