#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "twconj/finite_group.hpp"

namespace twconj {

constexpr std::int64_t kDefaultSearchBudget = 10'000'000;

/// Total element map between two finite groups. Stored as a full array so
/// evaluation is one lookup; validation happens at construction.
struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  bool is_endo() const { return same_group(domain, codomain); }
  bool is_identity() const;
  bool is_trivial() const;
  bool is_bijective() const;

  bool operator==(const GroupHom& other) const { return map == other.map; }
};

GroupHom identity_hom(const GroupPtr& g);
GroupHom trivial_hom(const GroupPtr& domain, const GroupPtr& codomain);

/// Validates a total map as a homomorphism (identity preserved plus the
/// law on all (x, generator) pairs, which extends to all pairs).
GroupHom hom_from_map(const GroupPtr& domain, const GroupPtr& codomain,
                      std::vector<Elem> map);

/// Extends generator images through the domain's words, then validates.
GroupHom hom_from_generator_images(const GroupPtr& domain, const GroupPtr& codomain,
                                   const std::vector<Elem>& images);

/// Streams Hom(G, H) in lexicographic order of generator images.
/// Backtracking prunes images whose order does not divide the
/// generator's order and partial maps that are inconsistent on the
/// subgroup generated so far. Throws SearchBudgetExceeded when more
/// than `budget` candidate nodes get visited.
void for_each_hom(const GroupPtr& g, const GroupPtr& h,
                  const std::function<void(const GroupHom&)>& fn,
                  std::int64_t budget = kDefaultSearchBudget);

std::vector<GroupHom> enumerate_homs(const GroupPtr& g, const GroupPtr& h,
                                     std::int64_t budget = kDefaultSearchBudget);

/// Bijective endomorphisms, lexicographic; generator images are pruned
/// to elements of equal order. Verifies the result contains the identity
/// and is closed under inverses.
std::vector<GroupHom> enumerate_automorphisms(const GroupPtr& g,
                                              std::int64_t budget = kDefaultSearchBudget);

/// True when some bijective homomorphism a -> b exists; stops at the
/// first hit.
bool exists_isomorphism(const GroupPtr& a, const GroupPtr& b,
                        std::int64_t budget = kDefaultSearchBudget);

GroupHom compose(const GroupHom& f, const GroupHom& g);  // f after g
/// x -> f(x) g(x); requires commuting images.
GroupHom pointwise_product(const GroupHom& f, const GroupHom& g);
GroupHom inner_automorphism(const GroupPtr& g, Elem a);
GroupHom inverse_automorphism(const GroupHom& f);

Subgroup hom_image(const GroupHom& f);
Subgroup hom_kernel(const GroupHom& f);

/// [im f, im g] = 1, elementwise.
bool images_commute(const GroupHom& f, const GroupHom& g);

}  // namespace twconj
