#pragma once

#include <utility>
#include <vector>

#include "twconj/ext_nat.hpp"
#include "twconj/hom.hpp"

namespace twconj {

/// Partition of a group into phi-twisted conjugacy classes
/// (x ~ y iff x = g y phi(g)^-1 for some g). Classes are sorted element
/// sets ordered by their minimal element, which is the representative.
struct ReidemeisterPartition {
  GroupPtr group;
  GroupHom endo;
  std::vector<std::vector<Elem>> classes;
  std::vector<Elem> representatives;
  std::vector<int> class_index;  // element -> position of its class

  int count() const { return static_cast<int>(classes.size()); }
};

ReidemeisterPartition reidemeister_partition(const GroupPtr& g, const GroupHom& endo);
ExtNat reidemeister_number(const GroupPtr& g, const GroupHom& endo);

/// Stab_phi(a) = {b : a = b a phi(b)^-1}.
Subgroup twisted_stabilizer(const GroupPtr& g, const GroupHom& endo, Elem a);
Subgroup fixed_points(const GroupHom& endo);

/// {R(psi) : psi in Aut(G)}.
Spectrum reidemeister_spectrum(const GroupPtr& g,
                               std::int64_t budget = kDefaultSearchBudget);

/// R(tau_g . phi) == R(phi), both sides brute force.
bool check_inner_invariance(const GroupPtr& g, const GroupHom& endo, Elem a);
/// R(phi) == R(psi^-1 . phi . psi), both sides brute force.
bool check_conjugate_invariance(const GroupPtr& g, const GroupHom& endo,
                                const GroupHom& aut);

/// Builds G/N (cosets indexed by minimal representative) and the induced
/// endomorphism. N must be normal and phi-invariant.
std::pair<GroupPtr, GroupHom> quotient_endo(const GroupPtr& g, const Subgroup& n,
                                            const GroupHom& endo);

/// |Fix(phi)| <= 2^(2^R(phi)); vacuously true when R(phi) > 5 at desk
/// scale since 2^64 already exceeds any catalog order.
bool jabara_bound_check(const GroupPtr& g, const GroupHom& aut);

}  // namespace twconj
