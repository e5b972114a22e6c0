#pragma once

#include <string>
#include <vector>

#include "twconj/ext_nat.hpp"
#include "twconj/twisted.hpp"

namespace twconj {

/// Permutations are 0-based image arrays: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_inverse(const Perm& p);
Perm perm_compose(const Perm& p, const Perm& q);  // p after q
bool is_permutation(const Perm& p);
/// Disjoint cycles covering every point, fixed points as 1-cycles,
/// each cycle starting at its minimal element, cycles ordered by that
/// element. Within a cycle (c1 c2 ... cm): p maps ck to ck+1.
std::vector<std::vector<int>> cycle_decomposition(const Perm& p);

/// n x n grid of homomorphisms, entry (i, j) mapping factor j into
/// factor i, with images in a common row pairwise commuting. This is
/// the matrix form of End of the product.
struct EndoMatrix {
  ProductGroup product;
  std::vector<GroupHom> entries;  // row-major

  int arity() const { return product.arity(); }
  const GroupHom& at(int i, int j) const { return entries[static_cast<size_t>(i) * arity() + j]; }

  bool operator==(const EndoMatrix& other) const;
};

/// The coordinate-permuting endomorphism P_{sigma^-1}, carrier of the
/// S_n embedding: sigma goes in, rows e_{sigma^-1(i)} come out, so that
/// composing endomorphisms matches composing the sigmas.
struct PermEndo {
  Perm sigma;
  EndoMatrix matrix;
  GroupHom endo;
};

/// Decomposes an endomorphism of the product as entries pi_i . phi . e_j.
EndoMatrix to_matrix(const ProductGroup& product, const GroupHom& endo);
/// (g_1..g_n) -> (prod_k entry(i,k)(g_k))_i. Checks the commuting
/// condition and validates the result.
GroupHom from_matrix(const EndoMatrix& m);
/// Matrix product: entry (i,j) = sum_k at(i,k) . other(k,j), where the
/// sum is the pointwise product (each step re-checks commuting images).
EndoMatrix matrix_compose(const EndoMatrix& a, const EndoMatrix& b);

EndoMatrix diag(const ProductGroup& product, const std::vector<GroupHom>& homs);
GroupHom diag_endo(const ProductGroup& product, const std::vector<GroupHom>& homs);
/// Formula value prod_i R(hom_i) for Diag(hom_1..hom_n).
ExtNat diag_reidemeister(const std::vector<GroupHom>& homs);

PermEndo perm_endo(const ProductGroup& product, const Perm& sigma);

/// homs'[i] = homs[sigma^-1(i)], the list making
/// P_{sigma^-1} Diag(homs) = Diag(homs') P_{sigma^-1}.
std::vector<GroupHom> rewrite_perm_diag(const Perm& sigma, const std::vector<GroupHom>& homs);
/// Verifies the rewriting identity pointwise on the product.
bool rewrite_perm_diag_check(const ProductGroup& product, const Perm& sigma,
                             const std::vector<GroupHom>& homs);

/// Diag(homs) . P_{sigma^-1}; requires every hom to be an automorphism,
/// yields an automorphism of the power.
GroupHom wreath_embed(const ProductGroup& product, const std::vector<GroupHom>& homs,
                      const Perm& sigma);

/// Diag(homs) . P_sigma, the endomorphism whose Reidemeister number the
/// cycle formula computes (note: P_sigma, not P_{sigma^-1}).
GroupHom permuted_diag_endo(const ProductGroup& product, const std::vector<GroupHom>& homs,
                            const Perm& sigma);
/// prod over cycles (c1..cm) of sigma of R(homs[c1] . homs[c2] ... homs[cm]).
ExtNat permuted_diag_reidemeister(const std::vector<GroupHom>& homs, const Perm& sigma);

/// R(f1.f2...fn) == R(f2...fn.f1), both brute force.
bool cyclic_shift_check(const std::vector<GroupHom>& homs);

/// Number of orbits of Stab_delta(k_rep) acting on the Reidemeister
/// classes of alpha by [h] -> [h beta(y)]. Requires [im alpha, im beta] = 1.
int rho_orbits(const GroupHom& alpha, const GroupHom& beta, const GroupHom& delta,
               Elem k_rep);
/// Sum over delta-class representatives k_j of rho_orbits(..., k_j);
/// equals R of the triangular endomorphism (alpha, beta; 0, delta).
ExtNat sum_formula_reidemeister(const GroupHom& alpha, const GroupHom& beta,
                                const GroupHom& delta);
/// Brute R(phi) <= R(alpha) R(delta) for the same triangular phi.
bool upper_bound_check(const GroupHom& alpha, const GroupHom& beta,
                       const GroupHom& delta);

/// Builds the triangular endomorphism (alpha, beta; 0, delta) of H x K.
GroupHom triangular_endo(const ProductGroup& product, const GroupHom& alpha,
                         const GroupHom& beta, const GroupHom& delta);

enum class TriangularStatus { AllUpper, AllLower, AllDiagonal, Mixed };

struct TriangularAutReport {
  TriangularStatus status = TriangularStatus::Mixed;
  bool hypothesis_holds = false;  // every automorphism triangular one way
  int automorphism_count = 0;
  bool diagonal_entries_are_automorphisms = false;
  bool offdiagonal_into_center = false;
  std::string violation;  // empty when none
};

/// Checks the triangular-automorphism lemma on a two-factor product:
/// when all automorphisms are (upper or lower) triangular, the diagonal
/// entries are automorphisms and off-diagonal images land in centers.
TriangularAutReport triangular_aut_check(const ProductGroup& product,
                                         std::int64_t budget = kDefaultSearchBudget);

}  // namespace twconj
