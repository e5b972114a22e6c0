#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twconj/product_matrix.hpp"
#include "twconj/spectra.hpp"

namespace twconj {

bool is_centerless(const GroupPtr& g);

/// Every normal subgroup, obtained as closures of unions of conjugacy
/// classes; sorted by (order, elements). Throws SearchBudgetExceeded
/// when the class count makes the subset scan infeasible.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g,
                                       std::int64_t budget = kDefaultSearchBudget);

/// True iff no pair of nontrivial normal subgroups passes
/// internal_direct_product_check.
bool is_directly_indecomposable(const GroupPtr& g,
                                std::int64_t budget = kDefaultSearchBudget);

/// Reindexes a subgroup as a standalone group; second component is the
/// inclusion into the parent.
std::pair<GroupPtr, GroupHom> subgroup_as_group(const Subgroup& s);

/// Exhaustive generator-image search with invariant pruning (order,
/// element-order histogram, class sizes, center order).
bool are_isomorphic(const GroupPtr& a, const GroupPtr& b,
                    std::int64_t budget = kDefaultSearchBudget);

/// Nontrivial proper direct factors of g (normal subgroups admitting a
/// normal complement), plus g itself.
std::vector<Subgroup> direct_factors(const GroupPtr& g,
                                     std::int64_t budget = kDefaultSearchBudget);

struct HypothesisStatus {
  bool ok = true;
  std::string reason;  // empty when ok
};

struct AutPatternReport {
  HypothesisStatus hypothesis;
  int automorphism_count = 0;
  bool pattern_holds = false;  // one isomorphism per row and column
  std::vector<Perm> row_permutations;  // per automorphism: i -> its nontrivial column
  std::string counterexample;
};

/// For a product of nontrivial centerless directly indecomposable
/// factors: every automorphism's matrix is a permutation pattern of
/// isomorphisms.
AutPatternReport aut_matrix_pattern_check(const std::vector<GroupPtr>& factors,
                                          int order_cap = kDefaultOrderCap,
                                          std::int64_t budget = kDefaultSearchBudget);

struct JohnsonReport {
  HypothesisStatus hypothesis;
  std::uint64_t computed_order = 0;  // |Aut(product)| by enumeration
  std::uint64_t expected_order = 0;  // prod |Aut(G_i)|^{r_i} r_i!
  bool order_match = false;
  bool block_structure_holds = false;  // nontrivial entries stay inside equal-factor blocks
  std::string counterexample;
};

/// Aut(x_i G_i^{r_i}) = x_i (Aut(G_i) wr S_{r_i}) for pairwise
/// non-isomorphic nontrivial centerless directly indecomposable G_i.
JohnsonReport johnson_decomposition_check(const std::vector<GroupPtr>& distinct_factors,
                                          const std::vector<int>& multiplicities,
                                          int order_cap = kDefaultOrderCap,
                                          std::int64_t budget = kDefaultSearchBudget);

struct CharFactorReport {
  HypothesisStatus hypothesis;
  std::uint64_t computed_order = 0;
  std::uint64_t expected_order = 0;  // |Aut(G)| |Aut(H)| |Hom(G, Z(H))|
  bool order_match = false;
  bool h_preserved = false;       // every automorphism fixes embedded H setwise
  bool triangular_shape = false;  // beta block trivial, gamma into Z(H), delta in Aut(H)
  std::string counterexample;
};

/// H is characteristic in (x_i G_i) x H when H has no direct factor
/// isomorphic to any G_i; automorphism matrices are lower triangular
/// with the corner in Hom(G, Z(H)).
CharFactorReport characteristic_factor_check(const std::vector<GroupPtr>& g_factors,
                                             const GroupPtr& h,
                                             int order_cap = kDefaultOrderCap,
                                             std::int64_t budget = kDefaultSearchBudget);

/// prod_i (union_{j<=r_i} Spec_R(G_i)^(j)); throws HypothesisViolated
/// unless the decomposition theorem's hypotheses hold.
Spectrum spectrum_of_centreless_product(const std::vector<GroupPtr>& distinct_factors,
                                        const std::vector<int>& multiplicities,
                                        std::int64_t budget = kDefaultSearchBudget);

}  // namespace twconj
