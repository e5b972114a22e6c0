#pragma once

#include <memory>
#include <vector>

#include "twconj/twisted.hpp"

namespace twconj {

/// {a_1 ... a_n : a_i in sets[i]} with absorbing infinity. Empty input
/// yields the neutral {1}.
Spectrum spectrum_product(const std::vector<Spectrum>& sets);
/// n-fold product A^(n).
Spectrum nfold_product(const Spectrum& a, int n);
/// A^(1) u A^(2) u ... u A^(n).
Spectrum nfold_union(const Spectrum& a, int n);

/// Expression tree over spectrum literals; evaluation is pure set
/// algebra, so operand order never matters.
class SpectrumExpr {
 public:
  static SpectrumExpr lit(Spectrum s);
  static SpectrumExpr product(std::vector<SpectrumExpr> children);
  static SpectrumExpr nfold_union_product(SpectrumExpr child, int n);
  Spectrum eval() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct ContainmentReport {
  std::vector<Spectrum> factor_spectra;
  Spectrum product_of_spectra;  // formula side
  Spectrum product_spectrum;    // brute force on the product group
  bool contained = false;
  bool equal = false;
};

/// prod_i Spec_R(G_i) vs Spec_R(x_i G_i), brute force on the right.
ContainmentReport check_product_containment(const std::vector<GroupPtr>& factors,
                                            int order_cap = kDefaultOrderCap,
                                            std::int64_t budget = kDefaultSearchBudget);

struct WreathSpectrumReport {
  std::uint64_t aut_power_order = 0;    // |Aut(G^n)| by enumeration
  std::uint64_t wreath_order = 0;       // |Aut(G)|^n n!
  bool order_match = false;
  bool all_in_wreath_image = false;
  bool equality_case = false;           // Aut(G^n) = Aut(G) wr S_n
  Spectrum base_spectrum;               // Spec_R(G)
  Spectrum formula;                     // union of the i-fold products
  Spectrum brute;                       // Spec_R(G^n) by enumeration
  bool spectra_equal = false;
};

/// Tests Aut(G^n) = Aut(G) wr S_n by order count and elementwise
/// membership; in the equality case the n-fold union formula must match
/// the brute spectrum, otherwise both sets are reported.
WreathSpectrumReport check_wreath_spectrum_equality(const GroupPtr& g, int n,
                                                    int order_cap = kDefaultOrderCap,
                                                    std::int64_t budget = kDefaultSearchBudget);

}  // namespace twconj
