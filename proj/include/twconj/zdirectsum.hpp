#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace twconj {

/// Finitely supported integer sequence indexed from 1; zeros are never
/// stored.
class FinSuppIntSeq {
 public:
  FinSuppIntSeq() = default;
  explicit FinSuppIntSeq(std::map<int, std::int64_t> entries);

  static FinSuppIntSeq basis(int index);  // e_index

  std::int64_t at(int index) const;
  void set(int index, std::int64_t value);  // erases on zero
  const std::map<int, std::int64_t>& entries() const { return entries_; }
  int max_index() const;  // 0 for the zero sequence
  bool is_zero() const { return entries_.empty(); }

  FinSuppIntSeq operator+(const FinSuppIntSeq& o) const;
  FinSuppIntSeq operator-(const FinSuppIntSeq& o) const;
  bool operator==(const FinSuppIntSeq& o) const { return entries_ == o.entries_; }

  std::string str() const;

 private:
  std::map<int, std::int64_t> entries_;
};

/// b_{2k-1} = a_{2k-1} + a_{2k} + a_{2k+1}, b_{2k} = a_{2k} + a_{2k+1}.
FinSuppIntSeq phi_example(const FinSuppIntSeq& a);
/// Inverse of phi_example: b_{2k-1} = a_{2k-1} - a_{2k},
/// b_{2k} = a_{2k} - a_{2k+1} + a_{2k+2}.
FinSuppIntSeq psi_example(const FinSuppIntSeq& a);
/// (phi - id): b_{2k-1} = a_{2k} + a_{2k+1}, b_{2k} = a_{2k+1}.
FinSuppIntSeq phi_minus_id(const FinSuppIntSeq& a);
/// Solves (phi - id)(a) = t by back-substitution with the free choice
/// a_1 = 0, then re-applies phi - id to verify.
FinSuppIntSeq solve_phi_minus_id(const FinSuppIntSeq& t);

}  // namespace twconj
