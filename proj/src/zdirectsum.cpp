#include "twconj/zdirectsum.hpp"

#include <stdexcept>

#include "twconj/errors.hpp"

namespace twconj {

FinSuppIntSeq::FinSuppIntSeq(std::map<int, std::int64_t> entries)
    : entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->first < 1) throw Error(ErrorKind::InvalidInput, "indices start at 1");
    it = it->second == 0 ? entries_.erase(it) : std::next(it);
  }
}

FinSuppIntSeq FinSuppIntSeq::basis(int index) {
  FinSuppIntSeq s;
  s.set(index, 1);
  return s;
}

std::int64_t FinSuppIntSeq::at(int index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? 0 : it->second;
}

void FinSuppIntSeq::set(int index, std::int64_t value) {
  if (index < 1) throw Error(ErrorKind::InvalidInput, "indices start at 1");
  if (value == 0)
    entries_.erase(index);
  else
    entries_[index] = value;
}

int FinSuppIntSeq::max_index() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

FinSuppIntSeq FinSuppIntSeq::operator+(const FinSuppIntSeq& o) const {
  FinSuppIntSeq r = *this;
  for (const auto& [i, v] : o.entries_) r.set(i, r.at(i) + v);
  return r;
}

FinSuppIntSeq FinSuppIntSeq::operator-(const FinSuppIntSeq& o) const {
  FinSuppIntSeq r = *this;
  for (const auto& [i, v] : o.entries_) r.set(i, r.at(i) - v);
  return r;
}

std::string FinSuppIntSeq::str() const {
  std::string s = "(";
  int last = max_index();
  for (int i = 1; i <= last; ++i) {
    if (i > 1) s += ", ";
    s += std::to_string(at(i));
  }
  if (last > 0) s += ", ";
  return s + "0, ...)";
}

FinSuppIntSeq phi_example(const FinSuppIntSeq& a) {
  FinSuppIntSeq b;
  int last = a.max_index() + 2;
  for (int k = 1; 2 * k - 1 <= last; ++k) {
    b.set(2 * k - 1, a.at(2 * k - 1) + a.at(2 * k) + a.at(2 * k + 1));
    b.set(2 * k, a.at(2 * k) + a.at(2 * k + 1));
  }
  return b;
}

FinSuppIntSeq psi_example(const FinSuppIntSeq& a) {
  FinSuppIntSeq b;
  int last = a.max_index() + 2;
  for (int k = 1; 2 * k - 1 <= last; ++k) {
    b.set(2 * k - 1, a.at(2 * k - 1) - a.at(2 * k));
    b.set(2 * k, a.at(2 * k) - a.at(2 * k + 1) + a.at(2 * k + 2));
  }
  return b;
}

FinSuppIntSeq phi_minus_id(const FinSuppIntSeq& a) {
  FinSuppIntSeq b;
  int last = a.max_index() + 2;
  for (int k = 1; 2 * k - 1 <= last; ++k) {
    b.set(2 * k - 1, a.at(2 * k) + a.at(2 * k + 1));
    b.set(2 * k, a.at(2 * k + 1));
  }
  return b;
}

FinSuppIntSeq solve_phi_minus_id(const FinSuppIntSeq& t) {
  // Even targets give the odd entries (a_{2k+1} = t_{2k}), odd targets
  // then give the even ones (a_{2k} = t_{2k-1} - a_{2k+1}); a_1 is free
  // and pinned to 0.
  FinSuppIntSeq a;
  int last = t.max_index() + 2;
  for (int k = 1; 2 * k <= last; ++k) a.set(2 * k + 1, t.at(2 * k));
  for (int k = 1; 2 * k - 1 <= last; ++k) a.set(2 * k, t.at(2 * k - 1) - a.at(2 * k + 1));
  if (!(phi_minus_id(a) == t))
    throw std::logic_error("solver failed to reproduce the target");
  return a;
}

}  // namespace twconj
