#include "twconj/ext_nat.hpp"

#include <algorithm>

namespace twconj {

Spectrum::Spectrum(std::vector<ExtNat> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

void Spectrum::insert(const ExtNat& v) {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) values_.insert(it, v);
}

bool Spectrum::contains(const ExtNat& v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

bool Spectrum::contains_all(const Spectrum& other) const {
  return std::all_of(other.values_.begin(), other.values_.end(),
                     [this](const ExtNat& v) { return contains(v); });
}

std::string Spectrum::str() const {
  std::string s = "{";
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ", ";
    s += values_[i].str();
  }
  return s + "}";
}

}  // namespace twconj
