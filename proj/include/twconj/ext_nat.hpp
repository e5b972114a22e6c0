#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twconj {

/// Natural number extended with an absorbing infinity: a * inf = inf for
/// every a (including 0), and any sum with an infinite term is infinite.
class ExtNat {
 public:
  ExtNat() : value_(0), infinite_(false) {}
  ExtNat(std::uint64_t v) : value_(v), infinite_(false) {}  // NOLINT(google-explicit-constructor)
  static ExtNat infinity() {
    ExtNat n;
    n.infinite_ = true;
    return n;
  }

  bool is_infinite() const { return infinite_; }
  std::uint64_t value() const { return value_; }

  ExtNat operator*(const ExtNat& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return ExtNat(value_ * o.value_);
  }
  ExtNat operator+(const ExtNat& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return ExtNat(value_ + o.value_);
  }

  bool operator==(const ExtNat& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  bool operator!=(const ExtNat& o) const { return !(*this == o); }
  /// Finite values in natural order, infinity last.
  bool operator<(const ExtNat& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return value_ < o.value_;
  }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  std::uint64_t value_;
  bool infinite_;
};

/// Sorted deduplicated set of ExtNat values, infinity ordered last.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<ExtNat> values);

  void insert(const ExtNat& v);
  bool contains(const ExtNat& v) const;
  bool contains_all(const Spectrum& other) const;
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<ExtNat>& values() const { return values_; }

  bool operator==(const Spectrum& o) const { return values_ == o.values_; }

  /// Renders as "{1, 3, 9}" with "inf" for infinity.
  std::string str() const;

 private:
  std::vector<ExtNat> values_;
};

}  // namespace twconj
