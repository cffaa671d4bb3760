#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glc/errors.hpp"

namespace glc {

// Element of the grading group Z^r. Compared lexicographically so it can key
// ordered containers; that order is also the canonical output order.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<long long> coords) : c_(std::move(coords)) {}

  static Multidegree zero(std::size_t r) { return Multidegree(std::vector<long long>(r, 0)); }

  std::size_t rank() const { return c_.size(); }
  long long operator[](std::size_t i) const { return c_[i]; }
  const std::vector<long long>& coords() const { return c_; }
  std::vector<long long>& coords() { return c_; }

  Multidegree operator+(const Multidegree& o) const {
    check_rank(o);
    std::vector<long long> v(c_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
    return Multidegree(std::move(v));
  }

  Multidegree operator-(const Multidegree& o) const {
    check_rank(o);
    std::vector<long long> v(c_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.c_[i];
    return Multidegree(std::move(v));
  }

  Multidegree operator-() const {
    std::vector<long long> v(c_);
    for (auto& x : v) x = -x;
    return Multidegree(std::move(v));
  }

  bool operator==(const Multidegree& o) const { return c_ == o.c_; }
  bool operator!=(const Multidegree& o) const { return c_ != o.c_; }
  bool operator<(const Multidegree& o) const { return c_ < o.c_; }

  bool is_zero() const {
    for (auto x : c_)
      if (x != 0) return false;
    return true;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    s += ")";
    return s;
  }

 private:
  void check_rank(const Multidegree& o) const {
    if (c_.size() != o.c_.size()) throw Error("multidegree rank mismatch");
  }

  std::vector<long long> c_;
};

}  // namespace glc
