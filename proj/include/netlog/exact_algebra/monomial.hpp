#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "netlog/errors.hpp"

namespace netlog {

inline constexpr int kMaxVars = 12;

// Exponent vector with cached total degree and support mask. Variables beyond
// the ring's count stay zero, so comparisons never need the ring.
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  int operator[](int i) const { return e_[i]; }
  int degree() const { return static_cast<int>(deg_); }
  std::uint32_t mask() const { return mask_; }
  bool is_one() const { return deg_ == 0; }

  void set(int i, int power) {
    if (i < 0 || i >= kMaxVars) throw InputError("variable index out of range");
    if (power < 0 || power > 60000) throw InputError("exponent out of range");
    deg_ = deg_ - e_[i] + power;
    e_[i] = static_cast<std::uint16_t>(power);
    if (power) mask_ |= (1u << i);
    else mask_ &= ~(1u << i);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.e_[i]) + b.e_[i];
      if (s > 60000) throw CapExceeded("exponent overflow");
      r.e_[i] = static_cast<std::uint16_t>(s);
    }
    r.deg_ = a.deg_ + b.deg_;
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  // a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
      if (r.e_[i]) r.mask_ |= (1u << i);
    }
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  bool divides(const Monomial& b) const {
    if (deg_ > b.deg_ || (mask_ & ~b.mask_)) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] > b.e_[i]) return false;
    return true;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
      r.deg_ += r.e_[i];
    }
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) { return (a.mask_ & b.mask_) == 0; }

  // Graded reverse lexicographic comparison: >0 if a > b.
  static int compare(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ > b.deg_ ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? 1 : -1;
    return 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e_) h = (h ^ v) * 1099511628211ull;
    return h;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
  std::uint32_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Strict "greater in grevlex" ordering, usable with std::sort for descending order.
struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) > 0; }
};

}  // namespace netlog
