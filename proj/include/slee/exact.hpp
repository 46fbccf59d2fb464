// exact.hpp -- arbitrary-precision unsigned integers and the Eigen scalar glue
// used for exact walk counting and spectral moments.
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace slee {

// Non-negative integer of unbounded width. Little-endian 64-bit limbs, no
// trailing zero limbs; an empty limb vector means zero. Supports exactly the
// operations the moment/walk pipeline needs: add, multiply, compare, and
// conversion to long double / decimal string.
class BigNat {
public:
  BigNat() = default;
  BigNat(unsigned long long v) {
    if (v != 0) limbs_.push_back(v);
  }
  static BigNat from_u128(unsigned __int128 v);

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 1; }
  std::uint64_t to_u64() const;  // throws std::overflow_error if too wide

  BigNat& operator+=(const BigNat& o);
  BigNat& operator*=(const BigNat& o) {
    *this = *this * o;
    return *this;
  }
  friend BigNat operator+(BigNat a, const BigNat& b) {
    a += b;
    return a;
  }
  friend BigNat operator*(const BigNat& a, const BigNat& b);

  // three-way: -1, 0, +1
  int compare(const BigNat& o) const;
  friend bool operator==(const BigNat& a, const BigNat& b) { return a.compare(b) == 0; }
  friend bool operator!=(const BigNat& a, const BigNat& b) { return a.compare(b) != 0; }
  friend bool operator<(const BigNat& a, const BigNat& b) { return a.compare(b) < 0; }
  friend bool operator<=(const BigNat& a, const BigNat& b) { return a.compare(b) <= 0; }
  friend bool operator>(const BigNat& a, const BigNat& b) { return a.compare(b) > 0; }
  friend bool operator>=(const BigNat& a, const BigNat& b) { return a.compare(b) >= 0; }

  long double to_long_double() const;
  std::string to_string() const;  // decimal

private:
  std::vector<std::uint64_t> limbs_;
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }
};

inline std::ostream& operator<<(std::ostream& os, const BigNat& v) {
  return os << v.to_string();
}

template <class Scalar>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ExactMatrix = SquareMatrix<BigNat>;

}  // namespace slee

// Scalar traits so Eigen matrices can carry BigNat / unsigned __int128 entries.
namespace Eigen {

template <>
struct NumTraits<slee::BigNat> {
  typedef slee::BigNat Real;
  typedef slee::BigNat NonInteger;
  typedef slee::BigNat Literal;
  typedef slee::BigNat Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 6,
    MulCost = 12,
  };
  static inline slee::BigNat epsilon() { return slee::BigNat(); }
  static inline slee::BigNat dummy_precision() { return slee::BigNat(); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<unsigned __int128> {
  typedef unsigned __int128 Real;
  typedef unsigned __int128 NonInteger;
  typedef unsigned __int128 Literal;
  typedef unsigned __int128 Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static inline unsigned __int128 epsilon() { return 0; }
  static inline unsigned __int128 dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
