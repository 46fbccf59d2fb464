#include "slee/exact.hpp"

#include <stdexcept>
#include <utility>

namespace slee {

BigNat BigNat::from_u128(unsigned __int128 v) {
  BigNat r;
  const std::uint64_t lo = static_cast<std::uint64_t>(v);
  const std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) {
    r.limbs_ = {lo, hi};
  } else if (lo != 0) {
    r.limbs_ = {lo};
  }
  return r;
}

std::uint64_t BigNat::to_u64() const {
  if (limbs_.size() > 1) throw std::overflow_error("BigNat does not fit in 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

BigNat& BigNat::operator+=(const BigNat& o) {
  const std::size_t n = std::max(limbs_.size(), o.limbs_.size());
  limbs_.resize(n, 0);
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned __int128 s = carry + limbs_[i];
    if (i < o.limbs_.size()) s += o.limbs_[i];
    limbs_[i] = static_cast<std::uint64_t>(s);
    carry = s >> 64;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
  return *this;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
  BigNat r;
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<std::uint64_t> out(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    const std::uint64_t ai = a.limbs_[i];
    if (ai == 0) continue;
    unsigned __int128 carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      unsigned __int128 cur =
          static_cast<unsigned __int128>(ai) * b.limbs_[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
    }
    for (std::size_t k = i + b.limbs_.size(); carry != 0; ++k) {
      unsigned __int128 cur = carry + out[k];
      out[k] = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
    }
  }
  r.limbs_ = std::move(out);
  r.trim();
  return r;
}

int BigNat::compare(const BigNat& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  }
  return 0;
}

long double BigNat::to_long_double() const {
  long double r = 0.0L;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    r = r * 18446744073709551616.0L + static_cast<long double>(limbs_[i]);
  }
  return r;
}

std::string BigNat::to_string() const {
  if (is_zero()) return "0";
  constexpr std::uint64_t chunk = 10000000000000000000ULL;  // 10^19
  std::vector<std::uint64_t> work = limbs_;
  std::vector<std::uint64_t> groups;
  while (!work.empty()) {
    unsigned __int128 rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 64) | work[i];
      work[i] = static_cast<std::uint64_t>(cur / chunk);
      rem = cur % chunk;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    groups.push_back(static_cast<std::uint64_t>(rem));
  }
  std::string s = std::to_string(groups.back());
  for (std::size_t i = groups.size() - 1; i-- > 0;) {
    std::string part = std::to_string(groups[i]);
    s += std::string(19 - part.size(), '0') + part;
  }
  return s;
}

}  // namespace slee
