#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pemark/error.hpp"

namespace pemark {

/// Arbitrary-precision non-negative integer. Watermark values and
/// factorials both outgrow 64 bits quickly (21! > 2^64).
using BigUint = boost::multiprecision::cpp_int;

inline BigUint factorial(std::size_t n) {
  BigUint f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned>(i);
  return f;
}

inline BigUint pow2(std::size_t bits) { return BigUint(1) << bits; }

/// Factorial-number-system digits a_1..a_{T-1} for a group of T elements.
/// Digit j weighs (T-j)! and ranges over 0..T-j; the final digit a_T is
/// implicitly zero. The T! codes are bijective with the permutations of
/// T elements.
struct LehmerCode {
  std::size_t group_size = 0;          // T
  std::vector<std::uint32_t> digits;   // a_1..a_{T-1}

  bool operator==(const LehmerCode&) const = default;
};

/// Successive division with remainder, most significant digit first:
/// value = sum of digits[j-1] * (T-j)! over j = 1..T-1.
inline LehmerCode factorial_decompose(const BigUint& value, std::size_t group_size) {
  if (group_size < 2) {
    raise(Errc::InvalidArgument, "group size must be at least 2");
  }
  if (value < 0) {
    raise(Errc::InvalidArgument, "value must be non-negative");
  }
  if (value >= factorial(group_size)) {
    raise(Errc::ValueTooLarge, "value " + value.str() + " is not below " +
                                   std::to_string(group_size) + "!");
  }
  LehmerCode code;
  code.group_size = group_size;
  code.digits.reserve(group_size - 1);
  BigUint rest = value;
  BigUint radix = factorial(group_size - 1);
  for (std::size_t j = 1; j < group_size; ++j) {
    BigUint digit = rest / radix;
    rest %= radix;
    code.digits.push_back(static_cast<std::uint32_t>(digit));
    if (j + 1 < group_size) radix /= static_cast<unsigned>(group_size - j);
  }
  return code;
}

/// Recomposes the integer from the factorial series.
inline BigUint code_to_integer(const LehmerCode& code) {
  if (code.group_size < 2 || code.digits.size() != code.group_size - 1) {
    raise(Errc::InvalidArgument, "code has wrong digit count for its group size");
  }
  BigUint value = 0;
  BigUint weight = factorial(code.group_size - 1);
  for (std::size_t j = 1; j < code.group_size; ++j) {
    std::uint32_t digit = code.digits[j - 1];
    if (digit > code.group_size - j) {
      raise(Errc::InvalidArgument, "digit out of factorial range");
    }
    value += weight * digit;
    if (j + 1 < code.group_size) weight /= static_cast<unsigned>(code.group_size - j);
  }
  return value;
}

/// Applies a Lehmer code to a strictly increasing item sequence: position j
/// takes the element at index a_j of the shrinking remainder, and the last
/// remaining element closes the permutation.
template <typename Item>
std::vector<Item> code_to_permutation(const LehmerCode& code,
                                      const std::vector<Item>& sorted_items) {
  if (sorted_items.size() != code.group_size) {
    raise(Errc::InvalidArgument, "item count does not match code group size");
  }
  if (code.digits.size() != code.group_size - 1) {
    raise(Errc::InvalidArgument, "code has wrong digit count for its group size");
  }
  for (std::size_t i = 1; i < sorted_items.size(); ++i) {
    if (!(sorted_items[i - 1] < sorted_items[i])) {
      raise(Errc::ItemsNotSortedOrNotDistinct,
            "items must be strictly increasing");
    }
  }
  std::vector<Item> remainder = sorted_items;
  std::vector<Item> out;
  out.reserve(sorted_items.size());
  for (std::uint32_t digit : code.digits) {
    if (digit >= remainder.size()) {
      raise(Errc::InvalidArgument, "digit out of factorial range");
    }
    out.push_back(std::move(remainder[digit]));
    remainder.erase(remainder.begin() + digit);
  }
  out.push_back(std::move(remainder.front()));
  return out;
}

/// Exact inverse of code_to_permutation: each digit is the index of the
/// observed item in the lexicographically sorted remainder.
template <typename Item>
LehmerCode permutation_to_code(const std::vector<Item>& observed) {
  if (observed.size() < 2) {
    raise(Errc::InvalidArgument, "need at least 2 items");
  }
  std::vector<Item> remainder = observed;
  std::sort(remainder.begin(), remainder.end());
  for (std::size_t i = 1; i < remainder.size(); ++i) {
    if (!(remainder[i - 1] < remainder[i])) {
      raise(Errc::DuplicateItems, "observed items contain duplicates");
    }
  }
  LehmerCode code;
  code.group_size = observed.size();
  code.digits.reserve(observed.size() - 1);
  for (std::size_t j = 0; j + 1 < observed.size(); ++j) {
    auto it = std::lower_bound(remainder.begin(), remainder.end(), observed[j]);
    code.digits.push_back(
        static_cast<std::uint32_t>(std::distance(remainder.begin(), it)));
    remainder.erase(it);
  }
  return code;
}

/// Least group size T with T! >= 2^L: the minimum number of keys whose
/// permutations cover every L-bit watermark value.
inline std::size_t min_threshold(std::size_t watermark_bits) {
  if (watermark_bits < 1) {
    raise(Errc::InvalidArgument, "watermark length must be at least 1 bit");
  }
  const BigUint needed = pow2(watermark_bits);
  BigUint fact = 2;
  std::size_t t = 2;
  while (fact < needed) {
    ++t;
    fact *= static_cast<unsigned>(t);
  }
  return t;
}

}  // namespace pemark
