#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pemark/error.hpp"
#include "pemark/permcode.hpp"

namespace pemark {

/// Bit sequence as 0/1 bytes, most significant bit first.
using BitVec = std::vector<std::uint8_t>;

inline BitVec bits_from_value(const BigUint& value, std::size_t length_bits) {
  BitVec bits(length_bits, 0);
  for (std::size_t i = 0; i < length_bits; ++i) {
    bits[length_bits - 1 - i] =
        static_cast<std::uint8_t>(boost::multiprecision::bit_test(value, i) ? 1 : 0);
  }
  return bits;
}

inline BigUint value_from_bits(const BitVec& bits) {
  BigUint value = 0;
  for (std::uint8_t b : bits) {
    value <<= 1;
    if (b) value |= 1;
  }
  return value;
}

/// A fixed-length binary watermark: L bits, most significant first, with
/// its integer value below 2^L. Leading zeros are significant, so the
/// exchange format is a hex string plus an explicit bit length.
class Watermark {
public:
  Watermark(BigUint value, std::size_t length_bits)
      : value_(std::move(value)), length_bits_(length_bits) {
    if (length_bits_ < 1) {
      raise(Errc::InvalidArgument, "watermark length must be at least 1 bit");
    }
    if (value_ < 0 || value_ >= pow2(length_bits_)) {
      raise(Errc::ValueTooLarge,
            "watermark value does not fit in " + std::to_string(length_bits_) +
                " bits");
    }
  }

  static Watermark from_hex(std::string_view hex, std::size_t length_bits) {
    if (hex.empty()) {
      raise(Errc::InvalidArgument, "empty watermark hex string");
    }
    BigUint value = 0;
    for (char c : hex) {
      int digit;
      if (c >= '0' && c <= '9') {
        digit = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        digit = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        digit = c - 'A' + 10;
      } else {
        raise(Errc::InvalidArgument,
              std::string("invalid hex digit '") + c + "' in watermark");
      }
      value = (value << 4) | digit;
    }
    return Watermark(std::move(value), length_bits);
  }

  const BigUint& value() const { return value_; }
  std::size_t length_bits() const { return length_bits_; }

  BitVec bits() const { return bits_from_value(value_, length_bits_); }

  /// ceil(L/4) hex digits, leading zeros included.
  std::string to_hex() const {
    const std::size_t digits = (length_bits_ + 3) / 4;
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(digits, '0');
    BigUint v = value_;
    for (std::size_t i = 0; i < digits && v != 0; ++i) {
      out[digits - 1 - i] = hex[static_cast<unsigned>(v & 0xF)];
      v >>= 4;
    }
    return out;
  }

  bool operator==(const Watermark&) const = default;

private:
  BigUint value_;
  std::size_t length_bits_;
};

inline std::string bits_to_hex(const BitVec& bits) {
  return Watermark(value_from_bits(bits), bits.empty() ? 1 : bits.size()).to_hex();
}

}  // namespace pemark
