#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace affclass {

// Bit convention, used everywhere in this library:
//   * An n-variable Boolean function is stored as its 2^n output bits.
//     Bit i (0-based) is the function value on the input assignment whose
//     integer encoding is i.
//   * The rule number R is the whole table read as one integer, so bit i of
//     R equals bit i of the table. Human-facing positions are 1-based:
//     position p holds bit p-1.
//   * Binary strings are written most-significant-first: the character for
//     input 2^n - 1 comes first, the character for input 0 last.
//   * Hex strings are MSB-first lowercase nibbles of length 2^n / 4 (n >= 2).

// Packed bit vector of arbitrary length. Carries results that are not
// power-of-two sized, e.g. the carry transform output of 2^n + 1 bits.
class BitString {
 public:
  BitString() = default;
  BitString(std::uint64_t bit_size, std::vector<std::uint64_t> words);

  std::uint64_t size() const { return size_; }
  bool bit(std::uint64_t i) const;
  std::span<const std::uint64_t> words() const { return words_; }

  std::string to_binary() const;  // MSB-first
  // The bits read as an integer; throws if a bit at index >= 64 is set.
  std::uint64_t to_uint64() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class TruthTable {
 public:
  // The all-zero function of n variables.
  explicit TruthTable(int vars);

  static TruthTable from_words(int vars, std::vector<std::uint64_t> words);
  // Requires vars <= 6 so the rule fits one word; bits of `rule` above
  // 2^vars must be zero.
  static TruthTable from_rule(int vars, std::uint64_t rule);
  static TruthTable from_binary(std::string_view bits);        // MSB-first
  static TruthTable from_hex(int vars, std::string_view hex);  // vars >= 2

  int vars() const { return vars_; }
  std::uint64_t bit_size() const { return std::uint64_t{1} << vars_; }
  std::uint64_t word_count() const { return words_.size(); }
  std::span<const std::uint64_t> words() const { return words_; }

  bool bit(std::uint64_t input) const;
  std::uint64_t weight() const;  // number of ones

  // The rule number; only for tables that fit one word (vars <= 6).
  std::uint64_t rule() const;

  std::string to_binary() const;
  std::string to_hex() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
  // Orders by variable count, then by rule number.
  std::strong_ordering operator<=>(const TruthTable& other) const;

 private:
  TruthTable(int vars, std::vector<std::uint64_t> words, bool trusted);

  int vars_ = 0;
  std::vector<std::uint64_t> words_;
};

TruthTable operator~(const TruthTable& f);                       // complement
TruthTable operator^(const TruthTable& a, const TruthTable& b);  // bitwise xor
TruthTable operator&(const TruthTable& a, const TruthTable& b);  // bitwise and

inline TruthTable complement(const TruthTable& f) { return ~f; }

// (n+1)-variable function whose low half (inputs 0..2^n-1) is `low` and high
// half is `high`; as integers R = R(high) * 2^(2^n) + R(low).
TruthTable concat_high_low(const TruthTable& high, const TruthTable& low);

// concat_high_low(f, f): the (n+1)-variable function ignoring the new top
// variable.
TruthTable concat_self(const TruthTable& f);

// concat_high_low(~f, f): g(x, x_new) = f(x) xor x_new.
TruthTable concat_with_complement(const TruthTable& f);

std::uint64_t hamming_distance(const TruthTable& a, const TruthTable& b);

// Carry Value Transformation: the bitwise AND shifted one position toward the
// most-significant end with a zero appended at position 1, i.e. the carry
// string of bitwise addition. As integers, 2 * (R(a) AND R(b)). The result is
// one bit longer than the inputs.
BitString carry_value_transform(const TruthTable& a, const TruthTable& b);

}  // namespace affclass
