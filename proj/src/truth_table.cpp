#include "affclass/truth_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "affclass/config.hpp"
#include "affclass/kernels/kernels.hpp"

namespace affclass {

Limits& limits() {
  static Limits instance;
  return instance;
}

namespace {

std::uint64_t words_for_bits(std::uint64_t bits) { return (bits + 63) / 64; }

void check_vars(int vars) {
  if (vars < 1) throw std::invalid_argument("variable count must be >= 1");
  if (vars > limits().max_table_vars) {
    throw std::invalid_argument("variable count " + std::to_string(vars) +
                                " exceeds table cap " +
                                std::to_string(limits().max_table_vars));
  }
}

void check_same_vars(const TruthTable& a, const TruthTable& b) {
  if (a.vars() != b.vars()) {
    throw std::invalid_argument("variable counts differ: " +
                                std::to_string(a.vars()) + " vs " +
                                std::to_string(b.vars()));
  }
}

// Zeroes bits at index >= bit_size in the last word.
void mask_tail(std::vector<std::uint64_t>& words, std::uint64_t bit_size) {
  if (words.empty()) return;
  std::uint64_t used = bit_size % 64;
  if (used != 0) words.back() &= (std::uint64_t{1} << used) - 1;
}

}  // namespace

// ---------------------------------------------------------------- BitString

BitString::BitString(std::uint64_t bit_size, std::vector<std::uint64_t> words)
    : size_(bit_size), words_(std::move(words)) {
  if (words_.size() != words_for_bits(size_)) {
    throw std::invalid_argument("word count does not match bit size");
  }
  mask_tail(words_, size_);
}

bool BitString::bit(std::uint64_t i) const {
  if (i >= size_) throw std::out_of_range("bit index out of range");
  return (words_[i / 64] >> (i % 64)) & 1;
}

std::string BitString::to_binary() const {
  std::string s(size_, '0');
  for (std::uint64_t i = 0; i < size_; ++i) {
    if (bit(i)) s[size_ - 1 - i] = '1';
  }
  return s;
}

std::uint64_t BitString::to_uint64() const {
  for (std::size_t w = 1; w < words_.size(); ++w) {
    if (words_[w] != 0) throw std::overflow_error("value exceeds 64 bits");
  }
  return words_.empty() ? 0 : words_[0];
}

// --------------------------------------------------------------- TruthTable

TruthTable::TruthTable(int vars) {
  check_vars(vars);
  vars_ = vars;
  words_.assign(words_for_bits(bit_size()), 0);
}

TruthTable::TruthTable(int vars, std::vector<std::uint64_t> words, bool)
    : vars_(vars), words_(std::move(words)) {}

TruthTable TruthTable::from_words(int vars, std::vector<std::uint64_t> words) {
  check_vars(vars);
  std::uint64_t need = words_for_bits(std::uint64_t{1} << vars);
  if (words.size() != need) {
    throw std::invalid_argument("expected " + std::to_string(need) +
                                " words, got " + std::to_string(words.size()));
  }
  mask_tail(words, std::uint64_t{1} << vars);
  return TruthTable(vars, std::move(words), true);
}

TruthTable TruthTable::from_rule(int vars, std::uint64_t rule) {
  check_vars(vars);
  if (vars < 6 && (rule >> (std::uint64_t{1} << vars)) != 0) {
    throw std::invalid_argument("rule number does not fit in " +
                                std::to_string(std::uint64_t{1} << vars) +
                                " bits");
  }
  if (vars > 6) {
    throw std::invalid_argument(
        "rule numbers are limited to tables of at most 6 variables");
  }
  return TruthTable(vars, {rule}, true);
}

TruthTable TruthTable::from_binary(std::string_view bits) {
  std::uint64_t len = bits.size();
  if (len < 2 || (len & (len - 1)) != 0) {
    throw std::invalid_argument("binary string length must be a power of two");
  }
  int vars = std::countr_zero(len);
  check_vars(vars);
  std::vector<std::uint64_t> words(words_for_bits(len), 0);
  for (std::uint64_t i = 0; i < len; ++i) {
    char c = bits[len - 1 - i];
    if (c == '1') {
      words[i / 64] |= std::uint64_t{1} << (i % 64);
    } else if (c != '0') {
      throw std::invalid_argument("binary string may contain only 0 and 1");
    }
  }
  return TruthTable(vars, std::move(words), true);
}

TruthTable TruthTable::from_hex(int vars, std::string_view hex) {
  check_vars(vars);
  if (vars < 2) {
    throw std::invalid_argument("hex form requires at least 2 variables");
  }
  std::uint64_t nibbles = (std::uint64_t{1} << vars) / 4;
  if (hex.size() != nibbles) {
    throw std::invalid_argument("expected " + std::to_string(nibbles) +
                                " hex digits, got " +
                                std::to_string(hex.size()));
  }
  std::vector<std::uint64_t> words(words_for_bits(std::uint64_t{1} << vars), 0);
  for (std::uint64_t i = 0; i < nibbles; ++i) {
    char c = hex[nibbles - 1 - i];  // lowest nibble is written last
    std::uint64_t v;
    if (c >= '0' && c <= '9') {
      v = std::uint64_t(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = std::uint64_t(c - 'a') + 10;
    } else if (c >= 'A' && c <= 'F') {
      v = std::uint64_t(c - 'A') + 10;
    } else {
      throw std::invalid_argument("invalid hex digit");
    }
    words[i / 16] |= v << (4 * (i % 16));
  }
  return TruthTable(vars, std::move(words), true);
}

bool TruthTable::bit(std::uint64_t input) const {
  if (input >= bit_size()) throw std::out_of_range("input out of range");
  return (words_[input / 64] >> (input % 64)) & 1;
}

std::uint64_t TruthTable::weight() const {
  return kernels::active().popcount(words_.data(), words_.size());
}

std::uint64_t TruthTable::rule() const {
  if (vars_ > 6) {
    throw std::invalid_argument(
        "rule number exceeds 64 bits; use to_hex or to_binary");
  }
  return words_[0];
}

std::string TruthTable::to_binary() const {
  std::uint64_t len = bit_size();
  std::string s(len, '0');
  for (std::uint64_t i = 0; i < len; ++i) {
    if (bit(i)) s[len - 1 - i] = '1';
  }
  return s;
}

std::string TruthTable::to_hex() const {
  if (vars_ < 2) {
    throw std::invalid_argument("hex form requires at least 2 variables");
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::uint64_t nibbles = bit_size() / 4;
  std::string s(nibbles, '0');
  for (std::uint64_t i = 0; i < nibbles; ++i) {
    std::uint64_t v = (words_[i / 16] >> (4 * (i % 16))) & 0xf;
    s[nibbles - 1 - i] = digits[v];
  }
  return s;
}

std::strong_ordering TruthTable::operator<=>(const TruthTable& other) const {
  if (auto c = vars_ <=> other.vars_; c != 0) return c;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

TruthTable operator~(const TruthTable& f) {
  std::vector<std::uint64_t> out(f.word_count());
  kernels::active().bit_not(out.data(), f.words().data(), out.size());
  return TruthTable::from_words(f.vars(), std::move(out));
}

TruthTable operator^(const TruthTable& a, const TruthTable& b) {
  check_same_vars(a, b);
  std::vector<std::uint64_t> out(a.word_count());
  kernels::active().bit_xor(out.data(), a.words().data(), b.words().data(),
                            out.size());
  return TruthTable::from_words(a.vars(), std::move(out));
}

TruthTable operator&(const TruthTable& a, const TruthTable& b) {
  check_same_vars(a, b);
  std::vector<std::uint64_t> out(a.word_count());
  kernels::active().bit_and(out.data(), a.words().data(), b.words().data(),
                            out.size());
  return TruthTable::from_words(a.vars(), std::move(out));
}

TruthTable concat_high_low(const TruthTable& high, const TruthTable& low) {
  check_same_vars(high, low);
  int vars = low.vars();
  check_vars(vars + 1);
  std::uint64_t half = std::uint64_t{1} << vars;
  std::vector<std::uint64_t> out(words_for_bits(half * 2), 0);
  if (half < 64) {
    out[0] = low.words()[0] | (high.words()[0] << half);
  } else {
    std::copy(low.words().begin(), low.words().end(), out.begin());
    std::copy(high.words().begin(), high.words().end(),
              out.begin() + std::ptrdiff_t(half / 64));
  }
  return TruthTable::from_words(vars + 1, std::move(out));
}

TruthTable concat_self(const TruthTable& f) { return concat_high_low(f, f); }

TruthTable concat_with_complement(const TruthTable& f) {
  return concat_high_low(~f, f);
}

std::uint64_t hamming_distance(const TruthTable& a, const TruthTable& b) {
  check_same_vars(a, b);
  return kernels::active().popcount_xor(a.words().data(), b.words().data(),
                                        a.word_count());
}

BitString carry_value_transform(const TruthTable& a, const TruthTable& b) {
  check_same_vars(a, b);
  std::size_t in_words = a.word_count();
  std::vector<std::uint64_t> conj(in_words);
  kernels::active().bit_and(conj.data(), a.words().data(), b.words().data(),
                            in_words);
  // Shift left by one bit across words; the output is 2^n + 1 bits.
  std::uint64_t out_bits = a.bit_size() + 1;
  std::vector<std::uint64_t> out(words_for_bits(out_bits), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < in_words; ++i) {
    out[i] = (conj[i] << 1) | carry;
    carry = conj[i] >> 63;
  }
  if (out.size() > in_words) out[in_words] = carry;
  return BitString(out_bits, std::move(out));
}

}  // namespace affclass
