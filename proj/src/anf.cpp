#include "affclass/anf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "affclass/kernels/kernels.hpp"

namespace affclass {
namespace {

// In-place subset-XOR transform over a packed table of 2^vars bits.
void butterfly_transform(std::vector<std::uint64_t>& words, int vars) {
  const auto& k = kernels::active();
  k.xor_butterfly(words.data(), words.size(), std::min(vars, 6));
  // Stages 6..vars-1 pair up whole words: word w with bit (j-6) of its index
  // set absorbs the word at distance 2^(j-6) below it.
  for (int j = 6; j < vars; ++j) {
    std::size_t stride = std::size_t{1} << (j - 6);
    for (std::size_t block = 0; block < words.size(); block += 2 * stride) {
      k.xor_into(&words[block + stride], &words[block], stride);
    }
  }
}

// Truth tables of the single variables x_j restricted to one word.
constexpr std::uint64_t kVarPattern[6] = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull,
};

}  // namespace

AnfPolynomial::AnfPolynomial(int vars, std::vector<std::uint64_t> words)
    : vars_(vars), words_(std::move(words)) {
  std::uint64_t need = ((std::uint64_t{1} << vars) + 63) / 64;
  if (vars < 1 || words_.size() != need) {
    throw std::invalid_argument("coefficient vector has wrong size");
  }
}

bool AnfPolynomial::coefficient(std::uint64_t monomial_mask) const {
  if (monomial_mask >> vars_ != 0) {
    throw std::out_of_range("monomial mask out of range");
  }
  return (words_[monomial_mask / 64] >> (monomial_mask % 64)) & 1;
}

int AnfPolynomial::degree() const {
  int best = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t v = words_[w];
    while (v != 0) {
      std::uint64_t bit = std::countr_zero(v);
      v &= v - 1;
      best = std::max(best, std::popcount(w * 64 + bit));
    }
  }
  return best;
}

AnfPolynomial to_anf(const TruthTable& f) {
  std::vector<std::uint64_t> words(f.words().begin(), f.words().end());
  butterfly_transform(words, f.vars());
  return AnfPolynomial(f.vars(), std::move(words));
}

TruthTable from_anf(const AnfPolynomial& p) {
  std::vector<std::uint64_t> words(p.words().begin(), p.words().end());
  butterfly_transform(words, p.vars());
  return TruthTable::from_words(p.vars(), std::move(words));
}

namespace {

// Degree <= 1 means every set coefficient mask is 0 or a single variable.
bool degree_at_most_one(const AnfPolynomial& p, int vars) {
  auto words = p.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t allowed = 0;
    if (w == 0) {
      allowed = 1;  // constant term
      for (int j = 0; j < std::min(vars, 6); ++j) {
        allowed |= std::uint64_t{1} << (std::uint64_t{1} << j);
      }
    } else if (std::has_single_bit(std::uint64_t(w))) {
      allowed = 1;  // the single-variable monomial 2^j lands at word 2^(j-6)
    }
    if ((words[w] & ~allowed) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_affine(const TruthTable& f) {
  return degree_at_most_one(to_anf(f), f.vars());
}

bool is_linear(const TruthTable& f) {
  AnfPolynomial p = to_anf(f);
  return !p.constant_term() && degree_at_most_one(p, f.vars());
}

TruthTable affine_truth_table(const AffineSpec& spec) {
  TruthTable probe(spec.vars);  // validates the variable count
  if (spec.vars < 64 && (spec.mask >> spec.vars) != 0) {
    throw std::invalid_argument("coefficient mask out of range");
  }
  std::vector<std::uint64_t> words(probe.word_count(), 0);
  for (int j = 0; j < spec.vars; ++j) {
    if (((spec.mask >> j) & 1) == 0) continue;
    if (j < 6) {
      for (auto& w : words) w ^= kVarPattern[j];
    } else {
      // Bit i of the table is bit j of i; whole words flip by word index.
      std::uint64_t sel = std::uint64_t{1} << (j - 6);
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (w & sel) words[w] = ~words[w];
      }
    }
  }
  if (spec.constant) {
    for (auto& w : words) w = ~w;
  }
  return TruthTable::from_words(spec.vars, std::move(words));
}

AffineSpec affine_spec_of(const TruthTable& f) {
  AnfPolynomial p = to_anf(f);
  if (p.degree() > 1) throw std::invalid_argument("function is not affine");
  std::uint64_t mask = 0;
  for (int j = 0; j < f.vars(); ++j) {
    if (p.coefficient(std::uint64_t{1} << j)) mask |= std::uint64_t{1} << j;
  }
  return AffineSpec{f.vars(), mask, p.constant_term()};
}

}  // namespace affclass
