#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "affclass/truth_table.hpp"

namespace affclass {

// Algebraic normal form: XOR of monomials. The coefficient of the monomial
// with variable set u (a bit mask over the n inputs) is stored at bit u;
// mask 0 is the constant term.
class AnfPolynomial {
 public:
  AnfPolynomial(int vars, std::vector<std::uint64_t> coefficient_words);

  int vars() const { return vars_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool coefficient(std::uint64_t monomial_mask) const;
  bool constant_term() const { return words_[0] & 1; }
  // Largest variable-set size over nonzero coefficients; 0 for the zero
  // polynomial.
  int degree() const;

  friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;

 private:
  int vars_;
  std::vector<std::uint64_t> words_;
};

// The subset-XOR (Moebius) transform between a truth table and its ANF
// coefficients. The transform is an involution, so the same butterfly network
// runs in both directions.
AnfPolynomial to_anf(const TruthTable& f);
TruthTable from_anf(const AnfPolynomial& p);

bool is_affine(const TruthTable& f);  // ANF degree <= 1
bool is_linear(const TruthTable& f);  // affine with zero constant term

// f(x) = parity(mask AND x) XOR constant; the canonical identity of a class.
struct AffineSpec {
  int vars;
  std::uint64_t mask;  // bit j-1 selects variable x_j; mask < 2^vars
  bool constant;

  friend bool operator==(const AffineSpec&, const AffineSpec&) = default;
};

TruthTable affine_truth_table(const AffineSpec& spec);

// The spec of an affine table; throws std::invalid_argument if f is not
// affine.
AffineSpec affine_spec_of(const TruthTable& f);

}  // namespace affclass
