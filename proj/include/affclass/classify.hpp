#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affclass/anf.hpp"
#include "affclass/truth_table.hpp"

namespace affclass {

// The n+1 truth-table bit positions (1-based, ascending) whose values are
// constant across each equivalence class. They sit at the inputs
// 0, 10...0, 110...0, ..., 11...1 (prefixes of ones).
struct FixedPositions {
  int vars;
  std::vector<std::uint64_t> positions;

  friend bool operator==(const FixedPositions&,
                         const FixedPositions&) = default;
};

// Computed by the O(n) countdown loop: start at 2^n and subtract 2^i at step
// i, collecting every intermediate value; returned sorted ascending.
FixedPositions fixed_positions(int vars);

// Independent route: the running prefix sums 2^0, 2^0 + 2^(n-1),
// 2^0 + 2^(n-1) + 2^(n-2), ..., 2^n. Must equal fixed_positions().
std::vector<std::uint64_t> fixed_positions_closed_form(int vars);

// The remaining 2^n - (n+1) positions, ascending; free within a class.
std::vector<std::uint64_t> changed_positions(int vars);

// Independent route: the open gaps between consecutive fixed positions.
std::vector<std::uint64_t> changed_positions_closed_form(int vars);

// A function's bits at the fixed positions, in ascending position order.
// Equal signatures mean the same class. to_string() lists entry 0 (the
// smallest position) first.
class Signature {
 public:
  Signature(int vars, std::uint64_t bits);

  int vars() const { return vars_; }
  int size() const { return vars_ + 1; }
  bool bit(int j) const;
  std::uint64_t value() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int vars_;
  std::uint64_t bits_;
};

Signature signature(const TruthTable& f);

// Same class, i.e. equal signatures. An equivalence relation.
bool equivalent(const TruthTable& f, const TruthTable& g);

// 1-based class label in the canonical order: class m+1 holds the linear
// function with coefficient mask m, and the complement of class k is class
// k + 2^n.
struct ClassIndex {
  int vars;
  std::uint64_t index;

  friend bool operator==(const ClassIndex&, const ClassIndex&) = default;
};

ClassIndex make_class_index(int vars, std::uint64_t index);  // validates
ClassIndex complement_partner(ClassIndex k);

// O(n) classification: decode the constant from the signature's first entry
// and one coefficient from each pair of adjacent entries.
ClassIndex classify(const TruthTable& f);
// Same, for single-word tables given as rule numbers (vars <= 6).
std::uint64_t classify_rule(int vars, std::uint64_t rule);

// Reference route: compare the signature against all 2^(n+1) affine
// signatures. Kept independent of classify() so the two can check each other.
ClassIndex classify_by_signature_match(const TruthTable& f);

// The affine spec / truth table identified with a class.
AffineSpec class_affine_spec(ClassIndex k);
TruthTable affine_representative(ClassIndex k);

// The unique class member whose bits at all changed positions are zero; the
// additive translate that maps class 1 onto class k.
TruthTable base_point(ClassIndex k);

// log2 of the class size: 2^n - (n+1) free bits per member.
int class_size_log2(int vars);
// The class size as an integer; throws std::overflow_error if it does not
// fit 64 bits (vars >= 7).
std::uint64_t class_size(int vars);

// The j-th member of class k in ascending rule-number order: the base point
// plus the bits of j spread over the changed positions.
TruthTable class_member(ClassIndex k, std::uint64_t j);

// All members, ascending; requires vars <= limits().max_materialize_vars.
std::vector<TruthTable> class_members(ClassIndex k);

// Ascending member rule numbers; requires vars <= 5 in addition to the
// materialization cap so every rule fits a word.
std::vector<std::uint64_t> class_member_rules(ClassIndex k);

// MSB-first pattern over {0,1,-}: fixed positions carry the class signature,
// changed positions are don't-cares. Its expansions are exactly the class.
std::string generator_pattern(ClassIndex k);

// Expands every don't-care assignment of a pattern, ascending by rule
// number; the checking route for generator_pattern().
std::vector<TruthTable> expand_generator(const std::string& pattern);

}  // namespace affclass
