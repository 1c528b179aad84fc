#include "affclass/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "affclass/config.hpp"

namespace affclass {
namespace {

void check_vars_arith(int vars) {
  if (vars < 1) throw std::invalid_argument("variable count must be >= 1");
  if (vars > 62) throw std::invalid_argument("variable count too large");
}

void check_materialize(int vars, const char* what) {
  if (vars > limits().max_materialize_vars) {
    throw std::invalid_argument(
        std::string(what) + " requires n <= " +
        std::to_string(limits().max_materialize_vars) +
        " (materialization cap); raise the cap or stream instead");
  }
}

// Input index (0-based) of the j-th fixed position: the length-j prefix of
// ones, 1...10...0.
std::uint64_t fixed_input(int vars, int j) {
  if (j == 0) return 0;
  std::uint64_t ones = (std::uint64_t{1} << j) - 1;
  return ones << (vars - j);
}

}  // namespace

FixedPositions fixed_positions(int vars) {
  check_vars_arith(vars);
  std::vector<std::uint64_t> out;
  out.reserve(vars + 1);
  std::uint64_t x = std::uint64_t{1} << vars;
  for (int i = 0; i <= vars; ++i) {
    out.push_back(x);
    x -= std::uint64_t{1} << i;
  }
  std::sort(out.begin(), out.end());
  return FixedPositions{vars, std::move(out)};
}

std::vector<std::uint64_t> fixed_positions_closed_form(int vars) {
  check_vars_arith(vars);
  std::vector<std::uint64_t> out;
  out.reserve(vars + 1);
  std::uint64_t sum = 1;
  out.push_back(sum);
  for (int i = 1; i <= vars; ++i) {
    sum += std::uint64_t{1} << (vars - i);
    out.push_back(sum);
  }
  return out;
}

std::vector<std::uint64_t> changed_positions(int vars) {
  FixedPositions fixed = fixed_positions(vars);
  std::vector<std::uint64_t> out;
  std::uint64_t next = 1;
  for (std::uint64_t p : fixed.positions) {
    for (; next < p; ++next) out.push_back(next);
    next = p + 1;
  }
  return out;
}

std::vector<std::uint64_t> changed_positions_closed_form(int vars) {
  check_vars_arith(vars);
  // The gap above the j-th fixed position holds 2^(n-1-j) - 1 positions.
  std::vector<std::uint64_t> out;
  std::uint64_t anchor = 1;
  for (int j = 0; j < vars; ++j) {
    std::uint64_t gap = (std::uint64_t{1} << (vars - 1 - j)) - 1;
    for (std::uint64_t i = 1; i <= gap; ++i) out.push_back(anchor + i);
    anchor += std::uint64_t{1} << (vars - 1 - j);
  }
  return out;
}

Signature::Signature(int vars, std::uint64_t bits) : vars_(vars), bits_(bits) {
  check_vars_arith(vars);
  if (vars <= 62 && (bits >> (vars + 1)) != 0) {
    throw std::invalid_argument("signature has too many bits");
  }
}

bool Signature::bit(int j) const {
  if (j < 0 || j > vars_) throw std::out_of_range("signature entry");
  return (bits_ >> j) & 1;
}

std::string Signature::to_string() const {
  std::string s(size(), '0');
  for (int j = 0; j <= vars_; ++j) {
    if (bit(j)) s[j] = '1';
  }
  return s;
}

Signature signature(const TruthTable& f) {
  std::uint64_t bits = 0;
  for (int j = 0; j <= f.vars(); ++j) {
    if (f.bit(fixed_input(f.vars(), j))) bits |= std::uint64_t{1} << j;
  }
  return Signature(f.vars(), bits);
}

bool equivalent(const TruthTable& f, const TruthTable& g) {
  if (f.vars() != g.vars()) {
    throw std::invalid_argument("variable counts differ");
  }
  return signature(f) == signature(g);
}

ClassIndex make_class_index(int vars, std::uint64_t index) {
  check_vars_arith(vars);
  if (index < 1 || index > (std::uint64_t{2} << vars)) {
    throw std::invalid_argument("class index out of range [1, 2^(n+1)]");
  }
  return ClassIndex{vars, index};
}

ClassIndex complement_partner(ClassIndex k) {
  make_class_index(k.vars, k.index);
  std::uint64_t half = std::uint64_t{1} << k.vars;
  return ClassIndex{k.vars, k.index <= half ? k.index + half : k.index - half};
}

namespace {

// signature -> (mask, constant) -> class label. Adjacent fixed inputs differ
// in exactly one variable, so adjacent signature entries XOR to one
// coefficient; the first entry is the constant.
std::uint64_t decode_class(int vars, std::uint64_t signature_bits) {
  bool constant = signature_bits & 1;
  std::uint64_t mask = 0;
  for (int j = 1; j <= vars; ++j) {
    std::uint64_t diff = ((signature_bits >> j) ^ (signature_bits >> (j - 1))) & 1;
    mask |= diff << (vars - j);
  }
  return mask + 1 + (constant ? (std::uint64_t{1} << vars) : 0);
}

}  // namespace

ClassIndex classify(const TruthTable& f) {
  return ClassIndex{f.vars(), decode_class(f.vars(), signature(f).value())};
}

std::uint64_t classify_rule(int vars, std::uint64_t rule) {
  check_vars_arith(vars);
  if (vars > 6) throw std::invalid_argument("rule form requires vars <= 6");
  if (vars < 6 && (rule >> (std::uint64_t{1} << vars)) != 0) {
    throw std::invalid_argument("rule number out of range");
  }
  std::uint64_t bits = 0;
  for (int j = 0; j <= vars; ++j) {
    bits |= ((rule >> fixed_input(vars, j)) & 1) << j;
  }
  return decode_class(vars, bits);
}

ClassIndex classify_by_signature_match(const TruthTable& f) {
  Signature sig = signature(f);
  std::uint64_t count = std::uint64_t{2} << f.vars();
  for (std::uint64_t k = 1; k <= count; ++k) {
    ClassIndex candidate{f.vars(), k};
    if (signature(affine_representative(candidate)) == sig) return candidate;
  }
  throw std::logic_error("no affine signature matched");  // unreachable
}

AffineSpec class_affine_spec(ClassIndex k) {
  make_class_index(k.vars, k.index);
  std::uint64_t half = std::uint64_t{1} << k.vars;
  if (k.index <= half) return AffineSpec{k.vars, k.index - 1, false};
  return AffineSpec{k.vars, k.index - half - 1, true};
}

TruthTable affine_representative(ClassIndex k) {
  return affine_truth_table(class_affine_spec(k));
}

TruthTable base_point(ClassIndex k) {
  Signature sig = signature(affine_representative(k));
  std::vector<std::uint64_t> words((std::uint64_t{1} << k.vars) / 64 + 1, 0);
  words.resize(((std::uint64_t{1} << k.vars) + 63) / 64);
  for (int j = 0; j <= k.vars; ++j) {
    if (sig.bit(j)) {
      std::uint64_t input = fixed_input(k.vars, j);
      words[input / 64] |= std::uint64_t{1} << (input % 64);
    }
  }
  return TruthTable::from_words(k.vars, std::move(words));
}

int class_size_log2(int vars) {
  check_vars_arith(vars);
  if (vars > limits().max_table_vars) {
    throw std::invalid_argument("variable count exceeds table cap");
  }
  return int((std::uint64_t{1} << vars) - std::uint64_t(vars) - 1);
}

std::uint64_t class_size(int vars) {
  int log2 = class_size_log2(vars);
  if (log2 >= 64) throw std::overflow_error("class size exceeds 64 bits");
  return std::uint64_t{1} << log2;
}

TruthTable class_member(ClassIndex k, std::uint64_t j) {
  int free_bits = class_size_log2(k.vars);
  if (free_bits < 64 && (j >> free_bits) != 0) {
    throw std::out_of_range("member index exceeds class size");
  }
  TruthTable base = base_point(k);
  std::vector<std::uint64_t> words(base.words().begin(), base.words().end());
  std::vector<std::uint64_t> changed = changed_positions(k.vars);
  // Spread the bits of j over the changed positions, lowest bit to smallest
  // position; ascending j yields ascending rule numbers.
  std::uint64_t rest = j;
  for (std::size_t b = 0; rest != 0; ++b, rest >>= 1) {
    if (rest & 1) {
      std::uint64_t input = changed[b] - 1;
      words[input / 64] |= std::uint64_t{1} << (input % 64);
    }
  }
  return TruthTable::from_words(k.vars, std::move(words));
}

std::vector<TruthTable> class_members(ClassIndex k) {
  make_class_index(k.vars, k.index);
  check_materialize(k.vars, "full class listing");
  std::uint64_t count = class_size(k.vars);
  std::vector<TruthTable> out;
  out.reserve(count);
  for (std::uint64_t j = 0; j < count; ++j) out.push_back(class_member(k, j));
  return out;
}

std::vector<std::uint64_t> class_member_rules(ClassIndex k) {
  make_class_index(k.vars, k.index);
  check_materialize(k.vars, "full class listing");
  if (k.vars > 5) {
    throw std::invalid_argument("rule listing requires vars <= 5");
  }
  std::uint64_t base = base_point(k).rule();
  std::vector<std::uint64_t> weights;
  for (std::uint64_t p : changed_positions(k.vars)) {
    weights.push_back(std::uint64_t{1} << (p - 1));
  }
  std::vector<std::uint64_t> out;
  out.reserve(std::uint64_t{1} << weights.size());
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << weights.size()); ++j) {
    std::uint64_t r = base;
    for (std::size_t b = 0; b < weights.size(); ++b) {
      if ((j >> b) & 1) r |= weights[b];
    }
    out.push_back(r);
  }
  return out;
}

std::string generator_pattern(ClassIndex k) {
  Signature sig = signature(affine_representative(k));
  std::uint64_t len = std::uint64_t{1} << k.vars;
  std::string pattern(len, '-');
  for (int j = 0; j <= k.vars; ++j) {
    std::uint64_t input = fixed_input(k.vars, j);
    pattern[len - 1 - input] = sig.bit(j) ? '1' : '0';
  }
  return pattern;
}

std::vector<TruthTable> expand_generator(const std::string& pattern) {
  std::uint64_t len = pattern.size();
  if (len < 2 || (len & (len - 1)) != 0) {
    throw std::invalid_argument("pattern length must be a power of two");
  }
  std::vector<std::uint64_t> free_inputs;  // 0-based, ascending
  for (std::uint64_t i = 0; i < len; ++i) {
    char c = pattern[len - 1 - i];
    if (c == '-') {
      free_inputs.push_back(i);
    } else if (c != '0' && c != '1') {
      throw std::invalid_argument("pattern may contain only 0, 1 and -");
    }
  }
  if (free_inputs.size() > 24) {
    throw std::invalid_argument("too many don't-cares to expand");
  }
  TruthTable fixed_part = TruthTable::from_binary([&] {
    std::string s = pattern;
    std::replace(s.begin(), s.end(), '-', '0');
    return s;
  }());
  std::vector<TruthTable> out;
  out.reserve(std::uint64_t{1} << free_inputs.size());
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << free_inputs.size());
       ++j) {
    std::vector<std::uint64_t> words(fixed_part.words().begin(),
                                     fixed_part.words().end());
    for (std::size_t b = 0; b < free_inputs.size(); ++b) {
      if ((j >> b) & 1) {
        words[free_inputs[b] / 64] |= std::uint64_t{1}
                                      << (free_inputs[b] % 64);
      }
    }
    out.push_back(TruthTable::from_words(fixed_part.vars(), std::move(words)));
  }
  return out;
}

}  // namespace affclass
