// Terms and identities in one binary operation over the variables x, y, z.
//
// Text syntax:
//   * a variable is one of the letters x, y, z;
//   * juxtaposition `ab` is a product and binds tighter than `.`;
//   * `a.b` is a product at the lower precedence level;
//   * within one level products group left to right, so `xyz` is (xy)z
//     and `a.b.c` is (a.b).c;
//   * parentheses override, `=` separates the two sides, whitespace is ignored.
// So "xy.zx = (xy.z)x" reads as (x*y)*(z*x) = ((x*y)*z)*x.

#ifndef BMLAB_IDENTITY_HPP
#define BMLAB_IDENTITY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bmlab {

// Variables are numbered x = 0, y = 1, z = 2.
inline constexpr std::size_t kVariableCount = 3;
inline constexpr std::string_view kVariableNames = "xyz";

class Term {
 public:
  static Term var(std::size_t index);
  static Term product(Term left, Term right);

  bool is_var() const noexcept { return !children_; }
  std::size_t var_index() const noexcept { return var_; }
  char var_name() const noexcept { return kVariableNames[var_]; }
  Term const& left() const noexcept { return children_->first; }
  Term const& right() const noexcept { return children_->second; }

  std::size_t leaf_count() const;
  std::size_t product_count() const;
  // Variable letters in left-to-right order, e.g. "xyzx" for xy.zx.
  std::string word() const;

  friend bool operator==(Term const& a, Term const& b);

 private:
  Term() = default;

  std::size_t var_ = 0;
  std::shared_ptr<std::pair<Term, Term> const> children_;
};

// Mirror image: every product has its operands swapped.
Term mirror(Term const& t);
// Apply a variable renaming, rename[old] = new.
Term rename(Term const& t, std::array<std::size_t, kVariableCount> const& rename);

// Compact printing in the table's style: a product of two letters is
// juxtaposed ("xy"); a product with a compound operand uses '.' when an
// operand is a bare two-letter product and parenthesised juxtaposition
// otherwise ("xy.z", "(xy.z)x", "x(y.zx)").
std::string to_string(Term const& t);

struct Identity {
  Term lhs;
  Term rhs;
  std::optional<std::string> label;  // catalog name such as "F17"

  // Sides only; the label is metadata.
  friend bool operator==(Identity const& a, Identity const& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

std::string to_string(Identity const& id);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string const& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotBolMoufang : public std::runtime_error {
 public:
  enum class Reason { WrongLeafCount, DuplicateCountWrong, LettersDiffer, OrderDiffers };

  NotBolMoufang(Reason reason, std::string const& message)
      : std::runtime_error(message), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

// Parses one side without shape validation.
Term parse_term(std::string_view text);
// Parses "lhs = rhs" and checks the Bol-Moufang shape: four leaves per side,
// three distinct letters with exactly one repeated, and the same letter
// sequence on both sides. Attaches the catalog label when the identity is a
// catalog entry up to renaming of variables and exchange of sides.
Identity parse_identity(std::string_view text);

// Throws NotBolMoufang if the identity does not have the Bol-Moufang shape.
void check_bol_moufang(Identity const& id);

// Permutation of {1,2,3} stored as its image array.
struct Permutation {
  std::array<std::uint8_t, 3> image{1, 2, 3};

  static Permutation identity() { return {}; }
  // Cycle notation as used in the table: "ε", "(12)", "(132)", ...
  static Permutation parse(std::string_view cycles);
  std::string to_string() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
};

class MalformedSide : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Order in which the three products of a side are executed. Products are
// numbered 1..3 by the position of their operator in the flattened word;
// evaluation is innermost first, left before right. The result maps operator
// position to execution step: ((ab)c)d -> ε, (a(bc))d -> (12), (ab)(cd) -> (23),
// a((bc)d) -> (132), a(b(cd)) -> (13).
Permutation execution_perm(Term const& side);

struct IdentityType {
  Permutation lhs_perm;
  Permutation rhs_perm;
  std::array<int, 2> double_slots{};  // 1-based leaf positions of the doubled letter

  std::string to_string() const;  // "(23) = ε, {1,4}"
  friend bool operator==(IdentityType const&, IdentityType const&) = default;
};

IdentityType identity_type(Identity const& id);

// Renames variables to x, y, z by order of first appearance in the lhs word.
Identity canonicalize(Identity const& id);

// (12)-parastrophic identity: mirror both sides, then canonicalize. Carries
// the catalog label of the result when there is one.
Identity parastrophe_identity(Identity const& id);

// True when both identities agree up to variable renaming and exchange of sides.
bool equivalent(Identity const& a, Identity const& b);

}  // namespace bmlab

#endif  // BMLAB_IDENTITY_HPP
