#include <string>

#include "bmlab/catalog.hpp"
#include "bmlab/identity.hpp"

namespace bmlab {

Term Term::var(std::size_t index) {
  Term t;
  t.var_ = index;
  return t;
}

Term Term::product(Term left, Term right) {
  Term t;
  t.children_ = std::make_shared<std::pair<Term, Term> const>(std::move(left), std::move(right));
  return t;
}

std::size_t Term::leaf_count() const {
  return is_var() ? 1 : left().leaf_count() + right().leaf_count();
}

std::size_t Term::product_count() const {
  return is_var() ? 0 : 1 + left().product_count() + right().product_count();
}

std::string Term::word() const {
  return is_var() ? std::string(1, var_name()) : left().word() + right().word();
}

bool operator==(Term const& a, Term const& b) {
  if (a.is_var() || b.is_var()) return a.is_var() && b.is_var() && a.var_ == b.var_;
  if (a.children_ == b.children_) return true;
  return a.left() == b.left() && a.right() == b.right();
}

Term mirror(Term const& t) {
  if (t.is_var()) return t;
  return Term::product(mirror(t.right()), mirror(t.left()));
}

Term rename(Term const& t, std::array<std::size_t, kVariableCount> const& map) {
  if (t.is_var()) return Term::var(map[t.var_index()]);
  return Term::product(rename(t.left(), map), rename(t.right(), map));
}

namespace {

bool is_letter_pair(Term const& t) {
  return !t.is_var() && t.left().is_var() && t.right().is_var();
}

std::string operand(Term const& t) {
  if (t.is_var() || is_letter_pair(t)) return to_string(t);
  return "(" + to_string(t) + ")";
}

}  // namespace

std::string to_string(Term const& t) {
  if (t.is_var()) return std::string(1, t.var_name());
  if (is_letter_pair(t)) return to_string(t.left()) + to_string(t.right());
  // A bare letter pair on either side needs the low-precedence '.' to keep
  // it together; otherwise parenthesised operands are simply juxtaposed.
  bool const dot = is_letter_pair(t.left()) || is_letter_pair(t.right());
  return operand(t.left()) + (dot ? "." : "") + operand(t.right());
}

std::string to_string(Identity const& id) {
  return to_string(id.lhs) + " = " + to_string(id.rhs);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_side() {
    Term t = parse_dot_level();
    skip_space();
    return t;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::size_t position() const { return pos_; }
  void advance() { ++pos_; }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  static bool starts_atom(char c) { return c == '(' || kVariableNames.find(c) != std::string_view::npos; }

  // dot_level := juxt_level ('.' juxt_level)*
  Term parse_dot_level() {
    Term t = parse_juxt_level();
    while (peek() == '.') {
      advance();
      t = Term::product(std::move(t), parse_juxt_level());
    }
    return t;
  }

  // juxt_level := atom atom*
  Term parse_juxt_level() {
    Term t = parse_atom();
    while (starts_atom(peek())) t = Term::product(std::move(t), parse_atom());
    return t;
  }

  // atom := 'x' | 'y' | 'z' | '(' dot_level ')'
  Term parse_atom() {
    char const c = peek();
    if (c == '(') {
      advance();
      Term t = parse_dot_level();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      advance();
      return t;
    }
    if (auto idx = kVariableNames.find(c); c != '\0' && idx != std::string_view::npos) {
      advance();
      return Term::var(idx);
    }
    if (c == '\0') throw SyntaxError("unexpected end of input", pos_);
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.parse_side();
  if (!p.at_end()) throw SyntaxError("trailing input", p.position());
  return t;
}

Identity parse_identity(std::string_view text) {
  Parser p(text);
  Term lhs = p.parse_side();
  if (p.peek() != '=') throw SyntaxError("expected '='", p.position());
  p.advance();
  Term rhs = p.parse_side();
  if (!p.at_end()) throw SyntaxError("trailing input", p.position());

  Identity id{std::move(lhs), std::move(rhs), std::nullopt};
  check_bol_moufang(id);
  id.label = catalog_label(id);
  return id;
}

}  // namespace bmlab
