#include <algorithm>
#include <string>
#include <vector>

#include "bmlab/catalog.hpp"
#include "bmlab/identity.hpp"

namespace bmlab {

namespace {

std::array<int, kVariableCount> letter_counts(std::string const& word) {
  std::array<int, kVariableCount> counts{};
  for (char c : word) ++counts[kVariableNames.find(c)];
  return counts;
}

void check_side(Term const& side, char const* which) {
  if (side.leaf_count() != 4) {
    throw NotBolMoufang(NotBolMoufang::Reason::WrongLeafCount,
                        std::string(which) + " has " + std::to_string(side.leaf_count()) +
                            " leaves, expected 4");
  }
  auto const counts = letter_counts(side.word());
  auto const doubled = std::count(counts.begin(), counts.end(), 2);
  auto const single = std::count(counts.begin(), counts.end(), 1);
  if (doubled != 1 || single != 2) {
    throw NotBolMoufang(NotBolMoufang::Reason::DuplicateCountWrong,
                        std::string(which) + " '" + side.word() +
                            "' must use three distinct letters with exactly one repeated");
  }
}

}  // namespace

void check_bol_moufang(Identity const& id) {
  check_side(id.lhs, "left side");
  check_side(id.rhs, "right side");
  auto const lw = id.lhs.word();
  auto const rw = id.rhs.word();
  if (letter_counts(lw) != letter_counts(rw)) {
    throw NotBolMoufang(NotBolMoufang::Reason::LettersDiffer,
                        "sides use different letters: '" + lw + "' vs '" + rw + "'");
  }
  if (lw != rw) {
    throw NotBolMoufang(NotBolMoufang::Reason::OrderDiffers,
                        "letters appear in a different order: '" + lw + "' vs '" + rw + "'");
  }
}

Permutation Permutation::parse(std::string_view cycles) {
  Permutation p;
  if (cycles == "ε" || cycles == "e" || cycles == "id" || cycles == "()") return p;
  std::size_t i = 0;
  while (i < cycles.size()) {
    if (cycles[i] == ' ') {
      ++i;
      continue;
    }
    if (cycles[i] != '(') throw std::invalid_argument("bad permutation '" + std::string(cycles) + "'");
    auto const close = cycles.find(')', i);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("unclosed cycle in '" + std::string(cycles) + "'");
    }
    auto const body = cycles.substr(i + 1, close - i - 1);
    for (std::size_t k = 0; k < body.size(); ++k) {
      int const from = body[k] - '0';
      int const to = body[(k + 1) % body.size()] - '0';
      if (from < 1 || from > 3 || to < 1 || to > 3) {
        throw std::invalid_argument("bad permutation '" + std::string(cycles) + "'");
      }
      p.image[from - 1] = static_cast<std::uint8_t>(to);
    }
    i = close + 1;
  }
  return p;
}

std::string Permutation::to_string() const {
  std::string out;
  std::array<bool, 3> seen{};
  for (int start = 1; start <= 3; ++start) {
    if (seen[start - 1] || image[start - 1] == start) continue;
    out += '(';
    for (int k = start; !seen[k - 1]; k = image[k - 1]) {
      seen[k - 1] = true;
      out += static_cast<char>('0' + k);
    }
    out += ')';
  }
  return out.empty() ? "ε" : out;
}

namespace {

// Operators get their position in-order and their execution step post-order.
void number_operators(Term const& t, int& next_position, int& next_step,
                      std::vector<std::pair<int, int>>& out) {
  if (t.is_var()) return;
  number_operators(t.left(), next_position, next_step, out);
  int const position = next_position++;
  std::size_t const slot = out.size();
  out.emplace_back(position, 0);
  number_operators(t.right(), next_position, next_step, out);
  out[slot].second = next_step++;
}

}  // namespace

Permutation execution_perm(Term const& side) {
  if (side.product_count() != 3) {
    throw MalformedSide("side '" + to_string(side) + "' has " +
                        std::to_string(side.product_count()) + " products, expected 3");
  }
  std::vector<std::pair<int, int>> order;
  int position = 1, step = 1;
  number_operators(side, position, step, order);
  Permutation p;
  for (auto const& [pos, st] : order) p.image[pos - 1] = static_cast<std::uint8_t>(st);
  return p;
}

std::string IdentityType::to_string() const {
  return lhs_perm.to_string() + " = " + rhs_perm.to_string() + ", {" +
         std::to_string(double_slots[0]) + "," + std::to_string(double_slots[1]) + "}";
}

IdentityType identity_type(Identity const& id) {
  check_bol_moufang(id);
  IdentityType type{execution_perm(id.lhs), execution_perm(id.rhs), {}};
  auto const word = id.lhs.word();
  auto const counts = letter_counts(word);
  std::size_t found = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (counts[kVariableNames.find(word[i])] == 2) type.double_slots[found++] = static_cast<int>(i + 1);
  }
  return type;
}

Identity canonicalize(Identity const& id) {
  std::array<std::size_t, kVariableCount> map{};
  std::array<bool, kVariableCount> assigned{};
  std::size_t next = 0;
  for (char c : id.lhs.word() + id.rhs.word()) {
    auto const v = kVariableNames.find(c);
    if (!assigned[v]) {
      assigned[v] = true;
      map[v] = next++;
    }
  }
  for (std::size_t v = 0; v < kVariableCount; ++v) {
    if (!assigned[v]) map[v] = next++;
  }
  return {rename(id.lhs, map), rename(id.rhs, map), id.label};
}

Identity parastrophe_identity(Identity const& id) {
  Identity mirrored = canonicalize({mirror(id.lhs), mirror(id.rhs), std::nullopt});
  mirrored.label = catalog_label(mirrored);
  return mirrored;
}

bool equivalent(Identity const& a, Identity const& b) {
  auto const ca = canonicalize(a);
  return ca == canonicalize(b) || ca == canonicalize({b.rhs, b.lhs, std::nullopt});
}

}  // namespace bmlab
