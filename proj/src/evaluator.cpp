#include "bmlab/evaluator.hpp"

#include "bmlab/model_finder.hpp"

namespace bmlab {

Element eval_term(Term const& t, CayleyTable const& q, Assignment const& a) {
  if (t.is_var()) {
    auto const& v = a.values[t.var_index()];
    if (!v) throw UnboundVariable(t.var_name());
    return *v;
  }
  return q(eval_term(t.left(), q, a), eval_term(t.right(), q, a));
}

SatReport satisfies(CayleyTable const& q, Identity const& id) {
  SatReport report;
  auto const n = static_cast<Element>(q.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        ++report.assignments_checked;
        auto const a = Assignment::of(x, y, z);
        if (eval_term(id.lhs, q, a) != eval_term(id.rhs, q, a)) {
          report.holds = false;
          report.failing_assignment = std::array<Element, 3>{x, y, z};
          return report;
        }
      }
    }
  }
  return report;
}

UnitProfile classify(CayleyTable const& q) { return units(q); }

void for_each_satisfying(Identity const& id, std::size_t n,
                         std::function<bool(CayleyTable const&)> const& visit) {
  enumerate_latin_squares(n, [&](CayleyTable const& q) {
    if (!satisfies(q, id).holds) return true;
    return visit(q);
  });
}

std::vector<CayleyTable> satisfying_quasigroups(Identity const& id, std::size_t n) {
  std::vector<CayleyTable> out;
  for_each_satisfying(id, n, [&](CayleyTable const& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

namespace {

void compile(Term const& t, std::vector<std::int8_t>& code, std::int8_t mul) {
  if (t.is_var()) {
    code.push_back(static_cast<std::int8_t>(t.var_index()));
    return;
  }
  compile(t.left(), code, mul);
  compile(t.right(), code, mul);
  code.push_back(mul);
}

void mark_vars(Term const& t, std::array<bool, kVariableCount>& used) {
  if (t.is_var()) {
    used[t.var_index()] = true;
  } else {
    mark_vars(t.left(), used);
    mark_vars(t.right(), used);
  }
}

}  // namespace

CompiledIdentity::CompiledIdentity(Identity const& id) {
  // Quasigroups cancel on both sides: a.t = b.t and t.a = t.b each hold iff
  // a = b, so common outer factors are stripped.
  Term lhs = id.lhs, rhs = id.rhs;
  while (!lhs.is_var() && !rhs.is_var()) {
    if (lhs.right() == rhs.right()) {
      Term const l = lhs.left(), r = rhs.left();
      lhs = l;
      rhs = r;
    } else if (lhs.left() == rhs.left()) {
      Term const l = lhs.right(), r = rhs.right();
      lhs = l;
      rhs = r;
    } else {
      break;
    }
  }
  compile(lhs, code_[0], kMul);
  compile(rhs, code_[1], kMul);
  mark_vars(lhs, used_);
  mark_vars(rhs, used_);
}

long CompiledIdentity::eval_or_block(int side, std::span<std::int8_t const> cells,
                                     std::size_t n, std::array<int, 3> const& xyz,
                                     bool* at_root) const {
  std::array<int, 16> stack;
  std::size_t top = 0;
  auto const& code = code_[side];
  for (std::size_t i = 0; i < code.size(); ++i) {
    auto const op = code[i];
    if (op == kMul) {
      int const b = stack[--top];
      int const a = stack[--top];
      std::size_t const cell = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
      int const v = cells[cell];
      if (v < 0) {
        if (at_root) *at_root = i + 1 == code.size();
        return -1 - static_cast<long>(cell);
      }
      stack[top++] = v;
    } else {
      stack[top++] = xyz[op];
    }
  }
  return stack[0];
}

int CompiledIdentity::eval_side(int side, std::span<std::int8_t const> cells, std::size_t n,
                                std::array<int, 3> const& xyz) const {
  long const v = eval_or_block(side, cells, n, xyz);
  return v < 0 ? kUndecided : static_cast<int>(v);
}

CompiledIdentity::Probe CompiledIdentity::probe(std::span<std::int8_t const> cells, std::size_t n,
                                                std::array<int, 3> const& xyz) const {
  bool l_root = false, r_root = false;
  long const l = eval_or_block(0, cells, n, xyz, &l_root);
  if (l < 0) {
    Probe p{Probe::Status::blocked, static_cast<std::size_t>(-1 - l)};
    if (l_root) {
      long const r = eval_or_block(1, cells, n, xyz);
      if (r >= 0) p.forced = static_cast<int>(r);
    }
    return p;
  }
  long const r = eval_or_block(1, cells, n, xyz, &r_root);
  if (r < 0) {
    return {Probe::Status::blocked, static_cast<std::size_t>(-1 - r), r_root ? static_cast<int>(l) : kUndecided};
  }
  return {l == r ? Probe::Status::holds : Probe::Status::violated, 0};
}

bool CompiledIdentity::consistent(std::span<std::int8_t const> cells, std::size_t n) const {
  int const m = static_cast<int>(n);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        std::array<int, 3> const xyz{x, y, z};
        int const l = eval_side(0, cells, n, xyz);
        if (l == kUndecided) continue;
        int const r = eval_side(1, cells, n, xyz);
        if (r != kUndecided && l != r) return false;
      }
    }
  }
  return true;
}

nlohmann::json to_json(SatReport const& r) {
  nlohmann::json j{{"holds", r.holds}, {"assignments_checked", r.assignments_checked}};
  if (r.failing_assignment) {
    auto const& f = *r.failing_assignment;
    j["failing_assignment"] = {{"x", f[0]}, {"y", f[1]}, {"z", f[2]}};
  } else {
    j["failing_assignment"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(UnitProfile const& p) {
  auto opt = [](std::optional<Element> const& e) -> nlohmann::json {
    return e ? nlohmann::json(*e) : nlohmann::json(nullptr);
  };
  nlohmann::json j{{"left_unit", opt(p.left_unit)},
                   {"right_unit", opt(p.right_unit)},
                   {"middle_unit", opt(p.middle_unit)},
                   {"idempotents", p.idempotents},
                   {"is_loop", p.is_loop},
                   {"is_group", p.is_group}};
  if (p.associativity_witness) {
    j["associativity_witness"] = *p.associativity_witness;
  } else {
    j["associativity_witness"] = nullptr;
  }
  return j;
}

}  // namespace bmlab
