#include "stranded/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace stranded {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  int n = static_cast<int>(table_.size());
  if (n == 0) throw Error(ErrorCode::OrderTooLarge, "empty group");
  for (const auto& row : table_)
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::SemanticError, "multiplication table not square");

  // identity
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) { identity_ = e; break; }
  }
  if (identity_ < 0) throw Error(ErrorCode::SemanticError, "no identity element");

  // inverses
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) { inverse_[a] = b; break; }
    if (inverse_[a] < 0) throw Error(ErrorCode::SemanticError, "element without inverse");
  }

  // associativity: exhaustive for order <= 24, sampled above
  auto check = [&](int a, int b, int c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
      throw Error(ErrorCode::SemanticError, "multiplication table not associative");
  };
  if (n <= 24) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    for (int t = 0; t < 20000; ++t) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      int a = static_cast<int>((s >> 33) % n);
      int b = static_cast<int>((s >> 17) % n);
      int c = static_cast<int>(s % n);
      check(a, b, c);
    }
  }
}

bool FiniteGroup::abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup make_cyclic(int n) {
  if (n < 1 || n > 24) throw Error(ErrorCode::OrderTooLarge, "cyclic order must be in [1,24]");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup("cyclic:" + std::to_string(n), std::move(t));
}

FiniteGroup make_dihedral(int n) {
  if (n < 1 || 2 * n > 24) throw Error(ErrorCode::OrderTooLarge, "dihedral 2n must be <= 24");
  // elements: r^a (a<n), then s r^a
  int m = 2 * n;
  auto enc = [&](int flip, int rot) { return flip * n + rot; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int f1 = 0; f1 < 2; ++f1)
    for (int a = 0; a < n; ++a)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int b = 0; b < n; ++b) {
          // (s^f1 r^a)(s^f2 r^b) = s^(f1+f2) r^(b + a*(-1)^f2)
          int rot = ((f2 ? -a : a) + b) % n;
          if (rot < 0) rot += n;
          t[enc(f1, a)][enc(f2, b)] = enc((f1 + f2) % 2, rot);
        }
  return FiniteGroup("dihedral:" + std::to_string(n), std::move(t));
}

FiniteGroup make_symmetric(int n) {
  if (n < 1 || n > 4) throw Error(ErrorCode::OrderTooLarge, "symmetric n must be <= 4 (order 24)");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  int m = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> q(n);
      for (int i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(q);
    }
  return FiniteGroup("symmetric:" + std::to_string(n), std::move(t));
}

FiniteGroup make_quaternion8() {
  // element (unit<<1)|sign with units 1,i,j,k and sign 1 meaning negated
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a >> 1, sa = a & 1;
      int ub = b >> 1, sb = b & 1;
      t[a][b] = (unit[ua][ub] << 1) | ((sa + sb + sign[ua][ub]) % 2);
    }
  return FiniteGroup("quaternion8", std::move(t));
}

FiniteGroup make_group(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  if (kind == "quaternion8") return make_quaternion8();
  if (colon == std::string::npos)
    throw Error(ErrorCode::SyntaxError, "group spec must be kind:<n> or quaternion8");
  int n = std::stoi(spec.substr(colon + 1));
  if (kind == "cyclic") return make_cyclic(n);
  if (kind == "dihedral") return make_dihedral(n);
  if (kind == "symmetric") return make_symmetric(n);
  throw Error(ErrorCode::SyntaxError, "unknown group kind '" + kind + "'");
}

int evaluate_word(const GroupWord& w, const FiniteGroup& G, const ExternalAssignment& ext,
                  const std::map<int, int>& holonomy_values) {
  int acc = G.identity();
  for (const Letter& l : w.letters) {
    int v;
    if (l.symbol.kind == SymbolKind::holonomy) {
      v = holonomy_values.at(l.symbol.edge);
    } else {
      auto it = ext.find(l.symbol.name);
      if (it == ext.end())
        throw Error(ErrorCode::SymbolAbsent, "no value for external '" + l.symbol.name + "'");
      v = it->second;
    }
    if (l.exponent < 0) v = G.inv(v);
    acc = G.mul(acc, v);
  }
  return acc;
}

long long brute_force_count(const DeltaKernel& kernel, const FiniteGroup& G,
                            const ExternalAssignment& ext, long long budget) {
  size_t m = kernel.holonomies.size();
  double total = std::pow(static_cast<double>(G.order()), static_cast<double>(m));
  if (total > static_cast<double>(budget))
    throw Error(ErrorCode::BudgetExceeded,
                "brute force needs " + std::to_string(total) + " assignments");

  // precompile words: per letter (source, index, invert) where source 0 =
  // external value, 1 = holonomy slot
  struct Op {
    int src;
    int idx;
    bool inv;
  };
  std::vector<int> hidx(kernel.holonomies.size());
  std::map<int, int> slot_of;
  for (size_t i = 0; i < kernel.holonomies.size(); ++i) slot_of[kernel.holonomies[i]] = (int)i;
  std::vector<std::vector<Op>> prog;
  for (const Delta& d : kernel.deltas) {
    std::vector<Op> ops;
    for (const Letter& l : d.word.letters) {
      if (l.symbol.kind == SymbolKind::holonomy)
        ops.push_back({1, slot_of.at(l.symbol.edge), l.exponent < 0});
      else {
        auto it = ext.find(l.symbol.name);
        if (it == ext.end())
          throw Error(ErrorCode::SymbolAbsent, "no value for external '" + l.symbol.name + "'");
        ops.push_back({0, it->second, l.exponent < 0});
      }
    }
    prog.push_back(std::move(ops));
  }

  std::vector<int> assign(m, 0);
  long long count = 0;
  int n = G.order();
  while (true) {
    bool ok = true;
    for (const auto& ops : prog) {
      int acc = G.identity();
      for (const Op& op : ops) {
        int v = op.src == 1 ? assign[op.idx] : op.idx;
        if (op.inv) v = G.inv(v);
        acc = G.mul(acc, v);
      }
      if (acc != G.identity()) { ok = false; break; }
    }
    if (ok) ++count;
    // next assignment
    size_t i = 0;
    while (i < m && ++assign[i] == n) assign[i++] = 0;
    if (i == m) break;
    if (m == 0) break;
  }
  return count;
}

DivergenceFit fit_divergence_exponent(const DeltaKernel& kernel,
                                      const std::vector<FiniteGroup>& groups, long long budget) {
  DivergenceFit fit;
  ExternalAssignment ext;
  for (const Delta& d : kernel.deltas)
    for (const Letter& l : d.word.letters)
      if (l.symbol.kind == SymbolKind::external) ext[l.symbol.name] = 0;  // identity is 0 for cyclic
  for (const FiniteGroup& G : groups) {
    ExternalAssignment e;
    for (auto& [k, v] : ext) e[k] = G.identity();
    fit.counts.push_back({G.order(), brute_force_count(kernel, G, e, budget)});
  }
  // N = c * |G|^kappa exactly, over the m = #holonomies possible exponents
  size_t m = kernel.holonomies.size();
  for (int kappa = 0; kappa <= static_cast<int>(m); ++kappa) {
    // c = N / |G|^kappa must be identical (as an exact rational) across groups
    bool ok = true;
    long long num0 = 0, den0 = 0;
    for (auto [n, N] : fit.counts) {
      long long den = 1;
      for (int i = 0; i < kappa; ++i) den *= n;
      // compare N/den across groups: N*den0 == num0*den
      if (den0 == 0) { num0 = N; den0 = den; continue; }
      if (N * den0 != num0 * den) { ok = false; break; }
    }
    if (ok && !fit.counts.empty()) {
      fit.exponent = kappa;
      break;
    }
  }
  return fit;
}

}  // namespace stranded
