#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stranded/amplitude.hpp"

namespace stranded {

// Exact finite group given by its multiplication table.  Stands in for
// SU(2): the amplitudes here are purely delta-algebraic, so any exact
// group verifies the symbolic claims.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  bool abelian() const;

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

// spec strings: "cyclic:<n>", "dihedral:<n>", "symmetric:<n>", "quaternion8"
FiniteGroup make_group(const std::string& spec);
FiniteGroup make_cyclic(int n);
FiniteGroup make_dihedral(int n);   // order 2n
FiniteGroup make_symmetric(int n);  // order n!
FiniteGroup make_quaternion8();

using ExternalAssignment = std::map<std::string, int>;  // label -> element

int evaluate_word(const GroupWord& w, const FiniteGroup& G, const ExternalAssignment& ext,
                  const std::map<int, int>& holonomy_values);

// Number of holonomy assignments making every delta's word the identity.
// Budget: |G|^m assignments, default cap 1e7 (STRANDED_BUDGET raises it).
long long brute_force_count(const DeltaKernel& kernel, const FiniteGroup& G,
                            const ExternalAssignment& ext, long long budget = 10'000'000);

struct DivergenceFit {
  std::vector<std::pair<int, long long>> counts;  // (|G|, N)
  std::optional<int> exponent;                    // kappa with N = c*|G|^kappa exactly
};

// Evaluates N over the given groups with identity externals; fits
// N = c*|G|^kappa when the counts match exactly for an integer kappa.
DivergenceFit fit_divergence_exponent(const DeltaKernel& kernel,
                                      const std::vector<FiniteGroup>& groups,
                                      long long budget = 10'000'000);

}  // namespace stranded
