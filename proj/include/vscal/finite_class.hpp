#ifndef VSCAL_FINITE_CLASS_HPP
#define VSCAL_FINITE_CLASS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vscal/core.hpp"

namespace vscal {

/// Explicit finite concept class: named domain points (columns) and one
/// positive-set bitmask per hypothesis (rows). Domain capped at 64 points so
/// a row fits a single word.
struct FiniteClassTable {
  std::vector<std::string> point_names;
  std::vector<std::uint64_t> rows;

  int domain_size() const { return static_cast<int>(point_names.size()); }
  int num_hypotheses() const { return static_cast<int>(rows.size()); }
  bool positive(int row, int point) const {
    return (rows[row] >> point) & 1ULL;
  }

  /// Throws unless rows are distinct, names are distinct and sizes fit.
  void validate() const;
};

/// Appendix-style gap class: domain {w_1..w_d} + {x_I} + {z_I} over all
/// I subseteq {1..d}; h_J positive exactly on {w_i : i in J} cup
/// {x_I : I subseteq J} cup {z_I : I subseteq complement(J)}. 2^d hypotheses.
std::shared_ptr<const FiniteClassTable> build_wxz_class(int d);

/// VC dimension of an arbitrary family of subsets of {0..domain-1}, given as
/// bitmasks, by level-wise shattering search (shattered sets are downward
/// closed, so each level extends the previous one).
int vc_dimension(const std::vector<std::uint64_t>& sets, int domain);

/// VC dimension of the hypothesis class itself (rows as positive sets).
int vc_dimension(const FiniteClassTable& table);

/// Characterizing set complexity gamma(F,n): VC dimension of
/// { DIS(VS(S)) : S a realizable labeled multiset of size n }.
/// Guards: domain <= 40, n <= 3.
int gamma_bruteforce(const FiniteClassTable& table, int n);

/// Point carrying a finite-domain index in coords[0].
Point finite_point(int index);
int finite_point_index(const FiniteClassTable& table, const Point& x);

}  // namespace vscal

#endif  // VSCAL_FINITE_CLASS_HPP
