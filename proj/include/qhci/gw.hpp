#pragma once

#include "qhci/rational.hpp"
#include "qhci/space.hpp"

#include <compare>
#include <map>
#include <vector>

namespace qhci {

/// Genus-0 two-point invariant <tau_a(H^i), H^j>_{0,k}; j is implied by
/// a + i + j = r + k d - 1.
struct DescendantKey {
  int k = 1;
  int a = 0;
  int i = 0;

  friend auto operator<=>(const DescendantKey&, const DescendantKey&) = default;
};

/// Virtual dimension r + k d - 1 of the two-pointed degree-k moduli space.
int vdim_02(const FanoSpace& space, int k);

/// H-exponent of the second insertion for `key`.
int second_exponent(const FanoSpace& space, const DescendantKey& key);

/// <tau_{r+kd-1-i}(H^i), 1>_{0,k}, read off the I-function of X (with the
/// exponential correction when X has index 1).
Rational base_descendant(const FanoSpace& space, int k, int i);

/// Row i = 0..r of base_descendant for a fixed k.
std::vector<Rational> base_descendant_row(const FanoSpace& space, int k);

/// Memo of two-point descendants of X, filled on demand by the divisor
/// recursion down to the base case.
///
/// Out-of-range insertions (an H-exponent outside [0, r] or a negative
/// psi-power) are zero and never stored. The table is single-writer: share
/// it across threads only for reads after it has been populated.
class GWTable {
public:
  using Memo = std::map<DescendantKey, Rational>;

  explicit GWTable(FanoSpace space, int k_max = 1);

  const FanoSpace& space() const { return space_; }
  int k_max() const { return k_max_; }
  /// Raise the degree bound to at least k.
  void ensure_degree(int k);

  /// Checked entry point. InconsistentKey for k < 1 or a < 0;
  /// DegreeBoundExceeded for k > k_max. Out-of-range exponents give 0.
  Rational descendant(const DescendantKey& key);
  /// Same, with an explicit second exponent that must satisfy the
  /// dimension constraint.
  Rational descendant(int k, int a, int i, int j);

  const Memo& memo() const { return memo_; }
  void clear();

  /// Merge an externally supplied value; a disagreement with an already
  /// stored value throws CacheMismatch.
  void insert_verified(const DescendantKey& key, const Rational& value);

  /// Recursive memoized evaluation; the serial reference path.
  Rational value(int k, int a, int i);

  /// One application of the recursion (or the base case when j = 0),
  /// reading sub-invariants only from the memo. Every in-range dependency
  /// must already be stored. Safe to call concurrently while no thread
  /// writes.
  Rational step_from_memo(int k, int a, int i) const;

  /// Keys of degree k whose second exponent is j, in increasing i.
  std::vector<DescendantKey> level(int k, int j) const;

  /// Base-case row for degree k; must have been prepared for concurrent use.
  const std::vector<Rational>& base_row(int k);
  void prepare_base_rows(int k_max);

private:
  bool in_range(int k, int a, int i) const;
  Rational stored(int k, int a, int i) const;

  FanoSpace space_;
  int k_max_;
  Memo memo_;
  std::map<int, std::vector<Rational>> base_rows_;
};

/// alpha^k_s = m^{-1} <H^{kd + r - s - 1}, H^s>_{0,k}; zero when either
/// exponent leaves [0, r].
Rational alpha(GWTable& table, int k, int s);

/// Populate every invariant of degree <= k_max level by level, serially.
void fill_levels_serial(GWTable& table, int k_max);

/// Same wavefront as fill_levels_serial with each level evaluated by an
/// OpenMP parallel loop. Produces a memo identical to the serial fills.
void fill_levels_parallel(GWTable& table, int k_max);

}  // namespace qhci
