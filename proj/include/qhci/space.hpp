#pragma once

#include "qhci/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qhci {

/// Degrees m_1 <= ... <= m_L of the hypersurfaces cutting out X.
class DegreeVector {
public:
  /// Sorts; throws EmptyDegrees / InvalidDegree on bad input.
  explicit DegreeVector(std::vector<int> degrees);

  const std::vector<int>& values() const { return degrees_; }
  int size() const { return static_cast<int>(degrees_.size()); }
  auto begin() const { return degrees_.begin(); }
  auto end() const { return degrees_.end(); }

  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;

private:
  std::vector<int> degrees_;
};

/// A smooth Fano complete intersection X of dimension r in P^{r+L}, with
/// every scalar invariant the rest of the library consumes.
struct FanoSpace {
  int r = 0;
  DegreeVector degrees{{2}};

  int codim = 0;         // L
  int total_degree = 0;  // |m|
  int fano_index = 0;    // d = r + L + 1 - |m|
  Integer degree;        // m^1 = prod m_i = deg X
  Integer m_factorial;   // m! = prod m_i!
  Integer euler_char;    // chi(X)
  Integer prim_rank;     // (-1)^r (chi - (r+1))
  bool borderline = false;

  Rational inverse_degree() const { return Rational(1) / Rational(degree); }
  /// Shorthand for m^m.
  Rational m_to_m() const;
  std::string label() const;

  friend bool operator==(const FanoSpace& a, const FanoSpace& b) {
    return a.r == b.r && a.degrees == b.degrees;
  }
};

/// Checks the input and derives all invariants.
FanoSpace validate_space(int r, std::vector<int> degrees);

/// chi(X) = deg X * [x^r] (1+x)^{r+L+1} / prod(1 + m_i x).
Integer euler_characteristic(int r, const DegreeVector& degrees);

/// m^{a m + b} = prod_i m_i^{a m_i + b}.
Rational m_power(const FanoSpace& space, long a, long b);

/// Every valid space with r in [r_min, r_max], L in [1, max_codim] and
/// each m_i in [min_degree, max_degree], in a fixed order.
std::vector<FanoSpace> space_grid(int r_min, int r_max, int max_codim, int min_degree,
                                  int max_degree);

}  // namespace qhci
