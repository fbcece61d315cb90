#include "qhci/space.hpp"

#include "qhci/series.hpp"

#include <algorithm>
#include <functional>

namespace qhci {

DegreeVector::DegreeVector(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) {
    throw Error(ErrorCode::EmptyDegrees, "degree list must contain at least one entry");
  }
  for (int m : degrees_) {
    if (m == 1) {
      throw Error(ErrorCode::InvalidDegree,
                  "degree 1 is excluded: a linear equation only cuts out a smaller "
                  "projective space; drop it and lower the ambient dimension");
    }
    if (m < 2) {
      throw Error(ErrorCode::InvalidDegree,
                  "every degree must be at least 2 (got " + std::to_string(m) + ")");
    }
  }
  std::sort(degrees_.begin(), degrees_.end());
}

Rational FanoSpace::m_to_m() const { return m_power(*this, 1, 0); }

std::string FanoSpace::label() const {
  std::string out = "r=" + std::to_string(r) + " m=(";
  for (int i = 0; i < degrees.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(degrees.values()[i]);
  }
  return out + ")";
}

Integer euler_characteristic(int r, const DegreeVector& degrees) {
  const int L = degrees.size();
  std::vector<Rational> tangent(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) tangent[i] = Rational(binomial(r + L + 1, i));
  TruncatedSeries chern(std::move(tangent));

  Integer deg = 1;
  for (int m : degrees) {
    auto normal = TruncatedSeries::polynomial({Rational(1), Rational(m)}, r);
    chern = mul_truncated(chern, invert_truncated(normal, r), r);
    deg *= m;
  }
  Rational chi = chern.coefficient(r) * Rational(deg);
  // Top Chern number of an integral bundle; anything else is a bug upstream.
  if (chi.get_den() != 1) throw Error(ErrorCode::OutOfRange, "non-integral Euler characteristic");
  return chi.get_num();
}

FanoSpace validate_space(int r, std::vector<int> degrees) {
  if (r < 3) {
    throw Error(ErrorCode::InvalidDimension,
                "dimension must be at least 3 (got " + std::to_string(r) + ")");
  }
  FanoSpace s;
  s.r = r;
  s.degrees = DegreeVector(std::move(degrees));
  s.codim = s.degrees.size();
  s.total_degree = 0;
  s.degree = 1;
  s.m_factorial = 1;
  for (int m : s.degrees) {
    s.total_degree += m;
    s.degree *= m;
    s.m_factorial *= factorial(m);
  }
  if (s.total_degree > r + s.codim) {
    throw Error(ErrorCode::NonFano, "not Fano: |m| = " + std::to_string(s.total_degree) +
                                        " exceeds r + L = " + std::to_string(r + s.codim));
  }
  s.fano_index = r + s.codim + 1 - s.total_degree;
  s.borderline = s.total_degree == r + s.codim;
  s.euler_char = euler_characteristic(r, s.degrees);
  s.prim_rank = s.euler_char - (r + 1);
  if (r % 2 == 1) s.prim_rank = -s.prim_rank;
  return s;
}

Rational m_power(const FanoSpace& space, long a, long b) {
  Rational out = 1;
  for (int m : space.degrees) out *= pow(Rational(m), a * m + b);
  return out;
}

std::vector<FanoSpace> space_grid(int r_min, int r_max, int max_codim, int min_degree,
                                  int max_degree) {
  std::vector<FanoSpace> out;
  std::vector<int> current;
  std::function<void(int, int, int)> extend = [&](int r, int L, int lo) {
    if (static_cast<int>(current.size()) == L) {
      try {
        out.push_back(validate_space(r, current));
      } catch (const Error&) {
      }
      return;
    }
    for (int m = lo; m <= max_degree; ++m) {
      current.push_back(m);
      extend(r, L, m);
      current.pop_back();
    }
  };
  for (int r = r_min; r <= r_max; ++r) {
    for (int L = 1; L <= max_codim; ++L) extend(r, L, min_degree);
  }
  return out;
}

}  // namespace qhci
