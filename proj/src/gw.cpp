#include "qhci/gw.hpp"

#include "qhci/series.hpp"

#include <string>

namespace qhci {

int vdim_02(const FanoSpace& space, int k) { return space.r + k * space.fano_index - 1; }

int second_exponent(const FanoSpace& space, const DescendantKey& key) {
  return vdim_02(space, key.k) - key.a - key.i;
}

namespace {

// Coefficients x^0..x^{r+L} of
//   prod_j prod_{l=0}^{h m_j} (m_j x + l) / prod_{l=1}^{h} (x + l)^{r+L+1}.
// For h = 0 both products collapse: the numerator is prod_j m_j x.
std::vector<Rational> i_function_series(const FanoSpace& space, int h) {
  const int order = space.r + space.codim;
  std::vector<Rational> numer(static_cast<std::size_t>(order) + 1, Rational(0));
  numer[0] = 1;
  for (int m : space.degrees) {
    for (int l = 0; l <= h * m; ++l) {
      // multiply in place by (m x + l), truncating
      for (int n = order; n >= 0; --n) {
        Rational next = numer[n] * l;
        if (n > 0) next += numer[n - 1] * m;
        numer[n] = next;
      }
    }
  }
  if (h == 0) return numer;

  auto denom = TruncatedSeries::polynomial({Rational(1)}, order);
  for (int l = 1; l <= h; ++l) {
    auto linear = TruncatedSeries::polynomial({Rational(l), Rational(1)}, order);
    for (int e = 0; e < order + 1; ++e) denom = mul_truncated(denom, linear, order);
  }
  auto quotient = mul_truncated(TruncatedSeries(std::move(numer)),
                                invert_truncated(denom, order), order);
  return quotient.coefficients();
}

}  // namespace

std::vector<Rational> base_descendant_row(const FanoSpace& space, int k) {
  if (k < 1) throw Error(ErrorCode::InconsistentKey, "curve degree must be positive");
  const int top = space.r + space.codim;
  std::vector<Rational> row(static_cast<std::size_t>(space.r) + 1, Rational(0));

  auto accumulate = [&](int h, const Rational& weight) {
    auto series = i_function_series(space, h);
    for (int i = 0; i <= space.r; ++i) row[i] += weight * series[top - i];
  };

  if (!space.borderline) {
    accumulate(k, Rational(1));
    return row;
  }
  const Rational mf(space.m_factorial);
  for (int h = 0; h <= k; ++h) {
    const Rational weight = pow(-mf, k - h) / Rational(factorial(k - h));
    accumulate(h, weight);
  }
  return row;
}

Rational base_descendant(const FanoSpace& space, int k, int i) {
  if (i < 0 || i > space.r) {
    throw Error(ErrorCode::OutOfRange, "insertion exponent " + std::to_string(i) +
                                           " outside [0, " + std::to_string(space.r) + "]");
  }
  return base_descendant_row(space, k)[i];
}

GWTable::GWTable(FanoSpace space, int k_max) : space_(std::move(space)), k_max_(k_max) {
  if (k_max_ < 1) k_max_ = 1;
}

void GWTable::ensure_degree(int k) {
  if (k > k_max_) k_max_ = k;
}

void GWTable::clear() {
  memo_.clear();
  base_rows_.clear();
}

bool GWTable::in_range(int k, int a, int i) const {
  if (k < 1 || a < 0 || i < 0 || i > space_.r) return false;
  const int j = vdim_02(space_, k) - a - i;
  return j >= 0 && j <= space_.r;
}

Rational GWTable::descendant(const DescendantKey& key) {
  if (key.k < 1 || key.a < 0) {
    throw Error(ErrorCode::InconsistentKey, "descendant key needs k >= 1 and a >= 0");
  }
  if (key.k > k_max_) {
    throw Error(ErrorCode::DegreeBoundExceeded, "curve degree " + std::to_string(key.k) +
                                                    " exceeds table bound " +
                                                    std::to_string(k_max_));
  }
  return value(key.k, key.a, key.i);
}

Rational GWTable::descendant(int k, int a, int i, int j) {
  if (k >= 1 && a + i + j != vdim_02(space_, k)) {
    throw Error(ErrorCode::InconsistentKey,
                "a + i + j = " + std::to_string(a + i + j) + " but the virtual dimension is " +
                    std::to_string(vdim_02(space_, k)));
  }
  return descendant(DescendantKey{k, a, i});
}

void GWTable::insert_verified(const DescendantKey& key, const Rational& v) {
  if (!in_range(key.k, key.a, key.i)) {
    throw Error(ErrorCode::CacheMismatch, "cache entry " + std::to_string(key.k) + "," +
                                              std::to_string(key.a) + "," +
                                              std::to_string(key.i) + " is not a valid key");
  }
  auto [it, inserted] = memo_.try_emplace(key, v);
  if (!inserted && it->second != v) {
    throw Error(ErrorCode::CacheMismatch, "cache entry disagrees with the computed value");
  }
  ensure_degree(key.k);
}

const std::vector<Rational>& GWTable::base_row(int k) {
  auto it = base_rows_.find(k);
  if (it == base_rows_.end()) it = base_rows_.emplace(k, base_descendant_row(space_, k)).first;
  return it->second;
}

void GWTable::prepare_base_rows(int k_max) {
  for (int k = 1; k <= k_max; ++k) base_row(k);
}

namespace {

// One step of the divisor recursion: moving one H from the second marking
// to the first costs a psi-class on the first and a boundary sum over
// degree splittings k = l + (k - l), weighted by the degree k - l of the
// part that carries the second marking.
template <typename Lookup>
Rational recursion_step(const FanoSpace& space, int k, int a, int i, Lookup&& get) {
  const int j = vdim_02(space, k) - a - i;
  Rational out = get(k, a, i + 1) + Rational(k) * get(k, a + 1, i);
  if (k > 1) {
    const Rational inv_deg = space.inverse_degree();
    for (int l = 1; l < k; ++l) {
      // <tau_a(H^i), H^{l d + r - 1 - i - a}>_l is the degree-l key (l, a, i).
      const Rational left = get(l, a, i);
      if (left == 0) continue;
      const Rational right = get(k - l, 0, j - 1);
      if (right == 0) continue;
      out -= inv_deg * Rational(k - l) * left * right;
    }
  }
  return out;
}

}  // namespace

Rational GWTable::value(int k, int a, int i) {
  if (!in_range(k, a, i)) return 0;
  const DescendantKey key{k, a, i};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const int j = vdim_02(space_, k) - a - i;
  Rational out;
  if (j == 0) {
    out = base_row(k)[i];
  } else {
    out = recursion_step(space_, k, a, i,
                         [this](int kk, int aa, int ii) { return value(kk, aa, ii); });
  }
  memo_.emplace(key, out);
  return out;
}

Rational GWTable::stored(int k, int a, int i) const {
  if (!in_range(k, a, i)) return 0;
  auto it = memo_.find(DescendantKey{k, a, i});
  if (it == memo_.end()) {
    throw Error(ErrorCode::OutOfRange, "wavefront dependency " + std::to_string(k) + "," +
                                           std::to_string(a) + "," + std::to_string(i) +
                                           " not yet computed");
  }
  return it->second;
}

Rational GWTable::step_from_memo(int k, int a, int i) const {
  const int j = vdim_02(space_, k) - a - i;
  if (j == 0) {
    auto it = base_rows_.find(k);
    if (it == base_rows_.end()) {
      throw Error(ErrorCode::OutOfRange, "base row " + std::to_string(k) + " not prepared");
    }
    return it->second[i];
  }
  return recursion_step(space_, k, a, i,
                        [this](int kk, int aa, int ii) { return stored(kk, aa, ii); });
}

std::vector<DescendantKey> GWTable::level(int k, int j) const {
  std::vector<DescendantKey> keys;
  for (int i = 0; i <= space_.r; ++i) {
    const int a = vdim_02(space_, k) - j - i;
    if (a >= 0 && in_range(k, a, i)) keys.push_back({k, a, i});
  }
  return keys;
}

Rational alpha(GWTable& table, int k, int s) {
  const FanoSpace& space = table.space();
  const int first = k * space.fano_index + space.r - s - 1;
  if (k < 1 || s < 0 || s > space.r || first < 0 || first > space.r) return 0;
  table.ensure_degree(k);
  return space.inverse_degree() * table.descendant(DescendantKey{k, 0, first});
}

void fill_levels_serial(GWTable& table, int k_max) {
  table.ensure_degree(k_max);
  table.prepare_base_rows(k_max);
  const int r = table.space().r;
  for (int k = 1; k <= k_max; ++k) {
    for (int j = 0; j <= r; ++j) {
      for (const auto& key : table.level(k, j)) {
        if (table.memo().count(key)) continue;
        table.insert_verified(key, table.step_from_memo(key.k, key.a, key.i));
      }
    }
  }
}

}  // namespace qhci
