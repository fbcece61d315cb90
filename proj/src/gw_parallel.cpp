#include "qhci/gw.hpp"

#include <exception>

namespace qhci {

// Within one (k, j) level every dependency lives in a lower level, so the
// level is an independent batch: read the memo concurrently, then merge.
void fill_levels_parallel(GWTable& table, int k_max) {
  table.ensure_degree(k_max);
  table.prepare_base_rows(k_max);
  const int r = table.space().r;
  for (int k = 1; k <= k_max; ++k) {
    for (int j = 0; j <= r; ++j) {
      const auto keys = table.level(k, j);
      const int n = static_cast<int>(keys.size());
      std::vector<Rational> values(keys.size());
      const GWTable& view = table;
      std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
      for (int t = 0; t < n; ++t) {
        const auto& key = keys[t];
        try {
          values[t] = view.step_from_memo(key.k, key.a, key.i);
        } catch (...) {
#pragma omp critical(qhci_fill_failure)
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);

      for (int t = 0; t < n; ++t) table.insert_verified(keys[t], values[t]);
    }
  }
}

}  // namespace qhci
