#pragma once

#include <utility>
#include <vector>

#include "detlinks/bigint.hpp"
#include "detlinks/exec.hpp"

namespace detlinks {

/// Polar multiplicities e_{m,n}^{r,k}, k = 0..(m+n)r - 2r^2, of the variety of
/// m x n matrices of rank <= r. raw_signs records the sign of each signed
/// integral before normalization (0 where the integral vanishes).
struct PolarProfile {
  int m = 0;
  int n = 0;
  int r = 0;
  std::vector<BigInt> values;
  std::vector<int> raw_signs;

  int top() const { return static_cast<int>(values.size()) - 1; }
  BigInt at(int k) const {
    return k >= 0 && k < static_cast<int>(values.size()) ? values[k] : BigInt(0);
  }
  friend bool operator==(const PolarProfile&, const PolarProfile&) = default;
};

/// Largest polar index (m+n)r - 2r^2, the dimension of the Grassmannian product.
int polar_top(int m, int n, int r);

/// Throws InvalidArgument unless 1 <= m <= n and 0 <= r <= m.
void validate_polar(int m, int n, int r);

/// Computes the profile from scratch (series caches are still shared).
/// r = 0 is the reduced point, profile (1); r = m is the smooth ambient
/// space, profile (1, 0, ..., 0). Throws ConsistencyError if the nonzero raw
/// signs do not alternate in k.
PolarProfile compute_polar_profile(int m, int n, int r, Exec exec = Exec::parallel);

/// Memoized compute_polar_profile.
PolarProfile polar_profile(int m, int n, int r, Exec exec = Exec::parallel);

/// Installs a profile (e.g. from the on-disk cache) into the memo.
void seed_polar_profile(const PolarProfile& p);
void clear_polar_memo();
/// Snapshot of every memoized profile, ordered by (m, n, r).
std::vector<PolarProfile> memoized_polar_profiles();

/// Throws InvalidArgument if k is outside 0..polar_top(m, n, r).
BigInt polar_multiplicity(int m, int n, int r, int k, Exec exec = Exec::parallel);

struct DualityReport {
  int m = 0;
  int n = 0;
  int r = 0;
  /// (k, k') with k' = 2(m-r)r - k, for every index of either profile.
  std::vector<std::pair<int, int>> pairs;
  bool all_equal = true;
};

/// Compares e^{r,k} with e^{m-r, 2(m-r)r-k}; an index without a partner must
/// carry 0. Needs 1 <= r <= m-1.
DualityReport duality_check(int m, int n, int r, Exec exec = Exec::parallel);

/// Local Euler obstruction sum_{j=i}^{d} (-1)^{d-j} e^{r, d-j} with
/// d = (m+n)r - r^2; needs 0 <= i <= d.
BigInt euler_obstruction(int m, int n, int r, int i, Exec exec = Exec::parallel);

}  // namespace detlinks
