#include "detlinks/polar.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "detlinks/errors.hpp"
#include "detlinks/tensor_calculus.hpp"

namespace detlinks {

namespace {

std::string triple(int m, int n, int r) {
  return "(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
}

std::mutex memo_mu;
std::map<std::tuple<int, int, int>, PolarProfile> memo;

}  // namespace

int polar_top(int m, int n, int r) { return (m + n) * r - 2 * r * r; }

void validate_polar(int m, int n, int r) {
  if (m < 1 || n < m || r < 0 || r > m)
    throw InvalidArgument("polar multiplicities need 1 <= m <= n and 0 <= r <= m, got " +
                          triple(m, n, r));
}

PolarProfile compute_polar_profile(int m, int n, int r, Exec exec) {
  validate_polar(m, n, r);
  PolarProfile p{m, n, r, {}, {}};
  const int top = polar_top(m, n, r);
  if (r == 0 || r == m) {
    p.values.assign(static_cast<std::size_t>(top + 1), 0);
    p.raw_signs.assign(static_cast<std::size_t>(top + 1), 0);
    p.values[0] = 1;
    p.raw_signs[0] = 1;
    return p;
  }

  const ProdSpec spec{r, n, m};
  const auto sq = segre_tensor(spec, TensorBundle::quot_tensor, top, exec);
  const auto ss = segre_tensor(spec, TensorBundle::sub_tensor, top, exec);
  const int prefactor = ((m + n) * r - r * r - 1) % 2 ? -1 : 1;

  std::vector<BigInt> raw(static_cast<std::size_t>(top + 1));
  const long cells = top + 1;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < cells; ++k) raw[k] = pairing(sq[k], ss[top - k]);
  } else {
    for (long k = 0; k < cells; ++k) raw[k] = pairing(sq[k], ss[top - k]);
  }

  int parity = 0;  // sign(raw_k) * (-1)^k, fixed across nonzero k
  for (int k = 0; k <= top; ++k) {
    BigInt v = raw[k] * prefactor;
    const int s = sign(v);
    if (s != 0) {
      const int normalized = k % 2 ? -s : s;
      if (parity == 0) parity = normalized;
      else if (normalized != parity)
        throw ConsistencyError("polar integrals of " + triple(m, n, r) +
                               " do not alternate in sign at k=" + std::to_string(k));
    }
    p.raw_signs.push_back(s);
    p.values.push_back(abs(v));
  }
  return p;
}

PolarProfile polar_profile(int m, int n, int r, Exec exec) {
  validate_polar(m, n, r);
  {
    std::lock_guard lock(memo_mu);
    auto it = memo.find({m, n, r});
    if (it != memo.end()) return it->second;
  }
  PolarProfile p = compute_polar_profile(m, n, r, exec);
  std::lock_guard lock(memo_mu);
  return memo.emplace(std::make_tuple(m, n, r), std::move(p)).first->second;
}

void seed_polar_profile(const PolarProfile& p) {
  validate_polar(p.m, p.n, p.r);
  if (p.top() != polar_top(p.m, p.n, p.r) || p.raw_signs.size() != p.values.size())
    throw InvalidArgument("profile length does not match " + triple(p.m, p.n, p.r));
  std::lock_guard lock(memo_mu);
  memo[{p.m, p.n, p.r}] = p;
}

void clear_polar_memo() {
  std::lock_guard lock(memo_mu);
  memo.clear();
}

std::vector<PolarProfile> memoized_polar_profiles() {
  std::lock_guard lock(memo_mu);
  std::vector<PolarProfile> out;
  for (auto& [key, p] : memo) out.push_back(p);
  return out;
}

BigInt polar_multiplicity(int m, int n, int r, int k, Exec exec) {
  validate_polar(m, n, r);
  if (k < 0 || k > polar_top(m, n, r))
    throw InvalidArgument("polar index k=" + std::to_string(k) + " outside 0.." +
                          std::to_string(polar_top(m, n, r)) + " for " + triple(m, n, r));
  return polar_profile(m, n, r, exec).values[k];
}

DualityReport duality_check(int m, int n, int r, Exec exec) {
  validate_polar(m, n, r);
  if (r < 1 || r > m - 1) throw InvalidArgument("duality needs 1 <= r <= m-1");
  const auto a = polar_profile(m, n, r, exec);
  const auto b = polar_profile(m, n, m - r, exec);
  const int shift = 2 * (m - r) * r;
  DualityReport rep{m, n, r, {}, true};
  std::vector<bool> b_seen(b.values.size(), false);
  for (int k = 0; k <= a.top(); ++k) {
    const int kk = shift - k;
    rep.pairs.emplace_back(k, kk);
    if (kk >= 0 && kk <= b.top()) b_seen[kk] = true;
    if (a.at(k) != b.at(kk)) rep.all_equal = false;
  }
  for (int kk = 0; kk <= b.top(); ++kk) {
    if (b_seen[kk]) continue;
    rep.pairs.emplace_back(shift - kk, kk);
    if (b.at(kk) != a.at(shift - kk)) rep.all_equal = false;
  }
  return rep;
}

BigInt euler_obstruction(int m, int n, int r, int i, Exec exec) {
  validate_polar(m, n, r);
  const int d = (m + n) * r - r * r;
  if (i < 0 || i > d)
    throw InvalidArgument("Euler obstruction index " + std::to_string(i) + " outside 0.." +
                          std::to_string(d));
  const auto p = polar_profile(m, n, r, exec);
  BigInt total = 0;
  for (int j = i; j <= d; ++j) {
    if ((d - j) % 2) total -= p.at(d - j);
    else total += p.at(d - j);
  }
  return total;
}

}  // namespace detlinks
