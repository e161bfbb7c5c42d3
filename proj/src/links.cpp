#include "detlinks/links.hpp"

#include <array>

#include "detlinks/errors.hpp"
#include "detlinks/grass_ring.hpp"
#include "detlinks/polar.hpp"

namespace detlinks {

void DetSpec::validate() const {
  if (s < 1 || m < s || n < m)
    throw InvalidArgument("determinantal variety needs 1 <= s <= m <= n, got " + to_string());
}

std::string DetSpec::to_string() const {
  return "M^" + std::to_string(s) + "_{" + std::to_string(m) + "," + std::to_string(n) + "}";
}

namespace {

void check_codim(const DetSpec& spec, int i, int upper) {
  if (i < 0 || i >= upper)
    throw InvalidArgument("codimension " + std::to_string(i) + " outside 0.." +
                          std::to_string(upper - 1) + " for " + spec.to_string());
}

int alternating(int e) { return e % 2 ? -1 : 1; }

}  // namespace

BigInt egz_factor(const DetSpec& spec, int stratum_rank) {
  spec.validate();
  if (stratum_rank < 0 || stratum_rank >= spec.s)
    throw InvalidArgument("stratum rank must lie in 0.." + std::to_string(spec.s - 1));
  const int k = spec.s - stratum_rank - 1;
  return binomial(spec.m - stratum_rank - 1, k) * alternating(k);
}

BigInt euler_complex_link(const DetSpec& spec, int i) {
  spec.validate();
  check_codim(spec, i, spec.dimension());
  BigInt chi = 0;
  for (int rp = 1; rp < spec.s; ++rp) {
    const int dp = (spec.m + spec.n) * rp - rp * rp;
    if (dp <= i) continue;
    const auto e = polar_profile(spec.m, spec.n, rp);
    BigInt inner = 0;
    for (int j = i + 1; j <= dp; ++j) inner += e.at(dp - j) * alternating(dp - j);
    chi += inner * egz_factor(spec, rp);
  }
  return chi;
}

BigInt euler_complex_link_smooth(const DetSpec& spec, int i) {
  spec.validate();
  check_codim(spec, i, spec.dimension());
  if (!spec.smooth_at(i)) throw DomainError("link not smooth at this codimension");
  const auto e = polar_profile(spec.m, spec.n, spec.r());
  BigInt chi = 0;
  for (int k = 0; k <= spec.dimension() - i - 1; ++k) chi += e.at(k) * alternating(k);
  return chi;
}

BigInt euler_step(const DetSpec& spec, int i) {
  spec.validate();
  check_codim(spec, i, spec.dimension() - 1);
  BigInt step = 0;
  for (int rp = 1; rp < spec.s; ++rp) {
    const int dp = (spec.m + spec.n) * rp - rp * rp;
    if (dp < i + 1) continue;
    const int k = dp - i - 1;
    step += polar_profile(spec.m, spec.n, rp).at(k) * alternating(k) * egz_factor(spec, rp);
  }
  return step;
}

std::string to_string(TorsionStatus t) { return t == TorsionStatus::free ? "free" : "unknown"; }

LinkProfile betti_smooth_complex_link(const DetSpec& spec, int i) {
  spec.validate();
  check_codim(spec, i, spec.dimension());
  if (!spec.smooth_at(i)) throw DomainError("link not smooth at this codimension");
  LinkProfile p;
  p.spec = spec;
  p.codim = i;
  p.chi = euler_complex_link(spec, i);
  p.smooth = true;
  p.middle = spec.dimension() - i - 1;
  const IntPolynomial grass = poincare(GrassSpec{spec.r(), spec.m});
  BigInt below = 0;
  for (int k = 0; k < p.middle; ++k) {
    p.betti.push_back(grass.coefficient(k));
    below += p.betti.back() * alternating(k);
  }
  BigInt mid = (p.chi - below) * alternating(p.middle);
  if (mid < 0)
    throw ConsistencyError("negative middle Betti number for " + spec.to_string() +
                           " at codimension " + std::to_string(i));
  p.betti.push_back(mid);
  p.torsion = spec.r() == 1 && i == 0 ? TorsionStatus::free : TorsionStatus::unknown;
  return p;
}

RealLinkProfile betti_smooth_real_link(const DetSpec& spec, int i) {
  spec.validate();
  check_codim(spec, i, spec.dimension());
  if (!spec.smooth_at(i)) throw DomainError("link not smooth at this codimension");
  RealLinkProfile p;
  p.spec = spec;
  p.codim = i;
  const int mid = spec.dimension() - i - 1;
  p.real_dim = 2 * mid + 1;
  p.betti.resize(static_cast<std::size_t>(p.real_dim + 1));
  if (spec.r() == 1 && i == 0) {
    const IntPolynomial full = poincare(GrassSpec{1, spec.m}) * poincare_stiefel(1, spec.n);
    for (int k = 0; k <= p.real_dim; ++k) p.betti[k] = full.coefficient(k);
    p.complete = true;
    return p;
  }
  const IntPolynomial grass = poincare(GrassSpec{spec.r(), spec.m});
  for (int k = 0; k < mid; ++k) {
    p.betti[k] = grass.coefficient(k);
    p.betti[p.real_dim - k] = grass.coefficient(k);
  }
  return p;
}

std::span<const KnownLinkGroup> known_real_link_groups() {
  static const std::array<KnownLinkGroup, 2> groups{{
      {{2, 3, 2}, 2, 2, "Z/3", "sphere bundle of O(-3) over P^1; Euler class acts by -3"},
      {{2, 3, 2}, 2, 1, "0", "variation map of rank 2 onto H^1 of the complex link, Z^2"},
  }};
  return groups;
}

IntPolynomial poincare_unitary(int n) {
  if (n < 0) throw InvalidArgument("unitary group needs n >= 0");
  return poincare_stiefel(n, n);
}

IntPolynomial poincare_stiefel(int r, int n) {
  if (r < 0 || n < r) throw InvalidArgument("Stiefel manifold needs 0 <= r <= n");
  IntPolynomial p = IntPolynomial::constant(1);
  for (int j = n - r + 1; j <= n; ++j)
    p = p * (IntPolynomial::constant(1) + IntPolynomial::monomial(2 * j - 1));
  return p;
}

OrbitPoincare orbit_poincare(int m, int n, int r) {
  if (m < 0 || n < 0 || r < 0 || r > std::min(m, n))
    throw InvalidArgument("orbit needs 0 <= r <= min(m, n)");
  return {m, n, r, poincare(GrassSpec{r, m}) * poincare_stiefel(r, n)};
}

SmoothingKind parse_smoothing_kind(const std::string& s) {
  if (s == "curve") return SmoothingKind::curve;
  if (s == "surface") return SmoothingKind::surface;
  if (s == "threefold") return SmoothingKind::threefold;
  throw InvalidArgument("unknown smoothing kind '" + s + "'");
}

BigInt smoothing_bound(int m, SmoothingKind kind) {
  if (m < 2) throw InvalidArgument("smoothing bounds need m >= 2");
  const DetSpec spec{m, m + 1, m};
  const int base = m * (m + 1);
  switch (kind) {
    case SmoothingKind::threefold:
      return -euler_complex_link(spec, base - 6) - 2;
    case SmoothingKind::surface:
      return euler_complex_link(spec, base - 5) - 2;
    case SmoothingKind::curve:
      break;
  }
  return -euler_complex_link(spec, base - 4) - 1;
}

BigInt hilbert_burch_chi(int m, int link_dim) {
  if (m < 1 || link_dim < 0) throw InvalidArgument("Hilbert-Burch table needs m >= 1");
  const int i = m * (m + 1) - link_dim - 3;
  if (m == 1) return link_dim == 0 ? polar_profile(1, 2, 0).at(0) : BigInt(0);
  return euler_complex_link(DetSpec{m, m + 1, m}, i);
}

std::vector<std::vector<BigInt>> hilbert_burch_chi_table(int max_m) {
  if (max_m < 1) throw InvalidArgument("Hilbert-Burch table needs max_m >= 1");
  std::vector<std::vector<BigInt>> rows(4);
  for (int d = 0; d <= 3; ++d)
    for (int m = 1; m <= max_m; ++m) rows[d].push_back(hilbert_burch_chi(m, d));
  return rows;
}

}  // namespace detlinks
