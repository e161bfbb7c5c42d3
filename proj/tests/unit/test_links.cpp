#include <doctest.h>

#include "../common/reference_tables.hpp"
#include "detlinks/errors.hpp"
#include "detlinks/grass_ring.hpp"
#include "detlinks/links.hpp"
#include "detlinks/polar.hpp"

using namespace detlinks;

namespace {

std::vector<DetSpec> specs_in_scope(int max_m, int max_n) {
  std::vector<DetSpec> out;
  for (int m = 1; m <= max_m; ++m)
    for (int n = m; n <= max_n; ++n)
      for (int s = 1; s <= m; ++s) out.push_back({m, n, s});
  return out;
}

BigInt alternating_sum(const std::vector<BigInt>& b) {
  BigInt sum = 0;
  for (std::size_t k = 0; k < b.size(); ++k) sum += k % 2 ? -b[k] : b[k];
  return sum;
}

}  // namespace

TEST_CASE("determinantal specs") {
  const DetSpec x{3, 4, 3};
  CHECK(x.r() == 2);
  CHECK(x.dimension() == 10);
  CHECK(x.sing_dim() == 6);
  CHECK(x.smooth_at(6));
  CHECK_FALSE(x.smooth_at(5));
  CHECK_FALSE(x.smooth_at(10));
  CHECK(x.to_string() == "M^3_{3,4}");
  CHECK_THROWS_AS(DetSpec({3, 2, 1}).validate(), InvalidArgument);
  CHECK_THROWS_AS(DetSpec({3, 4, 4}).validate(), InvalidArgument);
  CHECK_THROWS_AS(DetSpec({3, 4, 0}).validate(), InvalidArgument);
}

TEST_CASE("Ebeling-Gusein-Zade factors") {
  CHECK(egz_factor({3, 4, 3}, 1) == -1);
  CHECK(egz_factor({3, 4, 3}, 2) == 1);
  CHECK(egz_factor({2, 3, 2}, 0) == -1);
  CHECK(egz_factor({5, 6, 4}, 1) == 3);
  CHECK_THROWS_AS(egz_factor({3, 4, 3}, 3), InvalidArgument);
  CHECK_THROWS_AS(egz_factor({3, 4, 3}, -1), InvalidArgument);
}

TEST_CASE("Euler characteristics of the worked example") {
  const DetSpec x{3, 4, 3};
  CHECK(euler_complex_link(x, 6) == -7);
  CHECK(euler_complex_link(x, 5) == -7);
  CHECK(euler_complex_link(x, 9) == 6);
  CHECK(euler_complex_link_smooth(x, 6) == -7);
  CHECK(euler_step(x, 5) == 0);
  CHECK(euler_step(x, 6) == -7 - euler_complex_link(x, 7));
  CHECK(euler_complex_link({2, 3, 2}, 0) == 2);
  CHECK_THROWS_AS(euler_complex_link(x, 10), InvalidArgument);
  CHECK_THROWS_AS(euler_complex_link(x, -1), InvalidArgument);
  CHECK_THROWS_AS(euler_step(x, 9), InvalidArgument);
  CHECK_THROWS_WITH_AS(euler_complex_link_smooth(x, 5), "link not smooth at this codimension",
                       DomainError);
}

TEST_CASE("stratum sums: steps, smooth shortcut and multiplicity") {
  for (const auto& x : specs_in_scope(4, 5)) {
    CAPTURE(x.to_string());
    const int d = x.dimension();
    for (int i = 0; i + 1 < d; ++i)
      CHECK(euler_step(x, i) == euler_complex_link(x, i) - euler_complex_link(x, i + 1));
    for (int i = 0; i < d; ++i)
      if (x.smooth_at(i)) CHECK(euler_complex_link_smooth(x, i) == euler_complex_link(x, i));
    if (d > 0) CHECK(euler_complex_link(x, d - 1) == polar_profile(x.m, x.n, x.r()).values[0]);
  }
}

TEST_CASE("Hilbert-Burch Euler characteristics") {
  const auto table = hilbert_burch_chi_table(4);
  REQUIRE(table.size() == 4);
  const std::vector<std::vector<long>> columns{{1, 0, 0, 0}, {3, -1, 2, 2}, {6, -10, 17, -7},
                                               {10, -30, 75, -101}};
  for (int m = 1; m <= 4; ++m)
    for (int d = 0; d <= 3; ++d) CHECK(table[d][m - 1] == columns[m - 1][d]);
  for (int m = 1; m <= 7; ++m)
    for (int d = 0; d <= 3; ++d) CHECK(hilbert_burch_chi(m, d) == reference::hilbert_burch_chi()[d][m - 1]);
  CHECK_THROWS_AS(hilbert_burch_chi(0, 0), InvalidArgument);
  CHECK_THROWS_AS(hilbert_burch_chi(3, -1), InvalidArgument);
}

TEST_CASE("Betti numbers of smooth complex links") {
  const auto a = betti_smooth_complex_link({3, 4, 3}, 6);
  CHECK(a.betti == std::vector<BigInt>{1, 0, 1, 9});
  CHECK(a.chi == -7);
  CHECK(a.middle == 3);
  CHECK(a.smooth);
  CHECK(a.torsion == TorsionStatus::unknown);

  const auto b = betti_smooth_complex_link({2, 3, 2}, 0);
  CHECK(b.betti == std::vector<BigInt>{1, 0, 1, 0});
  CHECK(b.torsion == TorsionStatus::free);

  // Rank 1, codimension 0: projective space padded with zeros.
  const auto c = betti_smooth_complex_link({3, 5, 2}, 0);
  std::vector<BigInt> expected(static_cast<std::size_t>(c.middle + 1), 0);
  for (int k = 0; k <= 4; k += 2) expected[k] = 1;
  CHECK(c.betti == expected);

  CHECK_THROWS_WITH_AS(betti_smooth_complex_link({3, 4, 3}, 5), "link not smooth at this codimension",
                       DomainError);
  CHECK(to_string(TorsionStatus::free) == "free");
}

TEST_CASE("Betti invariants for every smooth link with m <= 5, n <= 6") {
  for (const auto& x : specs_in_scope(5, 6)) {
    const auto ranks = gaussian_binomial(x.m, x.r());
    for (int i = 0; i < x.dimension(); ++i) {
      if (!x.smooth_at(i)) continue;
      const auto p = betti_smooth_complex_link(x, i);
      CAPTURE(x.to_string());
      CAPTURE(i);
      CHECK(alternating_sum(p.betti) == p.chi);
      CHECK(p.betti[p.middle] >= 0);
      for (int k = 0; k < p.middle; ++k)
        CHECK(p.betti[k] == (k % 2 ? BigInt(0) : ranks.coefficient(k / 2)));
    }
  }
}

TEST_CASE("real links") {
  const auto r = betti_smooth_real_link({2, 3, 2}, 0);
  CHECK(r.complete);
  CHECK(r.real_dim == 7);
  REQUIRE(r.betti.size() == 8);
  const std::vector<long> expected{1, 0, 1, 0, 0, 1, 0, 1};
  for (int k = 0; k < 8; ++k) CHECK(r.betti[k] == expected[k]);

  const auto g = betti_smooth_real_link({3, 4, 3}, 6);
  CHECK_FALSE(g.complete);
  CHECK(g.real_dim == 7);
  CHECK(g.betti[0] == BigInt(1));
  CHECK_FALSE(g.betti[3].has_value());
  CHECK_FALSE(g.betti[4].has_value());
  CHECK(g.betti[7] == BigInt(1));

  const auto known = known_real_link_groups();
  REQUIRE(known.size() == 2);
  CHECK(std::string(known[0].group) == "Z/3");
  CHECK(known[0].spec == DetSpec{2, 3, 2});
}

TEST_CASE("orbit and group Poincare polynomials") {
  CHECK(poincare_unitary(1) == IntPolynomial({{0, 1}, {1, 1}}));
  for (int n = 1; n <= 5; ++n) CHECK(poincare_stiefel(n, n) == poincare_unitary(n));
  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= 5; ++n) {
      IntPolynomial proj;
      for (int k = 0; k < m; ++k) proj += IntPolynomial::monomial(2 * k);
      const auto sphere = IntPolynomial({{0, 1}, {2 * n - 1, 1}});
      CHECK(orbit_poincare(m, n, 1).polynomial == proj * sphere);
      for (int r = 1; r <= m; ++r) {
        const auto o = orbit_poincare(m, n, r);
        CHECK(o.polynomial.evaluate(-1) == 0);
        CHECK(o.polynomial == poincare(GrassSpec{r, m}) * poincare_stiefel(r, n));
      }
      CHECK(orbit_poincare(m, n, 0).polynomial == IntPolynomial::constant(1));
    }
  CHECK_THROWS_AS(orbit_poincare(2, 3, 3), InvalidArgument);
}

TEST_CASE("smoothing bounds") {
  CHECK(smoothing_bound(3, SmoothingKind::threefold) == 5);
  CHECK(smoothing_bound(3, SmoothingKind::surface) == 15);
  CHECK(smoothing_bound(2, SmoothingKind::curve) == 0);
  CHECK(parse_smoothing_kind("surface") == SmoothingKind::surface);
  CHECK_THROWS_AS(parse_smoothing_kind("fourfold"), InvalidArgument);
  CHECK_THROWS_AS(smoothing_bound(1, SmoothingKind::curve), InvalidArgument);
}
