#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detlinks/grass_ring.hpp"
#include "detlinks/polar.hpp"
#include "detlinks/presentation.hpp"
#include "detlinks/tensor_calculus.hpp"
#include "reference_tables.hpp"

// Cross-checks shared by the unit suites and the acceptance binary. Each
// returns a description of the first failure, or nothing.
namespace checks {

using detlinks::BigInt;
using Failure = std::optional<std::string>;

/// Printed table entries that contradict duality with the other half of
/// their own table. The corrected value is the dual entry.
struct Misprint {
  int m, n, r, k;
  const char* printed;
  const char* corrected;
};

inline const std::vector<Misprint>& misprints() {
  static const std::vector<Misprint> list{
      {3, 3, 2, 4, "3", "6"},
      {3, 17, 2, 3, "554", "544"},
      {3, 18, 2, 2, "876", "867"},
      {3, 20, 2, 2, "1038", "1083"},
  };
  return list;
}

inline const reference::PolarRow* find_row(int m, int n, int r) {
  for (const auto& row : reference::polar_rows())
    if (row.m == m && row.n == n && row.r == r) return &row;
  return nullptr;
}

/// The published row with known misprints replaced, padded with zeros to
/// `length`.
inline std::vector<BigInt> expected_row(const reference::PolarRow& row, std::size_t length) {
  std::vector<BigInt> out;
  for (const auto& v : row.values) out.emplace_back(v);
  for (const auto& mp : misprints())
    if (mp.m == row.m && mp.n == row.n && mp.r == row.r) out.at(mp.k) = BigInt(mp.corrected);
  if (out.size() < length) out.resize(length, 0);
  return out;
}

inline std::string triple(int m, int n, int r) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
}

/// Computed profile against the published row, digit for digit.
inline Failure profile_matches_table(int m, int n, int r) {
  const auto* row = find_row(m, n, r);
  if (!row) return "no published row for " + triple(m, n, r);
  const auto p = detlinks::polar_profile(m, n, r);
  const auto want = expected_row(*row, p.values.size());
  if (want.size() != p.values.size()) return triple(m, n, r) + " has more published entries than k values";
  for (std::size_t k = 0; k < want.size(); ++k)
    if (want[k] != p.values[k])
      return triple(m, n, r) + " k=" + std::to_string(k) + ": computed " + p.values[k].get_str() +
             ", published " + want[k].get_str();
  return std::nullopt;
}

/// The correction equals the entry the duality pairs it with in the other
/// published row.
inline Failure misprint_is_dual_consistent(const Misprint& mp) {
  const auto* dual = find_row(mp.m, mp.n, mp.m - mp.r);
  if (!dual) return "no dual row for " + triple(mp.m, mp.n, mp.r);
  const int kd = 2 * (mp.m - mp.r) * mp.r - mp.k;
  if (kd < 0 || kd >= static_cast<int>(dual->values.size()) || dual->values[kd] != mp.corrected)
    return triple(mp.m, mp.n, mp.r) + " k=" + std::to_string(mp.k) + " correction not dual";
  return std::nullopt;
}

/// Nonzero raw signs alternate in k and vanish exactly where the value does.
inline Failure signs_alternate(const detlinks::PolarProfile& p) {
  int last = 0;
  for (int k = 0; k <= p.top(); ++k) {
    if ((p.raw_signs[k] == 0) != (p.values[k] == 0) || p.values[k] < 0)
      return triple(p.m, p.n, p.r) + " k=" + std::to_string(k) + " sign/value mismatch";
    if (p.raw_signs[k] == 0) continue;
    if (last != 0 && p.raw_signs[k] != -last)
      return triple(p.m, p.n, p.r) + " signs do not alternate at k=" + std::to_string(k);
    last = p.raw_signs[k];
  }
  return std::nullopt;
}

/// Every Schubert product of complementary-or-smaller degree, compared in
/// the brute-force quotient ring through Giambelli.
inline Failure oracle_agrees(const detlinks::GrassSpec& g) {
  using namespace detlinks;
  QuotientRingOracle oracle(g);
  auto ring = GrassRing::get(g);
  std::vector<PresentationPoly> gp;
  for (const auto& p : ring->basis()) gp.push_back(giambelli_polynomial(g, p));
  const auto gb = gaussian_binomial(g.m, g.r);
  const auto ranks = oracle.graded_ranks();
  for (int d = 0; d <= g.dimension(); ++d)
    if (BigInt(ranks[d]) != gb.coefficient(d))
      return "Grass" + triple(g.r, g.m, d) + " graded rank differs from the Gaussian binomial";
  for (std::size_t i = 0; i < ring->size(); ++i)
    for (std::size_t j = i; j < ring->size(); ++j) {
      if (ring->degree(i) + ring->degree(j) > ring->dimension()) continue;
      PresentationPoly rhs(presentation_weights(g.r));
      for (const auto& t : ring->product(i, j)) rhs += gp[t.index] * BigInt(t.coeff);
      if (!oracle.equivalent(gp[i] * gp[j], rhs))
        return "Grass(" + std::to_string(g.r) + "," + std::to_string(g.m) + "): " +
               ring->basis(i).to_string() + " * " + ring->basis(j).to_string();
    }
  return std::nullopt;
}

/// integrate(sigma_i sigma_j) over complementary degrees is a permutation
/// matrix pairing each class with its box complement.
inline Failure pairing_is_permutation(const detlinks::GrassSpec& g) {
  using namespace detlinks;
  auto ring = GrassRing::get(g);
  for (std::size_t i = 0; i < ring->size(); ++i) {
    auto [lo, hi] = ring->degree_range(ring->dimension() - ring->degree(i));
    for (std::size_t j = lo; j < hi; ++j) {
      const BigInt v = integrate(GrassClass::schubert(g, ring->basis(i)) *
                                 GrassClass::schubert(g, ring->basis(j)));
      const bool partner = ring->basis(j) == box_complement(ring->basis(i), g.rows(), g.cols());
      if (v != (partner ? 1 : 0))
        return "Grass(" + std::to_string(g.r) + "," + std::to_string(g.m) + ") pairing of " +
               ring->basis(i).to_string() + " and " + ring->basis(j).to_string();
    }
  }
  return std::nullopt;
}

inline Failure whitney_holds(const detlinks::GrassSpec& g) {
  using namespace detlinks;
  for (int k = 1; k <= g.m; ++k) {
    GrassClass sum(g);
    for (int i = 0; i <= std::min(k, g.r); ++i)
      if (k - i <= g.cols()) sum += chern_sub(g, i) * chern_quot(g, k - i);
    if (!sum.is_zero())
      return "Whitney fails on Grass(" + std::to_string(g.r) + "," + std::to_string(g.m) +
             ") in degree " + std::to_string(k);
  }
  return std::nullopt;
}

/// sum_{j=0..k} c_j s_{k-j} = 0 for 1 <= k <= dim, through general products.
inline Failure inversion_holds(const detlinks::ProdSpec& s, detlinks::TensorBundle bundle) {
  using namespace detlinks;
  const auto c = chern_tensor(s, bundle, s.dimension());
  const auto seg = segre_tensor(s, bundle, s.dimension());
  for (int k = 1; k <= s.dimension(); ++k) {
    ProdClass sum(s);
    for (int j = 0; j <= k; ++j) sum += mul_prod(c[j], seg[k - j]);
    if (!sum.is_zero())
      return s.to_string() + " " + to_string(bundle) + ": inversion fails in degree " + std::to_string(k);
  }
  return std::nullopt;
}

/// Production Chern series against the universal-polynomial validator.
inline Failure algorithms_agree(const detlinks::ProdSpec& s, detlinks::TensorBundle bundle) {
  using namespace detlinks;
  const auto a = chern_tensor_universal(s, bundle, s.dimension());
  const auto b = chern_tensor(s, bundle, s.dimension());
  for (int k = 0; k <= s.dimension(); ++k)
    if (a[k] != b[k])
      return s.to_string() + " " + to_string(bundle) + " differs in degree " + std::to_string(k);
  return std::nullopt;
}

}  // namespace checks
