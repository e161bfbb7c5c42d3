#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "detlinks/bigint.hpp"
#include "detlinks/partitions.hpp"

namespace detlinks {

/// M_{m,n}^s: m x n matrices of rank < s, stratified by the loci V^{r'} of
/// exact rank r' < s.
struct DetSpec {
  int m = 0;
  int n = 0;
  int s = 0;

  int r() const { return s - 1; }
  /// Complex dimension (m+n)r - r^2.
  int dimension() const { return (m + n) * r() - r() * r(); }
  /// Dimension of the singular locus M^{s-1}.
  int sing_dim() const { return (m + n) * (r() - 1) - (r() - 1) * (r() - 1); }
  /// L^i is smooth for sing_dim <= i < dimension.
  bool smooth_at(int i) const { return sing_dim() <= i && i < dimension(); }
  /// Throws InvalidArgument unless 1 <= s <= m <= n.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const DetSpec&, const DetSpec&) = default;
};

/// 1 - chi of the complex link of M^s along V^{r'}:
/// (-1)^{s-r'-1} binomial(m-r'-1, s-r'-1), for 0 <= r' < s.
BigInt egz_factor(const DetSpec& spec, int stratum_rank);

/// chi(L^i) by summing over the rank strata r' = 1..s-1 (the origin stratum
/// never contributes for i >= 0). Needs 0 <= i < dimension.
BigInt euler_complex_link(const DetSpec& spec, int i);

/// chi(L^i) for smooth links: sum_{k=0}^{d-i-1} (-1)^k e^{s-1,k}. Throws
/// DomainError outside the smooth range.
BigInt euler_complex_link_smooth(const DetSpec& spec, int i);

/// chi(L^i) - chi(L^{i+1}) as one stratum sum; needs 0 <= i < dimension-1.
BigInt euler_step(const DetSpec& spec, int i);

enum class TorsionStatus { free, unknown };
std::string to_string(TorsionStatus t);

struct LinkProfile {
  DetSpec spec;
  int codim = 0;
  BigInt chi;
  bool smooth = false;
  /// Complex dimension d - i - 1 of the link.
  int middle = 0;
  /// Betti numbers in degrees 0..middle.
  std::vector<BigInt> betti;
  /// Torsion of the middle group.
  TorsionStatus torsion = TorsionStatus::unknown;
};

/// Betti numbers of a smooth complex link: those of Grass(s-1, m) below the
/// middle, the middle one from the Euler characteristic. Throws DomainError
/// unless spec.smooth_at(i); throws ConsistencyError on a negative middle
/// Betti number.
LinkProfile betti_smooth_complex_link(const DetSpec& spec, int i);

/// Betti numbers of the smooth real link K^i (closed, real dimension
/// 2(d-i)-1). Entries the cohomology comparison does not reach are empty.
struct RealLinkProfile {
  DetSpec spec;
  int codim = 0;
  int real_dim = 0;
  std::vector<std::optional<BigInt>> betti;
  bool complete = false;
};

/// Complete for r = 1, i = 0 (K^0 ~ P^{m-1} x S^{2n-1}); otherwise the two
/// middle degrees are left open and the rest follows from Grass(r, m) and
/// Poincare duality.
RealLinkProfile betti_smooth_real_link(const DetSpec& spec, int i);

/// Integral cohomology groups of real links known from explicit geometry
/// (the sphere bundle of O(-3) over P^1 for a rational triple point).
struct KnownLinkGroup {
  DetSpec spec;
  int codim;
  int degree;
  const char* group;
  const char* source;
};
std::span<const KnownLinkGroup> known_real_link_groups();

/// (1+t)(1+t^3)...(1+t^{2n-1}).
IntPolynomial poincare_unitary(int n);
/// (1+t^{2(n-r)+1})...(1+t^{2n-1}) for the Stiefel manifold of r-frames in C^n.
IntPolynomial poincare_stiefel(int r, int n);

struct OrbitPoincare {
  int m = 0;
  int n = 0;
  int r = 0;
  IntPolynomial polynomial;
};

/// Poincare polynomial of the orbit V^r_{m,n}: Grass(r, m) times the Stiefel
/// factor. Needs 0 <= r <= min(m, n).
OrbitPoincare orbit_poincare(int m, int n, int r);

enum class SmoothingKind { curve, surface, threefold };
SmoothingKind parse_smoothing_kind(const std::string& s);

/// Lower bound for the middle Betti number of a smoothing of an isolated
/// Cohen-Macaulay codimension 2 singularity given by an m x (m+1) matrix.
BigInt smoothing_bound(int m, SmoothingKind kind);

/// chi of the smooth complex link of dimension link_dim of M_{m,m+1}^m, the
/// link of codimension m(m+1) - link_dim - 3. For m = 1 the 0-dimensional
/// entry is the multiplicity 1 of the point germ and the others vanish.
BigInt hilbert_burch_chi(int m, int link_dim);

/// Rows link_dim = 0..3, columns m = 1..max_m.
std::vector<std::vector<BigInt>> hilbert_burch_chi_table(int max_m);

}  // namespace detlinks
