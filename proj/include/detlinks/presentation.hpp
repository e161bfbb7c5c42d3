#pragma once

#include <vector>

#include "detlinks/grass_ring.hpp"
#include "detlinks/sparse_poly.hpp"

namespace detlinks {

/// Polynomial in x_1..x_r (Chern classes of the tautological subbundle),
/// deg x_i = i.
using PresentationPoly = SparsePoly;

std::vector<int> presentation_weights(int r);

/// Generators (h_1^(n), ..., h_r^(n)) for n = 0..n_max, obtained from
/// h^(0) = (x_1, ..., x_r) by h_i^(n+1) = -x_i h_1^(n) + h_{i+1}^(n).
/// h^(m-r) generates the relation ideal of Grass(r, m).
std::vector<std::vector<PresentationPoly>> presentation_h(int r, int n_max);

/// The r generators of the relation ideal J of H*(Grass(r, m)) = Z[x]/J.
std::vector<PresentationPoly> grassmann_relations(const GrassSpec& spec);

/// sigma_lambda as a polynomial in x: det(e_{lambda'_i - i + j}) with
/// e_k = c_k(S^dual) = (-1)^k x_k.
PresentationPoly giambelli_polynomial(const GrassSpec& spec, const Partition& lambda);

/// Brute-force model of Z[x_1..x_r]/J built degree by degree with exact
/// integer row reduction. Independent of the Pieri tables in GrassRing.
class QuotientRingOracle {
 public:
  static constexpr long kMaxRank = 200;

  /// Throws InvalidArgument past kMaxRank and ConsistencyError if a graded
  /// piece of J is not a direct summand (non-unit pivot) or if the quotient
  /// survives above the top degree.
  explicit QuotientRingOracle(GrassSpec spec);

  const GrassSpec& spec() const { return spec_; }
  /// Ranks of the graded pieces in Chern degree 0..dim.
  std::vector<long> graded_ranks() const;
  long rank() const;

  /// Monomials (exponent vectors) not in the leading ideal, degree d.
  const std::vector<Exponent>& standard_monomials(int d) const { return pieces_[d].standard; }
  /// Standard monomial basis across all degrees (degree-major).
  std::vector<Exponent> basis() const;

  /// Coordinates of f mod J over basis(). f may be inhomogeneous.
  std::vector<BigInt> normal_form(const PresentationPoly& f) const;
  bool equivalent(const PresentationPoly& a, const PresentationPoly& b) const;

  /// Structure constants: product of basis monomials i and j, reduced.
  std::vector<BigInt> multiply_basis(std::size_t i, std::size_t j) const;

 private:
  struct Piece {
    std::vector<Exponent> monomials;              // column order
    std::vector<std::vector<BigInt>> pivot_rows;  // echelon rows, unit pivots
    std::vector<std::size_t> pivot_cols;
    std::vector<Exponent> standard;
    std::vector<std::size_t> standard_cols;
  };
  Piece build_piece(int d, const std::vector<PresentationPoly>& gens) const;
  std::vector<BigInt> reduce_piece(int d, const PresentationPoly& homogeneous) const;

  GrassSpec spec_;
  std::vector<int> weights_;
  std::vector<Piece> pieces_;
  std::vector<std::size_t> offsets_;
};

/// Exponent vectors of weighted degree d for weights (1, 2, ..., r), sorted
/// lexicographically descending (powers of x_1 first).
std::vector<Exponent> weighted_monomials(int r, int d);

}  // namespace detlinks
