#pragma once

#include <memory>
#include <string>
#include <vector>

#include "detlinks/exec.hpp"
#include "detlinks/grass_ring.hpp"
#include "detlinks/sparse_poly.hpp"

namespace detlinks {

/// G = Grass(r, n) x Grass(r, m) with r <= m <= n. The first factor carries
/// S1, Q1 (subbundle of O^n), the second S2, Q2 (subbundle of O^m).
struct ProdSpec {
  int r = 0;
  int n = 0;
  int m = 0;

  GrassSpec first() const { return {r, n}; }
  GrassSpec second() const { return {r, m}; }
  int dimension() const { return r * (n - r) + r * (m - r); }
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const ProdSpec&, const ProdSpec&) = default;
  friend auto operator<=>(const ProdSpec&, const ProdSpec&) = default;
};

/// Kunneth basis of H*(G): pairs of Schubert classes, flattened as
/// first_index * second.size() + second_index.
class ProdRing {
 public:
  explicit ProdRing(ProdSpec spec);
  static std::shared_ptr<const ProdRing> get(const ProdSpec& spec);

  const ProdSpec& spec() const { return spec_; }
  const GrassRing& first() const { return *first_; }
  const GrassRing& second() const { return *second_; }
  std::size_t size() const { return first_->size() * second_->size(); }
  int dimension() const { return spec_.dimension(); }

  std::size_t index(std::size_t i1, std::size_t i2) const { return i1 * second_->size() + i2; }
  std::size_t first_of(std::size_t idx) const { return idx / second_->size(); }
  std::size_t second_of(std::size_t idx) const { return idx % second_->size(); }
  int degree(std::size_t idx) const {
    return first_->degree(first_of(idx)) + second_->degree(second_of(idx));
  }
  std::size_t top_index() const { return index(first_->top_index(), second_->top_index()); }
  std::size_t dual_index(std::size_t idx) const {
    return index(first_->dual_index(first_of(idx)), second_->dual_index(second_of(idx)));
  }

 private:
  ProdSpec spec_;
  std::shared_ptr<const GrassRing> first_;
  std::shared_ptr<const GrassRing> second_;
};

struct ProdTerm {
  Partition first;
  Partition second;
  BigInt coeff;
};

/// Element of H*(G). Stored densely over the Kunneth basis; terms() reports
/// only the nonzero coordinates.
class ProdClass {
 public:
  explicit ProdClass(ProdSpec spec);
  explicit ProdClass(std::shared_ptr<const ProdRing> ring);

  static ProdClass zero(ProdSpec spec) { return ProdClass(spec); }
  static ProdClass one(ProdSpec spec);
  static ProdClass basis(ProdSpec spec, const Partition& first, const Partition& second,
                         const BigInt& coeff = 1);
  /// Exterior product a x b of classes pulled back from the two factors.
  static ProdClass pure(const ProdSpec& spec, const GrassClass& a, const GrassClass& b);

  const ProdSpec& spec() const { return ring_->spec(); }
  const ProdRing& ring() const { return *ring_; }
  const std::shared_ptr<const ProdRing>& ring_ptr() const { return ring_; }
  const std::vector<BigInt>& coords() const { return coords_; }
  std::vector<BigInt>& mutable_coords() { return coords_; }

  BigInt coeff(const Partition& first, const Partition& second) const;
  std::vector<ProdTerm> terms() const;
  std::vector<std::size_t> support() const;
  bool is_zero() const;
  /// True if all nonzero terms share one Chern degree.
  bool is_homogeneous() const;
  /// Chern degree of the nonzero terms, -1 for zero or inhomogeneous classes.
  int degree() const;

  ProdClass& operator+=(const ProdClass& o);
  ProdClass& operator-=(const ProdClass& o);
  ProdClass& operator*=(const BigInt& s);
  friend ProdClass operator+(ProdClass a, const ProdClass& b) { return a += b; }
  friend ProdClass operator-(ProdClass a, const ProdClass& b) { return a -= b; }
  friend ProdClass operator*(ProdClass a, const BigInt& s) { return a *= s; }
  friend bool operator==(const ProdClass& a, const ProdClass& b);

  /// Divides every coordinate by k; throws ConsistencyError if inexact.
  void divide_exact(long k);

  std::string to_string() const;

 private:
  void check_same(const ProdClass& o) const;
  std::shared_ptr<const ProdRing> ring_;
  std::vector<BigInt> coords_;
};

/// Cup product on G, factorwise through the Schubert structure constants.
/// Exec::serial is the reference kernel; Exec::parallel splits the left
/// operand across OpenMP threads with private accumulators.
ProdClass mul_prod(const ProdClass& a, const ProdClass& b, Exec exec = Exec::parallel);

/// Coefficient of (sigma_box, sigma_box).
BigInt integrate_prod(const ProdClass& a);

/// integrate_prod(a * b) computed through Poincare duality without forming
/// the product.
BigInt pairing(const ProdClass& a, const ProdClass& b);

enum class TensorBundle { sub_tensor, quot_tensor };
enum class SeriesFlavor { chern, segre };

std::string to_string(TensorBundle b);

/// Ranks (rank E, rank F) of the two factors of the tensor bundle E x F.
std::pair<int, int> tensor_factor_ranks(const ProdSpec& spec, TensorBundle bundle);

/// p_k(E x F) * v, with p_0 the rank. Uses p_k(E x F) = sum_j C(k,j)
/// p_j(E) p_{k-j}(F) and the border-strip action of each factor's power sums,
/// so no general product is formed.
ProdClass apply_tensor_power_sum(const ProdClass& v, TensorBundle bundle, int k,
                                 Exec exec = Exec::parallel);

/// Degree-indexed characteristic classes of S1 x S2 or Q1 x Q2; terms[k]
/// has Chern degree k and terms[0] is the unit.
struct CharSeries {
  ProdSpec spec;
  SeriesFlavor flavor = SeriesFlavor::chern;
  TensorBundle bundle = TensorBundle::sub_tensor;
  std::vector<ProdClass> terms;

  int up_to() const { return static_cast<int>(terms.size()) - 1; }
  const ProdClass& operator[](std::size_t k) const { return terms.at(k); }
};

/// Total Chern class of the tensor bundle up to degree `up_to` (clamped to
/// dim G). Production path: Newton's identity k c_k = sum_i (-1)^{i-1} p_i
/// c_{k-i} with every product p_i * c_{k-i} reduced into H*(G) at once
/// (see apply_tensor_power_sum). Results are memoized per (spec, bundle)
/// and extended incrementally.
CharSeries chern_tensor(const ProdSpec& spec, TensorBundle bundle, int up_to,
                        Exec exec = Exec::parallel);

/// Segre classes: s_0 = 1, sum_{j=0..k} c_j s_{k-j} = 0 for k >= 1. Computed
/// by the same Newton recursion with the power sums negated.
CharSeries segre_tensor(const ProdSpec& spec, TensorBundle bundle, int up_to,
                        Exec exec = Exec::parallel);

/// Validator path: universal polynomials in the factor Chern classes,
/// obtained from formal Chern roots, evaluated on G without using mul_prod.
CharSeries chern_tensor_universal(const ProdSpec& spec, TensorBundle bundle, int up_to);

/// c_degree(E x F) as a polynomial in u_i = c_i(E) (weight i, variables
/// 1..rank_e) and v_j = c_j(F) (weight j, variables rank_e+1..). Memoized.
SparsePoly universal_tensor_chern(int rank_e, int rank_f, int degree);

/// Drops every memoized series (used by benchmarks and cache tests).
void clear_series_cache();

}  // namespace detlinks
