#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "detlinks/bigint.hpp"
#include "detlinks/partitions.hpp"

namespace detlinks {

/// Grass(r, m): r-planes in C^m. Schubert classes live in the r x (m-r) box.
struct GrassSpec {
  int r = 0;
  int m = 0;

  int rows() const { return r; }
  int cols() const { return m - r; }
  /// Complex dimension r(m-r).
  int dimension() const { return r * (m - r); }
  Partition box() const { return Partition(std::vector<int>(r, m - r)); }
  /// Throws InvalidArgument unless 0 <= r <= m.
  void validate() const;

  friend bool operator==(const GrassSpec&, const GrassSpec&) = default;
  friend auto operator<=>(const GrassSpec&, const GrassSpec&) = default;
};

struct StructureTerm {
  std::uint32_t index;
  std::int64_t coeff;
};

/// Schubert basis of H*(Grass(r, m)). Pieri, structure-constant and
/// power-sum tables are built lazily and thread-safely on first use. One
/// instance per spec, shared read-only.
class GrassRing {
 public:
  explicit GrassRing(GrassSpec spec);

  /// Process-wide shared instance; construction is serialized.
  static std::shared_ptr<const GrassRing> get(const GrassSpec& spec);

  const GrassSpec& spec() const { return spec_; }
  std::size_t size() const { return basis_.size(); }
  int dimension() const { return spec_.dimension(); }
  const Partition& basis(std::size_t i) const { return basis_[i]; }
  const std::vector<Partition>& basis() const { return basis_; }
  int degree(std::size_t i) const { return basis_[i].weight(); }
  std::optional<std::size_t> index_of(const Partition& p) const;
  std::size_t top_index() const { return basis_.size() - 1; }
  /// Index of the box complement: the unique class pairing to 1 with i.
  std::size_t dual_index(std::size_t i) const { return dual_[i]; }
  /// Basis indices of Chern degree d (contiguous because of the graded order).
  std::pair<std::size_t, std::size_t> degree_range(int d) const;

  /// sigma_i * sigma_j expanded in the Schubert basis. The full table is
  /// built on first use.
  std::span<const StructureTerm> product(std::size_t i, std::size_t j) const {
    std::call_once(table_once_, [this] { build_table(); });
    return table_[i * basis_.size() + j];
  }

  /// p_j(y) * sigma_i for j >= 1, where y are the Chern roots of S^dual and
  /// sigma_lambda = s_lambda(y): a signed sum over border strips of size j
  /// (Murnaghan-Nakayama), truncated to the box. Built on first use.
  std::span<const StructureTerm> power_sum(int j, std::size_t i) const;

  /// Pieri rules on a dense coefficient vector: multiply by sigma_(k)
  /// (horizontal strips) or by sigma_(1^k) (vertical strips).
  std::vector<std::int64_t> apply_row(int k, const std::vector<std::int64_t>& v) const;
  std::vector<std::int64_t> apply_column(int k, const std::vector<std::int64_t>& v) const;

 private:
  void build_pieri() const;
  void build_table() const;
  void build_power_sums() const;
  std::vector<std::int64_t> giambelli_times(std::size_t lambda, std::size_t mu) const;

  GrassSpec spec_;
  std::vector<Partition> basis_;
  std::unordered_map<Partition, std::size_t> index_;
  std::vector<std::size_t> dual_;
  std::vector<std::size_t> degree_start_;
  mutable std::once_flag pieri_once_, table_once_, power_once_;
  // pieri_row_[k][i]: basis indices nu with nu / basis_[i] a horizontal k-strip.
  mutable std::vector<std::vector<std::vector<std::uint32_t>>> pieri_row_;
  mutable std::vector<std::vector<std::vector<std::uint32_t>>> pieri_col_;
  mutable std::vector<std::vector<StructureTerm>> table_;
  // power_[j-1][i]: border-strip expansion of p_j * sigma_i.
  mutable std::vector<std::vector<std::vector<StructureTerm>>> power_;
};

/// Element of H*(Grass(r, m)) in the Schubert basis; zero coefficients are
/// never stored.
class GrassClass {
 public:
  explicit GrassClass(GrassSpec spec);

  static GrassClass zero(GrassSpec spec) { return GrassClass(spec); }
  static GrassClass one(GrassSpec spec) { return schubert(spec, Partition{}); }
  /// Throws InvalidArgument if p does not fit the box.
  static GrassClass schubert(GrassSpec spec, const Partition& p, const BigInt& coeff = 1);

  const GrassSpec& spec() const { return spec_; }
  const std::map<Partition, BigInt>& coords() const { return coords_; }
  BigInt coeff(const Partition& p) const;
  bool is_zero() const { return coords_.empty(); }
  /// True if every term has the same Chern degree (zero counts as homogeneous).
  bool is_homogeneous() const;

  void add(const Partition& p, const BigInt& c);

  GrassClass& operator+=(const GrassClass& o);
  GrassClass& operator-=(const GrassClass& o);
  GrassClass& operator*=(const BigInt& s);
  friend GrassClass operator+(GrassClass a, const GrassClass& b) { return a += b; }
  friend GrassClass operator-(GrassClass a, const GrassClass& b) { return a -= b; }
  friend GrassClass operator*(GrassClass a, const BigInt& s) { return a *= s; }
  friend bool operator==(const GrassClass&, const GrassClass&) = default;

  /// Dense coordinates indexed like GrassRing::basis().
  std::vector<BigInt> dense(const GrassRing& ring) const;
  static GrassClass from_dense(const GrassRing& ring, std::span<const BigInt> v);

  std::string to_string() const;

 private:
  void check_same(const GrassClass& o) const;
  GrassSpec spec_;
  std::map<Partition, BigInt> coords_;
};

/// Cup product. Throws InvalidArgument for classes on different Grassmannians.
GrassClass mul(const GrassClass& a, const GrassClass& b);
inline GrassClass operator*(const GrassClass& a, const GrassClass& b) { return mul(a, b); }
GrassClass power(const GrassClass& a, int k);

/// c_i of the tautological subbundle: (-1)^i sigma_(1^i), 0 <= i <= r.
/// On Grass(m, m) the subbundle is trivial and c_i = 0 for i > 0.
GrassClass chern_sub(const GrassSpec& spec, int i);
/// c_k of the tautological quotient bundle: sigma_(k), 0 <= k <= m - r.
/// On Grass(0, m) the quotient is trivial and c_k = 0 for k > 0.
GrassClass chern_quot(const GrassSpec& spec, int k);

/// Coefficient of the fundamental class sigma_box.
BigInt integrate(const GrassClass& a);

/// Poincare polynomial in a variable of cohomological degree 1
/// (so Schubert classes contribute t^{2|lambda|}).
IntPolynomial poincare(const GrassSpec& spec);

}  // namespace detlinks
