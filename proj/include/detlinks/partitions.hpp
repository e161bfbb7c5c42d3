#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "detlinks/bigint.hpp"

namespace detlinks {

/// Weakly decreasing sequence of positive parts; trailing zeros are dropped
/// on construction so equal diagrams compare equal.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument if the parts increase or are negative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  /// Part i, or 0 past the last row.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool fits(int rows, int cols) const {
    return length() <= rows && (parts_.empty() || parts_.front() <= cols);
  }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

Partition conjugate(const Partition& p);

/// Complement of p inside the rows x cols rectangle, rotated by 180 degrees.
Partition box_complement(const Partition& p, int rows, int cols);

/// All partitions with at most `rows` parts, each at most `cols`, optionally of
/// one weight. Ordered by weight, then lexicographically descending.
std::vector<Partition> partitions_in_box(int rows, int cols,
                                         std::optional<int> weight = std::nullopt);

/// Polynomial in one variable with big integer coefficients; zero
/// coefficients are never stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::map<int, BigInt> coeffs);
  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(int degree, const BigInt& c = 1);

  const std::map<int, BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int degree) const;
  /// -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt evaluate(const BigInt& t) const;
  BigInt coefficient_sum() const { return evaluate(1); }
  bool is_palindromic() const;

  /// e.g. "1 + t^2 + 2*t^4"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "t") const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Substitute t -> t^k.
  IntPolynomial stretched(int k) const;

 private:
  void add_term(int degree, const BigInt& c);
  std::map<int, BigInt> coeffs_;
};

/// q-binomial [m choose r]; coefficient of t^j counts partitions of weight j in
/// the r x (m-r) box. Throws InvalidArgument unless 0 <= r <= m.
IntPolynomial gaussian_binomial(int m, int r);

BigInt binomial(long n, long k);

}  // namespace detlinks

template <>
struct std::hash<detlinks::Partition> {
  std::size_t operator()(const detlinks::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    return h;
  }
};
