#pragma once

#include <map>
#include <string>
#include <vector>

#include "detlinks/bigint.hpp"

namespace detlinks {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over Z in a fixed number of variables.
/// Each variable carries a positive weight; degree() is the weighted degree.
/// Terms are kept in a map ordered lexicographically on the exponent vector,
/// so the last entry is the lex-leading monomial.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::vector<int> weights) : weights_(std::move(weights)) {}

  static SparsePoly constant(std::vector<int> weights, const BigInt& c);
  /// The variable x_{index} (0-based).
  static SparsePoly variable(std::vector<int> weights, int index);

  int num_vars() const { return static_cast<int>(weights_.size()); }
  const std::vector<int>& weights() const { return weights_; }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(const Exponent& e) const;
  int weighted_degree(const Exponent& e) const;
  /// Maximum weighted degree of a term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  /// Part of weighted degree exactly d.
  SparsePoly homogeneous_part(int d) const;

  void add_term(const Exponent& e, const BigInt& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const BigInt& s);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= -1; }
  friend SparsePoly operator*(SparsePoly a, const BigInt& s) { return a *= s; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    return multiply(a, b, -1);
  }
  /// Product with every term of weighted degree above max_degree dropped;
  /// max_degree < 0 keeps everything.
  static SparsePoly multiply(const SparsePoly& a, const SparsePoly& b, int max_degree);
  SparsePoly pow(int k, int max_degree = -1) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Human-readable form with variables named prefix1, prefix2, ...
  std::string to_string(const std::string& prefix = "x") const;

 private:
  std::vector<int> weights_;
  std::map<Exponent, BigInt> terms_;
};

}  // namespace detlinks
