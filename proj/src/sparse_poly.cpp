#include "detlinks/sparse_poly.hpp"

#include <sstream>

#include "detlinks/errors.hpp"

namespace detlinks {

SparsePoly SparsePoly::constant(std::vector<int> weights, const BigInt& c) {
  SparsePoly p(std::move(weights));
  p.add_term(Exponent(p.num_vars(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::vector<int> weights, int index) {
  SparsePoly p(std::move(weights));
  if (index < 0 || index >= p.num_vars()) throw InvalidArgument("variable index out of range");
  Exponent e(p.num_vars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

BigInt SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int SparsePoly::weighted_degree(const Exponent& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights_[i];
  return d;
}

int SparsePoly::degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, weighted_degree(e));
  return d;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = weighted_degree(terms_.begin()->first);
  for (auto& [e, c] : terms_)
    if (weighted_degree(e) != d) return false;
  return true;
}

SparsePoly SparsePoly::homogeneous_part(int d) const {
  SparsePoly out(weights_);
  for (auto& [e, c] : terms_)
    if (weighted_degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

void SparsePoly::add_term(const Exponent& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != num_vars()) throw InvalidArgument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (o.weights_ != weights_) throw InvalidArgument("polynomial rings differ");
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (o.weights_ != weights_) throw InvalidArgument("polynomial rings differ");
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const BigInt& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

SparsePoly SparsePoly::multiply(const SparsePoly& a, const SparsePoly& b, int max_degree) {
  if (a.weights_ != b.weights_) throw InvalidArgument("polynomial rings differ");
  SparsePoly out(a.weights_);
  Exponent e(a.num_vars());
  for (auto& [ea, ca] : a.terms_) {
    const int da = a.weighted_degree(ea);
    for (auto& [eb, cb] : b.terms_) {
      if (max_degree >= 0 && da + a.weighted_degree(eb) > max_degree) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::pow(int k, int max_degree) const {
  SparsePoly out = constant(weights_, 1);
  for (int i = 0; i < k; ++i) out = multiply(out, *this, max_degree);
  return out;
}

std::string SparsePoly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lex monomial first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool constant_term = true;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!constant_term) mono << '*';
      constant_term = false;
      mono << prefix << (i + 1);
      if (e[i] > 1) mono << '^' << e[i];
    }
    if (constant_term)
      os << mag;
    else if (mag == 1)
      os << mono.str();
    else
      os << mag << '*' << mono.str();
  }
  return os.str();
}

}  // namespace detlinks
