#include "detlinks/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "detlinks/errors.hpp"

namespace detlinks {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidArgument("partition with a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : p[0], 0);
  for (int row : p.parts())
    for (int c = 0; c < row; ++c) ++out[c];
  return Partition(std::move(out));
}

Partition box_complement(const Partition& p, int rows, int cols) {
  if (!p.fits(rows, cols)) throw InvalidArgument("partition does not fit the box");
  std::vector<int> out(rows);
  for (int i = 0; i < rows; ++i) out[i] = cols - p[rows - 1 - i];
  return Partition(std::move(out));
}

namespace {

// Appends partitions of `remaining` with at most `rows` parts, each <= `cap`,
// in lexicographically descending order.
void fill_weight(int remaining, int rows, int cap, std::vector<int>& prefix,
                 std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (rows == 0) return;
  for (int part = std::min(cap, remaining); part >= 1; --part) {
    if (static_cast<long>(part) * rows < remaining) break;
    prefix.push_back(part);
    fill_weight(remaining - part, rows - 1, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols, std::optional<int> weight) {
  if (rows < 0 || cols < 0) throw InvalidArgument("negative box dimensions");
  std::vector<Partition> out;
  std::vector<int> prefix;
  const int lo = weight.value_or(0);
  const int hi = weight.value_or(rows * cols);
  for (int w = lo; w <= hi && w <= rows * cols; ++w) fill_weight(w, rows, cols, prefix, out);
  return out;
}

IntPolynomial::IntPolynomial(std::map<int, BigInt> coeffs) {
  for (auto& [d, c] : coeffs) add_term(d, c);
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return monomial(0, c); }

IntPolynomial IntPolynomial::monomial(int degree, const BigInt& c) {
  IntPolynomial p;
  p.add_term(degree, c);
  return p;
}

void IntPolynomial::add_term(int degree, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt IntPolynomial::coefficient(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  int last = degree();
  for (int d = last; d >= 0; --d) acc = acc * t + coefficient(d);
  return acc;
}

bool IntPolynomial::is_palindromic() const {
  if (coeffs_.empty()) return true;
  int lo = coeffs_.begin()->first, hi = degree();
  for (auto& [d, c] : coeffs_)
    if (coefficient(lo + hi - d) != c) return false;
  return true;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [d, c] : coeffs_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (d != 1) os << '^' << d;
  }
  return os.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (auto& [d, c] : o.coeffs_) add_term(d, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  for (auto& [d, c] : o.coeffs_) add_term(d, -c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out;
  for (auto& [da, ca] : a.coeffs_)
    for (auto& [db, cb] : b.coeffs_) out.add_term(da + db, ca * cb);
  return out;
}

IntPolynomial IntPolynomial::stretched(int k) const {
  IntPolynomial out;
  for (auto& [d, c] : coeffs_) out.add_term(d * k, c);
  return out;
}

IntPolynomial gaussian_binomial(int m, int r) {
  if (m < 0 || r < 0 || r > m) throw InvalidArgument("gaussian_binomial needs 0 <= r <= m");
  // Pascal rule [m, r] = [m-1, r-1] + t^r [m-1, r], row by row.
  std::vector<IntPolynomial> row{IntPolynomial::constant(1)};
  for (int mm = 1; mm <= m; ++mm) {
    std::vector<IntPolynomial> next(mm + 1);
    next[0] = IntPolynomial::constant(1);
    next[mm] = IntPolynomial::constant(1);
    for (int rr = 1; rr < mm; ++rr)
      next[rr] = row[rr - 1] + IntPolynomial::monomial(rr) * row[rr];
    row = std::move(next);
  }
  return row[r];
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace detlinks
