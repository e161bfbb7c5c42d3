#include "detlinks/grass_ring.hpp"

#include <mutex>
#include <sstream>

#include "detlinks/errors.hpp"

namespace detlinks {

void GrassSpec::validate() const {
  if (r < 0 || m < 0 || r > m)
    throw InvalidArgument("Grass(" + std::to_string(r) + "," + std::to_string(m) +
                          ") needs 0 <= r <= m");
}

GrassRing::GrassRing(GrassSpec spec) : spec_(spec) {
  spec_.validate();
  basis_ = partitions_in_box(spec_.rows(), spec_.cols());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  dual_.resize(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    dual_[i] = index_.at(box_complement(basis_[i], spec_.rows(), spec_.cols()));
  degree_start_.assign(dimension() + 2, basis_.size());
  for (std::size_t i = basis_.size(); i-- > 0;) degree_start_[degree(i)] = i;
  for (int d = dimension(); d >= 0; --d)
    if (degree_start_[d] > degree_start_[d + 1]) degree_start_[d] = degree_start_[d + 1];

}

void GrassRing::build_table() const {
  std::call_once(pieri_once_, [this] { build_pieri(); });
  const std::size_t n = basis_.size();
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (degree(i) + degree(j) > dimension()) continue;
      std::vector<std::int64_t> v = giambelli_times(i, j);
      std::vector<StructureTerm> terms;
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] != 0) terms.push_back({static_cast<std::uint32_t>(k), v[k]});
      table_[i * n + j] = terms;
      table_[j * n + i] = std::move(terms);
    }
  }
}

void GrassRing::build_power_sums() const {
  const int rows = spec_.rows(), cols = spec_.cols();
  power_.assign(static_cast<std::size_t>(dimension()), {});
  for (auto& per_j : power_) per_j.resize(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Partition& lam = basis_[i];
    for (int j = 1; j <= dimension(); ++j) {
      auto& out = power_[j - 1][i];
      // Strip occupying rows a..b: rows a+1..b gain lam[row-1] + 1 - lam[row]
      // cells, row a gains the rest.
      for (int b = 0; b < rows; ++b) {
        int below = 0;
        for (int a = b; a >= 0; --a) {
          if (a < b) below += lam[a] + 1 - lam[a + 1];
          const int top = j - below;
          if (top < 1) break;
          const int new_a = lam[a] + top;
          if (new_a > cols || (a > 0 && new_a > lam[a - 1])) continue;
          std::vector<int> mu(static_cast<std::size_t>(rows));
          for (int k = 0; k < rows; ++k) mu[k] = lam[k];
          mu[a] = new_a;
          for (int k = a + 1; k <= b; ++k) mu[k] = lam[k - 1] + 1;
          out.push_back({static_cast<std::uint32_t>(index_.at(Partition(mu))), (b - a) % 2 ? -1 : 1});
        }
      }
    }
  }
}

std::span<const StructureTerm> GrassRing::power_sum(int j, std::size_t i) const {
  if (j < 1 || j > dimension()) return {};
  std::call_once(power_once_, [this] { build_power_sums(); });
  return power_[j - 1][i];
}

std::shared_ptr<const GrassRing> GrassRing::get(const GrassSpec& spec) {
  static std::mutex mutex;
  static std::map<GrassSpec, std::shared_ptr<const GrassRing>> rings;
  std::lock_guard lock(mutex);
  auto& slot = rings[spec];
  if (!slot) slot = std::make_shared<const GrassRing>(spec);
  return slot;
}

std::optional<std::size_t> GrassRing::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::pair<std::size_t, std::size_t> GrassRing::degree_range(int d) const {
  if (d < 0 || d > dimension()) return {0, 0};
  return {degree_start_[d], degree_start_[d + 1]};
}

namespace {

void horizontal_strips(const Partition& mu, int row, int remaining, int rows, int cols,
                       std::vector<int>& nu, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    std::vector<int> full = nu;
    for (int j = row; j < rows; ++j) full.push_back(mu[j]);
    out.push_back(std::move(full));
    return;
  }
  if (row == rows) return;
  const int lo = mu[row];
  const int hi = row == 0 ? cols : mu[row - 1];
  for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
    nu.push_back(v);
    horizontal_strips(mu, row + 1, remaining - (v - lo), rows, cols, nu, out);
    nu.pop_back();
  }
}

void vertical_strips(const Partition& mu, int row, int remaining, int rows, int cols,
                     std::vector<int>& nu, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    std::vector<int> full = nu;
    for (int j = row; j < rows; ++j) full.push_back(mu[j]);
    out.push_back(std::move(full));
    return;
  }
  if (row == rows || rows - row < remaining) return;
  const int prev = row == 0 ? cols : nu[row - 1];
  for (int add = 1; add >= 0; --add) {
    const int v = mu[row] + add;
    if (v > prev) continue;
    nu.push_back(v);
    vertical_strips(mu, row + 1, remaining - add, rows, cols, nu, out);
    nu.pop_back();
  }
}

}  // namespace

void GrassRing::build_pieri() const {
  const int rows = spec_.rows(), cols = spec_.cols();
  pieri_row_.assign(cols + 1, std::vector<std::vector<std::uint32_t>>(basis_.size()));
  pieri_col_.assign(rows + 1, std::vector<std::vector<std::uint32_t>>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (int k = 0; k <= cols; ++k) {
      std::vector<std::vector<int>> shapes;
      std::vector<int> scratch;
      horizontal_strips(basis_[i], 0, k, rows, cols, scratch, shapes);
      for (auto& s : shapes) pieri_row_[k][i].push_back(index_.at(Partition(s)));
    }
    for (int k = 0; k <= rows; ++k) {
      std::vector<std::vector<int>> shapes;
      std::vector<int> scratch;
      vertical_strips(basis_[i], 0, k, rows, cols, scratch, shapes);
      for (auto& s : shapes) pieri_col_[k][i].push_back(index_.at(Partition(s)));
    }
  }
}

std::vector<std::int64_t> GrassRing::apply_row(int k, const std::vector<std::int64_t>& v) const {
  std::call_once(pieri_once_, [this] { build_pieri(); });
  std::vector<std::int64_t> out(basis_.size(), 0);
  if (k < 0 || k > spec_.cols()) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0)
      for (auto t : pieri_row_[k][i]) out[t] += v[i];
  return out;
}

std::vector<std::int64_t> GrassRing::apply_column(int k,
                                                  const std::vector<std::int64_t>& v) const {
  std::call_once(pieri_once_, [this] { build_pieri(); });
  std::vector<std::int64_t> out(basis_.size(), 0);
  if (k < 0 || k > spec_.rows()) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0)
      for (auto t : pieri_col_[k][i]) out[t] += v[i];
  return out;
}

// sigma_lambda * sigma_mu with sigma_lambda written as a Jacobi-Trudi
// determinant in sigma_(k) (or its dual form in sigma_(1^k), whichever has
// fewer rows) and every factor applied through the Pieri rule.
std::vector<std::int64_t> GrassRing::giambelli_times(std::size_t lambda, std::size_t mu) const {
  const Partition& shape = basis_[lambda];
  const bool by_rows = shape.length() <= shape[0];
  const Partition rows_of = by_rows ? shape : conjugate(shape);
  const int L = rows_of.length();

  std::vector<std::int64_t> start(basis_.size(), 0);
  start[mu] = 1;
  std::vector<std::int64_t> acc(basis_.size(), 0);

  auto apply = [&](int a, const std::vector<std::int64_t>& v) {
    return by_rows ? apply_row(a, v) : apply_column(a, v);
  };
  const int limit = by_rows ? spec_.cols() : spec_.rows();

  auto expand = [&](auto&& self, int row, unsigned used, int sign,
                    const std::vector<std::int64_t>& v) -> void {
    if (row == L) {
      for (std::size_t i = 0; i < v.size(); ++i) acc[i] += sign * v[i];
      return;
    }
    for (int col = 0; col < L; ++col) {
      if (used & (1u << col)) continue;
      const int a = rows_of[row] - row + col;
      if (a < 0 || a > limit) continue;
      int inversions = 0;
      for (int c = col + 1; c < L; ++c)
        if (used & (1u << c)) ++inversions;
      const int next_sign = (inversions % 2) ? -sign : sign;
      if (a == 0) {
        self(self, row + 1, used | (1u << col), next_sign, v);
        continue;
      }
      std::vector<std::int64_t> next = apply(a, v);
      bool any = false;
      for (auto x : next) any = any || x != 0;
      if (any) self(self, row + 1, used | (1u << col), next_sign, next);
    }
  };
  expand(expand, 0, 0u, 1, start);
  return acc;
}

GrassClass::GrassClass(GrassSpec spec) : spec_(spec) { spec_.validate(); }

GrassClass GrassClass::schubert(GrassSpec spec, const Partition& p, const BigInt& coeff) {
  GrassClass out(spec);
  if (!p.fits(spec.rows(), spec.cols()))
    throw InvalidArgument("partition " + p.to_string() + " outside the Schubert box");
  out.add(p, coeff);
  return out;
}

BigInt GrassClass::coeff(const Partition& p) const {
  auto it = coords_.find(p);
  return it == coords_.end() ? BigInt(0) : it->second;
}

bool GrassClass::is_homogeneous() const {
  if (coords_.empty()) return true;
  const int d = coords_.begin()->first.weight();
  for (auto& [p, c] : coords_)
    if (p.weight() != d) return false;
  return true;
}

void GrassClass::add(const Partition& p, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coords_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords_.erase(it);
  }
}

void GrassClass::check_same(const GrassClass& o) const {
  if (!(spec_ == o.spec_)) throw InvalidArgument("classes live on different Grassmannians");
}

GrassClass& GrassClass::operator+=(const GrassClass& o) {
  check_same(o);
  for (auto& [p, c] : o.coords_) add(p, c);
  return *this;
}

GrassClass& GrassClass::operator-=(const GrassClass& o) {
  check_same(o);
  for (auto& [p, c] : o.coords_) add(p, -c);
  return *this;
}

GrassClass& GrassClass::operator*=(const BigInt& s) {
  if (s == 0) coords_.clear();
  for (auto& [p, c] : coords_) c *= s;
  return *this;
}

std::vector<BigInt> GrassClass::dense(const GrassRing& ring) const {
  std::vector<BigInt> v(ring.size());
  for (auto& [p, c] : coords_) v[*ring.index_of(p)] = c;
  return v;
}

GrassClass GrassClass::from_dense(const GrassRing& ring, std::span<const BigInt> v) {
  GrassClass out(ring.spec());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.coords_.emplace(ring.basis(i), v[i]);
  return out;
}

std::string GrassClass::to_string() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [p, c] : coords_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    BigInt mag = abs(c);
    if (mag != 1) os << mag << '*';
    os << "s" << p.to_string();
  }
  return os.str();
}

GrassClass mul(const GrassClass& a, const GrassClass& b) {
  if (!(a.spec() == b.spec())) throw InvalidArgument("classes live on different Grassmannians");
  auto ring = GrassRing::get(a.spec());
  std::vector<BigInt> out(ring->size());
  for (auto& [pa, ca] : a.coords()) {
    const std::size_t i = *ring->index_of(pa);
    for (auto& [pb, cb] : b.coords()) {
      const std::size_t j = *ring->index_of(pb);
      BigInt prod = ca * cb;
      for (const auto& t : ring->product(i, j)) out[t.index] += prod * t.coeff;
    }
  }
  return GrassClass::from_dense(*ring, out);
}

GrassClass power(const GrassClass& a, int k) {
  GrassClass out = GrassClass::one(a.spec());
  for (int i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

GrassClass chern_sub(const GrassSpec& spec, int i) {
  spec.validate();
  if (i < 0 || i > spec.r) throw InvalidArgument("chern_sub index outside 0..r");
  if (i > 0 && spec.cols() == 0) return GrassClass::zero(spec);
  return GrassClass::schubert(spec, Partition(std::vector<int>(i, 1)), i % 2 ? -1 : 1);
}

GrassClass chern_quot(const GrassSpec& spec, int k) {
  spec.validate();
  if (k < 0 || k > spec.cols()) throw InvalidArgument("chern_quot index outside 0..m-r");
  if (k > 0 && spec.r == 0) return GrassClass::zero(spec);
  return GrassClass::schubert(spec, k == 0 ? Partition{} : Partition{k});
}

BigInt integrate(const GrassClass& a) { return a.coeff(a.spec().box()); }

IntPolynomial poincare(const GrassSpec& spec) {
  auto ring = GrassRing::get(spec);
  IntPolynomial out;
  for (std::size_t i = 0; i < ring->size(); ++i) out += IntPolynomial::monomial(2 * ring->degree(i));
  return out;
}

}  // namespace detlinks
