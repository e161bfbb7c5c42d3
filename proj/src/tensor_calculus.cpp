#include "detlinks/tensor_calculus.hpp"

#include <omp.h>

#include <map>
#include <mutex>

#include "detlinks/errors.hpp"

namespace detlinks {

void ProdSpec::validate() const {
  if (r < 0 || m < r || n < m)
    throw InvalidArgument("product of Grassmannians needs 0 <= r <= m <= n, got " + to_string());
}

std::string ProdSpec::to_string() const {
  return "(r=" + std::to_string(r) + ", n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
}

ProdRing::ProdRing(ProdSpec spec)
    : spec_(spec) {
  spec_.validate();
  first_ = GrassRing::get(spec_.first());
  second_ = GrassRing::get(spec_.second());
}

std::shared_ptr<const ProdRing> ProdRing::get(const ProdSpec& spec) {
  static std::mutex mu;
  static std::map<ProdSpec, std::shared_ptr<const ProdRing>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[spec];
  if (!slot) slot = std::make_shared<const ProdRing>(spec);
  return slot;
}

// ---------------------------------------------------------------------------

ProdClass::ProdClass(ProdSpec spec) : ProdClass(ProdRing::get(spec)) {}

ProdClass::ProdClass(std::shared_ptr<const ProdRing> ring)
    : ring_(std::move(ring)), coords_(ring_->size()) {}

ProdClass ProdClass::one(ProdSpec spec) {
  ProdClass c(spec);
  c.coords_[0] = 1;
  return c;
}

ProdClass ProdClass::basis(ProdSpec spec, const Partition& first, const Partition& second,
                           const BigInt& coeff) {
  ProdClass c(spec);
  auto i1 = c.ring().first().index_of(first);
  auto i2 = c.ring().second().index_of(second);
  if (!i1 || !i2) throw InvalidArgument("partition outside the Schubert box");
  c.coords_[c.ring().index(*i1, *i2)] = coeff;
  return c;
}

ProdClass ProdClass::pure(const ProdSpec& spec, const GrassClass& a, const GrassClass& b) {
  ProdClass c(spec);
  if (a.spec() != spec.first() || b.spec() != spec.second())
    throw InvalidArgument("factor classes do not match " + spec.to_string());
  const ProdRing& R = c.ring();
  for (auto& [p, x] : a.coords()) {
    const std::size_t i1 = *R.first().index_of(p);
    for (auto& [q, y] : b.coords()) c.coords_[R.index(i1, *R.second().index_of(q))] = x * y;
  }
  return c;
}

BigInt ProdClass::coeff(const Partition& first, const Partition& second) const {
  auto i1 = ring_->first().index_of(first);
  auto i2 = ring_->second().index_of(second);
  if (!i1 || !i2) return 0;
  return coords_[ring_->index(*i1, *i2)];
}

std::vector<ProdTerm> ProdClass::terms() const {
  std::vector<ProdTerm> out;
  for (auto i : support())
    out.push_back({ring_->first().basis(ring_->first_of(i)),
                   ring_->second().basis(ring_->second_of(i)), coords_[i]});
  return out;
}

std::vector<std::size_t> ProdClass::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) out.push_back(i);
  return out;
}

bool ProdClass::is_zero() const {
  for (auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool ProdClass::is_homogeneous() const {
  int deg = -1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    const int d = ring_->degree(i);
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

int ProdClass::degree() const {
  if (!is_homogeneous()) return -1;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) return ring_->degree(i);
  return -1;
}

void ProdClass::check_same(const ProdClass& o) const {
  if (ring_ != o.ring_ && spec() != o.spec())
    throw InvalidArgument("classes live on different products " + spec().to_string() + " and " +
                          o.spec().to_string());
}

ProdClass& ProdClass::operator+=(const ProdClass& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (o.coords_[i] != 0) coords_[i] += o.coords_[i];
  return *this;
}

ProdClass& ProdClass::operator-=(const ProdClass& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (o.coords_[i] != 0) coords_[i] -= o.coords_[i];
  return *this;
}

ProdClass& ProdClass::operator*=(const BigInt& s) {
  for (auto& c : coords_)
    if (c != 0) c *= s;
  return *this;
}

bool operator==(const ProdClass& a, const ProdClass& b) {
  return a.spec() == b.spec() && a.coords_ == b.coords_;
}

void ProdClass::divide_exact(long k) {
  if (k == 0) throw InvalidArgument("division by zero");
  for (auto& c : coords_) {
    if (c == 0) continue;
    if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k)))
      throw ConsistencyError("Newton identity left a remainder modulo " + std::to_string(k));
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    if (k < 0) c = -c;
  }
}

std::string ProdClass::to_string() const {
  std::string out;
  for (auto& t : terms()) {
    if (!out.empty()) out += " + ";
    if (t.coeff != 1) out += t.coeff.get_str() + "*";
    out += "[" + t.first.to_string() + "|" + t.second.to_string() + "]";
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

namespace {

// Adds a[ia] * b[ib] * sigma_{ia} sigma_{ib} into out for every ib in sb.
void accumulate_row(const ProdRing& R, const ProdClass& a, std::size_t ia, const ProdClass& b,
                    const std::vector<std::size_t>& sb, std::vector<BigInt>& out, mpz_class& prod,
                    mpz_class& tmp) {
  const std::size_t s2 = R.second().size();
  const int room = R.dimension() - R.degree(ia);
  const std::size_t i1 = R.first_of(ia), i2 = R.second_of(ia);
  for (auto ib : sb) {
    if (R.degree(ib) > room) continue;
    auto t1 = R.first().product(i1, R.first_of(ib));
    if (t1.empty()) continue;
    auto t2 = R.second().product(i2, R.second_of(ib));
    if (t2.empty()) continue;
    mpz_mul(prod.get_mpz_t(), a.coords()[ia].get_mpz_t(), b.coords()[ib].get_mpz_t());
    for (const auto& x : t1) {
      mpz_mul_si(tmp.get_mpz_t(), prod.get_mpz_t(), x.coeff);
      BigInt* row = out.data() + static_cast<std::size_t>(x.index) * s2;
      for (const auto& y : t2) {
        mpz_ptr dst = row[y.index].get_mpz_t();
        if (y.coeff >= 0)
          mpz_addmul_ui(dst, tmp.get_mpz_t(), static_cast<unsigned long>(y.coeff));
        else
          mpz_submul_ui(dst, tmp.get_mpz_t(), static_cast<unsigned long>(-y.coeff));
      }
    }
  }
}

}  // namespace

ProdClass mul_prod(const ProdClass& a, const ProdClass& b, Exec exec) {
  if (a.spec() != b.spec())
    throw InvalidArgument("classes live on different products " + a.spec().to_string() + " and " +
                          b.spec().to_string());
  const ProdRing& R = a.ring();
  ProdClass out(a.ring_ptr());
  const auto sa = a.support();
  const auto sb = b.support();
  if (sa.empty() || sb.empty()) return out;

  const int threads = omp_in_parallel() ? 1 : omp_get_max_threads();
  if (exec == Exec::serial || threads == 1 || sa.size() < 2) {
    mpz_class prod, tmp;
    for (auto ia : sa) accumulate_row(R, a, ia, b, sb, out.mutable_coords(), prod, tmp);
    return out;
  }

  std::vector<std::vector<BigInt>> locals(static_cast<std::size_t>(threads));
  const long rows = static_cast<long>(sa.size());
#pragma omp parallel num_threads(threads)
  {
    auto& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
    local.resize(R.size());
    mpz_class prod, tmp;
#pragma omp for schedule(dynamic, 1)
    for (long x = 0; x < rows; ++x)
      accumulate_row(R, a, sa[static_cast<std::size_t>(x)], b, sb, local, prod, tmp);
  }
  auto& dst = out.mutable_coords();
  const long size = static_cast<long>(R.size());
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long i = 0; i < size; ++i)
    for (auto& local : locals)
      if (!local.empty() && local[static_cast<std::size_t>(i)] != 0)
        dst[static_cast<std::size_t>(i)] += local[static_cast<std::size_t>(i)];
  return out;
}

BigInt integrate_prod(const ProdClass& a) { return a.coords()[a.ring().top_index()]; }

BigInt pairing(const ProdClass& a, const ProdClass& b) {
  if (a.spec() != b.spec()) throw InvalidArgument("pairing of classes on different products");
  const ProdRing& R = a.ring();
  BigInt total = 0;
  for (std::size_t i = 0; i < R.size(); ++i) {
    if (a.coords()[i] == 0) continue;
    const BigInt& y = b.coords()[R.dual_index(i)];
    if (y != 0) total += a.coords()[i] * y;
  }
  return total;
}

// ---------------------------------------------------------------------------

std::string to_string(TensorBundle b) {
  return b == TensorBundle::sub_tensor ? "sub_tensor" : "quot_tensor";
}

std::pair<int, int> tensor_factor_ranks(const ProdSpec& spec, TensorBundle bundle) {
  if (bundle == TensorBundle::sub_tensor) return {spec.r, spec.r};
  return {spec.n - spec.r, spec.m - spec.r};
}

namespace {

GrassClass factor_chern(const GrassSpec& g, TensorBundle bundle, int i) {
  if (bundle == TensorBundle::sub_tensor)
    return i <= g.r ? chern_sub(g, i) : GrassClass::zero(g);
  return i <= g.m - g.r ? chern_quot(g, i) : GrassClass::zero(g);
}

// Sign of p_j(E) relative to the border-strip operator p_j(y), y the roots of
// S^dual: p_j(S) = (-1)^j p_j(y), and p_j(Q) = -p_j(S) for j >= 1 because
// S + Q is trivial.
int power_sign(TensorBundle bundle, int j) {
  const int sub = j % 2 ? -1 : 1;
  return bundle == TensorBundle::sub_tensor ? sub : -sub;
}

// Terms of p_j(E) * sigma_i on one factor; j = 0 is multiplication by the rank.
void factor_power_terms(const GrassRing& ring, TensorBundle bundle, int rank, int j,
                        std::size_t i, std::vector<StructureTerm>& out) {
  out.clear();
  if (j == 0) {
    if (rank != 0) out.push_back({static_cast<std::uint32_t>(i), rank});
    return;
  }
  const int sg = power_sign(bundle, j);
  for (const auto& t : ring.power_sum(j, i)) out.push_back({t.index, sg * t.coeff});
}

void accumulate_power(const ProdRing& R, TensorBundle bundle, int re, int rf, int k,
                      const std::vector<BigInt>& binom, const ProdClass& v, std::size_t idx,
                      std::vector<BigInt>& out, std::vector<StructureTerm>& t1,
                      std::vector<StructureTerm>& t2, mpz_class& tmp) {
  const std::size_t s2 = R.second().size();
  const std::size_t i1 = R.first_of(idx), i2 = R.second_of(idx);
  for (int j = 0; j <= k; ++j) {
    factor_power_terms(R.first(), bundle, re, j, i1, t1);
    if (t1.empty()) continue;
    factor_power_terms(R.second(), bundle, rf, k - j, i2, t2);
    if (t2.empty()) continue;
    mpz_mul(tmp.get_mpz_t(), v.coords()[idx].get_mpz_t(), binom[j].get_mpz_t());
    for (const auto& x : t1) {
      BigInt* row = out.data() + static_cast<std::size_t>(x.index) * s2;
      for (const auto& y : t2) {
        const std::int64_t c = x.coeff * y.coeff;
        mpz_ptr dst = row[y.index].get_mpz_t();
        if (c >= 0) mpz_addmul_ui(dst, tmp.get_mpz_t(), static_cast<unsigned long>(c));
        else mpz_submul_ui(dst, tmp.get_mpz_t(), static_cast<unsigned long>(-c));
      }
    }
  }
}

struct SeriesEntry {
  std::mutex mu;
  std::vector<ProdClass> chern, segre;
};

class SeriesCache {
 public:
  static SeriesCache& global() {
    static SeriesCache cache;
    return cache;
  }

  std::shared_ptr<SeriesEntry> entry(const ProdSpec& spec, TensorBundle bundle) {
    std::lock_guard lock(mu_);
    auto& slot = entries_[{spec, bundle}];
    if (!slot) slot = std::make_shared<SeriesEntry>();
    return slot;
  }

  void clear() {
    std::lock_guard lock(mu_);
    entries_.clear();
  }

 private:
  std::mutex mu_;
  std::map<std::pair<ProdSpec, TensorBundle>, std::shared_ptr<SeriesEntry>> entries_;
};

// Newton's identity k x_k = eps * sum_{i=1}^{k} (-1)^{i-1} p_i x_{k-i}: eps = 1
// gives the Chern classes, eps = -1 the Segre classes (the Chern classes of
// the virtual bundle with power sums -p_i).
void extend_newton(std::vector<ProdClass>& xs, const ProdSpec& spec, TensorBundle bundle, int eps,
                   int k, Exec exec) {
  if (xs.empty()) xs.push_back(ProdClass::one(spec));
  while (static_cast<int>(xs.size()) <= k) {
    const int j = static_cast<int>(xs.size());
    ProdClass x(spec);
    for (int i = 1; i <= j; ++i) {
      ProdClass t = apply_tensor_power_sum(xs[j - i], bundle, i, exec);
      if ((i % 2 == 1) == (eps > 0)) x += t;
      else x -= t;
    }
    x.divide_exact(j);
    xs.push_back(std::move(x));
  }
}

int clamp_degree(const ProdSpec& spec, int up_to) {
  spec.validate();
  if (up_to < 0) throw InvalidArgument("series degree must be non-negative");
  return std::min(up_to, spec.dimension());
}

}  // namespace

ProdClass apply_tensor_power_sum(const ProdClass& v, TensorBundle bundle, int k, Exec exec) {
  if (k < 0) throw InvalidArgument("power sum index must be non-negative");
  const ProdRing& R = v.ring();
  const auto [re, rf] = tensor_factor_ranks(v.spec(), bundle);
  std::vector<BigInt> binom;
  for (int j = 0; j <= k; ++j) binom.push_back(binomial(k, j));
  ProdClass out(v.ring_ptr());
  const auto sv = v.support();
  if (sv.empty()) return out;

  const int threads = omp_in_parallel() ? 1 : omp_get_max_threads();
  if (exec == Exec::serial || threads == 1 || sv.size() < 2) {
    std::vector<StructureTerm> t1, t2;
    mpz_class tmp;
    for (auto idx : sv)
      accumulate_power(R, bundle, re, rf, k, binom, v, idx, out.mutable_coords(), t1, t2, tmp);
    return out;
  }

  std::vector<std::vector<BigInt>> locals(static_cast<std::size_t>(threads));
  const long count = static_cast<long>(sv.size());
#pragma omp parallel num_threads(threads)
  {
    auto& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
    local.resize(R.size());
    std::vector<StructureTerm> t1, t2;
    mpz_class tmp;
#pragma omp for schedule(dynamic, 4)
    for (long x = 0; x < count; ++x)
      accumulate_power(R, bundle, re, rf, k, binom, v, sv[static_cast<std::size_t>(x)], local, t1,
                       t2, tmp);
  }
  auto& dst = out.mutable_coords();
  const long size = static_cast<long>(R.size());
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long i = 0; i < size; ++i)
    for (auto& local : locals)
      if (!local.empty() && local[static_cast<std::size_t>(i)] != 0)
        dst[static_cast<std::size_t>(i)] += local[static_cast<std::size_t>(i)];
  return out;
}

CharSeries chern_tensor(const ProdSpec& spec, TensorBundle bundle, int up_to, Exec exec) {
  const int k = clamp_degree(spec, up_to);
  auto e = SeriesCache::global().entry(spec, bundle);
  std::lock_guard lock(e->mu);
  extend_newton(e->chern, spec, bundle, 1, k, exec);
  return {spec, SeriesFlavor::chern, bundle, {e->chern.begin(), e->chern.begin() + k + 1}};
}

CharSeries segre_tensor(const ProdSpec& spec, TensorBundle bundle, int up_to, Exec exec) {
  const int k = clamp_degree(spec, up_to);
  auto e = SeriesCache::global().entry(spec, bundle);
  std::lock_guard lock(e->mu);
  extend_newton(e->segre, spec, bundle, -1, k, exec);
  return {spec, SeriesFlavor::segre, bundle, {e->segre.begin(), e->segre.begin() + k + 1}};
}

// ---------------------------------------------------------------------------

namespace {

std::mutex universal_mu;
std::map<std::pair<int, int>, std::vector<SparsePoly>> universal_cache;

std::vector<int> uv_weights(int a, int b) {
  std::vector<int> w;
  for (int i = 1; i <= a; ++i) w.push_back(i);
  for (int j = 1; j <= b; ++j) w.push_back(j);
  return w;
}

// Rewrites a polynomial symmetric in the first a and in the last b roots as a
// polynomial in their elementary symmetric functions by peeling off the
// lex-leading monomial.
SparsePoly to_elementary(SparsePoly f, int a, int b, const std::vector<SparsePoly>& ea,
                         const std::vector<SparsePoly>& eb) {
  const std::vector<int> roots(static_cast<std::size_t>(a + b), 1);
  SparsePoly out(uv_weights(a, b));
  while (!f.is_zero()) {
    const auto [lead, c] = *f.terms().rbegin();
    Exponent u(static_cast<std::size_t>(a + b), 0);
    SparsePoly prod = SparsePoly::constant(roots, 1);
    auto peel = [&](int begin, int len, const std::vector<SparsePoly>& e) {
      for (int i = 0; i < len; ++i) {
        const int next = i + 1 < len ? lead[begin + i + 1] : 0;
        const int step = lead[begin + i] - next;
        if (step < 0) throw ConsistencyError("tensor Chern polynomial is not symmetric");
        u[begin + i] = step;
        if (step > 0) prod = prod * e[i + 1].pow(step);
      }
    };
    peel(0, a, ea);
    peel(a, b, eb);
    out.add_term(u, c);
    f -= prod * c;
  }
  return out;
}

std::vector<SparsePoly> compute_universal(int a, int b, int degree) {
  const std::vector<int> roots(static_cast<std::size_t>(a + b), 1);
  auto root = [&](int i) { return SparsePoly::variable(roots, i); };
  SparsePoly total = SparsePoly::constant(roots, 1);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      total = SparsePoly::multiply(total, SparsePoly::constant(roots, 1) + root(i) + root(a + j),
                                   degree);

  auto elementary = [&](int begin, int len) {
    SparsePoly gen = SparsePoly::constant(roots, 1);
    for (int i = 0; i < len; ++i) gen = gen * (SparsePoly::constant(roots, 1) + root(begin + i));
    std::vector<SparsePoly> e;
    for (int k = 0; k <= len; ++k) e.push_back(gen.homogeneous_part(k));
    return e;
  };
  const auto ea = elementary(0, a);
  const auto eb = elementary(a, b);

  std::vector<SparsePoly> out;
  for (int k = 0; k <= degree; ++k)
    out.push_back(to_elementary(total.homogeneous_part(k), a, b, ea, eb));
  return out;
}

}  // namespace

SparsePoly universal_tensor_chern(int rank_e, int rank_f, int degree) {
  if (rank_e < 0 || rank_f < 0 || degree < 0)
    throw InvalidArgument("ranks and degree must be non-negative");
  if (degree > rank_e * rank_f) return SparsePoly(uv_weights(rank_e, rank_f));
  std::lock_guard lock(universal_mu);
  auto& polys = universal_cache[{rank_e, rank_f}];
  if (static_cast<int>(polys.size()) <= degree) polys = compute_universal(rank_e, rank_f, degree);
  return polys[static_cast<std::size_t>(degree)];
}

CharSeries chern_tensor_universal(const ProdSpec& spec, TensorBundle bundle, int up_to) {
  const int k = clamp_degree(spec, up_to);
  const auto [a, b] = tensor_factor_ranks(spec, bundle);
  const GrassSpec g1 = spec.first(), g2 = spec.second();

  std::vector<GrassClass> ce, cf;
  for (int i = 0; i <= a; ++i) ce.push_back(factor_chern(g1, bundle, i));
  for (int j = 0; j <= b; ++j) cf.push_back(factor_chern(g2, bundle, j));

  CharSeries out{spec, SeriesFlavor::chern, bundle, {}};
  for (int d = 0; d <= k; ++d) {
    ProdClass term(spec);
    const SparsePoly poly = universal_tensor_chern(a, b, d);
    for (auto& [expo, c] : poly.terms()) {
      GrassClass x = GrassClass::one(g1), y = GrassClass::one(g2);
      for (int i = 0; i < a; ++i)
        if (expo[i] > 0) x = x * power(ce[i + 1], expo[i]);
      for (int j = 0; j < b; ++j)
        if (expo[a + j] > 0) y = y * power(cf[j + 1], expo[a + j]);
      if (x.is_zero() || y.is_zero()) continue;
      term += ProdClass::pure(spec, x, y) * c;
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

void clear_series_cache() {
  SeriesCache::global().clear();
  std::lock_guard lock(universal_mu);
  universal_cache.clear();
}

}  // namespace detlinks
