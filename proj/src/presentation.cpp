#include "detlinks/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "detlinks/errors.hpp"

namespace detlinks {

std::vector<int> presentation_weights(int r) {
  std::vector<int> w(r);
  for (int i = 0; i < r; ++i) w[i] = i + 1;
  return w;
}

std::vector<std::vector<PresentationPoly>> presentation_h(int r, int n_max) {
  if (r < 1 || n_max < 0) throw InvalidArgument("presentation_h needs r >= 1 and n_max >= 0");
  const auto w = presentation_weights(r);
  std::vector<std::vector<PresentationPoly>> out;
  std::vector<PresentationPoly> h;
  for (int i = 0; i < r; ++i) h.push_back(SparsePoly::variable(w, i));
  out.push_back(h);
  for (int n = 0; n < n_max; ++n) {
    std::vector<PresentationPoly> next;
    for (int i = 0; i < r; ++i) {
      PresentationPoly v = -(SparsePoly::variable(w, i) * h[0]);
      if (i + 1 < r) v += h[i + 1];
      next.push_back(std::move(v));
    }
    h = next;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<PresentationPoly> grassmann_relations(const GrassSpec& spec) {
  spec.validate();
  if (spec.r == 0) return {};
  return presentation_h(spec.r, spec.cols()).back();
}

PresentationPoly giambelli_polynomial(const GrassSpec& spec, const Partition& lambda) {
  spec.validate();
  if (!lambda.fits(spec.rows(), spec.cols()))
    throw InvalidArgument("partition outside the Schubert box");
  const auto w = presentation_weights(spec.r);
  const Partition cols = conjugate(lambda);
  const int L = cols.length();

  auto entry = [&](int k) -> std::optional<PresentationPoly> {
    if (k < 0 || k > spec.r) return std::nullopt;
    if (k == 0) return SparsePoly::constant(w, 1);
    return SparsePoly::variable(w, k - 1) * BigInt(k % 2 ? -1 : 1);
  };

  PresentationPoly det(w);
  std::function<void(int, unsigned, int, const PresentationPoly&)> expand =
      [&](int row, unsigned used, int sign, const PresentationPoly& acc) {
        if (row == L) {
          det += acc * BigInt(sign);
          return;
        }
        for (int col = 0; col < L; ++col) {
          if (used & (1u << col)) continue;
          auto e = entry(cols[row] - row + col);
          if (!e) continue;
          int inversions = 0;
          for (int c = col + 1; c < L; ++c)
            if (used & (1u << c)) ++inversions;
          expand(row + 1, used | (1u << col), inversions % 2 ? -sign : sign, acc * *e);
        }
      };
  expand(0, 0u, 1, SparsePoly::constant(w, 1));
  return det;
}

std::vector<Exponent> weighted_monomials(int r, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent e(r, 0);
  // Enumerate exponents of x_1 from high to low so the list is lex descending.
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == r) {
      if (remaining == 0) out.push_back(e);
      return;
    }
    const int weight = var + 1;
    for (int k = remaining / weight; k >= 0; --k) {
      e[var] = k;
      rec(var + 1, remaining - k * weight);
    }
    e[var] = 0;
  };
  rec(0, d);
  return out;
}

namespace {

void subtract_multiple(std::vector<BigInt>& row, BigInt q, const std::vector<BigInt>& pivot) {
  if (q == 0) return;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (pivot[i] != 0) row[i] -= q * pivot[i];
}

bool all_zero(const std::vector<BigInt>& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace

QuotientRingOracle::Piece QuotientRingOracle::build_piece(
    int d, const std::vector<PresentationPoly>& gens) const {
  Piece piece;
  // Monomials with many factors are eliminated first, so the survivors are
  // the expected basis x^a with a_1 + ... + a_r <= m - r whenever J_d is a
  // direct summand; a non-unit pivot then means torsion or a wrong basis.
  piece.monomials = weighted_monomials(spec_.r, d);
  auto factors = [](const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::stable_sort(piece.monomials.begin(), piece.monomials.end(),
                   [&](const Exponent& a, const Exponent& b) { return factors(a) > factors(b); });
  std::map<Exponent, std::size_t> column;
  for (std::size_t i = 0; i < piece.monomials.size(); ++i) column[piece.monomials[i]] = i;

  std::vector<std::vector<BigInt>> rows;
  for (const auto& g : gens) {
    const int dg = g.degree();
    for (const auto& mono : weighted_monomials(spec_.r, d - dg)) {
      SparsePoly m(weights_);
      m.add_term(mono, 1);
      const SparsePoly prod = m * g;
      std::vector<BigInt> row(piece.monomials.size());
      for (auto& [e, c] : prod.terms()) row[column.at(e)] = c;
      if (!all_zero(row)) rows.push_back(std::move(row));
    }
  }

  // Integer echelon form, column by column, by repeated Euclidean steps.
  for (std::size_t col = 0; col < piece.monomials.size() && !rows.empty(); ++col) {
    while (true) {
      std::vector<std::size_t> live;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i][col] != 0) live.push_back(i);
      if (live.empty()) break;
      std::size_t best = live.front();
      for (auto i : live)
        if (abs(rows[i][col]) < abs(rows[best][col])) best = i;
      if (live.size() == 1) {
        std::vector<BigInt> pivot = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<long>(best));
        if (pivot[col] < 0)
          for (auto& x : pivot) x = -x;
        if (pivot[col] != 1)
          throw ConsistencyError("Grass(" + std::to_string(spec_.r) + "," +
                                 std::to_string(spec_.m) + "): relation lattice in degree " +
                                 std::to_string(d) + " has pivot " + pivot[col].get_str());
        // Keep earlier pivot rows reduced against the new one.
        for (auto& prev : piece.pivot_rows) subtract_multiple(prev, prev[col], pivot);
        piece.pivot_rows.push_back(std::move(pivot));
        piece.pivot_cols.push_back(col);
        break;
      }
      for (auto i : live) {
        if (i == best) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t());
        subtract_multiple(rows[i], q, rows[best]);
      }
      rows.erase(std::remove_if(rows.begin(), rows.end(), all_zero), rows.end());
    }
  }

  std::vector<bool> is_pivot(piece.monomials.size(), false);
  for (auto c : piece.pivot_cols) is_pivot[c] = true;
  for (std::size_t c = 0; c < piece.monomials.size(); ++c) {
    if (is_pivot[c]) continue;
    piece.standard.push_back(piece.monomials[c]);
    piece.standard_cols.push_back(c);
  }
  return piece;
}

QuotientRingOracle::QuotientRingOracle(GrassSpec spec)
    : spec_(spec), weights_(presentation_weights(spec.r)) {
  spec_.validate();
  if (binomial(spec_.m, spec_.r) > kMaxRank)
    throw InvalidArgument("quotient-ring oracle limited to rank " + std::to_string(kMaxRank));
  const auto gens = grassmann_relations(spec_);
  const int top = spec_.dimension();
  std::size_t offset = 0;
  for (int d = 0; d <= top; ++d) {
    pieces_.push_back(build_piece(d, gens));
    offsets_.push_back(offset);
    offset += pieces_.back().standard.size();
  }
  // Generators have degree <= r, so vanishing in degrees top+1..top+r
  // forces vanishing in every higher degree.
  for (int d = top + 1; d <= top + spec_.r; ++d)
    if (!build_piece(d, gens).standard.empty())
      throw ConsistencyError("quotient ring does not vanish above the top degree");
}

std::vector<long> QuotientRingOracle::graded_ranks() const {
  std::vector<long> out;
  for (auto& p : pieces_) out.push_back(static_cast<long>(p.standard.size()));
  return out;
}

long QuotientRingOracle::rank() const {
  long total = 0;
  for (auto r : graded_ranks()) total += r;
  return total;
}

std::vector<Exponent> QuotientRingOracle::basis() const {
  std::vector<Exponent> out;
  for (auto& p : pieces_) out.insert(out.end(), p.standard.begin(), p.standard.end());
  return out;
}

std::vector<BigInt> QuotientRingOracle::reduce_piece(int d, const PresentationPoly& f) const {
  const Piece& piece = pieces_[d];
  std::vector<BigInt> v(piece.monomials.size());
  std::map<Exponent, std::size_t> column;
  for (std::size_t i = 0; i < piece.monomials.size(); ++i) column[piece.monomials[i]] = i;
  for (auto& [e, c] : f.terms()) v[column.at(e)] = c;
  for (std::size_t k = 0; k < piece.pivot_rows.size(); ++k) {
    const BigInt q = v[piece.pivot_cols[k]];
    subtract_multiple(v, q, piece.pivot_rows[k]);
  }
  std::vector<BigInt> out;
  for (auto c : piece.standard_cols) out.push_back(v[c]);
  return out;
}

std::vector<BigInt> QuotientRingOracle::normal_form(const PresentationPoly& f) const {
  if (f.weights() != weights_) throw InvalidArgument("polynomial ring mismatch");
  std::vector<BigInt> out(static_cast<std::size_t>(rank()));
  for (int d = 0; d <= spec_.dimension(); ++d) {
    const auto part = f.homogeneous_part(d);
    if (part.is_zero()) continue;
    const auto coords = reduce_piece(d, part);
    for (std::size_t i = 0; i < coords.size(); ++i) out[offsets_[d] + i] = coords[i];
  }
  return out;
}

bool QuotientRingOracle::equivalent(const PresentationPoly& a, const PresentationPoly& b) const {
  return all_zero(normal_form(a - b));
}

std::vector<BigInt> QuotientRingOracle::multiply_basis(std::size_t i, std::size_t j) const {
  const auto b = basis();
  SparsePoly x(weights_), y(weights_);
  x.add_term(b.at(i), 1);
  y.add_term(b.at(j), 1);
  return normal_form(x * y);
}

}  // namespace detlinks
