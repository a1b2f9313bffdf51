#include "minctrl/reductions.hpp"

#include <algorithm>
#include <string>

#include "minctrl/error.hpp"
#include "minctrl/rank.hpp"

namespace minctrl {

void HittingSetInstance::validate() const {
  if (m == 0) throw InvalidInput("ground set must be nonempty");
  if (sets.empty()) throw InvalidInput("instance must contain at least one set");
  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw InvalidInput("set " + std::to_string(i + 1) + " is empty");
    for (auto e : sets[i]) {
      if (e >= m) {
        throw InvalidInput("set " + std::to_string(i + 1) + " contains element " +
                           std::to_string(e + 1) + " outside 1.." + std::to_string(m));
      }
      seen[e] = true;
    }
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (!seen[e]) throw InvalidInput("element " + std::to_string(e + 1) + " appears in no set");
  }
}

bool HittingSetInstance::is_hit_by(std::span<const std::size_t> elements) const {
  return std::all_of(sets.begin(), sets.end(), [&](const std::vector<std::size_t>& s) {
    return std::any_of(s.begin(), s.end(), [&](std::size_t e) {
      return std::find(elements.begin(), elements.end(), e) != elements.end();
    });
  });
}

RationalMatrix incidence_matrix(const HittingSetInstance& inst) {
  inst.validate();
  RationalMatrix c(inst.p(), inst.m);
  for (std::size_t i = 0; i < inst.p(); ++i) {
    for (auto e : inst.sets[i]) c.set(i, e, 1);
  }
  return c;
}

RationalMatrix build_V(const HittingSetInstance& inst) {
  const RationalMatrix c = incidence_matrix(inst);
  const std::size_t m = inst.m;
  const std::size_t p = inst.p();
  const std::size_t n = m + p + 1;
  RationalMatrix v(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    v.set(i, i, 2);
    v.set(i, n - 1, 1);
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < m; ++j) v.set(m + i, j, c(i, j));
    v.set(m + i, m + i, Rational(static_cast<unsigned long>(m + 1)));
  }
  v.set(n - 1, n - 1, 1);
  return v;
}

ReductionOutput build_reduction(const HittingSetInstance& inst) {
  ReductionOutput out;
  out.v = build_V(inst);
  out.index_map = ReductionIndexMap{inst.m, inst.p()};
  const std::size_t n = out.index_map.dimension();
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues.emplace_back(static_cast<unsigned long>(i + 1));
  const RationalMatrix d = RationalMatrix::diagonal(out.eigenvalues);
  out.a = out.v.inverse() * d * out.v;

  for (std::size_t i = 0; i < n; ++i) {
    Rational off;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) off += abs(out.v(i, j));
    }
    if (!(abs(out.v(i, i)) > off)) {
      throw InternalError("V is not strictly diagonally dominant in row " + std::to_string(i + 1));
    }
  }
  if (!(out.v * out.a == d * out.v)) {
    throw InternalError("rows of V are not left eigenvectors of A");
  }
  return out;
}

RationalMatrix v_inverse_closed_form(const HittingSetInstance& inst) {
  inst.validate();
  const std::size_t m = inst.m;
  const std::size_t p = inst.p();
  const std::size_t n = m + p + 1;
  const Rational m1(static_cast<unsigned long>(m + 1));
  RationalMatrix w(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    w.set(i, i, Rational(1, 2));
    w.set(i, n - 1, Rational(-1, 2));
  }
  for (std::size_t s = 0; s < p; ++s) {
    const std::size_t row = m + s;
    w.set(row, row, 1 / m1);
    std::vector<std::size_t> members = inst.sets[s];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto e : members) w.set(row, e, -1 / (2 * m1));
    w.set(row, n - 1, Rational(static_cast<unsigned long>(members.size())) / (2 * m1));
  }
  w.set(n - 1, n - 1, 1);
  return w;
}

std::vector<RationalVector> orthogonal_extension(std::span<const RationalVector> vectors,
                                                 std::size_t n) {
  const std::size_t k = vectors.size();
  if (k < 1 || k >= n) throw InvalidInput("orthogonal_extension needs 1 <= k < n");
  for (std::size_t i = 0; i < k; ++i) {
    if (vectors[i].size() != n) throw InvalidInput("vector length differs from n");
    if (sgn(vectors[i][0]) != 0) {
      throw InvalidInput("input vector " + std::to_string(i + 1) + " is not orthogonal to e_1");
    }
    bool nonzero = false;
    for (const auto& x : vectors[i]) nonzero = nonzero || sgn(x) != 0;
    if (!nonzero) throw InvalidInput("input vector " + std::to_string(i + 1) + " is zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (sgn(dot(vectors[i], vectors[j])) != 0) {
        throw InvalidInput("input vectors " + std::to_string(j + 1) + " and " +
                           std::to_string(i + 1) + " are not orthogonal");
      }
    }
  }

  std::vector<RationalVector> basis(vectors.begin(), vectors.end());
  std::vector<Rational> norms;
  for (const auto& v : basis) norms.push_back(dot(v, v));

  // Gram-Schmidt over e_1, e_2, ...; e_1 survives untouched because every
  // input vector has zero first coordinate.
  for (std::size_t e = 0; e < n && basis.size() < n; ++e) {
    RationalVector w(n);
    w[e] = 1;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational coeff = basis[b][e] / norms[b];
      if (sgn(coeff) == 0) continue;
      for (std::size_t t = 0; t < n; ++t) w[t] -= coeff * basis[b][t];
    }
    const Rational nn = dot(w, w);
    if (sgn(nn) == 0) continue;
    basis.push_back(std::move(w));
    norms.push_back(nn);
  }
  if (basis.size() != n) throw InvalidInput("input vectors are linearly dependent");

  const std::size_t seed = k;
  for (std::size_t l = k + 1; l < n; ++l) {
    if (sgn(basis[l][0]) != 0) continue;
    const Rational c = dot(basis[seed], basis[seed]) / dot(basis[l], basis[l]);
    RationalVector new_l(n);
    RationalVector new_seed(n);
    for (std::size_t t = 0; t < n; ++t) {
      new_l[t] = c * basis[l][t] + basis[seed][t];
      new_seed[t] = basis[seed][t] - basis[l][t];
    }
    basis[l] = std::move(new_l);
    basis[seed] = std::move(new_seed);
  }

  return {basis.begin() + static_cast<std::ptrdiff_t>(k), basis.end()};
}

SymmetricExtensionOutput build_symmetric_extension(const HittingSetInstance& inst) {
  const RationalMatrix v = build_V(inst);
  const std::size_t base = v.rows();
  const std::size_t pairs = base * (base - 1) / 2;
  const std::size_t r = base + 1 + pairs;

  SymmetricExtensionOutput out;
  out.r = r;
  out.base_dimension = base;

  std::vector<RationalVector> top(base, RationalVector(r));
  for (std::size_t i = 0; i < base; ++i) {
    for (std::size_t j = 0; j < base; ++j) top[i][j] = v(i, j);
  }
  std::size_t col = base;
  for (std::size_t i = 0; i < base; ++i) {
    for (std::size_t j = i + 1; j < base; ++j, ++col) {
      out.column_pairs.emplace_back(i, j);
      const RationalVector ri = v.row(i);
      const RationalVector rj = v.row(j);
      const Rational ip = dot(ri, rj);
      if (sgn(ip) == 0) continue;
      top[i][col] = 1;
      top[j][col] = -ip;
    }
  }

  // Extend in coordinates rotated so that the last one comes first.
  auto rotate_in = [r](const RationalVector& x) {
    RationalVector y(r);
    y[0] = x[r - 1];
    for (std::size_t t = 0; t + 1 < r; ++t) y[t + 1] = x[t];
    return y;
  };
  auto rotate_out = [r](const RationalVector& y) {
    RationalVector x(r);
    x[r - 1] = y[0];
    for (std::size_t t = 0; t + 1 < r; ++t) x[t] = y[t + 1];
    return x;
  };
  std::vector<RationalVector> rotated;
  for (const auto& row : top) rotated.push_back(rotate_in(row));
  std::vector<RationalVector> rows = top;
  for (const auto& extra : orthogonal_extension(rotated, r)) rows.push_back(rotate_out(extra));

  out.v_hat = RationalMatrix::from_rows(rows);
  std::vector<Rational> d;
  for (std::size_t i = 0; i < r; ++i) d.emplace_back(static_cast<unsigned long>(i + 1));
  const RationalMatrix dm = RationalMatrix::diagonal(d);
  out.a_hat = out.v_hat.inverse() * dm * out.v_hat;

  const RationalMatrix gram = out.v_hat * out.v_hat.transpose();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j && sgn(gram(i, j)) != 0) throw InternalError("rows of V_hat are not orthogonal");
    }
  }
  if (!out.a_hat.is_symmetric()) throw InternalError("A_hat is not symmetric");
  if (!(out.v_hat * out.a_hat == dm * out.v_hat)) {
    throw InternalError("rows of V_hat are not left eigenvectors of A_hat");
  }
  return out;
}

}  // namespace minctrl
