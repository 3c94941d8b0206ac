#include "tensorsq/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>

namespace tensorsq {

bigint AbelianInvariants::torsion_order() const {
  bigint n = 1;
  for (u64 d : factors) n *= d;
  return n;
}

u32 AbelianInvariants::even_factor_count() const {
  u32 k = 0;
  for (u64 d : factors)
    if (d % 2 == 0) ++k;
  return k;
}

std::string AbelianInvariants::str() const {
  if (is_trivial()) return "[]";
  std::string s;
  if (rank > 0) s = "Z^" + std::to_string(rank);
  for (u64 d : factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + std::to_string(d);
  }
  return s;
}

namespace {

std::map<u64, std::vector<u32>> primary_parts(const std::vector<u64>& factors) {
  std::map<u64, std::vector<u32>> parts;  // prime -> exponents, unsorted
  for (u64 d : factors) {
    u64 m = d;
    for (u64 p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      u32 e = 0;
      while (m % p == 0) m /= p, ++e;
      parts[p].push_back(e);
    }
    if (m > 1) parts[m].push_back(1);
  }
  return parts;
}

}  // namespace

AbelianInvariants invariants_from_orders(std::vector<u64> orders, u32 rank) {
  auto parts = primary_parts(orders);
  std::size_t m = 0;
  for (auto& [p, es] : parts) {
    std::sort(es.begin(), es.end(), std::greater<>());
    m = std::max(m, es.size());
  }
  std::vector<u64> chain(m, 1);
  for (auto& [p, es] : parts)
    for (std::size_t i = 0; i < es.size(); ++i) {
      u64 q = 1;
      for (u32 e = 0; e < es[i]; ++e) q *= p;
      chain[i] *= q;  // chain[0] is the largest factor
    }
  std::reverse(chain.begin(), chain.end());
  return AbelianInvariants{rank, std::move(chain)};
}

AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b) {
  std::vector<u64> all = a.factors;
  all.insert(all.end(), b.factors.begin(), b.factors.end());
  return invariants_from_orders(std::move(all), a.rank + b.rank);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (c_ != o.r_) throw group_error("matrix shape mismatch");
  IntMatrix out(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const bigint& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

void IntMatrix::append_rows(const IntMatrix& o) {
  if (c_ == 0 && r_ == 0) c_ = o.c_;
  if (o.c_ != c_) throw group_error("matrix shape mismatch");
  a_.insert(a_.end(), o.a_.begin(), o.a_.end());
  r_ += o.r_;
}

std::vector<bigint> SmithResult::diagonal() const {
  std::vector<bigint> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d.at(i, i));
  return out;
}

namespace {

struct SnfWork {
  IntMatrix m, u, v, uinv, vinv;

  explicit SnfWork(const IntMatrix& in)
      : m(in),
        u(IntMatrix::identity(in.rows())),
        v(IntMatrix::identity(in.cols())),
        uinv(IntMatrix::identity(in.rows())),
        vinv(IntMatrix::identity(in.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    for (std::size_t r = 0; r < uinv.rows(); ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    for (std::size_t c = 0; c < vinv.cols(); ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  // row i -= q * row j
  void row_sub(std::size_t i, const bigint& q, std::size_t j) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) -= q * m.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
    for (std::size_t r = 0; r < uinv.rows(); ++r) uinv.at(r, j) += q * uinv.at(r, i);
  }
  // col i -= q * col j
  void col_sub(std::size_t i, const bigint& q, std::size_t j) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, i) -= q * m.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
    for (std::size_t c = 0; c < vinv.cols(); ++c) vinv.at(j, c) += q * vinv.at(i, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (std::size_t r = 0; r < uinv.rows(); ++r) uinv.at(r, i) = -uinv.at(r, i);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& in) {
  SnfWork w(in);
  const std::size_t R = in.rows(), C = in.cols();
  const std::size_t steps = std::min(R, C);

  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      // smallest nonzero |entry| in the submatrix, row-major tie-break
      std::size_t pi = R, pj = C;
      bigint best = 0;
      for (std::size_t i = k; i < R; ++i)
        for (std::size_t j = k; j < C; ++j) {
          const bigint& x = w.m.at(i, j);
          if (x == 0) continue;
          bigint ax = abs(x);
          if (pi == R || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (pi == R) break;  // submatrix is zero
      w.swap_rows(k, pi);
      w.swap_cols(k, pj);
      if (w.m.at(k, k) < 0) w.negate_row(k);

      bool touched = false;
      for (std::size_t i = k + 1; i < R; ++i) {
        if (w.m.at(i, k) == 0) continue;
        bigint q = w.m.at(i, k) / w.m.at(k, k);
        w.row_sub(i, q, k);
        if (w.m.at(i, k) != 0) touched = true;  // remainder smaller than pivot
      }
      for (std::size_t j = k + 1; j < C; ++j) {
        if (w.m.at(k, j) == 0) continue;
        bigint q = w.m.at(k, j) / w.m.at(k, k);
        w.col_sub(j, q, k);
        if (w.m.at(k, j) != 0) touched = true;
      }
      if (touched) continue;

      // pivot must divide everything that is left
      bool fixed = true;
      for (std::size_t i = k + 1; i < R && fixed; ++i)
        for (std::size_t j = k + 1; j < C && fixed; ++j)
          if (w.m.at(i, j) % w.m.at(k, k) != 0) {
            w.row_sub(k, bigint(-1), i);  // pull row i into the pivot row
            fixed = false;
          }
      if (fixed) break;
    }
  }

  SmithResult out{std::move(w.m), std::move(w.u), std::move(w.v), std::move(w.uinv),
                  std::move(w.vinv)};
#ifndef NDEBUG
  check_smith(in, out);
#endif
  return out;
}

void check_smith(const IntMatrix& m, const SmithResult& s) {
  if (!(s.u * m * s.v == s.d)) throw group_error("smith: u*m*v != d");
  if (!(s.u * s.uinv == IntMatrix::identity(m.rows()))) throw group_error("smith: u not unimodular");
  if (!(s.v * s.vinv == IntMatrix::identity(m.cols()))) throw group_error("smith: v not unimodular");
  auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) throw group_error("smith: negative diagonal");
    if (i + 1 < diag.size()) {
      if (diag[i] == 0 && diag[i + 1] != 0) throw group_error("smith: zero before nonzero");
      if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) throw group_error("smith: chain broken");
    }
  }
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j && s.d.at(i, j) != 0) throw group_error("smith: not diagonal");
}

AbelianInvariants cokernel_invariants(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  auto diag = s.diagonal();
  u32 nonzero = 0;
  std::vector<u64> factors;
  for (const bigint& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > std::numeric_limits<u64>::max()) throw cap_exceeded("invariant factor exceeds 64 bits");
    if (d > 1) factors.push_back(d.convert_to<u64>());
  }
  return AbelianInvariants{static_cast<u32>(m.cols() - nonzero), std::move(factors)};
}

AbelianInvariants lattice_quotient_invariants(const IntMatrix& gens, const IntMatrix& sub) {
  if (gens.cols() != sub.cols() && gens.rows() > 0 && sub.rows() > 0)
    throw group_error("lattice shape mismatch");
  const std::size_t C = gens.rows() ? gens.cols() : sub.cols();

  IntMatrix stacked(0, C);
  stacked.append_rows(gens);
  stacked.append_rows(sub);
  auto s1 = smith_normal_form(stacked);
  auto diag = s1.diagonal();

  // basis of L1 = rowspace(stacked): rows d_i * vinv_row_i for nonzero d_i
  std::size_t s = 0;
  while (s < diag.size() && diag[s] != 0) ++s;
  IntMatrix basis(s, C);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < C; ++j) basis.at(i, j) = diag[i] * s1.vinv.at(i, j);

  if (s == 0) return {};  // both lattices trivial

  // express each sub row in basis coordinates: y with y * basis == w
  auto sb = smith_normal_form(basis);
  auto bd = sb.diagonal();
  IntMatrix coords(sub.rows(), s);
  for (std::size_t rI = 0; rI < sub.rows(); ++rI) {
    // z = (w * v) ./ diag, then y = z * u
    std::vector<bigint> wv(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j)
      for (std::size_t c = 0; c < basis.cols(); ++c) wv[j] += sub.at(rI, c) * sb.v.at(c, j);
    std::vector<bigint> z(s);
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      if (j < s) {
        if (wv[j] % bd[j] != 0) throw group_error("sub lattice not contained in ambient");
        z[j] = wv[j] / bd[j];
      } else if (wv[j] != 0) {
        throw group_error("sub lattice not contained in ambient");
      }
    }
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t c = 0; c < s; ++c) coords.at(rI, j) += z[c] * sb.u.at(c, j);
  }
  return cokernel_invariants(coords);
}

IntMatrix BasedTensorSquare::nabla_rows() const {
  IntMatrix g(n + n * (n - 1) / 2, n * n);
  std::size_t row = 0;
  for (u32 i = 0; i < n; ++i) g.at(row++, label(i, i)) = 1;
  for (u32 i = 0; i < n; ++i)
    for (u32 j = i + 1; j < n; ++j) {
      g.at(row, label(i, j)) = 1;
      g.at(row, label(j, i)) = 1;
      ++row;
    }
  return g;
}

IntMatrix BasedTensorSquare::delta_rows() const {
  IntMatrix g(n * (n + 1) / 2, n * n);
  std::size_t row = 0;
  for (u32 i = 0; i < n; ++i) g.at(row++, label(i, i)) = 2;
  for (u32 i = 0; i < n; ++i)
    for (u32 j = i + 1; j < n; ++j) {
      g.at(row, label(i, j)) = 1;
      g.at(row, label(j, i)) = 1;
      ++row;
    }
  return g;
}

BasedTensorSquare abelian_tensor_square(const AbelianInvariants& a) {
  BasedTensorSquare t;
  t.r = a.rank;
  t.torsion = a.factors;
  t.n = a.rank + static_cast<u32>(a.factors.size());
  const u32 n = t.n;

  std::size_t nrel = 2 * a.factors.size() * n;
  t.relations = IntMatrix(nrel, std::size_t(n) * n);
  std::size_t row = 0;
  for (u32 ti = 0; ti < a.factors.size(); ++ti) {
    u32 i = t.r + ti;
    for (u32 j = 0; j < n; ++j) {
      t.relations.at(row++, t.label(i, j)) = a.factors[ti];
      t.relations.at(row++, t.label(j, i)) = a.factors[ti];
    }
  }
  t.tensor = cokernel_invariants(t.relations);
  return t;
}

AbelianSubquotients abelian_subquotients(const AbelianInvariants& a) {
  BasedTensorSquare t = abelian_tensor_square(a);
  IntMatrix nab = t.nabla_rows(), del = t.delta_rows();

  AbelianSubquotients out;
  out.tensor = t.tensor;
  out.nabla = lattice_quotient_invariants(nab, t.relations);
  out.delta = lattice_quotient_invariants(del, t.relations);

  IntMatrix del_amb = del;
  del_amb.append_rows(t.relations);
  out.nabla_mod_delta = lattice_quotient_invariants(nab, del_amb);

  IntMatrix ext = t.relations;
  ext.append_rows(nab);
  out.exterior = cokernel_invariants(ext);

  IntMatrix sym = t.relations;
  sym.append_rows(del);
  out.symmetric = cokernel_invariants(sym);
  return out;
}

}  // namespace tensorsq
