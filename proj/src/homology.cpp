#include "dunwoody/homology.hpp"

#include <algorithm>
#include <sstream>

namespace dunwoody {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  // Bareiss: division-free pivoting with exact intermediate divisions.
  if (m.rows != m.cols) throw domain_error("determinant needs a square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

BigInt AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  BigInt o = 1;
  for (const BigInt& d : torsion) o *= d;
  return o;
}

std::string format_group(const AbelianGroup& g) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " \xE2\x8A\x95 ";  // UTF-8 circled plus
    first = false;
  };
  if (g.free_rank == 1) {
    sep();
    out << "Z";
  } else if (g.free_rank > 1) {
    sep();
    out << "Z^" << g.free_rank;
  }
  for (const BigInt& d : g.torsion) {
    sep();
    out << "Z_" << d;
  }
  if (first) out << "0";
  return out.str();
}

IntMatrix abelianize(const Presentation& p) {
  IntMatrix m(static_cast<int>(p.relators.size()), p.rank);
  for (int i = 0; i < m.rows; ++i) {
    const Word& r = p.relators[i];
    if (r.rank != p.rank) throw shape_error("relator rank differs from presentation rank");
    for (int L : r.letters) m.at(i, std::abs(L) - 1) += (L > 0 ? 1 : -1);
  }
  return m;
}

namespace {

// Smallest nonzero |entry| in the trailing submatrix; ties go to the lowest
// (row, col). Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, int k, int& pi, int& pj) {
  bool found = false;
  BigInt best;
  for (int i = k; i < d.rows; ++i)
    for (int j = k; j < d.cols; ++j) {
      const BigInt& e = d.at(i, j);
      if (e == 0) continue;
      BigInt a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void add_row(IntMatrix& m, int dst, int src, const BigInt& f) {
  for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
}

void add_col(IntMatrix& m, int dst, int src, const BigInt& f) {
  for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
}

bool cross_clear(const IntMatrix& d, int k) {
  for (int i = k + 1; i < d.rows; ++i)
    if (d.at(i, k) != 0) return false;
  for (int j = k + 1; j < d.cols; ++j)
    if (d.at(k, j) != 0) return false;
  return true;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  const int nmin = std::min(m.rows, m.cols);

  for (int k = 0; k < nmin; ++k) {
    int pi, pj;
    if (!find_pivot(d, k, pi, pj)) break;
    for (;;) {
      swap_rows(d, k, pi);
      swap_rows(u, k, pi);
      swap_cols(d, k, pj);
      swap_cols(v, k, pj);

      for (int i = k + 1; i < d.rows; ++i)
        if (d.at(i, k) != 0) {
          BigInt q = d.at(i, k) / d.at(k, k);
          add_row(d, i, k, -q);
          add_row(u, i, k, -q);
        }
      for (int j = k + 1; j < d.cols; ++j)
        if (d.at(k, j) != 0) {
          BigInt q = d.at(k, j) / d.at(k, k);
          add_col(d, j, k, -q);
          add_col(v, j, k, -q);
        }

      if (!cross_clear(d, k)) {
        find_pivot(d, k, pi, pj);
        continue;
      }

      // Pivot divides everything below-right, or gets a row added to pull
      // the offending remainder into its cross.
      bool divides = true;
      for (int i = k + 1; i < d.rows && divides; ++i)
        for (int j = k + 1; j < d.cols && divides; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            add_row(d, k, i, 1);
            add_row(u, k, i, 1);
            divides = false;
          }
      if (divides) break;
      find_pivot(d, k, pi, pj);
    }
    if (d.at(k, k) < 0) {
      for (int c = 0; c < d.cols; ++c) d.at(k, c) = -d.at(k, c);
      for (int c = 0; c < u.cols; ++c) u.at(k, c) = -u.at(k, c);
    }
  }
  return res;
}

AbelianGroup homology(const Presentation& p) {
  IntMatrix m = abelianize(p);
  SmithResult s = smith_normal_form(m);
  AbelianGroup g;
  int nonzero = 0;
  for (int k = 0; k < std::min(m.rows, m.cols); ++k) {
    const BigInt& dk = s.d.at(k, k);
    if (dk == 0) continue;
    ++nonzero;
    if (dk > 1) g.torsion.push_back(dk);
  }
  g.free_rank = m.cols - nonzero;
  return g;
}

namespace {

int degree(const std::vector<BigInt>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

BigInt pow_abs(const BigInt& base, int e) {
  BigInt r = 1, b = abs(base);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  int da = degree(a), db = degree(b);
  const BigInt lcb = b[db];
  int scale_left = da - db + 1;
  int d;
  while ((d = degree(a)) >= db) {
    BigInt coef = a[d];
    for (BigInt& x : a) x *= lcb;
    for (int j = 0; j <= db; ++j) a[d - db + j] -= coef * b[j];
    --scale_left;
  }
  if (scale_left > 0) {
    BigInt f = 1;
    for (int i = 0; i < scale_left; ++i) f *= lcb;
    for (BigInt& x : a) x *= f;
  }
  return a;
}

}  // namespace

BigInt resultant_abs(std::vector<BigInt> a, std::vector<BigInt> b) {
  int da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return 0;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
  }
  if (db == 0) return pow_abs(b[0], da);
  std::vector<BigInt> r = pseudo_rem(a, b);
  int dr = degree(r);
  if (dr < 0) return 0;
  r.resize(dr + 1);
  b.resize(db + 1);
  BigInt num = resultant_abs(b, r) * pow_abs(b[db], da - dr);
  BigInt den = pow_abs(b[db], (da - db + 1) * db);
  return num / den;  // exact: the quotient is |Res(a, b)|
}

BigInt circulant_order(const Word& w, int n) {
  if (w.rank != n) throw shape_error("circulant_order: word rank must equal n");
  std::vector<BigInt> pw(n, 0);
  for (int L : w.letters) pw[std::abs(L) - 1] += (L > 0 ? 1 : -1);
  if (degree(pw) < 0) return 0;
  std::vector<BigInt> cyc(n + 1, 0);
  cyc[0] = -1;
  cyc[n] = 1;
  return resultant_abs(std::move(cyc), std::move(pw));
}

}  // namespace dunwoody
