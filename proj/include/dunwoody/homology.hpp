#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "dunwoody/words.hpp"

namespace dunwoody {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of exact integers. Entries never round.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<BigInt> entries;  // row-major

  IntMatrix() = default;
  IntMatrix(int rows_, int cols_) : rows(rows_), cols(cols_), entries(size_t(rows_) * cols_) {}

  BigInt& at(int i, int j) { return entries[size_t(i) * cols + j]; }
  const BigInt& at(int i, int j) const { return entries[size_t(i) * cols + j]; }

  static IntMatrix identity(int n);
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free Gaussian elimination).
BigInt determinant(const IntMatrix& m);

/// A finitely generated abelian group: Z^free_rank + sum of Z_{d_i} with
/// d_1 | d_2 | ... and every d_i >= 2.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Product of torsion coefficients; 0 when the group is infinite.
  BigInt order() const;
  bool operator==(const AbelianGroup&) const = default;
};

/// Prints "0", "Z_3", "Z^2 (+) Z_2 (+) Z_6", ... using the UTF-8 (+) sign.
std::string format_group(const AbelianGroup& g);

struct SmithResult {
  IntMatrix d, u, v;  // d = u * m * v, with u and v unimodular
};

/// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix abelianize(const Presentation& p);

SmithResult smith_normal_form(const IntMatrix& m);

/// First homology (cokernel invariants) of the abelianized presentation.
AbelianGroup homology(const Presentation& p);

/// Independent oracle for cyclic presentations: |Res(p_w, t^n - 1)| where
/// p_w is the exponent polynomial of w. Returns 0 when the resultant
/// vanishes (infinite first homology).
BigInt circulant_order(const Word& w, int n);

/// |resultant| of two integer polynomials, coefficients ascending,
/// via integer pseudo-remainder sequences.
BigInt resultant_abs(std::vector<BigInt> a, std::vector<BigInt> b);

}  // namespace dunwoody
