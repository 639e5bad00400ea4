#include "dunwoody/covering.hpp"

#include <cstdlib>

namespace dunwoody {

namespace {

int mod(int x, int m) {
  int v = x % m;
  return v < 0 ? v + m : v;
}

}  // namespace

QuotientData::QuotientData(int a_, int b_, int c_, int r_) : a(a_), b(b_), c(c_), r(r_) {
  if (a < 0 || b < 0 || c < 0) throw domain_error("arc multiplicities a,b,c must be >= 0");
  if (a + b + c <= 0) throw domain_error("a+b+c must be positive");
  r = mod(r, d());
}

CoveringSpec::CoveringSpec(QuotientData q, int n_, int s_) : quotient(q), n(n_), s(s_) {
  if (n < 1) throw domain_error("covering degree n must be >= 1");
  s = mod(s, n);
}

QuotientData quotient(const DunwoodyParams& params) {
  return QuotientData(params.a, params.b, params.c, params.r);
}

DunwoodyParams lift(const QuotientData& q, int n, int s) {
  if (n < 1) throw domain_error("covering degree n must be >= 1");
  return DunwoodyParams(q.a, q.b, q.c, n, q.r, s);
}

LensOrder lens_order(const QuotientData& q) {
  Diagram dg = build(lift(q, 1, 0));
  Presentation p = induced_presentation(dg);  // throws when not a Heegaard diagram
  // Rank 1: the reduced relator is a power of x1; its exponent is the sum.
  long long e = 0;
  for (int L : p.relators.at(0).letters) e += (L > 0 ? 1 : -1);
  return LensOrder{BigInt(std::abs(e))};
}

StronglyCyclicResult strongly_cyclic_check(const CoveringSpec& spec) {
  StronglyCyclicResult res;
  Diagram dg = build(lift(spec.quotient, spec.n, spec.s));
  ValidityReport rep = validate(dg);
  res.lift_valid = rep.is_heegaard;
  if (!res.lift_valid) {
    res.reason = "lifted diagram is not a Heegaard diagram (curves=" +
                 std::to_string(rep.curve_count) + ", expected " + std::to_string(spec.n) + ")";
    return res;
  }

  SymmetryReport sym = check_symmetry(dg);
  res.curves_single_orbit = sym.curves_single_orbit.value_or(false);

  // The branch arc pierces the surface at the two rotation-fixed points;
  // each lies inside a rotation-invariant face. Exactly two such faces
  // means the preimage of the branch arc is one arc.
  res.branch_arc_single = rotation_invariant_faces(dg) == 2;

  if (!res.curves_single_orbit)
    res.reason = "rotation does not permute the curves in a single n-cycle";
  else if (!res.branch_arc_single)
    res.reason = "rotation-invariant face count differs from 2";
  res.strongly_cyclic = res.curves_single_orbit && res.branch_arc_single;
  return res;
}

}  // namespace dunwoody
