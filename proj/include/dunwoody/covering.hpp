#pragma once

#include <string>

#include "dunwoody/diagram.hpp"
#include "dunwoody/homology.hpp"

namespace dunwoody {

/// The data the quotient of the cyclic symmetry depends on. Dropping n and s
/// makes "only depends on a,b,c,r" a fact of the type.
struct QuotientData {
  int a = 0, b = 0, c = 0;
  int r = 0;  // mod d

  QuotientData() = default;
  QuotientData(int a_, int b_, int c_, int r_);

  int d() const { return 2 * a + b + c; }
  bool operator==(const QuotientData&) const = default;
};

/// A branched covering of the quotient: degree n, cycle shift s. The
/// monodromy is normalized so the meridian class maps to 1 in Z_n.
struct CoveringSpec {
  QuotientData quotient;
  int n = 1;
  int s = 0;
  static constexpr int meridian_image = 1;

  CoveringSpec() = default;
  CoveringSpec(QuotientData q, int n_, int s_);
};

/// Order of the first homology of the quotient space; p = 1 means the
/// quotient is the 3-sphere, p = 0 encodes an infinite group.
struct LensOrder {
  BigInt p = 0;
  bool operator==(const LensOrder&) const = default;
};

struct StronglyCyclicResult {
  bool strongly_cyclic = false;
  std::string reason;  // set when false
  bool lift_valid = false;
  bool curves_single_orbit = false;
  bool branch_arc_single = false;  // exactly two rotation-invariant faces
};

QuotientData quotient(const DunwoodyParams& params);
DunwoodyParams lift(const QuotientData& q, int n, int s);

/// First-homology order of the degree-1 diagram: |exponent sum| of its
/// single relator. Throws not_heegaard_error when the genus-1 diagram is
/// not a Heegaard diagram.
LensOrder lens_order(const QuotientData& q);

StronglyCyclicResult strongly_cyclic_check(const CoveringSpec& spec);

}  // namespace dunwoody
