#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dunwoody/words.hpp"

namespace dunwoody {

/// The six defining integers. r is kept mod d = 2a+b+c, s mod n; the diagram
/// only depends on those residues.
struct DunwoodyParams {
  int a = 0, b = 0, c = 0;
  int n = 1;
  int r = 0, s = 0;

  DunwoodyParams() = default;
  DunwoodyParams(int a_, int b_, int c_, int n_, int r_, int s_);

  int d() const { return 2 * a + b + c; }
  bool operator==(const DunwoodyParams&) const = default;
};

enum class Bundle { AUpper, ALower, B, C };

const char* bundle_name(Bundle b);
std::optional<Bundle> bundle_from_name(const std::string& name);

/// Slots are numbered 0 .. 2nd-1: first the n*d upper-cycle slots (cycle
/// major, position minor), then the n*d lower ones. Positions run 0..d-1,
/// clockwise around upper cycles and counterclockwise around lower ones.
struct SlotRef {
  bool lower = false;
  int cycle = 0;  // 0-based
  int pos = 0;
};

struct Arc {
  int x = 0, y = 0;  // slot ids, x < y
  Bundle bundle = Bundle::B;
};

/// The combinatorial diagram: 2n cycles of d slots, one arc per slot, and
/// the slot identification pairing each upper cycle with a lower one.
///
/// Slot layout convention, frozen by calibration against the known
/// presentation families (see README):
///   upper cycle i (clockwise): [0,a) to upper i+1 | [a,a+b) to lower i+1
///                              | [a+b,a+b+c) to lower i | [a+b+c,d) to upper i-1
///   lower cycle i (counterclockwise): [0,c) to upper i | [c,c+b) to upper i-1
///                              | [c+b,c+b+a) to lower i-1 | [c+b+a,d) to lower i+1
///   arc pairings: upper i slot j  <-> upper i+1 slot d-1-j      (bundle A)
///                 upper i slot a+u <-> lower i+1 slot c+u       (bundle B)
///                 upper i slot a+b+t <-> lower i slot t         (bundle C)
///                 lower i slot d-1-k <-> lower i+1 slot c+b+k   (bundle A)
///   gluing: upper (i, v) <-> lower ((i-s) mod n, (v+r) mod d)
struct Diagram {
  DunwoodyParams params;
  int n = 1, d = 1;
  std::vector<Arc> arcs;       // sorted by (x, y)
  std::vector<int> gluing;     // involution on slot ids, upper <-> lower

  int slot_count() const { return 2 * n * d; }
  int slot_id(const SlotRef& s) const { return (s.lower ? n * d : 0) + s.cycle * d + s.pos; }
  SlotRef slot_ref(int id) const;

  /// -1 where a slot has no arc (possible on hand-edited diagrams).
  std::vector<int> arc_of_slot() const;

  /// True when every slot carries exactly one arc end and the gluing is a
  /// genuine upper/lower involution.
  bool structure_ok() const;

  /// Handle index (0-based) of the glued pair through a slot: the upper
  /// cycle index of the identification the slot belongs to.
  int handle_of_slot(int id) const;
};

/// One relator curve: the slots at which it crosses a handle, in traversal
/// order. Crossing at an upper slot reads +handle, at a lower slot -handle.
struct Curve {
  std::vector<int> slots;      // traversal order, canonical start/direction
  std::vector<int> arc_index;  // arc consumed after each crossing
  std::vector<int> letters;    // signed 1-based handle letters
};

struct TracedCurves {
  std::vector<Curve> curves;
  int total_steps() const;
};

struct ValidityReport {
  int curve_count = 0;
  bool is_heegaard = false;
  bool cut_surface_connected = false;
  int cut_surface_euler = 0;
  /// Closed-surface check: slots - edges + faces against 2 - 2n.
  int closed_surface_euler = 0;
  int face_count = 0;
};

struct SymmetryReport {
  bool arcs_invariant = false;
  bool gluing_equivariant = false;
  /// Set when the diagram is valid: rotation permutes the n curves in one n-cycle.
  std::optional<bool> curves_single_orbit;

  bool ok() const { return arcs_invariant && gluing_equivariant; }
};

Diagram build(const DunwoodyParams& params);
TracedCurves trace(const Diagram& diagram);
ValidityReport validate(const Diagram& diagram);
Presentation induced_presentation(const Diagram& diagram);
SymmetryReport check_symmetry(const Diagram& diagram);

/// Faces of the closed-surface map (orbits of the face permutation), as
/// dart lists. Exposed for the covering-side checks.
std::vector<std::vector<int>> surface_faces(const Diagram& diagram);

/// Number of faces fixed setwise by the order-n rotation.
int rotation_invariant_faces(const Diagram& diagram);

struct ScanRanges {
  int a_lo = 0, a_hi = 0;
  int b_lo = 0, b_hi = 0;
  int c_lo = 0, c_hi = 0;
  int n_lo = 1, n_hi = 1;
  std::optional<int> r;  // fixed residue, else all of 0..d-1
  std::optional<int> s;  // fixed residue, else all of 0..n-1
};

struct ScanRecord {
  int a, b, c, n, r, s;
  std::optional<std::string> error;  // set for rejected tuples
  std::optional<ValidityReport> report;
  std::optional<CyclicWitness> detected;
};

/// Builds and validates every tuple in the (lexicographically ordered)
/// product range; valid diagrams also get induced_presentation +
/// detect_cyclic. Rejected tuples are recorded, never thrown.
std::vector<ScanRecord> scan(const ScanRanges& ranges);

}  // namespace dunwoody
