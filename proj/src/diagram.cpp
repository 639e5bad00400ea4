#include "dunwoody/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <tuple>

namespace dunwoody {

namespace {

int mod(int x, int m) {
  int v = x % m;
  return v < 0 ? v + m : v;
}

}  // namespace

DunwoodyParams::DunwoodyParams(int a_, int b_, int c_, int n_, int r_, int s_)
    : a(a_), b(b_), c(c_), n(n_), r(r_), s(s_) {
  if (a < 0 || b < 0 || c < 0) throw domain_error("arc multiplicities a,b,c must be >= 0");
  if (a + b + c <= 0) throw domain_error("a+b+c must be positive");
  if (n < 1) throw domain_error("n must be positive");
  r = mod(r, d());
  s = mod(s, n);
}

const char* bundle_name(Bundle b) {
  switch (b) {
    case Bundle::AUpper: return "A_upper";
    case Bundle::ALower: return "A_lower";
    case Bundle::B: return "B";
    case Bundle::C: return "C";
  }
  return "?";
}

std::optional<Bundle> bundle_from_name(const std::string& name) {
  if (name == "A_upper") return Bundle::AUpper;
  if (name == "A_lower") return Bundle::ALower;
  if (name == "B") return Bundle::B;
  if (name == "C") return Bundle::C;
  return std::nullopt;
}

SlotRef Diagram::slot_ref(int id) const {
  SlotRef s;
  s.lower = id >= n * d;
  int rest = s.lower ? id - n * d : id;
  s.cycle = rest / d;
  s.pos = rest % d;
  return s;
}

std::vector<int> Diagram::arc_of_slot() const {
  std::vector<int> out(slot_count(), -1);
  for (size_t k = 0; k < arcs.size(); ++k) {
    if (arcs[k].x >= 0 && arcs[k].x < slot_count()) out[arcs[k].x] = static_cast<int>(k);
    if (arcs[k].y >= 0 && arcs[k].y < slot_count()) out[arcs[k].y] = static_cast<int>(k);
  }
  return out;
}

bool Diagram::structure_ok() const {
  const int total = slot_count();
  if (static_cast<int>(gluing.size()) != total) return false;
  std::vector<int> ends(total, 0);
  for (const Arc& arc : arcs) {
    if (arc.x < 0 || arc.x >= total || arc.y < 0 || arc.y >= total || arc.x == arc.y) return false;
    ++ends[arc.x];
    ++ends[arc.y];
  }
  for (int e : ends)
    if (e != 1) return false;
  for (int x = 0; x < total; ++x) {
    int y = gluing[x];
    if (y < 0 || y >= total || gluing[y] != x) return false;
    if ((x < n * d) == (y < n * d)) return false;  // must pair upper with lower
  }
  return true;
}

int Diagram::handle_of_slot(int id) const {
  int upper = id < n * d ? id : gluing[id];
  return upper / d;
}

Diagram build(const DunwoodyParams& params) {
  Diagram dg;
  dg.params = params;
  dg.n = params.n;
  dg.d = params.d();
  const int n = dg.n, d = dg.d;
  const int a = params.a, b = params.b, c = params.c;

  auto up = [&](int i, int v) { return mod(i, n) * d + v; };
  auto low = [&](int i, int v) { return n * d + mod(i, n) * d + v; };
  auto add = [&](int x, int y, Bundle bundle) {
    dg.arcs.push_back(Arc{std::min(x, y), std::max(x, y), bundle});
  };

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < a; ++j) add(up(i, j), up(i + 1, d - 1 - j), Bundle::AUpper);
    for (int u = 0; u < b; ++u) add(up(i, a + u), low(i + 1, c + u), Bundle::B);
    for (int t = 0; t < c; ++t) add(up(i, a + b + t), low(i, t), Bundle::C);
    for (int k = 0; k < a; ++k) add(low(i, d - 1 - k), low(i + 1, c + b + k), Bundle::ALower);
  }
  std::sort(dg.arcs.begin(), dg.arcs.end(),
            [](const Arc& p, const Arc& q) { return std::tie(p.x, p.y) < std::tie(q.x, q.y); });

  dg.gluing.assign(2 * n * d, -1);
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < d; ++v) {
      int x = up(i, v);
      int y = low(i - params.s, mod(v + params.r, d));
      dg.gluing[x] = y;
      dg.gluing[y] = x;
    }
  return dg;
}

namespace {

std::vector<int> arc_partner(const Diagram& dg) {
  std::vector<int> partner(dg.slot_count(), -1);
  for (const Arc& arc : dg.arcs) {
    partner[arc.x] = arc.y;
    partner[arc.y] = arc.x;
  }
  return partner;
}

void require_structure(const Diagram& dg, const char* op) {
  if (!dg.structure_ok())
    throw domain_error(std::string(op) + ": diagram structure is broken (missing arcs or bad gluing)");
}

}  // namespace

TracedCurves trace(const Diagram& dg) {
  require_structure(dg, "trace");
  const int nd = dg.n * dg.d;
  std::vector<int> partner = arc_partner(dg);
  std::vector<int> arc_at = dg.arc_of_slot();
  std::vector<char> visited(dg.slot_count(), 0);

  TracedCurves out;
  // Scanning upper slots in increasing id order makes each curve start at
  // its smallest (cycle, position) crossing, traversed downward.
  for (int start = 0; start < nd; ++start) {
    if (visited[start]) continue;
    Curve curve;
    int x = start;
    do {
      visited[x] = 1;
      int across = dg.gluing[x];
      curve.slots.push_back(x);
      curve.letters.push_back(x < nd ? dg.handle_of_slot(x) + 1 : -(dg.handle_of_slot(x) + 1));
      curve.arc_index.push_back(arc_at[across]);
      x = partner[across];
    } while (x != start);
    for (int slot : curve.slots) {
      if (visited[dg.gluing[slot]])
        throw domain_error("trace: degenerate traversal (curve meets its own reverse)");
      visited[dg.gluing[slot]] = 1;
    }
    out.curves.push_back(std::move(curve));
  }
  for (int x = 0; x < dg.slot_count(); ++x) assert(visited[x]);
  return out;
}

int TracedCurves::total_steps() const {
  int total = 0;
  for (const Curve& c : curves) total += static_cast<int>(c.slots.size());
  return total;
}

namespace {

// Darts of the closed-surface map. Vertex t = i*d + v is the identification
// of upper slot (i,v) with its glued lower slot. Four darts per vertex, in
// counterclockwise order: segment forward, upper arc, segment backward,
// lower arc.
struct DartMap {
  int n, d;
  std::vector<int> reversal;

  explicit DartMap(const Diagram& dg) : n(dg.n), d(dg.d) {
    const int nd = n * d;
    std::vector<int> partner = arc_partner(dg);
    auto vertex_of_slot = [&](int slot) { return slot < nd ? slot : dg.gluing[slot]; };
    auto arc_dart_of_slot = [&](int slot) {
      return 4 * vertex_of_slot(slot) + (slot < nd ? 1 : 3);
    };
    reversal.assign(4 * nd, -1);
    for (int t = 0; t < nd; ++t) {
      int i = t / d, v = t % d;
      reversal[4 * t + 0] = 4 * (i * d + (v + 1) % d) + 2;
      reversal[4 * t + 2] = 4 * (i * d + (v + d - 1) % d) + 0;
      reversal[4 * t + 1] = arc_dart_of_slot(partner[t]);
      reversal[4 * t + 3] = arc_dart_of_slot(partner[dg.gluing[t]]);
    }
  }

  int next_in_face(int dart) const {
    int rev = reversal[dart];
    return (rev & ~3) + ((rev + 1) & 3);
  }

  bool is_segment(int dart) const { return (dart & 1) == 0; }
};

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

std::vector<std::vector<int>> surface_faces(const Diagram& dg) {
  require_structure(dg, "surface_faces");
  DartMap dm(dg);
  std::vector<char> seen(dm.reversal.size(), 0);
  std::vector<std::vector<int>> faces;
  for (int start = 0; start < static_cast<int>(dm.reversal.size()); ++start) {
    if (seen[start]) continue;
    std::vector<int> face;
    int dart = start;
    do {
      seen[dart] = 1;
      face.push_back(dart);
      dart = dm.next_in_face(dart);
    } while (dart != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

ValidityReport validate(const Diagram& dg) {
  ValidityReport rep;
  if (!dg.structure_ok()) return rep;

  const int nd = dg.n * dg.d;
  TracedCurves tc = trace(dg);
  rep.curve_count = static_cast<int>(tc.curves.size());

  std::vector<std::vector<int>> faces = surface_faces(dg);
  rep.face_count = static_cast<int>(faces.size());
  rep.closed_surface_euler = nd - 2 * nd + rep.face_count;
  // Cutting along the curves doubles each vertex and each arc edge, and
  // keeps the faces: chi = 2nd - 3nd + F, the same value.
  rep.cut_surface_euler = rep.closed_surface_euler;

  DartMap dm(dg);
  std::vector<int> face_of(dm.reversal.size(), -1);
  for (size_t f = 0; f < faces.size(); ++f)
    for (int dart : faces[f]) face_of[dart] = static_cast<int>(f);
  Dsu dsu(rep.face_count);
  for (int dart = 0; dart < static_cast<int>(dm.reversal.size()); ++dart)
    if (dm.is_segment(dart)) dsu.unite(face_of[dart], face_of[dm.reversal[dart]]);
  std::set<int> roots;
  for (int f = 0; f < rep.face_count; ++f) roots.insert(dsu.find(f));
  rep.cut_surface_connected = roots.size() == 1;

  rep.is_heegaard = rep.curve_count == dg.n && rep.cut_surface_connected &&
                    rep.cut_surface_euler == 2 - 2 * dg.n;
  return rep;
}

Presentation induced_presentation(const Diagram& dg) {
  ValidityReport rep = validate(dg);
  if (!rep.is_heegaard)
    throw not_heegaard_error("diagram is not a Heegaard diagram (curves=" +
                             std::to_string(rep.curve_count) + ", expected " +
                             std::to_string(dg.n) + ")");
  TracedCurves tc = trace(dg);
  Presentation p;
  p.rank = dg.n;
  for (const Curve& curve : tc.curves) p.relators.push_back(reduce(Word(dg.n, curve.letters)));
  return p;
}

namespace {

// Index rotation: cycle i -> i+1, positions unchanged.
int rotate_slot(const Diagram& dg, int slot) {
  const int nd = dg.n * dg.d;
  bool lower = slot >= nd;
  int rest = lower ? slot - nd : slot;
  int i = rest / dg.d, v = rest % dg.d;
  return (lower ? nd : 0) + ((i + 1) % dg.n) * dg.d + v;
}

}  // namespace

SymmetryReport check_symmetry(const Diagram& dg) {
  SymmetryReport rep;
  const int total = dg.slot_count();

  std::vector<int> partner(total, -1);
  std::vector<Bundle> bundle_at(total, Bundle::B);
  std::vector<char> has_arc(total, 0);
  for (const Arc& arc : dg.arcs) {
    if (arc.x < 0 || arc.x >= total || arc.y < 0 || arc.y >= total) return rep;
    partner[arc.x] = arc.y;
    partner[arc.y] = arc.x;
    bundle_at[arc.x] = bundle_at[arc.y] = arc.bundle;
    has_arc[arc.x] = has_arc[arc.y] = 1;
  }

  rep.arcs_invariant = true;
  for (int x = 0; x < total; ++x) {
    int rx = rotate_slot(dg, x);
    if (!has_arc[x] || !has_arc[rx] || partner[rx] != rotate_slot(dg, partner[x]) ||
        bundle_at[rx] != bundle_at[x]) {
      rep.arcs_invariant = false;
      break;
    }
  }

  rep.gluing_equivariant = static_cast<int>(dg.gluing.size()) == total;
  if (rep.gluing_equivariant)
    for (int x = 0; x < total; ++x) {
      int gx = dg.gluing[x];
      if (gx < 0 || gx >= total || dg.gluing[rotate_slot(dg, x)] != rotate_slot(dg, gx)) {
        rep.gluing_equivariant = false;
        break;
      }
    }

  if (rep.ok() && dg.structure_ok()) {
    ValidityReport v = validate(dg);
    if (v.is_heegaard) {
      TracedCurves tc = trace(dg);
      std::vector<int> curve_of(total, -1);
      for (size_t k = 0; k < tc.curves.size(); ++k)
        for (int slot : tc.curves[k].slots) {
          curve_of[slot] = static_cast<int>(k);
          curve_of[dg.gluing[slot]] = static_cast<int>(k);
        }
      int k = 0, steps = 0;
      do {
        k = curve_of[rotate_slot(dg, tc.curves[k].slots[0])];
        ++steps;
      } while (k != 0 && steps <= dg.n);
      rep.curves_single_orbit = (steps == dg.n);
    }
  }
  return rep;
}

int rotation_invariant_faces(const Diagram& dg) {
  require_structure(dg, "rotation_invariant_faces");
  std::vector<std::vector<int>> faces = surface_faces(dg);
  std::vector<int> face_of(4 * dg.n * dg.d, -1);
  for (size_t f = 0; f < faces.size(); ++f)
    for (int dart : faces[f]) face_of[dart] = static_cast<int>(f);
  auto rotate_dart = [&](int dart) {
    int t = dart / 4, k = dart % 4;
    int i = t / dg.d, v = t % dg.d;
    return 4 * (((i + 1) % dg.n) * dg.d + v) + k;
  };
  int count = 0;
  for (const std::vector<int>& face : faces) {
    bool invariant = true;
    for (int dart : face)
      if (face_of[rotate_dart(dart)] != face_of[face[0]]) {
        invariant = false;
        break;
      }
    if (invariant) ++count;
  }
  return count;
}

std::vector<ScanRecord> scan(const ScanRanges& ranges) {
  std::vector<ScanRecord> out;
  for (int a = ranges.a_lo; a <= ranges.a_hi; ++a)
    for (int b = ranges.b_lo; b <= ranges.b_hi; ++b)
      for (int c = ranges.c_lo; c <= ranges.c_hi; ++c)
        for (int n = ranges.n_lo; n <= ranges.n_hi; ++n) {
          if (a < 0 || b < 0 || c < 0 || a + b + c <= 0 || n < 1) {
            ScanRecord rec{a, b, c, n, 0, 0, {}, {}, {}};
            rec.error = "invalid parameters: need a,b,c >= 0, a+b+c > 0, n >= 1";
            out.push_back(std::move(rec));
            continue;
          }
          const int d = 2 * a + b + c;
          const int r_lo = ranges.r ? mod(*ranges.r, d) : 0;
          const int r_hi = ranges.r ? r_lo : d - 1;
          const int s_lo = ranges.s ? mod(*ranges.s, n) : 0;
          const int s_hi = ranges.s ? s_lo : n - 1;
          for (int r = r_lo; r <= r_hi; ++r)
            for (int s = s_lo; s <= s_hi; ++s) {
              ScanRecord rec{a, b, c, n, r, s, {}, {}, {}};
              try {
                Diagram dg = build(DunwoodyParams(a, b, c, n, r, s));
                rec.report = validate(dg);
                if (rec.report->is_heegaard)
                  rec.detected = detect_cyclic(induced_presentation(dg));
              } catch (const std::exception& e) {
                rec.error = e.what();
              }
              out.push_back(std::move(rec));
            }
        }
  return out;
}

}  // namespace dunwoody
