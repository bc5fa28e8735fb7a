#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "lenshfk/rational.hpp"

namespace lens {

// A genus-one doubly-pointed diagram is stored cut open along the alpha
// circle: the band T^2 - alpha with coordinates x mod 1 and y in (0,1).
// Crossing j sits on the line at position pos_j and beta crosses the line
// there in direction dir_j.  The arc between crossings j and j+1 carries an
// integer winding w_j: its preferred lift in the strip R x [0,1] runs from
// horizontal coordinate pos_j to pos_{j+1} + w_j.

struct Crossing {
    Rat pos;   // in [0,1), pairwise distinct
    int dir;   // +1 or -1
};

struct CrossingSeq {
    std::vector<Crossing> crossings;   // in traversal order along beta
    std::vector<long long> windings;   // windings[j] belongs to the arc j -> j+1

    int size() const { return static_cast<int>(crossings.size()); }
    long long vertical_class() const;    // v = sum of dirs; |v| = p
    long long horizontal_class() const;  // h = sum of windings; q = h mod p
};

struct Basepoint {
    Rat x;   // in [0,1)
    Rat y;   // in (0,1)
};

struct Diagram {
    CrossingSeq beta;
    Basepoint z;
    Basepoint w;
    std::string label;
};

// ---------------------------------------------------------------------------
// Validated cell structure: the 4-valent map on the torus induced by alpha
// and beta, together with an exact piecewise-linear realization of the band
// picture that downstream code uses for point location and disk counting.

struct Pt {
    Rat x;
    Rat y;
};

// One beta-arc realized inside its band, local y in [0,1].  Two to four
// vertices: vertical takeoff, slant or staple run, vertical landing.
struct ArcPath {
    std::vector<Pt> pts;
    int kind;   // 0 = through, 1 = cap (hugs y=0), 2 = cup (hangs from y=1)
};

// A directed edge side inside a face walk; dm/db are the integer translate
// (x units, bands) of the dart's tail relative to the face anchor.
struct FaceDartRef {
    int dart;
    long long dm;
    long long db;
};

struct Face {
    std::vector<FaceDartRef> boundary;   // counterclockwise, interior on the left
    int corners = 0;                     // boundary word length
    std::vector<Pt> polygon;             // simple ccw polygon, anchor-local coords
    Pt interior;                         // strictly inside
    Pt interior2;                        // a second distinct interior point
};

// Reference to a face instance in the universal cover of the torus: the
// face's anchor crossing placed at x-translate m and line b.
struct FaceRef {
    int face = -1;
    long long dm = 0;
    long long db = 0;
};

class CellStructure {
  public:
    int n = 0;                       // V; E = 2n, F = n
    int euler_check = 0;             // V - E + F
    std::vector<Face> faces;
    int z_face = -1;
    int w_face = -1;
    bool disk_bounding = false;      // z and w share a face

    // Crossing lift tables along the preferred lift of beta: crossing j sits
    // at (pos_j + tx[j], line tb[j]); one period translates by (h, v).
    std::vector<long long> tx, tb;
    long long h = 0, v = 0;

    // Alpha circle subdivision: sorted_ids[i] is the crossing at the i-th
    // position along alpha; alpha edge i runs east from it to the next.
    std::vector<int> sorted_ids;
    std::vector<int> sorted_rank;    // inverse of sorted_ids
    std::vector<Rat> positions;      // crossing positions, by crossing id

    std::vector<ArcPath> arcs;       // canonical realization per beta-arc

    // left_face[d]: face on the left of dart d, with the face anchor's
    // translate relative to the dart's tail crossing instance.
    std::vector<FaceRef> left_face;

    // quad[j][g]: face instance at germ corner g of crossing j
    // (g: 0=NE, 1=NW, 2=SW, 3=SE), anchored relative to the crossing.
    std::vector<std::array<FaceRef, 4>> quad;

    // --- darts: id = 2*edge + direction; edges 0..n-1 alpha, n..2n-1 beta ---
    int alpha_dart(int edge, bool fwd) const { return 2 * edge + (fwd ? 0 : 1); }
    int beta_dart(int arc, bool fwd) const { return 2 * (n + arc) + (fwd ? 0 : 1); }
    static int edge_of(int dart) { return dart / 2; }
    static bool is_fwd(int dart) { return (dart & 1) == 0; }
    bool is_alpha(int dart) const { return edge_of(dart) < n; }
    int rev(int dart) const { return dart ^ 1; }

    int dart_tail(int dart) const;                       // crossing id
    int dart_head(int dart) const;
    std::pair<long long, long long> dart_shift(int dart) const;   // head translate - tail translate

    // Plane band of the base lift of arc j (the band above line tb[j] for an
    // upward crossing, below it for a downward one).
    long long arc_band(int j) const;

    // Geometry of the dart realized with its tail crossing at translate
    // (m, b): list of plane points.
    std::vector<Pt> dart_polyline(int dart, long long m, long long b) const;

    // Face instance interior point in plane coordinates.
    Pt face_interior(const FaceRef& ref, bool second = false) const;

    // Locate the face of the band picture containing a point off the curve.
    int locate_face(const Pt& q) const;
};

// ---------------------------------------------------------------------------
// Operations

// Full validation: beta embedded (checked on strip lifts), complement
// cellular, basepoints in open faces.  Throws BetaNullHomologous,
// NotEmbedded, NotCellular or BasepointOnCurve.
CellStructure validate(const Diagram& d);

// Ambient lens space (p, q) read off [beta] in H_1(T^2); q normalized to
// 0 <= q < p.
std::pair<long long, long long> ambient(const Diagram& d);

// The straight minimal diagram of L(p,q) with the simple knot of homology
// class k: p crossings, all upward, positions j*q/p mod 1 in beta order, z
// in the reference face and w k alpha-steps to the east.
Diagram simple_knot(long long p, long long q, long long k);

// The two knots obtained from the minimal diagram by one finger move across
// a basepoint region: p+2 crossings, total rank p+2.  They differ by which
// basepoint the finger wraps.
Diagram t_r(long long p, long long q);
Diagram t_l(long long p, long long q);

// Finger-move site: an alpha edge on the chosen face's boundary.
struct FingerSite {
    int face = 0;
    int alpha_edge = 0;
};

// Isotope beta by pushing depth successive fingers from the face across the
// alpha edge.  Adds 2*depth crossings; the knot is unchanged (basepoints are
// carried through the face correspondence of the move).
Diagram finger_move(const Diagram& d, const FingerSite& site, int depth);

// Cancel empty bigons (avoiding both basepoints) until none remain.  The
// result has no empty bigon, so its generator count equals the total rank
// of its hat knot Floer homology.
Diagram reduce(const Diagram& d);

// Class of the knot in H_1(L(p,q)) = Z/p: the cycle (arc z->w avoiding
// alpha) + (arc w->z avoiding beta), normalized so simple_knot(p,q,k)
// reports k.
long long homology_class(const Diagram& d);

}  // namespace lens
