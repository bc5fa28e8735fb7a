#include "lenshfk/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "lenshfk/error.hpp"
#include "lenshfk/floer.hpp"

namespace lens {

namespace {

long long imod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}
long long fdiv(long long a, long long m) {
    long long q = a / m;
    if (a % m != 0 && ((a < 0) != (m < 0))) --q;
    return q;
}

const Rat kZone(1, 4);   // staple zone height; slants occupy [1/4, 3/4]

// Local y of an arc's tail/head inside its band.
int tail_local(int dir_tail) { return dir_tail > 0 ? 0 : 1; }
int head_local(int dir_head) { return dir_head > 0 ? 1 : 0; }

struct ArcInfo {
    Rat a;        // tail x = pos of tail crossing
    Rat b;        // head x = a + lift displacement
    int ty, hy;   // local y of endpoints
    int kind;     // 0 through, 1 cap, 2 cup
    Rat lo, hi;   // x extent
};

std::vector<ArcInfo> arc_infos(const CrossingSeq& cs) {
    int n = cs.size();
    std::vector<ArcInfo> info(n);
    for (int j = 0; j < n; ++j) {
        const Crossing& t = cs.crossings[j];
        const Crossing& h = cs.crossings[(j + 1) % n];
        ArcInfo& ai = info[j];
        ai.a = t.pos;
        ai.b = h.pos + Rat(cs.windings[j]);
        ai.ty = tail_local(t.dir);
        ai.hy = head_local(h.dir);
        ai.kind = ai.ty != ai.hy ? 0 : (ai.ty == 0 ? 1 : 2);
        ai.lo = std::min(ai.a, ai.b);
        ai.hi = std::max(ai.a, ai.b);
        if (ai.a == ai.b && ai.kind != 0)
            throw InternalError("degenerate cap/cup displacement");
    }
    return info;
}

// Max translate radius any pairwise lift check needs.
long long translate_radius(const std::vector<ArcInfo>& info) {
    long long m = 2;
    for (const ArcInfo& ai : info)
        m = std::max(m, (ai.hi - ai.lo).floor() + 2);
    return m;
}

bool strictly_inside(const Rat& x, const Rat& lo, const Rat& hi) {
    return lo < x && x < hi;
}

// Embeddedness of beta, decided on strip lifts: through strands must keep
// their endpoint order against every translate, caps/cups must be nested or
// disjoint, and no through strand may start or end inside a cap/cup span.
void check_embedded(const std::vector<ArcInfo>& info) {
    int n = static_cast<int>(info.size());
    long long M = translate_radius(info);
    auto fail = [](int i, int j, long long m) {
        throw NotEmbedded("beta arcs " + std::to_string(i) + " and " + std::to_string(j) +
                          " cross (translate " + std::to_string(m) + ")");
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const ArcInfo& A = info[i];
            const ArcInfo& B = info[j];
            for (long long m = -M; m <= M; ++m) {
                if (i == j && m == 0) continue;
                Rat sh(m);
                if (A.kind == 0 && B.kind == 0) {
                    if (j < i || (i == j && m < 0)) continue;   // unordered pairs once
                    Rat bot_a = A.ty == 0 ? A.a : A.b, top_a = A.ty == 0 ? A.b : A.a;
                    Rat bot_b = B.ty == 0 ? B.a : B.b, top_b = B.ty == 0 ? B.b : B.a;
                    int sb = (bot_a - bot_b - sh).sign();
                    int st = (top_a - top_b - sh).sign();
                    if (sb == 0 || st == 0)
                        throw NotEmbedded("coincident strand endpoints");
                    if (sb != st) fail(i, j, m);
                } else if (A.kind != 0 && B.kind == A.kind) {
                    // interleaved spans force a crossing
                    bool l_in = strictly_inside(B.lo + sh, A.lo, A.hi);
                    bool h_in = strictly_inside(B.hi + sh, A.lo, A.hi);
                    if (l_in != h_in) fail(i, j, m);
                } else if (A.kind == 1 && B.kind == 0) {
                    Rat bot_b = B.ty == 0 ? B.a : B.b;
                    if (strictly_inside(bot_b + sh, A.lo, A.hi)) fail(i, j, m);
                } else if (A.kind == 2 && B.kind == 0) {
                    Rat top_b = B.ty == 0 ? B.b : B.a;
                    if (strictly_inside(top_b + sh, A.lo, A.hi)) fail(i, j, m);
                }
                // cap vs cup never forced to cross
            }
        }
    }
}

// Staple heights by nesting depth, innermost lowest.
std::vector<Rat> staple_heights(const std::vector<ArcInfo>& info, int kind) {
    int n = static_cast<int>(info.size());
    long long M = translate_radius(info);
    std::vector<long long> depth(n, -1);
    long long maxd = 0;
    for (int i = 0; i < n; ++i) {
        if (info[i].kind != kind) continue;
        long long d = 0;
        for (int j = 0; j < n; ++j) {
            if (info[j].kind != kind) continue;
            for (long long m = -M; m <= M; ++m) {
                if (info[j].lo + Rat(m) < info[i].lo && info[i].hi < info[j].hi + Rat(m)) ++d;
            }
        }
        depth[i] = d;
        maxd = std::max(maxd, d);
    }
    std::vector<Rat> h(n);
    for (int i = 0; i < n; ++i)
        if (depth[i] >= 0)
            h[i] = kZone * Rat(maxd + 1 - depth[i], maxd + 2);
    return h;
}

std::vector<ArcPath> realize_arcs(const std::vector<ArcInfo>& info) {
    int n = static_cast<int>(info.size());
    std::vector<Rat> cap_h = staple_heights(info, 1);
    std::vector<Rat> cup_h = staple_heights(info, 2);
    std::vector<ArcPath> out(n);
    for (int j = 0; j < n; ++j) {
        const ArcInfo& ai = info[j];
        ArcPath& p = out[j];
        p.kind = ai.kind;
        Rat one(1);
        if (ai.kind == 0) {
            if (ai.ty == 0)
                p.pts = {{ai.a, Rat(0)}, {ai.a, kZone}, {ai.b, one - kZone}, {ai.b, one}};
            else
                p.pts = {{ai.a, one}, {ai.a, one - kZone}, {ai.b, kZone}, {ai.b, Rat(0)}};
        } else if (ai.kind == 1) {
            Rat hc = cap_h[j];
            p.pts = {{ai.a, Rat(0)}, {ai.a, hc}, {ai.b, hc}, {ai.b, Rat(0)}};
        } else {
            Rat hc = cup_h[j];
            p.pts = {{ai.a, one}, {ai.a, one - hc}, {ai.b, one - hc}, {ai.b, one}};
        }
    }
    return out;
}

// Exact closed-segment intersection (used by the paranoid self check).
bool segments_meet(const Pt& a1, const Pt& a2, const Pt& b1, const Pt& b2) {
    auto cross = [](const Pt& o, const Pt& p, const Pt& q) {
        return ((p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x)).sign();
    };
    int d1 = cross(b1, b2, a1), d2 = cross(b1, b2, a2);
    int d3 = cross(a1, a2, b1), d4 = cross(a1, a2, b2);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    auto on = [&](const Pt& p, const Pt& q, const Pt& r) {
        return cross(p, q, r) == 0 && std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
               std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
    };
    return on(b1, b2, a1) || on(b1, b2, a2) || on(a1, a2, b1) || on(a1, a2, b2);
}

}  // namespace

long long CrossingSeq::vertical_class() const {
    long long v = 0;
    for (const Crossing& c : crossings) v += c.dir;
    return v;
}
long long CrossingSeq::horizontal_class() const {
    long long h = 0;
    for (long long w : windings) h += w;
    return h;
}

int CellStructure::dart_tail(int dart) const {
    int e = edge_of(dart);
    if (e < n) return is_fwd(dart) ? sorted_ids[e] : sorted_ids[(e + 1) % n];
    int j = e - n;
    return is_fwd(dart) ? j : (j + 1) % n;
}
int CellStructure::dart_head(int dart) const { return dart_tail(rev(dart)); }

std::pair<long long, long long> CellStructure::dart_shift(int dart) const {
    int e = edge_of(dart);
    std::pair<long long, long long> s;
    if (e < n) {
        s = {e == n - 1 ? 1 : 0, 0};
    } else {
        int j = e - n;
        long long tx1 = j + 1 < n ? tx[j + 1] : tx[0] + h;
        long long tb1 = j + 1 < n ? tb[j + 1] : tb[0] + v;
        s = {tx1 - tx[j], tb1 - tb[j]};
    }
    if (!is_fwd(dart)) s = {-s.first, -s.second};
    return s;
}

long long CellStructure::arc_band(int j) const {
    const Crossing& t = faces.empty() ? Crossing{} : Crossing{};   // silence unused warning path
    (void)t;
    return tb[j] + (arcs[j].kind == 2 || (arcs[j].kind == 0 && arcs[j].pts.front().y == Rat(1))
                        ? -1
                        : 0);
}

std::vector<Pt> CellStructure::dart_polyline(int dart, long long m, long long b) const {
    int e = edge_of(dart);
    if (!is_fwd(dart)) {
        auto s = dart_shift(dart);
        std::vector<Pt> p = dart_polyline(rev(dart), m + s.first, b + s.second);
        std::reverse(p.begin(), p.end());
        return p;
    }
    if (e < n) {
        const Rat xw = Rat(m) + /* west pos */ Rat(0);
        int cw = sorted_ids[e];
        int ce = sorted_ids[(e + 1) % n];
        Rat x0 = arcs.empty() ? Rat(0) : Rat(0);
        (void)x0;
        (void)xw;
        Rat pw = pos_of(cw) + Rat(m);
        Rat pe = pos_of(ce) + Rat(m + (e == n - 1 ? 1 : 0));
        return {{pw, Rat(b)}, {pe, Rat(b)}};
    }
    int j = e - n;
    // tail at local y 0 means band == b; tail at local 1 means band == b-1
    long long band = arcs[j].pts.front().y == Rat(0) ? b : b - 1;
    std::vector<Pt> p;
    p.reserve(arcs[j].pts.size());
    for (const Pt& q : arcs[j].pts) p.push_back({q.x + Rat(m), q.y + Rat(band)});
    return p;
}

Pt CellStructure::face_interior(const FaceRef& ref, bool second) const {
    const Face& f = faces[ref.face];
    const Pt& ip = second ? f.interior2 : f.interior;
    return {ip.x + Rat(ref.dm), ip.y + Rat(ref.db)};
}

// pos_of helper lives on CellStructure via the diagram it was built from;
// store positions at build time.
// (defined below through the builder's captured table)

namespace {

struct Builder {
    const Diagram& d;
    CellStructure c;
    std::vector<ArcInfo> info;

    explicit Builder(const Diagram& dia) : d(dia) {}

    void basic_checks() {
        int n = d.beta.size();
        if (n < 1) throw BadParams("diagram needs at least one crossing");
        if (static_cast<int>(d.beta.windings.size()) != n)
            throw BadParams("windings length must equal crossing count");
        std::set<Rat> seen;
        for (const Crossing& cr : d.beta.crossings) {
            if (cr.dir != 1 && cr.dir != -1) throw BadParams("dir must be +1 or -1");
            if (cr.pos < Rat(0) || cr.pos >= Rat(1))
                throw BadParams("crossing position out of [0,1)");
            if (!seen.insert(cr.pos).second)
                throw NotEmbedded("duplicate crossing position " + cr.pos.str());
        }
        for (const Basepoint* bp : {&d.z, &d.w}) {
            if (bp->x < Rat(0) || bp->x >= Rat(1) || bp->y <= Rat(0) || bp->y >= Rat(1))
                throw BadParams("basepoint out of range");
        }
        if (d.beta.vertical_class() == 0)
            throw BetaNullHomologous("beta is vertically null-homologous (v = 0)");
    }

    void build_tables() {
        int n = d.beta.size();
        c.n = n;
        c.h = d.beta.horizontal_class();
        c.v = d.beta.vertical_class();
        c.tx.assign(n, 0);
        c.tb.assign(n, 0);
        long long ax = 0, ab = 0;
        for (int j = 0; j + 1 < n; ++j) {
            ax += d.beta.windings[j];
            ab += (d.beta.crossings[j].dir + d.beta.crossings[j + 1].dir) / 2;
            c.tx[j + 1] = ax;
            c.tb[j + 1] = ab;
        }
        c.sorted_ids.resize(n);
        std::iota(c.sorted_ids.begin(), c.sorted_ids.end(), 0);
        std::sort(c.sorted_ids.begin(), c.sorted_ids.end(), [&](int a, int b) {
            return d.beta.crossings[a].pos < d.beta.crossings[b].pos;
        });
        c.sorted_rank.assign(n, 0);
        for (int i = 0; i < n; ++i) c.sorted_rank[c.sorted_ids[i]] = i;
        c.positions.resize(n);
        for (int j = 0; j < n; ++j) c.positions[j] = d.beta.crossings[j].pos;
    }

    // germ g at crossing cr: 0=E,1=N,2=W,3=S; returns outgoing dart
    int germ_dart(int cr, int g) const {
        int n = c.n;
        int dir = d.beta.crossings[cr].dir;
        switch (g) {
            case 0: return c.alpha_dart(c.sorted_rank[cr], true);
            case 2: return c.alpha_dart((c.sorted_rank[cr] + n - 1) % n, false);
            case 1: return dir > 0 ? c.beta_dart(cr, true) : c.beta_dart((cr + n - 1) % n, false);
            default: return dir > 0 ? c.beta_dart((cr + n - 1) % n, false) : c.beta_dart(cr, true);
        }
    }

    void trace_faces() {
        int n = c.n;
        std::vector<int> germ_of_dart(4 * n, -1);
        for (int cr = 0; cr < n; ++cr)
            for (int g = 0; g < 4; ++g) germ_of_dart[germ_dart(cr, g)] = g;

        c.left_face.assign(4 * n, FaceRef{});
        std::vector<bool> visited(4 * n, false);
        for (int start = 0; start < 4 * n; ++start) {
            if (visited[start]) continue;
            Face f;
            int dart = start;
            long long am = 0, abd = 0;
            while (true) {
                if (visited[dart]) throw InternalError("face trace revisits a dart");
                visited[dart] = true;
                f.boundary.push_back({dart, am, abd});
                c.left_face[dart] = {static_cast<int>(c.faces.size()), -am, -abd};
                auto sh = c.dart_shift(dart);
                am += sh.first;
                abd += sh.second;
                int r = c.rev(dart);
                int g = germ_of_dart[r];
                int next = germ_dart(c.dart_head(dart), (g + 3) % 4);
                if (next == start) break;
                dart = next;
            }
            if (am + c.dart_shift(f.boundary.back().dart).first - c.dart_shift(f.boundary.back().dart).first != am)
                throw InternalError("unreachable");
            auto last_sh = std::pair<long long, long long>{am, abd};
            if (last_sh != std::pair<long long, long long>{0, 0}) {
                // closure shift accumulated when stepping off the last dart back
                // to the start must vanish for a disk face
                throw NotCellular("face fails to close in the strip");
            }
            f.corners = static_cast<int>(f.boundary.size());
            c.faces.push_back(std::move(f));
        }
        c.euler_check = c.n - 2 * c.n + static_cast<int>(c.faces.size());
        if (c.euler_check != 0)
            throw NotCellular("V - E + F = " + std::to_string(c.euler_check));
        // quadrant faces: left faces of the four outgoing germs
        c.quad.assign(n, {});
        for (int cr = 0; cr < n; ++cr)
            for (int g = 0; g < 4; ++g) c.quad[cr][g] = c.left_face[germ_dart(cr, g)];
    }

    void build_polygons() {
        for (Face& f : c.faces) {
            std::vector<Pt> poly;
            for (const FaceDartRef& ref : f.boundary) {
                std::vector<Pt> pl = c.dart_polyline(ref.dart, ref.dm, ref.db);
                for (size_t i = 0; i + 1 < pl.size(); ++i) poly.push_back(pl[i]);
            }
            if (poly.size() < 3) throw InternalError("face polygon degenerate");
            // exact shoelace; ccw (interior on the left) must give positive area
            Rat twice_area(0);
            for (size_t i = 0; i < poly.size(); ++i) {
                const Pt& p = poly[i];
                const Pt& q = poly[(i + 1) % poly.size()];
                twice_area += p.x * q.y - q.x * p.y;
            }
            if (twice_area.sign() <= 0)
                throw InternalError("face polygon not positively oriented");
            f.polygon = std::move(poly);
            pick_interior(f);
        }
    }

    void pick_interior(Face& f) {
        std::vector<Rat> ys;
        for (const Pt& p : f.polygon) ys.push_back(p.y);
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        for (size_t gi = 0; gi + 1 < ys.size(); ++gi) {
            Rat ystar = (ys[gi] + ys[gi + 1]) / Rat(2);
            std::vector<Rat> xs;
            size_t m = f.polygon.size();
            for (size_t i = 0; i < m; ++i) {
                const Pt& p = f.polygon[i];
                const Pt& q = f.polygon[(i + 1) % m];
                if ((p.y <= ystar && ystar < q.y) || (q.y <= ystar && ystar < p.y)) {
                    // x at ystar along pq
                    Rat t = (ystar - p.y) / (q.y - p.y);
                    xs.push_back(p.x + t * (q.x - p.x));
                }
            }
            std::sort(xs.begin(), xs.end());
            if (xs.size() >= 2 && xs[0] < xs[1]) {
                f.interior = {(xs[0] * Rat(1) + xs[1]) / Rat(2), ystar};
                f.interior2 = {(xs[0] * Rat(3) + xs[1]) / Rat(4), ystar};
                if (!(f.interior2.x > xs[0] && f.interior2.x < xs[1]))
                    throw InternalError("interior point construction failed");
                return;
            }
        }
        throw InternalError("no interior point found for face");
    }

    void paranoid_intersection_check() {
        int n = c.n;
        long long M = translate_radius(info);
        struct Seg { Pt a, b; int arc; int idx; };
        std::vector<Seg> segs;
        for (int j = 0; j < n; ++j) {
            long long band = info[j].ty == 0 ? 0 : -1;   // draw each in its own band
            (void)band;
            for (size_t i = 0; i + 1 < c.arcs[j].pts.size(); ++i)
                segs.push_back({c.arcs[j].pts[i], c.arcs[j].pts[i + 1], j, static_cast<int>(i)});
        }
        // Arcs of different kinds live in disjoint y zones except across
        // bands; comparing band-local drawings of the same band suffices:
        // caps/throughs-in-this-band vs each other, with all x translates.
        for (size_t s1 = 0; s1 < segs.size(); ++s1) {
            for (size_t s2 = s1; s2 < segs.size(); ++s2) {
                for (long long m = -M; m <= M; ++m) {
                    if (s1 == s2 && m == 0) continue;
                    const Seg& A = segs[s1];
                    const Seg& B = segs[s2];
                    if (A.arc == B.arc && m == 0 && std::abs(A.idx - B.idx) <= 1) continue;
                    // same-band comparison only: both drawings are band-local
                    bool a_low = info[A.arc].kind != 2 && info[A.arc].ty != 1;
                    bool b_low = info[B.arc].kind != 2 && info[B.arc].ty != 1;
                    (void)a_low; (void)b_low;
                    Pt b1{B.a.x + Rat(m), B.a.y}, b2{B.b.x + Rat(m), B.b.y};
                    if (segments_meet(A.a, A.b, b1, b2)) {
                        // shared crossing endpoints are legitimate touches
                        bool shares = (A.a.x == b1.x && A.a.y == b1.y) ||
                                      (A.a.x == b2.x && A.a.y == b2.y) ||
                                      (A.b.x == b1.x && A.b.y == b1.y) ||
                                      (A.b.x == b2.x && A.b.y == b2.y);
                        if (!shares)
                            throw InternalError("realization self-intersection: arcs " +
                                                std::to_string(A.arc) + "," + std::to_string(B.arc));
                    }
                }
            }
        }
    }

    void locate_basepoints() {
        c.z_face = locate(d.z, "z");
        c.w_face = locate(d.w, "w");
        c.disk_bounding = c.z_face == c.w_face;
    }

    int locate(const Basepoint& bp, const std::string& name) {
        // on-curve check against all band-local arc translates
        long long M = translate_radius(info) + 1;
        for (int j = 0; j < c.n; ++j) {
            for (long long m = -M; m <= M; ++m) {
                const auto& pts = c.arcs[j].pts;
                for (size_t i = 0; i + 1 < pts.size(); ++i) {
                    Pt a{pts[i].x + Rat(m), pts[i].y}, b{pts[i + 1].x + Rat(m), pts[i + 1].y};
                    auto crossp = (b.x - a.x) * (bp.y - a.y) - (b.y - a.y) * (bp.x - a.x);
                    if (crossp.sign() == 0 && std::min(a.x, b.x) <= bp.x &&
                        bp.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= bp.y &&
                        bp.y <= std::max(a.y, b.y))
                        throw BasepointOnCurve("basepoint " + name + " lies on beta");
                }
            }
        }
        Pt q{bp.x, bp.y};
        int f = c.locate_face(q);
        if (f < 0) throw InternalError("point location failed for basepoint " + name);
        return f;
    }
};

}  // namespace

// Locate the band-picture face containing a point (not on any curve):
// shoot a ray straight down with half-open x convention; the first hit is
// either a beta segment (face = side of that arc) or the bottom line
// (face above the alpha edge there).
int CellStructure::locate_face(const Pt& q) const {
    long long M = 2;
    for (int j = 0; j < n; ++j) {
        Rat span = arcs[j].pts.front().x - arcs[j].pts.back().x;
        if (span.sign() < 0) span = -span;
        M = std::max(M, span.floor() + 2);
    }
    bool found = false;
    Rat best_y;
    int best_arc = -1;
    bool from_left = false;
    for (int j = 0; j < n; ++j) {
        for (long long m = -M; m <= M; ++m) {
            const auto& pts = arcs[j].pts;
            for (size_t i = 0; i + 1 < pts.size(); ++i) {
                Pt a{pts[i].x + Rat(m), pts[i].y}, b{pts[i + 1].x + Rat(m), pts[i + 1].y};
                bool straddle_e = a.x <= q.x && q.x < b.x;
                bool straddle_w = b.x <= q.x && q.x < a.x;
                if (!straddle_e && !straddle_w) continue;
                Rat t = (q.x - a.x) / (b.x - a.x);
                Rat ystar = a.y + t * (b.y - a.y);
                if (ystar >= q.y) continue;
                if (!found || ystar > best_y) {
                    found = true;
                    best_y = ystar;
                    best_arc = j;
                    // side of the directed arc the query point lies on
                    auto crossp = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
                    from_left = crossp.sign() > 0;
                }
            }
        }
    }
    if (found) {
        int dart = beta_dart(best_arc, true);
        return from_left ? left_face[dart].face : left_face[rev(dart)].face;
    }
    // fell through to the bottom line: find the alpha edge under q.x mod 1
    Rat xq = q.x.frac();
    for (int e = 0; e < n; ++e) {
        Rat pw = positions[sorted_ids[e]];
        Rat pe = positions[sorted_ids[(e + 1) % n]] + Rat(e == n - 1 ? 1 : 0);
        Rat x = xq;
        if (x < pw) x += Rat(1);
        if (pw <= x && x < pe) return left_face[alpha_dart(e, true)].face;
    }
    return n >= 1 ? left_face[alpha_dart(0, true)].face : -1;
}

CellStructure validate(const Diagram& d) {
    Builder b(d);
    b.basic_checks();
    b.info = arc_infos(d.beta);
    check_embedded(b.info);
    b.build_tables();
    b.c.arcs = realize_arcs(b.info);
    b.trace_faces();
    b.build_polygons();
    b.locate_basepoints();
    return std::move(b.c);
}

std::pair<long long, long long> ambient(const Diagram& d) {
    long long v = d.beta.vertical_class();
    if (v == 0) throw BetaNullHomologous("v = 0");
    long long p = v < 0 ? -v : v;
    return {p, imod(d.beta.horizontal_class(), p)};
}

// ---------------------------------------------------------------------------
// Constructors

Diagram simple_knot(long long p, long long q, long long k) {
    if (p < 1) throw BadParams("p must be positive");
    q = imod(q, p);
    if (p == 1) q = 0;
    if (p > 1 && std::gcd(q, p) != 1)
        throw BadParams("q must be coprime to p");
    if (k < 0 || k >= p) throw BadParams("k must satisfy 0 <= k < p");

    Diagram d;
    d.label = "simple(" + std::to_string(p) + "," + std::to_string(q) + "," +
              std::to_string(k) + ")";
    for (long long j = 0; j < p; ++j) {
        d.beta.crossings.push_back({Rat(imod(j * q, p), p), +1});
        d.beta.windings.push_back(fdiv((j + 1) * q, p) - fdiv(j * q, p));
    }
    // z in the face above alpha edge 0, w above alpha edge k; the straight
    // diagram's faces contain the open boxes just above their bottom edges.
    d.z = {Rat(2, 6 * p), Rat(1, 8)};
    d.w = {Rat(6 * k + 4, 6 * p), Rat(1, 8)};
    if (p == 1 && k == 0) d.w = {Rat(4, 6), Rat(1, 8)};
    validate(d);
    return d;
}

namespace {

// Shared construction for t_r/t_l: poke one finger from the face above
// alpha edge 0 of the straight diagram down across that edge, then park the
// basepoints inside the two resulting bigons.  zeta_in_cup selects which
// basepoint the finger wrapped.
Diagram figure_knot(long long p, long long q, bool z_in_cup) {
    Diagram base = simple_knot(p, q, 0);
    Diagram d;
    d.label = (z_in_cup ? "t_r(" : "t_l(") + std::to_string(p) + "," + std::to_string(q) + ")";
    const Rat x1(1, 3 * p), x2(2, 3 * p);
    d.beta.crossings.push_back(base.beta.crossings[0]);
    d.beta.crossings.push_back({x1, -1});
    d.beta.crossings.push_back({x2, +1});
    for (long long j = 1; j < p; ++j) d.beta.crossings.push_back(base.beta.crossings[j]);
    d.beta.windings.push_back(0);                       // cap crossing0 -> u1
    d.beta.windings.push_back(0);                       // cup u1 -> u2
    for (long long j = 0; j < p; ++j) d.beta.windings.push_back(base.beta.windings[j]);
    // placeholder basepoints for the first validation pass
    d.z = {Rat(1, 6 * p), Rat(1, 16)};
    d.w = {Rat(1, 2 * p), Rat(1, 16)};
    CellStructure cells;
    {
        Diagram probe = d;
        cells = validate(probe);
    }
    // cap bigon face: right side of the cap arc (arc 0, eastward, region
    // below it); cup bigon face: left side of the cup arc (arc 1, region
    // between it and the line above).
    int cap_face = cells.left_face[cells.rev(cells.beta_dart(0, true))].face;
    int cup_face = cells.left_face[cells.beta_dart(1, true)].face;
    Pt cap_pt = cells.faces[cap_face].interior;
    Pt cup_pt = cells.faces[cup_face].interior;
    Basepoint cap_bp{cap_pt.x.frac(), cap_pt.y};
    Basepoint cup_bp{cup_pt.x.frac(), cup_pt.y};
    if (z_in_cup) {
        d.z = cup_bp;
        d.w = cap_bp;
    } else {
        d.z = cap_bp;
        d.w = cup_bp;
    }
    validate(d);
    return d;
}

}  // namespace

Diagram t_r(long long p, long long q) { return figure_knot(p, q, true); }
Diagram t_l(long long p, long long q) { return figure_knot(p, q, false); }

// ---------------------------------------------------------------------------
// Homology class

long long homology_class(const Diagram& d) {
    CellStructure cells = validate(d);
    auto [p, q] = ambient(d);
    if (cells.disk_bounding) return 0;

    // Face instances keyed by (face, m, b); move only across alpha edges,
    // from w's face to any lift of z's face.  The net number of downward
    // line crossings d gives the class q*d mod p.
    struct Key {
        int f;
        long long m, b;
        bool operator<(const Key& o) const {
            return std::tie(f, m, b) < std::tie(o.f, o.m, o.b);
        }
    };
    long long span = 2;
    for (int j = 0; j < cells.n; ++j)
        span = std::max(span, std::llabs(cells.tx[j]) + 2);
    long long mlim = (span + 2) * (cells.n + 2);
    long long blim = cells.n + 2;

    std::map<Key, long long> down;   // net downward crossings from start
    std::queue<Key> bfs;
    Key start{cells.w_face, 0, 0};
    down[start] = 0;
    bfs.push(start);
    while (!bfs.empty()) {
        Key cur = bfs.front();
        bfs.pop();
        if (cur.f == cells.z_face)
            return imod(down[cur] * d.beta.horizontal_class(), p);
        for (const FaceDartRef& ref : cells.faces[cur.f].boundary) {
            if (!cells.is_alpha(ref.dart)) continue;
            // neighbor across this alpha edge: face left of the reversed dart
            int rdart = cells.rev(ref.dart);
            FaceRef nb = cells.left_face[rdart];
            // dart tail translate in plane coords
            long long tm = cur.m + ref.dm, tb2 = cur.b + ref.db;
            auto sh = cells.dart_shift(ref.dart);
            long long hm = tm + sh.first, hb = tb2 + sh.second;
            Key nxt{nb.face, hm + nb.dm, hb + nb.db};
            if (std::llabs(nxt.m) > mlim || std::llabs(nxt.b) > blim) continue;
            if (down.count(nxt)) continue;
            // crossing direction: faces sit above (forward dart) or below
            // (backward dart) the line; forward dart => current face above,
            // crossing to the face below = one downward step.
            down[nxt] = down[cur] + (cells.is_fwd(ref.dart) ? +1 : -1);
            bfs.push(nxt);
        }
    }
    throw InternalError("homology_class: BFS failed to reach the z face");
}

// ---------------------------------------------------------------------------
// Finger move and reduction

namespace {

struct Anchor {
    bool alpha;
    int index;    // alpha edge id or arc id in the OLD diagram
    bool left;    // face lies left of the forward dart
};

std::vector<Anchor> face_anchors(const CellStructure& cells, int face) {
    std::vector<Anchor> out;
    for (const FaceDartRef& ref : cells.faces[face].boundary) {
        int e = CellStructure::edge_of(ref.dart);
        bool fwd = CellStructure::is_fwd(ref.dart);
        if (e < cells.n)
            out.push_back({true, e, fwd});
        else
            out.push_back({false, e - cells.n, fwd});
    }
    return out;
}

int resolve_anchor(const CellStructure& nc, bool alpha, int new_index, bool left) {
    int dart = alpha ? nc.alpha_dart(new_index, true) : nc.beta_dart(new_index, true);
    return nc.left_face[left ? dart : nc.rev(dart)].face;
}

Basepoint face_point(const CellStructure& nc, int face, bool second) {
    Pt ip = second ? nc.faces[face].interior2 : nc.faces[face].interior;
    return {ip.x.frac(), ip.y};
}

// Choose two fresh positions inside the open interval (lo, hi) (clipped to
// x < lo+1), in the widest gap left by the forbidden x coordinates.
std::pair<Rat, Rat> fresh_positions(const Rat& lo, const Rat& hi_in,
                                    const std::vector<Rat>& forbidden) {
    Rat hi = std::min(hi_in, lo + Rat(1));
    std::vector<Rat> cuts{lo};
    for (const Rat& f : forbidden) {
        Rat x = f.frac();
        while (x <= lo) x += Rat(1);
        if (x < hi) cuts.push_back(x);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    Rat best_lo = lo, best_w(0);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rat w = cuts[i + 1] - cuts[i];
        if (w > best_w) { best_w = w; best_lo = cuts[i]; }
    }
    if (best_w.sign() <= 0) throw InternalError("no room for finger positions");
    Rat a = best_lo + best_w / Rat(3);
    Rat b = best_lo + best_w * Rat(2, 3);
    return {a, b};
}

Diagram poke_once(const Diagram& d, const CellStructure& cells, int alpha_edge,
                  bool from_above) {
    int n = cells.n;
    int va = cells.sorted_ids[alpha_edge];                 // west endpoint of e
    int ve = cells.sorted_ids[(alpha_edge + 1) % n];
    Rat lo = d.beta.crossings[va].pos;
    Rat hi = d.beta.crossings[ve].pos + Rat(alpha_edge == n - 1 ? 1 : 0);
    auto [x1r, x2r] = fresh_positions(lo, hi, {d.z.x, d.w.x});
    Rat x1 = x1r.frac(), x2 = x2r.frac();

    int dva = d.beta.crossings[va].dir;
    // host occupies the N germ for pokes from above, the S germ from below
    bool host_outgoing = from_above ? (dva > 0) : (dva < 0);
    int d1 = from_above ? -1 : +1;   // first new crossing along the finger
    int d2 = -d1;

    Diagram out;
    out.label = d.label;
    out.z = d.z;
    out.w = d.w;
    const auto& cr = d.beta.crossings;
    const auto& wd = d.beta.windings;

    // Build the new cyclic lists with u1, u2 spliced next to va.
    int host_arc = host_outgoing ? va : (va + n - 1) % n;
    for (int j = 0; j < n; ++j) {
        out.beta.crossings.push_back(cr[j]);
        if (host_outgoing && j == va) {
            if (from_above) {
                out.beta.crossings.push_back({x1, d1});
                out.beta.crossings.push_back({x2, d2});
            } else {
                out.beta.crossings.push_back({x1, d1});
                out.beta.crossings.push_back({x2, d2});
            }
        }
        if (!host_outgoing && (j + 1) % n == va) {
            out.beta.crossings.push_back({x2, d1});
            out.beta.crossings.push_back({x1, d2});
        }
    }
    for (int j = 0; j < n; ++j) {
        if (j == host_arc) {
            if (host_outgoing) {
                out.beta.windings.push_back(0);       // sliver
                out.beta.windings.push_back(0);       // tip
                out.beta.windings.push_back(wd[j]);   // host remainder
            } else {
                out.beta.windings.push_back(wd[j]);   // host remainder
                out.beta.windings.push_back(0);       // tip
                out.beta.windings.push_back(0);       // sliver
            }
        } else {
            out.beta.windings.push_back(wd[j]);
        }
    }

    CellStructure nc = validate(out);

    // Carry the basepoints through the face correspondence of the isotopy:
    // untouched edges map to themselves, the host arc to its remainder
    // piece, and the poked edge to its easternmost piece.
    int insert_at = host_outgoing ? va + 1 : va;     // id of first new crossing
    auto remap_crossing = [&](int cid) { return cid < insert_at ? cid : cid + 2; };
    int id_u_east;   // new crossing at x2
    {
        // splice order above puts x1 first for outgoing hosts, x2 first else
        id_u_east = host_outgoing ? insert_at + 1 : insert_at;
    }
    auto remap_arc = [&](int arc) -> int {
        if (arc == host_arc) return host_outgoing ? remap_crossing(va) + 2 : arc;
        int base = arc < host_arc ? arc : arc + 2;
        if (!host_outgoing && arc > host_arc) base = arc + 2;
        if (!host_outgoing && arc < host_arc) base = arc;
        if (host_outgoing) base = arc < host_arc ? arc : arc + 2;
        return base;
    };
    auto remap_alpha = [&](int e) -> int {
        int west_old = cells.sorted_ids[e];
        int west_new = e == alpha_edge ? id_u_east : remap_crossing(west_old);
        return nc.sorted_rank[west_new];
    };

    auto carry = [&](int old_face) -> int {
        int got = -1;
        for (const Anchor& a : face_anchors(cells, old_face)) {
            int idx = a.alpha ? remap_alpha(a.index) : remap_arc(a.index);
            int f = resolve_anchor(nc, a.alpha, idx, a.left);
            if (got == -1) got = f;
            else if (got != f)
                throw InternalError("finger move: face correspondence is ambiguous");
        }
        if (got < 0) throw InternalError("finger move: face lost all anchors");
        return got;
    };
    int zf = carry(cells.z_face);
    int wf = carry(cells.w_face);
    out.z = face_point(nc, zf, false);
    out.w = face_point(nc, wf, zf == wf);
    validate(out);
    return out;
}

}  // namespace

Diagram finger_move(const Diagram& d, const FingerSite& site, int depth) {
    if (depth < 1) throw BadParams("finger depth must be >= 1");
    CellStructure cells = validate(d);
    if (site.face < 0 || site.face >= static_cast<int>(cells.faces.size()))
        throw IllegalSite("no such face");
    if (site.alpha_edge < 0 || site.alpha_edge >= cells.n)
        throw IllegalSite("no such alpha edge");
    // the face must touch the chosen edge; the side determines the poke
    bool above = false, found = false;
    for (const FaceDartRef& ref : cells.faces[site.face].boundary) {
        if (cells.is_alpha(ref.dart) && CellStructure::edge_of(ref.dart) == site.alpha_edge) {
            found = true;
            above = CellStructure::is_fwd(ref.dart);
            break;
        }
    }
    if (!found) throw IllegalSite("alpha edge not on the face boundary");

    Diagram cur = poke_once(d, cells, site.alpha_edge, above);
    for (int i = 1; i < depth; ++i) {
        CellStructure cc = validate(cur);
        // continue poking through the easternmost piece of the original
        // edge; it keeps the same west-to-east orientation
        int e = -1;
        // the piece is the alpha edge whose east endpoint is the original
        // east endpoint of the poked edge and whose interval lies inside it
        // -- identified as the edge under the midpoint of the last thirds
        // of the previous pick.  Simpler: poke the edge just east of the
        // two newest crossings, i.e. the edge whose west endpoint is the
        // crossing with the largest of the two new positions.
        int newest_east = -1;
        {
            // crossings added last are at indices found by label-free scan:
            // positions not present in d are the finger's
            std::set<Rat> orig;
            for (const Crossing& c0 : d.beta.crossings) orig.insert(c0.pos);
            Rat best(-1);
            for (int j = 0; j < cur.beta.size(); ++j) {
                const Rat& p0 = cur.beta.crossings[j].pos;
                if (!orig.count(p0) && p0 > best) { best = p0; newest_east = j; }
            }
        }
        e = cc.sorted_rank[newest_east];
        int face = cc.left_face[above ? cc.alpha_dart(e, true) : cc.rev(cc.alpha_dart(e, true))].face;
        cur = poke_once(cur, cc, e, above);
        (void)face;
    }
    return cur;
}

namespace {

// Is there any crossing lift strictly inside the open alpha segment of the
// certificate's line? (span < 1 certificates only can be strandless)
bool strandless(const Diagram& d, const CellStructure& cells, const BigonCertificate& cert) {
    long long n = cells.n;
    long long a = cert.param_from, t = cert.param_to;
    auto xof = [&](long long s) {
        long long ci = imod(s, n), u = fdiv(s, n);
        return d.beta.crossings[ci].pos + Rat(cells.tx[ci] + u * cells.h);
    };
    Rat xa = xof(a), xb = xof(t);
    Rat lo = std::min(xa, xb), hi = std::max(xa, xb);
    if (hi - lo >= Rat(1)) return false;
    for (int j = 0; j < cells.n; ++j) {
        Rat x = d.beta.crossings[j].pos;
        // the unique translate that could fall inside
        Rat shifted = x + Rat((lo - x).floor());
        for (int s = 0; s <= 1; ++s) {
            Rat cand = shifted + Rat(s);
            if (lo < cand && cand < hi) return false;
        }
    }
    return true;
}

Diagram cancel_bigon(const Diagram& d, const CellStructure& cells,
                     const BigonCertificate& cert) {
    int n = cells.n;
    long long pa = cert.param_from, pt = cert.param_to;
    long long lo = std::min(pa, pt), hi = std::max(pa, pt);
    if (hi - lo + 1 >= n)
        throw InternalError("cancellation would remove every crossing");
    std::set<int> removed;
    for (long long s = lo; s <= hi; ++s) removed.insert(static_cast<int>(imod(s, n)));
    if (static_cast<long long>(removed.size()) != hi - lo + 1)
        throw InternalError("bigon spans a repeated crossing");

    // displacement of the whole removed chain, for the merged winding
    auto lift_x = [&](long long s) {
        long long ci = imod(s, n), u = fdiv(s, n);
        return d.beta.crossings[ci].pos + Rat(cells.tx[ci] + u * cells.h);
    };
    int before = static_cast<int>(imod(lo - 1, n));
    int after = static_cast<int>(imod(hi + 1, n));
    Rat disp = lift_x(hi + 1) - lift_x(lo - 1);
    Rat wrat = disp - (d.beta.crossings[after].pos - d.beta.crossings[before].pos);
    if (wrat.den() != 1) throw InternalError("merged winding is not an integer");
    long long wmerged = wrat.num();

    Diagram out;
    out.label = d.label;
    out.z = d.z;
    out.w = d.w;
    std::vector<int> newid(n, -1);
    for (int j = 0; j < n; ++j) {
        if (removed.count(j)) continue;
        newid[j] = out.beta.size();
        out.beta.crossings.push_back(d.beta.crossings[j]);
    }
    int nn = out.beta.size();
    if (nn < 1) throw InternalError("empty diagram after cancellation");
    out.beta.windings.assign(nn, 0);
    for (int j = 0; j < n; ++j) {
        if (removed.count(j)) continue;
        int nxt = (j + 1) % n;
        if (!removed.count(nxt)) {
            out.beta.windings[newid[j]] = d.beta.windings[j];
        } else {
            out.beta.windings[newid[j]] = wmerged;   // j == before
        }
    }
    if (d.beta.vertical_class() != out.beta.vertical_class() ||
        d.beta.horizontal_class() != out.beta.horizontal_class())
        throw InternalError("cancellation changed the curve class");

    CellStructure nc = validate(out);

    // basepoint carry: surviving arcs and alpha edges map by identity, the
    // two boundary arcs map to the merged arc, everything with a removed
    // endpoint maps into the merged alpha edge
    auto remap_arc = [&](int arc) -> int {
        int tail = arc, head = (arc + 1) % n;
        bool rt = removed.count(tail), rh = removed.count(head);
        if (rt && rh) return -1;                       // interior of the chain
        if (!rt && rh) return newid[tail];             // arc 'before'
        if (rt && !rh) return newid[before];           // arc 'after' joins merged
        return newid[tail];
    };
    auto remap_alpha = [&](int e) -> int {
        int west = cells.sorted_ids[e];
        int east = cells.sorted_ids[(e + 1) % n];
        if (!removed.count(west) && !removed.count(east))
            return nc.sorted_rank[newid[west]];
        // swallowed by the merged edge: west neighbor surviving crossing
        int rank = e;
        for (int step = 0; step < n; ++step) {
            int cand = cells.sorted_ids[(rank + n) % n];
            if (!removed.count(cand)) return nc.sorted_rank[newid[cand]];
            rank = (rank + n - 1) % n;
        }
        return -1;
    };
    auto carry = [&](int old_face) -> int {
        int got = -1;
        for (const Anchor& a : face_anchors(cells, old_face)) {
            int idx = a.alpha ? remap_alpha(a.index) : remap_arc(a.index);
            if (idx < 0) continue;
            int f = resolve_anchor(nc, a.alpha, idx, a.left);
            if (got == -1) got = f;
        }
        if (got < 0)
            throw InternalError("reduce: basepoint face lost every anchor");
        return got;
    };
    int zf = carry(cells.z_face);
    int wf = carry(cells.w_face);
    out.z = face_point(nc, zf, false);
    out.w = face_point(nc, wf, zf == wf);
    validate(out);
    return out;
}

}  // namespace

Diagram reduce(const Diagram& d) {
    Diagram cur = d;
    while (true) {
        CellStructure cells = validate(cur);
        auto certs = detail::find_bigons_cells(cur, cells, BigonMode::AvoidBoth);
        if (certs.empty()) return cur;
        std::vector<BigonCertificate> usable;
        for (const auto& c : certs)
            if (strandless(cur, cells, c)) usable.push_back(c);
        if (usable.empty())
            throw InternalError("empty bigons exist but none is innermost");
        std::sort(usable.begin(), usable.end(), [](const auto& a, const auto& b) {
            int amin = std::min(a.from, a.to), bmin = std::min(b.from, b.to);
            if (amin != bmin) return amin < bmin;
            return std::max(a.from, a.to) < std::max(b.from, b.to);
        });
        int before_n = cur.beta.size();
        cur = cancel_bigon(cur, cells, usable.front());
        if (cur.beta.size() >= before_n)
            throw InternalError("reduce failed to shrink the diagram");
    }
}

}  // namespace lens
