#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lenshfk/diagram.hpp"
#include "lenshfk/gf2.hpp"

namespace lens {

// Which basepoints a disk must miss.  AvoidBoth is the hat differential;
// AvoidW counts disks that may cross z (the complex computing HF-hat of the
// ambient space), AvoidZ symmetrically.
enum class BigonMode { AvoidBoth, AvoidW, AvoidZ };

// An embedded disk in the universal cover bounded by one alpha segment and
// one beta segment with two acute corners.  Corner lifts are recorded as
// positions along the preferred lift of beta: param s sits at crossing
// s mod n translated by floor(s/n) periods.
struct BigonCertificate {
    int from = 0;                  // source generator (crossing id)
    int to = 0;                    // target generator
    long long param_from = 0;      // lift params of the two corners
    long long param_to = 0;
    std::pair<long long, long long> lift_translate;  // deck translate of the far corner
    std::vector<long long> beta_arcs;   // arc params traversed, from-corner first
    std::vector<int> alpha_edges;       // alpha edges under the segment
    int z_mult = 0;                // basepoint multiplicities of the disk
    int w_mult = 0;
    bool covers_z = false;
    bool covers_w = false;
};

struct Generator {
    int crossing_id = 0;
    int spinc = 0;            // class label in Z/p
    long long alex = 0;       // relative, min occupied level 0 per class
    long long maslov = 0;     // relative, max occupied level 0 per class
};

struct ChainData {
    std::vector<Generator> generators;
    GF2Matrix d_hat, d_z, d_w;
};

struct RankRow {
    int spinc = 0;
    long long alex = 0;
    long long maslov = 0;
    int rank = 0;
};

struct RankTable {
    long long p = 0;
    std::vector<RankRow> rows;            // nonzero hat ranks, sorted
    std::vector<int> hz_per_class;        // rank of H(d_z) per spinc class
    std::vector<int> hw_per_class;
    long long total = 0;                  // hat total
    long long hz_total = 0;
    long long hw_total = 0;
};

// Spin^c class of each generator: two crossings share a class iff the
// closed curve (alpha path + beta path) between them dies in
// H_1(T^2)/<alpha, beta>.  Labels are fixed but arbitrary representatives.
std::vector<int> spinc_partition(const Diagram& d);

// Enumerate every bigon certificate.  Complete: the candidate corner pairs
// on each horizontal line form a finite set because the height of the
// preferred beta lift drifts by v every period, and each disk is reported
// from its source corner exactly once.
std::vector<BigonCertificate> find_bigons(const Diagram& d, BigonMode mode);

// Boundary matrix over F_2: entry (y, x) = parity of certificates x -> y.
// Asserts d*d = 0 (NotASquareZero signals a bigon-search bug).
GF2Matrix differential(const Diagram& d, BigonMode mode);

// Relative (spinc, alex, maslov) for every generator, from domains solved
// over the face lattice; alex differences use basepoint multiplicities and
// maslov differences the combinatorial index e + n_x + n_y.
std::vector<Generator> gradings(const Diagram& d);

// Homology ranks: hat per (spinc, alex, maslov); H(d_z), H(d_w) per class.
// Asserts the lens-space identities (totals p, each d_z class rank 1).
RankTable hfk(const Diagram& d);

// rk HFK == rk HF of the ambient lens space.
bool is_simple_fh(const Diagram& d);

// True iff reduce(d) is combinatorially the straight diagram: p crossings,
// bigon free in all modes, all faces quadrilaterals.
bool detect_simple(const Diagram& d);

namespace detail {
// Internal entry points shared with the diagram module and the tests.
std::vector<BigonCertificate> find_bigons_cells(const Diagram& d, const CellStructure& c,
                                                BigonMode mode, int window_scale = 1);
}

}  // namespace lens
