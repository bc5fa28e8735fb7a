#pragma once

#include <map>
#include <string>
#include <vector>

namespace lens {

// Symmetric Laurent polynomial in T, stored as exponent -> coefficient.
// Admissibility (symmetric support, coefficients alternating +1/-1 from the
// top) is checked by staircase_from_alex, not at construction, so parsers
// can hand back whatever they read.
struct AlexPoly {
    std::map<long long, long long> coeffs;

    long long genus() const;          // max exponent with nonzero coefficient
    long long coeff(long long e) const;
    bool operator==(const AlexPoly& o) const { return coeffs == o.coeffs; }
    std::string str() const;          // e.g. "T^3 - T^2 + 1 - T^-2 + T^-3"
};

// The (n_i, delta_i) data of an L-space knot.  Indices run over the support
// positions -k..k of the Alexander polynomial; index i is stored at slot
// i + k.  Invariants: n strictly increasing with n_i = -n_{-i}, delta_k = 0,
// delta nonincreasing with alternating parity, all delta <= 0.
struct Staircase {
    std::vector<long long> n;       // n_{-k} < ... < n_k
    std::vector<long long> delta;   // delta_{-k} .. delta_k
    long long g = 0;                // = n_k

    int k() const { return static_cast<int>(n.size() - 1) / 2; }
    long long n_at(int i) const { return n[static_cast<size_t>(i + k())]; }
    long long delta_at(int i) const { return delta[static_cast<size_t>(i + k())]; }
};

// Filtered sub-level homology ranks: rank(m) of H(F(K,m)), each 0 or 1,
// stored for m in [-g-1, g]; 1 above, 0 below that window.
struct FiltRanks {
    long long g = 0;
    std::vector<int> r;             // index m + g + 1

    int rank(long long m) const {
        if (m > g) return 1;
        if (m < -g - 1) return 0;
        return r[static_cast<size_t>(m + g + 1)];
    }
};

// Support/recursion extraction.  Throws NotLSpaceAdmissible (naming the
// failing exponent) if the polynomial is not symmetric with alternating
// unit coefficients, and asserts the Euler identity
// sum_i (-1)^{delta_i} T^{n_i} == input on the way out.
Staircase staircase_from_alex(const AlexPoly& alex);

// tau of the underlying L-space knot; equals the genus.
long long tau(const Staircase& s);

// Sub-level homology ranks of the reduced staircase complex, by the closed
// form rank(m) = [m >= g] + #{paired i : n_i <= m < n_{i+1}}.  The pairing
// puts a differential y_{i+1} -> y_i exactly when k-i is positive and even.
FiltRanks filt_rank(const Staircase& s);

// Rank of the top Whitehead-double group at twist parameter p >= 1.
long long wd_top_rank(const Staircase& s, long long p);

// Surgery-dual total rank prediction: p for p >= 2g, p+2 at p = 2g-1.
// Throws SlopeTooSmall below the p >= 2g-1 gate.
long long dual_rank_prediction(const Staircase& s, long long p);

}  // namespace lens
