#include "lenshfk/staircase.hpp"

#include <algorithm>
#include <cstdlib>

#include "lenshfk/error.hpp"

namespace lens {

long long AlexPoly::genus() const {
    long long g = 0;
    for (const auto& [e, c] : coeffs)
        if (c != 0) g = std::max(g, std::llabs(e));
    return g;
}

long long AlexPoly::coeff(long long e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? 0 : it->second;
}

std::string AlexPoly::str() const {
    std::string out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        auto [e, c] = *it;
        if (c == 0) continue;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        long long a = std::llabs(c);
        if (a != 1 || e == 0) out += std::to_string(a);
        if (e != 0) {
            out += "T";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out.empty() ? "0" : out;
}

Staircase staircase_from_alex(const AlexPoly& alex) {
    std::vector<std::pair<long long, long long>> support;
    for (const auto& [e, c] : alex.coeffs)
        if (c != 0) support.push_back({e, c});
    if (support.empty())
        throw NotLSpaceAdmissible("empty polynomial");

    for (const auto& [e, c] : support)
        if (alex.coeff(-e) != c)
            throw NotLSpaceAdmissible("symmetry fails at exponent " + std::to_string(e));

    // Alternating unit coefficients reading down from the top, starting +1.
    long long expect = 1;
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
        if (it->second != expect)
            throw NotLSpaceAdmissible("coefficient at exponent " + std::to_string(it->first) +
                                      " is " + std::to_string(it->second) + ", expected " +
                                      std::to_string(expect));
        expect = -expect;
    }
    if (support.size() % 2 == 0)
        throw NotLSpaceAdmissible("even number of terms cannot alternate symmetrically");

    Staircase s;
    for (const auto& [e, c] : support) s.n.push_back(e);
    s.g = s.n.back();
    int k = s.k();
    for (int i = -k; i <= k; ++i)
        if (s.n_at(i) != -s.n_at(-i))
            throw NotLSpaceAdmissible("support not symmetric at index " + std::to_string(i));

    s.delta.assign(s.n.size(), 0);
    for (int i = k - 1; i >= -k; --i) {
        long long next = s.delta_at(i + 1);
        long long d;
        if ((k - i) % 2 == 1)
            d = next - 2 * (s.n_at(i + 1) - s.n_at(i)) + 1;
        else
            d = next - 1;
        s.delta[static_cast<size_t>(i + k)] = d;
    }

    // Euler identity: the staircase reproduces the polynomial exactly.
    AlexPoly back;
    for (int i = -k; i <= k; ++i)
        back.coeffs[s.n_at(i)] = (s.delta_at(i) % 2 == 0) ? 1 : -1;
    for (const auto& [e, c] : alex.coeffs)
        if (c != back.coeff(e))
            throw InternalError("staircase Euler identity failed at exponent " +
                                std::to_string(e));
    for (size_t i = 0; i < s.delta.size(); ++i) {
        if (s.delta[i] > 0)
            throw InternalError("positive delta in staircase");
        if (i + 1 < s.delta.size() && (s.delta[i] - s.delta[i + 1]) % 2 == 0)
            throw InternalError("delta parity fails to alternate");
    }
    return s;
}

long long tau(const Staircase& s) { return s.g; }

FiltRanks filt_rank(const Staircase& s) {
    FiltRanks f;
    f.g = s.g;
    int k = s.k();
    f.r.assign(static_cast<size_t>(2 * s.g + 2), 0);
    for (long long m = -s.g - 1; m <= s.g; ++m) {
        int rank = m >= s.g ? 1 : 0;
        // A pair (y_{i+1} -> y_i) leaves a surviving class below level m
        // exactly when the target is in the sub-complex but the source not.
        for (int i = -k; i < k; ++i) {
            bool paired = (k - i) > 0 && (k - i) % 2 == 0;
            if (paired && s.n_at(i) <= m && m < s.n_at(i + 1)) ++rank;
        }
        if (rank > 1)
            throw InternalError("filtered rank exceeds 1 at level " + std::to_string(m));
        f.r[static_cast<size_t>(m + s.g + 1)] = rank;
    }
    for (long long m = -s.g - 1; m <= s.g; ++m)
        if (f.rank(m) + f.rank(-m - 1) != 1)
            throw InternalError("rank(m) + rank(-m-1) != 1 at m = " + std::to_string(m));
    return f;
}

long long wd_top_rank(const Staircase& s, long long p) {
    if (p < 1) throw BadParams("wd_top_rank requires p >= 1");
    FiltRanks f = filt_rank(s);
    long long g = s.g;
    long long sum = 0;
    for (long long i = -g - 1; i <= g; ++i)
        sum += f.rank(i) + f.rank(-i - 1);
    long long lead = (p >= 2 * g) ? (p - 2 * g - 2) : (-p + 2 * g - 2);
    long long total = lead + sum;
    if (total < 0)
        throw NegativeRank("negative Whitehead-double rank at p = " + std::to_string(p));
    // Closed forms implied by the rank(m) + rank(-m-1) = 1 identity.
    long long closed = (p >= 2 * g) ? p : (4 * g - p);
    if (total != closed)
        throw InternalError("wd_top_rank closed form mismatch at p = " + std::to_string(p));
    return total;
}

long long dual_rank_prediction(const Staircase& s, long long p) {
    long long g = s.g;
    if (p < 2 * g - 1)
        throw SlopeTooSmall("p = " + std::to_string(p) + " < 2g-1 = " +
                            std::to_string(2 * g - 1) +
                            "; no such surgery slope admits an L-space");
    if (p < 1) throw BadParams("dual_rank_prediction requires p >= 1");
    long long predicted = (p >= 2 * g) ? p : p + 2;
    if (predicted != wd_top_rank(s, p))
        throw InternalError("dual rank prediction disagrees with wd_top_rank");
    return predicted;
}

}  // namespace lens
