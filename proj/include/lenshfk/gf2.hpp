#pragma once

#include <cstdint>
#include <vector>

namespace lens {

// Dense matrix over the field with two elements, one uint64 word per 64
// columns.  Sized for chain complexes with a few dozen generators.
class GF2Matrix {
  public:
    GF2Matrix() : rows_(0), cols_(0) {}
    GF2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * words(cols), 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (word(r, c) >> (c & 63)) & 1u;
    }
    void set(int r, int c, bool v) {
        uint64_t& w = word(r, c);
        uint64_t bit = uint64_t(1) << (c & 63);
        if (v) w |= bit; else w &= ~bit;
    }
    void flip(int r, int c) { word(r, c) ^= uint64_t(1) << (c & 63); }

    bool is_zero() const {
        for (uint64_t w : data_) if (w) return false;
        return true;
    }

    GF2Matrix operator*(const GF2Matrix& o) const {
        GF2Matrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k)
                if (get(i, k))
                    for (size_t w = 0; w < words(o.cols_); ++w)
                        out.data_[i * words(o.cols_) + w] ^= o.data_[k * words(o.cols_) + w];
        return out;
    }

    // Rank by row elimination; does not modify *this.
    int rank() const {
        std::vector<std::vector<uint64_t>> m;
        m.reserve(rows_);
        size_t nw = words(cols_);
        for (int r = 0; r < rows_; ++r)
            m.emplace_back(data_.begin() + r * nw, data_.begin() + (r + 1) * nw);
        int rk = 0;
        for (int c = 0; c < cols_ && rk < rows_; ++c) {
            size_t wi = c >> 6;
            uint64_t bit = uint64_t(1) << (c & 63);
            int piv = -1;
            for (int r = rk; r < rows_; ++r)
                if (m[r][wi] & bit) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(m[rk], m[piv]);
            for (int r = 0; r < rows_; ++r)
                if (r != rk && (m[r][wi] & bit))
                    for (size_t w = 0; w < nw; ++w) m[r][w] ^= m[rk][w];
            ++rk;
        }
        return rk;
    }

    // Submatrix with the given row and column index sets.
    GF2Matrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
        GF2Matrix out(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j)
                if (get(rs[i], cs[j])) out.set(static_cast<int>(i), static_cast<int>(j), true);
        return out;
    }

  private:
    static size_t words(int cols) { return static_cast<size_t>((cols + 63) / 64); }
    uint64_t& word(int r, int c) { return data_[r * words(cols_) + (c >> 6)]; }
    const uint64_t& word(int r, int c) const { return data_[r * words(cols_) + (c >> 6)]; }

    int rows_, cols_;
    std::vector<uint64_t> data_;
};

}  // namespace lens
