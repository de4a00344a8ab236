#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace gridfloer::gf2 {

/// Dense bit-packed GF(2) matrix, row major.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words() const { return words_; }

    uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
    const uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

    void set(std::size_t r, std::size_t c) { row(r)[c >> 6] ^= (uint64_t{1} << (c & 63)); }
    bool get(std::size_t r, std::size_t c) const {
        return (row(r)[c >> 6] >> (c & 63)) & 1;
    }

    void xor_row(std::size_t dst, std::size_t src) {
        uint64_t* d = row(dst);
        const uint64_t* s = row(src);
        for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    }

  private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

inline int lowest_set_bit(const uint64_t* words, std::size_t nwords) {
    for (std::size_t w = 0; w < nwords; ++w)
        if (words[w]) return (int)(w * 64 + __builtin_ctzll(words[w]));
    return -1;
}

/// Rank by in-place row elimination (destroys m).
inline std::size_t rank_destructive(BitMatrix& m) {
    std::size_t rank = 0;
    std::vector<int> pivot_row_of_col(m.cols(), -1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        int p;
        while ((p = lowest_set_bit(m.row(r), m.words())) >= 0 && pivot_row_of_col[p] >= 0)
            m.xor_row(r, (std::size_t)pivot_row_of_col[p]);
        if (p >= 0) {
            pivot_row_of_col[p] = (int)r;
            ++rank;
        }
    }
    return rank;
}

inline std::size_t rank(BitMatrix m) { return rank_destructive(m); }

/// Incremental reducer: rows inserted one at a time, each carrying an
/// auxiliary bit vector that is XORed along with it. Used both for kernel
/// extraction (aux = identity) and for expressing vectors in a chosen basis.
class Reducer {
  public:
    Reducer(std::size_t cols, std::size_t aux_cols)
        : cols_(cols),
          words_((cols + 63) / 64),
          aux_words_((aux_cols + 63) / 64) {}

    /// Reduces (vec, aux) by the stored pivots in place. Returns the pivot
    /// column if the reduced vec is nonzero, -1 if it reduced to zero.
    int reduce(std::vector<uint64_t>& vec, std::vector<uint64_t>& aux) const {
        int p;
        while ((p = lowest_set_bit(vec.data(), words_)) >= 0) {
            auto it = by_pivot_.find(p);
            if (it == by_pivot_.end()) return p;
            const Row& row = rows_[it->second];
            for (std::size_t w = 0; w < words_; ++w) vec[w] ^= row.vec[w];
            for (std::size_t w = 0; w < aux_words_; ++w) aux[w] ^= row.aux[w];
        }
        return -1;
    }

    /// Reduces and, if independent, stores the row. Returns true when the
    /// row added a new pivot.
    bool insert(std::vector<uint64_t> vec, std::vector<uint64_t> aux) {
        int p = reduce(vec, aux);
        if (p < 0) return false;
        by_pivot_.emplace(p, rows_.size());
        rows_.push_back(Row{std::move(vec), std::move(aux)});
        return true;
    }

    std::size_t size() const { return rows_.size(); }
    std::size_t vec_words() const { return words_; }
    std::size_t aux_words() const { return aux_words_; }

  private:
    struct Row {
        std::vector<uint64_t> vec, aux;
    };
    std::size_t cols_, words_, aux_words_;
    std::vector<Row> rows_;
    // pivot column -> row index
    std::unordered_map<int, std::size_t> by_pivot_;
};

}  // namespace gridfloer::gf2
