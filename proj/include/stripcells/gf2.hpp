#pragma once

// Sparse matrices over GF(2) and their rank.
//
// Columns are stored as sorted row-index lists.  Rank runs a deterministic
// left-to-right column reduction: the current column is unpacked into a bit
// accumulator and repeatedly xored with the stored pivot column owning its
// highest set row, until it claims a fresh pivot or empties.  No pivoting
// heuristics, no randomization; identical input gives identical elimination.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stripcells {

struct SparseBitMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::uint32_t>> col_rows;  // per column, sorted row indices

    void check() const {
        if (col_rows.size() != cols)
            throw std::invalid_argument("column count mismatch");
        for (const auto& col : col_rows) {
            std::uint32_t prev = 0;
            bool first = true;
            for (std::uint32_t r : col) {
                if (r >= rows) throw std::invalid_argument("row index out of range");
                if (!first && r <= prev) throw std::invalid_argument("column not sorted/unique");
                prev = r;
                first = false;
            }
        }
    }
};

namespace detail {

class BitAccumulator {
public:
    explicit BitAccumulator(std::size_t bits)
        : words_((bits + 63) / 64, 0), top_word_(-1) {}

    void load(const std::vector<std::uint32_t>& sorted_rows) {
        for (std::uint32_t r : sorted_rows) {
            words_[r >> 6] ^= std::uint64_t{1} << (r & 63);
        }
        top_word_ = sorted_rows.empty()
                        ? -1
                        : static_cast<std::int64_t>(sorted_rows.back() >> 6);
    }

    void xor_with(const std::vector<std::uint32_t>& sorted_rows) {
        for (std::uint32_t r : sorted_rows)
            words_[r >> 6] ^= std::uint64_t{1} << (r & 63);
    }

    // Highest set bit, or -1.  The reduction only ever lowers it, so the
    // scan resumes from the previous top word.
    std::int64_t highest() {
        for (std::int64_t wi = top_word_; wi >= 0; --wi) {
            if (words_[static_cast<std::size_t>(wi)]) {
                top_word_ = wi;
                int bit = 63 - std::countl_zero(words_[static_cast<std::size_t>(wi)]);
                return wi * 64 + bit;
            }
        }
        top_word_ = -1;
        return -1;
    }

    std::vector<std::uint32_t> extract_and_clear() {
        std::vector<std::uint32_t> out;
        for (std::size_t wi = 0; wi <= static_cast<std::size_t>(top_word_); ++wi) {
            std::uint64_t word = words_[wi];
            while (word) {
                int bit = std::countr_zero(word);
                out.push_back(static_cast<std::uint32_t>(wi * 64 + static_cast<std::size_t>(bit)));
                word &= word - 1;
            }
            words_[wi] = 0;
        }
        top_word_ = -1;
        return out;
    }

    void clear() {
        if (top_word_ < 0) return;
        for (std::size_t wi = 0; wi <= static_cast<std::size_t>(top_word_); ++wi)
            words_[wi] = 0;
        top_word_ = -1;
    }

private:
    std::vector<std::uint64_t> words_;
    std::int64_t top_word_;
};

} // namespace detail

inline std::size_t gf2_rank(const SparseBitMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::int64_t> owner(m.rows, -1);  // pivot row -> stored column
    std::vector<std::vector<std::uint32_t>> stored;
    detail::BitAccumulator acc(m.rows);

    std::size_t rank = 0;
    for (const auto& col : m.col_rows) {
        if (col.empty()) continue;
        acc.load(col);
        for (;;) {
            std::int64_t low = acc.highest();
            if (low < 0) break;
            std::int64_t own = owner[static_cast<std::size_t>(low)];
            if (own < 0) {
                owner[static_cast<std::size_t>(low)] = static_cast<std::int64_t>(stored.size());
                stored.push_back(acc.extract_and_clear());
                ++rank;
                break;
            }
            acc.xor_with(stored[static_cast<std::size_t>(own)]);
        }
        acc.clear();
    }
    return rank;
}

/// "rows cols" header, then one sorted "r c" pair per line.
inline std::string dump_matrix(const SparseBitMatrix& m) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
    for (std::size_t c = 0; c < m.cols; ++c)
        for (std::uint32_t r : m.col_rows[c])
            entries.emplace_back(r, static_cast<std::uint32_t>(c));
    std::sort(entries.begin(), entries.end());
    std::string out = std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
    for (auto [r, c] : entries)
        out += std::to_string(r) + " " + std::to_string(c) + "\n";
    return out;
}

} // namespace stripcells
