#pragma once

// Ordered-partition symbols labelling the cells of the strip complex.
//
// A symbol is an ordering of the labels 1..n split by bars into nonempty
// blocks, e.g. "3 1|2".  With a strip width w attached, every block holds at
// most w labels.  A symbol with k blocks labels a cell of dimension n - k.
// The codimension-1 faces of a cell split one of its blocks into two
// nonempty subsequences that keep the block's internal order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stripcells {

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct StripParams {
    int n = 1;
    int w = 2;

    StripParams(int n_, int w_) : n(n_), w(w_) {
        if (n < 1)
            throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
        if (w < 2)
            throw std::invalid_argument(
                "strip width must be >= 2, got " + std::to_string(w) +
                " (a width-1 strip pins the disks in single file and the complex "
                "degenerates to isolated points)");
    }

    /// Least number of blocks a width-w symbol on n labels can have.
    int min_blocks() const { return (n + w - 1) / w; }

    /// Dimension of the top cells: n - ceil(n/w).
    int top_dimension() const { return n - min_blocks(); }
};

class Symbol {
public:
    Symbol() = default;

    /// Builds a symbol from explicit blocks and checks the invariants:
    /// blocks nonempty, labels exactly {1..n} with n the total label count.
    static Symbol from_blocks(const std::vector<std::vector<int>>& blocks) {
        Symbol s;
        for (const auto& b : blocks) {
            if (b.empty())
                throw parse_error("empty block");
            for (int x : b)
                s.labels_.push_back(x);
            s.bounds_.push_back(static_cast<int>(s.labels_.size()));
        }
        s.check_labels();
        return s;
    }

    int n() const { return static_cast<int>(labels_.size()); }
    int block_count() const { return static_cast<int>(bounds_.size()); }
    int dimension() const { return n() - block_count(); }

    std::span<const int> block(int i) const {
        int begin = i == 0 ? 0 : bounds_[i - 1];
        return {labels_.data() + begin, static_cast<std::size_t>(bounds_[i] - begin)};
    }

    int block_size(int i) const {
        return bounds_[i] - (i == 0 ? 0 : bounds_[i - 1]);
    }

    int max_block_size() const {
        int m = 0;
        for (int i = 0; i < block_count(); ++i) m = std::max(m, block_size(i));
        return m;
    }

    bool fits_width(int w) const { return max_block_size() <= w; }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out;
        out.reserve(bounds_.size());
        for (int i = 0; i < block_count(); ++i) {
            auto b = block(i);
            out.emplace_back(b.begin(), b.end());
        }
        return out;
    }

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.labels_ == b.labels_ && a.bounds_ == b.bounds_;
    }

private:
    void check_labels() const {
        int total = n();
        std::vector<char> seen(static_cast<std::size_t>(total) + 1, 0);
        for (int x : labels_) {
            if (x < 1 || x > total) {
                // Some label in 1..total is then necessarily absent.
                for (int y = 1; y <= total; ++y) {
                    bool found = std::find(labels_.begin(), labels_.end(), y) != labels_.end();
                    if (!found)
                        throw parse_error("missing label " + std::to_string(y) +
                                          " (symbol mentions " + std::to_string(x) + ")");
                }
                throw parse_error("label " + std::to_string(x) + " out of range");
            }
            if (seen[static_cast<std::size_t>(x)])
                throw parse_error("duplicate label " + std::to_string(x));
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }

    std::vector<int> labels_;  // blocks concatenated left to right
    std::vector<int> bounds_;  // prefix ends of the blocks
};

inline std::string format_symbol(const Symbol& s) {
    std::string out;
    for (int i = 0; i < s.block_count(); ++i) {
        if (i) out += '|';
        auto b = s.block(i);
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(b[k]);
        }
    }
    return out;
}

// Grammar:  symbol := block ('|' block)*;  block := label (' ' label)*;
// label := decimal integer >= 1, no leading zeros.  Any run of blanks
// separates labels; the canonical output uses single spaces.
inline Symbol parse_symbol(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> current;
    std::string token;

    auto flush_token = [&]() {
        if (token.empty()) return;
        for (char c : token)
            if (c < '0' || c > '9')
                throw parse_error("non-integer token \"" + token + "\"");
        if (token.size() > 1 && token[0] == '0')
            throw parse_error("leading zero in token \"" + token + "\"");
        long value = std::stol(token);
        if (value < 1)
            throw parse_error("label must be >= 1, got \"" + token + "\"");
        if (value > 1'000'000)
            throw parse_error("label out of range: \"" + token + "\"");
        current.push_back(static_cast<int>(value));
        token.clear();
    };
    auto flush_block = [&]() {
        flush_token();
        if (current.empty())
            throw parse_error("empty block");
        blocks.push_back(std::move(current));
        current.clear();
    };

    for (char c : text) {
        if (c == '|') {
            flush_block();
        } else if (c == ' ' || c == '\t') {
            flush_token();
        } else {
            token += c;
        }
    }
    flush_block();
    return Symbol::from_blocks(blocks);
}

/// Dimension of the whole complex: n - ceil(n/w).
inline int dimension(const StripParams& p) { return p.top_dimension(); }

namespace detail {

inline void enumerate_rec(const StripParams& p, int remaining_count, std::uint32_t remaining_mask,
                          std::optional<int> want_blocks, std::vector<std::vector<int>>& blocks,
                          std::vector<std::pair<std::string, Symbol>>& out) {
    if (remaining_count == 0) {
        if (want_blocks && static_cast<int>(blocks.size()) != *want_blocks) return;
        Symbol s = Symbol::from_blocks(blocks);
        out.emplace_back(format_symbol(s), std::move(s));
        return;
    }
    if (want_blocks && static_cast<int>(blocks.size()) >= *want_blocks) return;

    int max_size = std::min(p.w, remaining_count);
    blocks.emplace_back();
    for (int size = 1; size <= max_size; ++size) {
        // fill the open block with every ordered size-tuple of remaining labels
        std::vector<int>& blk = blocks.back();
        auto pick = [&](auto&& self, int left, std::uint32_t mask) -> void {
            if (left == 0) {
                enumerate_rec(p, remaining_count - size, mask, want_blocks, blocks, out);
                return;
            }
            for (int x = 1; x <= p.n; ++x) {
                if (!(mask & (1u << x))) continue;
                blk.push_back(x);
                self(self, left - 1, mask & ~(1u << x));
                blk.pop_back();
            }
        };
        pick(pick, size, remaining_mask);
    }
    blocks.pop_back();
}

} // namespace detail

/// All cells of the width-w complex on {1..n}, in lexicographic order of
/// their canonical text.  With `dim` given, only the cells of that dimension;
/// out-of-range dimensions yield an empty list.
inline std::vector<Symbol> enumerate_cells(const StripParams& p, std::optional<int> dim = {}) {
    if (p.n > 31)
        throw std::invalid_argument("enumeration supports n <= 31");
    std::optional<int> want_blocks;
    if (dim) {
        if (*dim < 0 || *dim > p.top_dimension()) return {};
        want_blocks = p.n - *dim;
    }
    std::vector<std::pair<std::string, Symbol>> tagged;
    std::vector<std::vector<int>> blocks;
    std::uint32_t full = 0;
    for (int x = 1; x <= p.n; ++x) full |= 1u << x;
    detail::enumerate_rec(p, p.n, full, want_blocks, blocks, tagged);
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Symbol> out;
    out.reserve(tagged.size());
    for (auto& t : tagged) out.push_back(std::move(t.second));
    return out;
}

/// Codimension-1 faces of s with multiplicities (number of distinct
/// derivations).  Each face replaces one block by an ordered pair of
/// nonempty subsequences of it; there are 2^|B| - 2 derivations per block.
/// Deterministic order: lexicographic on the face's canonical text.
inline std::vector<std::pair<Symbol, int>> faces(const Symbol& s) {
    std::map<std::string, std::pair<Symbol, int>> acc;
    for (int bi = 0; bi < s.block_count(); ++bi) {
        auto blk = s.block(bi);
        int c = static_cast<int>(blk.size());
        if (c < 2) continue;
        for (std::uint32_t mask = 1; mask + 1 < (1u << c); ++mask) {
            std::vector<int> first, second;
            for (int k = 0; k < c; ++k)
                ((mask >> k) & 1u ? first : second).push_back(blk[static_cast<std::size_t>(k)]);

            std::vector<std::vector<int>> fb;
            fb.reserve(static_cast<std::size_t>(s.block_count()) + 1);
            for (int j = 0; j < s.block_count(); ++j) {
                if (j == bi) {
                    fb.push_back(first);
                    fb.push_back(second);
                } else {
                    auto b = s.block(j);
                    fb.emplace_back(b.begin(), b.end());
                }
            }
            Symbol face = Symbol::from_blocks(fb);
            std::string key = format_symbol(face);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(std::move(key), std::make_pair(std::move(face), 1));
            else
                it->second.second += 1;
        }
    }
    std::vector<std::pair<Symbol, int>> out;
    out.reserve(acc.size());
    for (auto& [k, v] : acc) out.push_back(std::move(v));
    return out;
}

} // namespace stripcells
