#pragma once

// Exact GF(2) chain-complex linear algebra for the strip complex: boundary
// matrices, Betti numbers, Euler characteristic.  This module never looks at
// the critical-cell machinery; it is the independent cross-check for it.

#include <string>
#include <unordered_map>
#include <vector>

#include "stripcells/gf2.hpp"
#include "stripcells/symbol.hpp"

namespace stripcells {

struct BettiVector {
    std::vector<std::size_t> betti;  // indexed by dimension 0..top_dimension
};

/// Cells of every dimension, each list in enumeration order.
inline std::vector<std::vector<Symbol>> cells_by_dimension(const StripParams& p) {
    std::vector<std::vector<Symbol>> out(static_cast<std::size_t>(p.top_dimension()) + 1);
    for (Symbol& s : enumerate_cells(p))
        out[static_cast<std::size_t>(s.dimension())].push_back(std::move(s));
    return out;
}

namespace detail {

inline std::unordered_map<std::string, std::uint32_t> index_of(const std::vector<Symbol>& cells) {
    std::unordered_map<std::string, std::uint32_t> idx;
    idx.reserve(cells.size() * 2);
    for (std::size_t i = 0; i < cells.size(); ++i)
        idx.emplace(format_symbol(cells[i]), static_cast<std::uint32_t>(i));
    return idx;
}

/// Boundary matrix between explicit cell lists; entry 1 where the face
/// multiplicity is odd.
inline SparseBitMatrix boundary_between(const std::vector<Symbol>& lower,
                                        const std::vector<Symbol>& upper) {
    auto idx = index_of(lower);
    SparseBitMatrix m;
    m.rows = lower.size();
    m.cols = upper.size();
    m.col_rows.resize(upper.size());
    for (std::size_t c = 0; c < upper.size(); ++c) {
        std::vector<std::uint32_t>& col = m.col_rows[c];
        for (const auto& [face, mult] : faces(upper[c])) {
            if (mult % 2 == 0) continue;
            col.push_back(idx.at(format_symbol(face)));
        }
        std::sort(col.begin(), col.end());
    }
    return m;
}

} // namespace detail

/// Boundary matrix of the given dimension: rows index (dim-1)-cells, columns
/// index dim-cells, both in enumeration order.
inline SparseBitMatrix boundary_matrix(const StripParams& p, int dim) {
    if (dim < 1 || dim > p.top_dimension())
        throw std::invalid_argument("boundary dimension out of range 1.." +
                                    std::to_string(p.top_dimension()) + ": " +
                                    std::to_string(dim));
    std::vector<Symbol> lower = enumerate_cells(p, dim - 1);
    std::vector<Symbol> upper = enumerate_cells(p, dim);
    return detail::boundary_between(lower, upper);
}

/// Composing two consecutive boundaries must cancel over GF(2).  Checked at
/// the level of face derivations, with integer multiplicities: for every
/// cell, every doubly-iterated face must be reached an even number of times.
inline bool boundary_square_is_zero(const StripParams& p) {
    auto by_dim = cells_by_dimension(p);
    for (std::size_t d = 2; d < by_dim.size(); ++d) {
        for (const Symbol& s : by_dim[d]) {
            std::unordered_map<std::string, long> reach;
            for (const auto& [face, mult] : faces(s))
                for (const auto& [sub, mult2] : faces(face))
                    reach[format_symbol(sub)] += static_cast<long>(mult) * mult2;
            for (const auto& [key, total] : reach)
                if (total % 2 != 0) return false;
        }
    }
    return true;
}

/// Betti numbers over GF(2): betti[j] = #j-cells - rank d_j - rank d_{j+1}.
inline BettiVector betti(const StripParams& p) {
    auto by_dim = cells_by_dimension(p);
    std::size_t top = by_dim.size() - 1;
    std::vector<std::size_t> ranks(top + 2, 0);  // ranks[j] = rank of d_j
    for (std::size_t j = 1; j <= top; ++j)
        ranks[j] = gf2_rank(detail::boundary_between(by_dim[j - 1], by_dim[j]));

    BettiVector out;
    out.betti.resize(top + 1);
    for (std::size_t j = 0; j <= top; ++j)
        out.betti[j] = by_dim[j].size() - ranks[j] - ranks[j + 1];
    return out;
}

/// Alternating sum of cell counts.  Must agree with the alternating sum of
/// Betti numbers; the test suites assert that.
inline long euler_characteristic(const StripParams& p) {
    auto by_dim = cells_by_dimension(p);
    long chi = 0;
    for (std::size_t j = 0; j < by_dim.size(); ++j)
        chi += (j % 2 == 0 ? 1 : -1) * static_cast<long>(by_dim[j].size());
    return chi;
}

} // namespace stripcells
