#pragma once

// Cup products on the critical-cell basis, for products of degree-1
// generators.  A generator is the class of the follower-free critical
// 1-cell whose only non-singleton block is a pair (i j) with i > j.
//
// Product rules, applied in this order:
//   * more factors than the top dimension          -> 0   (grading)
//   * w or more factors sharing the first label    -> 0   (w+1 disks cannot
//                                                          stack in a width-w strip)
//   * a second label repeated across factors       -> 0   (two disks cannot both
//                                                          sit directly above it)
//   * factors sharing the first label i expand into the sum over all
//     orderings of their second labels appended to i in one block
//   * the resulting pairwise-disjoint blocks merge into a single basis
//     cell, the unique follower-free critical arrangement
//
// A factor list where some label occurs both as a first and as a second
// would chain columns; no rule above covers that shape and the engine
// refuses it rather than guess.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stripcells/morse.hpp"
#include "stripcells/symbol.hpp"

namespace stripcells {

class unsupported_product : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class certification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Generator {
    int first = 0;   // i
    int second = 0;  // j < i
    Symbol cell;     // canonical follower-free critical 1-cell

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator<(const Generator& a, const Generator& b) {
        return std::pair(a.first, a.second) < std::pair(b.first, b.second);
    }
};

namespace detail {

/// Arranges unicycle blocks into the unique follower-free critical order:
/// strictly descending block wheels.  Throws if two blocks tie, which cannot
/// happen while axles are distinct.
inline Symbol arrange_follower_free(std::vector<std::vector<int>> blocks, int w,
                                    WheelOrder order) {
    std::stable_sort(blocks.begin(), blocks.end(),
                     [order](const std::vector<int>& a, const std::vector<int>& b) {
                         // descending wheel order
                         return wheel_less(static_cast<int>(b.size()), b.front(),
                                           static_cast<int>(a.size()), a.front(), order);
                     });
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (!wheel_less(static_cast<int>(blocks[i + 1].size()), blocks[i + 1].front(),
                        static_cast<int>(blocks[i].size()), blocks[i].front(), order))
            throw std::logic_error("tied block wheels in canonical arrangement");
    Symbol s = Symbol::from_blocks(blocks);
    Classification c = classify(s, w, order);
    if (!c.critical || !c.follower_free)
        throw std::logic_error("canonical arrangement failed to be follower-free critical: " +
                               format_symbol(s));
    return s;
}

} // namespace detail

/// The canonical critical 1-cell for the pair i > j: block (i j) and the
/// remaining labels as singletons, placed in the unique follower-free
/// critical arrangement.  Checked against the classifier; exactly one
/// placement of the pair block may pass, anything else signals a wheel-order
/// misconfiguration.
inline Generator generator(int i, int j, const StripParams& p, WheelOrder order) {
    if (i <= j || j < 1 || i > p.n)
        throw std::invalid_argument("generator needs labels n >= i > j >= 1, got i=" +
                                    std::to_string(i) + " j=" + std::to_string(j));
    std::vector<int> singles;
    for (int x = p.n; x >= 1; --x)
        if (x != i && x != j) singles.push_back(x);

    std::optional<Symbol> found;
    for (std::size_t pos = 0; pos <= singles.size(); ++pos) {
        std::vector<std::vector<int>> blocks;
        for (std::size_t k = 0; k < pos; ++k) blocks.push_back({singles[k]});
        blocks.push_back({i, j});
        for (std::size_t k = pos; k < singles.size(); ++k) blocks.push_back({singles[k]});
        Classification c = classify(Symbol::from_blocks(blocks), p.w, order);
        if (c.critical && c.follower_free) {
            if (found)
                throw std::logic_error("pair block (" + std::to_string(i) + " " +
                                       std::to_string(j) +
                                       ") has two follower-free critical placements");
            found = Symbol::from_blocks(blocks);
        }
    }
    if (!found)
        throw std::logic_error("pair block (" + std::to_string(i) + " " + std::to_string(j) +
                               ") has no follower-free critical placement; "
                               "wheel order misconfigured");
    return Generator{i, j, std::move(*found)};
}

/// A GF(2) sum of critical basis cells of one degree.  Classes produced by
/// the engine keep their generator factorization so they can be multiplied
/// further; the zero class has no terms.
struct CohClass {
    int degree = 0;
    std::vector<Symbol> terms;  // sorted by canonical text, no duplicates
    std::optional<std::vector<Generator>> factors;  // sorted; empty list = unit

    bool is_zero() const { return terms.empty(); }
};

/// Degree-0 unit: the class of the unique critical 0-cell n|n-1|...|1.
inline CohClass unit_class(const StripParams& p) {
    std::vector<std::vector<int>> blocks;
    for (int x = p.n; x >= 1; --x) blocks.push_back({x});
    CohClass c;
    c.degree = 0;
    c.terms.push_back(Symbol::from_blocks(blocks));
    c.factors = std::vector<Generator>{};
    return c;
}

inline CohClass zero_class(int degree) {
    CohClass c;
    c.degree = degree;
    return c;
}

inline CohClass generator_class(const Generator& g) {
    CohClass c;
    c.degree = 1;
    c.terms.push_back(g.cell);
    c.factors = std::vector<Generator>{g};
    return c;
}

/// Product of degree-1 generators over GF(2), per the rules above.
inline CohClass multiply_generators(std::vector<Generator> gens, const StripParams& p,
                                    WheelOrder order) {
    if (gens.empty()) return unit_class(p);
    std::sort(gens.begin(), gens.end());
    int degree = static_cast<int>(gens.size());
    if (degree > p.top_dimension()) return zero_class(degree);

    // group second labels under each first label
    std::map<int, std::vector<int>> groups;
    for (const Generator& g : gens) {
        if (g.first > p.n)
            throw std::invalid_argument("generator label exceeds n");
        groups[g.first].push_back(g.second);
    }
    for (auto& [first, seconds] : groups)
        if (static_cast<int>(seconds.size()) >= p.w) return zero_class(degree);

    std::set<int> seconds_seen;
    for (const Generator& g : gens)
        if (!seconds_seen.insert(g.second).second) return zero_class(degree);

    for (const auto& [first, seconds] : groups)
        if (seconds_seen.count(first))
            throw unsupported_product(
                "label " + std::to_string(first) +
                " occurs both as a first and as a second element; the column-chaining "
                "product is outside the supported rules");

    // remaining labels stay singleton blocks
    std::vector<char> used(static_cast<std::size_t>(p.n) + 1, 0);
    for (const Generator& g : gens) {
        used[static_cast<std::size_t>(g.first)] = 1;
        used[static_cast<std::size_t>(g.second)] = 1;
    }
    std::vector<std::vector<int>> singles;
    for (int x = p.n; x >= 1; --x)
        if (!used[static_cast<std::size_t>(x)]) singles.push_back({x});

    // expand each group into all orderings of its tail, then take the
    // cartesian product of the groups
    std::vector<int> firsts;
    std::vector<std::vector<std::vector<int>>> tails;  // per group, list of tail orderings
    for (auto& [first, seconds] : groups) {
        firsts.push_back(first);
        std::sort(seconds.begin(), seconds.end());
        std::vector<std::vector<int>> orderings;
        do {
            orderings.push_back(seconds);
        } while (std::next_permutation(seconds.begin(), seconds.end()));
        tails.push_back(std::move(orderings));
    }

    std::map<std::string, Symbol> terms;  // parity-aware accumulation
    std::vector<std::size_t> choice(firsts.size(), 0);
    for (;;) {
        std::vector<std::vector<int>> blocks = singles;
        for (std::size_t gi = 0; gi < firsts.size(); ++gi) {
            std::vector<int> blk{firsts[gi]};
            for (int x : tails[gi][choice[gi]]) blk.push_back(x);
            blocks.push_back(std::move(blk));
        }
        Symbol term = detail::arrange_follower_free(std::move(blocks), p.w, order);
        std::string key = format_symbol(term);
        auto it = terms.find(key);
        if (it == terms.end())
            terms.emplace(std::move(key), std::move(term));
        else
            terms.erase(it);  // GF(2)

        // advance the mixed-radix choice vector
        std::size_t gi = 0;
        while (gi < choice.size()) {
            if (++choice[gi] < tails[gi].size()) break;
            choice[gi] = 0;
            ++gi;
        }
        if (gi == choice.size()) break;
    }

    CohClass out;
    out.degree = degree;
    for (auto& [key, term] : terms) out.terms.push_back(std::move(term));
    if (!out.terms.empty()) out.factors = std::move(gens);
    return out;
}

/// Bilinear extension on tracked factorizations; zero short-circuits,
/// the unit is the empty factor list.
inline CohClass multiply_classes(const CohClass& x, const CohClass& y, const StripParams& p,
                                 WheelOrder order) {
    if (x.is_zero() || y.is_zero()) return zero_class(x.degree + y.degree);
    if (!x.factors || !y.factors)
        throw unsupported_product("class without a tracked generator factorization");
    std::vector<Generator> combined = *x.factors;
    combined.insert(combined.end(), y.factors->begin(), y.factors->end());
    return multiply_generators(std::move(combined), p, order);
}

} // namespace stripcells
