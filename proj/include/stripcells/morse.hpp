#pragma once

// Wheel decomposition and the critical-cell criterion of the discrete
// gradient field on the strip complex.
//
// Inside a block, every left-to-right running maximum starts a wheel (it is
// the wheel's axle); the wheel carries the axle and the following smaller
// entries before the next axle.  A block is a unicycle when it is a single
// wheel, i.e. its first entry is its maximum.  Scanning blocks left to
// right, a block is a follower when its predecessor is a unicycle that is
// not itself a follower and whose wheel is smaller, in the chosen wheel
// order, than every wheel of the block.  A cell is critical when every
// block is either a non-follower unicycle, or a follower whose size plus
// its leader's size is at least w + 1.
//
// The wheel order is a free parameter of the construction; the two
// candidates below are validated against Betti numbers, and size_then_axle
// is the variant the validation pins.

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "stripcells/symbol.hpp"

namespace stripcells {

enum class WheelOrder { size_then_axle, axle_only };

inline std::string to_string(WheelOrder order) {
    return order == WheelOrder::size_then_axle ? "size-axle" : "axle";
}

struct Wheel {
    int axle = 0;               // first and largest entry
    std::vector<int> entries;   // axle followed by the smaller entries

    int size() const { return static_cast<int>(entries.size()); }
    friend bool operator==(const Wheel& a, const Wheel& b) {
        return a.entries == b.entries;
    }
};

/// Splits a block at its running maxima.  Concatenating the wheels' entries
/// restores the block.
inline std::vector<Wheel> wheel_decompose(std::span<const int> block) {
    assert(!block.empty());
    std::vector<Wheel> wheels;
    for (int x : block) {
        if (wheels.empty() || x > wheels.back().axle)
            wheels.push_back(Wheel{x, {x}});
        else
            wheels.back().entries.push_back(x);
    }
    return wheels;
}

inline std::vector<Wheel> wheel_decompose(const std::vector<int>& block) {
    return wheel_decompose(std::span<const int>(block.data(), block.size()));
}

/// Strict comparison of wheels by (size, axle).  Axles are distinct within a
/// symbol, so both variants give a total order there.
inline bool wheel_less(int size_a, int axle_a, int size_b, int axle_b, WheelOrder order) {
    if (order == WheelOrder::axle_only) return axle_a < axle_b;
    if (size_a != size_b) return size_a < size_b;
    return axle_a < axle_b;
}

enum class BlockRole {
    nonfollower_unicycle,
    follower,
    neither,  // only occurs in non-critical cells
};

struct Classification {
    bool critical = false;
    bool follower_free = false;
    std::vector<BlockRole> roles;
};

/// Classifies every block of s and decides criticality at width w.
///
/// `follower_total_floor` is the least combined size a follower and its
/// leader must reach; -1 selects the real criterion w + 1.  Passing w
/// instead deliberately breaks the criterion and is used by the negative
/// controls to show the Betti cross-check notices.
inline Classification classify(const Symbol& s, int w, WheelOrder order,
                               int follower_total_floor = -1) {
    int floor = follower_total_floor < 0 ? w + 1 : follower_total_floor;
    int k = s.block_count();
    Classification out;
    out.roles.assign(static_cast<std::size_t>(k), BlockRole::neither);

    std::vector<char> unicycle(static_cast<std::size_t>(k), 0);
    std::vector<char> follower(static_cast<std::size_t>(k), 0);

    for (int i = 0; i < k; ++i) {
        auto blk = s.block(i);
        unicycle[static_cast<std::size_t>(i)] =
            blk.front() == *std::max_element(blk.begin(), blk.end());
    }

    bool critical = true;
    bool any_follower = false;
    for (int i = 0; i < k; ++i) {
        auto blk = s.block(i);
        bool is_follower = false;
        if (i > 0 && unicycle[static_cast<std::size_t>(i - 1)] &&
            !follower[static_cast<std::size_t>(i - 1)]) {
            // leader's wheel is the whole previous block
            int lead_size = s.block_size(i - 1);
            int lead_axle = s.block(i - 1).front();
            is_follower = true;
            int axle = 0, size = 0;
            for (int x : blk) {
                if (x > axle) {
                    if (size > 0 && !wheel_less(lead_size, lead_axle, size, axle, order)) {
                        is_follower = false;
                        break;
                    }
                    axle = x;
                    size = 1;
                } else {
                    ++size;
                }
            }
            if (is_follower && !wheel_less(lead_size, lead_axle, size, axle, order))
                is_follower = false;
        }
        follower[static_cast<std::size_t>(i)] = is_follower;

        if (is_follower) {
            any_follower = true;
            out.roles[static_cast<std::size_t>(i)] = BlockRole::follower;
            if (s.block_size(i) + s.block_size(i - 1) < floor) critical = false;
        } else if (unicycle[static_cast<std::size_t>(i)]) {
            out.roles[static_cast<std::size_t>(i)] = BlockRole::nonfollower_unicycle;
        } else {
            out.roles[static_cast<std::size_t>(i)] = BlockRole::neither;
            critical = false;
        }
    }

    out.critical = critical;
    out.follower_free = critical && !any_follower;
    return out;
}

inline bool is_critical(const Symbol& s, int w, WheelOrder order,
                        int follower_total_floor = -1) {
    return classify(s, w, order, follower_total_floor).critical;
}

struct CriticalCell {
    Symbol symbol;
    std::vector<BlockRole> roles;
    bool follower_free = false;
};

/// Critical cells of the width-w complex, in enumeration order.
inline std::vector<CriticalCell> critical_cells(const StripParams& p,
                                                std::optional<int> dim,
                                                WheelOrder order,
                                                int follower_total_floor = -1) {
    std::vector<CriticalCell> out;
    for (Symbol& s : enumerate_cells(p, dim)) {
        Classification c = classify(s, p.w, order, follower_total_floor);
        if (c.critical)
            out.push_back(CriticalCell{std::move(s), std::move(c.roles), c.follower_free});
    }
    return out;
}

/// Per-block explanation of the classification, for the CLI.
inline std::vector<std::string> explain_classification(const Symbol& s, int w,
                                                       WheelOrder order) {
    Classification c = classify(s, w, order);
    std::vector<std::string> lines;
    for (int i = 0; i < s.block_count(); ++i) {
        auto blk = s.block(i);
        std::string line = "block " + std::to_string(i + 1) + " ";
        switch (c.roles[static_cast<std::size_t>(i)]) {
        case BlockRole::nonfollower_unicycle:
            line += "is a non-follower unicycle";
            break;
        case BlockRole::follower: {
            int combined = s.block_size(i) + s.block_size(i - 1);
            line += "is a follower of block " + std::to_string(i) + ", combined size " +
                    std::to_string(combined) +
                    (combined >= w + 1 ? " >= " : " < ") + std::to_string(w + 1);
            break;
        }
        case BlockRole::neither:
            if (blk.front() != *std::max_element(blk.begin(), blk.end()))
                line += "is not a unicycle (first entry " + std::to_string(blk.front()) +
                        " is not the block maximum) and is not a follower";
            else
                line += "is a unicycle marked neither";  // unreachable
            break;
        }
        lines.push_back(std::move(line));
    }
    lines.push_back(c.critical ? (c.follower_free ? "critical (follower-free)" : "critical")
                               : "not critical");
    return lines;
}

} // namespace stripcells
