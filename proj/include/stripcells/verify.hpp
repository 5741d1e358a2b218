#pragma once

// Batch cross-validation over (n, w) instances: chain-complex soundness,
// Euler consistency, critical-cell counts against Betti numbers under both
// wheel orders, the zero-divisor certificate and the TC formula.

#include <optional>
#include <string>
#include <vector>

#include "stripcells/homology.hpp"
#include "stripcells/morse.hpp"
#include "stripcells/tc.hpp"

namespace stripcells {

struct InstanceResult {
    int n = 0, w = 0;
    std::size_t total_cells = 0;
    bool boundary_square_zero = false;
    bool euler_consistent = false;
    std::vector<std::size_t> betti;
    std::vector<std::size_t> critical_size_axle;
    std::vector<std::size_t> critical_axle_only;
    bool size_axle_matches = false;
    bool axle_only_matches = false;
    bool pinned_matches = false;  // the wheel order the build ships with
    std::optional<bool> zdcl_ok;  // set when n > w
    std::optional<int> tc_value;
    bool tc_formula_ok = false;

    bool ok() const {
        return boundary_square_zero && euler_consistent && pinned_matches &&
               tc_formula_ok && (!zdcl_ok || *zdcl_ok);
    }
};

inline std::vector<std::size_t> critical_counts(const StripParams& p, WheelOrder order,
                                                int follower_total_floor = -1) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(p.top_dimension()) + 1, 0);
    for (const CriticalCell& c : critical_cells(p, std::nullopt, order, follower_total_floor))
        ++counts[static_cast<std::size_t>(c.symbol.dimension())];
    return counts;
}

/// Runs every check on one instance.  `follower_total_floor` forwards to the
/// classifier; the default -1 keeps the real w+1 criterion.
inline InstanceResult verify_instance(const StripParams& p, WheelOrder pinned,
                                      int follower_total_floor = -1) {
    InstanceResult r;
    r.n = p.n;
    r.w = p.w;

    auto by_dim = cells_by_dimension(p);
    for (const auto& cells : by_dim) r.total_cells += cells.size();

    r.boundary_square_zero = boundary_square_is_zero(p);
    r.betti = betti(p).betti;

    long chi_cells = euler_characteristic(p);
    long chi_betti = 0;
    for (std::size_t j = 0; j < r.betti.size(); ++j)
        chi_betti += (j % 2 == 0 ? 1 : -1) * static_cast<long>(r.betti[j]);
    r.euler_consistent = chi_cells == chi_betti;

    r.critical_size_axle = critical_counts(p, WheelOrder::size_then_axle, follower_total_floor);
    r.critical_axle_only = critical_counts(p, WheelOrder::axle_only, follower_total_floor);
    r.size_axle_matches = r.critical_size_axle == r.betti;
    r.axle_only_matches = r.critical_axle_only == r.betti;
    r.pinned_matches =
        pinned == WheelOrder::size_then_axle ? r.size_axle_matches : r.axle_only_matches;

    int expected_tc = p.n == 1 ? 1
                     : p.n <= p.w ? 2 * p.n - 2
                                  : 2 * p.n - 2 * p.min_blocks() + 1;
    try {
        TCReport rep = tc_report(p, pinned);
        r.tc_value = rep.value;
        r.tc_formula_ok = rep.value && *rep.value == expected_tc &&
                          (p.n <= p.w || rep.certified);
        if (p.n > p.w) r.zdcl_ok = rep.certified && rep.zdcl == 2 * (p.n - p.min_blocks());
    } catch (const certification_error&) {
        r.tc_formula_ok = false;
        if (p.n > p.w) r.zdcl_ok = false;
    }
    return r;
}

/// quick: all 2 <= w <= n <= 5 plus the one-disk case.
/// full:  quick plus n = 6 for all widths and (7, 2).
inline std::vector<StripParams> suite_instances(const std::string& name) {
    std::vector<StripParams> out;
    auto add_range = [&](int max_n) {
        out.emplace_back(1, 2);
        for (int n = 2; n <= max_n; ++n)
            for (int w = 2; w <= n; ++w) out.emplace_back(n, w);
    };
    if (name == "quick") {
        add_range(5);
    } else if (name == "full") {
        add_range(6);
        out.emplace_back(7, 2);
    } else {
        throw std::invalid_argument("unknown suite \"" + name + "\" (quick|full)");
    }
    return out;
}

struct SuiteResult {
    std::vector<InstanceResult> instances;
    bool all_ok = false;
    // set when exactly one wheel order reproduces Betti numbers on every instance
    std::optional<WheelOrder> validated_order;
};

/// With `mutate_follower_rule` the classifier's follower size floor drops
/// from w + 1 to w on every instance, a negative control that must make the
/// Betti cross-check fail.
inline SuiteResult verify_suite(const std::string& name, WheelOrder pinned,
                                bool mutate_follower_rule = false) {
    SuiteResult suite;
    bool sa_all = true, ao_all = true;
    suite.all_ok = true;
    for (const StripParams& p : suite_instances(name)) {
        InstanceResult r = verify_instance(p, pinned, mutate_follower_rule ? p.w : -1);
        sa_all = sa_all && r.size_axle_matches;
        ao_all = ao_all && r.axle_only_matches;
        suite.all_ok = suite.all_ok && r.ok();
        suite.instances.push_back(std::move(r));
    }
    if (sa_all != ao_all)
        suite.validated_order = sa_all ? WheelOrder::size_then_axle : WheelOrder::axle_only;
    return suite;
}

} // namespace stripcells
