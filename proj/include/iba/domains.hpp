#pragma once

#include <string>
#include <vector>

#include "iba/model.hpp"

namespace iba {

struct Domain {
    FactoredPosg model;
    LocalModelSpec local;
};

namespace detail {

/// Builds a dense CPT by evaluating `fn` on every parent assignment.
/// `cards` lists the parent cardinalities in declared order.
template <typename Fn>
std::vector<double> make_cpt(const std::vector<int>& cards, int cardinality, Fn&& fn) {
    std::size_t rows = 1;
    for (int c : cards) rows *= static_cast<std::size_t>(c);
    std::vector<double> cpt;
    cpt.reserve(rows * static_cast<std::size_t>(cardinality));
    std::vector<int> pa(cards.size(), 0);
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t rem = r;
        for (std::size_t i = cards.size(); i-- > 0;) {
            pa[i] = static_cast<int>(rem % static_cast<std::size_t>(cards[i]));
            rem /= static_cast<std::size_t>(cards[i]);
        }
        Dist row = fn(pa);
        cpt.insert(cpt.end(), row.begin(), row.end());
    }
    return cpt;
}

inline Dist bernoulli(double p_one) { return {1.0 - p_one, p_one}; }

} // namespace detail

// ---------------------------------------------------------------------------
// Planetary exploration
// ---------------------------------------------------------------------------

enum class SatellitePolicy { ThresholdStochastic, UniformRandom, ThresholdDeterministic };

struct RoverConfig {
    int track_length = 5;          ///< cells 0..track_length-1; target is the last cell
    int horizon = 6;
    SatellitePolicy satellite_policy = SatellitePolicy::ThresholdStochastic;
    int battery_levels = 3;
    int battery_threshold = 2;     ///< charge below this makes provision unreliable
    double step_success_base = 0.4;
    double step_success_with_plan = 0.9;
    double plan_success = 0.8;     ///< provision probability below the threshold
    double recharge_prob = 0.5;
};

/// Rover on a line with a satellite that may provide a routing plan.
/// Actions: 0 = move forward, 1 = wait. Entering the target pays +10 once,
/// a failed move costs -0.5.
inline Domain build_rover(const RoverConfig& cfg = {}) {
    const int L = cfg.track_length;
    const int target = L - 1;
    const int B = cfg.battery_levels;

    std::vector<FactorSpec> factors;

    FactorSpec pos{"pos", L, FactorKind::State,
                   {ParentRef::prev("pos"), ParentRef::prev("pl"), ParentRef::action()}};
    pos.cpt = detail::make_cpt({L, 2, 2}, L, [&](const std::vector<int>& pa) {
        int p = pa[0], pl = pa[1], a = pa[2];
        Dist row(static_cast<std::size_t>(L), 0.0);
        if (p == target || a == 1) {
            row[static_cast<std::size_t>(p)] = 1.0;
        } else {
            double succ = pl ? cfg.step_success_with_plan : cfg.step_success_base;
            row[static_cast<std::size_t>(p + 1)] = succ;
            row[static_cast<std::size_t>(p)] = 1.0 - succ;
        }
        return row;
    });
    factors.push_back(std::move(pos));

    FactorSpec done{"done", 2, FactorKind::State, {ParentRef::prev("done"), ParentRef::same("pos")}};
    done.cpt = detail::make_cpt({2, L}, 2, [&](const std::vector<int>& pa) {
        return detail::bernoulli(pa[0] == 1 || pa[1] == target ? 1.0 : 0.0);
    });
    factors.push_back(std::move(done));

    FactorSpec pl{"pl", 2, FactorKind::State, {ParentRef::same("a_sat")}};
    pl.cpt = detail::make_cpt({2}, 2, [&](const std::vector<int>& pa) {
        return detail::bernoulli(pa[0] == 1 ? 1.0 : 0.0);
    });
    factors.push_back(std::move(pl));

    FactorSpec charge{"charge", B, FactorKind::State, {ParentRef::prev("charge"), ParentRef::same("a_sat")}};
    charge.cpt = detail::make_cpt({B, 2}, B, [&](const std::vector<int>& pa) {
        int c = pa[0], provided = pa[1];
        Dist row(static_cast<std::size_t>(B), 0.0);
        if (provided) {
            row[static_cast<std::size_t>(c > 0 ? c - 1 : 0)] = 1.0;
        } else if (c < B - 1) {
            row[static_cast<std::size_t>(c + 1)] = cfg.recharge_prob;
            row[static_cast<std::size_t>(c)] = 1.0 - cfg.recharge_prob;
        } else {
            row[static_cast<std::size_t>(c)] = 1.0;
        }
        return row;
    });
    factors.push_back(std::move(charge));

    std::vector<std::vector<double>> sat_table;
    for (int c = 0; c < B; ++c) {
        double provide = 0.0;
        switch (cfg.satellite_policy) {
            case SatellitePolicy::ThresholdStochastic:
                provide = c == 0 ? 0.0 : (c < cfg.battery_threshold ? cfg.plan_success : 1.0);
                break;
            case SatellitePolicy::UniformRandom:
                provide = 0.5;
                break;
            case SatellitePolicy::ThresholdDeterministic:
                provide = c >= 1 ? 1.0 : 0.0;
                break;
        }
        sat_table.push_back({1.0 - provide, provide});
    }
    FixedPolicy satellite{"a_sat", {"charge"}, 2, sat_table};
    factors.push_back(materialize_policy(satellite, factors));

    RewardFn reward = [target](const Assignment& s, int a, const Assignment& next) {
        double r = 0.0;
        if (s[1] == 0 && next[0] == target) r += 10.0;                  // first arrival
        if (a == 0 && next[0] == s[0] && s[0] != target) r -= 0.5;      // failed move
        return r;
    };

    InitialDist initial{{Assignment{0, 0, 0, B - 1, 0}, 1.0}};

    LocalModelSpec local;
    local.x_int = {"pos", "done"};
    local.x_dest = {"pl"};
    local.y_src = {{"a_sat", TimeOffset::Same}};
    local.dset_rule = {DsetEntry::factor("pl")};

    return Domain{FactoredPosg(std::move(factors), 2, std::move(reward), cfg.horizon, std::move(initial), "rover"),
                  std::move(local)};
}

// ---------------------------------------------------------------------------
// Traffic network
// ---------------------------------------------------------------------------

struct TrafficConfig {
    int horizon = 4;
    double reentry_prob = 0.5;  ///< probability that a released outgoing car re-enters
};

/// Four-intersection network. The protagonist controls intersection (1,1)
/// with four binary approach lanes; it is fed by neighbor B (east inflow)
/// and neighbor C (north inflow), both prioritizing their horizontal lanes,
/// while neighbor D acts uniformly at random. Outgoing south/west cars
/// re-enter via C and B with probability `reentry_prob`.
/// Actions: 0 = horizontal green (east/west cross), 1 = vertical green.
inline Domain build_traffic(const TrafficConfig& cfg = {}) {
    const double q = cfg.reentry_prob;
    std::vector<FactorSpec> factors;
    auto det = [](bool one) { return detail::bernoulli(one ? 1.0 : 0.0); };

    FactorSpec south{"south", 2, FactorKind::State, {ParentRef::prev("south"), ParentRef::action()}};
    south.cpt = detail::make_cpt({2, 2}, 2, [&](const std::vector<int>& pa) {
        return det(pa[0] == 1 && pa[1] == 0);  // stays unless vertical green
    });
    factors.push_back(std::move(south));

    FactorSpec west{"west", 2, FactorKind::State, {ParentRef::prev("west"), ParentRef::action()}};
    west.cpt = detail::make_cpt({2, 2}, 2, [&](const std::vector<int>& pa) {
        return det(pa[0] == 1 && pa[1] == 1);  // stays unless horizontal green
    });
    factors.push_back(std::move(west));

    FactorSpec east{"east", 2, FactorKind::State,
                    {ParentRef::prev("east"), ParentRef::action(), ParentRef::prev("B_h"), ParentRef::same("a_B")}};
    east.cpt = detail::make_cpt({2, 2, 2, 2}, 2, [&](const std::vector<int>& pa) {
        bool kept = pa[0] == 1 && pa[1] == 1;
        bool arrival = pa[2] == 1 && pa[3] == 0;  // B releases its horizontal car toward us
        return det(kept || arrival);
    });
    factors.push_back(std::move(east));

    FactorSpec north{"north", 2, FactorKind::State,
                     {ParentRef::prev("north"), ParentRef::action(), ParentRef::prev("C_v"), ParentRef::same("a_C")}};
    north.cpt = detail::make_cpt({2, 2, 2, 2}, 2, [&](const std::vector<int>& pa) {
        bool kept = pa[0] == 1 && pa[1] == 0;
        bool arrival = pa[2] == 1 && pa[3] == 1;  // C's vertical car crosses toward us
        return det(kept || arrival);
    });
    factors.push_back(std::move(north));

    FactorSpec bh{"B_h", 2, FactorKind::State,
                  {ParentRef::prev("B_h"), ParentRef::same("a_B"), ParentRef::prev("west"), ParentRef::action()}};
    bh.cpt = detail::make_cpt({2, 2, 2, 2}, 2, [&](const std::vector<int>& pa) {
        if (pa[0] == 1 && pa[1] == 1) return detail::bernoulli(1.0);          // kept under vertical green
        bool outgoing = pa[2] == 1 && pa[3] == 0;                             // our west car released
        return detail::bernoulli(outgoing ? q : 0.0);
    });
    factors.push_back(std::move(bh));

    FactorSpec bv{"B_v", 2, FactorKind::State, {ParentRef::prev("B_v"), ParentRef::same("a_B")}};
    bv.cpt = detail::make_cpt({2, 2}, 2, [&](const std::vector<int>& pa) {
        return det(pa[0] == 1 && pa[1] == 0);
    });
    factors.push_back(std::move(bv));

    FactorSpec ch{"C_h", 2, FactorKind::State, {ParentRef::prev("C_h"), ParentRef::same("a_C")}};
    ch.cpt = detail::make_cpt({2, 2}, 2, [&](const std::vector<int>& pa) {
        return det(pa[0] == 1 && pa[1] == 1);
    });
    factors.push_back(std::move(ch));

    FactorSpec cv{"C_v", 2, FactorKind::State,
                  {ParentRef::prev("C_v"), ParentRef::same("a_C"), ParentRef::prev("south"), ParentRef::action()}};
    cv.cpt = detail::make_cpt({2, 2, 2, 2}, 2, [&](const std::vector<int>& pa) {
        if (pa[0] == 1 && pa[1] == 0) return detail::bernoulli(1.0);          // kept while C serves horizontal
        bool outgoing = pa[2] == 1 && pa[3] == 1;                             // our south car released
        return detail::bernoulli(outgoing ? q : 0.0);
    });
    factors.push_back(std::move(cv));

    FactorSpec dh{"D_h", 2, FactorKind::State,
                  {ParentRef::prev("D_h"), ParentRef::same("a_D"), ParentRef::prev("C_h"), ParentRef::same("a_C")}};
    dh.cpt = detail::make_cpt({2, 2, 2, 2}, 2, [&](const std::vector<int>& pa) {
        if (pa[0] == 1 && pa[1] == 1) return detail::bernoulli(1.0);
        bool inflow = pa[2] == 1 && pa[3] == 0;
        return detail::bernoulli(inflow ? q : 0.0);
    });
    factors.push_back(std::move(dh));

    FactorSpec dv{"D_v", 2, FactorKind::State,
                  {ParentRef::prev("D_v"), ParentRef::same("a_D"), ParentRef::prev("B_v"), ParentRef::same("a_B")}};
    dv.cpt = detail::make_cpt({2, 2, 2, 2}, 2, [&](const std::vector<int>& pa) {
        if (pa[0] == 1 && pa[1] == 0) return detail::bernoulli(1.0);
        bool inflow = pa[2] == 1 && pa[3] == 1;
        return detail::bernoulli(inflow ? q : 0.0);
    });
    factors.push_back(std::move(dv));

    // Neighbor policies: B and C give green to their horizontal lane whenever
    // a car waits there; D flips a fair coin.
    FixedPolicy pol_b{"a_B", {"B_h"}, 2, {{0.0, 1.0}, {1.0, 0.0}}};
    FixedPolicy pol_c{"a_C", {"C_h"}, 2, {{0.0, 1.0}, {1.0, 0.0}}};
    FixedPolicy pol_d{"a_D", {}, 2, {{0.5, 0.5}}};
    factors.push_back(materialize_policy(pol_b, factors));
    factors.push_back(materialize_policy(pol_c, factors));
    factors.push_back(materialize_policy(pol_d, factors));

    RewardFn reward = [](const Assignment&, int, const Assignment& next) {
        return -static_cast<double>(next[2]) - static_cast<double>(next[3]);  // -east - north
    };

    //                      south east north west B_h B_v C_h C_v D_h D_v (+3 action slots)
    Assignment s0{1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0};
    InitialDist initial{{s0, 1.0}};

    LocalModelSpec local;
    local.x_int = {"south", "west"};
    local.x_dest = {"east", "north"};
    local.y_src = {{"B_h", TimeOffset::Prev},
                   {"a_B", TimeOffset::Same},
                   {"C_v", TimeOffset::Prev},
                   {"a_C", TimeOffset::Same}};
    local.dset_rule = {DsetEntry::factor("south"), DsetEntry::factor("west")};

    return Domain{FactoredPosg(std::move(factors), 2, std::move(reward), cfg.horizon, std::move(initial), "traffic"),
                  std::move(local)};
}

// ---------------------------------------------------------------------------
// Fire fighters
// ---------------------------------------------------------------------------

struct FireFightersConfig {
    int horizon = 4;
    double spread_prob = 0.9;
    double ext_single_clean = 1.0;  ///< single agent, no burning neighbor
    double ext_single = 0.6;        ///< single agent, some neighbor burning
    double ext_double = 1.0;        ///< two agents at the same house
    bool start_burning = true;      ///< all three houses burning at t=0
};

/// Two agents, three houses in a row. The protagonist (agent 1) works houses
/// 1/2 and observes x1, x2; agent 2 works houses 2/3 with a fixed reactive
/// policy. Actions: 0 = fight house 1, 1 = fight house 2 (protagonist);
/// agent 2: 0 = house 2, 1 = house 3.
inline Domain build_firefighters(const FireFightersConfig& cfg = {}) {
    std::vector<FactorSpec> factors;

    auto house = [&](bool burning, int agents, bool neighbor_burning) {
        if (burning) {
            double ext = agents == 0 ? 0.0
                       : agents >= 2 ? cfg.ext_double
                                     : (neighbor_burning ? cfg.ext_single : cfg.ext_single_clean);
            return detail::bernoulli(1.0 - ext);
        }
        double catch_fire = (neighbor_burning && agents == 0) ? cfg.spread_prob : 0.0;
        return detail::bernoulli(catch_fire);
    };

    FactorSpec x1{"x1", 2, FactorKind::State, {ParentRef::prev("x1"), ParentRef::prev("x2"), ParentRef::action()}};
    x1.cpt = detail::make_cpt({2, 2, 2}, 2, [&](const std::vector<int>& pa) {
        return house(pa[0] == 1, pa[2] == 0 ? 1 : 0, pa[1] == 1);
    });
    factors.push_back(std::move(x1));

    FactorSpec x2{"x2", 2, FactorKind::State,
                  {ParentRef::prev("x1"), ParentRef::prev("x2"), ParentRef::prev("x3"), ParentRef::action(),
                   ParentRef::same("a2")}};
    x2.cpt = detail::make_cpt({2, 2, 2, 2, 2}, 2, [&](const std::vector<int>& pa) {
        int agents = (pa[3] == 1 ? 1 : 0) + (pa[4] == 0 ? 1 : 0);
        return house(pa[1] == 1, agents, pa[0] == 1 || pa[2] == 1);
    });
    factors.push_back(std::move(x2));

    FactorSpec x3{"x3", 2, FactorKind::State, {ParentRef::prev("x2"), ParentRef::prev("x3"), ParentRef::same("a2")}};
    x3.cpt = detail::make_cpt({2, 2, 2}, 2, [&](const std::vector<int>& pa) {
        return house(pa[1] == 1, pa[2] == 1 ? 1 : 0, pa[0] == 1);
    });
    factors.push_back(std::move(x3));

    // Agent 2 fights the burning neighbor, tie-breaking toward house 3, and
    // defaults to house 2 when neither is burning.
    FixedPolicy pol2{"a2", {"x2", "x3"}, 2, {{1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}}};
    factors.push_back(materialize_policy(pol2, factors));

    RewardFn reward = [](const Assignment&, int, const Assignment& next) {
        return -static_cast<double>(next[0]) - static_cast<double>(next[1]);
    };

    int b = cfg.start_burning ? 1 : 0;
    InitialDist initial{{Assignment{b, b, b, 0}, 1.0}};

    LocalModelSpec local;
    local.x_int = {"x1"};
    local.x_dest = {"x2"};
    local.y_src = {{"x3", TimeOffset::Prev}, {"a2", TimeOffset::Same}};
    local.dset_rule = {DsetEntry::factor("x1"), DsetEntry::action(), DsetEntry::factor("x2")};

    return Domain{
        FactoredPosg(std::move(factors), 2, std::move(reward), cfg.horizon, std::move(initial), "firefighters"),
        std::move(local)};
}

} // namespace iba
