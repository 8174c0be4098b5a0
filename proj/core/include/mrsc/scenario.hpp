#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mrsc/broadcast.hpp"

namespace mrsc {

// End-to-end storage demonstrations: one striped receiver, two receivers
// over independent stripe rows, or two nodes of the product-matrix layout.
struct ScenarioConfig {
    std::string scenario;      // striped-p2p | mds-broadcast | mbr-broadcast
    Field field;               // null picks the scenario default
    std::vector<std::uint64_t> a; // stripe row (striped-p2p, mds-broadcast)
    std::vector<std::uint64_t> b; // second receiver's stripe row (mds-broadcast)
    std::uint64_t m = 0;       // stripes; 0 picks the scenario default
    std::uint64_t eps = 1;
    std::uint64_t seed = 0;
    std::uint64_t trials = 100;
    bool escalate_field = true; // mbr-broadcast: retry with a bigger field
    ConstructOptions opts{200, true, 16, 1};
};

struct ScenarioReport {
    std::string scenario;
    Field field_used;
    std::uint64_t cost = 0;
    std::uint64_t bound = 0;           // theoretical optimum for the instance
    std::uint64_t individual_cost = 0; // two separate updates (broadcast scenarios)
    double saving_percent = 0.0;
    std::uint64_t theta = 0;
    std::uint64_t trials = 0;
    std::uint64_t passes = 0;
    std::uint64_t failures = 0;
    std::uint64_t seed = 0;
    std::string notes;
};

ScenarioReport run_scenario(const ScenarioConfig& cfg);

ScenarioConfig scenario_config_from_json(const nlohmann::json& j);
nlohmann::json scenario_report_to_json(const ScenarioReport& r);

struct P2PSimulation {
    std::uint64_t trials = 0;
    std::uint64_t passes = 0;
    std::uint64_t failures = 0;
};

// Random stale content plus a random difference of weight <= eps per trial;
// a pass means the decoder reproduced the receiver's updated content.
P2PSimulation simulate_p2p(const P2PScheme& s, std::uint64_t trials, std::uint64_t seed);

struct BroadcastSimulation {
    std::uint64_t trials = 0;
    std::uint64_t passes_a = 0;
    std::uint64_t passes_b = 0;
    std::uint64_t failures_a = 0;
    std::uint64_t failures_b = 0;
};

BroadcastSimulation simulate_broadcast(const BroadcastScheme& s, std::uint64_t trials,
                                       std::uint64_t seed);

} // namespace mrsc
