#include "mrsc/scenario.hpp"

#include <algorithm>

#include "mrsc/errors.hpp"
#include "mrsc/linalg.hpp"
#include "mrsc/mbr.hpp"
#include "mrsc/rng.hpp"
#include "mrsc/serial.hpp"

namespace mrsc {

using nlohmann::json;

namespace {

std::vector<std::uint64_t> random_vector(Rng& rng, const Field& f, std::uint64_t n) {
    std::vector<std::uint64_t> v(n);
    for (auto& x : v) x = uniform_below(rng, f->order());
    return v;
}

SparseVector random_sparse(Rng& rng, const Field& f, std::uint64_t n, std::uint64_t max_w) {
    const std::uint64_t w = std::min(n, max_w) == 0
                                ? 0
                                : uniform_below(rng, std::min(n, max_w) + 1);
    std::vector<std::uint64_t> idx;
    while (idx.size() < w) {
        const std::uint64_t c = uniform_below(rng, n);
        if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
    }
    std::sort(idx.begin(), idx.end());
    SparseVector e{n, {}};
    for (const auto i : idx) e.entries.push_back({i, 1 + uniform_below(rng, f->order() - 1)});
    return e;
}

std::vector<std::uint64_t> plus_sparse(const Field& f, const std::vector<std::uint64_t>& x,
                                       const SparseVector& e) {
    std::vector<std::uint64_t> v = x;
    for (const auto& [idx, val] : e.entries) v[idx] = f->add(v[idx], val);
    return v;
}

ScenarioReport run_striped(const ScenarioConfig& cfg) {
    const Field f = cfg.field ? cfg.field : make_field(2, 3);
    const std::vector<std::uint64_t> a = cfg.a.empty() ? std::vector<std::uint64_t>{1, 1, 1}
                                                       : cfg.a;
    const std::uint64_t m = cfg.m ? cfg.m : 4;

    Rng rng(cfg.seed);
    const std::uint64_t build_seed = rng();
    const FieldMatrix amat = build_striped_matrix(f, a, m);
    const P2PScheme scheme = build_p2p_scheme(amat, cfg.eps, MrscMethod::auto_pick, build_seed,
                                              cfg.opts);

    ScenarioReport rep;
    rep.scenario = cfg.scenario;
    rep.field_used = f;
    rep.cost = scheme.cost;
    rep.bound = p2p_lower_bound(m, cfg.eps);
    rep.individual_cost = scheme.cost;
    rep.theta = 0;
    rep.seed = cfg.seed;
    rep.trials = cfg.trials;
    const std::uint64_t n = amat.cols;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const auto x = random_vector(rng, f, n);
        const auto e = random_sparse(rng, f, n, cfg.eps);
        const auto xe = plus_sparse(f, x, e);
        const auto got = p2p_decode(scheme, p2p_encode(scheme, xe), matvec(amat, x));
        (got == matvec(amat, xe)) ? ++rep.passes : ++rep.failures;
    }
    return rep;
}

ScenarioReport run_two_receivers(const ScenarioConfig& cfg, const Field& f,
                                 const FieldMatrix& amat, const FieldMatrix& bmat) {
    Rng rng(cfg.seed);
    const std::uint64_t build_seed = rng();
    const BroadcastScheme scheme = build_broadcast_scheme(amat, bmat, cfg.eps, build_seed,
                                                          cfg.opts);

    ScenarioReport rep;
    rep.scenario = cfg.scenario;
    rep.field_used = f;
    rep.cost = scheme.cost;
    const BroadcastCost oc = optimal_broadcast_cost(amat, bmat, cfg.eps);
    rep.bound = oc.cost.value_or(scheme.cost);
    rep.individual_cost = p2p_lower_bound(amat.rows, cfg.eps) + p2p_lower_bound(bmat.rows, cfg.eps);
    rep.saving_percent = rep.individual_cost == 0
                             ? 0.0
                             : 100.0 *
                                   static_cast<double>(rep.individual_cost - scheme.cost) /
                                   static_cast<double>(rep.individual_cost);
    rep.theta = scheme.theta;
    rep.seed = cfg.seed;
    rep.trials = cfg.trials;
    const std::uint64_t n = amat.cols;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const auto x = random_vector(rng, f, n);
        const auto e = random_sparse(rng, f, n, cfg.eps);
        const auto xe = plus_sparse(f, x, e);
        const auto y = broadcast_encode(scheme, xe);
        const bool ok_a = broadcast_decode(scheme, Receiver::A, y, matvec(amat, x)) ==
                          matvec(amat, xe);
        const bool ok_b = broadcast_decode(scheme, Receiver::B, y, matvec(bmat, x)) ==
                          matvec(bmat, xe);
        (ok_a && ok_b) ? ++rep.passes : ++rep.failures;
    }
    return rep;
}

ScenarioReport run_mds(const ScenarioConfig& cfg) {
    const Field f = cfg.field ? cfg.field : make_field(2, 3);
    const std::vector<std::uint64_t> a = cfg.a.empty() ? std::vector<std::uint64_t>{1, 1, 1}
                                                       : cfg.a;
    const std::vector<std::uint64_t> b = cfg.b.empty() ? std::vector<std::uint64_t>{1, 2, 3}
                                                       : cfg.b;
    if (a.size() != b.size())
        throw InputError("run_scenario: the two stripe rows must have equal length");
    const std::uint64_t m = cfg.m ? cfg.m : 4;
    return run_two_receivers(cfg, f, build_striped_matrix(f, a, m),
                             build_striped_matrix(f, b, m));
}

ScenarioReport run_mbr(const ScenarioConfig& cfg) {
    std::vector<Field> chain;
    if (cfg.field)
        chain = {cfg.field};
    else if (cfg.escalate_field)
        chain = {make_field(2, 6), make_field(2, 7), make_field(2, 8)};
    else
        chain = {make_field(2, 6)};
    const std::uint64_t m = cfg.m ? cfg.m : 2;

    std::string notes;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const Field& f = chain[i];
        try {
            const std::uint64_t gamma = f->smallest_primitive();
            ScenarioReport rep = run_two_receivers(cfg, f,
                                                   build_mbr_node_matrix(1, m, f, gamma),
                                                   build_mbr_node_matrix(2, m, f, gamma));
            rep.notes = notes;
            return rep;
        } catch (const ConstructionError& e) {
            if (i + 1 == chain.size()) throw;
            notes += "construction failed over " + f->name() + ", escalating: " + e.what() + "; ";
        }
    }
    throw ConstructionError("run_scenario: no field in the escalation chain worked");
}

} // namespace

ScenarioReport run_scenario(const ScenarioConfig& cfg) {
    if (cfg.scenario == "striped-p2p") return run_striped(cfg);
    if (cfg.scenario == "mds-broadcast") return run_mds(cfg);
    if (cfg.scenario == "mbr-broadcast") return run_mbr(cfg);
    throw InputError("run_scenario: unknown scenario '" + cfg.scenario + "'");
}

ScenarioConfig scenario_config_from_json(const json& j) {
    try {
        ScenarioConfig cfg;
        cfg.scenario = j.at("scenario").get<std::string>();
        if (j.contains("field")) cfg.field = field_from_json(j.at("field"));
        if (j.contains("a")) cfg.a = j.at("a").get<std::vector<std::uint64_t>>();
        if (j.contains("b")) cfg.b = j.at("b").get<std::vector<std::uint64_t>>();
        if (j.contains("m")) cfg.m = j.at("m").get<std::uint64_t>();
        if (j.contains("eps")) cfg.eps = j.at("eps").get<std::uint64_t>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("trials")) cfg.trials = j.at("trials").get<std::uint64_t>();
        if (j.contains("escalate_field")) cfg.escalate_field = j.at("escalate_field").get<bool>();
        if (j.contains("max_tries")) cfg.opts.max_tries = j.at("max_tries").get<std::uint64_t>();
        if (j.contains("repair")) cfg.opts.repair = j.at("repair").get<bool>();
        if (j.contains("repair_sweeps"))
            cfg.opts.repair_sweeps = j.at("repair_sweeps").get<std::uint64_t>();
        if (j.contains("threads")) cfg.opts.threads = j.at("threads").get<unsigned>();
        return cfg;
    } catch (const json::exception& e) {
        throw InputError(std::string("scenario config: ") + e.what());
    }
}

json scenario_report_to_json(const ScenarioReport& r) {
    return json{{"scenario", r.scenario},
                {"field", field_to_json(r.field_used)},
                {"q_used", r.field_used->order()},
                {"cost", r.cost},
                {"bound", r.bound},
                {"individual_cost", r.individual_cost},
                {"saving_percent", r.saving_percent},
                {"theta", r.theta},
                {"trials", r.trials},
                {"passes", r.passes},
                {"failures", r.failures},
                {"seed", r.seed},
                {"notes", r.notes}};
}

P2PSimulation simulate_p2p(const P2PScheme& s, std::uint64_t trials, std::uint64_t seed) {
    Rng rng(seed);
    const Field& f = s.A.field;
    const std::uint64_t n = s.A.cols;
    P2PSimulation out{trials, 0, 0};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto x = random_vector(rng, f, n);
        const auto e = random_sparse(rng, f, n, s.eps);
        const auto xe = plus_sparse(f, x, e);
        const auto got = p2p_decode(s, p2p_encode(s, xe), matvec(s.A, x));
        (got == matvec(s.A, xe)) ? ++out.passes : ++out.failures;
    }
    return out;
}

BroadcastSimulation simulate_broadcast(const BroadcastScheme& s, std::uint64_t trials,
                                       std::uint64_t seed) {
    Rng rng(seed);
    const Field& f = s.A.field;
    const std::uint64_t n = s.A.cols;
    BroadcastSimulation out;
    out.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto x = random_vector(rng, f, n);
        const auto e = random_sparse(rng, f, n, s.eps);
        const auto xe = plus_sparse(f, x, e);
        const auto y = broadcast_encode(s, xe);
        (broadcast_decode(s, Receiver::A, y, matvec(s.A, x)) == matvec(s.A, xe)) ? ++out.passes_a
                                                                                 : ++out.failures_a;
        (broadcast_decode(s, Receiver::B, y, matvec(s.B, x)) == matvec(s.B, xe)) ? ++out.passes_b
                                                                                 : ++out.failures_b;
    }
    return out;
}

} // namespace mrsc
