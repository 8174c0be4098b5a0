// Command-line front end for the update-coding library. Every subcommand
// reads and writes the same JSON shapes the library serializes, so files
// produced by one step feed directly into the next.
//
// Exit codes: 0 success, 1 a verification or decode failure (a witness is
// printed), 2 malformed input or an over-budget request.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mrsc/broadcast.hpp"
#include "mrsc/code.hpp"
#include "mrsc/construct.hpp"
#include "mrsc/errors.hpp"
#include "mrsc/field.hpp"
#include "mrsc/scenario.hpp"
#include "mrsc/serial.hpp"
#include "mrsc/update.hpp"

namespace {

using nlohmann::json;

struct CliState {
    bool json_out = false;
    unsigned threads = 1;
    bool threads_given = false;
    int rc = 0;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mrsc::InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw mrsc::InputError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw mrsc::InputError("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw mrsc::InputError("short write to " + path);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void kv(const std::string& key, const std::string& value) {
    std::cout << "  " << std::left << std::setw(22) << key << value << '\n';
}

void kv(const std::string& key, std::uint64_t value) { kv(key, std::to_string(value)); }

std::string support_str(const std::optional<mrsc::SupportSet>& s) {
    return s ? s->to_string() : std::string("-");
}

json support_json(const std::optional<mrsc::SupportSet>& s) {
    if (!s) return nullptr;
    return json(s->indices);
}

mrsc::MrscMode mode_from_name(const std::string& name) {
    if (name == "definition1") return mrsc::MrscMode::definition1;
    if (name == "cores") return mrsc::MrscMode::cores;
    if (name == "parity") return mrsc::MrscMode::parity;
    if (name == "all_sizes") return mrsc::MrscMode::all_sizes;
    throw mrsc::InputError("unknown mode " + name);
}

mrsc::MrscMethod method_from_name(const std::string& name) {
    if (name == "random") return mrsc::MrscMethod::random;
    if (name == "linearized") return mrsc::MrscMethod::linearized;
    if (name == "striped") return mrsc::MrscMethod::striped;
    if (name == "auto") return mrsc::MrscMethod::auto_pick;
    throw mrsc::InputError("unknown method " + name);
}

// q -> (p, m) with q = p^m, p prime. Trial division is plenty for the
// 64-bit orders the tables support.
std::pair<std::uint64_t, std::uint32_t> prime_power(std::uint64_t q) {
    if (q < 2) throw mrsc::InputError("a field order must be at least 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        throw mrsc::InputError(std::to_string(q) + " is not a prime power");
    return {p, m};
}

struct FieldShowArgs {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    std::uint32_t m = 1;
    std::vector<std::uint64_t> modulus;
};

void run_field_show(const FieldShowArgs& a, const CliState& st) {
    std::uint64_t p = a.p;
    std::uint32_t m = a.m;
    if (a.q != 0) {
        if (a.p != 0) throw mrsc::InputError("give either --q or --p/--m, not both");
        std::tie(p, m) = prime_power(a.q);
    }
    if (p == 0) throw mrsc::InputError("field show needs --q or --p");
    mrsc::Field f = a.modulus.empty() ? mrsc::make_field(p, m)
                                      : mrsc::make_field(p, m, a.modulus);
    if (st.json_out) {
        json j = mrsc::field_to_json(f);
        j["order"] = f->order();
        j["name"] = f->name();
        j["primitive"] = f->smallest_primitive();
        emit(j);
        return;
    }
    std::cout << "field " << f->name() << '\n';
    kv("characteristic", f->characteristic());
    kv("degree", f->degree());
    kv("order", f->order());
    if (f->degree() > 1) {
        std::ostringstream os;
        os << '[';
        const auto& mod = f->modulus();
        for (std::size_t i = 0; i < mod.size(); ++i) os << (i ? ", " : "") << mod[i];
        os << ']';
        kv("modulus", os.str());
    }
    kv("primitive", f->smallest_primitive());
}

struct VerifyArgs {
    std::string code_path;
    std::string super_path;
    std::string mode = "all";
};

void run_verify_mrsc(const VerifyArgs& a, CliState& st) {
    mrsc::LinearCode sub = mrsc::code_from_json(read_json_file(a.code_path));
    mrsc::LinearCode super = mrsc::code_from_json(read_json_file(a.super_path));
    std::vector<std::string> modes;
    if (a.mode == "all")
        modes = {"definition1", "cores", "parity", "all_sizes"};
    else
        modes = {a.mode};

    json results = json::array();
    bool ok = true;
    bool agree = true;
    std::optional<bool> first;
    for (const auto& name : modes) {
        mrsc::MrscVerdict v = mrsc::is_mrsc(sub, super, mode_from_name(name), st.threads);
        if (!first) first = v.ok;
        if (*first != v.ok) agree = false;
        ok = ok && v.ok;
        results.push_back({{"mode", name},
                           {"ok", v.ok},
                           {"witness", support_json(v.witness)},
                           {"subsets_checked", v.subsets_checked}});
    }

    if (st.json_out) {
        emit({{"ok", ok}, {"agree", agree}, {"results", results}});
    } else {
        for (const auto& r : results) {
            std::cout << "  " << std::left << std::setw(13) << r["mode"].get<std::string>()
                      << (r["ok"].get<bool>() ? "ok      " : "FAIL    ") << std::setw(12)
                      << r["subsets_checked"].get<std::uint64_t>();
            if (!r["witness"].is_null()) {
                std::cout << "witness ";
                for (const auto& i : r["witness"]) std::cout << i.get<std::uint64_t>() << ' ';
            }
            std::cout << '\n';
        }
        std::cout << (ok ? "maximally recoverable" : "not maximally recoverable") << '\n';
    }
    if (!agree) {
        std::cerr << "error: the four criteria disagree; this is a library bug\n";
        st.rc = 1;
    }
    if (!ok) st.rc = 1;
}

struct CoresArgs {
    std::string code_path;
    std::uint32_t k = 0;
    std::uint64_t max_subsets = 10'000'000;
};

void run_cores(const CoresArgs& a, const CliState& st) {
    mrsc::LinearCode c = mrsc::code_from_json(read_json_file(a.code_path));
    std::vector<mrsc::SupportSet> cores = mrsc::enumerate_cores(c, a.k, a.max_subsets);
    if (st.json_out) {
        json list = json::array();
        for (const auto& s : cores) list.push_back(json(s.indices));
        emit({{"n", c.n()}, {"k", a.k}, {"count", cores.size()}, {"cores", list}});
        return;
    }
    std::cout << cores.size() << " " << a.k << "-cores of a [" << c.n() << ", " << c.k()
              << "] code\n";
    std::size_t shown = 0;
    for (const auto& s : cores) {
        if (shown == 200) {
            std::cout << "  ... " << (cores.size() - shown) << " more\n";
            break;
        }
        std::cout << "  " << s.to_string() << '\n';
        ++shown;
    }
}

struct MrscBuildArgs {
    std::string method;
    std::string in_path;
    std::string sub_path;
    std::string out_path;
    std::uint64_t k = 0;
    std::uint64_t seed = 0;
    mrsc::ConstructOptions opts;
};

void summarize_built(const mrsc::LinearCode& code, const mrsc::MrscCertificate& cert,
                     const MrscBuildArgs& a, const CliState& st) {
    if (st.json_out) {
        emit({{"method", a.method},
              {"seed", a.seed},
              {"n", code.n()},
              {"k", code.k()},
              {"field", code.field()->name()},
              {"certificate", mrsc::certificate_to_json(cert)},
              {"out", a.out_path}});
        return;
    }
    std::cout << "built a [" << code.n() << ", " << code.k() << "] code over "
              << code.field()->name() << '\n';
    kv("method", a.method);
    kv("seed", a.seed);
    kv("subsets checked", cert.subsets_checked);
    kv("written to", a.out_path);
}

void run_mrsc_build(const MrscBuildArgs& a, const CliState& st) {
    mrsc::LinearCode super = mrsc::code_from_json(read_json_file(a.in_path));
    mrsc::LinearCode built = mrsc::LinearCode::zero_code(super.field(), super.n());
    mrsc::MrscCertificate cert;

    if (a.method == "random") {
        auto r = mrsc::construct_random_mrsc(super, a.k, a.seed, a.opts);
        built = r.code;
        cert = r.certificate;
    } else if (a.method == "linearized") {
        auto r = mrsc::construct_linearized_mrsc(super, a.k);
        built = r.built.code;
        cert = r.built.certificate;
    } else if (a.method == "striped") {
        auto shape = mrsc::detect_striped(super.generator());
        if (!shape)
            throw mrsc::InputError(
                "the input generator is not m copies of one row on a block diagonal");
        if (a.k == 0 || a.k % 2 != 0)
            throw mrsc::InputError("the striped method targets k = 2*eps; k must be even");
        auto r = mrsc::construct_striped_mrsc(super.field(), shape->first, shape->second,
                                              a.k / 2);
        built = r.built.code;
        cert = r.built.certificate;
    } else if (a.method == "sandwich-random" || a.method == "sandwich-linearized") {
        if (a.sub_path.empty())
            throw mrsc::InputError("sandwich methods need --sub with the inner code");
        mrsc::LinearCode inner = mrsc::code_from_json(read_json_file(a.sub_path));
        mrsc::SandwichSpec spec(super, inner, a.k);
        if (a.method == "sandwich-random") {
            auto r = mrsc::construct_sandwiched_random(spec, a.seed, a.opts);
            built = r.code;
            cert = r.certificate;
        } else {
            auto r = mrsc::construct_sandwiched_linearized(spec);
            built = r.built.code;
            cert = r.built.certificate;
        }
    } else {
        throw mrsc::InputError("unknown method " + a.method);
    }

    json out = mrsc::code_to_json(built);
    out["certificate"] = mrsc::certificate_to_json(cert);
    out["method"] = a.method;
    out["seed"] = a.seed;
    write_json_file(a.out_path, out);
    summarize_built(built, cert, a, st);
}

struct P2PBuildArgs {
    std::string a_path;
    std::string out_path;
    std::string method = "auto";
    std::uint64_t eps = 0;
    std::uint64_t seed = 0;
    mrsc::ConstructOptions opts;
};

void run_p2p_build(const P2PBuildArgs& a, const CliState& st) {
    mrsc::FieldMatrix mat = mrsc::matrix_from_json(read_json_file(a.a_path));
    mrsc::P2PScheme s =
        mrsc::build_p2p_scheme(mat, a.eps, method_from_name(a.method), a.seed, a.opts);
    json j = mrsc::p2p_scheme_to_json(s);
    j["seed"] = a.seed;
    write_json_file(a.out_path, j);
    std::uint64_t bound = mrsc::p2p_lower_bound(s.A.rows, s.eps);
    if (st.json_out) {
        emit({{"cost", s.cost},
              {"bound", bound},
              {"eps", s.eps},
              {"field", s.A.field->name()},
              {"seed", a.seed},
              {"certificate", mrsc::certificate_to_json(s.certificate)},
              {"out", a.out_path}});
        return;
    }
    std::cout << "point-to-point scheme for a " << s.A.rows << " x " << s.A.cols
              << " content map over " << s.A.field->name() << '\n';
    kv("eps", s.eps);
    kv("cost", s.cost);
    kv("lower bound", bound);
    kv("seed", a.seed);
    kv("subsets checked", s.certificate.subsets_checked);
    kv("written to", a.out_path);
}

struct SimulateArgs {
    std::string scheme_path;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
};

void run_p2p_simulate(const SimulateArgs& a, CliState& st) {
    mrsc::P2PScheme s = mrsc::p2p_scheme_from_json(read_json_file(a.scheme_path));
    mrsc::P2PSimulation sim = mrsc::simulate_p2p(s, a.trials, a.seed);
    std::uint64_t bound = mrsc::p2p_lower_bound(s.A.rows, s.eps);
    if (st.json_out) {
        emit({{"trials", sim.trials},
              {"passes", sim.passes},
              {"failures", sim.failures},
              {"cost", s.cost},
              {"bound", bound},
              {"seed", a.seed}});
    } else {
        std::cout << sim.passes << "/" << sim.trials << " decodes matched the updated content"
                  << '\n';
        kv("cost", s.cost);
        kv("lower bound", bound);
        kv("seed", a.seed);
    }
    if (sim.failures != 0) st.rc = 1;
}

struct ThetaArgs {
    std::string a_path;
    std::string b_path;
    std::uint64_t eps = 0;
    std::uint64_t max_subsets = 10'000'000;
};

void run_bcast_theta(const ThetaArgs& a, const CliState& st) {
    mrsc::FieldMatrix ma = mrsc::matrix_from_json(read_json_file(a.a_path));
    mrsc::FieldMatrix mb = mrsc::matrix_from_json(read_json_file(a.b_path));
    mrsc::ThetaReport t = mrsc::compute_theta(ma, mb, a.eps, a.max_subsets);
    if (st.json_out) {
        emit({{"theta", t.theta},
              {"theta_a", t.theta_a},
              {"theta_b", t.theta_b},
              {"argmin_a", support_json(t.argmin_a)},
              {"argmin_b", support_json(t.argmin_b)},
              {"trivial_intersection", t.trivial_intersection},
              {"intersection_dim", t.intersection.rows},
              {"subsets_checked", t.subsets_checked}});
        return;
    }
    kv("theta", t.theta);
    kv("theta_a", t.theta_a);
    kv("theta_b", t.theta_b);
    kv("argmin_a", support_str(t.argmin_a));
    kv("argmin_b", support_str(t.argmin_b));
    kv("intersection dim", t.intersection.rows);
    kv("subsets checked", t.subsets_checked);
}

struct BcastBuildArgs {
    std::string a_path;
    std::string b_path;
    std::string out_path;
    std::uint64_t eps = 0;
    std::uint64_t seed = 0;
    mrsc::ConstructOptions opts;
};

const char* regime_name(mrsc::BroadcastRegime r) {
    switch (r) {
        case mrsc::BroadcastRegime::trivial_intersection: return "trivial-intersection";
        case mrsc::BroadcastRegime::general: return "general";
        default: return "uncovered";
    }
}

void run_bcast_build(const BcastBuildArgs& a, const CliState& st) {
    mrsc::FieldMatrix ma = mrsc::matrix_from_json(read_json_file(a.a_path));
    mrsc::FieldMatrix mb = mrsc::matrix_from_json(read_json_file(a.b_path));
    mrsc::BroadcastScheme s = mrsc::build_broadcast_scheme(ma, mb, a.eps, a.seed, a.opts);
    json j = mrsc::broadcast_scheme_to_json(s);
    j["seed"] = a.seed;
    write_json_file(a.out_path, j);
    std::uint64_t individual = std::min(s.A.rows, 2 * s.eps) + std::min(s.B.rows, 2 * s.eps);
    if (st.json_out) {
        emit({{"regime", regime_name(s.regime)},
              {"cost", s.cost},
              {"individual_cost", individual},
              {"theta", s.theta},
              {"seed", a.seed},
              {"certificate_A", mrsc::certificate_to_json(s.certificate_a)},
              {"certificate_B", mrsc::certificate_to_json(s.certificate_b)},
              {"out", a.out_path}});
        return;
    }
    std::cout << "broadcast scheme over " << s.A.field->name() << '\n';
    kv("regime", regime_name(s.regime));
    kv("cost", s.cost);
    kv("two separate updates", individual);
    kv("theta", s.theta);
    kv("seed", a.seed);
    kv("written to", a.out_path);
}

void run_bcast_simulate(const SimulateArgs& a, CliState& st) {
    mrsc::BroadcastScheme s = mrsc::broadcast_scheme_from_json(read_json_file(a.scheme_path));
    mrsc::BroadcastSimulation sim = mrsc::simulate_broadcast(s, a.trials, a.seed);
    std::uint64_t individual = std::min(s.A.rows, 2 * s.eps) + std::min(s.B.rows, 2 * s.eps);
    if (st.json_out) {
        emit({{"trials", sim.trials},
              {"passes_a", sim.passes_a},
              {"failures_a", sim.failures_a},
              {"passes_b", sim.passes_b},
              {"failures_b", sim.failures_b},
              {"cost", s.cost},
              {"individual_cost", individual},
              {"seed", a.seed}});
    } else {
        std::cout << "receiver A " << sim.passes_a << "/" << sim.trials << ", receiver B "
                  << sim.passes_b << "/" << sim.trials << " decodes matched\n";
        kv("cost", s.cost);
        kv("two separate updates", individual);
        kv("seed", a.seed);
    }
    if (sim.failures_a + sim.failures_b != 0) st.rc = 1;
}

struct ScenarioArgs {
    std::string config_path;
};

void run_scenario_cmd(const ScenarioArgs& a, CliState& st) {
    mrsc::ScenarioConfig cfg = mrsc::scenario_config_from_json(read_json_file(a.config_path));
    if (st.threads_given) cfg.opts.threads = st.threads;
    mrsc::ScenarioReport r = mrsc::run_scenario(cfg);
    if (st.json_out) {
        emit(mrsc::scenario_report_to_json(r));
    } else {
        std::cout << "scenario " << r.scenario << " over " << r.field_used->name() << '\n';
        kv("cost", r.cost);
        kv("optimal", r.bound);
        if (r.individual_cost != 0) {
            kv("two separate updates", r.individual_cost);
            std::ostringstream os;
            os << std::fixed << std::setprecision(1) << r.saving_percent << "%";
            kv("saving", os.str());
        }
        if (r.theta != 0) kv("theta", r.theta);
        std::cout << "  " << r.passes << "/" << r.trials << " trials decoded correctly\n";
        kv("seed", r.seed);
        if (!r.notes.empty()) kv("notes", r.notes);
    }
    if (r.failures != 0) st.rc = 1;
}

void add_construct_flags(CLI::App* cmd, mrsc::ConstructOptions& opts) {
    cmd->add_option("--max-tries", opts.max_tries, "random draws before giving up");
    cmd->add_flag("--repair,!--no-repair", opts.repair,
                  "walk the free coefficients when random draws exhaust");
    cmd->add_option("--repair-sweeps", opts.repair_sweeps, "passes over the free coefficients");
}

} // namespace

int main(int argc, char** argv) {
    CliState st;
    CLI::App app{"maximally recoverable subcodes and sparse-update schemes"};
    app.set_version_flag("--version", "0.1.0");
    app.require_subcommand(1);

    auto add_common = [&st](CLI::App* cmd) {
        cmd->add_flag("--json", st.json_out, "machine-readable output on stdout");
        cmd->add_option("--threads", st.threads, "worker threads for subset scans")
            ->check(CLI::Range(1u, 256u))
            ->each([&st](const std::string&) { st.threads_given = true; });
    };

    // field show
    auto* field_cmd = app.add_subcommand("field", "finite field inspection");
    field_cmd->require_subcommand(1);
    FieldShowArgs fs;
    auto* field_show = field_cmd->add_subcommand("show", "print a field's structure");
    field_show->add_option("--q", fs.q, "field order (prime power)");
    field_show->add_option("--p", fs.p, "characteristic");
    field_show->add_option("--m", fs.m, "extension degree");
    field_show->add_option("--modulus", fs.modulus,
                           "irreducible polynomial, constant term first");
    add_common(field_show);
    field_show->callback([&] { run_field_show(fs, st); });

    // codes verify-mrsc / cores
    auto* codes_cmd = app.add_subcommand("codes", "linear code predicates");
    codes_cmd->require_subcommand(1);
    VerifyArgs va;
    auto* verify = codes_cmd->add_subcommand(
        "verify-mrsc", "check that every core of the big code stays full rank");
    verify->add_option("--code", va.code_path, "subcode JSON")->required();
    verify->add_option("--super", va.super_path, "containing code JSON")->required();
    verify->add_option("--mode", va.mode, "criterion to run")
        ->check(CLI::IsMember({"all", "definition1", "cores", "parity", "all_sizes"}));
    add_common(verify);
    verify->callback([&] { run_verify_mrsc(va, st); });

    CoresArgs ca;
    auto* cores = codes_cmd->add_subcommand("cores", "list the k-cores of a code");
    cores->add_option("--code", ca.code_path, "code JSON")->required();
    cores->add_option("--k", ca.k, "subset size")->required();
    cores->add_option("--max-subsets", ca.max_subsets, "enumeration budget");
    add_common(cores);
    cores->callback([&] { run_cores(ca, st); });

    // mrsc build
    auto* mrsc_cmd = app.add_subcommand("mrsc", "maximally recoverable subcodes");
    mrsc_cmd->require_subcommand(1);
    MrscBuildArgs ma;
    auto* mbuild = mrsc_cmd->add_subcommand("build", "construct a certified subcode");
    mbuild->add_option("--method", ma.method, "construction route")
        ->required()
        ->check(CLI::IsMember(
            {"random", "linearized", "striped", "sandwich-random", "sandwich-linearized"}));
    mbuild->add_option("--in", ma.in_path, "containing code JSON")->required();
    mbuild->add_option("--sub", ma.sub_path, "inner code JSON (sandwich methods)");
    mbuild->add_option("--k", ma.k, "target dimension")->required();
    mbuild->add_option("--seed", ma.seed, "random seed");
    mbuild->add_option("--out", ma.out_path, "output code JSON")->required();
    add_construct_flags(mbuild, ma.opts);
    add_common(mbuild);
    mbuild->callback([&] {
        ma.opts.threads = st.threads;
        run_mrsc_build(ma, st);
    });

    // p2p build / simulate
    auto* p2p_cmd = app.add_subcommand("p2p", "single-receiver update schemes");
    p2p_cmd->require_subcommand(1);
    P2PBuildArgs pa;
    auto* pbuild = p2p_cmd->add_subcommand("build", "derive an encoder for one receiver");
    pbuild->add_option("--A", pa.a_path, "content map JSON (full row rank)")->required();
    pbuild->add_option("--eps", pa.eps, "sparsity budget")->required();
    pbuild->add_option("--method", pa.method, "construction route")
        ->check(CLI::IsMember({"auto", "random", "linearized", "striped"}));
    pbuild->add_option("--seed", pa.seed, "random seed");
    pbuild->add_option("--out", pa.out_path, "output scheme JSON")->required();
    add_construct_flags(pbuild, pa.opts);
    add_common(pbuild);
    pbuild->callback([&] {
        pa.opts.threads = st.threads;
        run_p2p_build(pa, st);
    });

    SimulateArgs psim;
    auto* psimulate = p2p_cmd->add_subcommand("simulate", "exercise a scheme on random updates");
    psimulate->add_option("--scheme", psim.scheme_path, "scheme JSON")->required();
    psimulate->add_option("--trials", psim.trials, "number of random updates");
    psimulate->add_option("--seed", psim.seed, "random seed");
    add_common(psimulate);
    psimulate->callback([&] { run_p2p_simulate(psim, st); });

    // bcast theta / build / simulate
    auto* bcast_cmd = app.add_subcommand("bcast", "two-receiver update schemes");
    bcast_cmd->require_subcommand(1);
    ThetaArgs ta;
    auto* btheta = bcast_cmd->add_subcommand("theta", "overlap rank of the two side caches");
    btheta->add_option("--A", ta.a_path, "first content map JSON")->required();
    btheta->add_option("--B", ta.b_path, "second content map JSON")->required();
    btheta->add_option("--eps", ta.eps, "sparsity budget")->required();
    btheta->add_option("--max-subsets", ta.max_subsets, "enumeration budget");
    add_common(btheta);
    btheta->callback([&] { run_bcast_theta(ta, st); });

    BcastBuildArgs ba;
    auto* bbuild = bcast_cmd->add_subcommand("build", "derive one encoder both receivers share");
    bbuild->add_option("--A", ba.a_path, "first content map JSON")->required();
    bbuild->add_option("--B", ba.b_path, "second content map JSON")->required();
    bbuild->add_option("--eps", ba.eps, "sparsity budget")->required();
    bbuild->add_option("--seed", ba.seed, "random seed");
    bbuild->add_option("--out", ba.out_path, "output scheme JSON")->required();
    add_construct_flags(bbuild, ba.opts);
    add_common(bbuild);
    bbuild->callback([&] {
        ba.opts.threads = st.threads;
        run_bcast_build(ba, st);
    });

    SimulateArgs bsim;
    auto* bsimulate =
        bcast_cmd->add_subcommand("simulate", "exercise a scheme on random updates");
    bsimulate->add_option("--scheme", bsim.scheme_path, "scheme JSON")->required();
    bsimulate->add_option("--trials", bsim.trials, "number of random updates");
    bsimulate->add_option("--seed", bsim.seed, "random seed");
    add_common(bsimulate);
    bsimulate->callback([&] { run_bcast_simulate(bsim, st); });

    // scenario run
    auto* scen_cmd = app.add_subcommand("scenario", "packaged end-to-end runs");
    scen_cmd->require_subcommand(1);
    ScenarioArgs sa;
    auto* srun = scen_cmd->add_subcommand("run", "build, verify, and simulate one scenario");
    srun->add_option("--config", sa.config_path, "scenario config JSON")->required();
    add_common(srun);
    srun->callback([&] { run_scenario_cmd(sa, st); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const mrsc::ConstructionError& e) {
        std::cerr << "construction failed: " << e.what() << '\n';
        return 1;
    } catch (const mrsc::DecodeError& e) {
        std::cerr << "decode failed: " << e.what() << '\n';
        return 1;
    } catch (const mrsc::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return st.rc;
}
