#include "qmaps/experiment.hpp"

#include "qmaps/harness.hpp"
#include "qmaps/linalg.hpp"
#include "qmaps/thermo.hpp"
#include "qmaps/u1.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace qmaps {

namespace {

constexpr const char* kConventions =
    "log = natural; time: maps evaluated at U = exp(-i H t), default t = 1";

std::string header_block(const ExperimentConfig& cfg, const std::string& command) {
    std::ostringstream os;
    os << "# qmaps " << kVersion << " | command = " << command << "\n";
    os << "# conventions: " << kConventions << "\n";
    std::istringstream echo(cfg.echo());
    for (std::string line; std::getline(echo, line);) os << "# " << line << "\n";
    return os.str();
}

nlohmann::json config_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    std::istringstream echo(cfg.echo());
    for (std::string line; std::getline(echo, line);) {
        const auto eq = line.find(" = ");
        j[line.substr(0, eq)] = line.substr(eq + 3);
    }
    return j;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    out << content;
}

std::filesystem::path out_dir(const ExperimentConfig& cfg) {
    std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    return dir;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for '" + key + "': " + value);
    }
}

long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer value for '" + key + "': " + value);
    }
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<BlochVector> fibonacci_sphere(int count) {
    if (count < 1) throw std::invalid_argument("fibonacci_sphere: count must be >= 1");
    constexpr double kGoldenAngle = 2.399963229728653;  // pi (3 - sqrt 5)
    std::vector<BlochVector> pts;
    pts.reserve(count);
    for (int k = 0; k < count; ++k) {
        const double z = 1.0 - 2.0 * (k + 0.5) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = kGoldenAngle * k;
        pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return pts;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
    if (key == "construction") { construction = value; return; }
    if (key == "sweep_axis") { sweep_axis = value; return; }
    if (key == "out") { out = value; return; }
    if (key == "seed") { seed = static_cast<std::uint64_t>(parse_int(key, value)); return; }
    if (key == "trials") { trials = static_cast<int>(parse_int(key, value)); return; }
    if (key == "sweep_steps") { sweep_steps = static_cast<int>(parse_int(key, value)); return; }
    if (key == "steps") { steps = static_cast<int>(parse_int(key, value)); return; }
    if (key == "n_max") { n_max = static_cast<int>(parse_int(key, value)); return; }
    if (key == "cloud_samples") { cloud_samples = static_cast<int>(parse_int(key, value)); return; }
    if (key == "solve_gp") { solve_gp = parse_int(key, value) != 0; return; }

    static const std::map<std::string, double ExperimentConfig::*> kDoubles = {
        {"J", &ExperimentConfig::J},       {"h", &ExperimentConfig::h},
        {"h1", &ExperimentConfig::h1},     {"h2", &ExperimentConfig::h2},
        {"b1", &ExperimentConfig::b1},     {"b2", &ExperimentConfig::b2},
        {"b3", &ExperimentConfig::b3},     {"f1", &ExperimentConfig::f1},
        {"f2", &ExperimentConfig::f2},     {"f3", &ExperimentConfig::f3},
        {"rG", &ExperimentConfig::rG},     {"t", &ExperimentConfig::t},
        {"c31", &ExperimentConfig::c31},   {"c32", &ExperimentConfig::c32},
        {"c_asym", &ExperimentConfig::c_asym},
        {"phi0", &ExperimentConfig::phi0}, {"phi1", &ExperimentConfig::phi1},
        {"phi2", &ExperimentConfig::phi2}, {"alpha", &ExperimentConfig::alpha},
        {"theta", &ExperimentConfig::theta},
        {"sweep_min", &ExperimentConfig::sweep_min},
        {"sweep_max", &ExperimentConfig::sweep_max},
        {"a1", &ExperimentConfig::a1},     {"a2", &ExperimentConfig::a2},
        {"a3", &ExperimentConfig::a3},     {"epsilon", &ExperimentConfig::epsilon},
    };
    if (auto it = kDoubles.find(key); it != kDoubles.end()) {
        this->*(it->second) = parse_double(key, value);
        return;
    }
    // correlation matrix entries c11..c33
    if (key.size() == 3 && key[0] == 'c' && key[1] >= '1' && key[1] <= '3' &&
        key[2] >= '1' && key[2] <= '3') {
        c(key[1] - '1', key[2] - '1') = parse_double(key, value);
        return;
    }
    throw ConfigError("unknown config key '" + key + "'");
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    ExperimentConfig cfg;
    int lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

std::string ExperimentConfig::echo() const {
    std::map<std::string, std::string> kv;
    kv["construction"] = construction;
    kv["J"] = fmt_g17(J); kv["h"] = fmt_g17(h);
    kv["h1"] = fmt_g17(h1); kv["h2"] = fmt_g17(h2);
    kv["b1"] = fmt_g17(b1); kv["b2"] = fmt_g17(b2); kv["b3"] = fmt_g17(b3);
    kv["f1"] = fmt_g17(f1); kv["f2"] = fmt_g17(f2); kv["f3"] = fmt_g17(f3);
    kv["rG"] = fmt_g17(rG); kv["t"] = fmt_g17(t);
    kv["c31"] = fmt_g17(c31); kv["c32"] = fmt_g17(c32); kv["c_asym"] = fmt_g17(c_asym);
    if (!c.isZero(0.0)) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                kv["c" + std::to_string(i + 1) + std::to_string(j + 1)] = fmt_g17(c(i, j));
    }
    kv["phi0"] = fmt_g17(phi0); kv["phi1"] = fmt_g17(phi1); kv["phi2"] = fmt_g17(phi2);
    kv["alpha"] = fmt_g17(alpha); kv["theta"] = fmt_g17(theta);
    kv["solve_gp"] = solve_gp ? "1" : "0";
    kv["sweep_axis"] = sweep_axis;
    kv["sweep_min"] = fmt_g17(sweep_min); kv["sweep_max"] = fmt_g17(sweep_max);
    kv["sweep_steps"] = std::to_string(sweep_steps);
    kv["a1"] = fmt_g17(a1); kv["a2"] = fmt_g17(a2); kv["a3"] = fmt_g17(a3);
    kv["steps"] = std::to_string(steps);
    kv["epsilon"] = fmt_g17(epsilon);
    kv["n_max"] = std::to_string(n_max);
    kv["cloud_samples"] = std::to_string(cloud_samples);
    kv["seed"] = std::to_string(seed);
    kv["trials"] = std::to_string(trials);
    std::string out_str;
    for (const auto& [k, v] : kv) out_str += k + " = " + v + "\n";
    return out_str;
}

BuiltMap build_construction(const ExperimentConfig& cfg) {
    BuiltMap built;
    built.construction = cfg.construction;
    const BlochVector b{cfg.b1, cfg.b2, cfg.b3};

    if (cfg.construction == "pc") {
        built.map = phi_pc(cfg.J, cfg.h, cfg.b3, cfg.t);
    } else if (cfg.construction == "env_coherent") {
        built.map = phi_env_coherent(cfg.J, cfg.h, b, cfg.t);
    } else if (cfg.construction == "correlated") {
        built.map = phi_correlated(cfg.J, cfg.h, cfg.b3, cfg.c31, cfg.c32, cfg.c_asym, cfg.t);
    } else if (cfg.construction == "gp_finetuned") {
        const FineTunedGp ft = phi_gp_finetuned(cfg.J, cfg.h, b, cfg.rG, cfg.t);
        built.map = ft.map;
        built.has_correlations = true;
        built.correlations = ft.correlations;
    } else if (cfg.construction == "gp_3qubit") {
        ThreeQubitParams p{cfg.J, cfg.h, cfg.b3, cfg.f1, cfg.f2, cfg.f3};
        if (cfg.solve_gp) {
            const GpSolution sol = solve_gp_constraints(cfg.b3, cfg.rG);
            if (!sol.feasible)
                throw InfeasibleError("gp_3qubit constraints infeasible: " + sol.reason_str(),
                                      sol.reason);
            if (cfg.f1 * cfg.f1 + cfg.f2 * cfg.f2 + sol.f3 * sol.f3 > 1.0)
                throw InfeasibleError(
                    "gp_3qubit constraints infeasible: resource_norm_exceeded",
                    GpSolution::Reason::resource_norm_exceeded);
            p.j = sol.j;
            p.f3 = sol.f3;
            built.has_solution = true;
            built.solution = sol;
        }
        built.map = phi_gp_3qubit(p, cfg.t);
    } else if (cfg.construction == "appD") {
        built.map = phi_appD_general(cfg.phi0, cfg.phi1, cfg.phi2, cfg.alpha, cfg.theta, b);
    } else if (cfg.construction == "general2q") {
        built.map = phi_E_general(TwoQubitParams{cfg.J, cfg.h1, cfg.h2}, b, cfg.c, cfg.t);
    } else {
        throw ConfigError("unknown construction '" + cfg.construction +
                          "'; expected pc | env_coherent | correlated | gp_finetuned | "
                          "gp_3qubit | appD | general2q");
    }
    return built;
}

MapTrio build_trio(const ExperimentConfig& cfg) {
    const GpSolution sol = solve_gp_constraints(cfg.b3, cfg.rG);
    if (!sol.feasible)
        throw InfeasibleError("GP constraints infeasible: " + sol.reason_str(), sol.reason);
    if (sol.f3 * sol.f3 + cfg.f1 * cfg.f1 + cfg.f2 * cfg.f2 > 1.0)
        throw InfeasibleError("GP constraints infeasible: resource_norm_exceeded",
                              GpSolution::Reason::resource_norm_exceeded);
    MapTrio trio;
    trio.solution = sol;
    trio.gp = phi_gp_3qubit({sol.j, cfg.h, cfg.b3, cfg.f1, cfg.f2, sol.f3}, cfg.t);
    trio.pc = phi_gp_3qubit({sol.j, cfg.h, cfg.b3, 0.0, 0.0, sol.f3}, cfg.t);
    // same coherent resource with the f3 constraint dropped: energy preserving,
    // neither phase covariant nor Gibbs preserving
    trio.e = phi_gp_3qubit({sol.j, cfg.h, cfg.b3, cfg.f1, cfg.f2, 0.0}, cfg.t);
    return trio;
}

std::vector<std::filesystem::path> run_map(const ExperimentConfig& cfg) {
    const BuiltMap built = build_construction(cfg);
    const auto dir = out_dir(cfg);
    std::vector<std::filesystem::path> files;

    std::string csv = header_block(cfg, "map");
    csv += "# augmented affine map, rows (1,0) over (tau, T)\n";
    csv += built.map.to_csv();
    write_file(dir / "map.csv", csv);
    files.push_back(dir / "map.csv");

    nlohmann::json j;
    j["version"] = kVersion;
    j["conventions"] = kConventions;
    j["config"] = config_json(cfg);
    j["construction"] = built.construction;
    j["map"] = nlohmann::json::parse(built.map.to_json());
    const MapClassification cls = classify(built.map, cfg.rG, true);
    j["classification"] = nlohmann::json::parse(cls.to_json());
    try {
        const FixedPoint fp = fixed_point(built.map);
        j["fixed_point"] = {{"a", {fp.point.a1, fp.point.a2, fp.point.a3}},
                            {"physical", fp.physical}};
    } catch (const std::runtime_error&) {
        j["fixed_point"] = "singular";
    }
    j["choi_min_eigenvalue"] = min_eigenvalue(choi_matrix(built.map));
    if (built.has_correlations) {
        nlohmann::json cm = nlohmann::json::array();
        for (int r = 0; r < 3; ++r)
            cm.push_back({built.correlations(r, 0), built.correlations(r, 1),
                          built.correlations(r, 2)});
        j["correlations"] = cm;
    }
    if (built.has_solution)
        j["gp_solution"] = nlohmann::json::parse(built.solution.to_json());
    write_file(dir / "map.json", j.dump(2) + "\n");
    files.push_back(dir / "map.json");

    if (cfg.cloud_samples > 0) {
        std::string cloud = header_block(cfg, "map");
        cloud += "a1,a2,a3,a1_out,a2_out,a3_out\n";
        for (const BlochVector& a : fibonacci_sphere(cfg.cloud_samples)) {
            const BlochVector o = apply(built.map, a);
            cloud += fmt_g17(a.a1) + "," + fmt_g17(a.a2) + "," + fmt_g17(a.a3) + "," +
                     fmt_g17(o.a1) + "," + fmt_g17(o.a2) + "," + fmt_g17(o.a3) + "\n";
        }
        write_file(dir / "cloud.csv", cloud);
        files.push_back(dir / "cloud.csv");
    }
    return files;
}

std::vector<std::filesystem::path> run_sweep_deltaD(const ExperimentConfig& cfg) {
    if (cfg.sweep_axis != "a3")
        throw ConfigError("sweep-deltaD requires sweep_axis = a3");
    if (cfg.sweep_steps < 1) throw ConfigError("sweep_steps must be >= 1");
    const MapTrio trio = build_trio(cfg);  // throws before any file is written

    std::vector<double> grid;
    for (int k = 0; k < cfg.sweep_steps; ++k)
        grid.push_back(cfg.sweep_steps == 1
                           ? cfg.sweep_min
                           : cfg.sweep_min + (cfg.sweep_max - cfg.sweep_min) * k /
                                                 (cfg.sweep_steps - 1));
    // carry the exact Gibbs point so the inert-state row is present
    if (cfg.rG >= cfg.sweep_min && cfg.rG <= cfg.sweep_max) {
        const bool present = std::any_of(grid.begin(), grid.end(), [&](double g) {
            return std::abs(g - cfg.rG) < 1e-12;
        });
        if (!present) {
            grid.push_back(cfg.rG);
            std::sort(grid.begin(), grid.end());
        }
    }

    std::string csv = header_block(cfg, "sweep-deltaD");
    csv += "a3,deltaD_pc,deltaD_e,deltaD_gp,delta\n";
    for (double a3 : grid) {
        const BlochVector a0{0.0, 0.0, a3};
        const double dpc = delta_D(trio.pc, a0, cfg.rG);
        const double de = delta_D(trio.e, a0, cfg.rG);
        const double dgp = delta_D(trio.gp, a0, cfg.rG);
        csv += fmt_g17(a3) + "," + fmt_g17(dpc) + "," + fmt_g17(de) + "," + fmt_g17(dgp) +
               "," + fmt_g17(dgp - dpc) + "\n";
    }
    const auto dir = out_dir(cfg);
    write_file(dir / "sweep_deltaD.csv", csv);
    return {dir / "sweep_deltaD.csv"};
}

std::vector<std::filesystem::path> run_trajectories(const ExperimentConfig& cfg) {
    if (cfg.steps < 0) throw ConfigError("steps must be >= 0");
    const MapTrio trio = build_trio(cfg);
    const BlochVector a0{cfg.a1, cfg.a2, cfg.a3};

    const auto traj_pc = iterate(trio.pc, a0, cfg.steps);
    const auto traj_e = iterate(trio.e, a0, cfg.steps);
    const auto traj_gp = iterate(trio.gp, a0, cfg.steps);

    std::string csv = header_block(cfg, "trajectories");
    csv += "step,coherence_pc,coherence_e,coherence_gp,a3_pc,a3_e,a3_gp\n";
    for (int k = 0; k <= cfg.steps; ++k) {
        csv += std::to_string(k) + "," + fmt_g17(l1_coherence(traj_pc[k])) + "," +
               fmt_g17(l1_coherence(traj_e[k])) + "," + fmt_g17(l1_coherence(traj_gp[k])) +
               "," + fmt_g17(traj_pc[k].a3) + "," + fmt_g17(traj_e[k].a3) + "," +
               fmt_g17(traj_gp[k].a3) + "\n";
    }
    const auto dir = out_dir(cfg);
    write_file(dir / "trajectories.csv", csv);
    return {dir / "trajectories.csv"};
}

std::vector<std::filesystem::path> run_converge(const ExperimentConfig& cfg) {
    const MapTrio trio = build_trio(cfg);
    const BlochVector a0{cfg.a1, cfg.a2, cfg.a3};

    std::string csv = header_block(cfg, "converge");
    csv += "map,steps,converged\n";
    const std::pair<const char*, const AffineMap*> rows[] = {
        {"pc", &trio.pc}, {"e", &trio.e}, {"gp", &trio.gp}};
    for (const auto& [label, m] : rows) {
        const ConvergenceResult r = convergence_steps(*m, a0, cfg.epsilon, cfg.n_max);
        csv += std::string(label) + "," + std::to_string(r.steps) + "," +
               (r.converged ? "1" : "0") + "\n";
    }
    const auto dir = out_dir(cfg);
    write_file(dir / "converge.csv", csv);
    return {dir / "converge.csv"};
}

std::vector<std::string> known_claim_ids() {
    return {"charge_conservation", "no_coherence", "even_charge_pc", "hierarchy"};
}

std::vector<std::filesystem::path> run_verify(const ExperimentConfig& cfg,
                                              const std::string& claim_id) {
    const auto known = known_claim_ids();
    const bool all = claim_id == "all";
    if (!all && std::find(known.begin(), known.end(), claim_id) == known.end()) {
        std::string msg = "unknown claim id '" + claim_id + "'; available:";
        for (const auto& k : known) msg += " " + k;
        msg += " all";
        throw ConfigError(msg);
    }

    std::vector<VerificationReport> reports;
    auto trials_for = [&](int n) { return cfg.trials > 0 ? cfg.trials : default_trials(n); };
    if (all || claim_id == "charge_conservation") {
        reports.push_back(verify_charge_conservation(2, trials_for(2), cfg.seed));
        reports.push_back(verify_charge_conservation(3, trials_for(3), cfg.seed + 1));
    }
    if (all || claim_id == "no_coherence") {
        reports.push_back(verify_no_coherence_from_diagonal(2, trials_for(2), cfg.seed));
        reports.push_back(verify_no_coherence_from_diagonal(3, trials_for(3), cfg.seed + 1));
    }
    if (all || claim_id == "even_charge_pc")
        reports.push_back(verify_even_charge_correlations_stay_pc(trials_for(2), cfg.seed));
    if (all || claim_id == "hierarchy")
        reports.push_back(verify_hierarchy(cfg.trials > 0 ? cfg.trials : 200, cfg.seed));

    nlohmann::json head;
    head["qmaps_version"] = kVersion;
    head["conventions"] = kConventions;
    head["config"] = config_json(cfg);
    std::string lines = head.dump() + "\n";
    for (const auto& r : reports) lines += r.to_json() + "\n";
    const auto dir = out_dir(cfg);
    write_file(dir / "verify.jsonl", lines);
    return {dir / "verify.jsonl"};
}

std::vector<std::filesystem::path> run_solve_gp(const ExperimentConfig& cfg) {
    const GpSolution sol = solve_gp_constraints(cfg.b3, cfg.rG);
    nlohmann::json j;
    j["version"] = kVersion;
    j["conventions"] = kConventions;
    j["b3"] = cfg.b3;
    j["rG"] = cfg.rG;
    j["solution"] = nlohmann::json::parse(sol.to_json());
    const auto dir = out_dir(cfg);
    write_file(dir / "gp_solution.json", j.dump(2) + "\n");
    if (!sol.feasible)
        throw InfeasibleError("GP constraints infeasible: " + sol.reason_str(), sol.reason);
    return {dir / "gp_solution.json"};
}

}  // namespace qmaps
