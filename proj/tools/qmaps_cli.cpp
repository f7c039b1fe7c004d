// Command-line front end: experiment configs in, CSV/JSON artifacts out.

#include "qmaps/experiment.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>

namespace {

struct Overrides {
    std::string config_path;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<double> J, h, b3, rG, f1, f2, t;
};

void add_common_flags(CLI::App* cmd, Overrides& o) {
    cmd->set_help_flag("--help", "print help");  // frees -h / --h for the field override
    cmd->add_option("--config", o.config_path, "experiment config file (key = value lines)");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--trials", o.trials, "trial count for verification campaigns");
    cmd->add_option("--J", o.J, "coupling strength");
    cmd->add_option("--h", o.h, "local field");
    cmd->add_option("--b3", o.b3, "environment z component");
    cmd->add_option("--rG", o.rG, "Gibbs-state z component");
    cmd->add_option("--f1", o.f1, "resource x component");
    cmd->add_option("--f2", o.f2, "resource y component");
    cmd->add_option("--t", o.t, "evolution time");
}

qmaps::ExperimentConfig make_config(const Overrides& o) {
    qmaps::ExperimentConfig cfg = o.config_path.empty()
                                      ? qmaps::ExperimentConfig{}
                                      : qmaps::ExperimentConfig::from_file(o.config_path);
    if (o.out) cfg.out = *o.out;
    if (o.seed) cfg.seed = *o.seed;
    if (o.trials) cfg.trials = *o.trials;
    if (o.J) cfg.J = *o.J;
    if (o.h) cfg.h = *o.h;
    if (o.b3) cfg.b3 = *o.b3;
    if (o.rG) cfg.rG = *o.rG;
    if (o.f1) cfg.f1 = *o.f1;
    if (o.f2) cfg.f2 = *o.f2;
    if (o.t) cfg.t = *o.t;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qmaps: U(1)-symmetric qubit dynamical maps and thermodynamic diagnostics"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    Overrides o;
    std::string claim = "all";
    std::string construction;

    CLI::App* cmd_map = app.add_subcommand(
        "map", "build a named construction; write the affine map and its classification");
    cmd_map->add_option("--construction", construction,
                        "pc | env_coherent | correlated | gp_finetuned | gp_3qubit | appD | "
                        "general2q");
    CLI::App* cmd_sweep = app.add_subcommand(
        "sweep-deltaD", "relative-entropy distance to the Gibbs state over initial a3");
    CLI::App* cmd_traj =
        app.add_subcommand("trajectories", "coherence trajectories for the PC/E/GP trio");
    CLI::App* cmd_conv =
        app.add_subcommand("converge", "convergence step counts for the PC/E/GP trio");
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "randomized verification campaigns (JSON lines)");
    cmd_verify->add_option("claim", claim,
                           "charge_conservation | no_coherence | even_charge_pc | hierarchy "
                           "| all");
    CLI::App* cmd_solve =
        app.add_subcommand("solve-gp", "three-qubit Gibbs-preserving constraint solver");

    for (CLI::App* cmd : {cmd_map, cmd_sweep, cmd_traj, cmd_conv, cmd_verify, cmd_solve})
        add_common_flags(cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;  // usage problems count as invalid config
    }

    try {
        qmaps::ExperimentConfig cfg = make_config(o);
        if (cmd_map->parsed() && !construction.empty()) cfg.construction = construction;

        std::vector<std::filesystem::path> files;
        if (cmd_map->parsed()) files = qmaps::run_map(cfg);
        else if (cmd_sweep->parsed()) files = qmaps::run_sweep_deltaD(cfg);
        else if (cmd_traj->parsed()) files = qmaps::run_trajectories(cfg);
        else if (cmd_conv->parsed()) files = qmaps::run_converge(cfg);
        else if (cmd_verify->parsed()) files = qmaps::run_verify(cfg, claim);
        else if (cmd_solve->parsed()) files = qmaps::run_solve_gp(cfg);

        for (const auto& f : files) std::printf("wrote %s\n", f.string().c_str());
        return 0;
    } catch (const qmaps::InfeasibleError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const qmaps::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
