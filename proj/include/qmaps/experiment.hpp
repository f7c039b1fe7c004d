// Experiment configuration and the file-producing commands behind the CLI.

#pragma once

#include "qmaps/affine.hpp"
#include "qmaps/constructions.hpp"
#include "qmaps/types.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmaps {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when Gibbs-preserving constraints cannot be met (CLI exit code 2).
struct InfeasibleError : std::runtime_error {
    InfeasibleError(const std::string& msg, GpSolution::Reason r)
        : std::runtime_error(msg), reason(r) {}
    GpSolution::Reason reason;
};

// Flat key=value experiment description; CLI flags override file values.
struct ExperimentConfig {
    std::string construction = "gp_3qubit";

    double J = 0.5;
    double h = 0.7853981633974483;  // pi/4
    double h1 = 0.0, h2 = 0.0;
    double b1 = 0.0, b2 = 0.0, b3 = 0.6;
    double f1 = 0.2, f2 = 0.1, f3 = -0.9;
    double rG = -0.15;
    double t = 1.0;
    double c31 = 0.0, c32 = 0.0, c_asym = 0.0;
    CorrelationMatrix c = CorrelationMatrix::Zero();
    double phi0 = 0.0, phi1 = 0.0, phi2 = 0.0, alpha = 0.0, theta = 0.0;
    bool solve_gp = true;  // derive (J, f3) from (b3, rG) for gp_3qubit

    std::string sweep_axis = "a3";
    double sweep_min = -1.0, sweep_max = 1.0;
    int sweep_steps = 41;

    double a1 = 0.0, a2 = 0.0, a3 = 1.0;  // initial state

    int steps = 10;          // trajectory length
    double epsilon = 1e-8;   // convergence threshold
    int n_max = 10000;
    int cloud_samples = 200;  // Fibonacci-sphere input cloud size (0 = off)

    std::string out = ".";
    std::uint64_t seed = 1;
    int trials = 0;  // 0 = per-claim default

    static ExperimentConfig from_file(const std::filesystem::path& path);
    void set(const std::string& key, const std::string& value);  // throws ConfigError
    std::string echo() const;  // sorted "key = value" lines
};

// Build the named construction from the config. For gp_finetuned the
// correlations are attached; for solved gp_3qubit the solution is attached.
struct BuiltMap {
    AffineMap map;
    std::string construction;
    bool has_correlations = false;
    CorrelationMatrix correlations = CorrelationMatrix::Zero();
    bool has_solution = false;
    GpSolution solution;
};

BuiltMap build_construction(const ExperimentConfig& cfg);

// The PC / E / GP trio on shared feasible parameters (J, f3 from the solver;
// PC: f1 = f2 = 0; E: same coherent resource with the f3 constraint dropped).
struct MapTrio {
    AffineMap pc, e, gp;
    GpSolution solution;
};
MapTrio build_trio(const ExperimentConfig& cfg);

// Commands; each returns the list of files written.
std::vector<std::filesystem::path> run_map(const ExperimentConfig& cfg);
std::vector<std::filesystem::path> run_sweep_deltaD(const ExperimentConfig& cfg);
std::vector<std::filesystem::path> run_trajectories(const ExperimentConfig& cfg);
std::vector<std::filesystem::path> run_converge(const ExperimentConfig& cfg);
std::vector<std::filesystem::path> run_verify(const ExperimentConfig& cfg,
                                              const std::string& claim_id);
std::vector<std::filesystem::path> run_solve_gp(const ExperimentConfig& cfg);

std::vector<std::string> known_claim_ids();

// Deterministic quasi-uniform unit sphere sample (spiral lattice).
std::vector<BlochVector> fibonacci_sphere(int count);

// 17-significant-digit, locale-independent float formatting for CSV output.
std::string fmt_g17(double x);

}  // namespace qmaps
