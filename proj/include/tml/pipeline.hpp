#pragma once

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "tml/analysis.hpp"
#include "tml/mesh.hpp"

namespace tml {

using json = nlohmann::ordered_json;

struct JobConfig {
    // Explicit data: all four functions given. Alternatively a solve
    // directive supplies g1/g2 plus per-factor pole lists and f1/f2 come out
    // of the period solver.
    std::optional<RationalFunction> g1, g2, f1, f2;
    bool solve = false;
    std::vector<Rational> poles1, poles2;

    Box domain;
    int grid = 100;
    double delta = 0.05;
    std::optional<double> base1, base2;
    bool auto_base = true;
    PeriodMode mode = PeriodMode::real_residue;
    std::string out_dir = "out";
    std::optional<Interval> a1, a2;  // compactness candidate intervals
};

JobConfig load_config(const std::string& path);       // throws ConfigError
JobConfig parse_config(const json& j);

// Exact serialization: {"num": [...], "den": [...]} with coefficients as
// "p/q" strings or ["p/q", "p/q"] re/im pairs. Round-trips bit-exactly.
json ratfunc_to_json(const RationalFunction& r);
RationalFunction ratfunc_from_json(const json& j);

struct SolveOutcome {
    WeierstrassPair w1;
    WeierstrassPair w2;
    json report;
};

// Period solver pipeline for both factors: nullspace, deterministic solution
// choice, weak-complete augmentation at ends with a_i = 0.
SolveOutcome run_solve(const JobConfig& cfg);

// Either the explicit (g, f) pairs or the solver output.
std::pair<WeierstrassPair, WeierstrassPair> resolve_data(const JobConfig& cfg);

SurfaceModel make_surface(const JobConfig& cfg, const WeierstrassPair& w1,
                          const WeierstrassPair& w2);

// Central-difference residuals of the conformal-type and wave identities at
// one point, step h.
struct FdResiduals {
    double conf = 0;   // |<Xu,Xu> + <Xv,Xv>| in (+,+,-) signature
    double mixed = 0;  // |<Xu,Xv>|
    double wave = 0;   // max_i |(X_uu - X_vv)_i|
};
FdResiduals fd_residuals(const SurfaceModel& m, double x1, double x4, double h);

int cmd_solve(const JobConfig& cfg);
int cmd_check(const JobConfig& cfg);
int cmd_eval(const JobConfig& cfg, double x1, double x4);
int cmd_mesh(const JobConfig& cfg);
int cmd_sing(const JobConfig& cfg);
int cmd_ends(const JobConfig& cfg);
int cmd_verify(const JobConfig& cfg);

} // namespace tml
