#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tml/errors.hpp"
#include "tml/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"timelike minimal surfaces from rational Weierstrass data"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    double delta = -1;
    int grid = -1;
    std::string mode;
    app.add_option("--config", config_path, "job config (JSON)")->required();
    app.add_option("--out", out_dir, "output directory override");
    app.add_option("--delta", delta, "light-cone exclusion band override");
    app.add_option("--grid", grid, "grid resolution override");
    app.add_option("--mode", mode, "period check mode: strict|real")
        ->check(CLI::IsMember({"strict", "real"}));

    auto* solve = app.add_subcommand("solve", "run the period solver, write exact data");
    auto* check = app.add_subcommand("check", "period condition check");
    auto* eval = app.add_subcommand("eval", "evaluate the surface at one point");
    double x1 = 0, x4 = 0;
    eval->add_option("x1", x1, "x1 coordinate")->required();
    eval->add_option("x4", x4, "x4 coordinate")->required();
    auto* mesh = app.add_subcommand("mesh", "triangulate per domain component");
    auto* sing = app.add_subcommand("sing", "extract the singular set");
    auto* ends = app.add_subcommand("ends", "classify ends and tabulate asymptotics");
    auto* verify = app.add_subcommand("verify", "run the verification suite");

    CLI11_PARSE(app, argc, argv);

    try {
        tml::JobConfig cfg = tml::load_config(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (delta > 0) cfg.delta = delta;
        if (grid > 0) cfg.grid = grid;
        if (mode == "strict") cfg.mode = tml::PeriodMode::strict;
        if (mode == "real") cfg.mode = tml::PeriodMode::real_residue;
        if (cfg.grid < 2) throw tml::ConfigError("grid must be >= 2");

        if (solve->parsed()) return tml::cmd_solve(cfg);
        if (check->parsed()) return tml::cmd_check(cfg);
        if (eval->parsed()) return tml::cmd_eval(cfg, x1, x4);
        if (mesh->parsed()) return tml::cmd_mesh(cfg);
        if (sing->parsed()) return tml::cmd_sing(cfg);
        if (ends->parsed()) return tml::cmd_ends(cfg);
        if (verify->parsed()) return tml::cmd_verify(cfg);
    } catch (const tml::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const tml::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
