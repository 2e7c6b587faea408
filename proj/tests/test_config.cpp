#include "eigenbound/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "doctest.h"

using namespace eigenbound;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("config parsing: comments, blanks, duplicates, trimming") {
    const auto cfg = KeyValueConfig::parse_string(
        "# a full-line comment\n"
        "\n"
        "  n = 3   # trailing comment\n"
        "K=2.5\n"
        "method = shooting\n"
        "method = fd\n");  // later duplicate wins
    CHECK(cfg.has("n"));
    CHECK(cfg.has("K"));
    CHECK_FALSE(cfg.has("missing"));
    CHECK(cfg.get("n") == std::string("3"));
    CHECK(cfg.get("method") == std::string("fd"));
    CHECK_FALSE(cfg.get("missing").has_value());
    CHECK(cfg.entries().size() == 3);

    CHECK(KeyValueConfig::parse_string("").entries().empty());
}

TEST_CASE("config parsing rejects malformed lines") {
    CHECK_THROWS_AS(KeyValueConfig::parse_string("n = 2\njunk line\n"),
                    invalid_input);
    try {
        KeyValueConfig::parse_string("n = 2\njunk line\n");
    } catch (const invalid_input& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(KeyValueConfig::parse_string(" = 5\n"), invalid_input);
}

TEST_CASE("typed getters and their error paths") {
    const auto cfg = KeyValueConfig::parse_string(
        "grid = 512\n"
        "tol = 1e-9\n"
        "flag = yes\n"
        "off = no\n"
        "name = cap\n"
        "junk = 12abc\n"
        "fractional = 2.5\n"
        "list = 1.01,1.001\n");
    CHECK(cfg.get_int("grid", 0) == 512);
    CHECK(cfg.get_int("absent", 7) == 7);
    CHECK(cfg.get_real("tol", 0.0) == 1e-9);
    CHECK(cfg.get_real("absent", 0.5) == 0.5);
    CHECK(cfg.get_bool("flag", false));
    CHECK_FALSE(cfg.get_bool("off", true));
    CHECK(cfg.get_bool("absent", true));
    CHECK(cfg.get_string("name", "") == "cap");
    CHECK(cfg.get_string("absent", "zzz") == "zzz");

    const auto list = cfg.get_reals("list", {});
    REQUIRE(list.size() == 2);
    CHECK(list[0] == 1.01);
    CHECK(list[1] == 1.001);
    CHECK(cfg.get_reals("absent", {3.0}).size() == 1);

    CHECK_THROWS_AS(cfg.get_real("junk", 0.0), invalid_input);
    CHECK_THROWS_AS(cfg.get_int("fractional", 0), invalid_input);
    CHECK_THROWS_AS(cfg.get_int("junk", 0), invalid_input);
    CHECK_THROWS_AS(cfg.get_bool("name", false), invalid_input);
    CHECK_THROWS_AS(cfg.get_reals("junk", {}), invalid_input);
}

TEST_CASE("config set overrides parsed values") {
    auto cfg = KeyValueConfig::parse_string("grid = 256\n");
    cfg.set("grid", "1024");
    cfg.set("fresh", "1");
    CHECK(cfg.get_int("grid", 0) == 1024);
    CHECK(cfg.get_int("fresh", 0) == 1);
}

TEST_CASE("config file round trip") {
    const std::string path = "/tmp/eigenbound_test_config.cfg";
    {
        std::ofstream out(path);
        out << "model = cap\nn = 3\nK = 2\nR = 0.7\n";
    }
    const auto cfg = KeyValueConfig::parse_file(path);
    CHECK(cfg.get_string("model", "") == "cap");
    CHECK(cfg.get_int("n", 0) == 3);
    std::remove(path.c_str());

    CHECK_THROWS_AS(KeyValueConfig::parse_file("/tmp/definitely_missing.cfg"),
                    invalid_input);
}

TEST_CASE("model_from_config builds every kind") {
    const auto cap = model_from_config(KeyValueConfig::parse_string(
        "model = cap\nn = 3\nK = 2\nR = 0.7\n"));
    CHECK(cap.kind == ModelKind::spherical_cap);
    CHECK(cap.n == 3);
    CHECK(cap.k == 2.0);
    CHECK(cap.radius == 0.7);

    const auto ball = model_from_config(
        KeyValueConfig::parse_string("model = ball\nn = 4\nR = 2\n"));
    CHECK(ball.kind == ModelKind::euclidean_ball);
    CHECK(ball.n == 4);
    CHECK(ball.radius == 2.0);

    const auto seg = model_from_config(
        KeyValueConfig::parse_string("model = interval\nL = 3\n"));
    CHECK(seg.n == 1);
    CHECK(seg.radius == 1.5);  // R = L/2

    const auto warped = model_from_config(KeyValueConfig::parse_string(
        "model = warped\nn = 3\nR = 1\nwarp_form = sinh\nwarp_scale = 2\n"));
    CHECK(warped.kind == ModelKind::warped_ball);
    CHECK(warped.warp(0.5) == doctest::Approx(std::sinh(1.0) / 2.0));

    const auto poly = model_from_config(KeyValueConfig::parse_string(
        "model = warped\nn = 2\nR = 1\nwarp_form = polynomial\n"
        "warp_coefficients = 0.0,0.05\n"));
    CHECK(poly.warp(0.5) == doctest::Approx(0.5 + 0.05 * 0.125));

    // Defaults: warped without warp_form falls back to the identity warp.
    const auto flat = model_from_config(
        KeyValueConfig::parse_string("model = warped\nn = 2\nR = 1\n"));
    CHECK(flat.warp(0.25) == doctest::Approx(0.25));
}

TEST_CASE("model_from_config error paths") {
    CHECK_THROWS_AS(model_from_config(KeyValueConfig::parse_string("n = 2\n")),
                    invalid_input);
    CHECK_THROWS_AS(
        model_from_config(KeyValueConfig::parse_string("model = torus\n")),
        invalid_input);
    CHECK_THROWS_AS(model_from_config(KeyValueConfig::parse_string(
                        "model = warped\nwarp_form = cubic\n")),
                    invalid_input);
    // Factory validation propagates: R = 4 exceeds pi/sqrt(K) for K = 1.
    CHECK_THROWS_AS(model_from_config(KeyValueConfig::parse_string(
                        "model = cap\nn = 2\nK = 1\nR = 4.0\n")),
                    invalid_input);
}

TEST_CASE("solver_from_config") {
    const auto defaults =
        solver_from_config(KeyValueConfig::parse_string(""));
    CHECK(defaults.method == SolveMethod::shooting);
    CHECK(defaults.grid_points == 4096);
    CHECK(defaults.tolerance == 1e-10);
    CHECK_FALSE(defaults.pole_offset.has_value());

    const auto fd = solver_from_config(KeyValueConfig::parse_string(
        "method = fd\ngrid = 512\ntol = 1e-8\npole_offset = 1e-6\n"));
    CHECK(fd.method == SolveMethod::finite_difference);
    CHECK(fd.grid_points == 512);
    CHECK(fd.tolerance == 1e-8);
    CHECK(fd.pole_offset == 1e-6);

    const auto spelled = solver_from_config(
        KeyValueConfig::parse_string("method = finite_difference\n"));
    CHECK(spelled.method == SolveMethod::finite_difference);

    CHECK_THROWS_AS(
        solver_from_config(KeyValueConfig::parse_string("method = magic\n")),
        invalid_input);
    // validate() runs: a grid below the floor is rejected here, not later.
    CHECK_THROWS_AS(
        solver_from_config(KeyValueConfig::parse_string("grid = 32\n")),
        invalid_input);
}

TEST_CASE("verifier_from_config") {
    const auto defaults =
        verifier_from_config(KeyValueConfig::parse_string(""));
    CHECK(defaults.buckets == 64);
    REQUIRE(defaults.b_sequence.size() == 3);
    CHECK(defaults.b_sequence[0] == 1.01);
    CHECK_FALSE(defaults.force_hypotheses);
    CHECK_FALSE(defaults.forced_delta.has_value());

    const auto cfg = verifier_from_config(KeyValueConfig::parse_string(
        "buckets = 32\nb_sequence = 1.5,1.25\nforce_hypotheses = yes\n"
        "forced_delta = 0.2\ngrid = 512\n"));
    CHECK(cfg.buckets == 32);
    REQUIRE(cfg.b_sequence.size() == 2);
    CHECK(cfg.b_sequence[0] == 1.5);
    CHECK(cfg.force_hypotheses);
    CHECK(cfg.forced_delta == 0.2);
    CHECK(cfg.solver.grid_points == 512);

    CHECK_THROWS_AS(
        verifier_from_config(KeyValueConfig::parse_string("buckets = 4\n")),
        invalid_input);
    CHECK_THROWS_AS(verifier_from_config(
                        KeyValueConfig::parse_string("b_sequence = 0.9\n")),
                    invalid_input);
    CHECK_THROWS_AS(verifier_from_config(
                        KeyValueConfig::parse_string("forced_delta = 1.5\n")),
                    invalid_input);
}

TEST_CASE("sweep models: default cap family") {
    const auto models =
        sweep_models_from_config(KeyValueConfig::parse_string(""));
    REQUIRE(models.size() == 20);
    for (const auto& m : models) {
        CHECK(m.kind == ModelKind::spherical_cap);
        CHECK(m.n == 2);
        CHECK(m.k == 1.0);
    }
    // Radii fill (0.1, pi/2], last one exactly the hemisphere.
    CHECK(models.front().radius > 0.1);
    CHECK(models.back().radius == kPi / 2.0);
    for (std::size_t i = 1; i < models.size(); ++i)
        CHECK(models[i].radius > models[i - 1].radius);
}

TEST_CASE("sweep models: families, grids, explicit radii") {
    const auto grid = sweep_models_from_config(KeyValueConfig::parse_string(
        "sweep_n = 2,3\nsweep_k = 0.5,2\nsweep_r_count = 5\n"));
    CHECK(grid.size() == 2 * 2 * 5);
    // Hemisphere top radius tracks K: last radius of each block is
    // pi/(2 sqrt K).
    CHECK(grid[4].radius == doctest::Approx(kPi / (2.0 * std::sqrt(0.5))));
    CHECK(grid[9].radius == doctest::Approx(kPi / (2.0 * std::sqrt(2.0))));

    const auto listed = sweep_models_from_config(KeyValueConfig::parse_string(
        "sweep_radii = 0.3,0.6\nsweep_n = 3\n"));
    REQUIRE(listed.size() == 2);
    CHECK(listed[0].radius == 0.3);
    CHECK(listed[1].radius == 0.6);
    CHECK(listed[0].n == 3);

    const auto balls = sweep_models_from_config(KeyValueConfig::parse_string(
        "sweep_model = ball\nsweep_n = 2\nsweep_r_count = 4\n"
        "sweep_k = 7\n"));  // sweep_k is ignored for balls
    REQUIRE(balls.size() == 4);
    CHECK(balls.back().kind == ModelKind::euclidean_ball);
    CHECK(balls.back().radius == 1.0);
    CHECK(balls.back().k == 0.0);

    const auto capped = sweep_models_from_config(KeyValueConfig::parse_string(
        "sweep_r_min = 0.5\nsweep_r_max = 1.0\nsweep_r_count = 2\n"));
    REQUIRE(capped.size() == 2);
    CHECK(capped[0].radius == 0.75);
    CHECK(capped[1].radius == 1.0);
}

TEST_CASE("sweep models error paths") {
    CHECK_THROWS_AS(sweep_models_from_config(
                        KeyValueConfig::parse_string("sweep_model = plane\n")),
                    invalid_input);
    CHECK_THROWS_AS(sweep_models_from_config(
                        KeyValueConfig::parse_string("sweep_r_count = 0\n")),
                    invalid_input);
    CHECK_THROWS_AS(sweep_models_from_config(KeyValueConfig::parse_string(
                        "sweep_r_min = 2.0\nsweep_r_max = 1.0\n")),
                    invalid_input);
    CHECK_THROWS_AS(sweep_models_from_config(
                        KeyValueConfig::parse_string("sweep_n = 2.5\n")),
                    invalid_input);
}
