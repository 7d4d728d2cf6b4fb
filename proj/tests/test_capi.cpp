// The extern-C surface: handle lifecycle, field getters, error mapping,
// and the Wigner CSV export.

#include "doctest.h"

#include <qrab/qrab.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "qrab/grid_io.hpp"

TEST_CASE("version and error text") {
    CHECK(std::string(qrab_version()) == "1.0.0");
    CHECK(qrab_last_error() != nullptr);
}

TEST_CASE("model lifecycle and fields") {
    qrab_model* model = nullptr;
    REQUIRE(qrab_model_create(10.0, 1.0, &model) == QRAB_OK);
    double gc = 0.0, gp = 0.0;
    CHECK(qrab_model_get(model, QRAB_MODEL_G_C, &gc) == QRAB_OK);
    CHECK(gc == doctest::Approx(1.921609326467597).epsilon(1e-12));
    CHECK(qrab_model_get(model, QRAB_MODEL_G_PRIME, &gp) == QRAB_OK);
    CHECK(gp == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    qrab_model_free(model);

    qrab_model* ratio_model = nullptr;
    REQUIRE(qrab_model_from_ratio(10.0, 2.0, &ratio_model) == QRAB_OK);
    double g = 0.0;
    CHECK(qrab_model_get(ratio_model, QRAB_MODEL_G, &g) == QRAB_OK);
    CHECK(g == doctest::Approx(2.0 * gc).epsilon(1e-12));
    qrab_model_free(ratio_model);
}

TEST_CASE("error mapping") {
    qrab_model* model = nullptr;
    CHECK(qrab_model_create(-1.0, 0.0, &model) == QRAB_ERR_DOMAIN);
    CHECK(std::string(qrab_last_error()).find("delta") != std::string::npos);
    CHECK(qrab_model_create(1.0, 0.0, nullptr) == QRAB_ERR_DOMAIN);
    double out = 0.0;
    CHECK(qrab_model_get(nullptr, QRAB_MODEL_G, &out) == QRAB_ERR_DOMAIN);
}

TEST_CASE("solve, observables, classification, fock, wigner") {
    qrab_model* model = nullptr;
    REQUIRE(qrab_model_from_ratio(10.0, 2.0, &model) == QRAB_OK);

    qrab_solve_options opts;
    qrab_solve_options_init(&opts);
    CHECK(opts.compute_ed_error == 1);
    qrab_solution* sol = nullptr;
    REQUIRE(qrab_solve_ground(model, &opts, &sol) == QRAB_OK);

    double alpha = 0.0, beta = 0.0, err = 0.0, p_up = 0.0, entropy = 0.0;
    CHECK(qrab_solution_get(sol, QRAB_SOL_ALPHA, &alpha) == QRAB_OK);
    CHECK(qrab_solution_get(sol, QRAB_SOL_BETA, &beta) == QRAB_OK);
    CHECK(qrab_solution_get(sol, QRAB_SOL_ENERGY_ERROR, &err) == QRAB_OK);
    CHECK(qrab_solution_get(sol, QRAB_SOL_P_UP, &p_up) == QRAB_OK);
    CHECK(qrab_solution_get(sol, QRAB_SOL_ENTROPY, &entropy) == QRAB_OK);
    CHECK(std::abs(alpha - 0.996) <= 0.01);
    CHECK(std::abs(beta - 0.087) <= 0.01);
    CHECK(err < 5e-4);
    CHECK(p_up > 0.0);
    CHECK(entropy > 0.0);

    int region = -1;
    CHECK(qrab_solution_region(sol, &region) == QRAB_OK);
    CHECK(std::string(qrab_region_name(region)) == "CSWS");

    std::vector<double> pops(161, 0.0);
    int warn = -1;
    CHECK(qrab_solution_fock(sol, 160, pops.data(), &warn) == QRAB_OK);
    CHECK(warn == 0);
    double sum = 0.0;
    for (double v : pops) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));

    qrab_phase_grid grid;
    REQUIRE(qrab_default_grid(sol, 96, 96, &grid) == QRAB_OK);
    CHECK(grid.nx >= 96);
    qrab_wigner* wigner = nullptr;
    REQUIRE(qrab_wigner_eval(sol, &grid, &wigner) == QRAB_OK);
    std::vector<double> data(static_cast<std::size_t>(grid.nx) * grid.np);
    CHECK(qrab_wigner_data(wigner, QRAB_W_TOTAL, data.data()) == QRAB_OK);

    const auto path = std::filesystem::temp_directory_path() / "qrab_capi_grid.csv";
    CHECK(qrab_wigner_write_csv(wigner, QRAB_W_TOTAL, path.string().c_str()) ==
          QRAB_OK);
    const qrab::GridData readback = qrab::read_grid_csv(path);
    REQUIRE(readback.values.size() == data.size());
    for (std::size_t i = 0; i < data.size(); i += 37) {
        CHECK(readback.values[i] == data[i]);
    }
    std::filesystem::remove(path);

    double neg = -1.0;
    CHECK(qrab_negativity(sol, QRAB_W_EVEN, 1e-4, &neg) == QRAB_OK);
    CHECK(neg > 0.1);

    qrab_wigner_free(wigner);
    qrab_solution_free(sol);

    qrab_ed* ed = nullptr;
    REQUIRE(qrab_ed_solve(model, 1e-10, &ed) == QRAB_OK);
    double ed_energy = 0.0, mean_photon = 0.0;
    CHECK(qrab_ed_get(ed, QRAB_ED_ENERGY, &ed_energy) == QRAB_OK);
    CHECK(qrab_ed_get(ed, QRAB_ED_MEAN_PHOTON, &mean_photon) == QRAB_OK);
    CHECK(ed_energy < 0.0);
    CHECK(mean_photon > 10.0);
    std::vector<double> ed_pops(161, 0.0);
    CHECK(qrab_ed_fock(ed, 160, ed_pops.data()) == QRAB_OK);
    double ed_sum = 0.0;
    for (double v : ed_pops) ed_sum += v;
    CHECK(ed_sum == doctest::Approx(1.0).epsilon(1e-6));
    qrab_ed_free(ed);
    qrab_model_free(model);
}

TEST_CASE("ED-error fields require the ED pass") {
    qrab_model* model = nullptr;
    REQUIRE(qrab_model_from_ratio(5.0, 0.5, &model) == QRAB_OK);
    qrab_solve_options opts;
    qrab_solve_options_init(&opts);
    opts.compute_ed_error = 0;
    qrab_solution* sol = nullptr;
    REQUIRE(qrab_solve_ground(model, &opts, &sol) == QRAB_OK);
    double out = 0.0;
    CHECK(qrab_solution_get(sol, QRAB_SOL_ENERGY_ERROR, &out) == QRAB_ERR_CONFIG);
    qrab_solution_free(sol);
    qrab_model_free(model);
}
