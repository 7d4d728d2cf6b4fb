// qrab command-line tool: batch front end over the qrab C API.
//
// Subcommands: point, sweep, wigner, negativity, fock, classify.
// Sweeps write one CSV per scalar output plus a JSON manifest listing every
// emitted file with a content digest; re-running a config reproduces the
// outputs byte for byte.

#include <qrab/qrab.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// small utilities

std::string fmt(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

[[noreturn]] void die(const std::string& message) {
    throw std::runtime_error(message);
}

void check(qrab_status status, const std::string& context) {
    if (status != QRAB_OK) {
        die(context + ": " + qrab_last_error());
    }
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(value));
    return std::string(buf);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t pos = text.find(sep, start);
        const std::size_t end = pos == std::string::npos ? text.size() : pos;
        parts.push_back(text.substr(start, end - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

// RAII wrappers over the C handles.
struct ModelHandle {
    qrab_model* ptr = nullptr;
    ~ModelHandle() { qrab_model_free(ptr); }
};
struct SolutionHandle {
    qrab_solution* ptr = nullptr;
    ~SolutionHandle() { qrab_solution_free(ptr); }
};
struct EDHandle {
    qrab_ed* ptr = nullptr;
    ~EDHandle() { qrab_ed_free(ptr); }
};
struct WignerHandle {
    qrab_wigner* ptr = nullptr;
    ~WignerHandle() { qrab_wigner_free(ptr); }
};

double sol_get(const qrab_solution* s, qrab_solution_field f) {
    double v = 0.0;
    check(qrab_solution_get(s, f, &v), "solution field");
    return v;
}

double ed_get(const qrab_ed* e, qrab_ed_field f) {
    double v = 0.0;
    check(qrab_ed_get(e, f, &v), "ed field");
    return v;
}

double model_get(const qrab_model* m, qrab_model_field f) {
    double v = 0.0;
    check(qrab_model_get(m, f, &v), "model field");
    return v;
}

int parse_ansatz(const std::string& name) {
    if (name == "full4") return QRAB_ANSATZ_FULL4;
    if (name == "eq19") return QRAB_ANSATZ_EQ_DISP3;
    if (name == "eq15") return QRAB_ANSATZ_POLARON1;
    die("unknown ansatz '" + name + "' (expected full4|eq19|eq15)");
}

const std::map<std::string, qrab_wigner_component>& component_names() {
    static const std::map<std::string, qrab_wigner_component> names = {
        {"plus_x", QRAB_W_PLUS_X}, {"minus_x", QRAB_W_MINUS_X},
        {"total", QRAB_W_TOTAL},   {"even", QRAB_W_EVEN},
        {"odd", QRAB_W_ODD},       {"cross", QRAB_W_CROSS},
        {"alive", QRAB_W_ALIVE},   {"dead", QRAB_W_DEAD},
    };
    return names;
}

// ---------------------------------------------------------------------------
// one analyzed parameter point

struct PointRequest {
    double ratio = 1.0;
    double g_over_gc = 0.0;
    int ansatz = QRAB_ANSATZ_FULL4;
    bool with_ed = true;
    bool with_negativity = false;
    double entropy_scale = 1.0;  // 1/ln2 when reporting bits
    std::optional<std::array<double, 4>> warm_start;
};

struct PointResult {
    double ratio = 0.0, g_over_gc = 0.0, g_abs = 0.0;
    double energy = 0.0, energy_error = 0.0, ed_energy = 0.0;
    double alpha = 0.0, beta = 0.0, xi = 0.0;
    double d_alpha = 0.0, d_beta = 0.0, zeta_alpha = 0.0, zeta_beta = 0.0;
    double m = 0.0, delta_d = 0.0, p_up = 0.0, p_down = 0.0, entropy = 0.0;
    double ed_mean_photon = 0.0, ed_p_up = 0.0, ed_entropy = 0.0;
    int ed_n_max = 0;
    double neg_total = 0.0, neg_even = 0.0, neg_odd = 0.0;
    int region = 0;
    int evaluations = 0;
    bool stagnation = false;
    bool has_ed = false, has_negativity = false;
    std::string status = "ok";
};

PointResult solve_point(const PointRequest& req) {
    PointResult r;
    r.ratio = req.ratio;
    r.g_over_gc = req.g_over_gc;

    ModelHandle model;
    check(qrab_model_from_ratio(req.ratio, req.g_over_gc, &model.ptr), "model");
    r.g_abs = model_get(model.ptr, QRAB_MODEL_G);

    qrab_solve_options opts;
    qrab_solve_options_init(&opts);
    opts.ansatz = req.ansatz;
    opts.compute_ed_error = req.with_ed ? 1 : 0;
    if (req.warm_start) {
        opts.has_warm_start = 1;
        opts.warm_alpha = (*req.warm_start)[0];
        opts.warm_xi = (*req.warm_start)[1];
        opts.warm_zeta_alpha = (*req.warm_start)[2];
        opts.warm_zeta_beta = (*req.warm_start)[3];
    }
    SolutionHandle sol;
    check(qrab_solve_ground(model.ptr, &opts, &sol.ptr), "solve");

    r.energy = sol_get(sol.ptr, QRAB_SOL_ENERGY);
    r.alpha = sol_get(sol.ptr, QRAB_SOL_ALPHA);
    r.beta = sol_get(sol.ptr, QRAB_SOL_BETA);
    r.xi = sol_get(sol.ptr, QRAB_SOL_XI);
    r.d_alpha = sol_get(sol.ptr, QRAB_SOL_D_ALPHA);
    r.d_beta = sol_get(sol.ptr, QRAB_SOL_D_BETA);
    r.zeta_alpha = sol_get(sol.ptr, QRAB_SOL_ZETA_ALPHA);
    r.zeta_beta = sol_get(sol.ptr, QRAB_SOL_ZETA_BETA);
    r.m = sol_get(sol.ptr, QRAB_SOL_MEAN_PHOTON_M);
    r.delta_d = sol_get(sol.ptr, QRAB_SOL_DELTA_D);
    r.p_up = sol_get(sol.ptr, QRAB_SOL_P_UP);
    r.p_down = sol_get(sol.ptr, QRAB_SOL_P_DOWN);
    r.entropy = sol_get(sol.ptr, QRAB_SOL_ENTROPY) * req.entropy_scale;
    r.evaluations = static_cast<int>(sol_get(sol.ptr, QRAB_SOL_EVALUATIONS));
    r.stagnation = sol_get(sol.ptr, QRAB_SOL_STAGNATION) != 0.0;
    check(qrab_solution_region(sol.ptr, &r.region), "classify");
    if (req.with_ed) {
        r.has_ed = true;
        r.energy_error = sol_get(sol.ptr, QRAB_SOL_ENERGY_ERROR);
        EDHandle ed;
        check(qrab_ed_solve(model.ptr, 1e-10, &ed.ptr), "ed");
        r.ed_energy = ed_get(ed.ptr, QRAB_ED_ENERGY);
        r.ed_mean_photon = ed_get(ed.ptr, QRAB_ED_MEAN_PHOTON);
        r.ed_p_up = ed_get(ed.ptr, QRAB_ED_P_UP);
        r.ed_entropy = ed_get(ed.ptr, QRAB_ED_ENTROPY) * req.entropy_scale;
        r.ed_n_max = static_cast<int>(ed_get(ed.ptr, QRAB_ED_N_MAX));
    }
    if (req.with_negativity) {
        r.has_negativity = true;
        check(qrab_negativity(sol.ptr, QRAB_W_TOTAL, 0.0, &r.neg_total), "negativity");
        check(qrab_negativity(sol.ptr, QRAB_W_EVEN, 0.0, &r.neg_even), "negativity");
        check(qrab_negativity(sol.ptr, QRAB_W_ODD, 0.0, &r.neg_odd), "negativity");
    }
    if (r.stagnation) r.status = "warn:stagnation";
    return r;
}

json point_json(const PointResult& r, const std::string& entropy_base) {
    json j;
    j["schema"] = "qrab.point/1";
    j["version"] = qrab_version();
    j["model"] = {{"ratio", r.ratio},
                  {"g_over_gc", r.g_over_gc},
                  {"g", r.g_abs}};
    j["solution"] = {{"energy", r.energy},
                     {"alpha", r.alpha},
                     {"beta", r.beta},
                     {"xi", r.xi},
                     {"zeta_alpha", r.zeta_alpha},
                     {"zeta_beta", r.zeta_beta},
                     {"d_alpha", r.d_alpha},
                     {"d_beta", r.d_beta},
                     {"evaluations", r.evaluations},
                     {"status", r.status}};
    j["observables"] = {{"m", r.m},
                        {"delta_d", r.delta_d},
                        {"p_up", r.p_up},
                        {"p_down", r.p_down},
                        {"entropy", r.entropy},
                        {"entropy_base", entropy_base}};
    j["classification"] = {{"region", qrab_region_name(r.region)},
                           {"g_over_gc", r.g_over_gc},
                           {"xi", r.xi},
                           {"m", r.m}};
    if (r.has_ed) {
        j["ed"] = {{"energy", r.ed_energy},
                   {"mean_photon", r.ed_mean_photon},
                   {"p_up", r.ed_p_up},
                   {"entropy", r.ed_entropy},
                   {"n_max", r.ed_n_max}};
        j["observables"]["energy_error"] = r.energy_error;
    }
    if (r.has_negativity) {
        j["negativity"] = {{"total", r.neg_total},
                           {"even", r.neg_even},
                           {"odd", r.neg_odd}};
    }
    return j;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepConfig {
    std::vector<double> ratios;
    std::string grid_spec;           // "min:max:count"
    std::vector<double> g_over_gc;   // explicit grid wins if non-empty
    std::string ansatz = "full4";
    std::vector<std::string> outputs = {"energy", "error", "xi"};
    std::vector<std::string> wigner_points;  // "R:g_over_gc"
    std::string out_dir;
    int jobs = 1;
    std::string seed_policy = "multi-start";
    std::string entropy_base = "e";
    int fock_n_max = 64;
};

std::vector<double> resolve_grid(const SweepConfig& cfg) {
    if (!cfg.g_over_gc.empty()) return cfg.g_over_gc;
    const auto parts = split(cfg.grid_spec, ':');
    if (parts.size() != 3) die("--grid expects min:max:count");
    const double lo = std::stod(parts[0]);
    const double hi = std::stod(parts[1]);
    const int count = std::stoi(parts[2]);
    if (count < 1 || hi < lo) die("--grid expects min <= max and count >= 1");
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        grid[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    }
    return grid;
}

struct SweepOutputs {
    bool energy = false, error = false, xi = false, weights = false;
    bool displacements = false, m = false, p_up = false, entropy = false;
    bool negativity = false, fock = false, wigner_grids = false, classify = false;
};

SweepOutputs parse_outputs(const std::vector<std::string>& names) {
    SweepOutputs out;
    for (const std::string& name : names) {
        if (name == "energy") out.energy = true;
        else if (name == "error") out.error = true;
        else if (name == "xi") out.xi = true;
        else if (name == "weights") out.weights = true;
        else if (name == "displacements") out.displacements = true;
        else if (name == "m") out.m = true;
        else if (name == "p_up") out.p_up = true;
        else if (name == "entropy") out.entropy = true;
        else if (name == "negativity") out.negativity = true;
        else if (name == "fock") out.fock = true;
        else if (name == "wigner-grids") out.wigner_grids = true;
        else if (name == "classify") out.classify = true;
        else if (!name.empty()) die("unknown output '" + name + "'");
    }
    return out;
}

struct SweepTask {
    double ratio;
    double g_over_gc;
    std::size_t index;
};

class FileRegistry {
  public:
    explicit FileRegistry(fs::path dir) : dir_(std::move(dir)) {}

    void write(const std::string& name, const std::string& content) {
        const fs::path path = dir_ / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) die("cannot write " + path.string());
        out << content;
        out.close();
        json entry;
        entry["path"] = name;
        entry["bytes"] = content.size();
        entry["fnv1a64"] = hex64(fnv1a64(content));
        files_.push_back(std::move(entry));
    }

    json files() const { return files_; }

  private:
    fs::path dir_;
    json files_ = json::array();
};

std::string csv_escape_region(int region) { return qrab_region_name(region); }

void run_sweep(const SweepConfig& cfg) {
    if (cfg.ratios.empty()) die("sweep needs at least one --ratio");
    if (cfg.out_dir.empty()) die("sweep needs --out DIR");
    const std::vector<double> grid = resolve_grid(cfg);
    for (double g : grid) {
        if (g < 0.0) die("g/g_c grid values must be non-negative");
    }
    const SweepOutputs outputs = parse_outputs(cfg.outputs);
    const int ansatz = parse_ansatz(cfg.ansatz);
    const double entropy_scale =
        cfg.entropy_base == "2" ? 1.0 / std::numbers::ln2 : 1.0;
    const bool continuation = cfg.seed_policy == "continuation";
    if (!continuation && cfg.seed_policy != "multi-start") {
        die("unknown seed policy '" + cfg.seed_policy + "'");
    }

    fs::create_directories(cfg.out_dir);

    std::vector<SweepTask> tasks;
    for (double ratio : cfg.ratios) {
        for (double g : grid) {
            tasks.push_back({ratio, g, tasks.size()});
        }
    }
    std::vector<PointResult> results(tasks.size());

    auto run_task = [&](const SweepTask& task,
                        const std::optional<std::array<double, 4>>& warm) {
        PointRequest req;
        req.ratio = task.ratio;
        req.g_over_gc = task.g_over_gc;
        req.ansatz = ansatz;
        req.with_ed = outputs.error;
        req.with_negativity = outputs.negativity;
        req.entropy_scale = entropy_scale;
        req.warm_start = warm;
        try {
            results[task.index] = solve_point(req);
        } catch (const std::exception& e) {
            PointResult failed;
            failed.ratio = task.ratio;
            failed.g_over_gc = task.g_over_gc;
            failed.status = std::string("error:") + e.what();
            results[task.index] = failed;
        }
    };

    if (continuation) {
        // Sequential continuation per ratio, both sweep directions; the
        // lower-energy result wins per point. Ratios run in parallel.
        std::atomic<std::size_t> next_ratio{0};
        auto worker = [&] {
            while (true) {
                const std::size_t k = next_ratio.fetch_add(1);
                if (k >= cfg.ratios.size()) return;
                const std::size_t base = k * grid.size();
                std::optional<std::array<double, 4>> warm;
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    run_task(tasks[base + i], warm);
                    const PointResult& r = results[base + i];
                    if (r.status.rfind("error:", 0) != 0) {
                        warm = {{r.alpha, r.xi, r.zeta_alpha, r.zeta_beta}};
                    }
                }
                std::vector<PointResult> forward(
                    results.begin() + base, results.begin() + base + grid.size());
                warm.reset();
                for (std::size_t i = grid.size(); i-- > 0;) {
                    run_task(tasks[base + i], warm);
                    const PointResult& r = results[base + i];
                    if (r.status.rfind("error:", 0) != 0) {
                        warm = {{r.alpha, r.xi, r.zeta_alpha, r.zeta_beta}};
                    }
                }
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    const PointResult& fwd = forward[i];
                    PointResult& bwd = results[base + i];
                    const bool fwd_ok = fwd.status.rfind("error:", 0) != 0;
                    const bool bwd_ok = bwd.status.rfind("error:", 0) != 0;
                    if (fwd_ok && (!bwd_ok || fwd.energy < bwd.energy)) bwd = fwd;
                }
            }
        };
        const int n_threads =
            std::max(1, std::min<int>(cfg.jobs, cfg.ratios.size()));
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                run_task(tasks[i], std::nullopt);
            }
        };
        const int n_threads = std::max(1, std::min<int>(cfg.jobs, tasks.size()));
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // --- serialize (single writer, task order) ---
    FileRegistry registry(cfg.out_dir);
    auto scalar_csv = [&](const std::string& name, auto getter) {
        std::ostringstream csv;
        csv << "R,g_over_gc,g_abs,value,status\n";
        for (const PointResult& r : results) {
            csv << fmt(r.ratio) << ',' << fmt(r.g_over_gc) << ',' << fmt(r.g_abs)
                << ',' << getter(r) << ',' << r.status << '\n';
        }
        registry.write(name, csv.str());
    };
    auto num = [](double v) { return fmt(v); };

    if (outputs.energy) scalar_csv("energy.csv", [&](auto& r) { return num(r.energy); });
    if (outputs.error) scalar_csv("error.csv", [&](auto& r) { return num(r.energy_error); });
    if (outputs.xi) scalar_csv("xi.csv", [&](auto& r) { return num(r.xi); });
    if (outputs.weights) {
        scalar_csv("alpha.csv", [&](auto& r) { return num(r.alpha); });
        scalar_csv("beta.csv", [&](auto& r) { return num(r.beta); });
    }
    if (outputs.displacements) {
        scalar_csv("d_alpha.csv", [&](auto& r) { return num(r.d_alpha); });
        scalar_csv("d_beta.csv", [&](auto& r) { return num(r.d_beta); });
    }
    if (outputs.m) scalar_csv("m.csv", [&](auto& r) { return num(r.m); });
    if (outputs.p_up) scalar_csv("p_up.csv", [&](auto& r) { return num(r.p_up); });
    if (outputs.entropy) {
        scalar_csv("entropy.csv", [&](auto& r) { return num(r.entropy); });
    }
    if (outputs.negativity) {
        scalar_csv("negativity_total.csv", [&](auto& r) { return num(r.neg_total); });
        scalar_csv("negativity_even.csv", [&](auto& r) { return num(r.neg_even); });
        scalar_csv("negativity_odd.csv", [&](auto& r) { return num(r.neg_odd); });
    }
    if (outputs.classify) {
        scalar_csv("classify.csv", [&](auto& r) { return csv_escape_region(r.region); });
    }

    if (outputs.fock) {
        for (const PointResult& r : results) {
            if (r.status.rfind("error:", 0) == 0) continue;
            ModelHandle model;
            check(qrab_model_from_ratio(r.ratio, r.g_over_gc, &model.ptr), "model");
            qrab_solve_options opts;
            qrab_solve_options_init(&opts);
            opts.ansatz = ansatz;
            opts.compute_ed_error = 0;
            opts.has_warm_start = 1;
            opts.warm_alpha = r.alpha;
            opts.warm_xi = r.xi;
            opts.warm_zeta_alpha = r.zeta_alpha;
            opts.warm_zeta_beta = r.zeta_beta;
            SolutionHandle sol;
            check(qrab_solve_ground(model.ptr, &opts, &sol.ptr), "solve");
            std::vector<double> pops(cfg.fock_n_max + 1, 0.0);
            int warn = 0;
            check(qrab_solution_fock(sol.ptr, cfg.fock_n_max, pops.data(), &warn),
                  "fock");
            std::ostringstream csv;
            csv << "n,population,parity\n";
            for (int n = 0; n <= cfg.fock_n_max; ++n) {
                csv << n << ',' << fmt(pops[n]) << ',' << n % 2 << '\n';
            }
            registry.write("fock_R" + fmt(r.ratio) + "_g" + fmt(r.g_over_gc) + ".csv",
                           csv.str());
        }
    }

    for (const std::string& spec : cfg.wigner_points) {
        const auto parts = split(spec, ':');
        if (parts.size() != 2) die("wigner point expects R:g_over_gc");
        const double ratio = std::stod(parts[0]);
        const double g = std::stod(parts[1]);
        ModelHandle model;
        check(qrab_model_from_ratio(ratio, g, &model.ptr), "model");
        qrab_solve_options opts;
        qrab_solve_options_init(&opts);
        opts.ansatz = ansatz;
        opts.compute_ed_error = 0;
        SolutionHandle sol;
        check(qrab_solve_ground(model.ptr, &opts, &sol.ptr), "solve");
        qrab_phase_grid grid;
        check(qrab_default_grid(sol.ptr, 512, 512, &grid), "grid");
        WignerHandle wigner;
        check(qrab_wigner_eval(sol.ptr, &grid, &wigner.ptr), "wigner");
        const std::string name =
            "wigner_total_R" + fmt(ratio) + "_g" + fmt(g) + ".csv";
        const fs::path path = fs::path(cfg.out_dir) / name;
        check(qrab_wigner_write_csv(wigner.ptr, QRAB_W_TOTAL, path.c_str()),
              "wigner csv");
        std::ifstream in(path, std::ios::binary);
        std::ostringstream content;
        content << in.rdbuf();
        registry.write(name, content.str());
    }

    json manifest;
    manifest["schema"] = "qrab.sweep-manifest/1";
    manifest["version"] = qrab_version();
    manifest["config"] = {{"ratios", cfg.ratios},
                          {"g_over_gc", grid},
                          {"ansatz", cfg.ansatz},
                          {"outputs", cfg.outputs},
                          {"wigner_points", cfg.wigner_points},
                          {"seed_policy", cfg.seed_policy},
                          {"entropy_base", cfg.entropy_base},
                          {"jobs", cfg.jobs},
                          {"fock_n_max", cfg.fock_n_max}};
    json points = json::array();
    for (const PointResult& r : results) {
        points.push_back({{"R", r.ratio},
                          {"g_over_gc", r.g_over_gc},
                          {"status", r.status},
                          {"energy", r.energy},
                          {"evaluations", r.evaluations}});
    }
    manifest["points"] = std::move(points);
    manifest["files"] = registry.files();
    std::ofstream mani(fs::path(cfg.out_dir) / "manifest.json", std::ios::binary);
    if (!mani) die("cannot write manifest.json");
    mani << manifest.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"qrab — quantum Rabi ground-state solver and nonclassical-state "
                 "analyzer"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Key-value config file (flags take precedence)");
    app.set_version_flag("--version", std::string(qrab_version()));

    // ---- point ----
    auto* point = app.add_subcommand("point", "Solve and analyze a single point");
    double ratio = 1.0, g_over_gc = 0.0;
    std::string ansatz = "full4", entropy_base = "e", out_file;
    bool no_ed = false, with_negativity = false;
    point->add_option("-R,--ratio", ratio, "Frequency ratio R = Δ/ħω")->required();
    point->add_option("--g-over-gc", g_over_gc, "Coupling relative to g_c")
        ->required();
    point->add_option("--ansatz", ansatz, "full4|eq19|eq15");
    point->add_option("--entropy-base", entropy_base, "e|2");
    point->add_flag("--no-ed", no_ed, "Skip the exact-diagonalization benchmark");
    point->add_flag("--negativity", with_negativity, "Include Wigner negativities");
    point->add_option("--out", out_file, "Write the JSON record here (default stdout)");

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "Batch-solve a parameter grid");
    SweepConfig cfg;
    sweep->add_option("-R,--ratio", cfg.ratios, "Frequency ratio(s)")->required();
    sweep->add_option("--grid", cfg.grid_spec, "g/g_c grid as min:max:count");
    sweep->add_option("--g-over-gc", cfg.g_over_gc, "Explicit g/g_c list");
    sweep->add_option("--ansatz", cfg.ansatz, "full4|eq19|eq15");
    sweep->add_option("--outputs", cfg.outputs,
                      "energy,error,xi,weights,displacements,m,p_up,entropy,"
                      "negativity,fock,wigner-grids,classify")
        ->delimiter(',');
    sweep->add_option("--wigner-points", cfg.wigner_points,
                      "Wigner grid exports as R:g_over_gc")
        ->delimiter(',');
    sweep->add_option("--out", cfg.out_dir, "Output directory")->required();
    sweep->add_option("--jobs", cfg.jobs, "Worker threads");
    sweep->add_option("--seed-policy", cfg.seed_policy, "multi-start|continuation");
    sweep->add_option("--entropy-base", cfg.entropy_base, "e|2");
    sweep->add_option("--fock-n-max", cfg.fock_n_max, "Fock levels for fock output");

    // ---- wigner ----
    auto* wigner = app.add_subcommand("wigner", "Export Wigner phase-space grids");
    double w_ratio = 1.0, w_g = 0.0;
    int w_nx = 512, w_np = 512;
    std::vector<std::string> w_components = {"total"};
    std::string w_out = ".", w_ansatz = "full4";
    wigner->add_option("-R,--ratio", w_ratio)->required();
    wigner->add_option("--g-over-gc", w_g)->required();
    wigner->add_option("--nx", w_nx, "Grid points in x");
    wigner->add_option("--np", w_np, "Grid points in p");
    wigner->add_option("--components", w_components,
                       "plus_x,minus_x,total,even,odd,cross,alive,dead or 'all'")
        ->delimiter(',');
    wigner->add_option("--ansatz", w_ansatz, "full4|eq19|eq15");
    wigner->add_option("--out", w_out, "Output directory");

    // ---- negativity ----
    auto* neg = app.add_subcommand("negativity", "Wigner negativity of a point");
    double n_ratio = 1.0, n_g = 0.0, n_tol = 1e-4;
    std::vector<std::string> n_components = {"total", "even", "odd"};
    std::string n_ansatz = "full4";
    neg->add_option("-R,--ratio", n_ratio)->required();
    neg->add_option("--g-over-gc", n_g)->required();
    neg->add_option("--components", n_components)->delimiter(',');
    neg->add_option("--tol", n_tol, "Refinement tolerance");
    neg->add_option("--ansatz", n_ansatz, "full4|eq19|eq15");

    // ---- fock ----
    auto* fock = app.add_subcommand("fock", "Parity-resolved photon statistics");
    double f_ratio = 1.0, f_g = 0.0;
    int f_nmax = 64;
    std::string f_source = "both", f_out, f_ansatz = "full4";
    fock->add_option("-R,--ratio", f_ratio)->required();
    fock->add_option("--g-over-gc", f_g)->required();
    fock->add_option("--n-max", f_nmax, "Highest Fock level");
    fock->add_option("--source", f_source, "var|ed|both");
    fock->add_option("--ansatz", f_ansatz, "full4|eq19|eq15");
    fock->add_option("--out", f_out, "Write CSV here (default stdout)");

    // ---- classify ----
    auto* cls = app.add_subcommand("classify", "Nonclassical-state region of a point");
    double c_ratio = 1.0, c_g = 0.0;
    bool c_json = false;
    std::string c_ansatz = "full4";
    cls->add_option("-R,--ratio", c_ratio)->required();
    cls->add_option("--g-over-gc", c_g)->required();
    cls->add_option("--ansatz", c_ansatz, "full4|eq19|eq15");
    cls->add_flag("--json", c_json, "Emit the full annotated record");

    CLI11_PARSE(app, argc, argv);

    if (point->parsed()) {
        PointRequest req;
        req.ratio = ratio;
        req.g_over_gc = g_over_gc;
        req.ansatz = parse_ansatz(ansatz);
        req.with_ed = !no_ed;
        req.with_negativity = with_negativity;
        req.entropy_scale = entropy_base == "2" ? 1.0 / std::numbers::ln2 : 1.0;
        const PointResult r = solve_point(req);
        const json j = point_json(r, entropy_base);
        if (out_file.empty()) {
            std::cout << j.dump(2) << '\n';
        } else {
            std::ofstream out(out_file, std::ios::binary);
            if (!out) die("cannot write " + out_file);
            out << j.dump(2) << '\n';
        }
        return 0;
    }

    if (sweep->parsed()) {
        run_sweep(cfg);
        return 0;
    }

    if (wigner->parsed()) {
        ModelHandle model;
        check(qrab_model_from_ratio(w_ratio, w_g, &model.ptr), "model");
        qrab_solve_options opts;
        qrab_solve_options_init(&opts);
        opts.ansatz = parse_ansatz(w_ansatz);
        opts.compute_ed_error = 0;
        SolutionHandle sol;
        check(qrab_solve_ground(model.ptr, &opts, &sol.ptr), "solve");
        qrab_phase_grid grid;
        check(qrab_default_grid(sol.ptr, w_nx, w_np, &grid), "grid");
        WignerHandle field;
        check(qrab_wigner_eval(sol.ptr, &grid, &field.ptr), "wigner");
        std::vector<std::string> selected = w_components;
        if (selected.size() == 1 && selected[0] == "all") {
            selected.clear();
            for (const auto& [name, comp] : component_names()) selected.push_back(name);
        }
        fs::create_directories(w_out);
        for (const std::string& name : selected) {
            const auto it = component_names().find(name);
            if (it == component_names().end()) die("unknown component '" + name + "'");
            const fs::path path = fs::path(w_out) / ("wigner_" + name + "_R" +
                                                     fmt(w_ratio) + "_g" + fmt(w_g) +
                                                     ".csv");
            check(qrab_wigner_write_csv(field.ptr, it->second, path.c_str()),
                  "wigner csv");
            std::cout << path.string() << '\n';
        }
        return 0;
    }

    if (neg->parsed()) {
        ModelHandle model;
        check(qrab_model_from_ratio(n_ratio, n_g, &model.ptr), "model");
        qrab_solve_options opts;
        qrab_solve_options_init(&opts);
        opts.ansatz = parse_ansatz(n_ansatz);
        opts.compute_ed_error = 0;
        SolutionHandle sol;
        check(qrab_solve_ground(model.ptr, &opts, &sol.ptr), "solve");
        json j;
        j["schema"] = "qrab.negativity/1";
        j["model"] = {{"ratio", n_ratio}, {"g_over_gc", n_g}};
        for (const std::string& name : n_components) {
            const auto it = component_names().find(name);
            if (it == component_names().end()) die("unknown component '" + name + "'");
            double value = 0.0;
            check(qrab_negativity(sol.ptr, it->second, n_tol, &value), "negativity");
            j["negativity"][name] = value;
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    if (fock->parsed()) {
        ModelHandle model;
        check(qrab_model_from_ratio(f_ratio, f_g, &model.ptr), "model");
        std::ostringstream csv;
        csv << "n,population,parity,source\n";
        if (f_source == "var" || f_source == "both") {
            qrab_solve_options opts;
            qrab_solve_options_init(&opts);
            opts.ansatz = parse_ansatz(f_ansatz);
            opts.compute_ed_error = 0;
            SolutionHandle sol;
            check(qrab_solve_ground(model.ptr, &opts, &sol.ptr), "solve");
            std::vector<double> pops(f_nmax + 1, 0.0);
            int warn = 0;
            check(qrab_solution_fock(sol.ptr, f_nmax, pops.data(), &warn), "fock");
            for (int n = 0; n <= f_nmax; ++n) {
                csv << n << ',' << fmt(pops[n]) << ',' << n % 2 << ",var\n";
            }
            if (warn) std::cerr << "warning: variational Fock tail above 1e-6\n";
        }
        if (f_source == "ed" || f_source == "both") {
            EDHandle ed;
            check(qrab_ed_solve(model.ptr, 1e-10, &ed.ptr), "ed");
            std::vector<double> pops(f_nmax + 1, 0.0);
            check(qrab_ed_fock(ed.ptr, f_nmax, pops.data()), "ed fock");
            for (int n = 0; n <= f_nmax; ++n) {
                csv << n << ',' << fmt(pops[n]) << ',' << n % 2 << ",ed\n";
            }
        }
        if (f_source != "var" && f_source != "ed" && f_source != "both") {
            die("unknown source '" + f_source + "'");
        }
        if (f_out.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream out(f_out, std::ios::binary);
            if (!out) die("cannot write " + f_out);
            out << csv.str();
        }
        return 0;
    }

    if (cls->parsed()) {
        ModelHandle model;
        check(qrab_model_from_ratio(c_ratio, c_g, &model.ptr), "model");
        qrab_solve_options opts;
        qrab_solve_options_init(&opts);
        opts.ansatz = parse_ansatz(c_ansatz);
        opts.compute_ed_error = 0;
        SolutionHandle sol;
        check(qrab_solve_ground(model.ptr, &opts, &sol.ptr), "solve");
        int region = 0;
        check(qrab_solution_region(sol.ptr, &region), "classify");
        if (c_json) {
            json j;
            j["schema"] = "qrab.classify/1";
            j["region"] = qrab_region_name(region);
            j["g_over_gc"] = c_g;
            j["xi"] = sol_get(sol.ptr, QRAB_SOL_XI);
            j["m"] = sol_get(sol.ptr, QRAB_SOL_MEAN_PHOTON_M);
            j["note"] = "region thresholds on g/g_c at 0.5/1.0/1.5 are heuristic";
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << qrab_region_name(region) << '\n';
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
