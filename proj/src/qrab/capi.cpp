// capi.cpp — extern "C" surface over the C++ core.

#include "qrab/qrab.h"

#include <cstring>
#include <memory>
#include <string>

#include "qrab/errors.hpp"
#include "qrab/exact_diag.hpp"
#include "qrab/grid_io.hpp"
#include "qrab/model.hpp"
#include "qrab/observables.hpp"
#include "qrab/variational.hpp"
#include "qrab/wigner.hpp"

struct qrab_model {
    qrab::ModelParams params;
};

struct qrab_solution {
    qrab::GroundStateSolution solution;
};

struct qrab_ed {
    qrab::EDResult result;
    qrab::EDObservables observables;
};

struct qrab_wigner {
    qrab::WignerField field;
};

namespace {

thread_local std::string g_last_error;

qrab_status fail(qrab_status code, const char* what) {
    g_last_error = what != nullptr ? what : "";
    return code;
}

template <typename Fn>
qrab_status guarded(Fn&& fn) {
    try {
        fn();
        return QRAB_OK;
    } catch (const qrab::DomainError& e) {
        return fail(QRAB_ERR_DOMAIN, e.what());
    } catch (const qrab::ConfigError& e) {
        return fail(QRAB_ERR_CONFIG, e.what());
    } catch (const qrab::NumericError& e) {
        return fail(QRAB_ERR_NUMERIC, e.what());
    } catch (const qrab::ResourceError& e) {
        return fail(QRAB_ERR_RESOURCE, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(QRAB_ERR_RESOURCE, e.what());
    } catch (const std::exception& e) {
        return fail(QRAB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QRAB_ERR_INTERNAL, "unknown error");
    }
}

qrab::PhaseGrid to_core(const qrab_phase_grid& g) {
    return qrab::PhaseGrid{g.x_min, g.x_max, g.p_min, g.p_max, g.nx, g.np};
}

}  // namespace

extern "C" {

const char* qrab_version(void) { return "1.0.0"; }

const char* qrab_last_error(void) { return g_last_error.c_str(); }

qrab_status qrab_model_create(double delta, double g, qrab_model** out) {
    if (out == nullptr) return fail(QRAB_ERR_DOMAIN, "null output pointer");
    return guarded([&] {
        *out = new qrab_model{qrab::derive_scales(delta, g)};
    });
}

qrab_status qrab_model_from_ratio(double ratio, double g_over_gc,
                                  qrab_model** out) {
    if (out == nullptr) return fail(QRAB_ERR_DOMAIN, "null output pointer");
    return guarded([&] {
        *out = new qrab_model{qrab::model_from_ratio(ratio, g_over_gc)};
    });
}

qrab_status qrab_model_get(const qrab_model* model, qrab_model_field field,
                           double* out) {
    if (model == nullptr || out == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    const qrab::ModelParams& p = model->params;
    switch (field) {
        case QRAB_MODEL_DELTA: *out = p.delta; return QRAB_OK;
        case QRAB_MODEL_G: *out = p.g; return QRAB_OK;
        case QRAB_MODEL_RATIO: *out = p.ratio; return QRAB_OK;
        case QRAB_MODEL_G_PRIME: *out = p.g_prime; return QRAB_OK;
        case QRAB_MODEL_G_C0: *out = p.g_c0; return QRAB_OK;
        case QRAB_MODEL_G_C: *out = p.g_c; return QRAB_OK;
        case QRAB_MODEL_EPS0: *out = p.eps0; return QRAB_OK;
    }
    return fail(QRAB_ERR_DOMAIN, "unknown model field");
}

void qrab_model_free(qrab_model* model) { delete model; }

void qrab_solve_options_init(qrab_solve_options* options) {
    if (options == nullptr) return;
    std::memset(options, 0, sizeof(*options));
    options->ansatz = QRAB_ANSATZ_FULL4;
    options->compute_ed_error = 1;
    options->ed_tol = 1e-10;
}

qrab_status qrab_solve_ground(const qrab_model* model,
                              const qrab_solve_options* options,
                              qrab_solution** out) {
    if (model == nullptr || out == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    qrab_solve_options defaults;
    qrab_solve_options_init(&defaults);
    const qrab_solve_options& opt = options != nullptr ? *options : defaults;
    return guarded([&] {
        qrab::Ansatz ansatz;
        switch (opt.ansatz) {
            case QRAB_ANSATZ_FULL4: ansatz = qrab::Ansatz::Full4; break;
            case QRAB_ANSATZ_EQ_DISP3:
                ansatz = qrab::Ansatz::EqualDisplacement;
                break;
            case QRAB_ANSATZ_POLARON1: ansatz = qrab::Ansatz::SinglePolaron; break;
            default: throw qrab::DomainError("unknown ansatz");
        }
        qrab::SolveOptions core;
        core.compute_ed_error = opt.compute_ed_error != 0;
        if (opt.ed_tol > 0.0) core.ed_tol = opt.ed_tol;
        if (opt.has_warm_start != 0) {
            core.warm_start = {{opt.warm_alpha, opt.warm_xi, opt.warm_zeta_alpha,
                                opt.warm_zeta_beta}};
        }
        auto solution = std::make_unique<qrab_solution>();
        solution->solution = qrab::minimize_ground(model->params, ansatz, core);
        *out = solution.release();
    });
}

qrab_status qrab_solution_get(const qrab_solution* solution,
                              qrab_solution_field field, double* out) {
    if (solution == nullptr || out == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    const qrab::GroundStateSolution& s = solution->solution;
    const qrab::VariationalParams& vp = s.params;
    switch (field) {
        case QRAB_SOL_ENERGY: *out = s.energy; return QRAB_OK;
        case QRAB_SOL_ALPHA: *out = vp.alpha; return QRAB_OK;
        case QRAB_SOL_BETA: *out = vp.beta; return QRAB_OK;
        case QRAB_SOL_XI: *out = vp.xi; return QRAB_OK;
        case QRAB_SOL_ZETA_ALPHA: *out = vp.zeta_alpha; return QRAB_OK;
        case QRAB_SOL_ZETA_BETA: *out = vp.zeta_beta; return QRAB_OK;
        case QRAB_SOL_D_ALPHA: *out = vp.d_alpha; return QRAB_OK;
        case QRAB_SOL_D_BETA: *out = vp.d_beta; return QRAB_OK;
        case QRAB_SOL_GAMMA: *out = vp.gamma; return QRAB_OK;
        case QRAB_SOL_ENERGY_ERROR:
            if (!s.has_ed) return fail(QRAB_ERR_CONFIG, "solved without ED error");
            *out = s.energy_error;
            return QRAB_OK;
        case QRAB_SOL_ED_ENERGY:
            if (!s.has_ed) return fail(QRAB_ERR_CONFIG, "solved without ED error");
            *out = s.ed_energy;
            return QRAB_OK;
        case QRAB_SOL_MEAN_PHOTON_M: *out = qrab::mean_photon_m(vp); return QRAB_OK;
        case QRAB_SOL_DELTA_D: *out = qrab::displacement_gap(vp); return QRAB_OK;
        case QRAB_SOL_P_UP: *out = qrab::spin_probabilities(vp).p_up; return QRAB_OK;
        case QRAB_SOL_P_DOWN:
            *out = qrab::spin_probabilities(vp).p_down;
            return QRAB_OK;
        case QRAB_SOL_ENTROPY:
            *out = qrab::entanglement_entropy(qrab::spin_probabilities(vp).p_up);
            return QRAB_OK;
        case QRAB_SOL_EVALUATIONS:
            *out = static_cast<double>(s.trace.evaluations);
            return QRAB_OK;
        case QRAB_SOL_STAGNATION:
            *out = s.trace.stagnation_warning ? 1.0 : 0.0;
            return QRAB_OK;
    }
    return fail(QRAB_ERR_DOMAIN, "unknown solution field");
}

qrab_status qrab_solution_region(const qrab_solution* solution, int* out) {
    if (solution == nullptr || out == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    return guarded([&] {
        *out = static_cast<int>(
            qrab::classify(solution->solution.model, solution->solution).region);
    });
}

const char* qrab_region_name(int region) {
    switch (region) {
        case 0: return "VS";
        case 1: return "SVS";
        case 2: return "SCS";
        case 3: return "CSWS";
        default: return "?";
    }
}

qrab_status qrab_solution_fock(const qrab_solution* solution, int n_max,
                               double* populations, int* truncation_warning) {
    if (solution == nullptr || populations == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    return guarded([&] {
        const qrab::PhotonStatistics stats =
            qrab::photon_statistics(solution->solution, n_max);
        for (const qrab::FockBin& bin : stats.bins) {
            populations[bin.n] = bin.population;
        }
        if (truncation_warning != nullptr) {
            *truncation_warning = stats.truncation_warning ? 1 : 0;
        }
    });
}

void qrab_solution_free(qrab_solution* solution) { delete solution; }

qrab_status qrab_ed_solve(const qrab_model* model, double energy_tol,
                          qrab_ed** out) {
    if (model == nullptr || out == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    return guarded([&] {
        auto ed = std::make_unique<qrab_ed>();
        ed->result = qrab::solve_ground(model->params, energy_tol);
        ed->observables = qrab::ed_observables(ed->result, model->params);
        *out = ed.release();
    });
}

qrab_status qrab_ed_get(const qrab_ed* ed, qrab_ed_field field, double* out) {
    if (ed == nullptr || out == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    switch (field) {
        case QRAB_ED_ENERGY: *out = ed->result.energy; return QRAB_OK;
        case QRAB_ED_MEAN_PHOTON:
            *out = ed->observables.mean_photon;
            return QRAB_OK;
        case QRAB_ED_P_UP: *out = ed->observables.p_up; return QRAB_OK;
        case QRAB_ED_P_DOWN: *out = ed->observables.p_down; return QRAB_OK;
        case QRAB_ED_ENTROPY: *out = ed->observables.entropy; return QRAB_OK;
        case QRAB_ED_N_MAX:
            *out = static_cast<double>(ed->result.n_max);
            return QRAB_OK;
        case QRAB_ED_TAIL_MASS: *out = ed->result.tail_mass; return QRAB_OK;
    }
    return fail(QRAB_ERR_DOMAIN, "unknown ed field");
}

qrab_status qrab_ed_fock(const qrab_ed* ed, int n_max, double* populations) {
    if (ed == nullptr || populations == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    if (n_max < 0) return fail(QRAB_ERR_DOMAIN, "n_max must be >= 0");
    for (int n = 0; n <= n_max; ++n) {
        const auto idx = static_cast<std::size_t>(n);
        populations[n] = idx < ed->result.vector.size()
                             ? ed->result.vector[idx] * ed->result.vector[idx]
                             : 0.0;
    }
    return QRAB_OK;
}

void qrab_ed_free(qrab_ed* ed) { delete ed; }

qrab_status qrab_default_grid(const qrab_solution* solution, int nx, int np,
                              qrab_phase_grid* out) {
    if (solution == nullptr || out == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    return guarded([&] {
        const qrab::PhaseGrid g = qrab::default_grid(solution->solution, nx, np);
        *out = {g.x_min, g.x_max, g.p_min, g.p_max, g.nx, g.np};
    });
}

qrab_status qrab_wigner_eval(const qrab_solution* solution,
                             const qrab_phase_grid* grid, qrab_wigner** out) {
    if (solution == nullptr || grid == nullptr || out == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    return guarded([&] {
        auto wigner = std::make_unique<qrab_wigner>();
        wigner->field = qrab::analytic_field(solution->solution, to_core(*grid));
        *out = wigner.release();
    });
}

qrab_status qrab_wigner_data(const qrab_wigner* wigner,
                             qrab_wigner_component component, double* out) {
    if (wigner == nullptr || out == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    if (component < 0 || component >= qrab::kWignerComponents) {
        return fail(QRAB_ERR_DOMAIN, "unknown Wigner component");
    }
    const auto& data = wigner->field.data[static_cast<int>(component)];
    std::memcpy(out, data.data(), data.size() * sizeof(double));
    return QRAB_OK;
}

qrab_status qrab_wigner_write_csv(const qrab_wigner* wigner,
                                  qrab_wigner_component component,
                                  const char* path) {
    if (wigner == nullptr || path == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    if (component < 0 || component >= qrab::kWignerComponents) {
        return fail(QRAB_ERR_DOMAIN, "unknown Wigner component");
    }
    const qrab_status rc = guarded([&] {
        qrab::write_grid_csv(wigner->field.grid,
                             wigner->field.data[static_cast<int>(component)],
                             path);
    });
    return rc == QRAB_ERR_CONFIG ? QRAB_ERR_IO : rc;
}

void qrab_wigner_free(qrab_wigner* wigner) { delete wigner; }

qrab_status qrab_negativity(const qrab_solution* solution,
                            qrab_wigner_component component, double tol,
                            double* out) {
    if (solution == nullptr || out == nullptr) {
        return fail(QRAB_ERR_DOMAIN, "null argument");
    }
    if (component < 0 || component >= qrab::kWignerComponents) {
        return fail(QRAB_ERR_DOMAIN, "unknown Wigner component");
    }
    return guarded([&] {
        const qrab::AnalyticWigner terms =
            qrab::analytic_terms(solution->solution.params);
        const qrab::PhaseGrid grid =
            qrab::default_grid(solution->solution, 257, 257);
        *out = qrab::negativity_refined(
            terms, static_cast<qrab::WignerComponent>(component), grid,
            tol > 0.0 ? tol : 1e-4);
    });
}

}  // extern "C"
