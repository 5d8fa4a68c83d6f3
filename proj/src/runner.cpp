#include "hrte/runner.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "hrte/checkpoint.hpp"
#include "hrte/errors.hpp"
#include "hrte/experiments.hpp"
#include "hrte/norms.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace hrte {
namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<StPair>& pairs,
              bool append) {
        os_.open(path, append ? std::ios::app : std::ios::trunc);
        if (!os_) throw ConfigError("cannot open " + path + " for writing");
        if (!append) {
            os_ << "step,t,mass,energy,modified_energy,h_s_norm,h1_of_I,"
                   "morawetz,morawetz_stderr";
            for (const auto& p : pairs) os_ << "," << p.column_name();
            os_ << "\n";
        }
    }

    void marker(const std::string& text) { os_ << "# " << text << "\n"; }

    void row(const DiagnosticsRecord& rec) {
        os_ << rec.step << "," << fmt_double(rec.t) << ","
            << fmt_double(rec.mass) << "," << fmt_double(rec.energy) << ","
            << fmt_double(rec.modified_energy) << ","
            << fmt_double(rec.h_s_norm) << "," << fmt_double(rec.h1_of_I)
            << ","
            << (rec.morawetz ? fmt_double(*rec.morawetz) : std::string("nan"))
            << ","
            << (rec.morawetz_stderr ? fmt_double(*rec.morawetz_stderr)
                                    : std::string("nan"));
        for (double a : rec.st_accum) os_ << "," << fmt_double(a);
        os_ << "\n";
    }

    void flush() { os_.flush(); }

private:
    std::ofstream os_;
};

void write_failed_marker(const fs::path& dir, const std::string& reason) {
    std::ofstream os(dir / "FAILED");
    os << reason << "\n";
}

DiagnosticsEngine make_engine(const RunConfig& rc, const SimConfig& sim,
                              bool oracle) {
    DiagnosticsEngine::Options opt;
    opt.mu = sim.mu;
    opt.s = sim.s;
    opt.ispec = MultiplierSpec(sim.N, sim.s);
    opt.pairs = rc.pairs;
    if (rc.morawetz_budget > 0)
        opt.morawetz_sampler = PairSampler(rc.morawetz_seed, rc.morawetz_budget);
    opt.morawetz_exact = oracle;
    if (oracle && sim.grid.size() > 4096)
        throw ConfigError(
            "--oracle: exhaustive Morawetz sums need M^n <= 4096");
    return DiagnosticsEngine(opt);
}

CheckpointData checkpoint_of(const SimConfig& sim, double t,
                             const ComplexField& state) {
    CheckpointData d;
    d.version = kCheckpointVersion;
    d.n = sim.grid.n;
    d.M = sim.grid.M;
    d.L = sim.grid.L;
    d.t = t;
    d.dt = sim.dt;
    d.s = sim.s;
    d.N = sim.N;
    d.mu = sim.mu;
    d.values = state.values;
    return d;
}

struct SingleRunResult {
    Trajectory traj;
    json summary;
};

// One evolution with CSV/checkpoint side effects under dir.
SingleRunResult run_single(const RunConfig& rc, const SimConfig& sim,
                           const ComplexField& phi0, const fs::path& dir,
                           bool oracle, double t_offset = 0.0,
                           bool append_csv = false) {
    fs::create_directories(dir);
    DiagnosticsEngine engine = make_engine(rc, sim, oracle);
    CsvWriter csv((dir / "diagnostics.csv").string(), rc.pairs, append_csv);
    if (append_csv)
        csv.marker("resume t=" + fmt_double(t_offset));

    const long step_offset = std::lround(t_offset / sim.dt);
    long sample_count = 0;
    std::vector<SampleObserver> observers;
    observers.push_back([&](const DiagnosticsRecord& rec,
                            const ComplexField& state) {
        DiagnosticsRecord shifted = rec;
        shifted.step += step_offset;
        shifted.t += t_offset;
        if (append_csv && rec.step == 0) return; // state already logged
        csv.row(shifted);
        if (rc.checkpoint_every > 0 && sample_count % rc.checkpoint_every == 0) {
            char name[64];
            std::snprintf(name, sizeof(name), "checkpoint_%08ld.hrte",
                          shifted.step);
            save_checkpoint((dir / name).string(),
                            checkpoint_of(sim, shifted.t, state));
        }
        ++sample_count;
    });

    SingleRunResult out;
    try {
        out.traj = evolve(sim, phi0, engine, observers);
    } catch (const IntegratorBreakdown& e) {
        csv.flush();
        write_failed_marker(dir, e.what());
        throw;
    }
    save_checkpoint((dir / "final.hrte").string(),
                    checkpoint_of(sim, t_offset + out.traj.final_time,
                                  out.traj.final_state));

    const auto& recs = out.traj.records;
    json sm;
    sm["samples"] = recs.size();
    sm["final_time"] = t_offset + out.traj.final_time;
    if (!recs.empty()) {
        const double m0 = recs.front().mass;
        double mass_drift = 0, energy_drift = 0, mod_drift = 0;
        for (const auto& r : recs) {
            mass_drift = std::max(mass_drift, std::abs(r.mass - m0));
            energy_drift = std::max(energy_drift,
                                    std::abs(r.energy - recs.front().energy));
            mod_drift = std::max(
                mod_drift,
                std::abs(r.modified_energy - recs.front().modified_energy));
        }
        sm["mass"] = m0;
        sm["mass_drift_rel"] = m0 > 0 ? mass_drift / m0 : mass_drift;
        sm["energy_initial"] = recs.front().energy;
        sm["energy_drift_abs"] = energy_drift;
        sm["modified_energy_drift_abs"] = mod_drift;
    }
    out.summary = std::move(sm);
    return out;
}

json base_summary(const RunConfig& rc) {
    json sm;
    sm["config"] = rc.raw;
    sm["config_hash"] = rc.config_hash();
    sm["seed"] = rc.sim.seed;
    return sm;
}

void write_summary(const fs::path& dir, const json& sm) {
    std::ofstream os(dir / "summary.json");
    os << sm.dump(2) << "\n";
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn) {
    const int workers =
        std::min<int>(worker_threads(), static_cast<int>(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// ---- mode drivers ----------------------------------------------------------

void do_run(const RunConfig& rc, const fs::path& outdir, bool oracle) {
    const ComplexField phi0 =
        make_initial_data(rc.sim.grid, rc.data, rc.sim.seed);
    SingleRunResult res = run_single(rc, rc.sim, phi0, outdir, oracle);
    json sm = base_summary(rc);
    sm["mode"] = "run";
    sm["run"] = res.summary;
    write_summary(outdir, sm);
}

void do_sweep_N(const RunConfig& rc, const fs::path& outdir, bool oracle) {
    const ComplexField phi0 =
        make_initial_data(rc.sim.grid, rc.data, rc.sim.seed);

    std::vector<json> run_summaries(rc.N_list.size());
    std::vector<DriftRow> rows(rc.N_list.size());
    parallel_for(rc.N_list.size(), [&](std::size_t i) {
        const double N = rc.N_list[i];
        SimConfig sim = rc.sim;
        sim.N = N;
        std::ostringstream sub;
        sub << "N_" << N;
        SingleRunResult res =
            run_single(rc, sim, phi0, outdir / sub.str(), oracle);
        rows[i].N = N;
        rows[i].sup_drift = res.summary["modified_energy_drift_abs"];
        rows[i].sup_energy_drift = res.summary["energy_drift_abs"];
        run_summaries[i] = std::move(res.summary);
    });

    std::vector<double> logN, logD;
    json table = json::array();
    for (const auto& row : rows) {
        logN.push_back(std::log(row.N));
        logD.push_back(std::log(std::max(row.sup_drift, 1e-300)));
        table.push_back({{"N", row.N},
                         {"sup_modified_energy_drift", row.sup_drift},
                         {"sup_energy_drift", row.sup_energy_drift}});
    }
    const LineFit fit = fit_line(logN, logD);

    json sm = base_summary(rc);
    sm["mode"] = "sweep_N";
    sm["drift_table"] = table;
    sm["fitted_slope"] = fit.slope;
    sm["fitted_intercept"] = fit.intercept;
    sm["fit_r_squared"] = fit.r_squared;
    sm["runs"] = run_summaries;
    write_summary(outdir, sm);
}

void do_convergence(const RunConfig& rc, const fs::path& outdir, bool oracle) {
    const ComplexField phi0 =
        make_initial_data(rc.sim.grid, rc.data, rc.sim.seed);

    std::vector<json> run_summaries(rc.dt_list.size());
    std::vector<double> drifts(rc.dt_list.size());
    parallel_for(rc.dt_list.size(), [&](std::size_t i) {
        SimConfig sim = rc.sim;
        sim.dt = rc.dt_list[i];
        // sample at (approximately) the same physical times for every dt
        const double stride = rc.sim.dt * rc.sim.sample_every;
        sim.sample_every = std::max(1L, std::lround(stride / sim.dt));
        std::ostringstream sub;
        sub << "dt_" << rc.dt_list[i];
        SingleRunResult res =
            run_single(rc, sim, phi0, outdir / sub.str(), oracle);
        drifts[i] = res.summary["energy_drift_abs"];
        run_summaries[i] = std::move(res.summary);
    });

    json table = json::array();
    for (std::size_t i = 0; i < rc.dt_list.size(); ++i) {
        json row = {{"dt", rc.dt_list[i]}, {"sup_energy_drift", drifts[i]}};
        if (i + 1 < rc.dt_list.size() && drifts[i + 1] > 0)
            row["ratio_to_next"] = drifts[i] / drifts[i + 1];
        table.push_back(row);
    }
    json sm = base_summary(rc);
    sm["mode"] = "convergence";
    sm["drift_table"] = table;
    sm["runs"] = run_summaries;
    write_summary(outdir, sm);
}

void do_inequality_batch(const RunConfig& rc, const fs::path& outdir,
                         bool oracle) {
    RunConfig rcb = rc;
    // make sure the norms the bound needs are tracked
    auto ensure_pair = [&](const StPair& p) {
        for (const auto& q : rcb.pairs)
            if (q.target == p.target && q.q == p.q && q.r == p.r) return;
        rcb.pairs.push_back(p);
    };
    const int n = rc.sim.grid.n;
    switch (rc.bound) {
        case BoundKind::l4_3d:
            ensure_pair(StPair{StTarget::phi, 4.0, 4.0});
            break;
        case BoundKind::admissible_pair:
            ensure_pair(morawetz_pair(n, StTarget::phi));
            break;
        case BoundKind::I_version:
            ensure_pair(morawetz_pair(n, StTarget::iphi));
            ensure_pair(morawetz_pair(n, StTarget::bessel_iphi));
            break;
    }

    std::vector<json> run_summaries(rc.batch_runs);
    std::vector<double> constants(rc.batch_runs, 0.0);
    std::vector<double> error_surrogates(rc.batch_runs, 0.0);
    parallel_for(static_cast<std::size_t>(rc.batch_runs), [&](std::size_t i) {
        SimConfig sim = rcb.sim;
        sim.seed = rcb.sim.seed + i;
        InitialDataParams data = rcb.data;
        if (!rcb.amplitude_scale_list.empty()) {
            const double sc =
                rcb.amplitude_scale_list[i % rcb.amplitude_scale_list.size()];
            data.amplitude *= sc;
            data.target_norm *= sc;
        }
        const ComplexField phi0 = make_initial_data(sim.grid, data, sim.seed);
        std::ostringstream sub;
        sub << "run_" << i;
        RunConfig rci = rcb;
        rci.sim = sim;
        SingleRunResult res = run_single(rci, sim, phi0, outdir / sub.str(),
                                         oracle);
        const FittedConstant fc =
            check_morawetz_bound(res.traj, n, rcb.bound);
        if (fc.valid) {
            constants[i] = fc.C;
            res.summary["C"] = fc.C;
        } else {
            constants[i] = std::numeric_limits<double>::quiet_NaN();
            res.summary["C"] = nullptr;
            res.summary["flagged"] = "RHS vanished";
        }
        res.summary["lhs"] = fc.lhs;
        res.summary["rhs"] = fc.rhs;
        if (rcb.bound == BoundKind::I_version) {
            // Z_I from the tracked <grad> I phi pair; surrogate N^{-1} Z_I^6
            const StPair zp = morawetz_pair(n, StTarget::bessel_iphi);
            const double z =
                spacetime_norm(res.traj, zp.q, zp.r, StTarget::bessel_iphi);
            error_surrogates[i] = std::pow(z, 6.0) / sim.N;
            res.summary["z_i"] = z;
            res.summary["error_surrogate"] = error_surrogates[i];
        }
        run_summaries[i] = std::move(res.summary);
    });

    double cmax = 0;
    for (double c : constants)
        if (!std::isnan(c)) cmax = std::max(cmax, c);
    json sm = base_summary(rc);
    sm["mode"] = "inequality_batch";
    sm["bound"] = rc.bound == BoundKind::l4_3d ? "l4_3d"
                  : rc.bound == BoundKind::admissible_pair ? "admissible_pair"
                                                           : "I_version";
    sm["constants"] = constants;
    sm["max_constant"] = cmax;
    if (rc.bound == BoundKind::I_version)
        sm["error_surrogates"] = error_surrogates;
    sm["runs"] = run_summaries;
    write_summary(outdir, sm);
}

void do_scaling_check(const RunConfig& rc, const fs::path& outdir,
                      bool oracle) {
    const double lambda = rc.lambda;
    SimConfig base = rc.sim;
    base.keep_state_every = 1; // states at every sample for the comparison

    const ComplexField phi0 = make_initial_data(base.grid, rc.data, base.seed);
    SingleRunResult base_res =
        run_single(rc, base, phi0, outdir / "base", oracle);

    SimConfig scaled = base;
    scaled.grid = GridSpec(base.grid.n,
                           static_cast<int>(std::lround(base.grid.M * lambda)),
                           base.grid.L * lambda);
    scaled.dt = base.dt * lambda * lambda;
    scaled.T = base.T * lambda * lambda;
    const ComplexField phi0_scaled = scale_field(phi0, lambda);
    SingleRunResult scaled_res =
        run_single(rc, scaled, phi0_scaled, outdir / "scaled", oracle);

    // matched physical times: base sample at t <-> scaled sample at lambda^2 t
    double max_rel = 0;
    json comparisons = json::array();
    const auto& bc = base_res.traj.checkpoints;
    const auto& sc = scaled_res.traj.checkpoints;
    const std::size_t count = std::min(bc.size(), sc.size());
    for (std::size_t i = 0; i < count; ++i) {
        const ComplexField mapped = scale_field(bc[i].second, lambda);
        const double ref = l2_norm(sc[i].second);
        const double rel =
            ref > 0 ? l2_distance(mapped, sc[i].second) / ref : 0.0;
        max_rel = std::max(max_rel, rel);
        comparisons.push_back({{"t_base", bc[i].first},
                               {"t_scaled", sc[i].first},
                               {"rel_l2_discrepancy", rel}});
    }

    json sm = base_summary(rc);
    sm["mode"] = "scaling_check";
    sm["lambda"] = lambda;
    sm["max_rel_discrepancy"] = max_rel;
    sm["comparisons"] = comparisons;
    sm["lambda_of_N"] = scaling_lambda(rc.sim.s, rc.sim.N);
    try {
        const double alpha = growth_exponent_alpha(rc.sim.s, rc.sim.grid.n);
        sm["alpha"] = alpha;
        sm["predicted_growth_T_alpha"] = std::pow(rc.sim.T, alpha);
    } catch (const std::exception& e) {
        sm["alpha_error"] = e.what();
    }
    double hs_sup = 0;
    for (const auto& r : base_res.traj.records)
        hs_sup = std::max(hs_sup, r.h_s_norm);
    sm["measured_sup_hs"] = hs_sup;
    sm["base"] = base_res.summary;
    sm["scaled"] = scaled_res.summary;
    write_summary(outdir, sm);
}

} // namespace

int worker_threads() {
    const char* env = std::getenv("HRTE_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

int cli_run(const std::string& config_path, const CliOverrides& ov) {
    fs::path outdir;
    try {
        RunConfig rc = parse_run_config(config_path);
        if (ov.output_dir) rc.output_dir = *ov.output_dir;
        if (ov.seed) rc.sim.seed = *ov.seed;
        outdir = rc.output_dir;
        fs::create_directories(outdir);

        switch (rc.mode) {
            case RunMode::run: do_run(rc, outdir, ov.oracle); break;
            case RunMode::sweep_N: do_sweep_N(rc, outdir, ov.oracle); break;
            case RunMode::convergence: do_convergence(rc, outdir, ov.oracle); break;
            case RunMode::inequality_batch:
                do_inequality_batch(rc, outdir, ov.oracle);
                break;
            case RunMode::scaling_check:
                do_scaling_check(rc, outdir, ov.oracle);
                break;
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IntegratorBreakdown& e) {
        std::cerr << e.what() << "\n";
        if (!outdir.empty()) write_failed_marker(outdir, e.what());
        return kExitBreakdown;
    }
}

int cli_resume(const std::string& checkpoint_path, double extra_T,
               const std::optional<std::string>& config_path,
               const CliOverrides& ov) {
    fs::path outdir;
    try {
        const CheckpointData ck = load_checkpoint(checkpoint_path);

        RunConfig rc;
        if (config_path) {
            rc = parse_run_config(*config_path);
            if (!(rc.sim.grid == ck.grid()))
                throw ConfigError(
                    "resume: config grid does not match checkpoint grid");
        } else {
            rc.sim.grid = ck.grid();
            rc.sim.sample_every = 1;
        }
        rc.sim.dt = ck.dt;
        rc.sim.s = ck.s;
        rc.sim.N = ck.N;
        rc.sim.mu = ck.mu;
        rc.sim.T = extra_T;
        if (ov.output_dir) rc.output_dir = *ov.output_dir;
        outdir = rc.output_dir;
        fs::create_directories(outdir);

        ComplexField state(ck.grid());
        state.values = ck.values;
        const bool append = fs::exists(outdir / "diagnostics.csv");
        SingleRunResult res = run_single(rc, rc.sim, state, outdir, ov.oracle,
                                         ck.t, append);
        json sm = base_summary(rc);
        sm["mode"] = "resume";
        sm["resumed_from"] = checkpoint_path;
        sm["resume_t"] = ck.t;
        sm["run"] = res.summary;
        write_summary(outdir, sm);
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IntegratorBreakdown& e) {
        std::cerr << e.what() << "\n";
        if (!outdir.empty()) write_failed_marker(outdir, e.what());
        return kExitBreakdown;
    }
}

int cli_validate(const std::string& config_path) {
    try {
        parse_run_config(config_path);
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
}

} // namespace hrte
