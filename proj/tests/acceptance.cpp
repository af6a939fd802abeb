// Acceptance suite: exercises every end-to-end requirement once, prints one
// PASS/FAIL line per criterion, and exits with the number of failures.
// argv[1] must be the CLI binary (used by the determinism criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "agiven/cli.hpp"
#include "agiven/config.hpp"
#include "agiven/domain.hpp"
#include "agiven/foci.hpp"
#include "agiven/mana.hpp"
#include "agiven/optimizer.hpp"
#include "agiven/simulator.hpp"

using namespace agiven;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

MobilityProfile table_mobility(double psi) {
    MobilityProfile m;
    m.vehicle_arrival_rate = 1.2;
    m.erlang_shape = 5;
    m.erlang_rate = 0.2;
    m.route_dist = make_geometric_route({psi});
    return m;
}

ManaConfig table_mana(int c_m, double r_hm, double rsu = 10e9) {
    ManaConfig c;
    c.map_size = 5e9;
    c.cache_slots = c_m;
    c.hap_rate = r_hm;
    c.rsu_rate = rsu;
    c.delay_target = 1.0;
    return c;
}

FociConfig table_foci(int c_p, double r_hp, double rsu = 1e9) {
    FociConfig c;
    c.file_size = 1e9;
    c.cache_slots = c_p;
    c.hap_rate = r_hp;
    c.rsu_rate = rsu;
    c.expire_rate = 1e-3;  // places the saturate knee near 1.1 Mbps
    c.request_rate = 4.0;
    c.popularity = foci::zipf(1000, 0.56);
    c.delay_target = 5.0;
    return c;
}

std::string fmt(double v, int prec = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    return buf;
}

// --- 1. analytic accomplishment ratio vs simulation on the 3x5 grid --------
void criterion_1() {
    auto t0 = Clock::now();
    auto mob = table_mobility(0.9);
    bool ok = true;
    std::string worst;
    double worst_gap = -1.0;
    for (int c_m : {3, 5, 10}) {
        for (double r_hm : {10e6, 20e6, 30e6, 40e6, 50e6}) {
            auto cfg = table_mana(c_m, r_hm);
            double want = mana::accomplishment_ratio(cfg, mob);
            sim::SimControl ctl{1001, 0.1, 100000, false};
            auto rep = sim::simulate_mana(cfg, mob, ctl);
            double tol = std::max(0.01, 3.0 * rep.p_acc_std_error);
            double gap = std::fabs(rep.empirical_p_acc - want);
            if (gap > worst_gap) {
                worst_gap = gap;
                worst = "C_m=" + std::to_string(c_m) + " R_HM=" + fmt(r_hm / 1e6) +
                        "Mbps analytic=" + fmt(want) + " empirical=" + fmt(rep.empirical_p_acc) +
                        " tol=" + fmt(tol);
            }
            if (gap > tol) ok = false;
        }
    }
    double dt = seconds_since(t0);
    if (dt > 120.0) ok = false;
    report("criterion 1 (accomplishment ratio, formula vs simulation, 15 points)", ok,
           "worst point: " + worst + "; runtime " + fmt(dt, 3) + "s (limit 120s)");
}

// --- 2. queue delay validation at utilizations 0.3/0.6/0.8 -----------------
void criterion_2() {
    auto t0 = Clock::now();
    auto mob = table_mobility(0.9);
    bool ok = true;
    std::string detail;
    for (double util : {0.3, 0.6, 0.8}) {
        ManaConfig cfg = table_mana(10, 20e6, 1.0);
        double mean_bits = mana::mean_service_time(cfg, mob) * cfg.rsu_rate;
        cfg.rsu_rate = mob.vehicle_arrival_rate * mean_bits / util;
        double want = mana::mg1_delay(cfg, mob);
        uint64_t n = util >= 0.75 ? 1000000 : 400000;
        auto rep = sim::simulate_mana(cfg, mob, {2002, 0.1, n, false});
        double rel = std::fabs(rep.empirical_mean_delay_all - want) / want;
        detail += "mg1 u=" + fmt(util, 2) + " rel=" + fmt(rel, 2) + " ";
        if (rel > 0.05) ok = false;
    }
    for (double load : {0.3, 0.6, 0.8}) {
        FociConfig cfg = table_foci(100, 2e6, 1.0);
        double rho = cfg.expire_rate * cfg.file_size / cfg.hap_rate;
        double thinned =
            cfg.request_rate * (1.0 - foci::hit_ratio(cfg.popularity, rho, cfg.cache_slots));
        cfg.rsu_rate = thinned * cfg.file_size / load;
        auto fa = foci::analyze(cfg);
        auto rep = sim::simulate_foci(cfg, {2003, 0.1, 1200000, false});
        double rel = std::fabs(rep.empirical_mean_delay - fa.mean_delay) / fa.mean_delay;
        detail += "md1 load=" + fmt(load, 2) + " rel=" + fmt(rel, 2) + " ";
        if (rel > 0.03) ok = false;
    }
    double dt = seconds_since(t0);
    report("criterion 2 (M/G/1 within 5%, M/D/1 within 3%)", ok,
           detail + "runtime " + fmt(dt, 3) + "s");
}

// --- 3. rate inversion exactness -------------------------------------------
void criterion_3() {
    bool ok = true;
    std::string detail;
    for (double z : {0.01, 0.1, 1.0, 10.0, 100.0}) {
        double t_m = 1.0, map = 5e9;
        double lam = z / t_m;
        double r = mana::min_rsu_rate_mana(0.0, lam, t_m, map);
        double rel_m = std::fabs(mana::md1_delay_for(lam, map, r) - t_m) / t_m;
        double t_p = 5.0, file = 1e9;
        double lamp = z / t_p;
        double rp = foci::min_rsu_rate_foci(0.0, lamp, t_p, file);
        double rel_p = std::fabs(foci::foci_delay(lamp, file, rp) - t_p) / t_p;
        if (rel_m > 1e-9 || rel_p > 1e-9) {
            ok = false;
            detail += "z=" + fmt(z) + " rel=(" + fmt(rel_m, 2) + "," + fmt(rel_p, 2) + ") ";
        }
    }
    report("criterion 3 (delay target reproduced to 1e-9 after rate inversion)", ok,
           ok ? "all z in {0.01,0.1,1,10,100} for both slices" : detail);
}

// --- 4. proposition suite ---------------------------------------------------
void criterion_4() {
    auto mob = table_mobility(0.9);

    // (a) curvature flip of the upper-bound ratio vs the saddle formula.
    bool ok_a = true;
    std::string det_a;
    for (int c_m : {1, 5, 10}) {  // K C_m in {5, 25, 50}
        auto cfg = table_mana(c_m, 20e6);
        double r_star = mana::saddle_hap_rate(cfg, mob);
        double h = 1e-3 * r_star;
        auto upper = [&](double r) {
            ManaConfig c = cfg;
            c.hap_rate = r;
            return mana::accomplishment_bounds(c, mob).upper;
        };
        auto d2 = [&](double r) { return upper(r + h) - 2.0 * upper(r) + upper(r - h); };
        // Locate the sign change by bisection on [r*/2, 2 r*].
        double lo = r_star * 0.5, hi = r_star * 2.0;
        if (d2(lo) <= 0.0 || d2(hi) >= 0.0) {
            ok_a = false;
            det_a += "KC_m=" + std::to_string(5 * c_m) + " no bracket; ";
            continue;
        }
        for (int i = 0; i < 60; ++i) {
            double mid = 0.5 * (lo + hi);
            (d2(mid) > 0.0 ? lo : hi) = mid;
        }
        double flip = 0.5 * (lo + hi);
        double steps_away = std::fabs(flip - r_star) / h;
        int s = mob.erlang_shape * c_m;
        double alt = cfg.map_size * mob.erlang_rate / (s + 1.0);
        det_a += "KC_m=" + std::to_string(s) + ": flip at " + fmt(flip / 1e6) +
                 " Mbps = " + fmt(steps_away, 3) + " steps from formula " +
                 fmt(r_star / 1e6) + " Mbps (vs " + fmt(std::fabs(flip - alt) / h, 3) +
                 " steps from L*mu/(KC_m+1)=" + fmt(alt / 1e6) + "); ";
        if (steps_away > 1.0) ok_a = false;
    }
    report("criterion 4a (curvature flip within one 1e-3*R* step of the saddle formula)", ok_a,
           det_a);

    // (b) mean service time non-decreasing in x over a 100-point grid.
    bool ok_b = true;
    double prev = -1.0;
    for (int i = 1; i <= 100; ++i) {
        double x = 2.5 * i;
        ManaConfig cfg = table_mana(10, mob.erlang_rate * 5e9 / x);
        double h = mana::mean_service_time(cfg, mob);
        if (h < prev - 1e-12) ok_b = false;
        prev = h;
    }
    report("criterion 4b (service time non-decreasing in x, 100 points)", ok_b,
           "x in [2.5, 250]");

    // (c) delay-constrained rate convex increasing in z on (0, 100].
    bool ok_c = true;
    double dz = 0.1, prev_rate = mana::min_rsu_rate_mana(0.0, dz, 1.0, 5e9), last_diff = 0.0;
    for (double z = 2 * dz; z <= 100.0; z += dz) {
        double cur = mana::min_rsu_rate_mana(0.0, z, 1.0, 5e9);
        double diff = cur - prev_rate;
        if (diff <= 0.0 || diff < last_diff * (1.0 - 1e-9)) ok_c = false;
        last_diff = diff;
        prev_rate = cur;
    }
    report("criterion 4c (rate has positive first and second differences in z)", ok_c,
           "z in (0, 100], step 0.1");

    // (d) hit ratio monotone in cache size and update ratio.
    bool ok_d = true;
    auto pop = foci::zipf(1000, 0.56);
    for (double rho : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        double p = -1.0;
        for (int c = 0; c <= 50; ++c) {
            double h = foci::hit_ratio(pop, rho, c);
            if (h < p - 1e-13) ok_d = false;
            p = h;
        }
    }
    for (int c : {1, 10, 50}) {
        double p = 2.0;
        for (double rho = 0.1; rho <= 10.0; rho += 0.1) {
            double h = foci::hit_ratio(pop, rho, c);
            if (h > p + 1e-12) ok_d = false;
            p = h;
        }
    }
    report("criterion 4d (hit ratio monotone in C_p and in rho)", ok_d,
           "C_p in 0..50, rho in [0.1, 10]");
}

// --- 5. chain occupancy against the closed-form steady state ---------------
void criterion_5() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (double rho : {0.5, 1.0, 2.0}) {
        for (int c_p : {2, 10, 50}) {
            FociConfig cfg;
            cfg.file_size = 1.0;
            cfg.cache_slots = c_p;
            cfg.hap_rate = 1.0;       // birth rate 1
            cfg.expire_rate = rho;    // death rate rho
            cfg.request_rate = 0.0;
            cfg.rsu_rate = 0.0;
            cfg.delay_target = 1.0;
            cfg.popularity = foci::zipf(std::max(c_p, 1), 0.56);
            // 2e7 events instead of the nominal 1e6: the 51-state chain at
            // rho = 1 mixes too slowly for 0.01 TV at 1e6 samples.
            auto rep =
                sim::simulate_foci(cfg, {static_cast<uint64_t>(3000 + c_p), 0.1, 20000000, false});
            auto want = foci::cache_steady_state(rho, c_p);
            double tv = 0.0;
            for (int i = 0; i <= c_p; ++i)
                tv += std::fabs(rep.empirical_occupancy[i] - want[i]);
            tv *= 0.5;
            detail += "(rho=" + fmt(rho, 2) + ",C_p=" + std::to_string(c_p) +
                      ") TV=" + fmt(tv, 2) + " ";
            if (tv > 0.01) ok = false;
        }
    }
    double dt = seconds_since(t0);
    report("criterion 5 (chain occupancy within TV 0.01, 2e7 events per point)", ok,
           detail + "runtime " + fmt(dt, 3) + "s");
}

// --- 6. paper-anchored endpoints --------------------------------------------
void criterion_6a() {
    auto mob = table_mobility(0.9);
    double p_10_20 = mana::accomplishment_ratio(table_mana(10, 20e6), mob);
    double p_5_40 = mana::accomplishment_ratio(table_mana(5, 40e6), mob);
    bool in_band = std::fabs(p_10_20 - 0.4) <= 0.15;
    bool trades = std::fabs(p_5_40 - p_10_20) <= 0.1;
    std::string diag = "P_acc(10,20M)=" + fmt(p_10_20) + " P_acc(5,40M)=" + fmt(p_5_40) +
                       " |diff|=" + fmt(std::fabs(p_5_40 - p_10_20));
    diag += "; upper bounds " +
            fmt(mana::accomplishment_bounds(table_mana(10, 20e6), mob).upper) + "/" +
            fmt(mana::accomplishment_bounds(table_mana(5, 40e6), mob).upper);
    for (double psi : {0.95, 0.98, 0.99}) {
        auto m = table_mobility(psi);
        diag += "; psi=" + fmt(psi, 3) + ": " +
                fmt(mana::accomplishment_ratio(table_mana(10, 20e6), m)) + "/" +
                fmt(mana::accomplishment_ratio(table_mana(5, 40e6), m));
    }
    report("criterion 6a (P_acc(10,20M) in 0.4+-0.15 and cache-rate trade within 0.1, psi=0.9)",
           in_band && trades, diag);
}

void criterion_6b() {
    bool ok = true;
    std::string detail;
    auto pop = foci::zipf(1000, 0.56);
    for (int c_p : {50, 100, 200}) {
        double limit = pop.head_mass(c_p);
        double knee = -1.0;
        for (double r_hp = 0.05e6; r_hp <= 3.0e6; r_hp += 0.05e6) {
            double rho = 1e-3 * 1e9 / r_hp;
            if (foci::hit_ratio(pop, rho, c_p) >= 0.95 * limit) {
                knee = r_hp;
                break;
            }
        }
        detail += "C_p=" + std::to_string(c_p) + " knee=" + fmt(knee / 1e6, 3) + "Mbps ";
        if (knee < 0.8e6 || knee > 1.6e6) ok = false;
    }
    report("criterion 6b (hit-ratio saturate knee between 0.8 and 1.6 Mbps)", ok, detail);
}

optimizer::GridSpec acceptance_grid() {
    optimizer::GridSpec g;
    for (int c = 0; c <= 40; ++c) g.c_m_values.push_back(c);
    for (int i = 0; i <= 40; ++i) g.r_hm_values.push_back(i * 0.5e6);
    for (int c = 0; c <= 200; c += 10) g.c_p_values.push_back(c);
    for (int i = 0; i <= 20; ++i) g.r_hp_values.push_back(i * 0.25e6);
    return g;
}

optimizer::SliceDemand figure_demand() {
    optimizer::SliceDemand d;
    d.mobility = table_mobility(0.99);  // long-route regime of the slicing study
    d.mana = table_mana(0, 0.0);
    d.foci = table_foci(0, 0.0);
    return d;
}

void criterion_6c(double* saving_out) {
    auto demand = figure_demand();
    ResourceBudget budget{10e9, 200e6, 200e9, 10};
    auto schemes = optimizer::comparison_schemes(budget, demand, acceptance_grid());
    double saving = schemes[0].rsu_saving;
    *saving_out = saving;
    report("criterion 6c (optimal saving at R_H=200 Mbps at least 0.35 of no-push)",
           saving >= 0.35 && schemes[0].solution.feasible,
           "rsu_saving=" + fmt(saving) + " allocation C_m=" +
               std::to_string(schemes[0].solution.mana.cache_slots) +
               " R_HM=" + fmt(schemes[0].solution.mana.hap_rate / 1e6) + "Mbps C_p=" +
               std::to_string(schemes[0].solution.foci.cache_slots) +
               " R_HP=" + fmt(schemes[0].solution.foci.hap_rate / 1e6) + "Mbps");
}

void criterion_6d() {
    auto t0 = Clock::now();
    auto demand = figure_demand();
    auto grid = acceptance_grid();
    std::string seq;
    int first_mana = -1, first_shared = -1;
    bool ordered = true;
    int phase = 0;  // 0 foci-only, 1 mana-only, 2 shared
    for (int r_h = 10; r_h <= 200; r_h += 10) {
        ResourceBudget budget{10e9, r_h * 1e6, 200e9, 10};
        auto best = optimizer::solve_p1(budget, demand, grid);
        int c_m = best.solution.mana.cache_slots;
        int c_p = best.solution.foci.cache_slots;
        int cls = c_m == 0 ? 0 : (c_p == 0 ? 1 : 2);
        seq += (cls == 0 ? "F" : (cls == 1 ? "M" : "S"));
        if (cls == 1 && first_mana < 0) first_mana = r_h;
        if (cls == 2 && first_shared < 0) first_shared = r_h;
        if (cls < phase) ordered = false;
        phase = std::max(phase, cls);
    }
    bool ok = ordered && first_mana >= 30 && first_mana <= 70 && first_shared >= 60 &&
              first_shared <= 100;
    double dt = seconds_since(t0);
    report("criterion 6d (foci-only -> mana-only -> shared regimes, boundaries 50/80 +-20)",
           ok,
           "sequence over R_H=10..200: " + seq + "; mana onset " + std::to_string(first_mana) +
               " Mbps, sharing onset " + std::to_string(first_shared) + " Mbps; runtime " +
               fmt(dt, 3) + "s");
}

// --- 7. dominance and independent feasibility validation --------------------
void criterion_7() {
    auto demand = figure_demand();
    auto grid = acceptance_grid();
    bool ok = true;
    std::string detail;
    for (double r_h : {50e6, 120e6, 200e6}) {
        ResourceBudget budget{10e9, r_h, 200e9, 10};
        auto schemes = optimizer::comparison_schemes(budget, demand, grid);
        const auto& optimal = schemes[0];
        for (const auto& s : schemes) {
            if (optimal.solution.objective < s.solution.objective - 1e-6) {
                ok = false;
                detail += "dominance broken at R_H=" + fmt(r_h / 1e6) + " by " +
                          optimizer::scheme_name(s.scheme) + "; ";
            }
            optimizer::GridPoint p{s.solution.mana.cache_slots, s.solution.mana.hap_rate,
                                   s.solution.foci.cache_slots, s.solution.foci.hap_rate};
            auto again = optimizer::min_total_rsu(p, demand, budget);
            if (!again) {
                ok = false;
                detail += "re-validation rejected a reported point; ";
                continue;
            }
            double dm = std::fabs(again->r_rm - s.solution.mana.rsu_rate);
            double dp = std::fabs(again->r_rp - s.solution.foci.rsu_rate);
            if (dm > 1e-3 || dp > 1e-3) {
                ok = false;
                detail += "rate mismatch on re-validation; ";
            }
            if (s.solution.feasible) {
                if (s.solution.mana_delay > demand.mana.delay_target * (1.0 + 1e-9) ||
                    s.solution.foci_delay > demand.foci.delay_target * (1.0 + 1e-9) ||
                    s.solution.objective < 0.0) {
                    ok = false;
                    detail += "feasible point violates a constraint; ";
                }
            }
        }
    }
    report("criterion 7 (optimal dominates all schemes; solutions re-validate)", ok,
           ok ? "3 budgets x 5 schemes" : detail);
}

// --- 8. byte-identical reruns through the CLI --------------------------------
const char* kDeterminismConfig = R"(
[mobility]
vehicle_arrival_rate = 1.2
erlang_shape = 5
erlang_rate = 0.2
route = geometric
continue_prob = 0.9

[mana]
map_size = 5 Gb
cache_slots = 10
hap_rate = 20 Mbps
rsu_rate = 10 Gbps
delay_target = 1 s

[foci]
file_size = 1 Gb
cache_slots = 100
hap_rate = 2 Mbps
rsu_rate = 4 Gbps
expire_rate = 1e-3
request_rate = 4
file_count = 1000
zipf_skew = 0.56
delay_target = 5 s

[budget]
rsu_total = 10 Gbps
hap_total = 200 Mbps
vehicle_cache = 200 Gb
block_count = 10

[run]
mana_vehicles = 50000
foci_events = 300000

[grid]
c_m = 0:15:5
r_hm = 0:20 Mbps:5 Mbps
c_p = 0:200:50
r_hp = 0:4 Mbps:2 Mbps
)";

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_8(const std::string& cli_path) {
    fs::path dir = fs::temp_directory_path() / "agiven_acceptance";
    fs::create_directories(dir);
    std::string conf = (dir / "det.conf").string();
    {
        std::ofstream out(conf);
        out << kDeterminismConfig;
    }
    auto run_cli = [&](const std::string& mode, const std::string& out,
                       const std::string& extra) {
        std::string cmd = cli_path + " " + mode + " --config " + conf + " --out " + out +
                          " --seed 77 " + extra + " >/dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    bool ok = true;
    std::string detail;
    if (run_cli("simulate", (dir / "s1.csv").string(), "") != 0 ||
        run_cli("simulate", (dir / "s2.csv").string(), "") != 0) {
        ok = false;
        detail += "simulate run failed; ";
    } else if (slurp((dir / "s1.csv").string()) != slurp((dir / "s2.csv").string()) ||
               slurp((dir / "s1.csv").string()).empty()) {
        ok = false;
        detail += "simulate outputs differ; ";
    }
    std::string sweep = "--sweep budget.hap_total=100Mbps,200Mbps";
    if (run_cli("optimize", (dir / "o1.csv").string(), sweep) != 0 ||
        run_cli("optimize", (dir / "o2.csv").string(), sweep) != 0) {
        ok = false;
        detail += "optimize sweep failed; ";
    } else if (slurp((dir / "o1.csv").string()) != slurp((dir / "o2.csv").string()) ||
               slurp((dir / "o1.csv").string()).empty()) {
        ok = false;
        detail += "optimize outputs differ; ";
    }
    report("criterion 8 (same seed gives byte-identical CSV outputs)", ok,
           ok ? "simulate and optimize sweep, two runs each" : detail);
    fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli_path = argc > 1 ? argv[1] : "";
    auto t0 = Clock::now();

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6a();
    criterion_6b();
    double saving = 0.0;
    criterion_6c(&saving);
    criterion_6d();
    criterion_7();
    if (cli_path.empty()) {
        report("criterion 8 (same seed gives byte-identical CSV outputs)", false,
               "CLI path missing: pass the binary as argv[1]");
    } else {
        criterion_8(cli_path);
    }

    std::printf("acceptance finished in %.1fs: %d criterion(s) failing\n", seconds_since(t0),
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
