// Regenerates the committed experiment configs and the frozen reference
// tables the slow checks compare against. Run from the build tree after any
// change that moves the reference constructions, then commit the output.

#include "frac/field.hpp"
#include "frac/norms.hpp"
#include "frac/remainders.hpp"
#include "frac/symbols.hpp"
#include "frac/xlab.hpp"
#include "frac/zoo.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

using nlohmann::ordered_json;

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
    std::printf("  wrote %s\n", path.c_str());
}

double vec_js_norm(const std::array<frac::Field, 2>& u, double s, double p) {
    frac::Field a = frac::apply(frac::js(2, s), u[0]);
    frac::Field b = frac::apply(frac::js(2, s), u[1]);
    frac::Field mag = frac::make_field(u[0].grid);
    for (std::size_t i = 0; i < mag.v.size(); ++i)
        mag.v[i] = frac::cd(std::hypot(std::abs(a.v[i]), std::abs(b.v[i])), 0.0);
    mag.is_real = true;
    return frac::lp_norm(mag, p);
}

} // namespace

int main(int argc, char** argv) {
    std::filesystem::path root =
        argc > 1 ? std::filesystem::path(argv[1])
                 : std::filesystem::path(frac::expected_dir()).parent_path();
    std::filesystem::path exp_dir = root / "experiments";
    std::filesystem::path frozen_dir = root / "expected";
    std::filesystem::create_directories(exp_dir);
    std::filesystem::create_directories(frozen_dir);

    std::printf("experiment configs:\n");
    for (const auto& [stem, cfg] : frac::experiment_set())
        write_text(exp_dir / (stem + ".json"), frac::probe_config_to_json(cfg));

    std::printf("stacked-block growth reference:\n");
    {
        frac::ProbeConfig cfg = frac::default_probe_config("prop7_4");
        frac::Grid gr = frac::make_grid(cfg.grid.dim, cfg.grid.n, cfg.grid.boxlen);
        ordered_json j;
        j["tol_rel"] = 1e-5;
        ordered_json ratio = ordered_json::array(), bmo = ordered_json::array();
        for (double pt : cfg.sweep) {
            frac::GrowthPoint gp = frac::log_stack_growth_point(
                gr, cfg.params.at("s"), cfg.params.at("c_k"), static_cast<int>(pt));
            ratio.push_back(gp.ratio);
            bmo.push_back(gp.bmo);
            std::printf("  N=%2d ratio=%.6f bmo=%.6f\n", static_cast<int>(pt), gp.ratio,
                        gp.bmo);
        }
        j["ratio"] = ratio;
        j["bmo"] = bmo;
        write_text(frozen_dir / "log_stack_growth.json", j.dump(2) + "\n");
    }

    std::printf("square-function growth reference:\n");
    {
        frac::ProbeConfig cfg = frac::default_probe_config("remark3_2");
        auto recs = frac::run_probe(cfg);
        ordered_json j;
        j["tol_rel"] = 1e-5;
        ordered_json lhs = ordered_json::array(), rhs = ordered_json::array();
        for (const auto& r : recs) {
            lhs.push_back(r.lhs);
            rhs.push_back(r.rhs);
            std::printf("  J=%2.0f lhs=%.8f rhs=%.8f\n", r.param, r.lhs, r.rhs);
        }
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        write_text(frozen_dir / "chirp_square_function.json", j.dump(2) + "\n");
    }

    std::printf("divergence-free suite reference:\n");
    {
        frac::ProbeConfig cfg = frac::default_probe_config("prop9_3");
        frac::Grid gr = frac::make_grid(cfg.grid.dim, cfg.grid.n, cfg.grid.boxlen);
        double s = cfg.params.at("s");
        long long k_mode = static_cast<long long>(cfg.params.at("k_mode"));
        double bscale = cfg.params.at("bscale");
        ordered_json j;
        j["tol_rel"] = 1e-5;
        ordered_json d12 = ordered_json::array(), form = ordered_json::array();
        double base0 = 0.0;
        std::vector<double> xs, ys;
        for (double pt : cfg.sweep) {
            frac::DivfreePair pair = frac::divfree_pair(
                gr, frac::default_annular_2d(), static_cast<int>(pt), k_mode, s,
                cfg.norms.p, bscale);
            base0 = pair.base0;
            d12.push_back(std::abs(pair.d12_at0));
            double best = 0.0;
            for (const auto* u : {&pair.u_base, &pair.u_pert}) {
                double num = frac::lp_norm(frac::divfree_form(*u, *u, s), cfg.norms.p);
                double den = std::max(1.0, vec_js_norm(*u, s, cfg.norms.p));
                best = std::max(best, num / den);
            }
            form.push_back(best);
            xs.push_back(std::log(pt));
            ys.push_back(std::abs(pair.d12_at0));
            std::printf("  m=%1.0f d12=%.6f form_ratio=%.6f\n", pt,
                        std::abs(pair.d12_at0), best);
        }
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= xs.size();
        my /= ys.size();
        double sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        double slope = sxy / sxx;
        std::printf("  base0=%.6f origin slope=%.6f slope/|base0|=%.4f (window 0.8..1.2)\n",
                    base0, slope, slope / std::abs(base0));
        j["base0"] = base0;
        j["d12"] = d12;
        j["form_ratio"] = form;
        write_text(frozen_dir / "divfree_suite.json", j.dump(2) + "\n");
    }

    std::printf("random-pair ratio sweeps:\n");
    {
        ordered_json stats = ordered_json::object();
        for (const auto& [stem, cfg] : frac::experiment_set()) {
            if (cfg.sweep_key != "pair") continue;
            auto recs = frac::run_probe(cfg);
            std::vector<double> ratios;
            for (const auto& r : recs) ratios.push_back(r.ratio);
            std::sort(ratios.begin(), ratios.end());
            double median =
                0.5 * (ratios[ratios.size() / 2] + ratios[(ratios.size() - 1) / 2]);
            double mx = ratios.back();
            stats[stem] = {{"max", mx}, {"median", median}};
            std::printf("  %-9s max=%.6f median=%.6f max/median=%.3f\n", stem.c_str(), mx,
                        median, mx / median);
        }
        ordered_json j;
        j["tol_rel"] = 1e-5;
        j["stats"] = stats;
        write_text(frozen_dir / "ratio_sweeps.json", j.dump(2) + "\n");
    }

    std::printf("done\n");
    return 0;
}
