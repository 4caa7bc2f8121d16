#include "frac/xlab.hpp"

#include "require.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace frac;

namespace {

std::vector<ProbeRecord> synthetic(double slope) {
    std::vector<ProbeRecord> recs;
    for (int i = 1; i <= 4; ++i) {
        ProbeRecord r;
        r.probe = "synth";
        r.param = 2.0 * i;
        r.ratio = std::pow(r.param, slope);
        r.lhs = r.ratio;
        r.rhs = 1.0;
        r.grid_n = 64;
        r.grid_L = 8.0;
        r.seed = 7;
        r.wall_ms = 0.25;
        recs.push_back(r);
    }
    return recs;
}

} // namespace

static void config_roundtrip() {
    for (const auto& name : probe_names()) {
        ProbeConfig cfg = default_probe_config(name);
        ProbeConfig back = probe_config_from_json_text(probe_config_to_json(cfg), "mem");
        REQUIRE(back.probe == cfg.probe, "probe survives the roundtrip");
        REQUIRE(back.grid.n == cfg.grid.n && back.grid.dim == cfg.grid.dim,
                "grid survives the roundtrip");
        REQUIRE(back.seed == cfg.seed, "seed survives the roundtrip");
        REQUIRE(back.sweep_key == cfg.sweep_key, "sweep key survives the roundtrip");
        REQUIRE(back.sweep.size() == cfg.sweep.size(), "sweep length survives");
        REQUIRE(back.params.size() == cfg.params.size(), "scalar knobs survive");
    }
    REQUIRE_THROWS_AS(default_probe_config("nope"), config_error, "unknown probe");
    pass("config_roundtrip");
}

static void config_rejections() {
    auto parse = [](const std::string& text) {
        return probe_config_from_json_text(text, "mem");
    };
    const std::string ok =
        R"({"probe":"thm5_1","params":{"s":1.6,"pairs":3},)"
        R"("grid":{"dim":1,"n":64,"L":16.0},"norms":{"p":2.0},"seed":9})";
    REQUIRE(parse(ok).grid.n == 64, "baseline text parses");
    REQUIRE_THROWS_AS(parse(R"({"probe":"thm5_1","params":{},"grid":{"dim":1,"n":64,"L":16.0},)"
                            R"("norms":{"p":2.0},"seed":9,"extra":1})"),
                      config_error, "unknown top-level key");
    REQUIRE_THROWS_AS(parse(R"({"probe":"thm5_1","params":{"s":1.6},)"
                            R"("grid":{"dim":1,"n":64,"L":16.0,"spin":3},"norms":{"p":2.0},"seed":9})"),
                      config_error, "unknown grid key");
    REQUIRE_THROWS_AS(parse(R"({"probe":"thm5_1","params":{"s":1.6},)"
                            R"("grid":{"dim":1,"n":48,"L":16.0},"norms":{"p":2.0},"seed":9})"),
                      config_error, "grid size must be a power of two");
    REQUIRE_THROWS_AS(parse(R"({"probe":"thm5_1","params":{"s":1.6},)"
                            R"("grid":{"dim":1,"n":64,"L":16.0},"norms":{"p":"fast"},"seed":9})"),
                      config_error, "exponents are numbers or inf");
    REQUIRE_THROWS_AS(parse(R"({"probe":"thm5_1","params":{"s":1.6},)"
                            R"("grid":{"dim":1,"n":64,"L":16.0},)"
                            R"("norms":{"p":2.0,"p1":3.0,"p2":4.0},"seed":9})"),
                      config_error, "split exponents must recombine");
    REQUIRE_THROWS_AS(parse(R"({"probe":"thm5_1","params":{"a":[1,2],"b":[3,4]},)"
                            R"("grid":{"dim":1,"n":64,"L":16.0},"norms":{"p":2.0},"seed":9})"),
                      config_error, "only one knob may sweep");
    REQUIRE_THROWS_AS(parse(R"({"probe":"thm5_1","params":{"s":1.6},)"
                            R"("grid":{"dim":1,"n":64,"L":16.0},"norms":{"p":2.0},"seed":-3})"),
                      config_error, "seed is unsigned");
    ProbeConfig inf_cfg = parse(
        R"({"probe":"thm5_1","params":{"s":1.6,"pairs":2},)"
        R"("grid":{"dim":1,"n":64,"L":16.0},)"
        R"("norms":{"p":2.0,"p1":2.0,"p2":"inf"},"seed":9})");
    REQUIRE(inf_cfg.norms.p2 == lp_inf, "string infinity accepted");
    pass("config_rejections");
}

static void committed_experiments() {
    auto set = experiment_set();
    REQUIRE(set.size() == 14, "committed experiment count");
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            REQUIRE(set[i].first != set[j].first, "stems are unique");
    auto names = probe_names();
    for (const auto& kv : set) {
        bool known = false;
        for (const auto& n : names) known = known || n == kv.second.probe;
        REQUIRE(known, "every experiment names a registered probe");
        // committed configs must round trip through their own serialization
        ProbeConfig back =
            probe_config_from_json_text(probe_config_to_json(kv.second), kv.first);
        REQUIRE(back.probe == kv.second.probe, "experiment file text parses back");
    }
    pass("committed_experiments");
}

static void probe_determinism() {
    ProbeConfig cfg = default_probe_config("thm1_1");
    cfg.grid.n = 64;
    cfg.params["pairs"] = 3.0;
    cfg.sweep = {1.0, 2.0, 3.0};
    auto a = run_probe(cfg);
    auto b = run_probe(cfg);
    REQUIRE(a.size() == 3 && b.size() == 3, "one record per sweep point");
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].lhs == b[i].lhs && a[i].rhs == b[i].rhs,
                "reruns are bit identical");
        REQUIRE(a[i].ratio > 0.0, "ratios are positive");
        REQUIRE(a[i].grid_n == 64, "grid echoes into the record");
    }
    cfg.seed += 1;
    auto c = run_probe(cfg);
    REQUIRE(c[0].lhs != a[0].lhs, "seed moves the draw");
    pass("probe_determinism");
}

static void sweep_point_annotation() {
    ProbeConfig cfg = default_probe_config("lem7_1");
    cfg.grid.n = 64;
    cfg.sweep_key = "k_mode";
    cfg.sweep = {40.0}; // past the open mode lattice at n = 64
    bool threw = false;
    try {
        run_probe(cfg);
    } catch (const resolution_error& e) {
        threw = true;
        REQUIRE(std::string(e.what()).find("at k_mode=40") != std::string::npos,
                "failure names the sweep point");
    }
    REQUIRE(threw, "unresolvable sweep point propagates its error type");
    pass("sweep_point_annotation");
}

static void emitters_and_fits() {
    auto recs = synthetic(2.0);
    std::ostringstream csv;
    emit_csv(recs, csv);
    std::string text = csv.str();
    REQUIRE(text.rfind("probe,param,lhs,rhs,ratio,grid_n,grid_L,seed,wall_ms\n", 0) == 0,
            "csv header is pinned");
    int lines = 0;
    for (char ch : text) lines += ch == '\n' ? 1 : 0;
    REQUIRE(lines == 5, "header plus one line per record");
    std::ostringstream js;
    emit_json(recs, js);
    auto parsed = nlohmann::json::parse(js.str());
    REQUIRE(parsed.is_array() && parsed.size() == 4, "json mirrors the records");
    REQUIRE(parsed[0]["probe"] == "synth", "probe column");
    REQUIRE(parsed[2]["param"] == 6.0, "param column");
    std::ostringstream svg;
    emit_svg(recs, svg);
    REQUIRE(svg.str().find("<svg") != std::string::npos, "svg root");
    REQUIRE(svg.str().find("polyline") != std::string::npos, "one polyline");
    REQUIRE(svg.str().find("slope") != std::string::npos, "slope label");

    SlopeFit fit = fit_slope(recs, SlopeAxis::log_param);
    REQUIRE(std::abs(fit.slope - 2.0) <= 1e-9, "log-log slope of a power law");
    REQUIRE(fit.residual <= 1e-9, "pure power law leaves no residual");
    auto expo = synthetic(0.0);
    for (auto& r : expo) r.ratio = std::exp(3.0 * r.param);
    REQUIRE(std::abs(fit_slope(expo, SlopeAxis::param).slope - 3.0) <= 1e-9,
            "semi-log slope of an exponential");
    auto two = synthetic(1.0);
    two.resize(2);
    REQUIRE_THROWS_AS(fit_slope(two, SlopeAxis::param), config_error, "needs three points");
    auto flat = synthetic(1.0);
    flat[1].ratio = 0.0;
    REQUIRE_THROWS_AS(fit_slope(flat, SlopeAxis::param), config_error,
                      "ratios must stay positive");
    auto neg = synthetic(1.0);
    neg[0].param = -1.0;
    REQUIRE_THROWS_AS(fit_slope(neg, SlopeAxis::log_param), config_error,
                      "log axis needs positive params");
    pass("emitters_and_fits");
}

static void output_files_and_report() {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("fraclab_test_" + std::to_string(static_cast<long>(::getpid())));
    fs::create_directories(dir);
    auto recs = synthetic(2.0);
    write_run_outputs(recs, dir.string(), "");
    REQUIRE(fs::exists(dir / "synth.csv"), "empty stem falls back to the probe name");
    REQUIRE(fs::exists(dir / "synth.json"), "json written");
    REQUIRE(fs::exists(dir / "synth.svg"), "svg written");
    write_run_outputs(recs, dir.string(), "alias");
    REQUIRE(fs::exists(dir / "alias.csv"), "explicit stem honored");
    std::ostringstream table;
    int nfiles = report_dir(dir.string(), table);
    REQUIRE(nfiles == 2, "both csv files read");
    REQUIRE(table.str().find("| synth | 8 |") != std::string::npos,
            "rows aggregate by probe across files");
    REQUIRE(fs::exists(dir / "report.md"), "markdown report written");
    REQUIRE_THROWS_AS(report_dir((dir / "synth.csv").string(), table), config_error,
                      "report target must be a directory");
    fs::remove_all(dir);
    pass("output_files_and_report");
}

static void verify_plumbing() {
    bool threw = false;
    try {
        run_acceptance(0);
    } catch (const config_error&) {
        threw = true;
    }
    REQUIRE(threw, "acceptance index is range checked");
    auto outcomes = run_verify("field", true);
    REQUIRE(outcomes.size() == 2, "field filter keeps the two field checks");
    for (const auto& oc : outcomes) {
        REQUIRE(oc.module == "field", "filter is exact");
        REQUIRE(oc.pass, oc.name + ": " + oc.detail);
    }
    REQUIRE(run_verify("not_a_module", true).empty(), "unknown filter matches nothing");
    pass("verify_plumbing");
}

int main() {
    config_roundtrip();
    config_rejections();
    committed_experiments();
    probe_determinism();
    sweep_point_annotation();
    emitters_and_fits();
    output_files_and_report();
    verify_plumbing();
    return 0;
}
