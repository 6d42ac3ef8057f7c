// ccqed: command-line front end for points, scans, phase diagrams and κ-scans

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ccqed/config.hpp"
#include "selftest.hpp"

using namespace ccqed;

namespace {

enum Exit { kOk = 0, kHardFailure = 1, kPartial = 2 };

struct VerbOptions {
    std::string config;
    std::map<std::string, std::string> flags; // key → raw value
    bool plots = true;
};

void add_setting_flags(CLI::App* sub, VerbOptions& vo)
{
    sub->add_option("-c,--config", vo.config, "key = value configuration file")->check(CLI::ExistingFile);
    sub->add_flag("!--no-plots", vo.plots, "skip the plot-ready x/y files");
    for (const auto& key : config_keys()) {
        if (key == "kind") continue;
        sub->add_option_function<std::string>(
            "--" + key, [&vo, key](const std::string& v) { vo.flags[key] = v; }, "override '" + key + "'");
    }
}

ResolvedConfig resolve(const VerbOptions& vo, const char* kind)
{
    ResolvedConfig cfg;
    if (!vo.config.empty()) {
        cfg = load_config(vo.config);
    } else {
        for (const auto& k : config_keys()) cfg.sources[k] = "default";
    }
    apply_setting(cfg.spec, "kind", kind, "command line");
    cfg.sources["kind"] = "flag";
    for (const auto& [key, value] : vo.flags) {
        apply_setting(cfg.spec, key, value, "--" + key);
        cfg.sources[key] = "flag";
    }
    cfg.spec.validate();
    return cfg;
}

std::string output_or(const ResolvedConfig& cfg, const char* fallback)
{
    return cfg.spec.output.empty() ? std::string(fallback) : cfg.spec.output;
}

std::string stem_of(const std::string& path)
{
    const std::filesystem::path p(path);
    return (p.parent_path() / p.stem()).string();
}

void print_row(const SweepRow& r)
{
    const auto& o = r.observables;
    std::printf("phase      %s\n", r.phase == Phase::Coherent ? "coherent" : "incoherent");
    std::printf("psi        %s\nmu         %s\n", format_double(r.mf.psi).c_str(), format_double(r.mf.mu).c_str());
    std::printf("n_ph       %s\n", format_double(o.n_ph).c_str());
    std::printf("J_tls_in   %s\nJ_tls_out  %s\nJ_ph_out   %s\n", format_double(o.j_tls_in).c_str(),
                format_double(o.j_tls_out).c_str(), format_double(o.j_ph_out).c_str());
    std::printf("gaps       %s %s %s\n", format_double(o.gaps[0]).c_str(), format_double(o.gaps[1]).c_str(),
                format_double(o.gaps[2]).c_str());
    std::printf("L gap      %s\nconverged  %s\n", format_double(r.certificate.spectral_gap).c_str(),
                r.converged ? "true" : "false");
}

int finish(const ResolvedConfig& cfg, RunSummary summary, const std::string& output)
{
    summary.files.insert(summary.files.begin(), output);
    const std::string manifest = write_manifest(cfg, summary, output);
    std::cerr << "wrote " << output << " (" << summary.rows << " rows, " << summary.unconverged
              << " unconverged); manifest " << manifest << '\n';
    return summary.unconverged > 0 ? kPartial : kOk;
}

int run_point(const VerbOptions& vo)
{
    const ResolvedConfig cfg = resolve(vo, "point");
    const SweepRow row = run_single_point(cfg.spec.base, cfg.spec.sc);
    print_row(row);
    if (cfg.spec.output.empty()) return row.converged ? kOk : kPartial;
    emit_results({row}, cfg.spec.output);
    return finish(cfg, {1, row.converged ? 0u : 1u, {}}, cfg.spec.output);
}

int run_scan(const VerbOptions& vo)
{
    const ResolvedConfig cfg = resolve(vo, "scan-mub");
    const ScanResult res = run_mu_b_scan(cfg.spec);
    const std::string out = output_or(cfg, "scan_mub.tsv");
    emit_results(res.rows, out);
    RunSummary s;
    s.rows = res.rows.size();
    for (const auto& r : res.rows) s.unconverged += r.converged ? 0 : 1;
    const std::string plateaus = stem_of(out) + ".plateaus.tsv";
    emit_plateaus(res, plateaus);
    s.files.push_back(plateaus);
    if (vo.plots) {
        const auto f = emit_scan_plot_data(res, stem_of(out));
        s.files.insert(s.files.end(), f.begin(), f.end());
    }
    for (const auto& pp : res.plateaus) {
        std::cerr << to_string(pp.pass) << ": " << pp.regions.size() << " plateau(s)\n";
        for (const auto& r : pp.regions)
            std::cerr << "  mu_b " << format_double(r.mu_b_start) << " .. " << format_double(r.mu_b_end)
                      << "  mu " << format_double(r.plateau_mu) << "  n_ph " << format_double(r.plateau_n_ph) << '\n';
    }
    return finish(cfg, s, out);
}

int run_phase(const VerbOptions& vo)
{
    const ResolvedConfig cfg = resolve(vo, "phase-diagram");
    const auto rows = run_phase_diagram(cfg.spec);
    const std::string out = output_or(cfg, "phase_diagram.tsv");
    emit_phase_diagram(rows, out);
    RunSummary s;
    s.rows = rows.size();
    if (vo.plots) s.files = emit_phase_plot_data(rows, cfg.spec.base, stem_of(out));
    return finish(cfg, s, out);
}

int run_kappa(const VerbOptions& vo)
{
    const ResolvedConfig cfg = resolve(vo, "kappa-scan");
    const auto rows = run_kappa_scan(cfg.spec);
    const std::string out = output_or(cfg, "kappa_scan.tsv");
    emit_kappa_scan(rows, out);
    RunSummary s;
    s.rows = rows.size();
    for (const auto& r : rows) s.unconverged += r.converged ? 0 : 1;
    if (vo.plots) s.files = emit_kappa_plot_data(rows, stem_of(out));
    return finish(cfg, s, out);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mean-field steady states of a pumped, lossy Jaynes-Cummings-Hubbard array"};
    app.set_version_flag("--version", code_version());
    app.require_subcommand(1);

    VerbOptions point, scan, phase, kappa;
    add_setting_flags(app.add_subcommand("point", "solve one (mu_b, z_tau, kappa) point"), point);
    add_setting_flags(app.add_subcommand("scan-mub", "warm-started mu_b scan with plateau detection"), scan);
    add_setting_flags(app.add_subcommand("phase-diagram", "dissipative and kappa = 0 phase boundaries"), phase);
    add_setting_flags(app.add_subcommand("kappa-scan", "first-plateau onset versus kappa"), kappa);
    auto* selftest = app.add_subcommand("selftest", "run the built-in oracle checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("point")) return run_point(point);
        if (app.got_subcommand("scan-mub")) return run_scan(scan);
        if (app.got_subcommand("phase-diagram")) return run_phase(phase);
        if (app.got_subcommand("kappa-scan")) return run_kappa(kappa);
        if (selftest->parsed()) return tools::run_selftest(std::cout) == 0 ? kOk : kHardFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kHardFailure;
    }
    return kHardFailure;
}
