// config.cpp: configuration parsing, table emission and JSON manifests

#include "ccqed/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace ccqed {

namespace {

struct Field {
    std::string name;
    std::function<std::string(const SweepSpec&)> get;
    std::function<void(SweepSpec&, const std::string&)> set;
};

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v)
{
    double x = 0.0;
    const char* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, x);
    if (v.empty() || res.ec != std::errc() || res.ptr != end) throw ConfigError("malformed number '" + v + "'");
    if (!std::isfinite(x)) throw ConfigError("non-finite number '" + v + "'");
    return x;
}

int parse_int(const std::string& v)
{
    int x = 0;
    const char* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, x);
    if (v.empty() || res.ec != std::errc() || res.ptr != end) throw ConfigError("malformed integer '" + v + "'");
    return x;
}

bool parse_bool(const std::string& v)
{
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("malformed boolean '" + v + "'");
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

const char* kind_name(SweepKind k)
{
    switch (k) {
    case SweepKind::SinglePoint: return "point";
    case SweepKind::MuBScan: return "scan-mub";
    case SweepKind::PhaseDiagram: return "phase-diagram";
    case SweepKind::KappaScan: return "kappa-scan";
    }
    return "?";
}

SweepKind parse_kind(const std::string& v)
{
    for (SweepKind k : {SweepKind::SinglePoint, SweepKind::MuBScan, SweepKind::PhaseDiagram, SweepKind::KappaScan})
        if (v == kind_name(k)) return k;
    throw ConfigError("unknown sweep kind '" + v + "'");
}

const char* direction_name(Direction d)
{
    switch (d) {
    case Direction::Ascending: return "ascending";
    case Direction::Descending: return "descending";
    case Direction::Both: return "both";
    }
    return "?";
}

Direction parse_direction(const std::string& v)
{
    for (Direction d : {Direction::Ascending, Direction::Descending, Direction::Both})
        if (v == direction_name(d)) return d;
    throw ConfigError("unknown direction '" + v + "'");
}

template <class Member>
Field real_field(const std::string& name, Member member)
{
    return {name, [member](const SweepSpec& s) { return format_double(member(s)); },
            [member](SweepSpec& s, const std::string& v) { member(s) = parse_double(v); }};
}

template <class Member>
Field int_field(const std::string& name, Member member)
{
    return {name, [member](const SweepSpec& s) { return std::to_string(member(s)); },
            [member](SweepSpec& s, const std::string& v) { member(s) = parse_int(v); }};
}

Field bool_field(const std::string& name, bool SweepSpec::*m)
{
    return {name, [m](const SweepSpec& s) { return format_bool(s.*m); },
            [m](SweepSpec& s, const std::string& v) { s.*m = parse_bool(v); }};
}

const std::vector<Field>& fields()
{
    static const std::vector<Field> table = [] {
        std::vector<Field> f;
        f.push_back({"kind", [](const SweepSpec& s) { return std::string(kind_name(s.kind)); },
                     [](SweepSpec& s, const std::string& v) { s.kind = parse_kind(v); }});
        f.push_back(real_field("omega0", [](auto& s) -> auto& { return s.base.omega0; }));
        f.push_back(real_field("g", [](auto& s) -> auto& { return s.base.g_coupling; }));
        f.push_back(real_field("z_tau", [](auto& s) -> auto& { return s.base.z_tau; }));
        f.push_back(real_field("kappa", [](auto& s) -> auto& { return s.base.kappa; }));
        f.push_back(real_field("gamma", [](auto& s) -> auto& { return s.base.gamma; }));
        f.push_back(real_field("beta", [](auto& s) -> auto& { return s.base.beta; }));
        f.push_back(real_field("mu_b", [](auto& s) -> auto& { return s.base.mu_b; }));
        f.push_back({"n_max", [](const SweepSpec& s) { return std::to_string(s.base.cfg.n_max()); },
                     [](SweepSpec& s, const std::string& v) {
                         try {
                             s.base.cfg = HilbertConfig(parse_int(v));
                         } catch (const std::invalid_argument& e) {
                             throw ConfigError(e.what());
                         }
                     }});
        f.push_back(real_field("mu_b_min", [](auto& s) -> auto& { return s.mu_b_axis.min; }));
        f.push_back(real_field("mu_b_max", [](auto& s) -> auto& { return s.mu_b_axis.max; }));
        f.push_back(real_field("mu_b_step", [](auto& s) -> auto& { return s.mu_b_axis.step; }));
        f.push_back({"direction", [](const SweepSpec& s) { return std::string(direction_name(s.direction)); },
                     [](SweepSpec& s, const std::string& v) { s.direction = parse_direction(v); }});
        f.push_back(real_field("z_tau_min", [](auto& s) -> auto& { return s.z_tau_axis.min; }));
        f.push_back(real_field("z_tau_max", [](auto& s) -> auto& { return s.z_tau_axis.max; }));
        f.push_back(real_field("z_tau_step", [](auto& s) -> auto& { return s.z_tau_axis.step; }));
        f.push_back({"kappas",
                     [](const SweepSpec& s) {
                         std::string out;
                         for (std::size_t i = 0; i < s.kappas.size(); ++i)
                             out += (i ? "," : "") + format_double(s.kappas[i]);
                         return out;
                     },
                     [](SweepSpec& s, const std::string& v) {
                         std::vector<double> ks;
                         std::stringstream ss(v);
                         std::string item;
                         while (std::getline(ss, item, ',')) ks.push_back(parse_double(trim(item)));
                         if (ks.empty()) throw ConfigError("empty list");
                         s.kappas = std::move(ks);
                     }});
        f.push_back(bool_field("cutoff_schedule", &SweepSpec::cutoff_schedule));
        f.push_back(bool_field("stop_after_first_plateau", &SweepSpec::stop_after_first_plateau));
        f.push_back(int_field("gs_n_max", [](auto& s) -> auto& { return s.gs_n_max; }));
        f.push_back(real_field("sc_tol", [](auto& s) -> auto& { return s.sc.tol; }));
        f.push_back(int_field("sc_max_iter", [](auto& s) -> auto& { return s.sc.max_iter; }));
        f.push_back(real_field("fd_step_psi", [](auto& s) -> auto& { return s.sc.fd_step_psi; }));
        f.push_back(real_field("fd_step_mu", [](auto& s) -> auto& { return s.sc.fd_step_mu; }));
        f.push_back(real_field("sc_damping", [](auto& s) -> auto& { return s.sc.damping; }));
        f.push_back(real_field("psi_threshold", [](auto& s) -> auto& { return s.sc.psi_threshold; }));
        f.push_back(int_field("polish_steps", [](auto& s) -> auto& { return s.sc.polish_steps; }));
        f.push_back(real_field("plateau_tol_mu", [](auto& s) -> auto& { return s.plateau_tol_mu; }));
        f.push_back(real_field("plateau_tol_nph", [](auto& s) -> auto& { return s.plateau_tol_nph; }));
        f.push_back(int_field("plateau_min_steps", [](auto& s) -> auto& { return s.plateau_min_steps; }));
        f.push_back(real_field("boundary_tol", [](auto& s) -> auto& { return s.boundary_tol; }));
        f.push_back(real_field("boundary_coarse_step", [](auto& s) -> auto& { return s.boundary_coarse_step; }));
        f.push_back(int_field("workers", [](auto& s) -> auto& { return s.workers; }));
        f.push_back({"output", [](const SweepSpec& s) { return s.output; },
                     [](SweepSpec& s, const std::string& v) { s.output = v; }});
        return f;
    }();
    return table;
}

const Field& field(const std::string& key)
{
    for (const auto& f : fields())
        if (f.name == key) return f;
    throw ConfigError("unknown key '" + key + "'");
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

void close_output(std::ofstream& out, const std::string& path)
{
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::string opt_double(const std::optional<double>& x) { return x ? format_double(*x) : "nan"; }

void write_xy(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows)
{
    auto out = open_output(path);
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "\t" : "") << header[i];
    out << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << format_double(r[i]);
        out << '\n';
    }
    close_output(out, path);
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

} // namespace

const char* code_version() { return CCQED_VERSION; }

std::string format_double(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const std::vector<std::string>& config_keys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& f : fields()) k.push_back(f.name);
        return k;
    }();
    return keys;
}

void apply_setting(SweepSpec& spec, const std::string& key, const std::string& value, const std::string& where)
{
    const std::string prefix = where.empty() ? "" : where + ": ";
    try {
        field(key).set(spec, value);
    } catch (const ConfigError& e) {
        throw ConfigError(prefix + "key '" + key + "': " + e.what());
    }
}

std::string get_setting(const SweepSpec& spec, const std::string& key) { return field(key).get(spec); }

ResolvedConfig parse_config(std::istream& in, const std::string& origin)
{
    ResolvedConfig cfg;
    for (const auto& k : config_keys()) cfg.sources[k] = "default";
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
        if (body.empty()) continue;
        const std::string where = origin + ":" + std::to_string(lineno);
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (cfg.sources.count(key) == 0) throw ConfigError(where + ": unknown key '" + key + "'");
        if (cfg.sources[key] == "config") throw ConfigError(where + ": key '" + key + "' set twice");
        apply_setting(cfg.spec, key, value, where);
        cfg.sources[key] = "config";
    }
    return cfg;
}

ResolvedConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config '" + path + "'");
    return parse_config(in, path);
}

std::string emit_config(const SweepSpec& spec)
{
    std::string out;
    for (const auto& f : fields()) out += f.name + " = " + f.get(spec) + "\n";
    return out;
}

const std::vector<std::string>& result_columns()
{
    static const std::vector<std::string> cols = {
        "pass", "index", "mu_b", "omega0", "g", "z_tau", "kappa", "gamma", "beta", "n_max",
        "phase", "ambiguous", "psi", "mu", "n_ph", "j_tls_in", "j_tls_out", "j_ph_out",
        "gap_10", "gap_21", "gap_32", "delta_mu", "residual_norm", "generator_norm", "spectral_gap",
        "min_eig_rho", "top_fock_population", "trace_error", "hermiticity_error", "truncation_warning",
        "near_degenerate", "branch_id", "converged", "iterations", "sc_residual"};
    return cols;
}

void emit_results(const std::vector<SweepRow>& rows, const std::string& path)
{
    auto out = open_output(path);
    const auto& cols = result_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "\t" : "") << cols[i];
    out << '\n';
    for (const auto& r : rows) {
        const auto& p = r.params;
        const auto& o = r.observables;
        const auto& c = r.certificate;
        const std::vector<std::string> cells = {
            to_string(r.pass), std::to_string(r.index), format_double(p.mu_b), format_double(p.omega0),
            format_double(p.g_coupling), format_double(p.z_tau), format_double(p.kappa), format_double(p.gamma),
            format_double(p.beta), std::to_string(p.cfg.n_max()),
            r.phase == Phase::Coherent ? "coherent" : "incoherent", format_bool(r.ambiguous),
            format_double(r.mf.psi), format_double(r.mf.mu), format_double(o.n_ph), format_double(o.j_tls_in),
            format_double(o.j_tls_out), format_double(o.j_ph_out), format_double(o.gaps[0]),
            format_double(o.gaps[1]), format_double(o.gaps[2]), format_double(o.delta_mu),
            format_double(c.residual_norm), format_double(c.generator_norm),
            c.gap_computed() ? format_double(c.spectral_gap) : "nan", format_double(c.min_eig_rho),
            format_double(c.top_fock_population), format_double(c.trace_error), format_double(c.hermiticity_error),
            format_bool(c.truncation_warning), format_bool(c.near_degenerate), std::to_string(r.branch_id),
            format_bool(r.converged), std::to_string(r.iterations), format_double(r.residual)};
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
        out << '\n';
    }
    close_output(out, path);
}

void emit_plateaus(const ScanResult& result, const std::string& path)
{
    auto out = open_output(path);
    out << "pass\tplateau\tmu_b_start\tmu_b_end\tplateau_mu\tplateau_n_ph\n";
    for (const auto& pp : result.plateaus) {
        for (std::size_t i = 0; i < pp.regions.size(); ++i) {
            const auto& r = pp.regions[i];
            out << to_string(pp.pass) << '\t' << i << '\t' << format_double(r.mu_b_start) << '\t'
                << format_double(r.mu_b_end) << '\t' << format_double(r.plateau_mu) << '\t'
                << format_double(r.plateau_n_ph) << '\n';
        }
    }
    close_output(out, path);
}

void emit_phase_diagram(const std::vector<PhaseBoundaryRow>& rows, const std::string& path)
{
    auto out = open_output(path);
    out << "z_tau\tmu_b_boundary_dissipative\tmu_b_boundary_equilibrium\tdissipative_edges\tequilibrium_edges\n";
    auto edges = [](const std::vector<BoundaryCrossing>& e) {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i)
            s += (i ? ";" : "") + format_double(e[i].mu_b) + (e[i].entering_coherent ? ":up" : ":down");
        return s.empty() ? std::string("-") : s;
    };
    for (const auto& r : rows) {
        out << format_double(r.z_tau) << '\t' << opt_double(r.mu_b_dissipative) << '\t'
            << opt_double(r.mu_b_equilibrium) << '\t' << edges(r.dissipative_edges) << '\t'
            << edges(r.equilibrium_edges) << '\n';
    }
    close_output(out, path);
}

void emit_kappa_scan(const std::vector<KappaRow>& rows, const std::string& path)
{
    auto out = open_output(path);
    out << "kappa\tn_max\tmu_b_first_detected\tmu_b_first_gs_estimate\tmu_b_first_closed_form\tpoints\tconverged\tnote\n";
    for (const auto& r : rows) {
        out << format_double(r.kappa) << '\t' << r.n_max << '\t' << opt_double(r.mu_b_first_detected) << '\t'
            << opt_double(r.mu_b_first_gs) << '\t' << format_double(r.mu_b_first_closed) << '\t' << r.points
            << '\t' << format_bool(r.converged) << '\t' << (r.note.empty() ? "-" : r.note) << '\n';
    }
    close_output(out, path);
}

std::vector<std::string> emit_scan_plot_data(const ScanResult& result, const std::string& prefix)
{
    std::vector<std::string> paths;
    for (const auto& pp : result.plateaus) {
        std::vector<std::vector<double>> a, b, c;
        for (const auto& s : scan_samples(result.rows, pp.pass)) {
            const auto& o = s.observables;
            a.push_back({s.mu_b, s.mf.mu, o.n_ph});
            b.push_back({s.mu_b, o.j_tls_in, o.j_tls_out, o.j_ph_out});
            c.push_back({s.mu_b, o.delta_mu, o.gaps[0], o.gaps[1], o.gaps[2]});
        }
        const std::string stem = prefix + "." + to_string(pp.pass);
        write_xy(stem + ".mean_field.tsv", {"mu_b", "mu", "n_ph"}, a);
        write_xy(stem + ".currents.tsv", {"mu_b", "j_tls_in", "j_tls_out", "j_ph_out"}, b);
        write_xy(stem + ".gaps.tsv", {"mu_b", "delta_mu", "gap_10", "gap_21", "gap_32"}, c);
        for (const char* f : {".mean_field.tsv", ".currents.tsv", ".gaps.tsv"}) paths.push_back(stem + f);
    }
    return paths;
}

std::vector<std::string> emit_phase_plot_data(const std::vector<PhaseBoundaryRow>& rows, const ModelParams& base,
                                              const std::string& prefix)
{
    std::vector<std::vector<double>> xy, edges;
    for (const auto& r : rows) {
        xy.push_back({r.z_tau, r.mu_b_dissipative.value_or(kNaN), r.mu_b_equilibrium.value_or(kNaN),
                      base.omega0 - r.z_tau});
        for (const auto& e : r.dissipative_edges) edges.push_back({r.z_tau, e.mu_b, 0.0, e.entering_coherent ? 1.0 : -1.0});
        for (const auto& e : r.equilibrium_edges) edges.push_back({r.z_tau, e.mu_b, 1.0, e.entering_coherent ? 1.0 : -1.0});
    }
    const std::string a = prefix + ".boundary.tsv", b = prefix + ".boundary_edges.tsv";
    write_xy(a, {"z_tau", "mu_b_dissipative", "mu_b_equilibrium", "unstable_line"}, xy);
    write_xy(b, {"z_tau", "mu_b", "equilibrium", "direction"}, edges);
    return {a, b};
}

std::vector<std::string> emit_kappa_plot_data(const std::vector<KappaRow>& rows, const std::string& prefix)
{
    std::vector<std::vector<double>> xy;
    for (const auto& r : rows)
        xy.push_back({r.kappa, r.mu_b_first_detected.value_or(kNaN), r.mu_b_first_gs.value_or(kNaN),
                      r.mu_b_first_closed});
    const std::string p = prefix + ".onset.tsv";
    write_xy(p, {"kappa", "detected", "gs_estimate", "closed_form"}, xy);
    return {p};
}

std::string write_manifest(const ResolvedConfig& cfg, const RunSummary& summary, const std::string& output)
{
    nlohmann::ordered_json m;
    m["code_version"] = code_version();
    m["precedence"] = "flags > config > defaults";
    nlohmann::ordered_json settings;
    for (const auto& k : config_keys()) {
        const auto src = cfg.sources.find(k);
        settings[k] = {{"value", get_setting(cfg.spec, k)},
                       {"source", src == cfg.sources.end() ? "default" : src->second}};
    }
    m["settings"] = settings;
    m["tolerances"] = {{"self_consistency", cfg.spec.sc.tol},
                       {"plateau_mu", cfg.spec.plateau_tol_mu},
                       {"plateau_n_ph", cfg.spec.plateau_tol_nph},
                       {"plateau_min_steps", cfg.spec.plateau_min_steps},
                       {"boundary", cfg.spec.boundary_tol},
                       {"degeneracy", kDefaultDegeneracyTol}};
    m["rows"] = summary.rows;
    m["unconverged"] = summary.unconverged;
    m["files"] = summary.files;
    const std::string path = output + ".manifest.json";
    auto out = open_output(path);
    out << m.dump(2) << '\n';
    close_output(out, path);
    return path;
}

} // namespace ccqed
