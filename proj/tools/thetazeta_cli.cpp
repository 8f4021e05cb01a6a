#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <thetazeta/counterexample.hpp>
#include <thetazeta/prime_series.hpp>
#include <thetazeta/prime_table.hpp>
#include <thetazeta/theta.hpp>
#include <thetazeta/zeta.hpp>

namespace tz = thetazeta;
using nlohmann::json;

namespace {

// exit codes: 0 success, 1 tolerance failure, 2 usage/domain error, 3 resource
constexpr int kOk = 0, kTolFail = 1, kUsage = 2, kResource = 3;

struct RunConfig {
    int digits = 15;
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    double prime_limit = 1e6;
    double T = 0.0;  // 0 = take the owning module's default
    int N = 12;
    double epsilon = 0.1;
    std::string b_grid = "0:10:0.5";
    std::string output_path;  // empty = stdout
    std::string output_format = "csv";
    std::string cache_path = "thetazeta_primes.cache";

    tz::PrecisionConfig precision() const {
        tz::PrecisionConfig c;
        c.digits = digits;
        c.abs_tol = abs_tol;
        c.rel_tol = rel_tol;
        return c;
    }
};

// One output cell: CSV text (fixed formatting at `digits`) plus the JSON value.
struct Cell {
    std::string text;
    json value;
};

Cell cell(const std::string& s) { return {s, s}; }
Cell cell(bool b) { return {b ? "true" : "false", b}; }
Cell cell(int v) { return {std::to_string(v), v}; }
Cell cell(std::uint64_t v) { return {std::to_string(v), v}; }

template <class R>
Cell cell(const R& v, int digits) {
    return {tz::format_real(v, digits), tz::num::to_double<R>(v)};
}

using Row = std::vector<std::pair<std::string, Cell>>;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string provenance(const RunConfig& rc, const std::string& cmd, const std::string& extra) {
    std::string s = "# command=" + cmd + " digits=" + std::to_string(rc.digits) +
                    " abs_tol=" + tz::format_real(rc.abs_tol, 3) +
                    " rel_tol=" + tz::format_real(rc.rel_tol, 3) +
                    " prime_limit=" + std::to_string(static_cast<std::uint64_t>(rc.prime_limit)) +
                    " T=" + tz::format_real(rc.T, 6) + " N=" + std::to_string(rc.N) +
                    " epsilon=" + tz::format_real(rc.epsilon, 6) + " b_grid=" + rc.b_grid +
                    " format=" + rc.output_format +
                    " out=" + (rc.output_path.empty() ? "-" : rc.output_path) +
                    " cache=" + rc.cache_path;
    if (!extra.empty()) s += " " + extra;
    return s;
}

json config_json(const RunConfig& rc, const std::string& cmd) {
    return json{{"command", cmd},
                {"digits", rc.digits},
                {"abs_tol", rc.abs_tol},
                {"rel_tol", rc.rel_tol},
                {"prime_limit", static_cast<std::uint64_t>(rc.prime_limit)},
                {"T", rc.T},
                {"N", rc.N},
                {"epsilon", rc.epsilon},
                {"b_grid", rc.b_grid},
                {"format", rc.output_format},
                {"out", rc.output_path.empty() ? "-" : rc.output_path},
                {"cache", rc.cache_path}};
}

// Renders rows in the selected format and writes to --out (or stdout).
// trailer becomes a final `#` comment line in CSV and `extra` keys in JSON.
void emit(const RunConfig& rc, const std::string& cmd, const std::vector<std::string>& columns,
          const std::vector<Row>& rows, const std::string& cmd_provenance = "",
          const std::string& trailer = "", const json& extra = json::object()) {
    std::string out;
    if (rc.output_format == "json") {
        json doc;
        doc["config"] = config_json(rc, cmd);
        if (!cmd_provenance.empty()) doc["config"]["args"] = cmd_provenance;
        json arr = json::array();
        for (const auto& row : rows) {
            json obj = json::object();
            for (const auto& [k, c] : row) obj[k] = c.value;
            arr.push_back(std::move(obj));
        }
        doc["rows"] = std::move(arr);
        for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
        out = doc.dump(2) + "\n";
    } else {
        out = provenance(rc, cmd, cmd_provenance) + "\n";
        for (std::size_t i = 0; i < columns.size(); ++i)
            out += (i ? "," : "") + columns[i];
        out += "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out += (i ? "," : "") + csv_escape(row[i].second.text);
            out += "\n";
        }
        if (!trailer.empty()) out += "# " + trailer + "\n";
    }
    if (rc.output_path.empty()) {
        std::cout << out;
        return;
    }
    std::ofstream f(rc.output_path, std::ios::trunc);
    if (!f || !(f << out))
        throw tz::ResourceError("cannot write output file '" + rc.output_path + "'");
}

std::complex<double> parse_cplx(const std::string& s) {
    const auto bad = [&] { throw tz::ConfigError("bad complex literal '" + s + "' (want re[,im])"); };
    try {
        const auto comma = s.find(',');
        std::size_t pos = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(s, &pos);
            if (pos != s.size()) bad();
            return {re, 0.0};
        }
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        const double re = std::stod(a, &pos);
        if (pos != a.size()) bad();
        const double im = std::stod(b, &pos);
        if (pos != b.size()) bad();
        return {re, im};
    } catch (const tz::Error&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return {};
}

std::vector<double> parse_grid(const std::string& s) {
    const auto bad = [&] {
        throw tz::ConfigError("bad grid '" + s + "' (want a single value or min:max:step with step > 0)");
    };
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (auto p = s.find(':'); p != std::string::npos; p = s.find(':', start)) {
        parts.push_back(s.substr(start, p - start));
        start = p + 1;
    }
    parts.push_back(s.substr(start));
    const auto num = [&](const std::string& t) {
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(t, &pos);
        } catch (const std::exception&) {
            bad();
        }
        if (pos != t.size()) bad();
        return v;
    };
    if (parts.size() == 1) return {num(parts[0])};
    if (parts.size() != 3) bad();
    const double lo = num(parts[0]), hi = num(parts[1]), step = num(parts[2]);
    if (!(step > 0.0) || hi < lo) bad();
    std::vector<double> out;
    for (int k = 0;; ++k) {
        const double v = lo + k * step;
        if (v > hi + step * 1e-9) break;
        out.push_back(v);
    }
    return out;
}

tz::PrimeTable make_table(const RunConfig& rc) {
    if (rc.prime_limit < 2) throw tz::DomainError("--limit must be >= 2");
    return tz::generate_primes(static_cast<std::uint64_t>(rc.prime_limit));
}

// ---------------------------------------------------------------- primes ----

int cmd_primes(const RunConfig& rc) {
    if (rc.prime_limit < 2) {
        std::cerr << "primes: --limit must be >= 2\n";
        return kUsage;
    }
    const auto limit = static_cast<std::uint64_t>(rc.prime_limit);
    std::uint64_t pi_val = 0;
    bool answered = false;
    if (std::filesystem::exists(rc.cache_path)) {
        const auto shell = tz::load_checkpoints(rc.cache_path);
        if (shell.limit >= limit) {
            std::cerr << "cache: loaded " << rc.cache_path << " (limit=" << shell.limit << ")\n";
            for (const auto& [t, c] : shell.checkpoints)
                if (t == limit) {
                    pi_val = c;
                    answered = true;
                    break;
                }
            if (!answered) {  // interior, off-checkpoint query; cache stays as-is
                pi_val = tz::generate_primes(limit).primes.size();
                answered = true;
            }
        }
    }
    if (!answered) {
        const auto table = tz::generate_primes(limit);
        pi_val = table.primes.size();
        tz::save_table(table, rc.cache_path);
        std::cerr << "cache: sieved to " << limit << ", wrote " << rc.cache_path << "\n";
    }
    std::cout << "limit=" << limit << " pi=" << pi_val << "\n";
    return kOk;
}

// ------------------------------------------------------------ identities ----

template <class R>
int cmd_identities(const RunConfig& rc, int eq, const std::vector<std::string>& z_raw,
                   const std::string& grid, double tol) {
    if (eq < 5 || eq > 7) throw tz::ConfigError("--eq must be 5, 6, or 7");
    if (!grid.empty() && grid != "default")
        throw tz::ConfigError("--grid: only 'default' is available");

    std::vector<std::complex<double>> zs;
    if (!z_raw.empty()) {
        for (const auto& s : z_raw) zs.push_back(parse_cplx(s));
    } else if (eq == 5) {
        for (double re : {1.5, 1.875, 2.25, 2.625, 3.0})
            for (double im : {-2.0, -1.0, 0.0, 1.0, 2.0}) zs.emplace_back(re, im);
    } else if (eq == 6) {
        zs = {{2, 0}, {2, 1}};
    } else {
        zs = {{2, 0}, {3, 0}, {1.5, 2}};
    }

    const auto cfg = rc.precision();
    const auto table = make_table(rc);
    std::vector<tz::IdentityReport<R>> reports;
    if (eq == 7) {
        std::vector<tz::Cplx<R>> grid_z;
        for (const auto& z : zs) grid_z.emplace_back(R(z.real()), R(z.imag()));
        reports = tz::check_eq7_holomorphy<R>(grid_z, table, cfg, rc.T);
    } else {
        for (const auto& z : zs) {
            const tz::Cplx<R> zc(R(z.real()), R(z.imag()));
            reports.push_back(eq == 5 ? tz::check_eq5<R>(zc, table, cfg)
                                      : tz::check_eq6<R>(zc, table, cfg, rc.T));
        }
    }

    std::vector<Row> rows;
    double worst = 0.0;
    for (const auto& r : reports) {
        worst = std::max(worst, r.residual);
        rows.push_back({{"identity", cell(r.identity_id)},
                        {"z_re", cell(r.z.real(), rc.digits)},
                        {"z_im", cell(r.z.imag(), rc.digits)},
                        {"lhs_re", cell(r.lhs.real(), rc.digits)},
                        {"lhs_im", cell(r.lhs.imag(), rc.digits)},
                        {"rhs_re", cell(r.rhs.real(), rc.digits)},
                        {"rhs_im", cell(r.rhs.imag(), rc.digits)},
                        {"residual", cell(r.residual, rc.digits)},
                        {"prime_limit", cell(static_cast<std::uint64_t>(r.prime_limit))},
                        {"integral_T", cell(r.integral_T, rc.digits)},
                        {"notes", cell(r.notes)}});
    }
    emit(rc, "identities",
         {"identity", "z_re", "z_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "residual",
          "prime_limit", "integral_T", "notes"},
         rows, "eq=" + std::to_string(eq) + " tol=" + tz::format_real(tol, 3));
    if (worst >= tol) {
        std::cerr << "identities: worst residual " << tz::format_real(worst, 3)
                  << " exceeds tol " << tz::format_real(tol, 3) << "\n";
        return kTolFail;
    }
    return kOk;
}

// ------------------------------------------------------------------ scan ----

int run_calibration(double& rel_err, std::string& summary) {
    const tz::CounterexampleSpec spec{0.2, 12.0};
    const std::complex<double> center(2, 0);
    const double truth = tz::ce_expansion_ground_truth<double>(center, spec);
    const auto exp20 = tz::ce_taylor_expansion<double>(center, 20, spec);
    const auto est = tz::estimate_radius(exp20, tz::RadiusMethod::regression);
    rel_err = std::abs(est.extrapolated_radius - truth) / truth;
    summary = "calibration: center=2 N=20 gamma=0.2 truth=" + tz::format_real(truth, 9) +
              " estimate=" + tz::format_real(est.extrapolated_radius, 9) +
              " rel_err=" + tz::format_real(rel_err, 3) + " method=regression";
    return rel_err <= 0.05 ? kOk : kTolFail;
}

template <class R>
int cmd_scan(const RunConfig& rc, const std::string& method_str, bool calibrate) {
    const auto method = tz::parse_radius_method(method_str);
    const auto bs = parse_grid(rc.b_grid);
    if (bs.empty()) throw tz::ConfigError("--b grid is empty");

    std::string cal_summary;
    if (calibrate) {
        double rel_err = 0.0;
        const int rcode = run_calibration(rel_err, cal_summary);
        std::cerr << cal_summary << "\n";
        if (rcode != kOk) {
            std::cerr << "scan: radius-estimator calibration missed 5%; refusing the theta scan\n";
            return kTolFail;
        }
    }

    const auto cfg = rc.precision();
    const auto table = make_table(rc);
    const auto points = tz::task1_scan<R>(rc.epsilon, bs, rc.N, table, cfg, rc.T, method);

    std::vector<Row> rows;
    for (const auto& p : points) {
        if (!p.ok) std::cerr << "scan: b=" << p.b << " failed: " << p.error << "\n";
        const double radius =
            p.ok ? p.estimate.extrapolated_radius : std::numeric_limits<double>::quiet_NaN();
        rows.push_back({{"b", cell(p.b, rc.digits)},
                        {"epsilon", cell(p.epsilon, rc.digits)},
                        {"N_used", cell(p.N_used)},
                        {"radius_estimate", cell(radius, rc.digits)},
                        {"method", cell(p.ok ? p.estimate.method : tz::radius_method_name(method))},
                        {"noise_floor_order", cell(p.noise_floor_order)},
                        {"T", cell(p.T, rc.digits)},
                        {"prime_limit", cell(static_cast<std::uint64_t>(p.prime_limit))},
                        {"digits", cell(p.digits)},
                        {"inside_3pi", cell(p.inside_3pi)},
                        {"inside_4pi", cell(p.inside_4pi)}});
    }
    json extra = json::object();
    if (!cal_summary.empty()) extra["calibration"] = cal_summary;
    emit(rc, "scan",
         {"b", "epsilon", "N_used", "radius_estimate", "method", "noise_floor_order", "T",
          "prime_limit", "digits", "inside_3pi", "inside_4pi"},
         rows, "method=" + method_str + (calibrate ? " calibrate=true" : ""), cal_summary, extra);
    return kOk;
}

// ----------------------------------------------------------------- zeros ----

template <class R>
int cmd_zeros(const RunConfig& rc, double max_im) {
    // §1(d) list, as printed (three decimals; the sixth entry is off by 0.349)
    static const double listed[] = {14.134, 21.022, 25.010, 30.424, 32.935,
                                    37.935, 40.918, 43.327, 48.005, 49.773};
    const auto cfg = rc.precision();
    std::vector<Row> rows;
    for (const double y : listed) {
        if (y > max_im) continue;
        const R refined = tz::refine_zero<R>(R(y), cfg);
        const auto zeval = tz::zeta<R>(tz::Cplx<R>(R(1) / 2, refined), cfg);
        const double az = tz::num::to_double<R>(tz::num::cabs(zeval.value));
        const bool flagged = std::abs(y - tz::num::to_double<R>(refined)) > 0.01;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", y);
        rows.push_back({{"listed_value", cell(std::string(buf))},
                        {"refined_value", cell(refined, rc.digits)},
                        {"abs_zeta", cell(az, rc.digits)},
                        {"flagged", cell(flagged)}});
    }
    emit(rc, "zeros",
         {"listed_value", "refined_value", "abs_zeta", "flagged"}, rows,
         "max_im=" + tz::format_real(max_im, 6));
    return kOk;
}

// -------------------------------------------------------- counterexample ----

template <class R>
int cmd_counterexample(const RunConfig& rc, double gamma, double frequency, bool near_pole,
                       int cal_N) {
    const tz::CounterexampleSpec spec{gamma, frequency};
    spec.validate();
    const auto cfg = rc.precision();

    std::vector<Row> rows;
    double max_diff = 0.0;
    const auto add_row = [&](const std::complex<double>& z) {
        const tz::Cplx<R> zc(R(z.real()), R(z.imag()));
        Row row{{"z_re", cell(z.real(), rc.digits)}, {"z_im", cell(z.imag(), rc.digits)}};
        std::string note;
        try {
            const auto closed = tz::ce_phi_closed<R>(zc, spec);
            const auto numeric = tz::ce_phi_numeric<R>(zc, spec, cfg, rc.T);
            const double diff = tz::num::to_double<R>(tz::num::cabs(numeric.value - closed));
            max_diff = std::max(max_diff, diff);
            row.push_back({"closed_re", cell(closed.real(), rc.digits)});
            row.push_back({"closed_im", cell(closed.imag(), rc.digits)});
            row.push_back({"numeric_re", cell(numeric.value.real(), rc.digits)});
            row.push_back({"numeric_im", cell(numeric.value.imag(), rc.digits)});
            row.push_back({"abs_diff", cell(diff, rc.digits)});
            row.push_back({"error_bound", cell(numeric.error_bound, rc.digits)});
        } catch (const tz::Error& e) {
            note = e.what();
            const double nan = std::numeric_limits<double>::quiet_NaN();
            for (const char* k : {"closed_re", "closed_im", "numeric_re", "numeric_im",
                                  "abs_diff", "error_bound"})
                row.push_back({k, cell(nan, rc.digits)});
        }
        row.push_back({"note", cell(note)});
        rows.push_back(std::move(row));
    };

    const double re_lo = std::max(1.1, 1.0 - gamma + 0.05);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            add_row({re_lo + (3.0 - re_lo) * i / 3.0, -5.0 + 10.0 * j / 3.0});
    if (near_pole) add_row(spec.pole_pair()[0]);  // expected-error row

    const std::complex<double> center(2, 0);
    const double truth = tz::ce_expansion_ground_truth<double>(center, spec);
    const auto est =
        tz::estimate_radius(tz::ce_taylor_expansion<double>(center, cal_N, spec),
                            tz::RadiusMethod::regression);
    const double rel_err = std::abs(est.extrapolated_radius - truth) / truth;
    const std::string cal = "calibration: center=2 N=" + std::to_string(cal_N) +
                            " truth=" + tz::format_real(truth, 9) +
                            " estimate=" + tz::format_real(est.extrapolated_radius, 9) +
                            " rel_err=" + tz::format_real(rel_err, 3) + " method=regression";
    const json extra{{"calibration",
                      {{"center_re", 2.0},
                       {"N", cal_N},
                       {"truth", truth},
                       {"estimate", est.extrapolated_radius},
                       {"rel_err", rel_err},
                       {"method", "regression"}}}};
    emit(rc, "counterexample",
         {"z_re", "z_im", "closed_re", "closed_im", "numeric_re", "numeric_im", "abs_diff",
          "error_bound", "note"},
         rows,
         "gamma=" + tz::format_real(gamma, 6) + " frequency=" + tz::format_real(frequency, 6) +
             (near_pole ? " near_pole=true" : ""),
         cal, extra);

    if (max_diff >= 1e-8) {
        std::cerr << "counterexample: closed-vs-numeric max residual "
                  << tz::format_real(max_diff, 3) << " exceeds 1e-8\n";
        return kTolFail;
    }
    if (rel_err > 0.05) {
        std::cerr << "counterexample: radius calibration off by " << tz::format_real(rel_err, 3)
                  << " (> 5%)\n";
        return kTolFail;
    }
    return kOk;
}

// ----------------------------------------------------------------- theta ----

template <class R>
int cmd_theta(const RunConfig& rc, const std::string& z_str, int deriv,
              const std::string& model_str) {
    const auto z = parse_cplx(z_str);
    const auto model = tz::parse_tail_model(model_str);
    const auto cfg = rc.precision();
    const auto table = make_table(rc);
    const tz::Cplx<R> zc(R(z.real()), R(z.imag()));
    const auto res = deriv == 0
                         ? tz::theta<R>(zc, table, cfg, rc.T, model)
                         : tz::theta_derivative<R>(zc, deriv, table, cfg, rc.T, model);
    std::vector<Row> rows{{{"z_re", cell(z.real(), rc.digits)},
                           {"z_im", cell(z.imag(), rc.digits)},
                           {"n", cell(deriv)},
                           {"theta_re", cell(res.value.real(), rc.digits)},
                           {"theta_im", cell(res.value.imag(), rc.digits)},
                           {"error_bound", cell(res.error_bound, rc.digits)},
                           {"truncation_T", cell(res.truncation_T, rc.digits)},
                           {"tail_model", cell(res.tail_model)},
                           {"prime_limit", cell(static_cast<std::uint64_t>(table.limit))},
                           {"digits", cell(rc.digits)}}};
    emit(rc, "theta",
         {"z_re", "z_im", "n", "theta_re", "theta_im", "error_bound", "truncation_T",
          "tail_model", "prime_limit", "digits"},
         rows, "z=" + z_str + " deriv=" + std::to_string(deriv) + " model=" + model_str);
    return kOk;
}

template <class Fn>
int with_tier(const RunConfig& rc, Fn&& fn) {
    rc.precision().validate();
    if (rc.precision().use_double()) return fn(double{});
    return fn(tz::BigReal{});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for the theta(z) prime integral and the zeta identities"};
    app.require_subcommand(1);

    RunConfig rc;
    app.add_option("--digits", rc.digits, "working precision in decimal digits")
        ->capture_default_str();
    app.add_option("--abs-tol", rc.abs_tol, "absolute tolerance knob")->capture_default_str();
    app.add_option("--rel-tol", rc.rel_tol, "relative tolerance knob")->capture_default_str();
    app.add_option("--cache", rc.cache_path, "prime cache path")
        ->envname("THETAZETA_CACHE")
        ->capture_default_str();
    app.add_option("--out", rc.output_path, "output file (default: stdout)");
    app.add_option("--format", rc.output_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* primes = app.add_subcommand("primes", "build or extend the prime cache");
    primes->fallthrough();
    primes->add_option("--limit", rc.prime_limit, "sieve limit")->capture_default_str();

    auto* identities = app.add_subcommand("identities", "check identities (5), (6), (7)");
    identities->fallthrough();
    int eq = 0;
    std::vector<std::string> z_raw;
    std::string grid;
    double tol = 1e-4;
    identities->add_option("--eq", eq, "identity number: 5, 6, or 7")->required();
    identities->add_option("--z", z_raw, "evaluation point re[,im] (repeatable)");
    identities->add_option("--grid", grid, "'default' for the built-in grid");
    identities->add_option("--tol", tol, "residual tolerance for exit status")
        ->capture_default_str();
    identities->add_option("--limit", rc.prime_limit, "prime table limit")->capture_default_str();
    identities->add_option("--T", rc.T, "integral truncation (0 = table limit)");

    auto* scan = app.add_subcommand("scan", "Task 1 radius scan over a = 1 + eps + i b");
    scan->fallthrough();
    std::string method = "max_tail_root";
    bool calibrate = false;
    scan->add_option("--eps,--epsilon", rc.epsilon, "strip offset eps > 0")->capture_default_str();
    scan->add_option("--b", rc.b_grid, "b value or min:max:step (inclusive)")
        ->capture_default_str();
    scan->add_option("--N", rc.N, "Taylor order")->capture_default_str();
    scan->add_option("--T", rc.T, "integral truncation (0 = table limit)");
    scan->add_option("--limit", rc.prime_limit, "prime table limit")->capture_default_str();
    scan->add_option("--method", method, "max_tail_root | regression")->capture_default_str();
    scan->add_flag("--calibrate", calibrate, "run the radius-estimator calibration gate first");

    auto* zeros = app.add_subcommand("zeros", "refine the listed nontrivial zero ordinates");
    zeros->fallthrough();
    double max_im = 60.0;
    zeros->add_option("--max-im", max_im, "refine listed ordinates up to this height")
        ->capture_default_str();

    auto* ce = app.add_subcommand("counterexample", "closed-form vs numeric table and calibration");
    ce->fallthrough();
    double gamma = 0.2, frequency = 12.0;
    bool near_pole = false;
    int cal_N = 20;
    ce->add_option("--gamma", gamma, "damping exponent, gamma < 1/4")->capture_default_str();
    ce->add_option("--frequency", frequency, "oscillation frequency")->capture_default_str();
    ce->add_option("--N", cal_N, "calibration Taylor order")->capture_default_str();
    ce->add_option("--T", rc.T, "tau cap for the numeric transform (0 = tolerance-driven)");
    ce->add_flag("--near-pole", near_pole, "append an expected-error row at a pole");

    auto* theta = app.add_subcommand("theta", "evaluate theta(z) or a derivative directly");
    theta->fallthrough();
    std::string z_str, model = "model_a";
    int deriv = 0;
    theta->add_option("--z", z_str, "evaluation point re[,im]")->required();
    theta->add_option("--deriv", deriv, "derivative order n (0 = theta itself)")
        ->capture_default_str();
    theta->add_option("--T", rc.T, "integral truncation (0 = table limit)");
    theta->add_option("--limit", rc.prime_limit, "prime table limit")->capture_default_str();
    theta->add_option("--model", model, "tail model: model_a | model_b")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (*primes) return cmd_primes(rc);
        if (*identities)
            return with_tier(rc, [&](auto tier) {
                return cmd_identities<decltype(tier)>(rc, eq, z_raw, grid, tol);
            });
        if (*scan)
            return with_tier(rc, [&](auto tier) {
                return cmd_scan<decltype(tier)>(rc, method, calibrate);
            });
        if (*zeros)
            return with_tier(rc, [&](auto tier) { return cmd_zeros<decltype(tier)>(rc, max_im); });
        if (*ce)
            return with_tier(rc, [&](auto tier) {
                return cmd_counterexample<decltype(tier)>(rc, gamma, frequency, near_pole, cal_N);
            });
        if (*theta)
            return with_tier(rc, [&](auto tier) {
                return cmd_theta<decltype(tier)>(rc, z_str, deriv, model);
            });
        std::cerr << "no subcommand selected\n";
        return kUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const tz::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const tz::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const tz::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResource;
    } catch (const tz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kTolFail;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kResource;
    }
}
