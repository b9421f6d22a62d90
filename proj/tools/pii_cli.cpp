// Command-line surface: identity suites, trajectories, total integrals and
// parameter sweeps, with deterministic CSV/JSON output.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pii/identity_suite.hpp"
#include "pii/monodromy.hpp"
#include "pii/pii_solver.hpp"
#include "pii/total_integral.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;

// Fixed 17-significant-digit formatting; '.' decimal separator, no locale.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::optional<pii::Complex> try_parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) return std::nullopt;

    auto parse_real = [](const std::string& t, double& out) {
        if (t.empty()) return false;
        char* end = nullptr;
        out = std::strtod(t.c_str(), &end);
        return end == t.c_str() + t.size();
    };
    auto parse_imag_body = [&](const std::string& t, double& out) {
        if (t == "" || t == "+") {
            out = 1.0;
            return true;
        }
        if (t == "-") {
            out = -1.0;
            return true;
        }
        return parse_real(t, out);
    };

    bool has_i = s.back() == 'i' || s.back() == 'I';
    if (!has_i) {
        double re;
        if (!parse_real(s, re)) return std::nullopt;
        return pii::Complex(re, 0.0);
    }
    std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is neither leading nor an exponent sign
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') &&
            body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    double re = 0.0, im = 0.0;
    if (split == std::string::npos) {
        if (!parse_imag_body(body, im)) return std::nullopt;
        return pii::Complex(0.0, im);
    }
    if (!parse_real(body.substr(0, split), re)) return std::nullopt;
    if (!parse_imag_body(body.substr(split), im)) return std::nullopt;
    return pii::Complex(re, im);
}

pii::Complex parse_complex_flag(const std::string& raw, const std::string& flag) {
    auto v = try_parse_complex(raw);
    if (!v)
        throw CLI::ValidationError(flag, "cannot parse complex literal '" + raw + "'");
    return *v;
}

std::vector<pii::Complex> parse_complex_list(const std::string& raw, const std::string& flag) {
    std::vector<pii::Complex> out;
    std::stringstream ss(raw);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_complex_flag(tok, flag));
    if (out.empty()) throw CLI::ValidationError(flag, "empty list");
    return out;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

json complex_json(pii::Complex z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

struct CommonOpts {
    std::string format = "csv";
    std::string out_path;
    bool seed_report = false;
};

json provenance(const CommonOpts& c, const json& extra) {
    json p{{"version", kVersion}, {"format", c.format}};
    for (auto& [k, v] : extra.items()) p[k] = v;
    return p;
}

// --- verify-identities / parametrix-check -------------------------------

int run_identities(const std::vector<pii::IdentityReport>& reports, const CommonOpts& c,
                   const json& prov_extra) {
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    std::string payload;
    if (c.format == "json") {
        json rows = json::array();
        for (const auto& r : reports)
            rows.push_back({{"identity", r.name},
                            {"max_residual", r.max_residual},
                            {"tolerance", r.tolerance},
                            {"pass", r.pass}});
        json doc{{"identities", rows}, {"all_pass", all_pass}};
        if (c.seed_report) doc["provenance"] = provenance(c, prov_extra);
        payload = doc.dump(2) + "\n";
    } else {
        payload = "identity,max_residual,tolerance,pass\n";
        for (const auto& r : reports)
            payload += r.name + "," + fmt(r.max_residual) + "," + fmt(r.tolerance) + "," +
                       (r.pass ? "true" : "false") + "\n";
    }
    write_output(c.out_path, payload);
    return all_pass ? 0 : 2;
}

// --- integral -------------------------------------------------------------

struct CellOutcome {
    pii::Complex alpha, k;
    pii::IntegralResult result;
    double wall_time = 0.0;
    int exit_code = 0;
    std::string error;
};

CellOutcome run_cell(pii::Complex alpha, pii::Complex k, double xbase, int nsamples,
                     const pii::SolverConfig& cfg, double tol) {
    CellOutcome cell;
    cell.alpha = alpha;
    cell.k = k;
    auto t0 = std::chrono::steady_clock::now();
    try {
        pii::PIIProblem problem(alpha, k);
        cell.result = pii::period_averaged_total(problem, xbase, nsamples, cfg);
        cell.exit_code = cell.result.abs_error <= tol ? 0 : 1;
    } catch (const pii::unsupported_family_error& e) {
        cell.exit_code = 4;
        cell.error = e.what();
    } catch (const pii::numeric_error& e) {
        cell.exit_code = 5;
        cell.error = e.what();
    }
    cell.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cell;
}

json integral_json(const CellOutcome& cell) {
    json doc{{"alpha", complex_json(cell.alpha)},
             {"k", complex_json(cell.k)},
             {"family", pii::family_name(pii::classify_family(cell.alpha, cell.k))}};
    if (cell.exit_code == 0 || cell.exit_code == 1) {
        doc["X"] = cell.result.X;
        doc["raw"] = complex_json(cell.result.raw);
        doc["averaged"] = complex_json(cell.result.averaged);
        doc["predicted"] = complex_json(cell.result.predicted);
        doc["abs_error"] = cell.result.abs_error;
        doc["method"] = pii::totals_method_name(cell.result.method);
        doc["pass"] = cell.exit_code == 0;
    } else {
        doc["error"] = cell.error;
    }
    return doc;
}

std::string integral_csv_header() {
    return "alpha_re,alpha_im,k_re,k_im,family,X,raw_re,raw_im,averaged_re,averaged_im,"
           "predicted_re,predicted_im,abs_error,method\n";
}

std::string integral_csv_row(const CellOutcome& cell) {
    const auto& r = cell.result;
    std::string row = fmt(cell.alpha.real()) + "," + fmt(cell.alpha.imag()) + "," +
                      fmt(cell.k.real()) + "," + fmt(cell.k.imag()) + "," +
                      pii::family_name(pii::classify_family(cell.alpha, cell.k)) + ",";
    row += fmt(r.X) + "," + fmt(r.raw.real()) + "," + fmt(r.raw.imag()) + "," +
           fmt(r.averaged.real()) + "," + fmt(r.averaged.imag()) + "," +
           fmt(r.predicted.real()) + "," + fmt(r.predicted.imag()) + "," +
           fmt(r.abs_error) + "," + pii::totals_method_name(r.method) + "\n";
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ablowitz-Segur total integrals for the inhomogeneous Painleve II equation"};
    app.require_subcommand(1);

    std::string alpha_str = "0", k_str = "0";
    std::string alphas_str, ks_str;
    double xbase = 150.0;
    int nsamples = 8;
    double anchor_L = 12.0;
    double tol = 2e-3;
    double xmin = -10.0, dx = 0.1;
    int jobs = 1;
    std::string grid = "default";
    CommonOpts common;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", common.out_path, "output path (default stdout)");
        cmd->add_flag("--seed-report", common.seed_report,
                      "attach a provenance block to JSON output");
    };

    CLI::App* verify = app.add_subcommand("verify-identities",
                                          "run the connection/parametrix identity suite");
    verify->add_option("--grid", grid, "grid size")->check(CLI::IsMember({"minimal", "default", "dense"}));
    CLI::Option* verify_tol = verify->add_option("--tol", tol, "override every identity tolerance");
    add_common(verify);

    CLI::App* pcheck = app.add_subcommand("parametrix-check",
                                          "run only the local-model identity subset");
    pcheck->add_option("--grid", grid, "grid size")->check(CLI::IsMember({"minimal", "default", "dense"}));
    CLI::Option* pcheck_tol = pcheck->add_option("--tol", tol, "override every identity tolerance");
    add_common(pcheck);

    CLI::App* integral = app.add_subcommand("integral", "compute one total integral");
    integral->add_option("--alpha", alpha_str, "alpha (complex literal, e.g. 0.25 or 0.3i)");
    integral->add_option("--k", k_str, "k (complex literal)");
    integral->add_option("--xbase", xbase, "base truncation radius");
    integral->add_option("--nsamples", nsamples, "phase samples per period");
    integral->add_option("--anchor-L", anchor_L, "anchor abscissa");
    integral->add_option("--tol", tol, "acceptance tolerance on abs_error");
    add_common(integral);

    CLI::App* solve = app.add_subcommand("solve", "emit trajectory samples on a uniform grid");
    solve->add_option("--alpha", alpha_str, "alpha (complex literal)");
    solve->add_option("--k", k_str, "k (complex literal)");
    solve->add_option("--xmin", xmin, "left end of the sample grid");
    solve->add_option("--dx", dx, "grid spacing")->check(CLI::PositiveNumber);
    solve->add_option("--anchor-L", anchor_L, "anchor abscissa");
    add_common(solve);

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate a parameter grid");
    sweep->add_option("--alphas", alphas_str, "comma-separated alpha values")->required();
    sweep->add_option("--ks", ks_str, "comma-separated k values")->required();
    sweep->add_option("--xbase", xbase, "base truncation radius");
    sweep->add_option("--nsamples", nsamples, "phase samples per period");
    sweep->add_option("--anchor-L", anchor_L, "anchor abscissa");
    sweep->add_option("--tol", tol, "acceptance tolerance on abs_error");
    sweep->add_option("--jobs", jobs, "concurrent cells")->check(CLI::PositiveNumber);
    add_common(sweep);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed() || pcheck->parsed()) {
            bool subset = pcheck->parsed();
            auto kind = pii::parse_grid_kind(grid);
            std::optional<double> tol_override;
            if ((subset ? pcheck_tol : verify_tol)->count() > 0) tol_override = tol;
            auto reports = subset ? pii::run_parametrix_suite(*kind, tol_override)
                                  : pii::run_identity_suite(*kind, tol_override);
            json extra{{"grid", grid}};
            if (tol_override) extra["tol_override"] = *tol_override;
            return run_identities(reports, common, extra);
        }

        if (integral->parsed()) {
            pii::Complex alpha = parse_complex_flag(alpha_str, "--alpha");
            pii::Complex k = parse_complex_flag(k_str, "--k");
            pii::SolverConfig cfg;
            cfg.anchor_L = anchor_L;
            CellOutcome cell = run_cell(alpha, k, xbase, nsamples, cfg, tol);
            if (cell.exit_code >= 4) {
                std::cerr << "error: " << cell.error << "\n";
                return cell.exit_code;
            }
            std::string payload;
            if (common.format == "json") {
                json doc = integral_json(cell);
                if (common.seed_report)
                    doc["provenance"] = provenance(
                        common, json{{"xbase", xbase},
                                     {"nsamples", nsamples},
                                     {"anchor_L", anchor_L},
                                     {"tol", tol},
                                     {"rel_tol", cfg.rel_tol}});
                payload = doc.dump(2) + "\n";
            } else {
                payload = integral_csv_header() + integral_csv_row(cell);
            }
            write_output(common.out_path, payload);
            return cell.exit_code;
        }

        if (solve->parsed()) {
            pii::Complex alpha = parse_complex_flag(alpha_str, "--alpha");
            pii::Complex k = parse_complex_flag(k_str, "--k");
            pii::SolverConfig cfg;
            cfg.anchor_L = anchor_L;
            try {
                pii::PIIProblem problem(alpha, k);
                pii::Trajectory traj = pii::integrate(problem, xmin - 1e-9, cfg);
                std::string payload;
                json rows = json::array();
                if (common.format == "csv") payload = "x,u_re,u_im,up_re,up_im\n";
                for (double x = xmin; x <= traj.x_max() + 1e-12; x += dx) {
                    double xe = std::min(x, traj.x_max());
                    pii::Complex u = traj.value(xe), up = traj.derivative(xe);
                    if (common.format == "csv") {
                        payload += fmt(xe) + "," + fmt(u.real()) + "," + fmt(u.imag()) + "," +
                                   fmt(up.real()) + "," + fmt(up.imag()) + "\n";
                    } else {
                        rows.push_back({xe, u.real(), u.imag(), up.real(), up.imag()});
                    }
                }
                if (common.format == "json") {
                    json doc{{"alpha", complex_json(alpha)},
                             {"k", complex_json(k)},
                             {"columns", {"x", "u_re", "u_im", "up_re", "up_im"}},
                             {"samples", rows}};
                    if (common.seed_report)
                        doc["provenance"] = provenance(
                            common, json{{"anchor_L", anchor_L}, {"rel_tol", cfg.rel_tol}});
                    payload = doc.dump(2) + "\n";
                }
                write_output(common.out_path, payload);
                return 0;
            } catch (const pii::unsupported_family_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 4;
            } catch (const pii::numeric_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 5;
            }
        }

        if (sweep->parsed()) {
            auto alphas = parse_complex_list(alphas_str, "--alphas");
            auto ks = parse_complex_list(ks_str, "--ks");
            pii::SolverConfig cfg;
            cfg.anchor_L = anchor_L;
            std::vector<std::pair<pii::Complex, pii::Complex>> cells;
            for (auto a : alphas)
                for (auto k : ks) cells.emplace_back(a, k);
            std::vector<CellOutcome> outcomes(cells.size());

            std::atomic<size_t> next{0};
            auto worker = [&] {
                for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                    outcomes[i] = run_cell(cells[i].first, cells[i].second, xbase, nsamples,
                                           cfg, tol);
            };
            int nthreads = std::min<int>(jobs, static_cast<int>(cells.size()));
            std::vector<std::thread> pool;
            for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
            worker();
            for (auto& th : pool) th.join();

            int exit_code = 0;
            std::string payload;
            json rows = json::array();
            if (common.format == "csv")
                payload =
                    "alpha_re,alpha_im,k_re,k_im,predicted_re,predicted_im,averaged_re,"
                    "averaged_im,abs_error,X,wall_time\n";
            for (const auto& cell : outcomes) {
                exit_code = std::max(exit_code, cell.exit_code);
                if (common.format == "csv") {
                    const auto& r = cell.result;
                    payload += fmt(cell.alpha.real()) + "," + fmt(cell.alpha.imag()) + "," +
                               fmt(cell.k.real()) + "," + fmt(cell.k.imag()) + "," +
                               fmt(r.predicted.real()) + "," + fmt(r.predicted.imag()) + "," +
                               fmt(r.averaged.real()) + "," + fmt(r.averaged.imag()) + "," +
                               fmt(r.abs_error) + "," + fmt(r.X) + "," + fmt(cell.wall_time) +
                               "\n";
                } else {
                    json row = integral_json(cell);
                    row["wall_time"] = cell.wall_time;
                    rows.push_back(row);
                }
            }
            if (common.format == "json") {
                json doc{{"rows", rows}, {"all_pass", exit_code == 0}};
                if (common.seed_report)
                    doc["provenance"] = provenance(
                        common, json{{"xbase", xbase},
                                     {"nsamples", nsamples},
                                     {"anchor_L", anchor_L},
                                     {"tol", tol},
                                     {"jobs", jobs},
                                     {"rel_tol", cfg.rel_tol}});
                payload = doc.dump(2) + "\n";
            }
            write_output(common.out_path, payload);
            return exit_code;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const pii::numeric_error& e) {
        std::cerr << "internal numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
