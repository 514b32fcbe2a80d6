// polyberg: disc polynomials, weighted poly-Bergman kernels, and
// projections on the unit disc, with JSON/CSV reports.
//
// Subcommands: eval | gram | kernel | project | ledger
// Exit codes: 0 pass, 1 tolerance failure, 2 usage/config error.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "polyberg/io.hpp"
#include "polyberg/kernels.hpp"
#include "polyberg/ledger.hpp"
#include "polyberg/spaces.hpp"

using namespace polyberg;
using json = nlohmann::json;

namespace {

struct RunConfig {
    double gamma = 0.0;
    double tol = 1e-10;
    int radial_nodes = 64;
    int angular_nodes = 128;
    int trunc = 400;
    unsigned seed = 1;
    std::string format = "json";
    std::string out;
};

void add_global_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--gamma", cfg.gamma, "weight exponent, > -1");
    cmd->add_option("--tol", cfg.tol, "pass/fail tolerance");
    cmd->add_option("--radial-nodes", cfg.radial_nodes, "radial quadrature nodes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--angular-nodes", cfg.angular_nodes,
                    "angular quadrature nodes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--trunc", cfg.trunc, "series truncation")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "PRNG seed");
    cmd->add_option("--format", cfg.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", cfg.out, "output path (default stdout)");
}

json complex_json(cplx v) { return json{v.real(), v.imag()}; }

void emit(const RunConfig& cfg, const json& report, const std::string& csv) {
    const std::string text =
        cfg.format == "json" ? report.dump(2) + "\n" : csv;
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(cfg.out, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + cfg.out);
        os << text;
    }
}

std::vector<cplx> parse_points(const std::string& spec) {
    // "re,im;re,im;..."
    std::vector<cplx> pts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        const auto comma = item.find(',');
        const double re = std::stod(item.substr(0, comma));
        const double im =
            comma == std::string::npos ? 0.0 : std::stod(item.substr(comma + 1));
        pts.push_back(cplx(re, im));
    }
    return pts;
}

// ---------------------------------------------------------------- eval ----

int cmd_eval(const RunConfig& cfg, int m, int n, const std::string& points,
             const std::string& reps_csv) {
    std::vector<cplx> pts = points.empty()
                                ? std::vector<cplx>{cplx{0.0}, cplx{0.5},
                                                    cplx{0.3, 0.4}}
                                : parse_points(points);
    for (const cplx z : pts)
        if (std::abs(z) > 1.0 + 1e-14) {
            std::cerr << "eval: |z| > 1 not allowed\n";
            return 2;
        }
    std::vector<std::string> reps;
    {
        std::stringstream ss(reps_csv);
        std::string r;
        while (std::getline(ss, r, ',')) reps.push_back(r);
    }
    json rows = json::array();
    std::string csv = "re_z,im_z";
    for (const auto& r : reps) csv += ",re_" + r + ",im_" + r;
    csv += "\n";
    double max_dev = 0.0;
    for (const cplx z : pts) {
        json row{{"z", complex_json(z)}};
        std::vector<cplx> vals;
        for (const auto& r : reps) {
            cplx v;
            if (r == "jacobi")
                v = disc_poly(cfg.gamma, m, n, z);
            else if (r == "sum")
                v = disc_poly_sum(cfg.gamma, m, n, z);
            else if (r == "rodrigues")
                v = disc_poly_rodrigues(cfg.gamma, m, n, z);
            else {
                std::cerr << "eval: unknown representation " << r << "\n";
                return 2;
            }
            vals.push_back(v);
            row[r] = complex_json(v);
        }
        for (size_t i = 0; i < vals.size(); ++i)
            for (size_t k = i + 1; k < vals.size(); ++k)
                max_dev = std::max(max_dev, std::abs(vals[i] - vals[k]));
        rows.push_back(row);
        std::ostringstream line;
        line.precision(17);
        line << z.real() << ',' << z.imag();
        for (const cplx v : vals) line << ',' << v.real() << ',' << v.imag();
        csv += line.str() + "\n";
    }
    json report{{"schema_version", 1}, {"command", "eval"},
                {"gamma", cfg.gamma},  {"m", m},
                {"n", n},              {"representations", reps},
                {"points", rows}};
    if (reps.size() >= 2) report["max_cross_deviation"] = max_dev;
    emit(cfg, report, csv);
    return 0;
}

// ---------------------------------------------------------------- gram ----

int cmd_gram(const RunConfig& cfg, int max_m, int max_n) {
    const auto q = build_quad_rule(cfg.gamma, cfg.radial_nodes,
                                   cfg.angular_nodes);
    const auto B = basis_matrix(cfg.gamma, max_m, max_n, q);
    Eigen::VectorXd w =
        Eigen::Map<const Eigen::VectorXd>(q.weights.data(), q.weights.size());
    const Eigen::MatrixXcd G = B.adjoint() * w.asDiagonal() * B;
    double max_offdiag = 0.0, max_diag_rel = 0.0;
    const int J = max_n;
    for (int c1 = 0; c1 < G.rows(); ++c1) {
        const double d1 = disc_norm(cfg.gamma, c1 / (J + 1), c1 % (J + 1));
        max_diag_rel = std::max(max_diag_rel,
                                std::abs(G(c1, c1).real() - d1) / d1);
        for (int c2 = 0; c2 < G.cols(); ++c2) {
            if (c1 == c2) continue;
            const double d2 = disc_norm(cfg.gamma, c2 / (J + 1), c2 % (J + 1));
            max_offdiag =
                std::max(max_offdiag, std::abs(G(c1, c2)) / std::sqrt(d1 * d2));
        }
    }
    const bool pass = max_offdiag <= cfg.tol && max_diag_rel <= cfg.tol;
    json entries = json::array();
    std::string csv = "row,col,re,im\n";
    for (int c1 = 0; c1 < G.rows(); ++c1)
        for (int c2 = 0; c2 < G.cols(); ++c2) {
            entries.push_back(complex_json(G(c1, c2)));
            std::ostringstream line;
            line.precision(17);
            line << c1 << ',' << c2 << ',' << G(c1, c2).real() << ','
                 << G(c1, c2).imag();
            csv += line.str() + "\n";
        }
    json report{{"schema_version", 1},
                {"command", "gram"},
                {"gamma", cfg.gamma},
                {"max_m", max_m},
                {"max_n", max_n},
                {"diag_reference_00", kPi / (cfg.gamma + 1.0)},
                {"max_offdiag", max_offdiag},
                {"max_diag_rel_err", max_diag_rel},
                {"tolerance", cfg.tol},
                {"pass", pass},
                {"gram", entries}};
    emit(cfg, report, csv);
    return pass ? 0 : 1;
}

// -------------------------------------------------------------- kernel ----

int cmd_kernel(const RunConfig& cfg, int n, int pairs) {
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> ur(-0.75, 0.75);
    double max_rel = 0.0;
    json rows = json::array();
    std::string csv = "re_z,im_z,re_w,im_w,re_series,im_series,re_closed,im_closed\n";
    for (int i = 0; i < pairs; ++i) {
        cplx z, w;
        do {
            z = cplx(ur(rng), ur(rng));
        } while (std::abs(z) > 0.8);
        do {
            w = cplx(ur(rng), ur(rng));
        } while (std::abs(w) > 0.8);
        const auto series =
            true_kernel_series({cfg.gamma, n, cfg.trunc, 1.0}, z, w);
        const auto closed = true_kernel_closed({cfg.gamma, n}, z, w);
        max_rel = std::max(max_rel, std::abs(series.value - closed.value) /
                                        std::abs(closed.value));
        rows.push_back({{"z", complex_json(z)},
                        {"w", complex_json(w)},
                        {"series", complex_json(series.value)},
                        {"series_est_error", series.est_error},
                        {"closed", complex_json(closed.value)}});
        std::ostringstream line;
        line.precision(17);
        line << z.real() << ',' << z.imag() << ',' << w.real() << ','
             << w.imag() << ',' << series.value.real() << ','
             << series.value.imag() << ',' << closed.value.real() << ','
             << closed.value.imag();
        csv += line.str() + "\n";
    }
    const cplx origin = true_kernel_closed({cfg.gamma, n}, cplx{0.0}, cplx{0.0}).value;
    const double origin_ref = (cfg.gamma + 2.0 * n + 1.0) / kPi;
    double bergman_dev = 0.0;
    if (n == 0) {
        // n = 0 must collapse to the closed Bergman kernel
        std::mt19937 rng2(cfg.seed + 1);
        for (int i = 0; i < pairs; ++i) {
            const cplx z(ur(rng2) * 0.9, ur(rng2) * 0.9);
            const cplx w(ur(rng2) * 0.9, ur(rng2) * 0.9);
            const cplx ref = bergman_kernel(cfg.gamma, z, w);
            bergman_dev = std::max(
                bergman_dev,
                std::abs(true_kernel_closed({cfg.gamma, 0}, z, w).value - ref) /
                    std::abs(ref));
        }
    }
    const bool pass = max_rel <= cfg.tol && (n != 0 || bergman_dev <= cfg.tol);
    json report{{"schema_version", 1},
                {"command", "kernel"},
                {"gamma", cfg.gamma},
                {"n", n},
                {"truncation", cfg.trunc},
                {"origin_value", complex_json(origin)},
                {"origin_reference", origin_ref},
                {"max_rel_deviation", max_rel},
                {"tolerance", cfg.tol},
                {"pass", pass},
                {"pairs", rows}};
    if (n == 0) report["bergman_max_rel_deviation"] = bergman_dev;
    emit(cfg, report, csv);
    return pass ? 0 : 1;
}

// ------------------------------------------------------------- project ----

std::optional<ComplexFn> parse_input(const RunConfig& cfg,
                                     const std::string& input) {
    if (input.rfind("R:", 0) == 0) {
        int m, n;
        if (std::sscanf(input.c_str(), "R:%d,%d", &m, &n) != 2) return {};
        const double g = cfg.gamma;
        return ComplexFn([=](cplx z) { return disc_poly(g, m, n, z); });
    }
    if (input.rfind("mono:", 0) == 0) {
        int a, b;
        if (std::sscanf(input.c_str(), "mono:%d,%d", &a, &b) != 2) return {};
        return ComplexFn(
            [=](cplx z) { return ipow(z, a) * ipow(std::conj(z), b); });
    }
    if (input.rfind("wpoly:", 0) == 0) {
        int j, m;
        if (std::sscanf(input.c_str(), "wpoly:%d,%d", &j, &m) != 2) return {};
        return ComplexFn([=](cplx z) {
            return ipow(cplx(1.0 - std::norm(z)), j) * ipow(z, m);
        });
    }
    if (input.rfind("random:", 0) == 0) {
        int order, degree;
        if (std::sscanf(input.c_str(), "random:%d,%d", &order, &degree) != 2)
            return {};
        return random_polyanalytic(cfg.gamma, order, degree, cfg.seed).fn;
    }
    // otherwise: a coefficient file in the CoeffTable wire format
    std::ifstream is(input);
    if (!is) return {};
    json j;
    is >> j;
    auto t = coeff_table_from_json(j);
    if (t.gamma != cfg.gamma)
        throw std::invalid_argument("coefficient file gamma differs from --gamma");
    return table_fn(std::move(t));
}

int cmd_project(const RunConfig& cfg, const std::string& input, int order,
                int degree, int expect_member) {
    auto fn = parse_input(cfg, input);
    if (!fn) {
        std::cerr << "project: cannot parse input '" << input << "'\n";
        return 2;
    }
    const auto q = build_quad_rule(cfg.gamma, cfg.radial_nodes,
                                   cfg.angular_nodes);
    const int J = order + 1;  // one guard column beyond the decomposition
    const auto table = expand(*fn, degree, J, q);
    const double total = norm_squared(*fn, q);
    json components = json::array();
    std::string csv = "component,energy\n";
    double energy_sum = 0.0;
    for (int k = 0; k <= order; ++k) {
        CoeffTable comp{table.gamma, table.M, table.J,
                        Eigen::MatrixXcd::Zero(table.M + 1, table.J + 1)};
        comp.a.col(k) = table.a.col(k);
        const double energy = table_energy(table, k, k);
        energy_sum += energy;
        components.push_back({{"n", k},
                              {"energy", energy},
                              {"coeffs", coeff_table_to_json(comp)}});
        csv += std::to_string(k) + "," + std::to_string(energy) + "\n";
    }
    json verdicts = json::array();
    for (int k = 0; k <= order; ++k) {
        const double tail = table_energy(table, k + 1, J);
        verdicts.push_back({{"n", k},
                            {"residual", tail},
                            {"member", tail < cfg.tol * cfg.tol * total}});
    }
    json report{{"schema_version", 1},
                {"command", "project"},
                {"gamma", cfg.gamma},
                {"input", input},
                {"order", order},
                {"degree", degree},
                {"norm_squared", total},
                {"energy_captured", energy_sum},
                {"coeffs", coeff_table_to_json(table)},
                {"components", components},
                {"membership", verdicts}};
    int rc = 0;
    if (expect_member >= 0) {
        const double tail = table_energy(table, expect_member + 1, J);
        const bool ok = tail < cfg.tol * cfg.tol * total;
        report["expected_member"] = expect_member;
        report["expected_member_pass"] = ok;
        if (!ok) rc = 1;
    }
    emit(cfg, report, csv);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"disc polynomials and weighted poly-Bergman kernels"};
    app.require_subcommand(1);

    RunConfig cfg;

    int eval_m = 0, eval_n = 0;
    std::string eval_points, eval_reps = "jacobi";
    auto* eval = app.add_subcommand("eval", "evaluate disc polynomials");
    add_global_flags(eval, cfg);
    eval->add_option("--m", eval_m)->check(CLI::NonNegativeNumber);
    eval->add_option("--n", eval_n)->check(CLI::NonNegativeNumber);
    eval->add_option("--points", eval_points, "semicolon list re,im;re,im;...");
    eval->add_option("--rep", eval_reps, "comma list of jacobi,sum,rodrigues");

    int gram_m = 4, gram_n = 4;
    auto* gram = app.add_subcommand("gram", "quadrature Gram matrix check");
    add_global_flags(gram, cfg);
    gram->add_option("--max-m", gram_m)->check(CLI::NonNegativeNumber);
    gram->add_option("--max-n", gram_n)->check(CLI::NonNegativeNumber);

    int kernel_n = 0, kernel_pairs = 20;
    auto* kernel = app.add_subcommand("kernel", "series vs closed kernel forms");
    add_global_flags(kernel, cfg);
    kernel->add_option("--n", kernel_n)->check(CLI::NonNegativeNumber);
    kernel->add_option("--pairs", kernel_pairs)->check(CLI::PositiveNumber);

    std::string project_input = "random:2,4";
    int project_order = 3, project_degree = 8, expect_member = -1;
    auto* project = app.add_subcommand("project", "decompose into true spaces");
    add_global_flags(project, cfg);
    project->add_option("--input", project_input,
                        "R:m,n | mono:a,b | wpoly:j,m | random:order,degree | "
                        "coefficient file");
    project->add_option("--order", project_order, "largest true-space index")
        ->check(CLI::NonNegativeNumber);
    project->add_option("--degree", project_degree, "basis degree cap")
        ->check(CLI::NonNegativeNumber);
    project->add_option("--expect-member", expect_member,
                        "exit 1 unless f lies in the order-(n+1) space");

    auto* ledger = app.add_subcommand("ledger", "emit the derivation ledger");
    add_global_flags(ledger, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cfg.gamma <= -1.0) {
            std::cerr << "gamma must exceed -1\n";
            return 2;
        }
        if (eval->parsed())
            return cmd_eval(cfg, eval_m, eval_n, eval_points, eval_reps);
        if (gram->parsed()) return cmd_gram(cfg, gram_m, gram_n);
        if (kernel->parsed()) return cmd_kernel(cfg, kernel_n, kernel_pairs);
        if (project->parsed())
            return cmd_project(cfg, project_input, project_order,
                               project_degree, expect_member);
        if (ledger->parsed()) {
            RunConfig lc = cfg;
            if (lc.out.empty()) lc.out = "derivation_ledger.json";
            const json l = build_derivation_ledger();
            std::ofstream os(lc.out, std::ios::binary);
            os << l.dump(2) << "\n";
            std::cout << "wrote " << lc.out << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
