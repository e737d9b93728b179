// sv-verify: exact verification suites for the Schrodinger-Virasoro algebra,
// its conjugate-linear anti-involutions and its weight modules. Every scalar
// is an exact Gaussian rational; reports are deterministic byte-for-byte for
// a fixed configuration.
//
// Exit codes: 0 all requested checks pass; 1 a mathematical check failed
// (the report names a witness); 2 usage or configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>

#include "sv/algebra.hpp"
#include "sv/extension.hpp"
#include "sv/forms.hpp"
#include "sv/json_io.hpp"
#include "sv/series.hpp"

namespace {

constexpr const char* kSchema = "sv-verify-report/1";

struct OutputOptions {
    std::string path;   // empty -> stdout
    std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--output,-o", out.path, "write the report to a file instead of stdout");
    cmd->add_option("--format", out.format, "report format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
}

void emit(const OutputOptions& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw sv::invalid_parameters("cannot open output file '" + out.path + "'");
    f << text;
}

void emit_json(const OutputOptions& out, const sv::Json& j) { emit(out, j.dump(2) + "\n"); }

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        auto comma = csv.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(csv.substr(pos));
            break;
        }
        out.push_back(csv.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

sv::InvolutionParams theta_from_flags(const std::string& compact, const std::string& json_text) {
    if (!compact.empty()) return sv::parse_involution_spec(compact);
    if (!json_text.empty()) return sv::involution_from_json(sv::Json::parse(json_text));
    throw sv::invalid_parameters("an involution is required: pass --theta or --theta-json");
}

int report_check(const OutputOptions& out, const char* command, sv::Json params,
                 const sv::CheckReport& rep) {
    sv::Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["params"] = std::move(params);
    j.update(sv::check_report_to_json(rep));
    emit_json(out, j);
    return rep.passed ? 0 : 1;
}

// ---- jacobi ---------------------------------------------------------------

int run_jacobi(long long window, bool corrupt, const OutputOptions& out) {
    sv::Window w(window);
    sv::BasisBracket br;
    if (corrupt) br = sv::corrupted_bracket;
    sv::CheckReport rep = sv::jacobi_check(w, br);
    sv::Json params;
    params["window"] = window;
    params["corrupt_bracket"] = corrupt;
    return report_check(out, "jacobi", std::move(params), rep);
}

// ---- involution-verify ----------------------------------------------------

int run_involution_verify(const sv::InvolutionParams& p, long long window, bool corrupt,
                          const OutputOptions& out) {
    sv::Window w(window);
    sv::CheckReport rep;
    if (corrupt) {
        sv::InvolutionFn bad = [&](const sv::Element& x) { return apply_beta_flipped(p, x); };
        rep = sv::axioms_check_fn(bad, w);
    } else {
        rep = sv::axioms_check(p, w);
    }
    sv::Json params;
    params["theta"] = sv::involution_to_json(p);
    params["window"] = window;
    params["corrupt"] = corrupt;
    return report_check(out, "involution-verify", std::move(params), rep);
}

// ---- involution-replay ----------------------------------------------------

int run_replay_recurrence(const std::string& alpha, const std::string& beta1,
                          const std::string& betam1, const std::string& mu, long long window,
                          const OutputOptions& out) {
    std::optional<sv::GaussRat> mu_val;
    if (!mu.empty()) mu_val = sv::parse_gauss(mu);
    sv::CheckReport rep = sv::replay_coefficient_recurrence(
        sv::parse_rat(alpha), sv::parse_gauss(beta1), sv::parse_gauss(betam1), sv::Window(window),
        mu_val);
    sv::Json params;
    params["kind"] = "recurrence";
    params["alpha"] = alpha;
    params["beta1"] = beta1;
    params["betam1"] = betam1;
    if (!mu.empty()) params["mu"] = mu;
    params["window"] = window;
    return report_check(out, "involution-replay", std::move(params), rep);
}

int run_replay_y(const sv::InvolutionParams& p, long long window, const OutputOptions& out) {
    sv::CheckReport rep = sv::replay_y_coefficients(p, sv::Window(window));
    sv::Json params;
    params["kind"] = "ycoeff";
    params["theta"] = sv::involution_to_json(p);
    params["window"] = window;
    return report_check(out, "involution-replay", std::move(params), rep);
}

// ---- vir-prime ------------------------------------------------------------

int run_vir_prime(const sv::InvolutionParams& p, long long window, const OutputOptions& out) {
    sv::Window w(window);
    sv::CheckReport brackets = sv::vir_prime_bracket_check(w, p);
    sv::CheckReport restricted = sv::restrict_check_vir_prime(p, w);
    sv::Json j;
    j["schema"] = kSchema;
    j["command"] = "vir-prime";
    sv::Json params;
    params["theta"] = sv::involution_to_json(p);
    params["window"] = window;
    j["params"] = params;
    j["bracket_check"] = sv::check_report_to_json(brackets);
    j["restriction_check"] = sv::check_report_to_json(restricted);
    bool passed = brackets.passed && restricted.passed;
    j["passed"] = passed;
    emit_json(out, j);
    return passed ? 0 : 1;
}

// ---- verma-gram -----------------------------------------------------------

int run_verma_gram(const std::string& h, const std::string& m, const std::string& z,
                   long long depth, const sv::InvolutionParams& p, const OutputOptions& out) {
    if (depth < 0) throw sv::invalid_parameters("depth must be >= 0");
    sv::Weight wt{sv::parse_rat(h), sv::parse_rat(m), sv::parse_rat(z)};
    sv::Json j;
    j["schema"] = kSchema;
    j["command"] = "verma-gram";
    sv::Json params = sv::verma_spec_to_json(wt, depth);
    params["theta"] = sv::involution_to_json(p);
    j["params"] = params;
    sv::Json levels = sv::Json::array();
    bool hermitian = true;
    for (long long d = 0; d <= depth; ++d) {
        sv::Mat g = sv::gram(wt, p, d, depth);
        sv::PositivityVerdict v = sv::positivity(g);
        std::vector<sv::Vec> radical;
        if (v.tag != sv::PositivityVerdict::Tag::NonHermitian)
            radical = sv::radical_basis(g);
        else
            hermitian = false;
        levels.push_back(sv::gram_report_to_json(d, g, v, radical));
    }
    j["levels"] = levels;
    j["passed"] = hermitian;
    emit_json(out, j);
    return hermitian ? 0 : 1;
}

// ---- series-check ---------------------------------------------------------

int run_series_check(const std::string& a, const std::string& b, long long window,
                     bool negative_control, const OutputOptions& out) {
    sv::GaussRat av = sv::parse_gauss(a), bv = sv::parse_gauss(b);
    sv::Window w(window);
    sv::CheckReport shift =
        sv::series_shift_iso_check(av, bv, w, negative_control ? sv::GaussRat(1) : sv::GaussRat());
    sv::CheckReport lift = sv::sv_lift_bracket_check(sv::SeriesSpec::aab(av, bv), w);
    sv::Json j;
    j["schema"] = kSchema;
    j["command"] = "series-check";
    sv::Json params;
    params["a"] = a;
    params["b"] = b;
    params["window"] = window;
    params["negative_control"] = negative_control;
    j["params"] = params;
    j["shift_iso_check"] = sv::check_report_to_json(shift);
    j["lift_bracket_check"] = sv::check_report_to_json(lift);
    bool passed = shift.passed && lift.passed;
    j["passed"] = passed;
    emit_json(out, j);
    return passed ? 0 : 1;
}

// ---- series-scan ----------------------------------------------------------

struct ScanCell {
    std::string a, b;
    std::string verdict;
    std::string detail;
};

int run_series_scan(const std::string& a_csv, const std::string& b_csv, long long window,
                    const OutputOptions& out) {
    auto as = split_list(a_csv);
    auto bs = split_list(b_csv);
    std::vector<std::pair<std::string, std::string>> cells;
    for (const auto& a : as)
        for (const auto& b : bs) cells.emplace_back(a, b);

    // Cells are independent pure computations; evaluate them in parallel and
    // assemble the report in input order.
    std::vector<std::future<ScanCell>> futures;
    futures.reserve(cells.size());
    for (const auto& [a, b] : cells)
        futures.push_back(std::async(std::launch::async, [a, b, window]() {
            ScanCell cell{a, b, "", ""};
            try {
                auto r = sv::series_unitarity_feasibility(sv::parse_rat(a), sv::parse_gauss(b),
                                                          sv::Window(window));
                if (r.tag == sv::FeasibilityResult::Tag::Feasible) {
                    cell.verdict = "feasible";
                    cell.detail = "p[0]=" + sv::to_string(r.weights.at(0));
                } else {
                    cell.verdict = "infeasible";
                    cell.detail = "n=" + std::to_string(r.bad_n) + ",k=" + std::to_string(r.bad_k);
                }
            } catch (const sv::reducible_parameters& e) {
                cell.verdict = "reducible";
                cell.detail = e.what();
            }
            return cell;
        }));
    std::vector<ScanCell> results;
    results.reserve(futures.size());
    for (auto& f : futures) results.push_back(f.get());

    if (out.format == "tsv") {
        std::string text = "a\tb\tverdict\tdetail\n";
        for (const auto& c : results)
            text += c.a + "\t" + c.b + "\t" + c.verdict + "\t" + c.detail + "\n";
        emit(out, text);
        return 0;
    }
    sv::Json j;
    j["schema"] = kSchema;
    j["command"] = "series-scan";
    sv::Json params;
    params["a"] = a_csv;
    params["b"] = b_csv;
    params["window"] = window;
    j["params"] = params;
    sv::Json arr = sv::Json::array();
    for (const auto& c : results) {
        sv::Json cj;
        cj["a"] = c.a;
        cj["b"] = c.b;
        cj["verdict"] = c.verdict;
        cj["detail"] = c.detail;
        arr.push_back(cj);
    }
    j["cells"] = arr;
    emit_json(out, j);
    return 0;
}

// ---- extension ------------------------------------------------------------

int run_extension(const std::string& a, const std::string& b_csv, const std::string& d_csv,
                  long long window, long long trivial_dim, bool replay, bool dump_rows,
                  const OutputOptions& out) {
    sv::ExtensionConfig cfg;
    cfg.a = sv::parse_rat(a);
    for (const auto& b : split_list(b_csv)) cfg.b_list.push_back(sv::parse_gauss(b));
    for (const auto& d : split_list(d_csv)) cfg.d_list.push_back(sv::parse_gauss(d));
    cfg.window = window;
    cfg.trivial_dim = trivial_dim;

    sv::ExtensionSystem sys = sv::assemble_constraints(cfg);
    auto basis = sv::nullspace(sys);
    std::optional<sv::ReplayReport> rr;
    if (replay) rr = sv::special_case_replay(cfg);

    sv::Json j;
    j["schema"] = kSchema;
    j["command"] = "extension";
    sv::Json params;
    params["a"] = a;
    params["b"] = b_csv;
    params["d"] = d_csv;
    params["window"] = window;
    params["trivial_dim"] = trivial_dim;
    j["params"] = params;
    j["warnings"] = sv::off_line_parameters(cfg);
    j.update(sv::extension_report_to_json(sys, basis, rr ? &*rr : nullptr));
    if (dump_rows) {
        sv::Json rows = sv::Json::array();
        for (const auto& r : sys.rows) {
            sv::Json row;
            row["tag"] = r.tag;
            row["source"] = r.source;
            sv::Json coeffs = sv::Json::object();
            for (const auto& [idx, c] : r.coeffs)
                coeffs[sys.unknowns[idx].name()] = sv::to_string(c);
            row["coeffs"] = coeffs;
            rows.push_back(row);
        }
        j["rows_detail"] = rows;
    }
    bool passed = basis.empty() && (!rr || rr->passed);
    j["passed"] = passed;
    emit_json(out, j);
    return passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sv-verify: exact checks for the Schrodinger-Virasoro algebra"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    int rc = 0;
    OutputOptions out;

    // jacobi
    {
        auto* cmd = app.add_subcommand("jacobi", "Jacobi identity over all basis triples");
        cmd->set_help_flag("--help", "print help");
        auto window = std::make_shared<long long>(16);
        auto corrupt = std::make_shared<bool>(false);
        cmd->add_option("--window", *window, "doubled-degree bound (default 16)");
        cmd->add_flag("--corrupt-bracket", *corrupt, "inject a mutated [L_1, M_1] (fault test)");
        add_output_flags(cmd, out);
        cmd->callback([&rc, &out, window, corrupt] { rc = run_jacobi(*window, *corrupt, out); });
    }
    // involution-verify
    {
        auto* cmd = app.add_subcommand("involution-verify",
                                       "conjugate-linear anti-involution axioms on a window");
        cmd->set_help_flag("--help", "print help");
        auto theta = std::make_shared<std::string>();
        auto theta_json = std::make_shared<std::string>();
        auto window = std::make_shared<long long>(12);
        auto corrupt = std::make_shared<bool>(false);
        cmd->add_option("--theta", *theta, "compact spec, e.g. plus:rho=1,beta=1+1*i,nu=3/5+4/5*i");
        cmd->add_option("--theta-json", *theta_json, "parameter pack as a JSON object");
        cmd->add_option("--window", *window, "doubled-degree bound (default 12)");
        cmd->add_flag("--corrupt", *corrupt, "flip the conj(beta) correction sign (fault test)");
        add_output_flags(cmd, out);
        cmd->callback([&rc, &out, theta, theta_json, window, corrupt] {
            rc = run_involution_verify(theta_from_flags(*theta, *theta_json), *window, *corrupt,
                                       out);
        });
    }
    // involution-replay
    {
        auto* cmd = app.add_subcommand("involution-replay",
                                       "coefficient recurrences of the classification");
        cmd->set_help_flag("--help", "print help");
        auto kind = std::make_shared<std::string>("recurrence");
        auto alpha = std::make_shared<std::string>("1");
        auto beta1 = std::make_shared<std::string>("0");
        auto betam1 = std::make_shared<std::string>("0");
        auto mu = std::make_shared<std::string>();
        auto theta = std::make_shared<std::string>();
        auto theta_json = std::make_shared<std::string>();
        auto window = std::make_shared<long long>(16);
        cmd->add_option("--kind", *kind, "recurrence (beta closed form) or ycoeff (Y sector)")
            ->check(CLI::IsMember({"recurrence", "ycoeff"}));
        cmd->add_option("--alpha", *alpha, "nonzero real alpha");
        cmd->add_option("--beta1", *beta1, "seed beta_{1,-1}");
        cmd->add_option("--betam1", *betam1, "seed beta_{-1,1}");
        cmd->add_option("--mu", *mu, "optional unit-modulus mu for the compatibility check");
        cmd->add_option("--theta", *theta, "plus pack for --kind ycoeff");
        cmd->add_option("--theta-json", *theta_json, "plus pack as JSON for --kind ycoeff");
        cmd->add_option("--window", *window, "doubled-degree bound (default 16)");
        add_output_flags(cmd, out);
        cmd->callback([&rc, &out, kind, alpha, beta1, betam1, mu, theta, theta_json, window] {
            if (*kind == "recurrence")
                rc = run_replay_recurrence(*alpha, *beta1, *betam1, *mu, *window, out);
            else
                rc = run_replay_y(theta_from_flags(*theta, *theta_json), *window, out);
        });
    }
    // vir-prime
    {
        auto* cmd = app.add_subcommand("vir-prime",
                                       "deformed Virasoro copy: brackets and theta restriction");
        cmd->set_help_flag("--help", "print help");
        auto theta = std::make_shared<std::string>();
        auto theta_json = std::make_shared<std::string>();
        auto window = std::make_shared<long long>(10);
        cmd->add_option("--theta", *theta, "compact involution spec");
        cmd->add_option("--theta-json", *theta_json, "parameter pack as JSON");
        cmd->add_option("--window", *window, "doubled-degree bound (default 10)");
        add_output_flags(cmd, out);
        cmd->callback([&rc, &out, theta, theta_json, window] {
            rc = run_vir_prime(theta_from_flags(*theta, *theta_json), *window, out);
        });
    }
    // verma-gram
    {
        auto* cmd = app.add_subcommand("verma-gram",
                                       "per-level Gram matrices with exact positivity verdicts");
        cmd->set_help_flag("--help", "print help");
        auto h = std::make_shared<std::string>("0");
        auto m = std::make_shared<std::string>("0");
        auto z = std::make_shared<std::string>("0");
        auto depth = std::make_shared<long long>(4);
        auto theta = std::make_shared<std::string>();
        auto theta_json = std::make_shared<std::string>();
        cmd->add_option("--h", *h, "L_0 eigenvalue of the highest weight vector");
        cmd->add_option("--m", *m, "M_0 eigenvalue");
        cmd->add_option("--z", *z, "central charge");
        cmd->add_option("--depth", *depth, "doubled level cap (default 4)");
        cmd->add_option("--theta", *theta, "plus-family involution spec");
        cmd->add_option("--theta-json", *theta_json, "parameter pack as JSON");
        add_output_flags(cmd, out);
        cmd->callback([&rc, &out, h, m, z, depth, theta, theta_json] {
            rc = run_verma_gram(*h, *m, *z, *depth, theta_from_flags(*theta, *theta_json), out);
        });
    }
    // series-check
    {
        auto* cmd = app.add_subcommand("series-check",
                                       "intermediate-series shift isomorphism and lifted brackets");
        cmd->set_help_flag("--help", "print help");
        auto a = std::make_shared<std::string>("0");
        auto b = std::make_shared<std::string>("1/2");
        auto window = std::make_shared<long long>(8);
        auto negative = std::make_shared<bool>(false);
        cmd->add_option("--a", *a, "offset a");
        cmd->add_option("--b", *b, "parameter b");
        cmd->add_option("--window", *window, "doubled-degree bound (default 8)");
        cmd->add_flag("--negative-control", *negative, "map onto A_{a,b+1} instead (must fail)");
        add_output_flags(cmd, out);
        cmd->callback([&rc, &out, a, b, window, negative] {
            rc = run_series_check(*a, *b, *window, *negative, out);
        });
    }
    // series-scan
    {
        auto* cmd = app.add_subcommand(
            "series-scan", "diagonal-form feasibility over an (a, b) grid; TSV columns: "
                           "a, b, verdict (feasible|infeasible|reducible), detail");
        auto a = std::make_shared<std::string>("0");
        auto b = std::make_shared<std::string>("1/2");
        auto window = std::make_shared<long long>(8);
        cmd->add_option("--a", *a, "comma-separated real offsets");
        cmd->add_option("--b", *b, "comma-separated b values");
        cmd->add_option("--window", *window, "index bound (default 8)");
        add_output_flags(cmd, out);
        cmd->callback(
            [&rc, &out, a, b, window] { rc = run_series_scan(*a, *b, *window, out); });
    }
    // extension
    {
        auto* cmd = app.add_subcommand("extension",
                                       "Y-action constraint system over a direct sum of series");
        cmd->set_help_flag("--help", "print help");
        auto a = std::make_shared<std::string>("0");
        auto b = std::make_shared<std::string>("1/2+1*i");
        auto d = std::make_shared<std::string>("1/2");
        auto window = std::make_shared<long long>(4);
        auto trivial = std::make_shared<long long>(0);
        auto replay = std::make_shared<bool>(false);
        auto dump_rows = std::make_shared<bool>(false);
        cmd->add_option("--a", *a, "common offset, 0 <= a < 1/2");
        cmd->add_option("--b", *b, "comma-separated b_l values");
        cmd->add_option("--d", *d, "comma-separated d_l' values");
        cmd->add_option("--window", *window, "unknown index bound K (default 4)");
        cmd->add_option("--trivial-dim", *trivial, "dimension of the trivial summand W");
        cmd->add_flag("--replay", *replay, "run the a=0, d=1/2 stage-by-stage replay");
        cmd->add_flag("--dump-rows", *dump_rows, "include every constraint row with its tag");
        add_output_flags(cmd, out);
        cmd->callback([&rc, &out, a, b, d, window, trivial, replay, dump_rows] {
            rc = run_extension(*a, *b, *d, *window, *trivial, *replay, *dump_rows, out);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sv::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
