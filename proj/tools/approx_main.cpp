// Command-line harness: constructs interpolatory approximants, measures
// estimate ratios, runs counterexample demos, and executes line-oriented
// experiment configs reproducibly (all outputs deterministic given the
// config and seed; files written atomically).

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "approx/construct.hpp"
#include "approx/counterex.hpp"
#include "approx/function_model.hpp"
#include "approx/hermite.hpp"
#include "approx/poly_checks.hpp"
#include "approx/report.hpp"
#include "approx/verify.hpp"

using namespace approx;
using nlohmann::json;

namespace {

std::vector<int> parse_ladder(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad n-ladder entry: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty n-ladder");
    return out;
}

EstimateTag parse_tag(const std::string& s) {
    for (EstimateTag t :
         {EstimateTag::classdir, EstimateTag::sim2, EstimateTag::main_1_8, EstimateTag::tr1,
          EstimateTag::tr2, EstimateTag::maingen_4g, EstimateTag::mainnew_4nnn,
          EstimateTag::mainnew1_78, EstimateTag::an2, EstimateTag::an222, EstimateTag::estwr1,
          EstimateTag::corin, EstimateTag::qmonotone})
        if (to_string(t) == s) return t;
    throw std::invalid_argument("unknown estimate kind: " + s);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content << '\n';
    else
        write_file_atomic(path, content);
}

int cmd_construct(const std::string& fspec, const std::string& yspec, int k, int r, int n,
                  int mu, const std::string& out, const std::string& summary_path) {
    FunctionModel f = make_function(fspec);
    NodeMultiset Y = NodeMultiset::parse(yspec);
    PiecewiseS S = build_S(f, Y, k, r, n);
    AssembledPoly P = assemble_Pn(S, mu);
    InterpolationReport rep = check_interpolation(P, f);

    std::map<std::string, std::string> meta{{"f", fspec}, {"Y", yspec},
                                            {"k", std::to_string(k)}, {"r", std::to_string(r)},
                                            {"n", std::to_string(n)}};
    emit(out, P.flat.to_json(meta));

    json s;
    s["degree"] = P.flat.degree();
    s["mu"] = P.mu;
    s["jumps"] = P.blends.size();
    s["max_abs_constraint_residual"] = rep.max_abs_resid;
    s["below_proof_bound"] = S.below_proof_bound;
    s["proof_bound_n"] = S.proof_bound_n;
    if (!summary_path.empty()) write_file_atomic(summary_path, s.dump(2) + "\n");
    std::cerr << "degree " << P.flat.degree() << ", constraint residual "
              << rep.max_abs_resid << "\n";
    return 0;
}

int cmd_verify(const std::string& kind_s, const std::string& fspec, const std::string& yspec,
               int k, int r, int n, int nu, int ell, int m, double x0, double alpha,
               std::size_t grid_n, const std::string& csv, const std::string& json_out) {
    EstimateKind kind;
    kind.tag = parse_tag(kind_s);
    kind.k = k;
    kind.r = r;
    kind.nu = nu;
    kind.ell = ell;
    kind.m = m;
    kind.x0 = x0;
    kind.alpha = alpha;

    FunctionModel f = make_function(fspec);
    NodeMultiset Y = yspec.empty() ? NodeMultiset{} : NodeMultiset::parse(yspec);
    PiecewiseS S = build_S(f, Y.empty() ? NodeMultiset::parse("-1:" + std::to_string(r + 1) +
                                                              ",1:" + std::to_string(r + 1))
                                        : Y,
                           k, r, n);
    AssembledPoly P = assemble_Pn(S);
    EvalGrid grid = EvalGrid::rho_adapted(n).merged(EvalGrid::uniform({-1.0, 1.0}, grid_n));
    RatioReport rep = measure(kind, f, P, n, grid);
    if (!csv.empty()) write_file_atomic(csv, rep.to_csv());
    emit(json_out, rep.summary_json());
    return 0;
}

int run_config(const std::string& path) {
    Config cfg = Config::parse_file(path);
    std::string experiment = cfg.get("experiment");
    bool asserts_ok = true;
    json summary;
    summary["experiment"] = experiment;
    summary["seed"] = cfg.get_or("seed", "1");

    if (experiment == "construct" || experiment == "ratio") {
        FunctionModel f = make_function(cfg.get("f"));
        NodeMultiset Y = NodeMultiset::parse(cfg.get("Y"));
        int k = cfg.get_int("k"), r = cfg.get_int("r");
        auto ladder = parse_ladder(cfg.get("n"));
        std::size_t grid_n = cfg.has("grid") ? static_cast<std::size_t>(cfg.get_int("grid")) : 2001;
        EstimateKind kind;
        kind.tag = parse_tag(cfg.get_or("kind", "an2"));
        kind.k = k;
        kind.r = r;
        if (cfg.has("nu")) kind.nu = cfg.get_int("nu");
        if (cfg.has("ell")) kind.ell = cfg.get_int("ell");

        std::ostringstream csv;
        csv.precision(17);
        csv << "n,degree,A,constraint_residual\n";
        double first_A = 0.0, max_A = 0.0;
        for (int n : ladder) {
            PiecewiseS S = build_S(f, Y, k, r, n);
            AssembledPoly P = assemble_Pn(S);
            InterpolationReport ir = check_interpolation(P, f);
            EvalGrid grid =
                EvalGrid::rho_adapted(n).merged(EvalGrid::uniform({-1.0, 1.0}, grid_n));
            RatioReport rep = measure(kind, f, P, n, grid);
            csv << n << ',' << P.flat.degree() << ',' << rep.A << ',' << ir.max_abs_resid
                << '\n';
            if (n == ladder.front()) first_A = rep.A;
            max_A = std::max(max_A, rep.A);
        }
        summary["first_A"] = first_A;
        summary["max_A"] = max_A;
        if (cfg.has("assert_max_A") && max_A > cfg.get_double("assert_max_A")) asserts_ok = false;
        if (cfg.has("assert_growth") && max_A > cfg.get_double("assert_growth") * first_A)
            asserts_ok = false;
        if (cfg.has("out_csv")) write_file_atomic(cfg.get("out_csv"), csv.str());
    } else if (experiment == "dz59") {
        int n = cfg.get_int("n");
        SharpnessExample ex = dz59_sharpness(n);
        summary["deriv_at_0"] = ex.deriv_at_0;
        summary["naive_threshold"] = ex.naive_threshold;
        summary["exceeds"] = ex.exceeds;
        if (cfg.has("assert_exceeds") && !ex.exceeds) asserts_ok = false;
    } else if (experiment == "blowup") {
        std::string which = cfg.get_or("case", "i");
        NegativeInstance inst =
            which == "i" ? build_case_i(cfg.get_int("r"))
                         : build_case_ii(cfg.get_int("k"), cfg.get_int("r"), EpsKind::inv_log,
                                         cfg.get_int("depth"));
        BlowupReport rep = blowup_demo(inst, cfg.get_int("n"));
        summary["slope"] = rep.slope;
        summary["last_over_first"] = rep.last_over_first();
        summary["one_signed"] = rep.one_signed_near_zero;
        if (cfg.has("out_csv")) write_file_atomic(cfg.get("out_csv"), rep.to_csv());
        if (cfg.has("assert_last_over_first") &&
            rep.last_over_first() < cfg.get_double("assert_last_over_first"))
            asserts_ok = false;
    } else if (experiment == "weak_sweep") {
        WeakSweepResult res = weak_sweep(cfg.get_int("k"), cfg.get_int("r"), cfg.get_int("n"),
                                         cfg.get_double("M"), cfg.get_double("delta"));
        summary["found"] = res.found;
        summary["eps_star"] = res.eps_star;
        summary["ratio_at_star"] = res.ratio_at_star;
        summary["ratio_at_half"] = res.ratio_at_half;
        std::ostringstream csv;
        csv.precision(17);
        csv << "eps,sup_ratio\n";
        for (const auto& row : res.rows) csv << row.eps << ',' << row.sup_ratio << '\n';
        if (cfg.has("out_csv")) write_file_atomic(cfg.get("out_csv"), csv.str());
        if (cfg.has("assert_found") && !res.found) asserts_ok = false;
    } else if (experiment == "qmonotone") {
        FunctionModel f = make_function(cfg.get("f"));
        QMonotoneResult res = qmonotone_test([&f](double x) { return f(x); }, cfg.get_int("q"));
        summary["ok"] = res.ok;
        summary["worst"] = res.worst;
        if (cfg.has("assert_ok") && !res.ok) asserts_ok = false;
    } else {
        throw std::invalid_argument("unknown experiment kind: " + experiment);
    }

    summary["asserts_ok"] = asserts_ok;
    std::string out = summary.dump(2) + "\n";
    if (cfg.has("out_json"))
        write_file_atomic(cfg.get("out_json"), out);
    else
        std::cout << out;
    return asserts_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interpolatory pointwise approximation toolkit"};
    app.require_subcommand(1);

    std::string cfg_path;
    auto* run = app.add_subcommand("run", "execute an experiment config");
    run->add_option("config", cfg_path, "config file (`key = value` lines)")->required();

    std::string fspec = "exp", yspec, kind_s = "classdir";
    std::string out, csv, json_out, summary_path;
    int k = 2, r = 0, n = 64, nu = 0, ell = 0, m = 0, mu = 0;
    double x0 = 0.0, alpha = 1.0;
    std::size_t grid_n = 2001;

    auto* con = app.add_subcommand("construct", "build the interpolatory approximant");
    con->add_option("--f", fspec, "function spec")->required();
    con->add_option("--Y", yspec, "node multiset, e.g. -1:2,1:2")->required();
    con->add_option("--k", k)->required();
    con->add_option("--r", r)->required();
    con->add_option("--n", n)->required();
    con->add_option("--mu", mu, "decay exponent (0 = auto)");
    con->add_option("--out", out, "polynomial JSON path (default stdout)");
    con->add_option("--summary", summary_path, "summary JSON path");

    auto* ver = app.add_subcommand("verify", "measure an estimate ratio");
    ver->add_option("kind", kind_s, "estimate tag")->required();
    ver->add_option("--f", fspec)->required();
    ver->add_option("--Y", yspec);
    ver->add_option("--k", k)->required();
    ver->add_option("--r", r)->required();
    ver->add_option("--n", n)->required();
    ver->add_option("--nu", nu);
    ver->add_option("--ell", ell);
    ver->add_option("--m", m);
    ver->add_option("--x0", x0);
    ver->add_option("--alpha", alpha);
    ver->add_option("--grid", grid_n);
    ver->add_option("--csv", csv);
    ver->add_option("--json", json_out);

    std::string which_case = "i";
    int depth = 5;
    double M = 100.0, delta = 0.5;
    auto* ctr = app.add_subcommand("counterex", "sharpness demonstration");
    ctr->add_option("case", which_case, "i | ii | weak")->required();
    ctr->add_option("--k", k);
    ctr->add_option("--r", r);
    ctr->add_option("--n", n, "fit degree");
    ctr->add_option("--depth", depth);
    ctr->add_option("--M", M);
    ctr->add_option("--delta", delta);
    ctr->add_option("--csv", csv);
    ctr->add_option("--json", json_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return run_config(cfg_path);
        if (*con) return cmd_construct(fspec, yspec, k, r, n, mu, out, summary_path);
        if (*ver)
            return cmd_verify(kind_s, fspec, yspec, k, r, n, nu, ell, m, x0, alpha, grid_n, csv,
                              json_out);
        if (*ctr) {
            json s;
            if (which_case == "weak") {
                WeakSweepResult res = weak_sweep(k, r, n, M, delta);
                s = {{"found", res.found},
                     {"eps_star", res.eps_star},
                     {"ratio_at_star", res.ratio_at_star},
                     {"ratio_at_half", res.ratio_at_half}};
            } else {
                NegativeInstance inst = which_case == "i"
                                            ? build_case_i(r)
                                            : build_case_ii(k, r, EpsKind::inv_log, depth);
                BlowupReport rep = blowup_demo(inst, n);
                if (!csv.empty()) write_file_atomic(csv, rep.to_csv());
                s = {{"slope", rep.slope},
                     {"last_over_first", rep.last_over_first()},
                     {"one_signed", rep.one_signed_near_zero}};
            }
            emit(json_out, s.dump(2));
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
