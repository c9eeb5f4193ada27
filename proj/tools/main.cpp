#include "sptfn/check.hpp"
#include "sptfn/cmtrace.hpp"
#include "sptfn/kloosterman.hpp"
#include "sptfn/modfun.hpp"
#include "sptfn/partitions.hpp"
#include "sptfn/qforms.hpp"
#include "sptfn/series.hpp"
#include "sptfn/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
        if (text.empty() || text.back() != '\n') f << '\n';
    }
};

std::string trace_csv(const std::vector<sptfn::TraceRow>& rows) {
    std::ostringstream os;
    os << "N,partial_sum,distance_to_integer\n";
    for (const auto& r : rows)
        os << r.terms << ',' << r.partial_sum.str() << ',' << r.distance_to_integer.str()
           << '\n';
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

json form_json(const sptfn::QForm& q) {
    return json::array({q.a.get_str(), q.b.get_str(), q.c.get_str()});
}

int run_checks(bool full, const std::string& dir) {
    auto results = full ? sptfn::check::run_full(dir) : sptfn::check::run_quick();
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.name << " ("
                  << r.detail << ") [" << r.seconds << "s]\n";
    }
    return sptfn::check::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition and smallest-parts function calculator"};
    app.require_subcommand(1);
    Output out;
    app.add_option("-o,--output", out.path, "write the result to a file instead of stdout");

    // pn <n>
    long pn_n = 1, pn_terms = 0, pn_prec = 64;
    std::string pn_trace;
    auto* pn = app.add_subcommand("pn", "p(n) via the convergent Kloosterman/Bessel series");
    pn->add_option("n", pn_n, "index n >= 1")->required();
    pn->add_option("--terms", pn_terms, "fixed number of terms (default: automatic)");
    pn->add_option("--prec", pn_prec, "precision in bits")->default_val(64);
    pn->add_option("--trace", pn_trace, "also write a partial-sum trace CSV to this path");

    // spt <n>
    long spt_n = 1, spt_terms = 0, spt_prec = 0, spt_window = -1;
    std::string spt_method = "series", spt_trace_path;
    auto* spt = app.add_subcommand("spt", "spt(n) via series, CM trace, or the exact oracle");
    spt->add_option("n", spt_n, "index n >= 1")->required();
    spt->add_option("--method", spt_method, "series | trace | oracle")
        ->check(CLI::IsMember({"series", "trace", "oracle"}));
    spt->add_option("--terms", spt_terms, "series terms (default max(5000, 50n))");
    spt->add_option("--prec", spt_prec, "precision in bits (default 64 series / 256 trace)");
    spt->add_option("--window", spt_window, "tail-average window (default N/10)");
    spt->add_option("--trace", spt_trace_path, "partial-sum trace CSV path (series method)");

    // kloosterman <n> <c>
    long kl_n = 0, kl_c = 1, kl_m = 1, kl_prec = 64;
    std::string kl_method = "direct", kl_multiplier;
    auto* kl = app.add_subcommand("kloosterman", "A_c(n) or the eta-multiplier sum");
    kl->add_option("n", kl_n, "index n")->required();
    kl->add_option("c", kl_c, "modulus c >= 1")->required();
    kl->add_option("--method", kl_method, "direct | selberg")
        ->check(CLI::IsMember({"direct", "selberg"}));
    kl->add_option("--multiplier", kl_multiplier, "eta: compute S(m,n,c,chi) instead")
        ->check(CLI::IsMember({"eta"}));
    kl->add_option("--m", kl_m, "first index m for the multiplier sum")->default_val(1);
    kl->add_option("--prec", kl_prec, "precision in bits")->default_val(64);

    // summatory <n>
    long sm_n = 0, sm_xmax = 100, sm_prec = 64;
    int sm_blocks = 0;
    std::string sm_csv;
    auto* sm = app.add_subcommand("summatory", "partial sums of A_c(n)/c up to xmax");
    sm->add_option("n", sm_n, "index n")->required();
    sm->add_option("--xmax", sm_xmax, "largest modulus")->required();
    sm->add_option("--csv", sm_csv, "CSV output path (default stdout)");
    sm->add_option("--prec", sm_prec, "precision in bits")->default_val(64);
    sm->add_option("--blocks", sm_blocks, "parallel blocks (0 = automatic)");

    // forms <n>
    long fo_n = 1, fo_prec = 64;
    auto* fo = app.add_subcommand("forms", "class representatives and CM roots");
    fo->add_option("n", fo_n, "index n >= 1")->required();
    fo->add_option("--prec", fo_prec, "precision for roots")->default_val(64);

    // classpoly <n>
    long cp_n = 1, cp_prec = 256;
    std::string cp_format = "text";
    auto* cp = app.add_subcommand("classpoly", "class polynomial of g = f - P");
    cp->add_option("n", cp_n, "index n >= 1")->required();
    cp->add_option("--prec", cp_prec, "precision in bits")->default_val(256);
    cp->add_option("--format", cp_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // trace <n>
    long tr_n = 1, tr_prec = 256;
    std::string tr_fn = "g";
    auto* tr = app.add_subcommand("trace", "per-representative CM values and their sum");
    tr->add_option("n", tr_n, "index n >= 1")->required();
    tr->add_option("--function", tr_fn, "f | P | g")
        ->check(CLI::IsMember({"f", "P", "g"}));
    tr->add_option("--prec", tr_prec, "precision in bits")->default_val(256);

    // eta-norm
    double en_tol = 1e-6;
    auto* en = app.add_subcommand("eta-norm", "Petersson norm of y^{1/4} eta by quadrature");
    en->add_option("--tol", en_tol, "absolute tolerance")->default_val(1e-6);

    // check
    bool ck_quick = false, ck_full = false;
    std::string ck_dir = ".";
    auto* ck = app.add_subcommand("check", "run the cross-validation suite");
    ck->add_flag("--quick", ck_quick, "fast subset (default)");
    ck->add_flag("--full", ck_full, "full acceptance suite");
    ck->add_option("--dir", ck_dir, "directory for CSV artifacts")->default_val(".");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pn->parsed()) {
            sptfn::SeriesReport rep =
                sptfn::p_rademacher(pn_n, pn_terms, pn_prec, !pn_trace.empty());
            if (!pn_trace.empty())
                write_file(pn_trace, trace_csv(sptfn::convergence_trace(rep)));
            out.write(rep.to_json());
        } else if (spt->parsed()) {
            if (spt_method == "series") {
                long terms = spt_terms > 0 ? spt_terms : sptfn::spt_default_terms(spt_n);
                long window = spt_window >= 0 ? spt_window : terms / 10;
                long prec = spt_prec > 0 ? spt_prec : 64;
                sptfn::SeriesReport rep =
                    sptfn::spt_series(spt_n, terms, prec, sptfn::TailAverage{window},
                                      !spt_trace_path.empty());
                if (!spt_trace_path.empty())
                    write_file(spt_trace_path, trace_csv(sptfn::convergence_trace(rep)));
                out.write(rep.to_json());
            } else if (spt_method == "trace") {
                long prec = spt_prec > 0 ? spt_prec : 256;
                out.write(sptfn::spt_trace(spt_n, prec).to_json());
            } else {
                json j;
                j["version"] = sptfn::kVersion;
                j["n"] = spt_n;
                j["method"] = "oracle";
                j["value"] = sptfn::spt_oracle_series(spt_n).get_str();
                out.write(j.dump());
            }
        } else if (kl->parsed()) {
            json j;
            j["version"] = sptfn::kVersion;
            j["n"] = kl_n;
            j["c"] = kl_c;
            j["prec_bits"] = kl_prec;
            if (kl_multiplier == "eta") {
                sptfn::BigComplex v = sptfn::s_eta(kl_m, kl_n, kl_c, kl_prec);
                j["method"] = "eta_multiplier";
                j["m"] = kl_m;
                j["value_re"] = v.re.str();
                j["value_im"] = v.im.str();
            } else {
                sptfn::BigReal v = kl_method == "direct"
                                       ? sptfn::a_direct(kl_n, kl_c, kl_prec)
                                       : sptfn::a_selberg(kl_n, kl_c, kl_prec);
                j["method"] = kl_method;
                j["value"] = v.str();
            }
            out.write(j.dump());
        } else if (sm->parsed()) {
            sptfn::SummatorySeries s = sptfn::summatory(sm_n, sm_xmax, sm_prec, sm_blocks);
            if (!sm_csv.empty()) {
                write_file(sm_csv, s.to_csv());
                json j;
                j["version"] = sptfn::kVersion;
                j["n"] = sm_n;
                j["xmax"] = sm_xmax;
                j["prec_bits"] = sm_prec;
                j["method"] = "summatory";
                j["csv"] = sm_csv;
                j["main_term_coeff"] = s.main_term_coeff.str();
                out.write(j.dump());
            } else {
                out.write(s.to_csv());
            }
        } else if (fo->parsed()) {
            json j;
            j["version"] = sptfn::kVersion;
            j["n"] = fo_n;
            j["prec_bits"] = fo_prec;
            j["method"] = "forms";
            j["discriminant"] = sptfn::BigInt(1 - 24 * fo_n).get_str();
            json arr = json::array();
            for (const auto& q : sptfn::class_reps(fo_n)) {
                sptfn::BigComplex r = sptfn::root(q, fo_prec);
                arr.push_back({{"form", form_json(q)},
                               {"root_re", r.re.str()},
                               {"root_im", r.im.str()}});
            }
            j["classes"] = arr;
            j["count"] = arr.size();
            out.write(j.dump());
        } else if (cp->parsed()) {
            sptfn::ClassPolynomial poly = sptfn::class_polynomial(cp_n, cp_prec);
            if (cp_format == "text")
                out.write(poly.display());
            else
                out.write(poly.to_json());
        } else if (tr->parsed()) {
            json j;
            j["version"] = sptfn::kVersion;
            j["n"] = tr_n;
            j["prec_bits"] = tr_prec;
            j["method"] = "trace";
            j["function"] = tr_fn;
            sptfn::BigComplex sum(tr_prec);
            json arr = json::array();
            for (const auto& q : sptfn::class_reps(tr_n)) {
                sptfn::BigComplex root_q = sptfn::root(q, tr_prec);
                sptfn::BigComplex v(tr_prec);
                if (tr_fn == "f")
                    v = sptfn::f_eval(root_q, tr_prec);
                else if (tr_fn == "P")
                    v = sptfn::P_eval(root_q, tr_prec);
                else
                    v = sptfn::f_eval(root_q, tr_prec) - sptfn::P_eval(root_q, tr_prec);
                sum = sum + v;
                arr.push_back({{"form", form_json(q)},
                               {"value_re", v.re.str()},
                               {"value_im", v.im.str()}});
            }
            j["values"] = arr;
            j["sum_re"] = sum.re.str();
            j["sum_im"] = sum.im.str();
            out.write(j.dump());
        } else if (en->parsed()) {
            sptfn::BigReal norm =
                sptfn::petersson_eta_norm(sptfn::BigReal::of(en_tol, 128));
            json j;
            j["version"] = sptfn::kVersion;
            j["method"] = "eta_norm";
            j["tol"] = en_tol;
            j["prec_bits"] = 128;
            j["value"] = norm.str();
            out.write(j.dump());
        } else if (ck->parsed()) {
            return run_checks(ck_full && !ck_quick, ck_dir);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
