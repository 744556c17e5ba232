#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fundalc/cache.hpp"
#include "fundalc/classifier.hpp"
#include "fundalc/io.hpp"
#include "fundalc/plot.hpp"
#include "fundalc/verify.hpp"

using namespace fundalc;
using nlohmann::json;

namespace {

// Exit codes: 0 ok, 1 property failure, 2 usage error.
constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

struct EvalRow {
    std::string literal;
    long long length;
    std::string nu_dom;
    std::string kappa;
    bool straight, k_fund, gl_fund;
    std::string witness;
};

EvalRow evaluate(const RootDatum& d, const DiagramAutomorphism& sig, const AffElt& x) {
    EvalRow row;
    row.literal = print_element(d, x);
    row.length = aff_length(d, x);
    NewtonDatum nd = newton_point(d, sig, x);
    row.nu_dom = qvec_str(nd.nu_dom);
    row.kappa = nd.kappa.str();
    FundamentalResult fr = is_fundamental(d, sig, x);
    row.straight = fr.fundamental;
    row.k_fund = is_k_fundamental(d, sig, x);
    row.gl_fund = is_gl_fundamental(d, sig, x);
    if (fr.witness) row.witness = qvec_str(fr.witness->v);
    return row;
}

const char* kClassifyHeader = "literal,length,nu_dom,kappa,straight,k_fund,gl_fund,witness";

void print_row_csv(std::ostream& os, const EvalRow& r) {
    os << csv_quote(r.literal) << "," << r.length << "," << csv_quote(r.nu_dom) << ","
       << csv_quote(r.kappa) << "," << (r.straight ? 1 : 0) << "," << (r.k_fund ? 1 : 0) << ","
       << (r.gl_fund ? 1 : 0) << "," << csv_quote(r.witness) << "\n";
}

json row_json(const EvalRow& r) {
    return json{{"literal", r.literal}, {"length", r.length},   {"nu_dom", r.nu_dom},
                {"kappa", r.kappa},     {"straight", r.straight}, {"k_fund", r.k_fund},
                {"gl_fund", r.gl_fund}, {"witness", r.witness}};
}

IVec parse_ivec(const std::string& s) {
    IVec out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stoll(part));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extended affine Weyl group combinatorics: lengths, drift invariants, "
                 "one-class classification, and reduction certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    int jobs = 1;
    app.add_option("--format", format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", jobs, "Worker threads for verification fan-out");

    // types list
    auto* types = app.add_subcommand("types", "Catalogue information");
    types->add_subcommand("list", "List catalogue keys");

    // eval
    auto* eval = app.add_subcommand("eval", "Classify a single element");
    std::string eval_datum, eval_literal;
    int eval_sigma = 1;
    eval->add_option("datum", eval_datum)->required();
    eval->add_option("elem", eval_literal)->required();
    eval->add_option("--sigma", eval_sigma, "Twist power (default 1)");

    // newton
    auto* newt = app.add_subcommand("newton", "Drift datum of an element");
    std::string newton_datum, newton_literal;
    int newton_sigma = 1;
    newt->add_option("datum", newton_datum)->required();
    newt->add_option("elem", newton_literal)->required();
    newt->add_option("--sigma", newton_sigma, "Twist power (default 1)");

    // classify
    auto* classify = app.add_subcommand("classify", "Classify every element up to a length bound");
    std::string cls_datum;
    long long cls_maxlen = 4;
    int cls_window = 2, cls_sigma = 1;
    bool cls_nocache = false;
    classify->add_option("datum", cls_datum)->required();
    classify->add_option("--max-len", cls_maxlen, "Length bound")->required();
    classify->add_option("--omega-window", cls_window, "Window for infinite length-zero subgroups");
    classify->add_option("--sigma", cls_sigma, "Twist power (default 1)");
    classify->add_flag("--no-cache", cls_nocache, "Skip the enumeration cache");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List elements up to a length bound");
    std::string enum_datum;
    long long enum_maxlen = 4;
    int enum_window = 2, enum_sigma = 1;
    bool enum_nocache = false;
    enumerate->add_option("datum", enum_datum)->required();
    enumerate->add_option("--max-len", enum_maxlen, "Length bound")->required();
    enumerate->add_option("--omega-window", enum_window, "Window for infinite length-zero subgroups");
    enumerate->add_option("--sigma", enum_sigma, "Twist power (default 1)");
    enumerate->add_flag("--no-cache", enum_nocache, "Skip the enumeration cache");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    std::string ver_suite, ver_datum;
    long long ver_maxlen = 6;
    int ver_window = 2, ver_sigma = 1;
    bool ver_nocache = false;
    verify->add_option("suite", ver_suite)->required();
    verify->add_option("datum", ver_datum)->required();
    verify->add_option("--max-len", ver_maxlen, "Length bound");
    verify->add_option("--omega-window", ver_window, "Window for infinite length-zero subgroups");
    verify->add_option("--sigma", ver_sigma, "Twist power (default 1)");
    verify->add_flag("--no-cache", ver_nocache, "Skip the enumeration cache");

    // minuscule
    auto* minus = app.add_subcommand("minuscule", "Minuscule double coset report");
    std::string min_datum, min_mu;
    int min_sigma = 1;
    minus->add_option("datum", min_datum)->required();
    minus->add_option("--mu", min_mu, "Cocharacter a,b,...")->required();
    minus->add_option("--sigma", min_sigma, "Twist power (default 1)");

    // plot
    auto* plot = app.add_subcommand("plot", "Alcove picture (semisimple rank 1 or 2)");
    std::string plot_datum, plot_out;
    std::vector<std::string> plot_elems;
    std::string plot_v;
    int plot_window = 3;
    plot->add_option("datum", plot_datum)->required();
    plot->add_option("elem", plot_elems, "Element literals")->required();
    plot->add_option("--v", plot_v, "Direction vector p/q,p/q,...");
    plot->add_option("--window", plot_window, "Hyperplane level window");
    plot->add_option("--out", plot_out, "Output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (types->parsed()) {
            if (format == "json") {
                json j = json::array();
                for (const auto& [key, note] : catalogue_entries())
                    j.push_back({{"key", key}, {"note", note}});
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "key,note\n";
                for (const auto& [key, note] : catalogue_entries())
                    std::cout << csv_quote(key) << "," << csv_quote(note) << "\n";
            }
            return kOk;
        }

        if (eval->parsed()) {
            RootDatum d = build_root_datum(eval_datum);
            DiagramAutomorphism sig = sigma_power(d, eval_sigma);
            AffElt x = parse_element(d, eval_literal);
            EvalRow row = evaluate(d, sig, x);
            if (format == "json") std::cout << row_json(row).dump(2) << "\n";
            else {
                std::cout << kClassifyHeader << "\n";
                print_row_csv(std::cout, row);
            }
            return kOk;
        }

        if (newt->parsed()) {
            RootDatum d = build_root_datum(newton_datum);
            DiagramAutomorphism sig = sigma_power(d, newton_sigma);
            AffElt x = parse_element(d, newton_literal);
            std::cout << newton_json(d, newton_point(d, sig, x)) << "\n";
            return kOk;
        }

        if (enumerate->parsed()) {
            RootDatum d = build_root_datum(enum_datum);
            auto elements = cached_enumeration(d, enum_datum, enum_sigma, enum_maxlen, enum_window,
                                               !enum_nocache);
            if (format == "json") {
                json j = json::array();
                for (const AffElt& x : elements)
                    j.push_back({{"literal", print_element(d, x)}, {"length", aff_length(d, x)}});
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "literal,length\n";
                for (const AffElt& x : elements)
                    std::cout << csv_quote(print_element(d, x)) << "," << aff_length(d, x) << "\n";
            }
            return kOk;
        }

        if (classify->parsed()) {
            RootDatum d = build_root_datum(cls_datum);
            DiagramAutomorphism sig = sigma_power(d, cls_sigma);
            auto elements = cached_enumeration(d, cls_datum, cls_sigma, cls_maxlen, cls_window,
                                               !cls_nocache);
            std::vector<EvalRow> rows(elements.size());
            for (size_t i = 0; i < elements.size(); ++i) rows[i] = evaluate(d, sig, elements[i]);
            if (format == "json") {
                json j = json::array();
                for (const auto& r : rows) j.push_back(row_json(r));
                std::cout << j.dump() << "\n";
            } else {
                std::cout << kClassifyHeader << "\n";
                for (const auto& r : rows) print_row_csv(std::cout, r);
            }
            return kOk;
        }

        if (verify->parsed()) {
            VerifyOptions opt;
            opt.datum_key = ver_datum;
            opt.max_len = ver_maxlen;
            opt.omega_window = ver_window;
            opt.sigma_power = ver_sigma;
            opt.jobs = jobs;
            opt.use_cache = !ver_nocache;
            std::vector<PropertyResult> results = run_suite(ver_suite, opt);
            bool all = true;
            if (format == "json") {
                json j = json::array();
                for (const auto& r : results) {
                    j.push_back({{"property", r.name},
                                 {"pass", r.pass},
                                 {"checked", r.checked},
                                 {"counterexamples", r.counterexamples},
                                 {"note", r.note}});
                    all = all && r.pass;
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "property,pass,checked,counterexample,note\n";
                for (const auto& r : results) {
                    std::cout << csv_quote(r.name) << "," << (r.pass ? "pass" : "FAIL") << ","
                              << r.checked << ","
                              << csv_quote(r.counterexamples.empty() ? "" : r.counterexamples[0])
                              << "," << csv_quote(r.note) << "\n";
                    all = all && r.pass;
                }
            }
            return all ? kOk : kPropertyFailure;
        }

        if (minus->parsed()) {
            RootDatum d = build_root_datum(min_datum);
            DiagramAutomorphism sig = sigma_power(d, min_sigma);
            MinusculeReport rep = minuscule_report(d, sig, parse_ivec(min_mu));
            if (format == "json") {
                json j = json::array();
                for (const auto& row : rep.rows)
                    j.push_back({{"literal", print_element(d, row.elt)},
                                 {"length", row.length},
                                 {"straight_rep", print_element(d, row.straight_rep)},
                                 {"nu_dom", qvec_str(row.nu_dom)},
                                 {"kappa", row.kappa.str()},
                                 {"witness", row.witness ? print_element(d, *row.witness) : ""},
                                 {"ok", row.ok}});
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "literal,length,straight_rep,nu_dom,kappa,witness,ok\n";
                for (const auto& row : rep.rows)
                    std::cout << csv_quote(print_element(d, row.elt)) << "," << row.length << ","
                              << csv_quote(print_element(d, row.straight_rep)) << ","
                              << csv_quote(qvec_str(row.nu_dom)) << "," << csv_quote(row.kappa.str())
                              << ","
                              << csv_quote(row.witness ? print_element(d, *row.witness) : "") << ","
                              << (row.ok ? 1 : 0) << "\n";
            }
            return rep.all_ok ? kOk : kPropertyFailure;
        }

        if (plot->parsed()) {
            RootDatum d = build_root_datum(plot_datum);
            std::vector<AffElt> xs;
            for (const std::string& lit : plot_elems) xs.push_back(parse_element(d, lit));
            PlotOptions popt;
            popt.window = plot_window;
            if (!plot_v.empty()) {
                QVec v;
                std::stringstream ss(plot_v);
                std::string part;
                while (std::getline(ss, part, ',')) v.push_back(Rat::parse(part));
                popt.v = v;
            }
            plot_rank2_file(d, xs, popt, plot_out);
            std::cout << "wrote " << plot_out << "\n";
            return kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPropertyFailure;
    }
    return kUsage;
}
