// qhall: exact Hall-Littlewood / Kostka-Foulkes combinatorics from the
// command line. Everything is integer-exact; output is deterministic.

#include "qhall/hl.hpp"
#include "qhall/json_io.hpp"
#include "qhall/pgroups.hpp"
#include "qhall/qseries.hpp"
#include "qhall/rc.hpp"
#include "qhall/stats.hpp"
#include "qhall/tableaux.hpp"
#include "qhall/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace qhall;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty() || s == "-") return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

Partition parse_partition(const std::string& s) {
    return Partition(parse_ints(s));
}

Word parse_word(const std::string& s) {
    if (s.find(',') != std::string::npos) return parse_ints(s);
    Word w;
    for (char c : s) {
        if (c < '1' || c > '9')
            throw CLI::ValidationError("word", "letters above 9 need commas");
        w.push_back(c - '0');
    }
    return w;
}

// rows separated by '/', entries by commas: "1,1,2/1,2/1"
Tabloid parse_tabloid(const std::string& s) {
    Tabloid t;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find('/', pos);
        if (next == std::string::npos) next = s.size();
        t.rows.push_back(parse_ints(s.substr(pos, next - pos)));
        pos = next + 1;
        if (next == s.size()) break;
    }
    return t;
}

RectangleSequence parse_rects(const std::string& s) {
    RectangleSequence R;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        std::size_t x = tok.find('x');
        if (x == std::string::npos)
            throw CLI::ValidationError("rects", "expected HxW tokens");
        R.push_back({std::stoi(tok.substr(0, x)), std::stoi(tok.substr(x + 1))});
        pos = next + 1;
    }
    return R;
}

// half-integers as "p" or "p/2"
int parse_half_integer_doubled(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return 2 * std::stoi(s);
    int num = std::stoi(s.substr(0, slash));
    int den = std::stoi(s.substr(slash + 1));
    if (den != 1 && den != 2)
        throw CLI::ValidationError("a", "denominator must be 1 or 2");
    return den == 1 ? 2 * num : num;
}

struct Output {
    std::string format = "text";

    void poly(const LaurentPoly& p, const std::string& var) const {
        if (format == "json")
            std::cout << to_json(p, var).dump() << "\n";
        else
            std::cout << p.to_string(var) << "\n";
    }
    void integer(const Int& v) const {
        if (format == "json")
            std::cout << nlohmann::json{{"value", v.str()}}.dump() << "\n";
        else
            std::cout << v.str() << "\n";
    }
    void partition(const Partition& p) const {
        if (format == "json")
            std::cout << to_json(p).dump() << "\n";
        else
            std::cout << p.to_string() << "\n";
    }
    void expansion(const ExpansionMap& m, const std::string& var) const {
        if (format == "json") {
            std::cout << to_json(m, var).dump() << "\n";
        } else {
            for (const auto& [p, c] : m)
                std::cout << p.to_string() << "  ->  " << c.to_string(var) << "\n";
        }
    }
};

int print_suite(const SuiteResult& res, const Output& out) {
    if (out.format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : res.checks)
            checks.push_back(
                {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        std::cout << nlohmann::json{{"suite", res.suite},
                                    {"passed", res.all_passed()},
                                    {"checks", checks}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& c : res.checks) {
            std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
        std::cout << res.suite << ": " << res.checks.size() - res.failures()
                  << "/" << res.checks.size() << " checks passed\n";
    }
    return res.all_passed() ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hall-Littlewood and Kostka-Foulkes combinatorics"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string la_s, mu_s, nu_s, eta_s, word_s, rects_s, order_s, l_s, a_s,
        tabloid_s, rows_s, cols_s, shape_s;
    int n_opt = 0, k_opt = 0, m_opt = 0, max_weight = 5, jobs = 1;

    auto* compute = app.add_subcommand("compute", "compute one quantity");
    compute->require_subcommand(1);

    auto add_target = [&](const std::string& name, const std::string& help,
                          std::function<void()> fn) {
        auto* sub = compute->add_subcommand(name, help);
        sub->callback(std::move(fn));
        return sub;
    };

    {
        auto* s = add_target("p-poly", "flag-sum polynomial", [&]() {
            out.poly(p_poly_fermionic(parse_partition(la_s), parse_ints(mu_s)), "t");
        });
        s->add_option("--lambda", la_s)->required();
        s->add_option("--mu", mu_s)->required();
    }
    {
        auto* s = add_target("p-poly-def", "Kostka-sum polynomial", [&]() {
            out.poly(p_poly_def(parse_partition(la_s), parse_ints(mu_s)), "t");
        });
        s->add_option("--lambda", la_s)->required();
        s->add_option("--mu", mu_s)->required();
    }
    {
        auto* s = add_target("r-poly", "horizontal-strip flag sum", [&]() {
            out.poly(r_poly_fermionic(parse_partition(la_s), parse_ints(mu_s)), "t");
        });
        s->add_option("--lambda", la_s)->required();
        s->add_option("--mu", mu_s)->required();
    }
    {
        auto* s = add_target("r-poly-def", "conjugate Kostka sum", [&]() {
            out.poly(r_poly_def(parse_partition(la_s), parse_ints(mu_s)), "t");
        });
        s->add_option("--lambda", la_s)->required();
        s->add_option("--mu", mu_s)->required();
    }
    {
        auto* s = add_target("kostka", "Kostka number", [&]() {
            out.integer(kostka_number(parse_partition(eta_s), parse_ints(mu_s)));
        });
        s->add_option("--eta", eta_s)->required();
        s->add_option("--mu", mu_s)->required();
    }
    {
        auto* s = add_target("kostka-foulkes", "charge generating polynomial", [&]() {
            out.poly(kostka_foulkes(parse_partition(eta_s), parse_ints(mu_s)), "t");
        });
        s->add_option("--eta", eta_s)->required();
        s->add_option("--mu", mu_s)->required();
    }
    {
        auto* s = add_target("cocharge-kf", "cocharge normalization", [&]() {
            out.poly(cocharge_kf(parse_partition(eta_s), parse_partition(la_s)), "t");
        });
        s->add_option("--eta", eta_s)->required();
        s->add_option("--lambda", la_s)->required();
    }
    {
        auto* s = add_target("hook-kf", "hook form of the column case", [&]() {
            Partition la = parse_partition(la_s);
            out.poly(kf_hook_column(la, la.weight()), "q");
        });
        s->add_option("--lambda", la_s)->required();
    }
    {
        auto* s = add_target("conjugate", "conjugate partition", [&]() {
            out.partition(conjugate(parse_partition(la_s)));
        });
        s->add_option("--lambda", la_s)->required();
    }
    {
        auto* s = add_target("q-binomial", "Gaussian binomial", [&]() {
            out.poly(q_binomial(n_opt, k_opt), "q");
        });
        s->add_option("-n", n_opt)->required();
        s->add_option("-k", k_opt)->required();
    }
    {
        auto* s = add_target("q-multinomial", "Gaussian multinomial", [&]() {
            out.poly(q_multinomial(n_opt, parse_ints(mu_s)), "q");
        });
        s->add_option("-n", n_opt)->required();
        s->add_option("--mu", mu_s)->required();
    }
    {
        auto* s = add_target("qprime-monomial", "monomial expansion", [&]() {
            out.expansion(qprime_monomial_expansion(parse_partition(la_s)), "t");
        });
        s->add_option("--lambda", la_s)->required();
    }
    {
        auto* s = add_target("qprime-schur", "Schur expansion", [&]() {
            out.expansion(qprime_schur_expansion(parse_partition(la_s)), "t");
        });
        s->add_option("--lambda", la_s)->required();
    }
    {
        auto* s = add_target("hl-in-schur", "P on the Schur basis", [&]() {
            out.expansion(hl_in_schur(parse_partition(mu_s)), "t");
        });
        s->add_option("--mu", mu_s)->required();
    }
    {
        auto* s = add_target("structure-constant", "basis structure constant", [&]() {
            out.poly(hl_structure_constant(parse_partition(mu_s),
                                           parse_partition(nu_s),
                                           parse_partition(la_s)),
                     "t");
        });
        s->add_option("--mu", mu_s)->required();
        s->add_option("--nu", nu_s)->required();
        s->add_option("--lambda", la_s)->required();
    }
    {
        auto* s = add_target("mixed", "Schur-times-P coefficient", [&]() {
            out.poly(mixed_coeff(parse_partition(mu_s), parse_partition(nu_s),
                                 parse_partition(la_s)),
                     "t");
        });
        s->add_option("--mu", mu_s)->required();
        s->add_option("--nu", nu_s)->required();
        s->add_option("--lambda", la_s)->required();
    }
    {
        auto* s = add_target("pieri-e", "column Pieri coefficient", [&]() {
            out.poly(pieri_e_coeff(parse_partition(la_s), parse_partition(mu_s), m_opt),
                     "t");
        });
        s->add_option("--lambda", la_s)->required();
        s->add_option("--mu", mu_s)->required();
        s->add_option("-m", m_opt)->required();
    }
    {
        auto* s = add_target("pieri-h", "row Pieri coefficient", [&]() {
            out.poly(pieri_h_coeff(parse_partition(la_s), parse_partition(mu_s)), "t");
        });
        s->add_option("--lambda", la_s)->required();
        s->add_option("--mu", mu_s)->required();
    }
    {
        auto* s = add_target("supernomial", "supernomial coefficient", [&]() {
            out.poly(supernomial(parse_ints(l_s), parse_half_integer_doubled(a_s)),
                     "t");
        });
        s->add_option("--l", l_s, "column multiplicities")->required();
        s->add_option("--a", a_s, "half-integer, e.g. 3/2")->required();
    }
    {
        auto* s = add_target("t-multinomial", "partition-indexed multinomial", [&]() {
            out.poly(t_multinomial(parse_partition(la_s), parse_ints(mu_s)), "t");
        });
        s->add_option("--lambda", la_s)->required();
        s->add_option("--mu", mu_s)->required();
    }
    {
        auto* s = add_target("lr", "Littlewood-Richardson coefficient", [&]() {
            out.integer(lr_coefficient(parse_partition(la_s), parse_partition(mu_s),
                                       parse_partition(nu_s)));
        });
        s->add_option("--lambda", la_s)->required();
        s->add_option("--mu", mu_s)->required();
        s->add_option("--nu", nu_s)->required();
    }
    {
        auto* s = add_target("rc", "rigged configuration polynomial", [&]() {
            out.poly(rc_poly(parse_partition(la_s), parse_rects(rects_s)), "q");
        });
        s->add_option("--lambda", la_s)->required();
        s->add_option("--rects", rects_s, "HxW tokens, comma separated")->required();
    }
    {
        auto* s = add_target("tensor-mult", "iterated LR multiplicity", [&]() {
            out.integer(
                tensor_multiplicity(parse_partition(la_s), parse_rects(rects_s)));
        });
        s->add_option("--lambda", la_s)->required();
        s->add_option("--rects", rects_s)->required();
    }

    // stat: one statistic on one object
    std::string stat_id;
    auto* stat = app.add_subcommand("stat", "evaluate a statistic");
    stat->add_option("id", stat_id,
                     "inv|maj|majmod|z|zmod|den|lp|charge|d|e|v|zel-tabloid")
        ->required();
    stat->add_option("--word", word_s, "word, digits or comma separated");
    stat->add_option("--tabloid", tabloid_s, "rows as 1,1,2/1,2/1");
    stat->callback([&]() {
        long v;
        if (!word_s.empty()) {
            v = word_stat(word_stat_from_name(stat_id), parse_word(word_s));
        } else if (!tabloid_s.empty()) {
            Tabloid t = parse_tabloid(tabloid_s);
            if (stat_id == "zel-tabloid")
                v = zel_tabloid(t);
            else
                v = tabloid_stat(tabloid_stat_from_name(stat_id), t);
        } else {
            throw CLI::ValidationError("stat", "needs --word or --tabloid");
        }
        out.integer(v);
    });

    // dist: generating polynomial of a statistic over a carrier
    std::string dist_id;
    auto* dist = app.add_subcommand("dist", "distribution over a carrier");
    dist->add_option("id", dist_id,
                     "word statistic over M(weight); d|e|v over tabloids of "
                     "--shape; zel|ch over 0/1 matrices with --rows/--cols")
        ->required();
    dist->add_option("--weight", mu_s);
    dist->add_option("--shape", shape_s);
    dist->add_option("--rows", rows_s);
    dist->add_option("--cols", cols_s);
    dist->callback([&]() {
        LaurentPoly d;
        if (dist_id == "zel" || dist_id == "ch") {
            MatrixStat id = dist_id == "zel" ? MatrixStat::ZEL : MatrixStat::CH;
            for_each_zero_one_matrix(parse_ints(rows_s), parse_ints(cols_s),
                                     [&](const ZeroOneMatrix& m) {
                                         d.add_term(matrix_stat(id, m), 1);
                                     });
        } else if (dist_id == "d" || dist_id == "e" || dist_id == "v") {
            TabloidStat id = tabloid_stat_from_name(dist_id);
            for_each_tabloid(parse_ints(shape_s), parse_ints(mu_s),
                             [&](const Tabloid& t) {
                                 d.add_term(tabloid_stat(id, t), 1);
                             });
        } else {
            WordStat id = word_stat_from_name(dist_id);
            for_each_word(parse_ints(mu_s),
                          [&](const Word& w) { d.add_term(word_stat(id, w), 1); });
        }
        out.poly(d, "t");
    });

    // subgroups
    auto* subs = app.add_subcommand("subgroups", "chain counts in abelian p-groups");
    subs->add_option("--lambda", la_s)->required();
    subs->add_option("--order-set", order_s, "strictly increasing orders a_1<...<a_m");
    bool want_beta = false;
    int gen_k = -1;
    subs->add_flag("--beta", want_beta, "alternating Betti polynomial");
    subs->add_option("--gen-binomial", gen_k, "subgroups of order p^k, all types");
    subs->callback([&]() {
        Partition la = parse_partition(la_s);
        if (gen_k >= 0) {
            out.poly(gen_binomial(la, gen_k), "p");
            return;
        }
        OrderSet S(parse_ints(order_s), la.weight());
        out.poly(want_beta ? beta(la, S) : alpha_S(la, S), "p");
    });

    // rc shortcut at top level
    auto* rc_cmd = app.add_subcommand("rc", "rigged configuration polynomial");
    rc_cmd->add_option("--lambda", la_s)->required();
    rc_cmd->add_option("--rects", rects_s)->required();
    rc_cmd->callback([&]() {
        out.poly(rc_poly(parse_partition(la_s), parse_rects(rects_s)), "q");
    });

    // verify / scan
    int verify_rc = kExitOk;
    std::string suite_name;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("suite", suite_name, "suite name or 'all'")->required();
    verify->add_option("--max-weight", max_weight, "sweep bound")
        ->capture_default_str();
    verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    verify->callback([&]() {
        if (suite_name == "all") {
            for (const auto& name : verify_suite_names()) {
                SuiteResult r = run_suite(name, max_weight, jobs);
                int rc2 = print_suite(r, out);
                if (rc2 != kExitOk) verify_rc = rc2;
            }
        } else {
            verify_rc = print_suite(run_suite(suite_name, max_weight, jobs), out);
        }
    });

    auto* scan = app.add_subcommand("scan", "report-only coefficient scans");
    scan->add_option("suite", suite_name)->required();
    scan->add_option("--max-weight", max_weight)->capture_default_str();
    scan->callback([&]() {
        if (suite_name != "hl-positivity")
            throw CLI::ValidationError("scan", "unknown scan: " + suite_name);
        verify_rc = print_suite(scan_hl_positivity(max_weight), out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return verify_rc;
}
