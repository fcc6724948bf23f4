#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kostka/kostka.hpp"

using namespace kostka;
using io::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    int n = 1;
    int r = 3;
    std::string order = "default";
    std::string method = "cosets";
    std::string format = "json";
    std::string out;
    std::string suite;
    std::vector<long> q;
    std::vector<std::string> emit;
    std::vector<std::string> fixtures;
    int samples = 4;
    std::uint64_t seed = 1;
    int coset_max_n = kCosetMaxN;
    long wreath_limit = kWreathMaxWork;
    unsigned threads = 0;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InvalidArgument("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void check_shape(const Options& o) {
    if (o.n < 0) throw InvalidArgument("--n must be >= 0");
    if (o.r < 1) throw InvalidArgument("--r must be >= 1");
}

OrderedIndex resolve_order(const Options& o) {
    if (o.order == "default") return default_total_order(o.n, o.r);
    if (o.order.rfind("fixture:", 0) == 0) {
        const auto f = io::load_fixture(o.order.substr(8));
        if (f.n != o.n || f.r != o.r)
            throw InvalidArgument("fixture " + f.id + " is for n=" + std::to_string(f.n) + ", r=" + std::to_string(f.r));
        return f.order;
    }
    if (o.order.rfind("file:", 0) == 0) {
        std::ifstream in(o.order.substr(5));
        if (!in) throw InvalidArgument("cannot read order file " + o.order.substr(5));
        // A blank line ends the order, so files written by `orders --format text` use their first order.
        std::vector<std::string> lines;
        for (std::string line; std::getline(in, line);) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
            else if (!lines.empty()) break;
        }
        return order_from_strings(lines, o.n, o.r);
    }
    throw InvalidArgument("--order must be default, fixture:ID or file:PATH");
}

OmegaOptions omega_options(const Options& o, OmegaMethod method) {
    OmegaOptions opt;
    opt.method = method;
    opt.coset_max_n = o.coset_max_n;
    opt.wreath_limit = o.wreath_limit;
    opt.threads = o.threads;
    return opt;
}

int cmd_enumerate(const Options& o) {
    check_shape(o);
    const auto order = resolve_order(o);
    Output out(o.out);
    auto& os = out.stream();
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& l : order.items())
            rows.push_back({{"lambda", l.to_string()}, {"n", n_value(l)}, {"a", a_value(l)},
                            {"tau", tau(l).to_string()}, {"dim_X", dim_X(l)}});
        os << json{{"n", o.n}, {"r", o.r}, {"rpartitions", rows}}.dump(2) << '\n';
    } else if (o.format == "csv") {
        os << "lambda,n,a,tau,dim_X\n";
        for (const auto& l : order.items())
            os << l.to_string() << ',' << n_value(l) << ',' << a_value(l) << ',' << tau(l).to_string() << ','
               << dim_X(l) << '\n';
    } else {
        os << "\\begin{tabular}{c|c|c|c|c}\n$\\lambda$ & $n$ & $a$ & $\\tau$ & $\\dim X$ \\\\\n\\hline\n";
        for (const auto& l : order.items())
            os << "$" << l.to_string() << "$ & " << n_value(l) << " & " << a_value(l) << " & $" << tau(l).to_string()
               << "$ & " << dim_X(l) << " \\\\\n";
        os << "\\end{tabular}\n";
    }
    return 0;
}

void write_matrix(std::ostream& os, const std::string& format, const OrderedIndex& order, const LaurentMatrix& m) {
    if (format == "csv") os << io::matrix_csv(order, m);
    else os << io::matrix_latex(m);
}

int cmd_omega(const Options& o) {
    check_shape(o);
    const auto order = resolve_order(o);
    Output out(o.out);
    auto& os = out.stream();
    if (o.method == "both") {
        const auto fast = omega_matrix(order, omega_options(o, OmegaMethod::Cosets));
        const auto slow = omega_matrix(order, omega_options(o, OmegaMethod::Wreath));
        const bool equal = fast.entries == slow.entries;
        if (o.format == "json") {
            auto j = io::to_json(fast);
            j["verdict"] = equal ? "equal" : "different";
            os << j.dump(2) << '\n';
        } else {
            write_matrix(os, o.format, order, fast.entries);
            std::cerr << "verdict: " << (equal ? "equal" : "different") << '\n';
        }
        return equal ? 0 : kExitFail;
    }
    const auto om = omega_matrix(order, omega_options(o, o.method == "wreath" ? OmegaMethod::Wreath : OmegaMethod::Cosets));
    if (o.format == "json") os << io::to_json(om).dump(2) << '\n';
    else write_matrix(os, o.format, order, om.entries);
    return 0;
}

int cmd_solve(const Options& o) {
    check_shape(o);
    const auto order = resolve_order(o);
    std::vector<std::string> blocks = o.emit.empty() ? io::factorization_blocks() : o.emit;
    for (const auto& b : blocks)
        if (std::find(io::factorization_blocks().begin(), io::factorization_blocks().end(), b) ==
            io::factorization_blocks().end())
            throw InvalidArgument("unknown --emit block " + b);
    const auto om = omega_matrix(order, omega_options(o, o.method == "wreath" ? OmegaMethod::Wreath : OmegaMethod::Cosets));
    const auto res = solve_factorization(om);
    Output out(o.out);
    auto& os = out.stream();
    if (o.format == "json") {
        os << io::to_json(res, blocks).dump(2) << '\n';
    } else if (o.format == "csv") {
        for (const auto& b : blocks) {
            os << "# " << b << '\n';
            if (b == "lambda") os << io::diagonal_csv(res);
            else if (b == "omega") os << io::matrix_csv(order, res.omega.entries);
            else if (b == "p-minus") os << io::matrix_csv(order, res.p_minus);
            else if (b == "p-plus") os << io::matrix_csv(order, res.p_plus);
            else if (b == "p-plus-modified") os << io::matrix_csv(order, modified_pplus(res));
            else if (b == "ic-minus") os << io::matrix_csv(order, ic_minus_matrix(res).in_t);
            else if (b == "ic-plus") os << io::matrix_csv(order, ic_plus_candidate(res).matrix.in_t);
            else {
                const auto diag = b == "theta" ? io::to_json(theta_matrix(res)) : io::to_json(lambda_prime(res));
                os << "lambda,value\n";
                for (std::size_t k = 0; k < order.size(); ++k)
                    os << order[k].to_string() << ',' << diag[k].get<std::string>() << '\n';
            }
        }
    } else if (o.emit.empty()) {
        os << io::factorization_latex(res);
    } else {
        for (const auto& b : blocks) {
            os << "% " << b << '\n';
            if (b == "omega") os << io::matrix_latex(res.omega.entries);
            else if (b == "p-minus") os << io::matrix_latex(res.p_minus);
            else if (b == "p-plus") os << io::matrix_latex(res.p_plus);
            else if (b == "p-plus-modified") os << io::matrix_latex(modified_pplus(res));
            else if (b == "ic-minus") os << io::matrix_latex(ic_minus_matrix(res).in_t);
            else if (b == "ic-plus") os << io::matrix_latex(ic_plus_candidate(res).matrix.in_t);
            else {
                const auto diag = b == "lambda" ? io::to_json(res.lambda)
                                  : b == "theta" ? io::to_json(theta_matrix(res))
                                                 : io::to_json(lambda_prime(res));
                os << "\\mathrm{Diag}(";
                for (std::size_t k = 0; k < diag.size(); ++k) os << (k ? ", " : "") << io::detail::latex_poly(diag[k].get<std::string>());
                os << ")\n";
            }
        }
    }
    return 0;
}

int cmd_verify(const Options& o) {
    const auto& names = verify::suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end())
        throw InvalidArgument("unknown suite '" + o.suite + "'");
    check_shape(o);
    CheckReport rep;
    json extra;
    if (o.suite == "fixtures") {
        rep = verify::fixtures_suite(o.fixtures.empty() ? verify::default_fixture_ids() : o.fixtures);
    } else if (o.suite == "lemma59") {
        rep = verify::lemma59_suite(o.n, o.r);
    } else if (o.suite == "thm55") {
        rep = thm55_check(o.n, o.r);
        if (!o.q.empty()) {
            auto num = thm55_check_numeric(o.n, o.r, o.q);
            rep.checked += num.checked;
            rep.violations.insert(rep.violations.end(), num.violations.begin(), num.violations.end());
        }
    } else if (o.suite == "oracle") {
        rep = verify::oracle_suite(o.n, o.r, o.wreath_limit);
    } else if (o.suite == "symmetry") {
        const auto order = resolve_order(o);
        rep = verify::symmetry_suite(solve_factorization(omega_matrix(order, omega_options(o, OmegaMethod::Cosets))));
    } else if (o.suite == "classical-r1") {
        rep = verify::classical_suite(o.n);
    } else {
        auto outcome = verify::orders_suite(o.n, o.r, o.samples, o.seed, omega_options(o, OmegaMethod::Cosets));
        rep = outcome.report;
        extra["comparable_differences"] = outcome.sensitivity.comparable.size();
        extra["incomparable_differences"] = outcome.sensitivity.incomparable.size();
        json diffs = json::array();
        for (const auto& e : outcome.sensitivity.comparable) {
            json vals = json::array();
            for (const auto& v : e.values) vals.push_back(v.to_string());
            diffs.push_back({{"lambda", e.lambda.to_string()}, {"mu", e.mu.to_string()},
                             {"sign", std::string(1, e.sign)}, {"values", vals}});
        }
        extra["comparable"] = diffs;
    }
    auto j = io::to_json(rep);
    if (!extra.is_null()) j["details"] = extra;
    Output out(o.out);
    out.stream() << j.dump(2) << '\n';
    return rep.pass() ? 0 : kExitFail;
}

int cmd_orders(const Options& o) {
    check_shape(o);
    const auto orders = sample_linear_extensions(o.n, o.r, o.samples, o.seed);
    Output out(o.out);
    auto& os = out.stream();
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& ord : orders) arr.push_back(io::to_json(ord));
        os << json{{"n", o.n}, {"r", o.r}, {"seed", o.seed}, {"orders", arr}}.dump(2) << '\n';
    } else {
        // Order-file format, blank line between orders.
        for (std::size_t k = 0; k < orders.size(); ++k) {
            if (k) os << '\n';
            for (const auto& l : orders[k].items()) os << l.to_string() << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kostka functions for complex reflection groups G(r,1,n)"};
    app.require_subcommand(1);
    Options o;

    auto shape = [&](CLI::App* c) {
        c->add_option("--n", o.n, "number of boxes")->capture_default_str();
        c->add_option("--r", o.r, "number of components")->capture_default_str();
        c->add_option("--out", o.out, "write output to this file instead of stdout");
        c->add_option("--coset-max-n", o.coset_max_n, "raise the coset-route guardrail (n <= 6)")
            ->check(CLI::Range(0, kDoubleCosetMaxN));
        c->add_option("--wreath-limit", o.wreath_limit, "raise the wreath-oracle guardrail on n*r^n (20000)");
        c->add_option("--threads", o.threads, "worker threads for the coset route (0: all cores)");
    };
    auto format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json, csv or latex")
            ->check(CLI::IsMember({"json", "csv", "latex"}))
            ->capture_default_str();
    };
    auto order = [&](CLI::App* c) {
        c->add_option("--order", o.order, "default, fixture:ID or file:PATH")->capture_default_str();
    };

    auto* enumerate = app.add_subcommand("enumerate", "list r-partitions with n, a, tau and dim X");
    shape(enumerate);
    format(enumerate);
    order(enumerate);

    auto* omega = app.add_subcommand("omega", "compute the fake-degree matrix");
    shape(omega);
    format(omega);
    order(omega);
    omega->add_option("--method", o.method, "cosets, wreath or both")
        ->check(CLI::IsMember({"cosets", "wreath", "both"}))
        ->capture_default_str();

    auto* solve = app.add_subcommand("solve", "factorize and emit Kostka matrices");
    shape(solve);
    format(solve);
    order(solve);
    solve->add_option("--method", o.method, "cosets or wreath")
        ->check(CLI::IsMember({"cosets", "wreath"}))
        ->capture_default_str();
    solve->add_option("--emit", o.emit, "blocks: omega p-minus p-plus lambda theta lambda-prime p-plus-modified ic-minus ic-plus")
        ->delimiter(',');

    auto* verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
    shape(verify);
    order(verify);
    verify->add_option("--suite", o.suite, "fixtures, lemma59, thm55, oracle, symmetry, classical-r1 or orders")->required();
    verify->add_option("--q", o.q, "integer q values for the numeric check")->delimiter(',')->check(CLI::Range(2L, 1000000L));
    verify->add_option("--fixture", o.fixtures, "restrict the fixtures suite to these ids")->delimiter(',');
    verify->add_option("--samples", o.samples, "number of sampled total orders")->capture_default_str();
    verify->add_option("--seed", o.seed, "seed for order sampling")->capture_default_str();

    auto* orders = app.add_subcommand("orders", "sample total orders refining dominance");
    shape(orders);
    orders->add_option("--samples", o.samples, "number of orders")->capture_default_str();
    orders->add_option("--seed", o.seed, "random seed")->capture_default_str();
    orders->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(o);
        if (*omega) return cmd_omega(o);
        if (*solve) return cmd_solve(o);
        if (*verify) return cmd_verify(o);
        return cmd_orders(o);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << " (see --coset-max-n / --wreath-limit)\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
}
