#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/exact/laurent.hpp"
#include "kostka/exact/matrix.hpp"
#include "kostka/exact/rational_function.hpp"
#include "kostka/factor/factorization.hpp"
#include "kostka/greencheck/green.hpp"
#include "kostka/omega/omega.hpp"
#include "kostka/rpart/order.hpp"

namespace kostka::io {

using nlohmann::json;

inline json to_json(const LaurentMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline LaurentMatrix laurent_matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    LaurentMatrix m(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != j.size()) throw ParseError("matrix is not square");
        for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = LaurentPoly::parse(j[i][k].get<std::string>());
    }
    return m;
}

template <class T>
json to_json(const std::vector<T>& diag) {
    json out = json::array();
    for (const auto& v : diag) out.push_back(v.to_string());
    return out;
}

inline std::vector<RationalFunction> rational_list_from_json(const json& j) {
    std::vector<RationalFunction> out;
    for (const auto& v : j) out.push_back(RationalFunction::parse(v.get<std::string>()));
    return out;
}

inline std::vector<LaurentPoly> laurent_list_from_json(const json& j) {
    std::vector<LaurentPoly> out;
    for (const auto& v : j) out.push_back(LaurentPoly::parse(v.get<std::string>()));
    return out;
}

inline json to_json(const OrderedIndex& order) {
    json out = json::array();
    for (const auto& l : order.items()) out.push_back(l.to_string());
    return out;
}

inline OrderedIndex order_from_json(const json& j, int n, int r) {
    return order_from_strings(j.get<std::vector<std::string>>(), n, r);
}

inline json to_json(const OmegaMatrix& om) {
    return json{{"n", om.n}, {"r", om.r}, {"order", to_json(om.order)}, {"entries", to_json(om.entries)}};
}

inline OmegaMatrix omega_from_json(const json& j) {
    const int n = j.at("n").get<int>(), r = j.at("r").get<int>();
    OmegaMatrix om{n, r, order_from_json(j.at("order"), n, r), laurent_matrix_from_json(j.at("entries"))};
    if (om.entries.size() != om.order.size()) throw ParseError("omega entries do not match the order");
    return om;
}

inline json to_json(const FlaggedMatrix& m) {
    json valid = json::array();
    for (std::size_t i = 0; i < m.in_t.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.in_t.size(); ++k) row.push_back(m.ok(i, k));
        valid.push_back(std::move(row));
    }
    return json{{"t", to_json(m.in_t)}, {"s", to_json(m.in_s)}, {"valid", std::move(valid)}};
}

/// Names accepted by --emit and used as JSON keys.
inline const std::vector<std::string>& factorization_blocks() {
    static const std::vector<std::string> v{"omega", "p-minus", "p-plus", "lambda", "theta", "lambda-prime",
                                            "p-plus-modified", "ic-minus", "ic-plus"};
    return v;
}

inline json to_json(const FactorizationResult& res, const std::vector<std::string>& blocks = factorization_blocks()) {
    json out{{"n", res.n()}, {"r", res.r()}, {"order", to_json(res.order)}, {"a", res.a}, {"a_tau", res.a_tau}};
    for (const auto& b : blocks) {
        if (b == "omega") out["omega"] = to_json(res.omega.entries);
        else if (b == "p-minus") out["p_minus"] = to_json(res.p_minus);
        else if (b == "p-plus") out["p_plus"] = to_json(res.p_plus);
        else if (b == "lambda") out["lambda"] = to_json(res.lambda);
        else if (b == "theta") out["theta"] = to_json(theta_matrix(res));
        else if (b == "lambda-prime") out["lambda_prime"] = to_json(lambda_prime(res));
        else if (b == "p-plus-modified") out["p_plus_modified"] = to_json(modified_pplus(res));
        else if (b == "ic-minus") out["ic_minus"] = to_json(ic_minus_matrix(res));
        else if (b == "ic-plus") {
            const auto c = ic_plus_candidate(res);
            json j = to_json(c.matrix);
            j["hypothesis"] = json::array();
            for (char h : c.hypothesis) j["hypothesis"].push_back(h != 0);
            out["ic_plus"] = std::move(j);
        } else {
            throw InvalidArgument("unknown block: " + b);
        }
    }
    return out;
}

/// Rebuilds the solved core (order, Omega, a-values, P+-, Lambda) from JSON
/// written with at least the omega, p-minus, p-plus and lambda blocks.
inline FactorizationResult factorization_from_json(const json& j) {
    const int n = j.at("n").get<int>(), r = j.at("r").get<int>();
    auto order = order_from_json(j.at("order"), n, r);
    OmegaMatrix om{n, r, order, laurent_matrix_from_json(j.at("omega"))};
    return FactorizationResult{order,
                               std::move(om),
                               j.at("a").get<std::vector<int>>(),
                               j.at("a_tau").get<std::vector<int>>(),
                               laurent_matrix_from_json(j.at("p_minus")),
                               laurent_matrix_from_json(j.at("p_plus")),
                               rational_list_from_json(j.at("lambda"))};
}

inline json to_json(const CheckReport& rep) {
    return json{{"suite", rep.suite},
                {"params", {{"n", rep.n}, {"r", rep.r}, {"checked", rep.checked}}},
                {"violations", rep.violations},
                {"pass", rep.pass()}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string latex_poly(const std::string& s) {
    if (s == "0") return "";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '*') continue;
        if (s[i] == '^') {
            std::size_t k = i + 1;
            while (k < s.size() && (std::isdigit(static_cast<unsigned char>(s[k])) || (k == i + 1 && s[k] == '-'))) ++k;
            out += "^{" + s.substr(i + 1, k - i - 1) + "}";
            i = k - 1;
            continue;
        }
        out += s[i];
    }
    return out;
}

inline std::string latex_label(const RPartition& l) {
    std::string out = "(";
    for (int i = 0; i < l.r(); ++i) {
        if (i) out += ";";
        out += partition_to_string(l[static_cast<std::size_t>(i)]);
    }
    return out + ")";
}

} // namespace detail

/// One line per r-partition: label, a(lambda), xi.
inline std::string diagonal_csv(const FactorizationResult& res) {
    std::ostringstream os;
    os << "lambda,a,xi\n";
    for (std::size_t k = 0; k < res.size(); ++k)
        os << detail::csv_field(res.order[k].to_string()) << ',' << res.a[k] << ','
           << detail::csv_field(res.lambda[k].to_string()) << '\n';
    return os.str();
}

inline std::string matrix_csv(const OrderedIndex& order, const LaurentMatrix& m) {
    std::ostringstream os;
    os << "row";
    for (const auto& l : order.items()) os << ',' << detail::csv_field(l.to_string());
    os << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << detail::csv_field(order[i].to_string());
        for (std::size_t j = 0; j < m.size(); ++j) os << ',' << detail::csv_field(m(i, j).to_string());
        os << '\n';
    }
    return os.str();
}

/// Sideways table: one row per lambda with a(lambda), xi and the rows of
/// P^- and P^+ (zero entries left blank).
inline std::string factorization_latex(const FactorizationResult& res) {
    std::ostringstream os;
    const std::size_t N = res.size();
    os << "\\begin{sidewaystable}\n\\tiny\n\\begin{tabular}{l|c|c|" << std::string(N, 'c') << "|" << std::string(N, 'c')
       << "}\n";
    os << "$\\lambda$ & $a$ & $\\xi$";
    for (std::size_t j = 0; j < N; ++j) os << " & " << j + 1;
    for (std::size_t j = 0; j < N; ++j) os << " & " << j + 1;
    os << " \\\\\n\\hline\n";
    for (std::size_t i = 0; i < N; ++i) {
        os << "$" << detail::latex_label(res.order[i]) << "$ & " << res.a[i] << " & $"
           << detail::latex_poly(res.lambda[i].to_string()) << "$";
        for (std::size_t j = 0; j < N; ++j) os << " & $" << detail::latex_poly(res.p_minus(i, j).to_string()) << "$";
        for (std::size_t j = 0; j < N; ++j) os << " & $" << detail::latex_poly(res.p_plus(i, j).to_string()) << "$";
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n\\end{sidewaystable}\n";
    return os.str();
}

inline std::string matrix_latex(const LaurentMatrix& m) {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << "  ";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) os << " & ";
            os << detail::latex_poly(m(i, j).to_string());
        }
        os << (i + 1 < m.size() ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}\n";
    return os.str();
}

} // namespace kostka::io
