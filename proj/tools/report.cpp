#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dgspec::cli {

Json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::abs(x) < 1e-12) return 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

Json numbers(const Spectrum& s) {
    Json out = Json::array();
    for (double x : s) out.push_back(number(x));
    return out;
}

Json numbers(const std::vector<double>& xs) {
    Json out = Json::array();
    for (double x : xs) out.push_back(number(x));
    return out;
}

Json to_json(const TheoremReport& r) {
    Json conditions = Json::array();
    for (const auto& c : r.conditions) conditions.push_back({{"name", c.name}, {"met", c.met}, {"detail", c.detail}});
    Json values = Json::object();
    for (const auto& [k, v] : r.values) values[k] = number(v);
    Json flags = Json::object();
    for (const auto& [k, v] : r.flags) flags[k] = v;
    return {{"theorem_id", r.theorem_id},
            {"conditions", conditions},
            {"hypotheses_met", r.hypotheses_met},
            {"predicted", numbers(r.predicted)},
            {"computed", numbers(r.computed)},
            {"max_abs_deviation", number(r.max_abs_deviation)},
            {"eps", number(r.eps)},
            {"verdict", std::string(to_string(r.verdict))},
            {"values", values},
            {"flags", flags}};
}

Json to_json(const FamilySpec& s) {
    Json bases = Json::array();
    for (const auto& [n, m] : s.bases) bases.push_back({{"n", n}, {"m", m}});
    return {{"theorem_id", s.theorem_id},
            {"bases", bases},
            {"p", s.p},
            {"k", s.k},
            {"t", s.t},
            {"composite_order", s.composite_order},
            {"avg_degree_prime", numbers(s.avg_degree_prime)},
            {"closed_form_le", numbers(s.closed_form_le)}};
}

Json describe_input(const std::string& role, const std::string& source, const std::string& format, const Graph& g) {
    return {{"role", role},
            {"source", source},
            {"format", format},
            {"order", g.order()},
            {"size", g.size()},
            {"digest", graph_digest(g)}};
}

std::string serialize(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace dgspec::cli
