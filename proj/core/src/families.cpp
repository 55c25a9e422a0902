#include <algorithm>
#include <cmath>
#include <string>

#include "check_util.hpp"
#include "dgspec/theorems.hpp"

namespace dgspec {

using detail::num;

namespace {

constexpr double kAverageTolerance = 1e-10;

double d(std::size_t x) { return static_cast<double>(x); }

std::size_t slack_or_default(std::optional<std::size_t> given, std::size_t p, std::size_t base) {
    if (given) return *given;
    return p >= base ? p - base : 0;
}

// Common tail: direct LE of each composite against its closed form.
void fill_composites(FamilyResult& out, const std::vector<Graph>& composites, double spread_weight) {
    auto& r = out.report;
    std::vector<double> direct;
    bool averages_agree = true;
    for (std::size_t i = 0; i < composites.size(); ++i) {
        const double le = laplacian_energy(composites[i]).value;
        const double actual = average_degree(composites[i]);
        direct.push_back(le);
        const std::string suffix = composites.size() == 1 ? "" : "_" + std::to_string(i + 1);
        r.values["direct_le" + suffix] = le;
        r.values["closed_form_le" + suffix] = out.spec.closed_form_le[i];
        r.values["avg_degree_prime" + suffix] = out.spec.avg_degree_prime[i];
        r.values["avg_degree_prime_actual" + suffix] = actual;
        if (std::abs(actual - out.spec.avg_degree_prime[i]) > kAverageTolerance) averages_agree = false;
    }
    r.predicted = out.spec.closed_form_le;
    r.computed = direct;
    r.flags["avg_degree_consistent"] = averages_agree;
    detail::finalize(r, spread_weight * detail::spread_of(direct));
}

Condition at_least(std::string name, double lhs, double rhs) {
    return {std::move(name), lhs >= rhs, num(lhs) + " >= " + num(rhs)};
}

Condition at_most(std::string name, double lhs, double rhs) {
    return {std::move(name), lhs <= rhs, num(lhs) + " <= " + num(rhs)};
}

Graph first_pairs_graph(std::size_t n, std::size_t m) {
    std::vector<Edge> edges;
    edges.reserve(m);
    for (Vertex u = 0; u < n && edges.size() < m; ++u)
        for (Vertex v = u + 1; v < n && edges.size() < m; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

}  // namespace

std::string_view to_string(MixedFamily id) {
    switch (id) {
        case MixedFamily::double_of_cover_vs_cover_of_double: return "4.8";
        case MixedFamily::double_of_cover_vs_second_cover: return "4.9";
        case MixedFamily::double_vs_cover: return "eq41";
    }
    return "unknown";
}

FamilyResult family_join_edc(const Graph& g, std::size_t p, std::size_t t, std::optional<std::size_t> k,
                             const CheckOptions& opts) {
    detail::check_eps(opts.eps);
    const std::size_t n = g.order();
    const std::size_t m = g.size();
    const std::size_t base = detail::cover_order(n, t, opts, "iterated extended double cover");
    detail::require_order(base + p, opts, "join with the empty graph");
    if (base + p == 0) throw ParameterError("composite graph is null");
    const std::size_t slack = slack_or_default(k, p, base);

    FamilyResult out;
    out.spec.theorem_id = t == 1 ? "4.3" : "4.4";
    out.spec.bases = {{n, m}};
    out.spec.p = p;
    out.spec.k = slack;
    out.spec.t = t;
    out.spec.composite_order = base + p;

    const double pow_t = std::ldexp(1.0, static_cast<int>(t));
    const double avg = (2.0 * pow_t * d(m) + pow_t * d(t) * d(n) + 2.0 * pow_t * d(p) * d(n)) / (d(p) + pow_t * d(n));
    const double closed = pow_t * d(n) * (d(t) + 2.0) + (d(p) - pow_t * d(n)) * avg + pow_t * 2.0 * d(m);
    out.spec.avg_degree_prime = {avg};
    out.spec.closed_form_le = {closed};

    auto& r = out.report;
    r.theorem_id = out.spec.theorem_id;
    r.eps = opts.eps;
    r.conditions.push_back(at_least("t >= 1", d(t), 1.0));
    r.conditions.push_back(at_least("k >= t + 2", d(slack), d(t) + 2.0));
    r.conditions.push_back(at_least("p >= 2^t n + k", d(p), pow_t * d(n) + d(slack)));
    r.conditions.push_back(at_most("m <= (k - t) n / 2 + k^2 / 2^(t+1)", d(m),
                                   (d(slack) - d(t)) * d(n) / 2.0 + d(slack) * d(slack) / (2.0 * pow_t)));

    fill_composites(out, {join(iterated_edc(g, t), empty_graph(p))}, 0.0);
    return out;
}

FamilyResult family_join_kfold(const Graph& g, std::size_t p, std::size_t k, std::optional<std::size_t> t,
                               const CheckOptions& opts) {
    detail::check_eps(opts.eps);
    if (k == 0) throw ParameterError("k-fold graph needs k >= 1");
    const std::size_t n = g.order();
    const std::size_t m = g.size();
    const std::size_t base = k * n;
    detail::require_order(base + p, opts, "join with the empty graph");
    if (base + p == 0) throw ParameterError("composite graph is null");
    const std::size_t slack = slack_or_default(t, p, base);

    FamilyResult out;
    out.spec.theorem_id = k == 2 ? "4.6" : "4.7";
    out.spec.bases = {{n, m}};
    out.spec.p = p;
    out.spec.k = k;
    out.spec.t = slack;
    out.spec.composite_order = base + p;

    const double kd = d(k);
    const double avg = (2.0 * kd * kd * d(m) + 2.0 * d(p) * kd * d(n)) / (d(p) + kd * d(n));
    const double closed = 2.0 * kd * d(n) + (d(p) - d(n) * kd) * avg + 2.0 * d(m) * kd * kd;
    out.spec.avg_degree_prime = {avg};
    out.spec.closed_form_le = {closed};

    auto& r = out.report;
    r.theorem_id = out.spec.theorem_id;
    r.eps = opts.eps;
    r.conditions.push_back(at_least("k >= 2", kd, 2.0));
    r.conditions.push_back(at_least("t >= 2k", d(slack), 2.0 * kd));
    r.conditions.push_back(at_least("p >= kn + t", d(p), kd * d(n) + d(slack)));
    r.conditions.push_back(
        at_most("m <= t(kn + t) / (2k^2)", d(m), d(slack) * (kd * d(n) + d(slack)) / (2.0 * kd * kd)));

    fill_composites(out, {join(k_fold(g, k), empty_graph(p))}, 0.0);
    return out;
}

FamilyResult family_mixed(MixedFamily id, const Graph& g1, const Graph& g2, std::size_t p,
                          std::optional<std::size_t> k, const CheckOptions& opts) {
    detail::check_eps(opts.eps);
    const std::size_t n1 = g1.order();
    const std::size_t n2 = g2.order();
    const double n = d(n1);
    const double m1 = d(g1.size());
    const double m2 = d(g2.size());
    const double pd = d(p);
    const bool doubled = id == MixedFamily::double_vs_cover;
    const std::size_t base = doubled ? 2 : 4;
    detail::require_order(base * std::max(n1, n2) + p, opts, "join with the empty graph");
    if (base * std::max(n1, n2) + p == 0) throw ParameterError("composite graph is null");
    const std::size_t slack = slack_or_default(k, p, base * n1);
    const double kd = d(slack);

    FamilyResult out;
    out.spec.theorem_id = std::string(to_string(id));
    out.spec.bases = {{n1, g1.size()}, {n2, g2.size()}};
    out.spec.p = p;
    out.spec.k = slack;
    out.spec.composite_order = base * n1 + p;

    auto& r = out.report;
    r.theorem_id = out.spec.theorem_id;
    r.eps = opts.eps;
    r.conditions.push_back({"same order", n1 == n2, num(n1) + " vs " + num(n2)});

    const double nb = d(base) * n;
    const double avg_den = pd + nb;
    std::vector<Graph> composites;
    const Graph kp = empty_graph(p);
    switch (id) {
        case MixedFamily::double_of_cover_vs_cover_of_double: {
            r.conditions.push_back({"n divisible by 4", n1 % 4 == 0, "n = " + num(n1)});
            r.conditions.push_back({"4 m2 = 4 m1 + n", 4 * g2.size() == 4 * g1.size() + n1,
                                    num(4 * g2.size()) + " vs " + num(4 * g1.size() + n1)});
            r.conditions.push_back(at_least("k >= 4", kd, 4.0));
            r.conditions.push_back(at_least("p >= 4n + k", pd, 4.0 * n + kd));
            r.conditions.push_back(at_most("m2 <= n(k - 2)/4 + k^2/16", m2, n * (kd - 2.0) / 4.0 + kd * kd / 16.0));
            const double a1 = (16.0 * m1 + 8.0 * n + 8.0 * pd * n) / avg_den;
            const double a2 = (16.0 * m2 + 4.0 * n + 8.0 * pd * n) / avg_den;
            out.spec.avg_degree_prime = {a1, a2};
            out.spec.closed_form_le = {16.0 * n + 16.0 * m1 + (pd - 4.0 * n) * a1,
                                       12.0 * n + 16.0 * m2 + (pd - 4.0 * n) * a2};
            composites.push_back(join(double_graph(extended_double_cover(g1)), kp));
            composites.push_back(join(extended_double_cover(double_graph(g2)), kp));
            break;
        }
        case MixedFamily::double_of_cover_vs_second_cover: {
            r.conditions.push_back({"m2 = 2 m1", g2.size() == 2 * g1.size(),
                                    num(g2.size()) + " vs " + num(2 * g1.size())});
            r.conditions.push_back(at_least("k >= 4", kd, 4.0));
            r.conditions.push_back(at_least("p >= 4n + k", pd, 4.0 * n + kd));
            r.conditions.push_back(at_most("m2 <= k(4n + k)/8 - n", m2, kd * (4.0 * n + kd) / 8.0 - n));
            const double a1 = (16.0 * m1 + 8.0 * n + 8.0 * pd * n) / avg_den;
            const double a2 = (8.0 * m2 + 8.0 * n + 8.0 * pd * n) / avg_den;
            out.spec.avg_degree_prime = {a1, a2};
            out.spec.closed_form_le = {16.0 * n + 16.0 * m1 + (pd - 4.0 * n) * a1,
                                       16.0 * n + 8.0 * m2 + (pd - 4.0 * n) * a2};
            composites.push_back(join(double_graph(extended_double_cover(g1)), kp));
            composites.push_back(join(iterated_edc(g2, 2), kp));
            break;
        }
        case MixedFamily::double_vs_cover: {
            r.conditions.push_back({"4 m1 = 2 m2 + n", 4 * g1.size() == 2 * g2.size() + n1,
                                    num(4 * g1.size()) + " vs " + num(2 * g2.size() + n1)});
            r.conditions.push_back(at_least("k >= 4", kd, 4.0));
            r.conditions.push_back(at_least("p >= 2n + k", pd, 2.0 * n + kd));
            r.conditions.push_back(at_most("m1 <= k(2n + k)/8", m1, kd * (2.0 * n + kd) / 8.0));
            r.conditions.push_back(at_most("m2 <= n(k - 1)/2 + k^2/4", m2, n * (kd - 1.0) / 2.0 + kd * kd / 4.0));
            const double a1 = (8.0 * m1 + 4.0 * pd * n) / avg_den;
            const double a2 = (4.0 * m2 + 4.0 * pd * n + 2.0 * n) / avg_den;
            out.spec.avg_degree_prime = {a1, a2};
            out.spec.closed_form_le = {4.0 * n + 8.0 * m1 + (pd - 2.0 * n) * a1,
                                       6.0 * n + 4.0 * m2 + (pd - 2.0 * n) * a2};
            composites.push_back(join(double_graph(g1), kp));
            composites.push_back(join(extended_double_cover(g2), kp));
            break;
        }
    }
    fill_composites(out, composites, 1.0);
    return out;
}

FamilyResult family_cartesian(const Graph& g1, const Graph& g2, std::size_t p, const CheckOptions& opts) {
    detail::check_eps(opts.eps);
    const std::size_t n1 = g1.order();
    const std::size_t n2 = g2.order();
    if (n1 == 0 || n2 == 0) throw UndefinedAverageError("Laplacian energy is undefined for the null graph");
    if (p == 0) throw ParameterError("K_p needs p >= 1");
    detail::require_order(2 * std::max(n1, n2) * p, opts, "cover product with K_p");

    FamilyResult out;
    out.spec.theorem_id = "4.10";
    out.spec.bases = {{n1, g1.size()}, {n2, g2.size()}};
    out.spec.p = p;
    out.spec.composite_order = 2 * n1 * p;

    auto& r = out.report;
    r.theorem_id = "4.10";
    r.eps = opts.eps;
    const double avg1 = average_degree(g1);
    const auto q1 = spectrum_of(g1, MatrixKind::signless_laplacian);
    const auto q2 = spectrum_of(g2, MatrixKind::signless_laplacian);
    const double least_q = std::min(q1[0], q2[0]);
    r.conditions.push_back({"G1 connected", is_connected(g1), ""});
    r.conditions.push_back({"G2 connected", is_connected(g2), ""});
    r.conditions.push_back({"G1 non-bipartite", !is_bipartite(g1), ""});
    r.conditions.push_back({"G2 non-bipartite", !is_bipartite(g2), ""});
    r.conditions.push_back({"same order", n1 == n2, num(n1) + " vs " + num(n2)});
    r.conditions.push_back({"same size", g1.size() == g2.size(), num(g1.size()) + " vs " + num(g2.size())});
    r.conditions.push_back(at_least("p >= n + 2", d(p), d(n1) + 2.0));
    Condition bound = at_least("min mu_n^+ >= 2m/n - 2", least_q, avg1 - 2.0 - opts.eps);
    r.conditions.push_back(bound);

    const double le1 = laplacian_energy(g1).value;
    const double le2 = laplacian_energy(g2).value;
    auto closed = [p](double le, std::size_t n) { return (d(p) - 1.0) * le + 4.0 * d(p) * d(n) - 4.0 * d(n); };
    out.spec.closed_form_le = {closed(le1, n1), closed(le2, n2)};
    out.spec.avg_degree_prime = {avg1 + d(p), average_degree(g2) + d(p)};
    r.values["laplacian_energy_g1"] = le1;
    r.values["laplacian_energy_g2"] = le2;

    const Graph kp = complete_graph(p);
    fill_composites(out, {cartesian_product(extended_double_cover(g1), kp),
                          cartesian_product(extended_double_cover(g2), kp)},
                    0.0);
    const bool bases_equal = std::abs(le1 - le2) <= opts.eps;
    const bool products_equal = std::abs(r.computed[0] - r.computed[1]) <= opts.eps;
    r.flags["bases_equienergetic"] = bases_equal;
    r.flags["products_equienergetic"] = products_equal;
    r.flags["iff_consistent"] = bases_equal == products_equal;
    return out;
}

TheoremReport compare_family_pair(const FamilyResult& a, const FamilyResult& b, double eps) {
    detail::check_eps(eps);
    TheoremReport r;
    r.theorem_id = a.spec.theorem_id + "-pair";
    r.eps = eps;
    r.conditions.push_back({"same family", a.spec.theorem_id == b.spec.theorem_id,
                            a.spec.theorem_id + " vs " + b.spec.theorem_id});
    r.conditions.push_back({"same parameters",
                            a.spec.p == b.spec.p && a.spec.k == b.spec.k && a.spec.t == b.spec.t &&
                                a.spec.bases == b.spec.bases,
                            ""});
    r.conditions.push_back({"first side hypotheses", a.report.hypotheses_met, ""});
    r.conditions.push_back({"second side hypotheses", b.report.hypotheses_met, ""});
    r.predicted = a.spec.closed_form_le;
    r.predicted.insert(r.predicted.end(), b.spec.closed_form_le.begin(), b.spec.closed_form_le.end());
    r.computed = a.report.computed;
    r.computed.insert(r.computed.end(), b.report.computed.begin(), b.report.computed.end());
    detail::finalize(r, detail::spread_of(r.computed));
    return r;
}

std::optional<FeasibleParams> smallest_feasible_join_edc(const Graph& g, std::size_t t) {
    if (t == 0 || t >= 40) return std::nullopt;
    const double n = d(g.order());
    const double m = d(g.size());
    const double pow_t = std::ldexp(1.0, static_cast<int>(t));
    for (std::size_t k = t + 2;; ++k) {
        const double kd = d(k);
        if ((kd - d(t)) * n / 2.0 + kd * kd / (2.0 * pow_t) >= m) {
            return FeasibleParams{(std::size_t{1} << t) * g.order() + k, k, t};
        }
    }
}

std::optional<FeasibleParams> smallest_feasible_join_kfold(const Graph& g, std::size_t k) {
    if (k < 2) return std::nullopt;
    const double n = d(g.order());
    const double m = d(g.size());
    const double kd = d(k);
    for (std::size_t t = 2 * k;; ++t) {
        const double td = d(t);
        if (td * (kd * n + td) / (2.0 * kd * kd) >= m) return FeasibleParams{k * g.order() + t, k, t};
    }
}

std::optional<MixedWitness> find_mixed_witness(MixedFamily id, const Graph& g1, const CheckOptions& opts) {
    const std::size_t n = g1.order();
    const std::size_t m1 = g1.size();
    if (n == 0) return std::nullopt;
    std::size_t m2 = 0;
    switch (id) {
        case MixedFamily::double_of_cover_vs_cover_of_double:
            if (n % 4 != 0) return std::nullopt;
            m2 = m1 + n / 4;
            break;
        case MixedFamily::double_of_cover_vs_second_cover:
            m2 = 2 * m1;
            break;
        case MixedFamily::double_vs_cover:
            if (4 * m1 < n || (4 * m1 - n) % 2 != 0) return std::nullopt;
            m2 = (4 * m1 - n) / 2;
            break;
    }
    if (m2 > n * (n - 1) / 2) return std::nullopt;

    const double nd = d(n);
    const double m1d = d(m1);
    const double m2d = d(m2);
    auto admissible = [&](double kd) {
        switch (id) {
            case MixedFamily::double_of_cover_vs_cover_of_double:
                return m2d <= nd * (kd - 2.0) / 4.0 + kd * kd / 16.0;
            case MixedFamily::double_of_cover_vs_second_cover:
                return m2d <= kd * (4.0 * nd + kd) / 8.0 - nd;
            case MixedFamily::double_vs_cover:
                return m1d <= kd * (2.0 * nd + kd) / 8.0 && m2d <= nd * (kd - 1.0) / 2.0 + kd * kd / 4.0;
        }
        return false;
    };
    std::size_t k = 4;
    while (!admissible(d(k))) ++k;
    const std::size_t base = id == MixedFamily::double_vs_cover ? 2 * n : 4 * n;
    const std::size_t p = base + k;
    if (base + p > opts.max_vertices) return std::nullopt;
    return MixedWitness{g1, first_pairs_graph(n, m2), p, k};
}

}  // namespace dgspec
