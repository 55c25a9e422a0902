#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dgspec/errors.hpp"
#include "dgspec/formats.hpp"
#include "dgspec/graph.hpp"
#include "dgspec/spectra.hpp"
#include "dgspec/theorems.hpp"
#include "report.hpp"

namespace dgspec::cli {

namespace {

constexpr double kVerifyEps = 1e-7;
constexpr double kFamilyEps = 1e-6;

class InputFileError : public Error {
public:
    using Error::Error;
};

std::size_t vertex_cap() {
    const char* raw = std::getenv("DGSPEC_MAX_VERTICES");
    if (raw == nullptr || *raw == '\0') return kDefaultMaxVertices;
    std::size_t value = 0;
    const std::string_view text(raw);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
        throw ParameterError("DGSPEC_MAX_VERTICES must be a positive integer, got '" + std::string(text) + "'");
    }
    return value;
}

std::size_t checked_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) throw ResourceError("graph order overflows");
    return a * b;
}

void require_cap(std::size_t order, std::size_t cap) {
    if (order > cap) {
        throw ResourceError("result would have " + std::to_string(order) + " vertices, above the cap of " +
                            std::to_string(cap));
    }
}

struct Loaded {
    Graph graph;
    Json input;
};

Graph named_graph(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view name = spec.substr(0, colon);
    const auto family = parse_family(name);
    if (!family) throw ParameterError("unknown graph family '" + std::string(name) + "'");
    std::vector<long long> params;
    if (colon != std::string_view::npos) {
        std::string_view rest = spec.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            long long value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc() || ptr != item.data() + item.size()) {
                throw ParameterError("bad family parameter '" + std::string(item) + "'");
            }
            params.push_back(value);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
    }
    return build_named(*family, params);
}

Loaded load(const std::string& role, const std::string& source, const std::string& format_flag, std::size_t cap) {
    if (source.starts_with('@')) {
        Graph g = named_graph(std::string_view(source).substr(1));
        require_cap(g.order(), cap);
        Json input = describe_input(role, source, "named", g);
        return {std::move(g), std::move(input)};
    }
    std::string text;
    if (source == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(source, std::ios::binary);
        if (!file) throw InputFileError("cannot open '" + source + "'");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    const GraphFormat format = format_flag == "auto" ? sniff_format(text) : *parse_format(format_flag);
    Graph g = parse_graph(text, format, cap);
    Json input = describe_input(role, source, std::string(to_string(format)), g);
    return {std::move(g), std::move(input)};
}

MatrixKind matrix_kind(const std::string& flag) {
    if (flag == "a") return MatrixKind::adjacency;
    if (flag == "l") return MatrixKind::laplacian;
    return MatrixKind::signless_laplacian;
}

std::string big(const BigInt& x) { return x.str(); }

std::string rounded(double x) {
    if (!std::isfinite(x)) return "nan";
    return BigInt(std::round(x)).str();
}

int exit_for(const TheoremReport& r) { return r.verdict == Verdict::deviation ? kExitDeviation : kExitOk; }

struct Options {
    std::string in;
    std::string in2;
    std::string format = "auto";
    std::string matrix = "a";
    std::string kind = "e";
    std::string op;
    std::string op2;
    std::string with;
    std::string out_format = "edgelist";
    bool raw = false;
    std::string method = "exact";
    std::string theorem;
    std::optional<std::size_t> k;
    std::optional<std::size_t> s;
    std::optional<std::size_t> t;
    std::optional<std::size_t> p;
    std::optional<double> eps;
};

struct Outcome {
    Json inputs = Json::array();
    Json result;
    int code = kExitOk;
    // Set by construct --raw: printed instead of the report.
    std::optional<std::string> raw;
};

Outcome cmd_spectra(const Options& o, std::size_t cap) {
    Outcome out;
    auto g = load("in", o.in, o.format, cap);
    out.inputs.push_back(g.input);
    const auto kind = matrix_kind(o.matrix);
    const auto s = spectrum_of(g.graph, kind);
    out.result = {{"matrix", std::string(to_string(kind))}, {"eigenvalues", numbers(s)}, {"tolerance", number(s.tol())}};
    return out;
}

Outcome cmd_energy(const Options& o, std::size_t cap) {
    Outcome out;
    auto g = load("in", o.in, o.format, cap);
    out.inputs.push_back(g.input);
    const EnergyValue e = o.kind == "e"    ? energy(g.graph)
                          : o.kind == "le" ? laplacian_energy(g.graph)
                                           : signless_laplacian_energy(g.graph);
    out.result = {{"kind", std::string(to_string(e.kind))}, {"value", number(e.value)}};
    if (e.avg_degree) out.result["avg_degree"] = number(*e.avg_degree);
    return out;
}

Graph apply_unary(const std::string& op, const Graph& g, std::optional<std::size_t> k, std::size_t cap) {
    const std::size_t n = g.order();
    if (op == "edc") {
        require_cap(checked_mul(n, 2), cap);
        return extended_double_cover(g);
    }
    if (op == "edc^k") {
        if (!k) throw ParameterError("--op edc^k needs --k");
        if (*k >= 48) throw ResourceError("iteration depth out of range");
        require_cap(checked_mul(n, std::size_t{1} << *k), cap);
        return iterated_edc(g, *k);
    }
    if (op == "double") {
        require_cap(checked_mul(n, 2), cap);
        return double_graph(g);
    }
    if (op == "kfold") {
        if (!k) throw ParameterError("--op kfold needs --k");
        require_cap(checked_mul(n, *k), cap);
        return k_fold(g, *k);
    }
    if (op == "line") {
        require_cap(g.size(), cap);
        return line_graph(g);
    }
    return complement(g);
}

Graph apply_binary(const std::string& op, const Graph& a, const Graph& b, std::size_t cap) {
    if (op == "join" || op == "union") {
        require_cap(a.order() + b.order(), cap);
        return op == "join" ? join(a, b) : disjoint_union(a, b);
    }
    require_cap(checked_mul(a.order(), b.order()), cap);
    return op == "cartesian" ? cartesian_product(a, b) : kronecker_product(a, b);
}

Outcome cmd_construct(const Options& o, std::size_t cap) {
    if (o.op.empty() && o.op2.empty()) throw ParameterError("construct needs --op, --op2 or both");
    if (o.op2.empty() != o.with.empty()) throw ParameterError("--with and --op2 must be given together");
    Outcome out;
    auto g = load("in", o.in, o.format, cap);
    out.inputs.push_back(g.input);
    Graph h = o.op.empty() ? g.graph : apply_unary(o.op, g.graph, o.k, cap);
    if (!o.op2.empty()) {
        auto g2 = load("with", o.with, o.format, cap);
        out.inputs.push_back(g2.input);
        h = apply_binary(o.op2, h, g2.graph, cap);
    }
    const auto format = *parse_format(o.out_format);
    const std::string doc = emit_graph(h, format);
    if (o.raw) out.raw = doc + "\n";
    out.result = {{"format", std::string(to_string(format))},
                  {"graph", doc},
                  {"order", h.order()},
                  {"size", h.size()},
                  {"digest", graph_digest(h)}};
    return out;
}

Outcome cmd_trees(const Options& o, std::size_t cap) {
    Outcome out;
    auto g = load("in", o.in, o.format, cap);
    out.inputs.push_back(g.input);
    out.result = {{"method", o.method}};
    if (o.method == "exact") {
        out.result["trees"] = big(spanning_trees_exact(g.graph));
    } else if (o.method == "eigen") {
        const double x = spanning_trees_eigen(g.graph);
        out.result["trees"] = number(x);
        out.result["rounded"] = rounded(x);
    } else {
        require_cap(checked_mul(g.graph.order(), 2), cap);
        const auto f = edc_spanning_trees_formula(g.graph);
        out.result["graph"] = "extended_double_cover";
        out.result["trees"] = number(f.value);
        out.result["rounded"] = rounded(f.value);
        out.result["base_trees"] = big(f.base_trees);
        if (f.bipartite_form) out.result["bipartite_form"] = number(*f.bipartite_form);
    }
    return out;
}

Outcome cmd_verify(const Options& o, std::size_t cap) {
    Outcome out;
    auto g = load("in", o.in, o.format, cap);
    out.inputs.push_back(g.input);
    std::optional<Loaded> g2;
    if (!o.in2.empty()) {
        g2 = load("in2", o.in2, o.format, cap);
        out.inputs.push_back(g2->input);
    }
    const CheckOptions opts{o.eps.value_or(kVerifyEps), cap};
    const VerifyParams params{o.k, o.s, g2 ? &g2->graph : nullptr};
    const auto report = verify(o.theorem, g.graph, params, opts);
    out.result = to_json(report);
    out.code = exit_for(report);
    return out;
}

Json family_json(const FamilyResult& f) { return {{"family", to_json(f.spec)}, {"report", to_json(f.report)}}; }

std::optional<MixedFamily> mixed_id(const std::string& id) {
    if (id == "4.8") return MixedFamily::double_of_cover_vs_cover_of_double;
    if (id == "4.9") return MixedFamily::double_of_cover_vs_second_cover;
    if (id == "eq41") return MixedFamily::double_vs_cover;
    return std::nullopt;
}

Outcome cmd_family(const Options& o, std::size_t cap) {
    Outcome out;
    auto g = load("in", o.in, o.format, cap);
    out.inputs.push_back(g.input);
    std::optional<Loaded> g2;
    if (!o.in2.empty()) {
        g2 = load("in2", o.in2, o.format, cap);
        out.inputs.push_back(g2->input);
    }
    const CheckOptions opts{o.eps.value_or(kFamilyEps), cap};
    const std::size_t n = g.graph.order();

    if (const auto mixed = mixed_id(o.theorem)) {
        if (o.t) throw ParameterError("--t is not used by family " + o.theorem);
        Graph second;
        std::size_t p = 0;
        std::optional<std::size_t> k = o.k;
        if (g2) {
            second = g2->graph;
            if (!o.p) throw ParameterError("family " + o.theorem + " with --in2 needs --p");
            p = *o.p;
        } else {
            const auto witness = find_mixed_witness(*mixed, g.graph, opts);
            if (!witness) {
                out.result = {{"witness_found", false},
                              {"reason", "no partner graph with the required edge count and vertex count " +
                                             std::to_string(n) + " fits the hypotheses"}};
                return out;
            }
            second = witness->g2;
            out.inputs.push_back(describe_input("witness", "search", "generated", second));
            p = o.p.value_or(witness->p);
            if (!o.p && !k) k = witness->k;
        }
        const auto f = family_mixed(*mixed, g.graph, second, p, k, opts);
        out.result = family_json(f);
        if (!g2) out.result["witness_found"] = true;
        out.code = exit_for(f.report);
        return out;
    }

    if (o.theorem == "4.10") {
        if (o.k || o.t) throw ParameterError("family 4.10 takes only --p");
        const Graph& second = g2 ? g2->graph : g.graph;
        const auto f = family_cartesian(g.graph, second, o.p.value_or(n + 2), opts);
        out.result = family_json(f);
        out.code = exit_for(f.report);
        return out;
    }

    // Single-base families; a second input turns the run into a pair comparison.
    auto one = [&](const Graph& base) -> FamilyResult {
        if (o.theorem == "4.3" || o.theorem == "4.4") {
            const std::size_t t = o.theorem == "4.3" ? 1 : o.t.value_or(2);
            if (o.theorem == "4.3" && o.t && *o.t != 1) throw ParameterError("family 4.3 fixes t = 1");
            if (o.theorem == "4.4" && t < 2) throw ParameterError("family 4.4 needs t >= 2 (use 4.3 for t = 1)");
            if (t >= 40) throw ResourceError("iteration depth out of range");
            std::size_t p = 0;
            if (o.p) {
                p = *o.p;
            } else if (o.k) {
                p = (std::size_t{1} << t) * base.order() + *o.k;
            } else {
                p = smallest_feasible_join_edc(base, t)->p;
            }
            return family_join_edc(base, p, t, o.k, opts);
        }
        const std::size_t fold = o.theorem == "4.6" ? 2 : o.k.value_or(3);
        const std::optional<std::size_t> slack = o.theorem == "4.6" ? o.k : o.t;
        if (o.theorem == "4.6" && o.t) throw ParameterError("family 4.6 takes its slack as --k");
        if (o.theorem == "4.7" && fold < 3) throw ParameterError("family 4.7 needs k >= 3 (use 4.6 for k = 2)");
        std::size_t p = 0;
        if (o.p) {
            p = *o.p;
        } else if (slack) {
            p = checked_mul(fold, base.order()) + *slack;
        } else {
            p = smallest_feasible_join_kfold(base, fold)->p;
        }
        return family_join_kfold(base, p, fold, slack, opts);
    };

    const auto first = one(g.graph);
    if (!g2) {
        out.result = family_json(first);
        out.code = exit_for(first.report);
        return out;
    }
    const auto second = one(g2->graph);
    const auto pair = compare_family_pair(first, second, opts.eps);
    out.result = {{"first", family_json(first)}, {"second", family_json(second)}, {"pair", to_json(pair)}};
    out.code = std::max({exit_for(first.report), exit_for(second.report), exit_for(pair)});
    return out;
}

std::vector<std::string> theorem_ids() {
    std::vector<std::string> ids;
    for (auto id : verify_ids()) ids.emplace_back(id);
    return ids;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra, energies and theorem checks for graph double covers", "dgspec"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--in", o.in, "Graph file, '-' for stdin, or @family:params")->required();
        sub->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    };
    auto add_size = [](CLI::App* sub, const std::string& name, std::optional<std::size_t>& slot,
                       const std::string& help) {
        sub->add_option_function<std::size_t>(name, [&slot](const std::size_t& v) { slot = v; }, help);
    };
    auto add_eps = [&](CLI::App* sub) {
        sub->add_option_function<double>("--eps", [&o](const double& v) { o.eps = v; }, "Absolute tolerance")
            ->check(CLI::NonNegativeNumber);
    };

    auto* spectra = app.add_subcommand("spectra", "Sorted spectrum of A, L or Q");
    add_input(spectra);
    spectra->add_option("--matrix", o.matrix, "a, l or q")->check(CLI::IsMember({"a", "l", "q"}));

    auto* energy_cmd = app.add_subcommand("energy", "Energy, Laplacian energy or signless Laplacian energy");
    add_input(energy_cmd);
    energy_cmd->add_option("--kind", o.kind, "e, le or le+")->check(CLI::IsMember({"e", "le", "le+"}));

    auto* construct = app.add_subcommand("construct", "Build a derived graph");
    add_input(construct);
    construct->add_option("--op", o.op, "Unary construction")
        ->check(CLI::IsMember({"edc", "edc^k", "double", "kfold", "line", "complement"}));
    add_size(construct, "--k", o.k, "Iteration depth or fold count");
    construct->add_option("--with", o.with, "Second graph for --op2");
    construct->add_option("--op2", o.op2, "Binary construction")
        ->check(CLI::IsMember({"join", "cartesian", "kronecker", "union"}));
    construct->add_option("--out", o.out_format, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));
    construct->add_flag("--raw", o.raw, "Print only the graph document");

    auto* trees = app.add_subcommand("trees", "Spanning-tree counts");
    add_input(trees);
    trees->add_option("--method", o.method, "exact, eigen or edc-formula")
        ->check(CLI::IsMember({"exact", "eigen", "edc-formula"}));

    auto* verify_cmd = app.add_subcommand("verify", "Check one statement on one input");
    add_input(verify_cmd);
    verify_cmd->add_option("--theorem", o.theorem, "Statement identifier")->required()->check(
        CLI::IsMember(theorem_ids()));
    verify_cmd->add_option("--in2", o.in2, "Second graph where the statement needs one");
    add_size(verify_cmd, "--k", o.k, "Fold count or iteration depth");
    add_size(verify_cmd, "--s", o.s, "Kronecker power or chain length");
    add_eps(verify_cmd);

    auto* family = app.add_subcommand("family", "Equienergetic family closed form against direct computation");
    add_input(family);
    family->add_option("--theorem", o.theorem, "Family identifier")
        ->required()
        ->check(CLI::IsMember({"4.3", "4.4", "4.6", "4.7", "4.8", "4.9", "4.10", "eq41"}));
    family->add_option("--in2", o.in2, "Second base graph");
    add_size(family, "--p", o.p, "Order of the empty graph (K_p for 4.10)");
    add_size(family, "--k", o.k, "Slack (4.3, 4.4, 4.6, mixed) or fold count (4.7)");
    add_size(family, "--t", o.t, "Iteration depth (4.4) or slack (4.7)");
    add_eps(family);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const std::size_t cap = vertex_cap();
        const std::string name = app.get_subcommands().front()->get_name();
        Outcome outcome;
        if (name == "spectra") {
            outcome = cmd_spectra(o, cap);
        } else if (name == "energy") {
            outcome = cmd_energy(o, cap);
        } else if (name == "construct") {
            outcome = cmd_construct(o, cap);
        } else if (name == "trees") {
            outcome = cmd_trees(o, cap);
        } else if (name == "verify") {
            outcome = cmd_verify(o, cap);
        } else {
            outcome = cmd_family(o, cap);
        }
        if (outcome.raw) {
            out << *outcome.raw;
            return outcome.code;
        }
        Json report = {{"schema_version", kSchemaVersion},
                       {"command", {{"name", name}, {"argv", args}}},
                       {"inputs", outcome.inputs},
                       {"result", outcome.result}};
        out << serialize(report);
        return outcome.code;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace dgspec::cli
