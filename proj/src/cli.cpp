#include "wdim/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "wdim/constructions.hpp"
#include "wdim/dimension.hpp"
#include "wdim/enumerate.hpp"
#include "wdim/io.hpp"
#include "wdim/products.hpp"
#include "wdim/symmetry.hpp"
#include "wdim/verify.hpp"

namespace wdim {

namespace {

Digraph load_input(const std::string& path) {
    if (path == "-") return parse_digraph(std::cin);
    return read_digraph_file(path);
}

void emit_digraph(const Digraph& g, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << write_digraph(g);
    else
        write_digraph_file(out_path, g);
}

std::string basis_string(const std::vector<int>& basis) {
    std::string s = "[";
    for (size_t i = 0; i < basis.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(basis[i]);
    }
    return s + "]";
}

int cmd_dim(const std::string& input, bool all, std::ostream& out) {
    const Digraph g = load_input(input);
    const DimensionResult r = weak_metric_dimension(g, all);
    out << "dim=" << r.dim << " basis=" << basis_string(r.basis) << "\n";
    if (all && r.all_bases)
        for (const auto& basis : *r.all_bases) out << "basis=" << basis_string(basis) << "\n";
    return 0;
}

int cmd_info(const std::string& input, std::ostream& out) {
    const Digraph g = load_input(input);
    out << "n=" << g.order() << " m=" << g.arc_count() << "\n";
    const bool sc = is_strongly_connected(g);
    out << "strongly_connected=" << (sc ? "true" : "false") << "\n";
    if (!sc) return 0;
    const auto& m = g.distances();
    out << "diameter=" << m.diameter() << "\n";
    out << "girth=" << m.girth() << "\n";
    for (auto [u, v] : g.arcs())
        out << "arc (" << u << "," << v << ") type (1," << m.dist(v, u) << ")\n";
    return 0;
}

struct ConstructArgs {
    std::string family, out_path;
    int n = 0, d = 0, k = 0, which = -1;
    std::vector<int> factors;
    std::vector<std::string> gens;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw std::invalid_argument("family '" + a.family + "' needs " + what);
    };
    Digraph g;
    if (a.family == "complete" || a.family == "null" || a.family == "cycle" ||
        a.family == "path" || a.family == "upath") {
        need(a.n > 0, "--n");
        g = standard(a.family, a.n);
    } else if (a.family == "gamma") {
        need(a.n > 0 && a.d > 0, "--n and --d");
        g = gamma(a.n, a.d);
    } else if (a.family == "gamma-bar") {
        need(a.k > 0 && a.d > 0, "--k and --d");
        g = gamma_bar(a.k, a.d);
    } else if (a.family == "fan") {
        need(a.n > 0 && a.d > 0, "--n and --d");
        g = fan_digraph(a.n, a.d);
    } else if (a.family == "chorded-c4") {
        need(a.which >= 0 && a.which <= 3, "--which in 0..3");
        g = chorded_c4_family().member[a.which];
    } else if (a.family == "order3") {
        need(a.which >= 1 && a.which <= 4, "--which in 1..4");
        g = one_dim_order3(a.which);
    } else if (a.family == "vt") {
        need(a.which >= 1 && a.which <= 4 && a.n > 0, "--which in 1..4 and --n");
        g = transitive_family(a.which, a.n);
    } else if (a.family == "cayley") {
        need(!a.factors.empty() && !a.gens.empty(), "--factors and at least one --gen");
        std::vector<std::vector<int>> gens;
        for (const auto& text : a.gens) {
            std::vector<int> tuple;
            std::istringstream ss(text);
            std::string part;
            while (std::getline(ss, part, ',')) tuple.push_back(std::stoi(part));
            gens.push_back(std::move(tuple));
        }
        g = cayley(a.factors, gens);
    } else {
        err << "unknown family '" << a.family
            << "' (expected complete, null, cycle, path, upath, gamma, gamma-bar, fan, "
               "chorded-c4, order3, vt, cayley)\n";
        return 2;
    }
    emit_digraph(g, a.out_path, out);
    return 0;
}

int cmd_product(const std::string& op, const std::vector<std::string>& inputs,
                const std::string& out_path, std::ostream& out) {
    std::vector<Digraph> gs;
    for (const auto& path : inputs) gs.push_back(load_input(path));
    Digraph result;
    if (op == "union" || op == "join") {
        if (gs.size() != 2)
            throw std::invalid_argument("'" + op + "' needs exactly two --input digraphs");
        result = op == "union" ? disjoint_union(gs[0], gs[1]) : join(gs[0], gs[1]);
    } else if (op == "lex") {
        if (gs.size() < 2)
            throw std::invalid_argument("'lex' needs the outer digraph plus one block per vertex");
        const Digraph outer = gs.front();
        const std::vector<Digraph> blocks(gs.begin() + 1, gs.end());
        result = lex_product(outer, blocks);
    } else {
        throw std::invalid_argument("unknown --op '" + op + "' (expected union, join, lex)");
    }
    emit_digraph(result, out_path, out);
    return 0;
}

int cmd_enumerate(int n, bool classify, bool labeled, bool reps, bool allow_slow,
                  std::ostream& out) {
    const std::vector<Digraph> classes = sc_representatives(n, allow_slow);
    out << "n=" << n << " classes=" << classes.size() << "\n";
    if (labeled) out << "labeled_strongly_connected=" << labeled_sc_count(n, allow_slow) << "\n";
    if (classify) {
        const auto by_dim = classify_by_dimension(n, allow_slow);
        for (const auto& [dim, members] : by_dim)
            out << "dim=" << dim << " classes=" << members.size() << "\n";
    }
    if (reps)
        for (const auto& g : classes) out << canonical_form(g).to_string() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string theorem = "all", format = "text";
    long long max_order = -1, seed = -1, samples = -1;
    std::vector<std::string> params;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    std::map<std::string, long long> overrides;
    if (a.max_order >= 0) overrides["max_order"] = a.max_order;
    if (a.seed >= 0) overrides["seed"] = a.seed;
    if (a.samples >= 0) overrides["samples"] = a.samples;
    for (const auto& text : a.params) {
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--param expects key=value, got '" + text + "'");
        overrides[text.substr(0, eq)] = std::stoll(text.substr(eq + 1));
    }

    std::vector<std::string> ids;
    if (a.theorem == "all")
        ids = theorem_ids();
    else
        ids.push_back(a.theorem);

    std::vector<VerificationReport> reports;
    for (const auto& id : ids) {
        std::map<std::string, long long> params = overrides;
        if (a.theorem == "all") {
            // Keep only the keys this check accepts.
            const auto accepted = default_params(id);
            for (auto it = params.begin(); it != params.end();)
                it = accepted.count(it->first) ? std::next(it) : params.erase(it);
        }
        reports.push_back(verify(id, params));
    }

    if (a.format == "json") {
        if (reports.size() == 1) {
            out << report_to_json(reports.front());
        } else {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& rep : reports)
                arr.push_back(nlohmann::json::parse(report_to_json(rep)));
            out << arr.dump(2) << "\n";
        }
    } else {
        for (const auto& rep : reports) out << report_to_text(rep);
    }

    for (const auto& rep : reports)
        if (rep.verdict == "counterexample") return 1;
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weak metric dimension toolkit for strongly connected digraphs"};
    app.name("wdim");
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "worker thread count for parallel kernels")
        ->envname("WDIM_JOBS");

    auto* dim_cmd = app.add_subcommand("dim", "compute the weak metric dimension");
    std::string dim_input;
    bool dim_all = false;
    dim_cmd->add_option("--input", dim_input, "digraph file, or - for standard input")
        ->required();
    dim_cmd->add_flag("--all", dim_all, "list every minimum basis");

    auto* info_cmd = app.add_subcommand("info", "print order, arcs, diameter, girth, arc types");
    std::string info_input;
    info_cmd->add_option("--input", info_input, "digraph file, or - for standard input")
        ->required();

    auto* construct_cmd = app.add_subcommand("construct", "build a named digraph family member");
    ConstructArgs ca;
    construct_cmd->add_option("--family", ca.family, "family name")->required();
    construct_cmd->add_option("--n", ca.n, "order parameter");
    construct_cmd->add_option("--d", ca.d, "diameter parameter");
    construct_cmd->add_option("--k", ca.k, "dimension parameter");
    construct_cmd->add_option("--which", ca.which, "member selector");
    construct_cmd->add_option("--factors", ca.factors, "cyclic factors for cayley")
        ->delimiter(',');
    construct_cmd->add_option("--gen", ca.gens, "generator tuple for cayley, repeatable");
    construct_cmd->add_option("--out", ca.out_path, "output file (default standard output)");

    auto* product_cmd = app.add_subcommand("product", "combine digraphs");
    std::string product_op, product_out;
    std::vector<std::string> product_inputs;
    product_cmd->add_option("--op", product_op, "union, join, or lex")->required();
    product_cmd->add_option("--input", product_inputs, "input digraph files, repeatable")
        ->required();
    product_cmd->add_option("--out", product_out, "output file (default standard output)");

    auto* enum_cmd =
        app.add_subcommand("enumerate", "sweep all strongly connected digraphs of one order");
    int enum_n = 0;
    bool enum_classify = false, enum_labeled = false, enum_reps = false, enum_slow = false;
    enum_cmd->add_option("--n", enum_n, "order")->required();
    enum_cmd->add_flag("--classify", enum_classify, "group classes by dimension");
    enum_cmd->add_flag("--labeled", enum_labeled, "also count labeled digraphs");
    enum_cmd->add_flag("--reps", enum_reps, "print one canonical fingerprint per class");
    enum_cmd->add_flag("--allow-slow", enum_slow, "permit orders above the fast cap");

    auto* verify_cmd = app.add_subcommand("verify", "machine-check the classification results");
    VerifyArgs va;
    verify_cmd->add_option("--theorem", va.theorem, "check id, or 'all'");
    verify_cmd->add_option("--format", va.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--max-order", va.max_order, "override the exhaustive order cap");
    verify_cmd->add_option("--seed", va.seed, "random seed for sampled checks");
    verify_cmd->add_option("--samples", va.samples, "sample count for sampled checks");
    verify_cmd->add_option("--param", va.params, "extra key=value parameter, repeatable");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
#ifdef _OPENMP
        if (jobs > 0) omp_set_num_threads(jobs);
#endif
        if (*dim_cmd) return cmd_dim(dim_input, dim_all, out);
        if (*info_cmd) return cmd_info(info_input, out);
        if (*construct_cmd) return cmd_construct(ca, out, err);
        if (*product_cmd) return cmd_product(product_op, product_inputs, product_out, out);
        if (*enum_cmd)
            return cmd_enumerate(enum_n, enum_classify, enum_labeled, enum_reps, enum_slow, out);
        if (*verify_cmd) return cmd_verify(va, out);
        err << "no subcommand given\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace wdim
