#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "greene/closedform.hpp"
#include "greene/extensions.hpp"
#include "greene/facto.hpp"
#include "greene/rmap.hpp"
#include "greene/tc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr std::uint64_t kDefaultSeed = 20250810;

greene::DirectedMultigraph load_graph(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return greene::parse_graph(ss.str());
    }
    return greene::read_graph_file(path);
}

std::string chain_string(const greene::Chain& chain) {
    std::string out = "(";
    for (size_t i = 0; i < chain.vertices.size(); ++i)
        out += (i ? ", " : "") + chain.vertices[i];
    return out + ")";
}

void print_factor_tree(const greene::FactorTree& t, int depth) {
    const std::string pad(2 * depth, ' ');
    if (t.is_leaf()) {
        std::cout << pad << "leaf {";
        for (size_t i = 0; i < t.graph.vertices().size(); ++i)
            std::cout << (i ? " " : "") << t.graph.vertices()[i];
        std::cout << "}: " << greene::canonical_string(t.value) << "\n";
        return;
    }
    std::cout << pad << "split on chain " << chain_string(t.chain) << "\n";
    for (const auto& child : t.children) print_factor_tree(child, depth + 1);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_numerator(const std::string& file, const std::string& method,
                  const std::string& map_file, bool trace, bool json_out) {
    greene::DirectedMultigraph g = load_graph(file);
    greene::Polynomial n;
    if (method == "cycle") {
        n = greene::numerator_by_cycles(g, greene::CyclePolicy::LowestEdge,
                                        trace ? &std::cerr : nullptr);
    } else if (method == "map") {
        if (map_file.empty()) {
            n = greene::numerator_by_map(greene::build_default_map(g));
        } else {
            greene::RootedMap m = greene::read_map_file(map_file);
            std::multiset<std::pair<std::string, std::string>> a, b;
            for (const greene::Edge& e : g.edges())
                a.insert({g.label(e.origin), g.label(e.end)});
            for (const greene::Edge& e : m.graph().edges())
                b.insert({m.graph().label(e.origin), m.graph().label(e.end)});
            if (a != b) throw greene::Error("map file does not match the graph");
            n = greene::numerator_by_map(m);
        }
    } else {
        throw greene::Error("unknown method '" + method + "'");
    }
    std::cout << (json_out ? greene::to_json(n) : greene::canonical_string(n)) << "\n";
    return kExitOk;
}

int cmd_extensions(const std::string& file) {
    greene::DirectedMultigraph g = load_graph(file);
    for (const greene::Word& w : greene::linear_extensions(g)) {
        for (size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << w[i];
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_factor(const std::string& file, bool json_out) {
    greene::DirectedMultigraph g = load_graph(file);
    greene::FactorTree tree = greene::factor_numerator(g);
    greene::Polynomial product = greene::factor_product(tree);
    if (json_out) {
        nlohmann::json leaves = nlohmann::json::array();
        for (const greene::FactorTree* leaf : greene::factor_leaves(tree))
            leaves.push_back(nlohmann::json::parse(greene::to_json(leaf->value)));
        nlohmann::json doc{{"leaves", leaves},
                           {"product", nlohmann::json::parse(greene::to_json(product))}};
        std::cout << doc.dump() << "\n";
    } else {
        print_factor_tree(tree, 0);
        std::cout << "product: " << greene::canonical_string(product) << "\n";
    }
    return kExitOk;
}

int cmd_mobius(const std::string& file) {
    greene::DirectedMultigraph g = load_graph(file);
    greene::MobiusTable table = greene::mobius(g);
    for (const auto& [pair, mu] : table.values)
        std::cout << pair.first << "\t" << pair.second << "\t" << mu << "\n";
    return kExitOk;
}

int cmd_greene(const std::string& file, bool assert_planar) {
    greene::DirectedMultigraph g = load_graph(file);
    greene::GreeneReport report = greene::greene_check(g);
    for (const auto& [pair, mu] : report.exponents)
        std::cout << "(" << pair.first << ", " << pair.second << ") ^ " << mu << "\n";
    std::cout << "numerator: " << greene::canonical_string(report.numerator) << "\n";
    std::cout << "match: " << (report.matches ? "true" : "false") << "\n";
    if (assert_planar && !report.matches) return kExitVerifyFail;
    return kExitOk;
}

int cmd_goodtrees(const std::string& map_file) {
    greene::RootedMap m = greene::read_map_file(map_file);
    for (greene::EdgeMask tree : greene::spanning_trees(m.graph())) {
        if (!greene::is_good_spanning_tree(m, tree)) continue;
        bool first = true;
        for (const greene::Edge& e : m.graph().edges()) {
            if (tree & (greene::EdgeMask{1} << e.id)) {
                std::cout << (first ? "" : " ") << e.id;
                first = false;
            }
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_fixture(const std::string& kind, int n, const std::string& lens,
                const std::string& dirs, std::string prefix) {
    greene::DirectedMultigraph g;
    greene::Polynomial expected;
    if (kind == "bipartite") {
        g = greene::build_bipartite(n);
        expected = greene::bipartite_numerator(n);
        if (prefix.empty()) prefix = "bipartite_n" + std::to_string(n);
    } else if (kind == "theta") {
        std::array<int, 3> ls{};
        std::array<std::string, 3> ds{};
        std::stringstream sl(lens), sd(dirs);
        std::string tok;
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(sl, tok, ',')) throw greene::Error("--lens needs 3 values");
            ls[i] = std::stoi(tok);
        }
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(sd, tok, ',')) throw greene::Error("--dirs needs 3 strings");
            ds[i] = tok;
        }
        greene::TwoLoopSpec spec = greene::build_theta(ls, ds);
        g = spec.graph;
        expected = greene::two_loop_numerator(spec);
        if (prefix.empty())
            prefix = "theta_" + std::to_string(ls[0]) + std::to_string(ls[1]) +
                     std::to_string(ls[2]);
    } else {
        throw greene::Error("unknown fixture kind '" + kind + "'");
    }
    const std::string gpath = prefix + ".g", jpath = prefix + ".expected.json";
    std::ofstream gout(gpath);
    gout << "vertices:";
    for (const auto& v : g.vertices()) gout << " " << v;
    gout << "\n";
    for (const greene::Edge& e : g.edges())
        gout << g.label(e.origin) << " -> " << g.label(e.end) << "\n";
    std::ofstream jout(jpath);
    jout << greene::to_json(expected) << "\n";
    std::cout << gpath << "\n" << jpath << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& file, int points, std::uint64_t seed, bool assert_planar,
               bool json_out) {
    greene::DirectedMultigraph g = load_graph(file);
    if (greene::has_circuit(g)) throw greene::Error("graph contains a circuit");

    nlohmann::json report;
    report["seed"] = seed;
    bool pass = true;

    auto t0 = std::chrono::steady_clock::now();
    greene::Polynomial n_cycle = greene::numerator_by_cycles(g);
    report["cycle"] = {{"numerator", greene::canonical_string(n_cycle)},
                       {"seconds", seconds_since(t0)}};

    const bool connected = greene::is_connected(g);
    if (connected) {
        t0 = std::chrono::steady_clock::now();
        greene::Polynomial n_map = greene::numerator_by_map(greene::build_default_map(g));
        const bool agree = n_map == n_cycle;
        pass = pass && agree;
        report["map"] = {{"numerator", greene::canonical_string(n_map)},
                         {"agrees", agree},
                         {"seconds", seconds_since(t0)}};
    } else {
        pass = pass && n_cycle.is_zero();
        report["map"] = {{"skipped", "graph is disconnected; numerator must be 0"}};
    }

    t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(seed);
    int agreements = 0;
    for (int i = 0; i < points; ++i) {
        greene::RationalPoint pt = greene::random_point(g, rng);
        if (greene::eval(n_cycle, pt) == greene::numerator_eval_oracle(g, pt)) ++agreements;
    }
    pass = pass && agreements == points;
    report["oracle"] = {{"points", points},
                        {"agreements", agreements},
                        {"seconds", seconds_since(t0)}};

    if (connected && greene::is_hasse_reduced(g)) {
        auto splits = greene::enumerate_disconnecting_chains(g);
        if (!splits.empty()) {
            t0 = std::chrono::steady_clock::now();
            greene::FactorTree tree = greene::factor_numerator(g);
            const bool ok = greene::factor_product(tree) == n_cycle;
            pass = pass && ok;
            report["factorization"] = {{"splits", splits.size()},
                                       {"leaves", greene::factor_leaves(tree).size()},
                                       {"consistent", ok},
                                       {"seconds", seconds_since(t0)}};
        } else {
            report["factorization"] = {{"skipped", "no disconnecting chain"}};
        }
    } else {
        report["factorization"] = {{"skipped", "graph is disconnected or not Hasse-reduced"}};
    }

    if (assert_planar) {
        greene::GreeneReport gr = greene::greene_check(g);
        pass = pass && gr.matches;
        report["greene"] = {{"matches", gr.matches}};
    }

    report["pass"] = pass;
    if (json_out) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "seed: " << seed << "\n";
        std::cout << "N (cycle method): " << report["cycle"]["numerator"].get<std::string>()
                  << "\n";
        if (report["map"].contains("numerator"))
            std::cout << "N (map method):   " << report["map"]["numerator"].get<std::string>()
                      << (report["map"]["agrees"].get<bool>() ? "  [agrees]" : "  [MISMATCH]")
                      << "\n";
        std::cout << "oracle: " << agreements << "/" << points << " points agree\n";
        if (report["factorization"].contains("consistent"))
            std::cout << "factorization: "
                      << (report["factorization"]["consistent"].get<bool>() ? "consistent"
                                                                            : "MISMATCH")
                      << " (" << report["factorization"]["leaves"].get<size_t>() << " leaves)\n";
        else
            std::cout << "factorization: skipped\n";
        if (report.contains("greene"))
            std::cout << "greene: "
                      << (report["greene"]["matches"].get<bool>() ? "matches" : "MISMATCH")
                      << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact numerators of Greene's rational functions on directed acyclic graphs"};
    app.require_subcommand(1);

    std::string file, map_file, method = "cycle", kind, lens, dirs, prefix;
    bool trace = false, json_out = false, assert_planar = false;
    int points = 20, n = 2;
    std::uint64_t seed = kDefaultSeed;

    CLI::App* c_num = app.add_subcommand("numerator", "Compute N(G) symbolically");
    c_num->add_option("file", file, "graph file ('-' for stdin)")->required();
    c_num->add_option("--method", method, "cycle | map")->check(CLI::IsMember({"cycle", "map"}));
    c_num->add_option("--map", map_file, "rooted map JSON file (map method)");
    c_num->add_flag("--trace", trace, "print each cycle elimination to stderr");
    c_num->add_flag("--json", json_out, "machine-readable output");

    CLI::App* c_ext = app.add_subcommand("extensions", "List linear extensions");
    c_ext->add_option("file", file)->required();

    CLI::App* c_factor = app.add_subcommand("factor", "Chain factorization of N(G)");
    c_factor->add_option("file", file)->required();
    c_factor->add_flag("--json", json_out);

    CLI::App* c_mobius = app.add_subcommand("mobius", "Mobius table of poset(G) as TSV");
    c_mobius->add_option("file", file)->required();

    CLI::App* c_greene = app.add_subcommand("greene", "Mobius-product check of the numerator");
    c_greene->add_option("file", file)->required();
    c_greene->add_flag("--assert-planar", assert_planar,
                       "exit nonzero when the product form does not match");

    CLI::App* c_trees = app.add_subcommand("goodtrees", "List good spanning trees of a map");
    c_trees->add_option("mapfile", map_file)->required();

    CLI::App* c_fix = app.add_subcommand("fixture", "Emit generated graph + expected numerator");
    c_fix->add_option("kind", kind, "bipartite | theta")->required();
    c_fix->add_option("--n", n, "bipartite: size of the B side");
    c_fix->add_option("--lens", lens, "theta: three path lengths, e.g. 2,2,2");
    c_fix->add_option("--dirs", dirs, "theta: per-path '+'/'-' strings, e.g. ++,+-,++");
    c_fix->add_option("--prefix", prefix, "output file prefix");

    CLI::App* c_verify = app.add_subcommand("verify", "Cross-check every method on one graph");
    c_verify->add_option("file", file)->required();
    c_verify->add_option("--points", points, "number of oracle evaluation points");
    c_verify->add_option("--seed", seed, "seed for random evaluation points");
    c_verify->add_flag("--assert-planar", assert_planar, "also require the Greene product form");
    c_verify->add_flag("--json", json_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_num->parsed()) return cmd_numerator(file, method, map_file, trace, json_out);
        if (c_ext->parsed()) return cmd_extensions(file);
        if (c_factor->parsed()) return cmd_factor(file, json_out);
        if (c_mobius->parsed()) return cmd_mobius(file);
        if (c_greene->parsed()) return cmd_greene(file, assert_planar);
        if (c_trees->parsed()) return cmd_goodtrees(map_file);
        if (c_fix->parsed()) return cmd_fixture(kind, n, lens, dirs, prefix);
        if (c_verify->parsed()) return cmd_verify(file, points, seed, assert_planar, json_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
