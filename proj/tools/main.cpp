// starcolor: star and biclique coloring tools.
//
// Graphs are read from a file argument or "-" for stdin, as an edge list or the JSON object
// this tool writes. Output is JSON on stdout (DOT with --dot where it makes sense).
// Exit status: 0 answer computed, 1 bad input, 2 cap or timeout hit.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "starcolor.hpp"

using namespace starcolor;

namespace {

struct Args {
    std::string input = "-";
    std::string mode = "star";
    int k = 0;
    int max_n = 64;
    int max_k = 4;
    double timeout_s = 0;
    int jobs = 1;
    bool dot = false;
    std::string coloring_file, lists_file;
    std::string target, gadget, cls;
    int n = 0, h = 2, stretch = 0;
    std::uint64_t seed = 1;
    bool fast = false, unleafed = false, audit = false;
    std::string which = "both";
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Mode parse_mode(const std::string& s) {
    if (s == "star") return Mode::star;
    if (s == "biclique") return Mode::biclique;
    throw InputError("unknown mode " + s);
}

SolveOptions solve_options(const Args& a) {
    SolveOptions o;
    o.max_n = a.max_n;
    o.timeout_s = a.timeout_s;
    o.jobs = a.jobs;
    return o;
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

void emit_colored(const Args& a, const Graph& g, const Json& j, const std::vector<int>& colors,
                  const std::vector<std::string>& roles = {}) {
    if (a.dot)
        std::cout << to_dot(g, colors, roles);
    else
        emit(j);
}

int cmd_color(const Args& a) {
    Graph g = parse_graph(slurp(a.input));
    std::optional<ListAssignment> lists;
    if (!a.lists_file.empty()) lists = parse_lists(slurp(a.lists_file));
    if (a.k <= 0 && !lists) throw InputError("color needs -k or --lists");
    auto r = solve_coloring(g, parse_mode(a.mode), a.k, lists, solve_options(a));
    Json j{{"colorable", r.colorable()}};
    if (r.colorable()) j["coloring"] = to_json(*r.coloring);
    emit_colored(a, g, j, r.colorable() ? r.coloring->colors : std::vector<int>{});
    return 0;
}

int cmd_chi(const Args& a) {
    Graph g = parse_graph(slurp(a.input));
    auto r = chromatic(g, parse_mode(a.mode), solve_options(a));
    emit_colored(a, g, Json{{"chi", r.k}}, r.coloring.colors);
    return 0;
}

int cmd_choosable(const Args& a) {
    Graph g = parse_graph(slurp(a.input));
    if (a.k <= 0) throw InputError("choosable needs -k");
    ChooseOptions o;
    o.max_n = a.max_n;
    o.max_k = a.max_k;
    o.timeout_s = a.timeout_s;
    auto r = is_k_choosable(g, a.k, parse_mode(a.mode), o);
    Json j{{"choosable", r.colorable()}};
    if (r.refuting_assignment) j["refuting_lists"] = to_json(*r.refuting_assignment);
    emit(j);
    return 0;
}

int cmd_verify(const Args& a) {
    Graph g = parse_graph(slurp(a.input));
    if (a.coloring_file.empty()) throw InputError("verify needs --coloring");
    Coloring rho = parse_coloring(slurp(a.coloring_file));
    VerifyResult r;
    if (parse_mode(a.mode) == Mode::star)
        r = a.fast ? is_star_coloring_blocksep(g, rho) : is_star_coloring(g, rho);
    else
        r = a.fast ? is_biclique_coloring_fast(g, rho, 8) : is_biclique_coloring(g, rho);
    emit(to_json(r));
    return 0;
}

int cmd_enumerate(const Args& a) {
    Graph g = parse_graph(slurp(a.input));
    std::vector<Star> stars;
    std::vector<Biclique> bicliques;
    if (a.which == "both" || a.which == "stars") stars = maximal_stars(g);
    if (a.which == "both" || a.which == "bicliques") bicliques = maximal_bicliques(g);
    if (a.which != "both" && a.which != "stars" && a.which != "bicliques")
        throw InputError("--only takes stars or bicliques");
    emit(enumeration_json(stars, bicliques));
    return 0;
}

int cmd_recognize(const Args& a) {
    Graph g = parse_graph(slurp(a.input));
    auto f = recognize(g);
    emit(Json{{"split", f.split},
              {"threshold", f.threshold},
              {"block", f.block},
              {"net_free_block", f.net_free_block},
              {"chordal", f.chordal_small},
              {"triangle_free", f.triangle_free},
              {"c4_free", f.c4_free},
              {"diamond_free", f.diamond_free},
              {"w4_dart_gem_free", f.w4_dart_gem_free}});
    return 0;
}

int cmd_reduce(const Args& a) {
    if (a.k < 2) throw InputError("reduce needs -k >= 2");
    const std::string text = slurp(a.input);
    ReductionOutput r;
    std::vector<std::string> problems;
    if (a.target == "qsat2") {
        auto f = parse_qdnf(text);
        r = reduce_qsat2(f, a.k, {a.stretch});
        if (a.audit) problems = audit_qsat2(f, r, {a.stretch});
    } else if (a.target == "split" || a.target == "diamond-free") {
        auto f = parse_dimacs(text);
        NaeOptions opt{!a.unleafed};
        r = a.target == "split" ? reduce_nae_split(f, a.k) : reduce_nae_diamondfree(f, a.k, opt);
        if (a.audit) problems = audit_nae(f, r, a.target, opt);
    } else {
        throw InputError("unknown target " + a.target);
    }
    Json j = graph_json(r.graph, r.roles);
    j["k"] = r.k;
    if (a.audit) j["audit"] = problems;
    emit_colored(a, r.graph, j, role_classes(r.roles), r.roles);
    return 0;
}

// A standalone gadget on fresh anchors; anchors get the role "anchor".
ReductionOutput standalone_gadget(const Args& a) {
    GraphBuilder b;
    std::vector<std::string> roles;
    auto anchors = [&](int count) {
        std::vector<Vertex> out;
        for (int i = 0; i < count; ++i) {
            out.push_back(b.add_vertex());
            roles.push_back("anchor");
        }
        return out;
    };
    GadgetHandle h;
    const int k = a.k > 0 ? a.k : 2;
    if (a.gadget == "keeper") {
        auto v = anchors(2);
        h = attach_keeper(b, v[0], v[1], k);
    } else if (a.gadget == "switcher") {
        h = attach_switcher(b, anchors(a.h), k);
    } else if (a.gadget == "long-switcher") {
        h = attach_long_switcher(b, anchors(a.h), k);
    } else if (a.gadget == "list-switcher") {
        h = attach_list_switcher(b, anchors(a.h));
    } else if (a.gadget == "diamond-switcher") {
        h = attach_diamond_switcher(b, anchors(a.h), k);
    } else if (a.gadget == "cluster") {
        auto v = anchors(1 + 2 * a.h);
        h = attach_cluster(b, v[0], {v.begin() + 1, v.begin() + 1 + a.h}, {v.begin() + 1 + a.h, v.end()});
    } else if (a.gadget == "forcer") {
        h = attach_forcer(b, anchors(1)[0], k);
    } else if (a.gadget == "split-switcher" || a.gadget == "split-forcer") {
        SplitRoles sides;
        auto w = anchors(a.gadget == "split-switcher" ? a.h : 1);
        sides.independent = w;
        h = a.gadget == "split-switcher" ? attach_split_switcher(b, w, k, sides) : attach_split_forcer(b, w[0], k, sides);
    } else {
        throw InputError("unknown gadget " + a.gadget);
    }
    roles.resize(b.order());
    for (const auto& [v, role] : h.internals) roles[v] = role;
    ReductionOutput out;
    out.graph = b.build();
    out.roles = roles;
    out.k = k;
    return out;
}

int cmd_gen(const Args& a) {
    if (!a.gadget.empty()) {
        auto r = standalone_gadget(a);
        Json j = graph_json(r.graph, r.roles);
        j["k"] = r.k;
        emit_colored(a, r.graph, j, role_classes(r.roles), r.roles);
        return 0;
    }
    if (a.cls.empty()) throw InputError("gen needs --class or --gadget");
    if (a.n < 1) throw InputError("gen needs -n >= 1");
    Graph g = random_graph_of_class(a.cls, a.n, a.seed);
    if (a.dot)
        std::cout << to_dot(g, {});
    else
        write_edge_list(std::cout, g);
    return 0;
}

int cmd_nae(const Args& a) {
    auto nu = nae_satisfiable(parse_dimacs(slurp(a.input)));
    Json j{{"satisfiable", nu.has_value()}};
    if (nu) j["valuation"] = std::vector<int>(nu->begin() + 1, nu->end());
    emit(j);
    return 0;
}

int cmd_qsat2(const Args& a) {
    emit(Json{{"true", qsat2_true(parse_qdnf(slurp(a.input)))}});
    return 0;
}

int cmd_threshold(const Args& a) {
    std::istringstream in(slurp(a.input));
    ThresholdRep rep = read_threshold_rep(in);
    Graph g = threshold_graph(rep).graph;
    auto chi = star_chromatic_threshold(rep);
    Json j{{"n", rep.order()}, {"chi", chi.k}};
    Coloring rho = chi.coloring;
    if (a.k > 0) {
        auto idx = k_forbidden_index(rep, a.k);
        j["k"] = a.k;
        j["forbidden_index"] = idx ? Json(*idx) : Json(nullptr);
        // the index test decides k >= 2 only
        const bool colorable = a.k == 1 ? rep.order() == 1 : !idx;
        j["colorable"] = colorable;
        if (colorable) {
            ListAssignment l = a.lists_file.empty() ? uniform_lists(rep.order(), a.k) : parse_lists(slurp(a.lists_file));
            rho = color_threshold(rep, l, a.k);
        }
    }
    j["coloring"] = to_json(rho);
    emit_colored(a, g, j, rho.colors);
    return 0;
}

int cmd_netblock(const Args& a) {
    std::istringstream in(slurp(a.input));
    NetblockRep rep = read_netblock_rep(in);
    if (a.k <= 0) throw InputError("netblock needs -k");
    Graph g = netblock_graph(rep).graph;
    auto verdict = star_k_colorable_netblock(rep, a.k);
    Json j{{"n", g.order()}, {"k", a.k}, {"colorable", is_colorable(verdict)}};
    std::vector<int> colors;
    if (auto* w = std::get_if<WeightViolation>(&verdict)) {
        j["weight_violation"] = {w->edge.u, w->edge.v, w->edge.weight};
    } else if (auto* c = std::get_if<SubtreeCertificate>(&verdict)) {
        j["subtree"] = c->nodes;
    } else {
        ListAssignment l = a.lists_file.empty() ? uniform_lists(g.order(), a.k) : parse_lists(slurp(a.lists_file));
        Coloring rho = color_netblock(rep, l, a.k);
        j["coloring"] = to_json(rho);
        colors = rho.colors;
    }
    emit_colored(a, g, j, colors);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Star and biclique coloring of graphs"};
    app.require_subcommand(1);
    Args a;

    auto input = [&](CLI::App* c, const char* what) { c->add_option("input", a.input, what)->default_str("-"); };
    auto mode = [&](CLI::App* c) {
        c->add_option("--mode", a.mode, "star or biclique")->check(CLI::IsMember({"star", "biclique"}));
    };
    auto caps = [&](CLI::App* c) {
        c->add_option("--max-n", a.max_n, "vertex cap for exact search");
        c->add_option("--timeout-s", a.timeout_s, "wall clock limit, 0 = none");
    };

    auto* color = app.add_subcommand("color", "decide k-colorability, optionally from lists");
    input(color, "graph file");
    mode(color);
    caps(color);
    color->add_option("-k", a.k, "colors");
    color->add_option("--lists", a.lists_file, "list assignment JSON");
    color->add_option("--jobs", a.jobs, "worker threads");
    color->add_flag("--dot", a.dot, "DOT output colored by the coloring");

    auto* chi = app.add_subcommand("chi", "star or biclique chromatic number");
    input(chi, "graph file");
    mode(chi);
    caps(chi);
    chi->add_option("--jobs", a.jobs, "worker threads");
    chi->add_flag("--dot", a.dot, "DOT output of an optimal coloring");

    auto* choosable = app.add_subcommand("choosable", "decide k-choosability");
    input(choosable, "graph file");
    mode(choosable);
    choosable->add_option("-k", a.k, "list size")->required();
    choosable->add_option("--max-n", a.max_n, "vertex cap (default 16)");
    choosable->add_option("--max-k", a.max_k, "list size cap");
    choosable->add_option("--timeout-s", a.timeout_s, "wall clock limit, 0 = none");

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring");
    input(verify_cmd, "graph file");
    mode(verify_cmd);
    verify_cmd->add_option("--coloring", a.coloring_file, "coloring JSON")->required();
    verify_cmd->add_flag("--fast", a.fast, "use the block-separation / independent-set checks");

    auto* enumerate = app.add_subcommand("enumerate", "maximal stars and bicliques");
    input(enumerate, "graph file");
    enumerate->add_option("--only", a.which, "stars or bicliques");

    auto* recognize_cmd = app.add_subcommand("recognize", "graph class flags");
    input(recognize_cmd, "graph file");

    auto* reduce = app.add_subcommand("reduce", "build a reduction graph from a formula");
    input(reduce, "DIMACS CNF (split, diamond-free) or QDNF (qsat2)");
    reduce->add_option("--target", a.target, "split, diamond-free or qsat2")->required();
    reduce->add_option("-k", a.k, "colors")->required();
    reduce->add_option("--stretch", a.stretch, "qsat2 hole stretching levels");
    reduce->add_flag("--unleafed", a.unleafed, "diamond-free: no leaves on literal vertices");
    reduce->add_flag("--audit", a.audit, "include a structure audit");
    reduce->add_flag("--dot", a.dot, "DOT output colored by role");

    auto* gen = app.add_subcommand("gen", "random graph of a class, or a standalone gadget");
    gen->add_option("--class", a.cls, "triangle-free, split, threshold, netblock, w4dartgem-free");
    gen->add_option("-n", a.n, "vertices");
    gen->add_option("--seed", a.seed, "random seed");
    gen->add_option("--gadget", a.gadget,
                    "keeper, switcher, long-switcher, list-switcher, diamond-switcher, cluster, forcer, "
                    "split-switcher, split-forcer");
    gen->add_option("-k", a.k, "gadget colors");
    gen->add_option("--anchors", a.h, "anchor count (cluster: literals per side)");
    gen->add_flag("--dot", a.dot, "DOT output");

    auto* nae = app.add_subcommand("nae", "NAE-satisfiability of a DIMACS CNF by enumeration");
    input(nae, "DIMACS CNF");
    auto* qsat = app.add_subcommand("qsat2", "truth of an exists-forall DNF by enumeration");
    input(qsat, "QDNF");

    auto* threshold = app.add_subcommand("threshold", "threshold graph from its representation");
    input(threshold, "rep file");
    threshold->add_option("-k", a.k, "decide and color with k colors");
    threshold->add_option("--lists", a.lists_file, "list assignment JSON");
    threshold->add_flag("--dot", a.dot, "DOT output");

    auto* netblock = app.add_subcommand("netblock", "net-free block graph from its representation");
    input(netblock, "rep file");
    netblock->add_option("-k", a.k, "colors")->required();
    netblock->add_option("--lists", a.lists_file, "list assignment JSON");
    netblock->add_flag("--dot", a.dot, "DOT output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (choosable->parsed() && choosable->count("--max-n") == 0) a.max_n = 16;
        if (color->parsed()) return cmd_color(a);
        if (chi->parsed()) return cmd_chi(a);
        if (choosable->parsed()) return cmd_choosable(a);
        if (verify_cmd->parsed()) return cmd_verify(a);
        if (enumerate->parsed()) return cmd_enumerate(a);
        if (recognize_cmd->parsed()) return cmd_recognize(a);
        if (reduce->parsed()) return cmd_reduce(a);
        if (gen->parsed()) return cmd_gen(a);
        if (nae->parsed()) return cmd_nae(a);
        if (qsat->parsed()) return cmd_qsat2(a);
        if (threshold->parsed()) return cmd_threshold(a);
        if (netblock->parsed()) return cmd_netblock(a);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Timeout&) {
        std::cerr << "error: timeout\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
