/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <fraisse/axioms.hh>
#include <fraisse/io.hh>
#include <fraisse/katetov.hh>
#include <fraisse/ngon.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fraisse;

using std::string;
using std::vector;

namespace
{
    struct Options
    {
        std::uint64_t seed = 0;
        int search_bound = 10;
        int subset_bound = 20;
        string kind = "free-graph";
        int n = 3;
        int m = 1;
        int k = 1;
        string menu = "1,2";
    };

    auto emit(const Json & j) -> void
    {
        std::cout << j.dump() << '\n';
    }

    auto parse_menu(const string & text) -> vector<Rational>
    {
        vector<Rational> r;
        std::stringstream ss(text);
        string item;
        while (std::getline(ss, item, ','))
            if (! item.empty())
                r.push_back(parse_rational(item));
        return r;
    }

    auto katetov_config(const Options & o) -> KatetovConfig
    {
        KatetovConfig c;
        c.search.search_bound = o.search_bound;
        c.menu = parse_menu(o.menu);
        return c;
    }

    auto kind_of(const Options & o) -> SirKind
    {
        return parse_sir_kind(o.kind, o.n);
    }

    auto kind_for_class(const string & cls, int n) -> SirKind
    {
        if (cls == "graph")
            return SirKind::free_graph();
        if (cls == "poset")
            return SirKind::poset_amalgam();
        if (cls == "metric")
            return SirKind::min_metric();
        if (cls == "ngon")
            return SirKind::ngon_strong(n);
        return parse_sir_kind(cls, n);
    }

    // "0:1,1:0" -- unlisted vertices are fixed
    auto parse_perm(const string & text, const Structure & x) -> Embedding
    {
        auto e = Embedding::identity(x.vertex_set());
        std::stringstream ss(text);
        string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == string::npos)
                throw FraisseError("permutation entries look like from:to, got '" + item + "'");
            e.set(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
        }
        return e;
    }

    auto cmd_validate(const string & file) -> int
    {
        auto s = load_structure(file);
        auto bad = validate(s);
        Json j{{"command", "validate"}, {"file", file}, {"class", to_string(s.tag())}, {"vertices", s.size()}, {"ok", ! bad}};
        if (bad)
            j["reason"] = *bad;
        emit(j);
        std::cerr << file << ": " << (bad ? "invalid: " + *bad : "ok") << '\n';
        return bad ? 1 : 0;
    }

    auto cmd_amalgamate(const Options & o, const string & base_file, const string & a_file, const string & b_file) -> int
    {
        auto kind = kind_of(o);
        SearchConfig sc;
        sc.search_bound = o.search_bound;
        auto base = load_structure(base_file);
        auto a = make_extension(base, load_structure(a_file), sc);
        auto b = make_extension(base, load_structure(b_file), sc);
        auto am = canonical_amalgam(kind, a, b, std::nullopt, sc);
        auto j = to_json(am);
        j["command"] = "amalgamate";
        j["kind"] = to_string(kind);
        emit(j);
        std::cerr << to_string(kind) << " amalgam: " << am.result.size() << " vertices\n";
        return 0;
    }

    auto cmd_katetov(const Options & o, const string & file, int probe_bound) -> int
    {
        auto kind = kind_of(o);
        auto config = katetov_config(o);
        auto tower = build_tower(kind, load_structure(file), o.m, o.k, config);
        auto j = to_json(tower);
        j["command"] = "katetov";
        emit(j);
        std::cerr << "tower levels:";
        for (auto & l : tower.levels)
            std::cerr << ' ' << l.size();
        std::cerr << (tower.truncated ? " (truncated: " + tower.truncation_reason + ")" : "") << '\n';

        bool all = true;
        for (int level = 0; level + 1 < static_cast<int>(tower.levels.size()); ++level) {
            auto probes = one_point_probes(kind, tower.levels, level, probe_bound, config);
            auto report = check_richness(tower.levels, o.m, probes, config.search);
            auto r = to_json(report);
            r["command"] = "richness";
            r["level"] = level;
            emit(r);
            std::cerr << "level " << level << " -> " << level + 1 << ": " << report.solved << "/" << report.solved + report.unsolved
                      << " one-point probes solved\n";
            all = all && report.unsolved == 0;
        }
        return all ? 0 : 1;
    }

    auto cmd_lift(const Options & o, const string & file, const string & perm) -> int
    {
        auto kind = kind_of(o);
        auto config = katetov_config(o);
        auto x = load_structure(file);
        auto tower = build_tower(kind, x, o.m, o.k, config);
        auto f = parse_perm(perm, x);
        auto lifted = lift_automorphism(tower, f, config.search);
        auto j = to_json(lifted);
        j["command"] = "lift";
        j["tower"] = to_json(tower);
        emit(j);

        bool ok = true;
        if (tower.steps.size() >= 1) {
            LiftContext ctx(tower, config.search);
            auto it = std::find(ctx.automorphisms().begin(), ctx.automorphisms().end(), f);
            for (auto v : ctx.level1_ids()) {
                auto c = ctx.witness({v});
                bool verified = ctx.determines(it - ctx.automorphisms().begin(), c, {v});
                ok = ok && verified;
                emit({{"command", "witness"}, {"vertex", v}, {"image", lifted.maps[1](v)}, {"support", c}, {"verified", verified}});
            }
        }
        std::cerr << "lifted through " << tower.steps.size() << " level(s); continuity witnesses "
                  << (ok ? "verified" : "FAILED") << '\n';
        return ok ? 0 : 1;
    }

    auto cmd_sir_check(const Options & o, int trials, bool mutant) -> int
    {
        auto kind = kind_of(o);
        auto recipe = SaturationRecipe::standard(kind, o.seed);
        recipe.katetov.search.search_bound = o.search_bound;
        auto report = check_axioms(recipe, trials, o.seed, mutant ? Variant::overlap_blind : Variant::faithful);
        for (auto & j : axiom_lines(report))
            emit(j);
        std::cerr << to_string(kind) << (mutant ? " (overlap-blind)" : "") << ": " << report.total_violations()
                  << " violations in " << trials << " trials on a " << report.ambient_size << "-vertex approximant\n";
        return report.total_violations() ? 1 : 0;
    }

    // Plain graphs are read as fragments, two-coloured from their lowest ids.
    auto as_ngon(const Structure & s, int n) -> Structure
    {
        if (s.tag().kind == ClassKind::ngon && s.tag().n == n)
            return s;
        if (! s.tag().graph_like())
            throw ClassMismatch("expected a graph or n-gon fragment, got " + to_string(s.tag()));
        vector<int> colour(s.size(), -1);
        for (int r = 0; r < s.size(); ++r) {
            if (colour[r] != -1)
                continue;
            colour[r] = 0;
            vector<int> stack{r};
            while (! stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w = 0; w < s.size(); ++w)
                    if (s.related(u, w) && colour[w] == -1) {
                        colour[w] = colour[u] ^ 1;
                        stack.push_back(w);
                    }
            }
        }
        StructureBuilder b(ClassTag::ngon(n));
        for (int i = 0; i < s.size(); ++i)
            b.add_vertex(s.id(i), s.tag().kind == ClassKind::ngon ? s.part(i) : colour[i]);
        for (int i = 0; i < s.size(); ++i)
            for (int j = i + 1; j < s.size(); ++j)
                if (s.related(i, j))
                    b.set_related_index(i, j);
        b.set_depth(s.depth());
        return std::move(b).build();
    }

    auto cmd_ngon_complete(const Options & o, const string & file, int depth, const string & dot) -> int
    {
        auto g = as_ngon(load_structure(file), o.n);
        auto report = free_completion(g, depth);
        auto j = to_json(report);
        j["command"] = "ngon-complete";
        emit(j);
        if (! dot.empty()) {
            std::map<VertexId, int> round;
            for (std::size_t r = 0; r < report.rounds.size(); ++r)
                for (auto & p : report.rounds[r])
                    for (auto v : p.interior)
                        round[v] = r + 1;
            std::ofstream(dot) << to_dot(report.result, round);
        }
        std::cerr << "free " << o.n << "-completion: " << report.result.size() << " vertices, " << report.result.edge_count()
                  << " edges after " << report.rounds.size() << " round(s)" << (report.fixpoint ? ", fixpoint" : "") << '\n';
        return 0;
    }

    auto cmd_ngon_strong(const Options & o, const string & x_file, const string & y_file) -> int
    {
        auto x = as_ngon(load_structure(x_file), o.n);
        auto y = as_ngon(load_structure(y_file), o.n);
        StrongConfig sc;
        sc.subset_bound = o.subset_bound;
        sc.want_witness = true;
        auto cert = is_n_strong(o.n, x, y, sc);
        auto j = to_json(cert);
        j["command"] = "ngon-strong";
        emit(j);
        std::cerr << "X is " << (cert.verdict ? "" : "not ") << o.n << "-strong in Y (minimum relative chi " << cert.minimum << ")\n";
        return 0;
    }

    auto cmd_ngon_fk(const Options & o, const string & file, int k, VertexId x, VertexId y) -> int
    {
        auto g = as_ngon(load_structure(file), o.n);
        auto v = eval_fk(g, k, x, y);
        emit({{"command", "ngon-fk"}, {"k", k}, {"x", x}, {"y", y}, {"value", v.value}, {"depth_caveat", v.depth_caveat}});
        std::cerr << "f_" << k << "(" << x << "," << y << ") = " << v.value << (v.depth_caveat ? " (fragment too shallow to be sure)" : "") << '\n';
        return 0;
    }

    auto cmd_saturate(const Options & o, const string & cls, int rounds, const string & out) -> int
    {
        auto recipe = SaturationRecipe::standard(kind_for_class(cls, o.n), o.seed);
        recipe.m = o.m;
        recipe.rounds = rounds;
        recipe.katetov.search.search_bound = o.search_bound;
        if (recipe.kind.family == SirFamily::min_metric)
            recipe.katetov.menu = parse_menu(o.menu);
        auto chain = saturate(recipe);
        Json sizes = Json::array();
        for (auto & l : chain.levels)
            sizes.push_back(l.size());
        emit({{"command", "saturate"}, {"kind", to_string(recipe.kind)}, {"level_sizes", sizes}, {"truncated", chain.truncated},
            {"result", to_json(chain.last())}});
        if (! out.empty())
            save_structure(out, chain.last());
        std::cerr << "saturated approximant with " << chain.last().size() << " vertices\n";
        return chain.truncated ? 2 : 0;
    }

    auto cmd_bnf(int depth, const string & a_file, const string & b_file) -> int
    {
        auto r = back_and_forth_iso(load_structure(a_file), load_structure(b_file), depth);
        auto j = to_json(r);
        j["command"] = "bnf-iso";
        j["depth"] = depth;
        emit(j);
        std::cerr << (r.equivalent ? "equivalent" : "distinguished") << " at depth " << depth << '\n';
        return 0;
    }

    auto hexagon(int n) -> Structure
    {
        StructureBuilder b(ClassTag::ngon(n));
        for (int i = 0; i < 2 * n; ++i)
            b.add_vertex(i, i % 2);
        for (int i = 0; i < 2 * n; ++i)
            b.set_related(i, (i + 1) % (2 * n));
        b.set_depth(1);
        return std::move(b).build();
    }

    auto cmd_cor57(const Options & o) -> int
    {
        auto kind = SirKind::ngon_strong(o.n);
        auto x = hexagon(o.n);
        // reflection through vertex 0: keeps the bipartition, order 2
        Embedding f;
        for (int i = 0; i < 2 * o.n; ++i)
            f.set(i, (2 * o.n - i) % (2 * o.n));
        auto tower = build_tower(kind, x, 1, 1, katetov_config(o));
        if (tower.steps.empty())
            throw FraisseError("Katetov step did not complete: " + tower.truncation_reason);
        auto lifted = lift_automorphism(tower, f);
        const auto & g = lifted.maps[1];
        const auto & e1 = tower.levels[1];
        bool automorphism = is_automorphism(e1, g);
        bool restricts = g.restricted(x.vertex_set()) == f;
        bool involution = g.after(g) == Embedding::identity(e1.vertex_set());
        bool fragment = ! validate(e1).has_value();
        bool ok = automorphism && restricts && involution && fragment;
        emit({{"command", "demo-cor57"}, {"n", o.n}, {"fragment_vertices", x.size()}, {"e1_vertices", e1.size()},
            {"e1_edges", e1.edge_count()}, {"e1_depth", e1.depth()}, {"automorphism", automorphism}, {"restricts", restricts},
            {"order_two", involution}, {"valid_fragment", fragment}, {"lift", to_json(g)}});
        std::cerr << "order-2 automorphism of the " << 2 * o.n << "-cycle lifted to the " << e1.size() << "-vertex amalgam: "
                  << (ok ? "ok" : "FAILED") << '\n';
        return ok ? 0 : 1;
    }
}

auto main(int argc, char * argv[]) -> int
{
    Options o;
    if (auto env = std::getenv("FRAISSE_LAB_SEED"))
        o.seed = std::strtoull(env, nullptr, 10);

    CLI::App app{"Workbench for stationary independence, Katetov towers and generalized polygons"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "random seed (default $FRAISSE_LAB_SEED or 0)");
    app.add_option("--search-bound", o.search_bound, "free vertices allowed in embedding searches")->check(CLI::PositiveNumber);
    app.add_option("--subset-bound", o.subset_bound, "vertices allowed in n-strong subset searches")->check(CLI::PositiveNumber);
    app.add_option("--menu", o.menu, "comma-separated rational distances for new metric points");

    auto add_kind = [&](CLI::App * c) {
        c->add_option("--kind", o.kind, "free-graph, complete-graph, poset, min-metric or ngon-strong");
        c->add_option("-n", o.n, "polygon parameter")->check(CLI::Range(3, 64));
    };

    string file, file2, file3, perm, cls = "graph", dot, out;
    int trials = 500, depth = 2, rounds = 3, probe_bound = 2, fk = 1;
    bool mutant = false;
    VertexId x = 0, y = 0;
    std::function<int()> run;

    auto validate_cmd = app.add_subcommand("validate", "check a structure file against its class");
    validate_cmd->add_option("file", file)->required();
    validate_cmd->callback([&] { run = [&] { return cmd_validate(file); }; });

    auto amalg = app.add_subcommand("amalgamate", "canonical independent amalgam of two extensions of a base");
    add_kind(amalg);
    amalg->add_option("base", file)->required();
    amalg->add_option("ext_a", file2)->required();
    amalg->add_option("ext_b", file3)->required();
    amalg->callback([&] { run = [&] { return cmd_amalgamate(o, file, file2, file3); }; });

    auto kat = app.add_subcommand("katetov", "truncated Katetov tower with a richness report");
    add_kind(kat);
    kat->add_option("-m", o.m, "new generators per extension type")->check(CLI::PositiveNumber);
    kat->add_option("-k", o.k, "tower height")->check(CLI::NonNegativeNumber);
    kat->add_option("--probe-bound", probe_bound, "largest probe base (negative: all subsets)");
    kat->add_option("file", file)->required();
    kat->callback([&] { run = [&] { return cmd_katetov(o, file, probe_bound); }; });

    auto lift = app.add_subcommand("lift", "lift an automorphism of a base through its tower");
    add_kind(lift);
    lift->add_option("-m", o.m)->check(CLI::PositiveNumber);
    lift->add_option("-k", o.k)->check(CLI::NonNegativeNumber);
    lift->add_option("base", file, "structure file for level 0")->required();
    lift->add_option("perm", perm, "from:to pairs, e.g. 0:1,1:0")->required();
    lift->callback([&] { run = [&] { return cmd_lift(o, file, perm); }; });

    auto sir = app.add_subcommand("sir-check", "seeded axiom suite inside a saturated approximant");
    add_kind(sir);
    sir->add_option("--trials", trials)->check(CLI::PositiveNumber);
    sir->add_flag("--mutant", mutant, "use the overlap-blind variant of the relation");
    sir->callback([&] { run = [&] { return cmd_sir_check(o, trials, mutant); }; });

    auto ngon = app.add_subcommand("ngon", "generalized polygon tools");
    ngon->require_subcommand(1);
    auto complete = ngon->add_subcommand("complete", "free n-completion");
    complete->add_option("-n", o.n)->check(CLI::Range(3, 64));
    complete->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
    complete->add_option("--dot", dot, "also write the result as DOT");
    complete->add_option("file", file)->required();
    complete->callback([&] { run = [&] { return cmd_ngon_complete(o, file, depth, dot); }; });
    auto strong = ngon->add_subcommand("strong", "is X n-strong in Y");
    strong->add_option("-n", o.n)->check(CLI::Range(3, 64));
    strong->add_option("x", file)->required();
    strong->add_option("y", file2)->required();
    strong->callback([&] { run = [&] { return cmd_ngon_strong(o, file, file2); }; });
    auto fkc = ngon->add_subcommand("fk", "evaluate the path function f_k");
    fkc->add_option("-n", o.n)->check(CLI::Range(3, 64));
    fkc->add_option("-k", fk)->check(CLI::NonNegativeNumber);
    fkc->add_option("file", file)->required();
    fkc->add_option("x", x)->required();
    fkc->add_option("y", y)->required();
    fkc->callback([&] { run = [&] { return cmd_ngon_fk(o, file, fk, x, y); }; });

    auto sat = app.add_subcommand("saturate", "grow a saturated approximant");
    sat->add_option("--class", cls, "graph, poset, metric or ngon");
    sat->add_option("-n", o.n)->check(CLI::Range(3, 64));
    sat->add_option("-m", o.m)->check(CLI::PositiveNumber);
    sat->add_option("--rounds", rounds)->check(CLI::NonNegativeNumber);
    sat->add_option("--out", out, "write the final level here");
    sat->callback([&] { run = [&] { return cmd_saturate(o, cls, rounds, out); }; });

    auto bnf = app.add_subcommand("bnf-iso", "bounded back-and-forth game between two structures");
    bnf->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
    bnf->add_option("a", file)->required();
    bnf->add_option("b", file2)->required();
    bnf->callback([&] { run = [&] { return cmd_bnf(depth, file, file2); }; });

    auto demo = app.add_subcommand("demo", "canned scenarios");
    demo->require_subcommand(1);
    auto cor = demo->add_subcommand("cor57", "lift an involution of a 2n-cycle through one n-gon Katetov step");
    cor->add_option("-n", o.n)->check(CLI::Range(3, 8));
    cor->callback([&] { run = [&] { return cmd_cor57(o); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run();
    }
    catch (const InternalInvariantViolation & e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return 1;
    }
    catch (const FraisseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
