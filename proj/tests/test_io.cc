/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fraisse/io.hh>

#include "helpers.hh"

#include <cstdio>
#include <cstdlib>
#include <unistd.h>

using namespace fraisse;
using namespace fraisse::test;

TEST_CASE("structures round trip")
{
    std::mt19937_64 rng(41);
    for (auto kind : all_kinds())
        for (int t = 0; t < 10; ++t) {
            auto s = random_structure(kind, 4, rng);
            CHECK(structure_from_json(to_json(s)) == s);
            CHECK(structure_from_json(Json::parse(to_json(s).dump())) == s);
        }

    StructureBuilder b(ClassTag::metric());
    b.add_vertex(3);
    b.add_vertex(8);
    b.set_distance(3, 8, Rational(5, 2));
    auto half = std::move(b).build();
    auto j = to_json(half);
    CHECK(j["dist"][0][2] == "5/2");
    CHECK(structure_from_json(j) == half);

    auto hex = ngon_path(4, 8, true, 3);
    auto hj = to_json(hex);
    CHECK(hj["n"] == 4);
    CHECK(hj["depth"] == 3);
    CHECK(structure_from_json(hj).depth() == 3);
}

TEST_CASE("reading the documented format")
{
    auto g = structure_from_json(Json::parse(R"({"class": "graph", "vertices": [0, 1, 2], "edges": [[0, 1], [1, 2]]})"));
    CHECK(g == graph(3, {{0, 1}, {1, 2}}));

    auto p = structure_from_json(Json::parse(R"({"class": "poset", "vertices": [0, 1], "order": [[0, 1]]})"));
    CHECK(p.related(0, 1));
    CHECK_FALSE(p.related(1, 0));

    auto m = structure_from_json(Json::parse(R"({"class": "metric", "vertices": [0, 1], "dist": [[0, 1, 2]]})"));
    CHECK(m.distance(0, 1) == Rational(2));

    auto n = structure_from_json(Json::parse(R"({"class": "ngon", "n": 3, "vertices": [0, 1], "part": {"0": 0, "1": 1}, "edges": [[0, 1]]})"));
    CHECK(n.part(1) == 1);
}

TEST_CASE("malformed input")
{
    CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"vertices": []})")), FraisseError);
    CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"class": "tree"})")), FraisseError);
    CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"class": "poset", "vertices": [0, 1], "edges": [[0, 1]]})")), FraisseError);
    CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"class": "graph", "vertices": [0], "edges": [[0]]})")), FraisseError);
    CHECK_THROWS_AS(load_structure("/nonexistent/fragment.json"), FraisseError);
}

TEST_CASE("files")
{
    char name[] = "/tmp/fragmentXXXXXX";
    close(mkstemp(name));
    std::string path = name;
    auto s = poset(3, {{0, 1}, {1, 2}, {0, 2}});
    save_structure(path, s);
    CHECK(load_structure(path) == s);
    std::remove(path.c_str());
}

TEST_CASE("embeddings")
{
    Embedding e({{0, 5}, {1, 7}});
    auto j = to_json(e);
    CHECK(j.dump() == "[[0,5],[1,7]]");
    CHECK(embedding_from_json(j) == e);
    CHECK_THROWS(embedding_from_json(Json::parse(R"([["a", 1]])")));
}

TEST_CASE("DOT export")
{
    auto path = ngon_path(3, 5, false);
    auto step = free_completion_step(path);
    std::map<VertexId, int> round;
    for (auto v : step.paths[0].interior)
        round[v] = 1;
    auto dot = to_dot(step.result, round);
    CHECK(dot.find("graph fragment {") == 0);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("shape=circle") != std::string::npos);
    CHECK(dot.find("xlabel=\"r1\"") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK_THROWS_AS(to_dot(poset(2, {})), ClassMismatch);
}

TEST_CASE("reports")
{
    auto cert = is_n_strong(3, ngon_path(3, 2, false), ngon_path(3, 4, false));
    auto cj = to_json(cert);
    CHECK(cj["verdict"] == cert.verdict);
    CHECK(cj["minimum"] == cert.minimum);

    auto report = free_completion(ngon_path(3, 5, false), 1);
    auto rj = to_json(report);
    CHECK(rj["fixpoint"] == true);
    CHECK(rj["vertices"] == 6);
    CHECK(rj["rounds"].size() == 1);

    auto t = build_tower(SirKind::free_graph(), graph(1, {}), 1, 2);
    auto tj = to_json(t);
    CHECK(tj["level_sizes"] == Json::array({1, 3, 11}));
    CHECK(tj["truncated"] == false);

    auto cat = enum_types(SirKind::free_graph(), graph(1, {}), 1);
    CHECK(to_json(cat)["size"] == 2);

    auto bnf = back_and_forth_iso(graph(1, {}), graph(0, {}), 1);
    auto bj = to_json(bnf);
    CHECK(bj["equivalent"] == false);
    CHECK(bj["witness"][0]["side"] == "A");

    auto ax = check_axioms_in(SirKind::free_graph(), graph(4, {{0, 1}}), 5, 1);
    auto lines = axiom_lines(ax);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0]["axiom"] == "SIR1");
    CHECK(lines[5]["trials"] == 5);
    CHECK(lines[4].contains("violations"));
}
