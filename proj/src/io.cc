/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <fraisse/io.hh>

#include <fstream>
#include <sstream>

using std::string;
using std::vector;

namespace fraisse
{
    namespace
    {
        auto class_name(ClassKind k) -> string
        {
            switch (k) {
            case ClassKind::graph: return "graph";
            case ClassKind::poset: return "poset";
            case ClassKind::metric: return "metric";
            case ClassKind::ngon: return "ngon";
            }
            return "?";
        }

        auto malformed(const string & what) -> FraisseError
        {
            return FraisseError("malformed structure JSON: " + what);
        }
    }

    auto to_json(const Structure & s) -> Json
    {
        Json j;
        j["class"] = class_name(s.tag().kind);
        if (s.tag().kind == ClassKind::ngon)
            j["n"] = s.tag().n;
        j["vertices"] = s.ids();
        if (s.tag().kind == ClassKind::ngon) {
            Json part = Json::object();
            for (int i = 0; i < s.size(); ++i)
                part[std::to_string(s.id(i))] = s.part(i);
            j["part"] = part;
        }
        Json pairs = Json::array();
        for (int i = 0; i < s.size(); ++i)
            for (int k = 0; k < s.size(); ++k) {
                if (i == k)
                    continue;
                switch (s.tag().kind) {
                case ClassKind::graph:
                case ClassKind::ngon:
                    if (i < k && s.related(i, k))
                        pairs.push_back({s.id(i), s.id(k)});
                    break;
                case ClassKind::poset:
                    if (s.related(i, k))
                        pairs.push_back({s.id(i), s.id(k)});
                    break;
                case ClassKind::metric:
                    if (i < k)
                        pairs.push_back({s.id(i), s.id(k), to_string(s.distance(i, k))});
                    break;
                }
            }
        switch (s.tag().kind) {
        case ClassKind::graph:
        case ClassKind::ngon: j["edges"] = pairs; break;
        case ClassKind::poset: j["order"] = pairs; break;
        case ClassKind::metric: j["dist"] = pairs; break;
        }
        if (s.tag().kind == ClassKind::ngon)
            j["depth"] = s.depth();
        return j;
    }

    auto structure_from_json(const Json & j) -> Structure
    {
        try {
            if (! j.is_object() || ! j.contains("class"))
                throw malformed("missing \"class\"");
            auto cls = j.at("class").get<string>();
            ClassTag tag;
            if (cls == "graph")
                tag = ClassTag::graph();
            else if (cls == "poset")
                tag = ClassTag::poset();
            else if (cls == "metric")
                tag = ClassTag::metric();
            else if (cls == "ngon")
                tag = ClassTag::ngon(j.value("n", 3));
            else
                throw malformed("unknown class \"" + cls + "\"");

            StructureBuilder b(tag);
            for (auto & v : j.value("vertices", Json::array())) {
                int part = 0;
                if (j.contains("part")) {
                    auto key = std::to_string(v.get<VertexId>());
                    if (j.at("part").contains(key))
                        part = j.at("part").at(key).get<int>();
                }
                b.add_vertex(v.get<VertexId>(), part);
            }
            if (j.contains("edges")) {
                if (! tag.graph_like())
                    throw malformed("\"edges\" on a " + cls);
                for (auto & e : j.at("edges"))
                    b.set_related(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
            }
            if (j.contains("order")) {
                if (tag.kind != ClassKind::poset)
                    throw malformed("\"order\" on a " + cls);
                for (auto & e : j.at("order"))
                    b.set_related(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
            }
            if (j.contains("dist")) {
                if (tag.kind != ClassKind::metric)
                    throw malformed("\"dist\" on a " + cls);
                for (auto & e : j.at("dist")) {
                    Rational d = e.at(2).is_string() ? parse_rational(e.at(2).get<string>()) : Rational(e.at(2).get<std::int64_t>());
                    b.set_distance(e.at(0).get<VertexId>(), e.at(1).get<VertexId>(), d);
                }
            }
            if (j.contains("depth"))
                b.set_depth(j.at("depth").get<int>());
            return std::move(b).build();
        }
        catch (const Json::exception & e) {
            throw malformed(e.what());
        }
    }

    auto load_structure(const string & path) -> Structure
    {
        std::ifstream in(path);
        if (! in)
            throw FraisseError("cannot open " + path);
        try {
            return structure_from_json(Json::parse(in));
        }
        catch (const Json::parse_error & e) {
            throw FraisseError(path + ": " + e.what());
        }
    }

    auto save_structure(const string & path, const Structure & s) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw FraisseError("cannot write " + path);
        out << to_json(s).dump() << '\n';
    }

    auto to_json(const Embedding & e) -> Json
    {
        Json j = Json::array();
        for (auto & [a, b] : e.map())
            j.push_back({a, b});
        return j;
    }

    auto embedding_from_json(const Json & j) -> Embedding
    {
        Embedding e;
        try {
            for (auto & p : j)
                e.set(p.at(0).get<VertexId>(), p.at(1).get<VertexId>());
        }
        catch (const Json::exception & ex) {
            throw FraisseError(string("malformed map JSON: ") + ex.what());
        }
        return e;
    }

    auto to_dot(const Structure & s, const std::map<VertexId, int> & round) -> string
    {
        if (! s.tag().graph_like())
            throw ClassMismatch("DOT export needs a graph or n-gon fragment, got " + to_string(s.tag()));
        std::ostringstream o;
        o << "graph fragment {\n";
        for (int i = 0; i < s.size(); ++i) {
            o << "  " << s.id(i) << " [shape=" << (s.part(i) ? "box" : "circle");
            auto r = round.find(s.id(i));
            if (r != round.end() && r->second > 0)
                o << ", style=filled, fillcolor=\"/blues9/" << std::min(9, 2 + r->second) << "\", xlabel=\"r" << r->second << "\"";
            o << "];\n";
        }
        for (int i = 0; i < s.size(); ++i)
            for (int k = i + 1; k < s.size(); ++k)
                if (s.related(i, k))
                    o << "  " << s.id(i) << " -- " << s.id(k) << ";\n";
        o << "}\n";
        return o.str();
    }

    auto to_json(const StrongCertificate & c) -> Json
    {
        return {{"verdict", c.verdict}, {"minimum", c.minimum}, {"witness", c.witness}};
    }

    namespace
    {
        auto paths_json(const vector<AddedPath> & ps) -> Json
        {
            Json j = Json::array();
            for (auto & p : ps)
                j.push_back({{"from", p.from}, {"to", p.to}, {"interior", p.interior}});
            return j;
        }
    }

    auto to_json(const CompletionReport & r) -> Json
    {
        Json rounds = Json::array();
        for (auto & ps : r.rounds)
            rounds.push_back(paths_json(ps));
        return {{"result", to_json(r.result)}, {"rounds", rounds}, {"fixpoint", r.fixpoint},
            {"vertices", r.result.size()}, {"edges", r.result.edge_count()}};
    }

    auto to_json(const Amalgam & a) -> Json
    {
        Json fs = Json::array();
        for (auto & f : a.factor_embeddings)
            fs.push_back(to_json(f));
        return {{"result", to_json(a.result)}, {"base_embedding", to_json(a.base_embedding)}, {"factor_embeddings", fs}};
    }

    auto to_json(const TypeCatalog & c) -> Json
    {
        Json entries = Json::array();
        for (auto & e : c.entries)
            entries.push_back({{"key", e.key}, {"new", e.new_vertices()}, {"ext", to_json(e.ext)}});
        return {{"base", to_json(c.base)}, {"m", c.m}, {"size", c.entries.size()}, {"entries", entries}};
    }

    auto to_json(const Tower & t) -> Json
    {
        Json sizes = Json::array(), incl = Json::array();
        for (auto & l : t.levels)
            sizes.push_back(l.size());
        for (auto & e : t.inclusions)
            incl.push_back(to_json(e));
        Json j{{"kind", to_string(t.kind)}, {"m", t.m}, {"level_sizes", sizes}, {"inclusions", incl},
            {"truncated", t.truncated}};
        if (t.truncated)
            j["truncation_reason"] = t.truncation_reason;
        return j;
    }

    auto to_json(const LiftedAutomorphism & l) -> Json
    {
        Json maps = Json::array();
        for (auto & m : l.maps)
            maps.push_back(to_json(m));
        return {{"levels", maps}, {"catalog_permutations", l.sigmas}};
    }

    auto to_json(const RichnessReport & r) -> Json
    {
        return {{"solved", r.solved}, {"unsolved", r.unsolved}, {"out_of_bound", r.out_of_bound}, {"ratio", r.ratio()}};
    }

    auto to_json(const BackAndForthResult & r) -> Json
    {
        Json w = Json::array();
        for (auto & [side, v] : r.witness)
            w.push_back({{"side", side == 0 ? "A" : "B"}, {"vertex", v}});
        Json j{{"equivalent", r.equivalent}};
        if (! r.equivalent)
            j["witness"] = w;
        return j;
    }

    auto axiom_lines(const AxiomReport & r) -> vector<Json>
    {
        vector<Json> lines;
        for (std::size_t i = 0; i < r.axioms.size(); ++i) {
            auto & a = r.axioms[i];
            Json j{{"kind", to_string(r.kind)}, {"variant", r.variant == Variant::faithful ? "faithful" : "overlap-blind"},
                {"axiom", "SIR" + std::to_string(i + 1)}, {"trials", a.tested}, {"exercised", a.exercised},
                {"violations", a.violations}, {"unwitnessed", a.unwitnessed}};
            if (! a.examples.empty())
                j["witness"] = a.examples.front();
            lines.push_back(std::move(j));
        }
        return lines;
    }
}
