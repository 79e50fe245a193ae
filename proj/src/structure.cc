/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <fraisse/ngon.hh>
#include <fraisse/structure.hh>

#include <algorithm>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace fraisse
{
    auto make_set(vector<VertexId> v) -> VertexSet
    {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet
    {
        VertexSet r;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    }

    auto set_intersection(const VertexSet & a, const VertexSet & b) -> VertexSet
    {
        VertexSet r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    }

    auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet
    {
        VertexSet r;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    }

    auto is_subset(const VertexSet & a, const VertexSet & b) -> bool
    {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    auto contains(const VertexSet & s, VertexId v) -> bool
    {
        return std::binary_search(s.begin(), s.end(), v);
    }

    auto parse_rational(const string & s) -> Rational
    {
        auto slash = s.find('/');
        try {
            if (slash == string::npos)
                return Rational(std::stoll(s));
            auto den = std::stoll(s.substr(slash + 1));
            if (den == 0)
                throw FraisseError("zero denominator in rational '" + s + "'");
            return Rational(std::stoll(s.substr(0, slash)), den);
        }
        catch (const std::logic_error &) {
            throw FraisseError("malformed rational '" + s + "'");
        }
    }

    auto to_string(const Rational & r) -> string
    {
        return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    }

    UnknownVertex::UnknownVertex(VertexId v) :
        FraisseError("unknown vertex id " + std::to_string(v))
    {
    }

    auto ClassTag::ngon(int n) -> ClassTag
    {
        if (n < 3)
            throw FraisseError("n-gon class needs n >= 3, got " + std::to_string(n));
        return {ClassKind::ngon, n};
    }

    auto to_string(const ClassTag & t) -> string
    {
        switch (t.kind) {
        case ClassKind::graph: return "graph";
        case ClassKind::poset: return "poset";
        case ClassKind::metric: return "metric";
        case ClassKind::ngon: return "ngon(" + std::to_string(t.n) + ")";
        }
        return "?";
    }

    Structure::Structure(ClassTag tag) :
        _tag(tag)
    {
    }

    auto Structure::vertex_set() const -> VertexSet
    {
        return make_set(_ids);
    }

    auto Structure::index_of(VertexId v) const -> optional<int>
    {
        auto i = _index.find(v);
        if (i == _index.end())
            return std::nullopt;
        return i->second;
    }

    auto Structure::at(VertexId v) const -> int
    {
        auto i = _index.find(v);
        if (i == _index.end())
            throw UnknownVertex(v);
        return i->second;
    }

    auto Structure::degree(int i) const -> int
    {
        int d = 0;
        for (int j = 0; j < size(); ++j)
            if (j != i && _rel[i][j])
                ++d;
        return d;
    }

    auto Structure::edge_count() const -> long
    {
        long c = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (_rel[i][j])
                    ++c;
        return c;
    }

    auto Structure::neighbours(int i) const -> vector<int>
    {
        vector<int> r;
        for (int j = 0; j < size(); ++j)
            if (j != i && _rel[i][j])
                r.push_back(j);
        return r;
    }

    auto Structure::max_id() const -> VertexId
    {
        VertexId m = -1;
        for (auto v : _ids)
            m = std::max(m, v);
        return m;
    }

    auto Structure::operator==(const Structure & o) const -> bool
    {
        return _tag == o._tag && _ids == o._ids && _rel == o._rel && _dist == o._dist && _part == o._part && _depth == o._depth;
    }

    StructureBuilder::StructureBuilder(ClassTag tag) :
        _s(tag)
    {
    }

    StructureBuilder::StructureBuilder(Structure start) :
        _s(std::move(start))
    {
    }

    auto StructureBuilder::add_vertex(VertexId v, int part) -> int
    {
        if (_s._index.count(v))
            throw FraisseError("duplicate vertex id " + std::to_string(v));
        int i = _s.size();
        _s._ids.push_back(v);
        _s._index.emplace(v, i);
        _s._part.push_back(part);
        bool reflexive = _s._tag.kind == ClassKind::poset;
        for (auto & row : _s._rel)
            row.push_back(0);
        _s._rel.emplace_back(i + 1, 0);
        _s._rel[i][i] = reflexive ? 1 : 0;
        if (_s._tag.kind == ClassKind::metric) {
            for (auto & row : _s._dist)
                row.push_back(Rational(0));
            _s._dist.emplace_back(i + 1, Rational(0));
        }
        return i;
    }

    auto StructureBuilder::set_related(VertexId a, VertexId b, bool value) -> void
    {
        set_related_index(_s.at(a), _s.at(b), value);
    }

    auto StructureBuilder::set_related_index(int i, int j, bool value) -> void
    {
        _s._rel[i][j] = value ? 1 : 0;
        if (_s._tag.graph_like())
            _s._rel[j][i] = value ? 1 : 0;
    }

    auto StructureBuilder::set_distance(VertexId a, VertexId b, Rational d) -> void
    {
        set_distance_index(_s.at(a), _s.at(b), d);
    }

    auto StructureBuilder::set_distance_index(int i, int j, Rational d) -> void
    {
        if (_s._tag.kind != ClassKind::metric)
            throw ClassMismatch("distances only exist in the metric class");
        _s._dist[i][j] = d;
        _s._dist[j][i] = d;
    }

    auto StructureBuilder::set_depth(int d) -> void
    {
        _s._depth = d;
    }

    auto StructureBuilder::build() && -> Structure
    {
        return std::move(_s);
    }

    auto Embedding::identity(const VertexSet & s) -> Embedding
    {
        Embedding e;
        for (auto v : s)
            e._map.emplace(v, v);
        return e;
    }

    auto Embedding::operator()(VertexId v) const -> VertexId
    {
        auto i = _map.find(v);
        if (i == _map.end())
            throw UnknownVertex(v);
        return i->second;
    }

    auto Embedding::image(const VertexSet & s) const -> VertexSet
    {
        vector<VertexId> r;
        r.reserve(s.size());
        for (auto v : s)
            r.push_back((*this)(v));
        return make_set(std::move(r));
    }

    auto Embedding::inverse() const -> Embedding
    {
        Embedding e;
        for (auto & [a, b] : _map)
            e._map.emplace(b, a);
        return e;
    }

    auto Embedding::after(const Embedding & inner) const -> Embedding
    {
        Embedding e;
        for (auto & [a, b] : inner._map)
            e._map.emplace(a, (*this)(b));
        return e;
    }

    auto Embedding::restricted(const VertexSet & s) const -> Embedding
    {
        Embedding e;
        for (auto v : s)
            e._map.emplace(v, (*this)(v));
        return e;
    }

    auto is_embedding(const Structure & dom, const Structure & cod, const Embedding & e) -> bool
    {
        if (! (dom.tag() == cod.tag()) || e.size() != static_cast<std::size_t>(dom.size()))
            return false;
        vector<int> img(dom.size());
        vector<char> used(cod.size(), 0);
        for (int i = 0; i < dom.size(); ++i) {
            if (! e.defined(dom.id(i)))
                return false;
            auto j = cod.index_of(e(dom.id(i)));
            if (! j || used[*j])
                return false;
            used[*j] = 1;
            img[i] = *j;
        }
        for (int i = 0; i < dom.size(); ++i) {
            if (dom.tag().kind == ClassKind::ngon && dom.part(i) != cod.part(img[i]))
                return false;
            for (int j = 0; j < dom.size(); ++j) {
                if (dom.related(i, j) != cod.related(img[i], img[j]))
                    return false;
                if (dom.tag().kind == ClassKind::metric && dom.distance(i, j) != cod.distance(img[i], img[j]))
                    return false;
            }
        }
        return true;
    }

    auto is_automorphism(const Structure & s, const Embedding & e) -> bool
    {
        return is_embedding(s, s, e);
    }

    namespace
    {
        auto pair_string(const Structure & s, int i, int j) -> string
        {
            return "(" + std::to_string(s.id(i)) + "," + std::to_string(s.id(j)) + ")";
        }
    }

    auto validate(const Structure & s) -> optional<string>
    {
        int n = s.size();
        switch (s.tag().kind) {
        case ClassKind::graph:
        case ClassKind::ngon:
            for (int i = 0; i < n; ++i) {
                if (s.related(i, i))
                    return "self-loop at " + std::to_string(s.id(i));
                for (int j = i + 1; j < n; ++j)
                    if (s.related(i, j) != s.related(j, i))
                        return "asymmetric edge " + pair_string(s, i, j);
            }
            if (s.tag().kind == ClassKind::ngon) {
                for (int i = 0; i < n; ++i) {
                    if (s.part(i) != 0 && s.part(i) != 1)
                        return "bad part label at " + std::to_string(s.id(i));
                    for (int j = i + 1; j < n; ++j)
                        if (s.related(i, j) && s.part(i) == s.part(j))
                            return "edge " + pair_string(s, i, j) + " inside one side of the bipartition";
                }
                auto g = girth(s);
                if (g && *g < 2 * s.tag().n)
                    return "girth " + std::to_string(*g) + " < " + std::to_string(2 * s.tag().n);
            }
            break;

        case ClassKind::poset:
            for (int i = 0; i < n; ++i) {
                if (! s.related(i, i))
                    return "not reflexive at " + std::to_string(s.id(i));
                for (int j = 0; j < n; ++j) {
                    if (i != j && s.related(i, j) && s.related(j, i))
                        return "not antisymmetric on " + pair_string(s, i, j);
                    if (s.related(i, j))
                        for (int k = 0; k < n; ++k)
                            if (s.related(j, k) && ! s.related(i, k))
                                return "not transitive on " + pair_string(s, i, j) + "," + std::to_string(s.id(k));
                }
            }
            break;

        case ClassKind::metric:
            for (int i = 0; i < n; ++i) {
                if (s.distance(i, i) != Rational(0))
                    return "nonzero self-distance at " + std::to_string(s.id(i));
                for (int j = 0; j < n; ++j) {
                    if (i == j)
                        continue;
                    if (s.distance(i, j) != s.distance(j, i))
                        return "asymmetric distance " + pair_string(s, i, j);
                    if (s.distance(i, j) <= Rational(0))
                        return "non-positive distance " + pair_string(s, i, j);
                    for (int k = 0; k < n; ++k)
                        if (s.distance(i, k) > s.distance(i, j) + s.distance(j, k))
                            return "triangle inequality fails on " + pair_string(s, i, k) + " via " + std::to_string(s.id(j));
                }
            }
            break;
        }
        return std::nullopt;
    }

    auto indices_of(const Structure & s, const VertexSet & subset) -> vector<int>
    {
        vector<int> r;
        r.reserve(subset.size());
        for (auto v : subset)
            r.push_back(s.at(v));
        return r;
    }

    auto induced(const Structure & s, const VertexSet & subset) -> Structure
    {
        for (auto v : subset)
            s.at(v);

        // keep the ambient vertex order
        vector<int> keep;
        for (int i = 0; i < s.size(); ++i)
            if (contains(subset, s.id(i)))
                keep.push_back(i);

        StructureBuilder b(s.tag());
        for (int i : keep)
            b.add_vertex(s.id(i), s.part(i));
        for (std::size_t x = 0; x < keep.size(); ++x)
            for (std::size_t y = 0; y < keep.size(); ++y) {
                if (s.related(keep[x], keep[y]))
                    b.set_related_index(x, y);
                if (s.tag().kind == ClassKind::metric && x < y)
                    b.set_distance_index(x, y, s.distance(keep[x], keep[y]));
            }
        b.set_depth(s.depth());
        return std::move(b).build();
    }

    auto relabel(const Structure & s, const Embedding & e) -> Structure
    {
        StructureBuilder b(s.tag());
        for (int i = 0; i < s.size(); ++i)
            b.add_vertex(e.defined(s.id(i)) ? e(s.id(i)) : s.id(i), s.part(i));
        for (int i = 0; i < s.size(); ++i)
            for (int j = 0; j < s.size(); ++j) {
                if (s.related(i, j))
                    b.set_related_index(i, j);
                if (s.tag().kind == ClassKind::metric && i < j)
                    b.set_distance_index(i, j, s.distance(i, j));
            }
        b.set_depth(s.depth());
        return std::move(b).build();
    }

    auto generated(const Structure & s, const VertexSet & subset) -> VertexSet
    {
        for (auto v : subset)
            s.at(v);
        if (s.tag().kind != ClassKind::ngon)
            return subset;
        return ngon_closure(s, subset);
    }
}
