/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <fraisse/search.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

using std::optional;
using std::string;
using std::vector;

namespace fraisse
{
    namespace
    {
        struct Counts
        {
            vector<int> out, in;
        };

        // Degree-style invariants that an embedding can only increase.
        auto counts_of(const Structure & s) -> Counts
        {
            Counts c{vector<int>(s.size(), 0), vector<int>(s.size(), 0)};
            if (s.tag().kind == ClassKind::metric)
                return c;
            for (int i = 0; i < s.size(); ++i)
                for (int j = 0; j < s.size(); ++j)
                    if (i != j && s.related(i, j)) {
                        ++c.out[i];
                        ++c.in[j];
                    }
            return c;
        }

        class EmbeddingSearch
        {
        public:
            EmbeddingSearch(const Structure & dom, const Structure & cod, const SearchConfig & config) :
                _dom(dom), _cod(cod), _config(config), _dom_counts(counts_of(dom)), _cod_counts(counts_of(cod))
            {
            }

            auto run(const Embedding & fixing) -> vector<Embedding>
            {
                if (! (_dom.tag() == _cod.tag()))
                    throw ClassMismatch("embedding search between " + to_string(_dom.tag()) + " and " + to_string(_cod.tag()));

                vector<char> placed(_dom.size(), 0);
                _pinned.assign(_dom.size(), -1);
                for (auto & [from, to] : fixing.map()) {
                    auto i = _dom.index_of(from);
                    if (! i)
                        continue;
                    auto j = _cod.index_of(to);
                    if (! j)
                        return {};
                    _pinned[*i] = *j;
                    _order.push_back(*i);
                    placed[*i] = 1;
                }

                int free_count = _dom.size() - static_cast<int>(_order.size());
                if (free_count > _config.search_bound)
                    throw SearchBoundExceeded("embedding search needs " + std::to_string(free_count) +
                        " free vertices, bound is " + std::to_string(_config.search_bound));
                if (_dom.size() > _cod.size())
                    return {};

                // connectivity-first ordering of the free vertices
                vector<int> links(_dom.size(), 0);
                for (int i : _order)
                    bump_links(links, i);
                while (static_cast<int>(_order.size()) < _dom.size()) {
                    int best = -1;
                    for (int i = 0; i < _dom.size(); ++i) {
                        if (placed[i])
                            continue;
                        if (best == -1 || std::tie(links[i], _dom_counts.out[i], _dom_counts.in[i]) >
                                std::tie(links[best], _dom_counts.out[best], _dom_counts.in[best]))
                            best = i;
                    }
                    placed[best] = 1;
                    _order.push_back(best);
                    bump_links(links, best);
                }

                _image.assign(_dom.size(), -1);
                _used.assign(_cod.size(), 0);
                recurse(0);
                return std::move(_results);
            }

        private:
            const Structure & _dom;
            const Structure & _cod;
            const SearchConfig & _config;
            Counts _dom_counts, _cod_counts;
            vector<int> _order, _pinned, _image;
            vector<char> _used;
            vector<Embedding> _results;

            auto bump_links(vector<int> & links, int i) -> void
            {
                for (int j = 0; j < _dom.size(); ++j)
                    if (j != i && (_dom.tag().kind == ClassKind::metric || _dom.related(i, j) || _dom.related(j, i)))
                        ++links[j];
            }

            auto compatible(int v, int c) const -> bool
            {
                if (_dom.tag().kind == ClassKind::ngon && _dom.part(v) != _cod.part(c))
                    return false;
                if (_dom_counts.out[v] > _cod_counts.out[c] || _dom_counts.in[v] > _cod_counts.in[c])
                    return false;
                bool metric = _dom.tag().kind == ClassKind::metric;
                for (int u : _order) {
                    int w = _image[u];
                    if (w == -1)
                        break;
                    if (_dom.related(v, u) != _cod.related(c, w) || _dom.related(u, v) != _cod.related(w, c))
                        return false;
                    if (metric && _dom.distance(v, u) != _cod.distance(c, w))
                        return false;
                }
                return true;
            }

            auto recurse(std::size_t pos) -> bool
            {
                if (pos == _order.size()) {
                    Embedding e;
                    for (int i = 0; i < _dom.size(); ++i)
                        e.set(_dom.id(i), _cod.id(_image[i]));
                    _results.push_back(std::move(e));
                    return _results.size() < _config.max_results;
                }
                int v = _order[pos];
                auto attempt = [&](int c) -> bool {
                    if (_used[c] || ! compatible(v, c))
                        return true;
                    _image[v] = c;
                    _used[c] = 1;
                    bool more = recurse(pos + 1);
                    _used[c] = 0;
                    _image[v] = -1;
                    return more;
                };
                if (_pinned[v] != -1)
                    return attempt(_pinned[v]);
                for (int c = 0; c < _cod.size(); ++c)
                    if (! attempt(c))
                        return false;
                return true;
            }
        };

        using Token = std::int64_t;

        // Individualisation-refinement search for the lexicographically least
        // code over all base-fixing orderings reachable by an invariant
        // branching rule.
        class Canoniser
        {
        public:
            Canoniser(const Structure & s, const vector<VertexId> & base) :
                _s(s), _metric(s.tag().kind == ClassKind::metric)
            {
                vector<char> in_base(s.size(), 0);
                for (auto v : base) {
                    int i = s.at(v);
                    if (in_base[i])
                        throw FraisseError("repeated base vertex " + std::to_string(v));
                    in_base[i] = 1;
                    _prefix.push_back(i);
                }
                for (int i = 0; i < s.size(); ++i)
                    if (! in_base[i])
                        _free.push_back(i);
            }

            auto free_count() const -> int { return static_cast<int>(_free.size()); }

            auto run() -> vector<int>
            {
                vector<Token> code;
                for (std::size_t k = 0; k < _prefix.size(); ++k)
                    append_chunk(code, _prefix, k);
                vector<int> order = _prefix;
                vector<char> placed(_s.size(), 0);
                for (int i : _prefix)
                    placed[i] = 1;
                search(order, placed, code);
                return _best_order;
            }

        private:
            const Structure & _s;
            bool _metric;
            vector<int> _prefix, _free;
            vector<Token> _best_code;
            vector<int> _best_order;
            bool _have_best = false;

            auto rel_tokens(vector<Token> & out, int a, int b) const -> void
            {
                out.push_back(_s.related(a, b));
                out.push_back(_s.related(b, a));
                if (_metric) {
                    out.push_back(_s.distance(a, b).numerator());
                    out.push_back(_s.distance(a, b).denominator());
                }
            }

            auto append_chunk(vector<Token> & code, const vector<int> & order, std::size_t k) const -> void
            {
                int v = order[k];
                code.push_back(_s.part(v));
                for (std::size_t p = 0; p < k; ++p)
                    rel_tokens(code, v, order[p]);
            }

            auto twins(int u, int v) const -> bool
            {
                if (_s.part(u) != _s.part(v) || _s.related(u, v) != _s.related(v, u))
                    return false;
                for (int w = 0; w < _s.size(); ++w) {
                    if (w == u || w == v)
                        continue;
                    if (_s.related(u, w) != _s.related(v, w) || _s.related(w, u) != _s.related(w, v))
                        return false;
                    if (_metric && _s.distance(u, w) != _s.distance(v, w))
                        return false;
                }
                return true;
            }

            // Stable colour refinement of the unplaced vertices relative to
            // the placed sequence. Colours are ranks of invariant signatures.
            auto refine(const vector<int> & order, const vector<int> & unplaced) const -> vector<int>
            {
                vector<vector<Token>> sig(_s.size());
                for (int u : unplaced) {
                    sig[u].push_back(_s.part(u));
                    for (int p : order)
                        rel_tokens(sig[u], u, p);
                }
                vector<int> colour(_s.size(), 0);
                auto rank = [&]() -> int {
                    vector<vector<Token>> keys;
                    for (int u : unplaced)
                        keys.push_back(sig[u]);
                    std::sort(keys.begin(), keys.end());
                    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
                    for (int u : unplaced)
                        colour[u] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[u]) - keys.begin());
                    return static_cast<int>(keys.size());
                };
                int classes = rank();
                while (true) {
                    for (int u : unplaced) {
                        vector<vector<Token>> nbhd;
                        for (int w : unplaced) {
                            if (w == u)
                                continue;
                            vector<Token> t{colour[w]};
                            rel_tokens(t, u, w);
                            nbhd.push_back(std::move(t));
                        }
                        std::sort(nbhd.begin(), nbhd.end());
                        vector<Token> next{colour[u]};
                        for (auto & t : nbhd)
                            next.insert(next.end(), t.begin(), t.end());
                        sig[u] = std::move(next);
                    }
                    int now = rank();
                    if (now == classes)
                        break;
                    classes = now;
                }
                return colour;
            }

            auto search(vector<int> & order, vector<char> & placed, vector<Token> & code) -> void
            {
                if (_have_best) {
                    auto n = std::min(code.size(), _best_code.size());
                    auto c = std::lexicographical_compare(_best_code.begin(), _best_code.begin() + n, code.begin(), code.begin() + n);
                    if (c)
                        return;
                }
                if (order.size() == static_cast<std::size_t>(_s.size())) {
                    if (! _have_best || code < _best_code) {
                        _best_code = code;
                        _best_order = order;
                        _have_best = true;
                    }
                    return;
                }

                vector<int> unplaced;
                for (int i = 0; i < _s.size(); ++i)
                    if (! placed[i])
                        unplaced.push_back(i);
                auto colour = refine(order, unplaced);

                std::map<int, vector<int>> cells;
                for (int u : unplaced)
                    cells[colour[u]].push_back(u);
                const vector<int> * target = nullptr;
                for (auto & [c, members] : cells)
                    if (! target || members.size() < target->size())
                        target = &members;

                vector<int> tried;
                for (int u : *target) {
                    if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, u); }))
                        continue;
                    tried.push_back(u);
                    auto mark = code.size();
                    order.push_back(u);
                    placed[u] = 1;
                    append_chunk(code, order, order.size() - 1);
                    search(order, placed, code);
                    code.resize(mark);
                    placed[u] = 0;
                    order.pop_back();
                }
            }
        };
    }

    auto find_embeddings(const Structure & dom, const Structure & cod,
        const Embedding & fixing, const SearchConfig & config) -> vector<Embedding>
    {
        EmbeddingSearch search(dom, cod, config);
        return search.run(fixing);
    }

    auto find_isomorphism(const Structure & a, const Structure & b,
        const Embedding & fixing, const SearchConfig & config) -> optional<Embedding>
    {
        if (! (a.tag() == b.tag()))
            throw ClassMismatch("isomorphism test between " + to_string(a.tag()) + " and " + to_string(b.tag()));
        if (a.size() != b.size())
            return std::nullopt;
        SearchConfig c = config;
        c.max_results = 1;
        auto r = find_embeddings(a, b, fixing, c);
        if (r.empty())
            return std::nullopt;
        return r.front();
    }

    auto are_isomorphic(const Structure & a, const Structure & b,
        const VertexSet & over, const SearchConfig & config) -> optional<Embedding>
    {
        for (auto v : over)
            if (! a.has(v) || ! b.has(v))
                throw UnknownVertex(v);
        return find_isomorphism(a, b, Embedding::identity(over), config);
    }

    auto canonical_order(const Structure & s, const vector<VertexId> & base,
        const SearchConfig & config) -> vector<VertexId>
    {
        Canoniser c(s, base);
        if (c.free_count() > config.search_bound)
            throw SearchBoundExceeded("canonical form needs " + std::to_string(c.free_count()) +
                " free vertices, bound is " + std::to_string(config.search_bound));
        vector<VertexId> r;
        for (int i : c.run())
            r.push_back(s.id(i));
        return r;
    }

    auto canonical_key(const Structure & s, const vector<VertexId> & base,
        const SearchConfig & config) -> CanonicalKey
    {
        auto order = canonical_order(s, base, config);
        auto idx = indices_of(s, order);
        string key = to_string(s.tag()) + "|" + std::to_string(s.size()) + "|" + std::to_string(base.size()) + "|";
        bool metric = s.tag().kind == ClassKind::metric;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            key += std::to_string(s.part(idx[k]));
            for (std::size_t p = 0; p < k; ++p) {
                key += s.related(idx[k], idx[p]) ? '1' : '0';
                key += s.related(idx[p], idx[k]) ? '1' : '0';
                if (metric)
                    key += "[" + to_string(s.distance(idx[k], idx[p])) + "]";
            }
            key += ';';
        }
        return key;
    }

    auto automorphisms(const Structure & s, const SearchConfig & config) -> vector<Embedding>
    {
        return find_embeddings(s, s, {}, config);
    }
}
