/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <fraisse/sir.hh>

#include <algorithm>

using std::optional;
using std::string;
using std::vector;

namespace fraisse
{
    auto SirKind::class_tag() const -> ClassTag
    {
        switch (family) {
        case SirFamily::free_graph:
        case SirFamily::complete_graph: return ClassTag::graph();
        case SirFamily::poset_amalgam: return ClassTag::poset();
        case SirFamily::min_metric: return ClassTag::metric();
        case SirFamily::ngon_strong: return ClassTag::ngon(n);
        }
        return ClassTag::graph();
    }

    auto to_string(const SirKind & k) -> string
    {
        switch (k.family) {
        case SirFamily::free_graph: return "free-graph";
        case SirFamily::complete_graph: return "complete-graph";
        case SirFamily::poset_amalgam: return "poset";
        case SirFamily::min_metric: return "min-metric";
        case SirFamily::ngon_strong: return "ngon-strong(" + std::to_string(k.n) + ")";
        }
        return "?";
    }

    auto parse_sir_kind(const string & name, int n) -> SirKind
    {
        if (name == "free-graph")
            return SirKind::free_graph();
        if (name == "complete-graph")
            return SirKind::complete_graph();
        if (name == "poset")
            return SirKind::poset_amalgam();
        if (name == "min-metric")
            return SirKind::min_metric();
        if (name == "ngon-strong" || name == "ngon") {
            ClassTag::ngon(n);
            return SirKind::ngon_strong(n);
        }
        throw FraisseError("unknown independence relation '" + name + "'");
    }

    namespace
    {
        auto check_class(const SirKind & kind, const Structure & m) -> void
        {
            if (! (kind.class_tag() == m.tag()))
                throw ClassMismatch(to_string(kind) + " needs " + to_string(kind.class_tag()) + " ambient, got " + to_string(m.tag()));
        }

        auto graph_indep(const Structure & m, const vector<int> & ai, const vector<int> & bi, bool want_edge) -> bool
        {
            for (int a : ai)
                for (int b : bi)
                    if (a != b && m.related(a, b) != want_edge)
                        return false;
            return true;
        }

        auto poset_indep(const Structure & m, const vector<int> & ai, const vector<int> & bi, const vector<int> & ci) -> bool
        {
            auto through = [&](int lo, int hi) {
                return std::any_of(ci.begin(), ci.end(), [&](int c) { return m.related(lo, c) && m.related(c, hi); });
            };
            for (int a : ai)
                for (int b : bi) {
                    if (a == b)
                        continue;
                    if (m.related(a, b) != through(a, b) || m.related(b, a) != through(b, a))
                        return false;
                }
            return true;
        }

        auto metric_indep(const Structure & m, const vector<int> & ai, const vector<int> & bi, const vector<int> & ci) -> bool
        {
            for (int a : ai)
                for (int b : bi) {
                    if (a == b)
                        continue;
                    Rational best = m.distance(a, ci.front()) + m.distance(ci.front(), b);
                    for (int c : ci)
                        best = std::min(best, m.distance(a, c) + m.distance(c, b));
                    if (m.distance(a, b) != best)
                        return false;
                }
            return true;
        }

        auto ngon_indep(const Structure & m, const VertexSet & a, const VertexSet & b, const VertexSet & c, Variant variant) -> bool
        {
            int n = m.tag().n;
            auto cc = generated(m, c);
            auto ac = generated(m, set_union(a, c));
            auto bc = generated(m, set_union(b, c));
            auto abc = generated(m, set_union(set_union(a, b), c));

            if (variant == Variant::faithful && set_intersection(ac, bc) != cc)
                return false;
            auto a_out = set_difference(ac, cc), b_out = set_difference(bc, cc);
            if (! graph_indep(m, indices_of(m, a_out), indices_of(m, b_out), false))
                return false;

            // without cross edges the free amalgam is the induced subgraph on the union
            auto amalgam = induced(m, set_union(ac, bc));
            return is_n_strong(n, amalgam, induced(m, abc)).verdict;
        }
    }

    auto indep(const SirKind & kind, const Structure & m, const VertexSet & a, const VertexSet & b,
        const VertexSet & c, Variant variant) -> bool
    {
        check_class(kind, m);
        for (auto * s : {&a, &b, &c})
            for (auto v : *s)
                m.at(v);
        if (kind.local() && c.empty())
            throw EmptyBase(to_string(kind) + " is a local relation and needs a nonempty base");

        if (kind.family == SirFamily::ngon_strong)
            return ngon_indep(m, a, b, c, variant);

        if (variant == Variant::faithful && ! is_subset(set_intersection(a, b), c))
            return false;
        auto ai = indices_of(m, set_difference(a, c));
        auto bi = indices_of(m, set_difference(b, c));
        auto ci = indices_of(m, c);

        switch (kind.family) {
        case SirFamily::free_graph: return graph_indep(m, ai, bi, false);
        case SirFamily::complete_graph: return graph_indep(m, ai, bi, true);
        case SirFamily::poset_amalgam: return poset_indep(m, ai, bi, ci);
        case SirFamily::min_metric: return metric_indep(m, ai, bi, ci);
        case SirFamily::ngon_strong: break;
        }
        return false;
    }

    namespace
    {
        auto subset_of(const VertexSet & x, unsigned long mask) -> VertexSet
        {
            VertexSet r;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (mask & (1UL << i))
                    r.push_back(x[i]);
            return r;
        }

        auto masks_by_size(std::size_t n) -> vector<unsigned long>
        {
            vector<unsigned long> masks(1UL << n);
            for (unsigned long m = 0; m < masks.size(); ++m)
                masks[m] = m;
            std::stable_sort(masks.begin(), masks.end(), [](unsigned long p, unsigned long q) {
                return __builtin_popcountl(p) < __builtin_popcountl(q);
            });
            return masks;
        }

        constexpr std::size_t subset_search_limit = 16;
    }

    auto indep_over_set(const SirKind & kind, const Structure & m, const VertexSet & a, const VertexSet & b,
        const VertexSet & x) -> OverSetResult
    {
        if (x.size() > subset_search_limit)
            throw SearchBoundExceeded("base set too large for exhaustive support search");
        auto full = (1UL << x.size()) - 1;
        // verdict per superset mask, computed lazily
        vector<signed char> memo(1UL << x.size(), -1);
        auto holds = [&](unsigned long mask) -> bool {
            if (memo[mask] == -1) {
                auto cset = subset_of(x, mask);
                memo[mask] = (kind.local() && cset.empty()) ? 1 : indep(kind, m, a, b, cset);
            }
            return memo[mask] == 1;
        };

        for (auto mask : masks_by_size(x.size())) {
            if (kind.local() && mask == 0)
                continue;
            bool ok = true;
            // every superset of mask inside x
            auto rest = full & ~mask;
            for (unsigned long sub = rest;; sub = (sub - 1) & rest) {
                if (! holds(mask | sub)) {
                    ok = false;
                    break;
                }
                if (sub == 0)
                    break;
            }
            if (ok)
                return {true, subset_of(x, mask)};
        }
        return {false, {}};
    }

    auto find_support(const SirKind & kind, const Structure & m, const VertexSet & a,
        const VertexSet & x) -> optional<VertexSet>
    {
        if (x.size() > subset_search_limit)
            throw SearchBoundExceeded("base set too large for exhaustive support search");
        for (auto mask : masks_by_size(x.size())) {
            if (kind.local() && mask == 0)
                continue;
            auto c = subset_of(x, mask);
            if (indep(kind, m, a, x, c))
                return c;
        }
        return std::nullopt;
    }
}
