/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef FRAISSE_GUARD_FRAISSE_STRUCTURE_HH
#define FRAISSE_GUARD_FRAISSE_STRUCTURE_HH 1

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace fraisse
{
    using VertexId = std::int64_t;

    /// Sorted, duplicate-free list of vertex ids.
    using VertexSet = std::vector<VertexId>;

    using Rational = boost::rational<std::int64_t>;

    auto make_set(std::vector<VertexId> v) -> VertexSet;
    auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet;
    auto set_intersection(const VertexSet & a, const VertexSet & b) -> VertexSet;
    auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet;
    auto is_subset(const VertexSet & a, const VertexSet & b) -> bool;
    auto contains(const VertexSet & s, VertexId v) -> bool;

    auto parse_rational(const std::string & s) -> Rational;
    auto to_string(const Rational & r) -> std::string;

    class FraisseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class UnknownVertex : public FraisseError
    {
    public:
        explicit UnknownVertex(VertexId v);
    };

    class SearchBoundExceeded : public FraisseError
    {
    public:
        using FraisseError::FraisseError;
    };

    /// The finite fragment is too shallow to answer a question about the
    /// infinite structure it approximates; deepen and retry.
    class DepthInsufficient : public FraisseError
    {
    public:
        using FraisseError::FraisseError;
    };

    class ClassMismatch : public FraisseError
    {
    public:
        using FraisseError::FraisseError;
    };

    class EmptyBase : public FraisseError
    {
    public:
        using FraisseError::FraisseError;
    };

    class BaseMismatch : public FraisseError
    {
    public:
        using FraisseError::FraisseError;
    };

    class MenuRequired : public FraisseError
    {
    public:
        using FraisseError::FraisseError;
    };

    /// Raised when a construction produces something a lemma says it cannot.
    class InternalInvariantViolation : public FraisseError
    {
    public:
        using FraisseError::FraisseError;
    };

    enum class ClassKind
    {
        graph,
        poset,
        metric,
        ngon
    };

    struct ClassTag
    {
        ClassKind kind = ClassKind::graph;
        int n = 0; ///< gonality, only meaningful for ngon

        static auto graph() -> ClassTag { return {ClassKind::graph, 0}; }
        static auto poset() -> ClassTag { return {ClassKind::poset, 0}; }
        static auto metric() -> ClassTag { return {ClassKind::metric, 0}; }
        static auto ngon(int n) -> ClassTag;

        auto graph_like() const -> bool { return kind == ClassKind::graph || kind == ClassKind::ngon; }

        auto operator==(const ClassTag &) const -> bool = default;
    };

    auto to_string(const ClassTag & t) -> std::string;

    /// A finite structure in one of the four supported classes. Vertices are
    /// opaque ids kept in insertion order; relation data is indexed by
    /// position. Values are immutable once built; use StructureBuilder.
    class Structure
    {
    public:
        Structure() = default;
        explicit Structure(ClassTag tag);

        auto tag() const -> const ClassTag & { return _tag; }
        auto size() const -> int { return static_cast<int>(_ids.size()); }
        auto empty() const -> bool { return _ids.empty(); }
        auto ids() const -> const std::vector<VertexId> & { return _ids; }
        auto vertex_set() const -> VertexSet;
        auto id(int i) const -> VertexId { return _ids[i]; }
        auto index_of(VertexId v) const -> std::optional<int>;
        auto at(VertexId v) const -> int; ///< index, throws UnknownVertex
        auto has(VertexId v) const -> bool { return _index.count(v) != 0; }

        /// Edge for graph-like classes, i <= j for posets, unused for metrics.
        auto related(int i, int j) const -> bool { return _rel[i][j] != 0; }
        auto distance(int i, int j) const -> const Rational & { return _dist[i][j]; }
        auto part(int i) const -> int { return _part[i]; }
        auto depth() const -> int { return _depth; }

        auto degree(int i) const -> int;
        auto edge_count() const -> long;
        auto neighbours(int i) const -> std::vector<int>;
        auto max_id() const -> VertexId; ///< -1 when empty

        auto operator==(const Structure & other) const -> bool;

    private:
        friend class StructureBuilder;

        ClassTag _tag;
        std::vector<VertexId> _ids;
        std::unordered_map<VertexId, int> _index;
        std::vector<std::vector<std::uint8_t>> _rel;
        std::vector<std::vector<Rational>> _dist;
        std::vector<int> _part;
        int _depth = 0;
    };

    class StructureBuilder
    {
    public:
        explicit StructureBuilder(ClassTag tag);
        explicit StructureBuilder(Structure start);

        auto add_vertex(VertexId v, int part = 0) -> int;
        auto set_related(VertexId a, VertexId b, bool value = true) -> void;
        auto set_related_index(int i, int j, bool value = true) -> void;
        auto set_distance(VertexId a, VertexId b, Rational d) -> void;
        auto set_distance_index(int i, int j, Rational d) -> void;
        auto set_depth(int d) -> void;

        auto current() const -> const Structure & { return _s; }
        auto build() && -> Structure;
        auto build() const & -> Structure { return _s; }

    private:
        Structure _s;
    };

    /// Injective vertex map between two structures. Whether it preserves
    /// relations is checked by is_embedding.
    class Embedding
    {
    public:
        Embedding() = default;
        explicit Embedding(std::map<VertexId, VertexId> m) : _map(std::move(m)) {}

        static auto identity(const VertexSet & s) -> Embedding;

        auto operator()(VertexId v) const -> VertexId;
        auto defined(VertexId v) const -> bool { return _map.count(v) != 0; }
        auto set(VertexId from, VertexId to) -> void { _map[from] = to; }
        auto map() const -> const std::map<VertexId, VertexId> & { return _map; }
        auto size() const -> std::size_t { return _map.size(); }

        auto image(const VertexSet & s) const -> VertexSet;
        auto inverse() const -> Embedding;
        /// (this after inner)(v) = this(inner(v))
        auto after(const Embedding & inner) const -> Embedding;
        auto restricted(const VertexSet & s) const -> Embedding;

        auto operator==(const Embedding &) const -> bool = default;

    private:
        std::map<VertexId, VertexId> _map;
    };

    auto is_embedding(const Structure & dom, const Structure & cod, const Embedding & e) -> bool;
    auto is_automorphism(const Structure & s, const Embedding & e) -> bool;

    /// nullopt when every class invariant holds, otherwise a description of
    /// the first violated invariant with a witness.
    auto validate(const Structure & s) -> std::optional<std::string>;

    auto induced(const Structure & s, const VertexSet & subset) -> Structure;

    /// Renames vertex ids through the (injective) map; unmapped ids are kept.
    auto relabel(const Structure & s, const Embedding & e) -> Structure;

    /// Substructure generated by the subset: the subset itself for relational
    /// classes, the closure under the f_k path functions for n-gon fragments.
    auto generated(const Structure & s, const VertexSet & subset) -> VertexSet;

    auto indices_of(const Structure & s, const VertexSet & subset) -> std::vector<int>;
}

#endif
