/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef FRAISSE_GUARD_FRAISSE_AXIOMS_HH
#define FRAISSE_GUARD_FRAISSE_AXIOMS_HH 1

#include <fraisse/katetov.hh>
#include <fraisse/sir.hh>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fraisse
{
    struct AxiomTally
    {
        std::size_t tested = 0;
        /// trials in which the axiom's premise held
        std::size_t exercised = 0;
        std::size_t violations = 0;
        /// witness search ran out of room in the finite approximant
        std::size_t unwitnessed = 0;
        std::vector<std::string> examples;
    };

    struct AxiomReport
    {
        SirKind kind;
        Variant variant = Variant::faithful;
        int trials = 0;
        std::uint64_t seed = 0;
        int ambient_size = 0;
        bool ambient_truncated = false;
        /// SIR1 .. SIR6
        std::array<AxiomTally, 6> axioms;

        auto total_violations() const -> std::size_t;
    };

    /// Samples small configurations inside a saturated approximant and tests
    /// the six axioms on each. Trial t draws from its own generator seeded
    /// by (seed, t).
    auto check_axioms(const SaturationRecipe & recipe, int trials, std::uint64_t seed,
        Variant variant = Variant::faithful) -> AxiomReport;

    /// As above, on a given ambient structure.
    auto check_axioms_in(const SirKind & kind, const Structure & ambient, int trials, std::uint64_t seed,
        Variant variant = Variant::faithful, const SearchConfig & config = {}) -> AxiomReport;
}

#endif
