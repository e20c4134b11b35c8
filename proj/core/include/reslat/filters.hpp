#pragma once

#include <optional>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

// Upward-closed, mult-closed subset; always contains top. Stored as a mask.
struct Filter {
    ElemSet members = 0;
    int algebra_size = 0;

    int cardinality() const;
    bool contains(Elem x) const { return set_contains(members, x); }
    bool proper() const;
    bool subset_of(const Filter &other) const
    {
        return (members & ~other.members) == 0;
    }
    std::vector<Elem> elements() const { return set_elements(members); }

    bool operator==(const Filter &) const = default;
};

// Canonical order: cardinality ascending, then member list lexicographic.
bool filter_less(const Filter &a, const Filter &b);

struct FilterLattice {
    std::vector<Filter> all;          // canonical order, {top} first, A last
    std::vector<int> maximal_indices; // indices into all
    int radical_index = -1;
    std::vector<int> prime_indices;

    const Filter &radical() const { return all[radical_index]; }
};

// Smallest filter containing xs: upward closure of finite mult-products.
// Empty xs yields {top}.
Filter generated_filter(const ResiduatedLattice &a, ElemSet xs);

// {z : z >= mult(x,y) for some x in f, y in g} = generated_filter(f | g).
Filter filter_join(const ResiduatedLattice &a, const Filter &f, const Filter &g);

// Every filter exactly once: <x> for each idempotent x, closed under
// intersection and join, sorted canonically.
FilterLattice all_filters(const ResiduatedLattice &a);

std::vector<Filter> maximal_filters(const ResiduatedLattice &a);

Filter radical(const ResiduatedLattice &a);

bool is_local(const ResiduatedLattice &a);

struct ComaximalWitness {
    Elem x, y; // x in f, y in g, mult(x,y) == 0
};

// Witness route; returns the lexicographically first zero pair.
std::optional<ComaximalWitness> comaximal_witness(const ResiduatedLattice &a,
                                                  const Filter &f,
                                                  const Filter &g);

// True iff filter_join(f,g) = A. Release builds use the witness route; debug
// builds also run the join route and assert agreement.
bool is_comaximal(const ResiduatedLattice &a, const Filter &f, const Filter &g);

// The product of all members of f: an idempotent e with <e> = f.
Elem idempotent_generator(const ResiduatedLattice &a, const Filter &f);

// Proper filters p with: join(x,y) in p implies x in p or y in p.
std::vector<Filter> prime_filters(const ResiduatedLattice &a);

} // namespace reslat
