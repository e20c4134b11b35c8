#include "reslat/filters.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <set>

namespace reslat {

int Filter::cardinality() const { return std::popcount(members); }

bool Filter::proper() const
{
    return members != (ElemSet{1} << algebra_size) - 1;
}

bool filter_less(const Filter &a, const Filter &b)
{
    int ca = a.cardinality(), cb = b.cardinality();
    if (ca != cb)
        return ca < cb;
    if (a.members == b.members)
        return false;
    // first differing element decides: it belongs to the smaller filter
    ElemSet d = a.members ^ b.members;
    Elem low = std::countr_zero(d);
    return set_contains(a.members, low);
}

Filter generated_filter(const ResiduatedLattice &a, ElemSet xs)
{
    ElemSet s = xs | (ElemSet{1} << a.top());
    // close under products
    for (;;) {
        ElemSet next = s;
        for (ElemSet p = s; p; p &= p - 1) {
            Elem x = std::countr_zero(p);
            for (ElemSet q = s; q; q &= q - 1) {
                Elem y = std::countr_zero(q);
                next |= ElemSet{1} << a.mult(x, y);
            }
        }
        if (next == s)
            break;
        s = next;
    }
    // upward closure
    ElemSet up = 0;
    for (ElemSet p = s; p; p &= p - 1)
        up |= a.upset(std::countr_zero(p));
    return {up, a.size()};
}

Filter filter_join(const ResiduatedLattice &a, const Filter &f, const Filter &g)
{
    ElemSet result = 0;
    for (ElemSet p = f.members; p; p &= p - 1) {
        Elem x = std::countr_zero(p);
        for (ElemSet q = g.members; q; q &= q - 1)
            result |= a.upset(a.mult(x, std::countr_zero(q)));
    }
    return {result, a.size()};
}

FilterLattice all_filters(const ResiduatedLattice &a)
{
    const int n = a.size();
    std::set<ElemSet> masks;
    for (Elem x = 0; x < n; ++x)
        if (a.idempotent(x))
            masks.insert(a.upset(x)); // <x> for idempotent x is its upset

    // close under intersection and join (a fixpoint guard; the idempotent
    // generators already cover every filter in the finite case)
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<ElemSet> cur(masks.begin(), masks.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                if (masks.insert(cur[i] & cur[j]).second)
                    changed = true;
                Filter fj = filter_join(a, {cur[i], n}, {cur[j], n});
                if (masks.insert(fj.members).second)
                    changed = true;
            }
    }

    FilterLattice fl;
    for (ElemSet m : masks)
        fl.all.push_back({m, n});
    std::sort(fl.all.begin(), fl.all.end(), filter_less);

    for (int i = 0; i < static_cast<int>(fl.all.size()); ++i) {
        if (!fl.all[i].proper())
            continue;
        bool maximal = true;
        for (const auto &g : fl.all)
            if (g.proper() && fl.all[i].members != g.members && fl.all[i].subset_of(g)) {
                maximal = false;
                break;
            }
        if (maximal)
            fl.maximal_indices.push_back(i);
    }

    ElemSet rad = a.universe();
    for (int i : fl.maximal_indices)
        rad &= fl.all[i].members;
    for (int i = 0; i < static_cast<int>(fl.all.size()); ++i)
        if (fl.all[i].members == rad)
            fl.radical_index = i;
    assert(fl.radical_index >= 0);

    for (int i = 0; i < static_cast<int>(fl.all.size()); ++i) {
        const Filter &p = fl.all[i];
        if (!p.proper())
            continue;
        bool prime = true;
        for (Elem x = 0; x < n && prime; ++x)
            for (Elem y = 0; y < n && prime; ++y)
                if (p.contains(a.join(x, y)) && !p.contains(x) && !p.contains(y))
                    prime = false;
        if (prime)
            fl.prime_indices.push_back(i);
    }
    return fl;
}

std::vector<Filter> maximal_filters(const ResiduatedLattice &a)
{
    FilterLattice fl = all_filters(a);
    std::vector<Filter> out;
    for (int i : fl.maximal_indices)
        out.push_back(fl.all[i]);
    return out;
}

Filter radical(const ResiduatedLattice &a)
{
    FilterLattice fl = all_filters(a);
    return fl.all[fl.radical_index];
}

bool is_local(const ResiduatedLattice &a)
{
    return all_filters(a).maximal_indices.size() == 1;
}

std::optional<ComaximalWitness> comaximal_witness(const ResiduatedLattice &a,
                                                  const Filter &f, const Filter &g)
{
    for (ElemSet p = f.members; p; p &= p - 1) {
        Elem x = std::countr_zero(p);
        for (ElemSet q = g.members; q; q &= q - 1) {
            Elem y = std::countr_zero(q);
            if (a.mult(x, y) == 0)
                return ComaximalWitness{x, y};
        }
    }
    return std::nullopt;
}

bool is_comaximal(const ResiduatedLattice &a, const Filter &f, const Filter &g)
{
    bool witness_route = comaximal_witness(a, f, g).has_value();
#ifndef NDEBUG
    bool join_route = filter_join(a, f, g).members == a.universe();
    assert(witness_route == join_route);
#endif
    return witness_route;
}

Elem idempotent_generator(const ResiduatedLattice &a, const Filter &f)
{
    Elem prod = a.top();
    for (ElemSet p = f.members; p; p &= p - 1)
        prod = a.mult(prod, std::countr_zero(p));
    assert(a.idempotent(prod));
    assert(generated_filter(a, ElemSet{1} << prod).members == f.members);
    return prod;
}

std::vector<Filter> prime_filters(const ResiduatedLattice &a)
{
    FilterLattice fl = all_filters(a);
    std::vector<Filter> out;
    for (int i : fl.prime_indices)
        out.push_back(fl.all[i]);
    return out;
}

} // namespace reslat
