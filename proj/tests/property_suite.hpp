#pragma once

// Per-algebra structural property checks shared by the unit property tests
// (small sizes) and the acceptance suite (full range). Each check mirrors a
// stated law of the filter lattice / comaximal graph theory; a violation is
// reported as a human-readable string.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "reslat/enumerate.hpp"
#include "reslat/filters.hpp"
#include "reslat/graph.hpp"

namespace testutil {

inline void check_algebra_properties(const reslat::ResiduatedLattice &a,
                                     std::vector<std::string> &violations)
{
    using namespace reslat;
    const int n = a.size();
    auto fail = [&](const std::string &what) {
        violations.push_back("n=" + std::to_string(n) + ": " + what);
    };

    // adjunction corollaries and implication freshness
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (!a.leq(a.mult(x, a.impl(x, y)), y))
                fail("mult(x, impl(x,y)) <= y fails");
            if (!a.leq(x, a.impl(y, a.mult(x, y))))
                fail("x <= impl(y, mult(x,y)) fails");
        }

    ClassFlags flags = classify(a);
    if (flags.godel && !flags.heyting)
        fail("godel without heyting");
    if (flags.mv && !flags.involutive)
        fail("mv without involutive");

    FilterLattice fl = all_filters(a);

    // both filter characterizations agree on every member of the lattice
    for (const Filter &f : fl.all) {
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                if (f.contains(x) && f.contains(y) && !f.contains(a.mult(x, y)))
                    fail("filter not mult-closed");
                if (f.contains(x) && a.leq(x, y) && !f.contains(y))
                    fail("filter not upward closed");
                if (f.contains(x) && f.contains(a.impl(x, y)) && !f.contains(y))
                    fail("filter not a deductive system");
            }
        if (generated_filter(a, f.members).members != f.members)
            fail("generated_filter not a fixpoint on a filter");
        Elem g = idempotent_generator(a, f);
        if (!a.idempotent(g) ||
            generated_filter(a, ElemSet{1} << g).members != f.members)
            fail("idempotent generator does not generate its filter");
    }

    // join laws on the filter lattice
    for (const Filter &f : fl.all)
        for (const Filter &g : fl.all) {
            Filter j = filter_join(a, f, g);
            if (j.members != filter_join(a, g, f).members)
                fail("filter_join not commutative");
            if ((j.members & (f.members | g.members)) != (f.members | g.members))
                fail("filter_join not above union");
            if (j.members != generated_filter(a, f.members | g.members).members)
                fail("filter_join differs from generated filter of the union");
            if (f.subset_of(g) && j.members != g.members)
                fail("filter_join absorption fails");
            for (const Filter &h : fl.all) {
                if (filter_join(a, j, h).members !=
                    filter_join(a, f, filter_join(a, g, h)).members)
                    fail("filter_join not associative");
                if (f.subset_of(g) &&
                    !filter_join(a, f, h).subset_of(filter_join(a, g, h)))
                    fail("filter_join not monotone");
            }
        }

    // radical below every maximal; locality count
    const Filter &rad = fl.radical();
    for (int mi : fl.maximal_indices)
        if (!rad.subset_of(fl.all[mi]))
            fail("radical not contained in a maximal filter");
    if (is_local(a) != (fl.maximal_indices.size() == 1))
        fail("is_local disagrees with |Max|");

    // distinct maximal filters are comaximal; Prop 3.5 both routes agree
    for (size_t i = 0; i < fl.maximal_indices.size(); ++i)
        for (size_t j = i + 1; j < fl.maximal_indices.size(); ++j)
            if (!is_comaximal(a, fl.all[fl.maximal_indices[i]], fl.all[fl.maximal_indices[j]]))
                fail("distinct maximal filters not comaximal");
    for (const Filter &f : fl.all)
        for (const Filter &g : fl.all) {
            if (!f.proper() || !g.proper())
                continue;
            bool witness = comaximal_witness(a, f, g).has_value();
            bool join_route = filter_join(a, f, g).members == a.universe();
            if (witness != join_route)
                fail("comaximality witness and join routes disagree");
        }

    // prime avoidance for families of at most four primes
    {
        std::vector<Filter> primes = prime_filters(a);
        const size_t p = primes.size();
        std::vector<int> idx;
        auto check_family = [&]() {
            ElemSet covered = 0;
            for (int i : idx)
                covered |= primes[i].members;
            for (const Filter &f : fl.all) {
                if ((f.members & ~covered) != 0)
                    continue;
                bool inside = false;
                for (int i : idx)
                    if (f.subset_of(primes[i]))
                        inside = true;
                if (!inside)
                    fail("prime avoidance fails");
            }
        };
        auto rec = [&](auto &&self, size_t start) -> void {
            if (!idx.empty() && idx.size() <= 4)
                check_family();
            if (idx.size() == 4)
                return;
            for (size_t i = start; i < p; ++i) {
                idx.push_back(static_cast<int>(i));
                self(self, i + 1);
                idx.pop_back();
            }
        };
        rec(rec, 0);
    }

    // graph laws
    LabeledGraph g = comaximal_filter_graph(a, fl);
    GraphInvariants inv = invariants(g, a, fl);

    if (n >= 2 && (g.n == 0) != is_local(a))
        fail("null graph iff local fails");
    if (g.n > static_cast<int>(fl.all.size()) - 2)
        fail("vertex bound |V| <= |F(A)|-2 fails");
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < 1)
            fail("isolated vertex in comaximal graph");
    if (g.n > 0) {
        if (!inv.connected)
            fail("non-null comaximal graph disconnected");
        if (!inv.diameter || *inv.diameter > 3)
            fail("diameter above three");
        size_t maxcount = fl.maximal_indices.size();
        if (maxcount == 2 && inv.girth && *inv.girth != 4)
            fail("girth not in {4, inf} with two maximal filters");
        if (maxcount >= 2 && inv.chromatic_number != static_cast<int>(maxcount))
            fail("chromatic number differs from |Max|");
        if (maxcount >= 2 && inv.clique_number != static_cast<int>(maxcount))
            fail("clique number differs from |Max|");
        if (maxcount >= 3) {
            if (!inv.girth || *inv.girth != 3)
                fail("girth not three with >= 3 maximal filters");
            // the maximal filters themselves induce a clique
            for (size_t i = 0; i < maxcount; ++i)
                for (size_t j = i + 1; j < maxcount; ++j) {
                    int vi = -1, vj = -1;
                    for (int v = 0; v < g.n; ++v) {
                        if (g.vertex_filters[v].members == fl.all[fl.maximal_indices[i]].members)
                            vi = v;
                        if (g.vertex_filters[v].members == fl.all[fl.maximal_indices[j]].members)
                            vj = v;
                    }
                    if (vi < 0 || vj < 0 || !g.adjacent(vi, vj))
                        fail("maximal filters do not induce a clique");
                }
        }
        if (!inv.planar)
            fail("comaximal graph not planar");
        // the maximal partition is a proper coloring with |Max| classes
        auto classes = maximal_partition(fl, g);
        if (classes.size() != maxcount)
            fail("partition class count differs from |Max|");
        std::set<int> seen;
        for (const auto &cls : classes) {
            if (cls.empty())
                fail("empty partition class on a non-null graph");
            for (int v : cls) {
                if (!seen.insert(v).second)
                    fail("partition classes overlap");
                for (int w : cls)
                    if (v != w && g.adjacent(v, w))
                        fail("edge inside a partition class");
            }
        }
        if (static_cast<int>(seen.size()) != g.n)
            fail("partition classes do not cover the vertices");

        // the idempotent-generator map embeds C_f into the zero-divisor graph
        LabeledGraph zd = zero_divisor_graph(a, true);
        std::vector<int> zd_index(n, -1);
        for (int v = 0; v < zd.n; ++v)
            zd_index[zd.vertex_elements[v]] = v;
        for (int u = 0; u < g.n; ++u) {
            Elem gu = idempotent_generator(a, g.vertex_filters[u]);
            if (zd_index[gu] < 0) {
                fail("generator of a vertex filter is not a zero divisor");
                continue;
            }
            for (int v = u + 1; v < g.n; ++v) {
                Elem gv = idempotent_generator(a, g.vertex_filters[v]);
                if (g.adjacent(u, v) &&
                    (zd_index[gv] < 0 || !zd.adjacent(zd_index[gu], zd_index[gv])))
                    fail("generator map does not carry an edge into the zero-divisor graph");
            }
        }
        if (!embeds_as_subgraph(g, zero_divisor_graph(a, false)))
            fail("comaximal graph does not embed into the nonzero zero-divisor graph");

        LabeledGraph zd_nonzero = zero_divisor_graph(a, false);
        if (zd_nonzero.n == g.n && !graph_isomorphic(g, zd_nonzero))
            fail("equal-sized comaximal and nonzero zero-divisor graphs not isomorphic");
    }

    // the stored implication is exactly the derived residual
    {
        Matrix leq(n, std::vector<int>(n)), mult(n, std::vector<int>(n));
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                leq[x][y] = a.leq(x, y) ? 1 : 0;
                mult[x][y] = a.mult(x, y);
            }
        auto derived = derive_implication(leq, mult);
        if (!derived.impl)
            fail("derive_implication fails on a valid algebra");
        else
            for (Elem x = 0; x < n; ++x)
                for (Elem y = 0; y < n; ++y)
                    if ((*derived.impl)[x][y] != a.impl(x, y))
                        fail("stored implication differs from derived residual");
    }
}

} // namespace testutil
