#include "reslat/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <chrono>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "canon.hpp"
#include "reslat/filters.hpp"
#include "reslat/io.hpp"

namespace reslat {

namespace {

// ---- join-semilattice generation (internal indexing: element 0 is top) ----

struct Semilattice {
    int m = 0;
    std::vector<ElemSet> up; // up[x] includes x
};

// Valid strict-upset choices for one new minimal element: nonempty, upward
// closed, and every element outside U has a least upper bound inside U.
std::vector<ElemSet> extension_upsets(const Semilattice &s)
{
    std::vector<ElemSet> out;
    const int m = s.m;
    for (ElemSet u = 1; u < (ElemSet{1} << m); ++u) {
        bool ok = true;
        for (ElemSet p = u; p && ok; p &= p - 1) {
            Elem x = std::countr_zero(p);
            if (s.up[x] & ~u)
                ok = false; // not upward closed
        }
        for (Elem x = 0; x < m && ok; ++x) {
            if (set_contains(u, x))
                continue;
            ElemSet above = s.up[x] & u;
            bool has_min = false;
            for (ElemSet p = above; p; p &= p - 1) {
                Elem z = std::countr_zero(p);
                if ((above & ~s.up[z]) == 0) {
                    has_min = true;
                    break;
                }
            }
            if (!has_min)
                ok = false;
        }
        if (ok)
            out.push_back(u);
    }
    return out;
}

std::string semilattice_key(const Semilattice &s)
{
    auto winners = detail::canon_order(s.m, s.up, {0});
    assert(!winners.empty());
    const auto &g = winners.front(); // position order directly
    std::vector<std::uint8_t> bits(static_cast<size_t>(s.m) * s.m);
    for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.m; ++j)
            bits[static_cast<size_t>(i) * s.m + j] =
                set_contains(s.up[g[i]], g[j]) ? 1 : 0;
    std::string key;
    key.push_back(static_cast<char>(s.m));
    detail::append_packed_bits(key, bits);
    return key;
}

// All join-semilattices with m elements, one per isomorphism class.
std::vector<Semilattice> semilattices(int m)
{
    std::vector<Semilattice> level{{1, {ElemSet{1}}}};
    for (int cur = 1; cur < m; ++cur) {
        std::map<std::string, Semilattice> next;
        for (const auto &s : level) {
            for (ElemSet u : extension_upsets(s)) {
                Semilattice t;
                t.m = cur + 1;
                t.up = s.up;
                t.up.push_back(u | (ElemSet{1} << cur));
                next.emplace(semilattice_key(t), std::move(t));
            }
        }
        level.clear();
        for (auto &kv : next)
            level.push_back(std::move(kv.second));
    }
    return level;
}

void fill_meet_join(LatticeSkeleton &sk)
{
    const int n = sk.n;
    std::vector<ElemSet> down(n, 0);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (set_contains(sk.up[x], y))
                down[y] |= ElemSet{1} << x;
    sk.meet.assign(static_cast<size_t>(n) * n, 0);
    sk.join.assign(static_cast<size_t>(n) * n, 0);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            ElemSet ub = sk.up[x] & sk.up[y];
            Elem least = -1;
            for (ElemSet p = ub; p; p &= p - 1) {
                Elem z = std::countr_zero(p);
                if ((ub & ~sk.up[z]) == 0) {
                    least = z;
                    break;
                }
            }
            ElemSet lb = down[x] & down[y];
            Elem greatest = -1;
            for (ElemSet p = lb; p; p &= p - 1) {
                Elem z = std::countr_zero(p);
                if ((lb & ~down[z]) == 0) {
                    greatest = z;
                    break;
                }
            }
            if (least < 0 || greatest < 0)
                throw std::logic_error("skeleton is not a lattice");
            sk.join[static_cast<size_t>(x) * n + y] = static_cast<std::uint8_t>(least);
            sk.meet[static_cast<size_t>(x) * n + y] = static_cast<std::uint8_t>(greatest);
        }
}

} // namespace

std::vector<LatticeSkeleton> enumerate_skeletons(int n)
{
    if (n < 1 || n > max_algebra_size)
        throw std::invalid_argument("skeleton size out of range");

    std::vector<LatticeSkeleton> out;
    if (n == 1) {
        LatticeSkeleton sk;
        sk.n = 1;
        sk.up = {ElemSet{1}};
        sk.canonical_key = detail::leq_canonical_key(1, sk.up);
        sk.automorphisms = {{0}};
        fill_meet_join(sk);
        out.push_back(std::move(sk));
        return out;
    }

    for (const auto &s : semilattices(n - 1)) {
        // internal index i (0 = top) -> spec index n-1-i; new bottom = 0
        LatticeSkeleton sk;
        sk.n = n;
        sk.up.assign(n, 0);
        sk.up[0] = (ElemSet{1} << n) - 1;
        for (int i = 0; i < s.m; ++i)
            for (int j = 0; j < s.m; ++j)
                if (set_contains(s.up[i], j))
                    sk.up[n - 1 - i] |= ElemSet{1} << (n - 1 - j);

        // relabel to the canonical representative so keys line up everywhere
        auto winners = detail::canon_order(n, sk.up, {0, n - 1});
        auto g = detail::placement_to_spec_order(winners.front());
        std::vector<ElemSet> canon_up(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (set_contains(sk.up[g[i]], g[j]))
                    canon_up[i] |= ElemSet{1} << j;
        sk.up = std::move(canon_up);
        sk.canonical_key = detail::leq_canonical_key(n, sk.up);
        sk.automorphisms = detail::relation_automorphisms(n, sk.up);
        fill_meet_join(sk);
        out.push_back(std::move(sk));
    }
    std::sort(out.begin(), out.end(), [](const LatticeSkeleton &a, const LatticeSkeleton &b) {
        return a.canonical_key < b.canonical_key;
    });
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i].canonical_key == out[i - 1].canonical_key)
            throw std::logic_error("duplicate skeleton escaped canonical rejection");
    return out;
}

namespace {

// Backtracking completion of the multiplication table. All pruning rules are
// necessary conditions, and every leaf goes through full validation, so the
// emitted set is exactly the set of residuated multiplications.
struct CompletionSearch {
    const LatticeSkeleton &sk;
    const std::function<void(const ResiduatedLattice &)> &sink;
    const std::atomic<bool> *abort;

    int n;
    std::vector<std::int8_t> mult;
    std::vector<std::pair<Elem, Elem>> cells;
    std::vector<ElemSet> down;
    std::vector<std::uint8_t> leq_bytes;
    long node_budget_check = 0;
    long found = 0;

    CompletionSearch(const LatticeSkeleton &s,
                     const std::function<void(const ResiduatedLattice &)> &f,
                     const std::atomic<bool> *a)
        : sk(s), sink(f), abort(a), n(s.n)
    {
        mult.assign(static_cast<size_t>(n) * n, -1);
        down.assign(n, 0);
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                if (sk.leq(x, y))
                    down[y] |= ElemSet{1} << x;
        leq_bytes.assign(static_cast<size_t>(n) * n, 0);
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                leq_bytes[static_cast<size_t>(x) * n + y] = sk.leq(x, y) ? 1 : 0;

        const Elem top = n - 1;
        for (Elem x = 0; x < n; ++x) {
            set(x, top, x);
            set(x, 0, 0);
        }
        for (Elem x = 1; x < n - 1; ++x)
            for (Elem y = x; y < n - 1; ++y)
                cells.emplace_back(x, y);
        // fill cells with small meets first so the integrality bound bites early
        std::sort(cells.begin(), cells.end(), [&](const auto &a_, const auto &b_) {
            int da = std::popcount(down[meet(a_.first, a_.second)]);
            int db = std::popcount(down[meet(b_.first, b_.second)]);
            if (da != db)
                return da < db;
            return a_ < b_;
        });
    }

    Elem meet(Elem x, Elem y) const { return sk.meet[static_cast<size_t>(x) * n + y]; }
    Elem join(Elem x, Elem y) const { return sk.join[static_cast<size_t>(x) * n + y]; }
    Elem get(Elem x, Elem y) const { return mult[static_cast<size_t>(x) * n + y]; }
    void set(Elem x, Elem y, Elem v)
    {
        mult[static_cast<size_t>(x) * n + y] = static_cast<std::int8_t>(v);
        mult[static_cast<size_t>(y) * n + x] = static_cast<std::int8_t>(v);
    }
    void clear(Elem x, Elem y)
    {
        mult[static_cast<size_t>(x) * n + y] = -1;
        mult[static_cast<size_t>(y) * n + x] = -1;
    }

    bool monotone_ok(Elem x, Elem y, Elem v) const
    {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                Elem w = get(a, b);
                if (w < 0)
                    continue;
                if (sk.leq(a, x) && sk.leq(b, y) && !sk.leq(w, v))
                    return false;
                if (sk.leq(x, a) && sk.leq(y, b) && !sk.leq(v, w))
                    return false;
            }
        return true;
    }

    bool assoc_ok(Elem x, Elem y) const
    {
        for (Elem z = 0; z < n; ++z) {
            static constexpr int patterns = 3;
            for (int p = 0; p < patterns; ++p) {
                Elem a = p == 1 ? z : x;
                Elem b = p == 0 ? y : (p == 1 ? x : z);
                Elem c = p == 0 ? z : y;
                Elem ab = get(a, b);
                Elem bc = get(b, c);
                if (ab < 0 || bc < 0)
                    continue;
                Elem l = get(ab, c);
                Elem r = get(a, bc);
                if (l < 0 || r < 0)
                    continue;
                if (l != r)
                    return false;
            }
        }
        return true;
    }

    bool distributive_ok(Elem r) const
    {
        for (Elem a = 0; a < n; ++a) {
            Elem ra = get(r, a);
            if (ra < 0)
                continue;
            for (Elem b = a + 1; b < n; ++b) {
                Elem rb = get(r, b);
                if (rb < 0)
                    continue;
                Elem rc = get(r, join(a, b));
                if (rc < 0)
                    continue;
                if (join(ra, rb) != rc)
                    return false;
            }
        }
        return true;
    }

    bool row_residuals_ok(Elem x) const
    {
        for (Elem y = 0; y < n; ++y) {
            Elem t = 0;
            for (Elem a = 0; a < n; ++a)
                if (sk.leq(get(x, a), y))
                    t = join(t, a);
            if (!sk.leq(get(x, t), y))
                return false;
        }
        return true;
    }

    bool row_complete(Elem x) const
    {
        for (Elem a = 0; a < n; ++a)
            if (get(x, a) < 0)
                return false;
        return true;
    }

    bool aborted()
    {
        if (!abort)
            return false;
        if ((++node_budget_check & 1023) == 0 && abort->load(std::memory_order_relaxed))
            return true;
        return false;
    }

    void emit()
    {
        std::vector<std::uint8_t> table(mult.begin(), mult.end());
        // keep only the orbit-minimal table under the skeleton automorphisms
        std::vector<Elem> inv(n);
        for (const auto &perm : sk.automorphisms) {
            for (Elem i = 0; i < n; ++i)
                inv[perm[i]] = i;
            bool smaller = false;
            for (Elem x = 0; x < n; ++x) {
                for (Elem y = 0; y < n; ++y) {
                    std::uint8_t image = static_cast<std::uint8_t>(
                        perm[table[static_cast<size_t>(inv[x]) * n + inv[y]]]);
                    std::uint8_t own = table[static_cast<size_t>(x) * n + y];
                    if (image != own) {
                        smaller = image < own;
                        x = n; // decided
                        break;
                    }
                }
            }
            if (smaller)
                return;
        }
        auto result = build_flat(n, leq_bytes, table);
        if (!result)
            return; // pruning is necessary-only; validation is the arbiter
        ++found;
        sink(*result.algebra);
    }

    void dfs(size_t k)
    {
        if (aborted())
            return;
        if (k == cells.size()) {
            emit();
            return;
        }
        auto [x, y] = cells[k];
        for (ElemSet cand = down[meet(x, y)]; cand; cand &= cand - 1) {
            Elem v = std::countr_zero(cand);
            if (!monotone_ok(x, y, v))
                continue;
            set(x, y, v);
            bool ok = assoc_ok(x, y) && distributive_ok(x) && distributive_ok(y);
            if (ok) {
                if (row_complete(x) && !row_residuals_ok(x))
                    ok = false;
                if (ok && x != y && row_complete(y) && !row_residuals_ok(y))
                    ok = false;
            }
            if (ok)
                dfs(k + 1);
            clear(x, y);
        }
    }
};

} // namespace

void complete_to_residuated(const LatticeSkeleton &sk,
                            const std::function<void(const ResiduatedLattice &)> &sink)
{
    CompletionSearch search(sk, sink, nullptr);
    search.dfs(0);
}

namespace {

void complete_with_abort(const LatticeSkeleton &sk,
                         const std::function<void(const ResiduatedLattice &)> &sink,
                         const std::atomic<bool> *abort, long &found)
{
    CompletionSearch search(sk, sink, abort);
    search.dfs(0);
    found = search.found;
}

} // namespace

const char *class_name(AlgebraClass c)
{
    switch (c) {
    case AlgebraClass::all: return "all";
    case AlgebraClass::mtl: return "mtl";
    case AlgebraClass::bl: return "bl";
    case AlgebraClass::heyting: return "heyting";
    case AlgebraClass::godel: return "godel";
    case AlgebraClass::mv: return "mv";
    case AlgebraClass::non_prelinear: return "non-prelinear";
    }
    return "?";
}

std::optional<AlgebraClass> class_from_name(const std::string &name)
{
    for (AlgebraClass c : {AlgebraClass::all, AlgebraClass::mtl, AlgebraClass::bl,
                           AlgebraClass::heyting, AlgebraClass::godel, AlgebraClass::mv,
                           AlgebraClass::non_prelinear})
        if (name == class_name(c))
            return c;
    return std::nullopt;
}

bool in_class(const ClassFlags &flags, AlgebraClass c)
{
    switch (c) {
    case AlgebraClass::all: return true;
    case AlgebraClass::mtl: return flags.mtl;
    case AlgebraClass::bl: return flags.bl;
    case AlgebraClass::heyting: return flags.heyting;
    case AlgebraClass::godel: return flags.godel;
    case AlgebraClass::mv: return flags.mv;
    case AlgebraClass::non_prelinear: return !flags.prelinear;
    }
    return false;
}

CatalogRecord make_catalog_record(const ResiduatedLattice &a)
{
    CatalogRecord rec;
    rec.size = a.size();
    rec.canonical_key = canonical_form(a);
    rec.flags = classify(a);

    FilterLattice fl = all_filters(a);
    rec.filter_count = static_cast<int>(fl.all.size());
    rec.max_filter_count = static_cast<int>(fl.maximal_indices.size());
    rec.radical_size = fl.radical().cardinality();

    LabeledGraph g = comaximal_filter_graph(a, fl);
    GraphInvariants inv = invariants(g, a, fl);
    rec.graph_vertices = inv.vertex_count;
    rec.graph_edges = inv.edge_count;
    rec.graph_diameter = inv.diameter;
    rec.graph_girth = inv.girth;
    rec.graph_omega = inv.clique_number;
    rec.graph_chi = inv.chromatic_number;
    rec.graph_planar = inv.planar;
    rec.graph_key = canonical_graph_form(g);
    return rec;
}

SizeCensus enumerate_size(int n, const EnumerateOptions &opt)
{
    auto deadline = std::chrono::steady_clock::time_point::max();
    if (opt.budget_seconds > 0)
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(opt.budget_seconds));

    SizeCensus census;
    census.size = n;

    auto skeletons = enumerate_skeletons(n);

    std::atomic<bool> abort{false};
    std::atomic<size_t> next{0};
    std::mutex sink_mutex;
    std::vector<CatalogRecord> records;

    int jobs = std::max(1, opt.jobs);
    auto worker = [&]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= skeletons.size())
                return;
            if (std::chrono::steady_clock::now() > deadline) {
                abort.store(true);
                return;
            }
            std::vector<CatalogRecord> local;
            long found = 0;
            complete_with_abort(
                skeletons[idx],
                [&](const ResiduatedLattice &a) { local.push_back(make_catalog_record(a)); },
                &abort, found);
            if (abort.load())
                return;
            std::lock_guard<std::mutex> lock(sink_mutex);
            for (auto &rec : local)
                records.push_back(std::move(rec));
            if (opt.progress)
                std::cerr << n << "/" << idx << "/" << found << "\n";
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }

    if (abort.load()) {
        census.skipped = true;
        return census;
    }

    std::sort(records.begin(), records.end(),
              [](const CatalogRecord &a, const CatalogRecord &b) {
                  return a.canonical_key < b.canonical_key;
              });
    for (size_t i = 1; i < records.size(); ++i)
        if (records[i].canonical_key == records[i - 1].canonical_key)
            throw std::logic_error("duplicate canonical key in census");
    census.records = std::move(records);
    return census;
}

CensusRow tabulate(const SizeCensus &census)
{
    CensusRow row;
    row.size = census.size;
    row.skipped = census.skipped;
    static const AlgebraClass classes[] = {
        AlgebraClass::all, AlgebraClass::mtl, AlgebraClass::bl, AlgebraClass::heyting,
        AlgebraClass::godel, AlgebraClass::mv, AlgebraClass::non_prelinear};
    for (AlgebraClass c : classes) {
        row.counts[c] = 0;
        row.nonnull[c] = 0;
    }
    for (const auto &rec : census.records)
        for (AlgebraClass c : classes) {
            if (!in_class(rec.flags, c))
                continue;
            ++row.counts[c];
            if (rec.graph_vertices > 0) {
                ++row.nonnull[c];
                ++row.shapes[c][rec.graph_key];
            }
        }
    return row;
}

std::map<std::string, long> shape_census(const SizeCensus &census, AlgebraClass c)
{
    std::map<std::string, long> shapes;
    for (const auto &rec : census.records)
        if (in_class(rec.flags, c) && rec.graph_vertices > 0)
            ++shapes[rec.graph_key];
    return shapes;
}

CensusResult census(int n_max, const EnumerateOptions &opt)
{
    CensusResult result;
    auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= n_max; ++n) {
        EnumerateOptions size_opt = opt;
        if (opt.budget_seconds > 0) {
            double elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            double remaining = opt.budget_seconds - elapsed;
            if (remaining <= 0) {
                SizeCensus skipped;
                skipped.size = n;
                skipped.skipped = true;
                result.rows.push_back(tabulate(skipped));
                result.sizes.push_back(std::move(skipped));
                result.budget_exceeded = true;
                continue;
            }
            size_opt.budget_seconds = remaining;
        }
        SizeCensus sc = enumerate_size(n, size_opt);
        if (sc.skipped)
            result.budget_exceeded = true;
        result.rows.push_back(tabulate(sc));
        result.sizes.push_back(std::move(sc));
    }
    return result;
}

} // namespace reslat
