#include "reslat/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>

#include "canon.hpp"

namespace reslat {

LabeledGraph LabeledGraph::empty(int vertices)
{
    LabeledGraph g;
    g.n = vertices;
    g.adj.assign(vertices, 0);
    g.labels.assign(vertices, "");
    return g;
}

void LabeledGraph::add_edge(int u, int v)
{
    assert(u != v);
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
}

int LabeledGraph::degree(int v) const { return std::popcount(adj[v]); }

int LabeledGraph::edge_count() const
{
    int total = 0;
    for (int v = 0; v < n; ++v)
        total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

namespace {

std::string filter_label(const ResiduatedLattice &a, const Filter &f)
{
    std::ostringstream os;
    os << "<" << a.name(idempotent_generator(a, f)) << "> {";
    bool first = true;
    for (Elem e : f.elements()) {
        if (!first)
            os << ",";
        first = false;
        os << a.name(e);
    }
    os << "}";
    return os.str();
}

} // namespace

LabeledGraph comaximal_filter_graph(const ResiduatedLattice &a, const FilterLattice &fl)
{
    const Filter &rad = fl.radical();
    std::vector<Filter> verts;
    for (const Filter &f : fl.all)
        if (f.proper() && !f.subset_of(rad))
            verts.push_back(f);

    LabeledGraph g = LabeledGraph::empty(static_cast<int>(verts.size()));
    g.vertex_filters = verts;
    for (int i = 0; i < g.n; ++i)
        g.labels[i] = filter_label(a, verts[i]);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (is_comaximal(a, verts[i], verts[j]))
                g.add_edge(i, j);
    return g;
}

LabeledGraph comaximal_filter_graph(const ResiduatedLattice &a)
{
    return comaximal_filter_graph(a, all_filters(a));
}

LabeledGraph zero_divisor_graph(const ResiduatedLattice &a, bool include_zero)
{
    const int n = a.size();
    std::vector<Elem> verts;
    for (Elem x = 0; x < n; ++x) {
        bool divisor = false;
        for (Elem y = 0; y < n && !divisor; ++y)
            if (y != 0 && a.mult(x, y) == 0)
                divisor = true;
        if (divisor && (include_zero || x != 0))
            verts.push_back(x);
    }
    LabeledGraph g = LabeledGraph::empty(static_cast<int>(verts.size()));
    g.vertex_elements = verts;
    for (int i = 0; i < g.n; ++i)
        g.labels[i] = a.name(verts[i]);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (a.mult(verts[i], verts[j]) == 0)
                g.add_edge(i, j);
    return g;
}

namespace {

// single-source BFS distances, -1 when unreachable
std::vector<int> bfs_dist(const LabeledGraph &g, int src)
{
    std::vector<int> dist(g.n, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (std::uint64_t m = g.adj[u]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

// shortest cycle through any vertex; min over BFS roots is exact
std::optional<int> compute_girth(const LabeledGraph &g)
{
    int best = -1;
    for (int root = 0; root < g.n; ++root) {
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (std::uint64_t m = g.adj[u]; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best)
                        best = len;
                }
            }
        }
    }
    if (best < 0)
        return std::nullopt;
    return best;
}

int max_clique(const LabeledGraph &g)
{
    int best = 0;
    // Bron-Kerbosch with pivoting on bit masks
    auto rec = [&](auto &&self, std::uint64_t r_count, std::uint64_t p, std::uint64_t x) -> void {
        if (!p && !x) {
            best = std::max(best, static_cast<int>(r_count));
            return;
        }
        if (static_cast<int>(r_count) + std::popcount(p) <= best)
            return;
        std::uint64_t px = p | x;
        int pivot = std::countr_zero(px);
        int best_deg = -1;
        for (std::uint64_t m = px; m; m &= m - 1) {
            int u = std::countr_zero(m);
            int d = std::popcount(g.adj[u] & p);
            if (d > best_deg) {
                best_deg = d;
                pivot = u;
            }
        }
        std::uint64_t candidates = p & ~g.adj[pivot];
        for (std::uint64_t m = candidates; m; m &= m - 1) {
            int v = std::countr_zero(m);
            std::uint64_t bit = std::uint64_t{1} << v;
            self(self, r_count + 1, p & g.adj[v], x & g.adj[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    if (g.n > 0)
        rec(rec, 0, (g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1), 0);
    return best;
}

bool k_colorable(const LabeledGraph &g, int k, const std::vector<int> &order,
                 std::vector<int> &coloring)
{
    std::vector<int> color(g.n, -1);
    auto rec = [&](auto &&self, int idx, int used) -> bool {
        if (idx == g.n)
            return true;
        int v = order[idx];
        int limit = std::min(k, used + 1); // new colors introduced in order
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (std::uint64_t m = g.adj[v]; m && !clash; m &= m - 1)
                if (color[std::countr_zero(m)] == c)
                    clash = true;
            if (clash)
                continue;
            color[v] = c;
            if (self(self, idx + 1, std::max(used, c + 1)))
                return true;
            color[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0, 0))
        return false;
    coloring = color;
    return true;
}

int chromatic_number(const LabeledGraph &g, int clique_lower)
{
    if (g.n == 0)
        return 0;
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    // greedy upper bound
    std::vector<int> greedy(g.n, -1);
    int upper = 0;
    for (int v : order) {
        std::uint64_t taken = 0;
        for (std::uint64_t m = g.adj[v]; m; m &= m - 1) {
            int c = greedy[std::countr_zero(m)];
            if (c >= 0)
                taken |= std::uint64_t{1} << c;
        }
        int c = std::countr_zero(~taken);
        greedy[v] = c;
        upper = std::max(upper, c + 1);
    }
    for (int k = std::max(clique_lower, 1); k < upper; ++k) {
        std::vector<int> coloring;
        if (k_colorable(g, k, order, coloring))
            return k;
    }
    return upper;
}

// ---- planarity: Euler prescreen + Kuratowski subdivision search ----

struct SubdivisionSearch {
    const LabeledGraph &g;
    std::uint64_t branch_set = 0;
    std::vector<std::pair<int, int>> pairs;

    explicit SubdivisionSearch(const LabeledGraph &graph) : g(graph) {}

    // enumerate simple u--v paths with internal vertices avoiding `forbidden`,
    // calling sink with the internal vertex mask; stop early when sink says so
    bool paths(int u, int v, std::uint64_t forbidden, const auto &sink)
    {
        std::uint64_t internals = 0;
        auto rec = [&](auto &&self, int cur) -> bool {
            if (g.adjacent(cur, v))
                if (sink(internals))
                    return true;
            std::uint64_t next = g.adj[cur] & ~forbidden & ~internals;
            next &= ~(std::uint64_t{1} << v);
            for (std::uint64_t m = next; m; m &= m - 1) {
                int w = std::countr_zero(m);
                internals |= std::uint64_t{1} << w;
                if (self(self, w))
                    return true;
                internals &= ~(std::uint64_t{1} << w);
            }
            return false;
        };
        return rec(rec, u);
    }

    bool pack(size_t idx, std::uint64_t used)
    {
        if (idx == pairs.size())
            return true;
        auto [u, v] = pairs[idx];
        return paths(u, v, branch_set | used, [&](std::uint64_t internals) {
            return pack(idx + 1, used | internals);
        });
    }

    bool k5()
    {
        std::vector<int> cand;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) >= 4)
                cand.push_back(v);
        if (cand.size() < 5)
            return false;
        std::vector<int> pick(5);
        auto choose = [&](auto &&self, size_t start, int depth) -> bool {
            if (depth == 5) {
                branch_set = 0;
                pairs.clear();
                for (int i = 0; i < 5; ++i)
                    branch_set |= std::uint64_t{1} << pick[i];
                for (int i = 0; i < 5; ++i)
                    for (int j = i + 1; j < 5; ++j)
                        pairs.emplace_back(pick[i], pick[j]);
                return pack(0, 0);
            }
            for (size_t i = start; i < cand.size(); ++i) {
                pick[depth] = cand[i];
                if (self(self, i + 1, depth + 1))
                    return true;
            }
            return false;
        };
        return choose(choose, 0, 0);
    }

    bool k33()
    {
        std::vector<int> cand;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) >= 3)
                cand.push_back(v);
        if (cand.size() < 6)
            return false;
        std::vector<int> pick(6);
        auto choose = [&](auto &&self, size_t start, int depth) -> bool {
            if (depth == 6) {
                // split the six into two groups of three; fix pick[0] in group A
                static const int splits[10][3] = {
                    {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
                    {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}};
                for (const auto &split : splits) {
                    bool in_a[6] = {true, false, false, false, false, false};
                    for (int s : split)
                        in_a[s] = true;
                    branch_set = 0;
                    for (int i = 0; i < 6; ++i)
                        branch_set |= std::uint64_t{1} << pick[i];
                    pairs.clear();
                    for (int i = 0; i < 6; ++i)
                        for (int j = 0; j < 6; ++j)
                            if (in_a[i] && !in_a[j])
                                pairs.emplace_back(pick[i], pick[j]);
                    if (pack(0, 0))
                        return true;
                }
                return false;
            }
            for (size_t i = start; i < cand.size(); ++i) {
                pick[depth] = cand[i];
                if (self(self, i + 1, depth + 1))
                    return true;
            }
            return false;
        };
        return choose(choose, 0, 0);
    }
};

bool is_planar(const LabeledGraph &g)
{
    if (g.n <= 4)
        return true;
    int e = g.edge_count();
    if (e <= 8)
        return true; // K5 and K3,3 subdivisions need 9+ edges
    if (g.n >= 3 && e > 3 * g.n - 6)
        return false;
    SubdivisionSearch s(g);
    return !s.k5() && !s.k33();
}

} // namespace

std::vector<std::vector<int>> maximal_partition(const FilterLattice &fl,
                                                const LabeledGraph &g)
{
    std::vector<std::vector<int>> classes(fl.maximal_indices.size());
    for (int v = 0; v < g.n; ++v) {
        for (size_t i = 0; i < fl.maximal_indices.size(); ++i) {
            if (g.vertex_filters[v].subset_of(fl.all[fl.maximal_indices[i]])) {
                classes[i].push_back(v);
                break;
            }
        }
    }
    return classes;
}

GraphInvariants invariants(const LabeledGraph &g)
{
    GraphInvariants inv;
    inv.vertex_count = g.n;
    inv.edge_count = g.edge_count();

    if (g.n == 0) {
        inv.connected = true;
        inv.diameter = 0;
        inv.girth = std::nullopt;
        inv.clique_number = 0;
        inv.chromatic_number = 0;
        inv.planar = true;
        return inv;
    }

    int ecc_max = 0;
    bool connected = true;
    for (int v = 0; v < g.n && connected; ++v) {
        auto dist = bfs_dist(g, v);
        for (int d : dist) {
            if (d < 0)
                connected = false;
            else
                ecc_max = std::max(ecc_max, d);
        }
    }
    inv.connected = connected;
    inv.diameter = connected ? std::optional<int>(ecc_max) : std::nullopt;
    inv.girth = compute_girth(g);
    inv.clique_number = max_clique(g);
    inv.chromatic_number = chromatic_number(g, inv.clique_number);
    inv.planar = is_planar(g);
    return inv;
}

GraphInvariants invariants(const LabeledGraph &g, const ResiduatedLattice &a,
                           const FilterLattice &fl)
{
    GraphInvariants inv = invariants(g);
    inv.max_filter_count = static_cast<int>(fl.maximal_indices.size());
    if (!g.vertex_filters.empty() || g.n == 0)
        inv.partite_classes = maximal_partition(fl, g);
    return inv;
}

std::optional<std::vector<int>> graph_isomorphic(const LabeledGraph &g,
                                                 const LabeledGraph &h)
{
    if (g.n != h.n || g.edge_count() != h.edge_count())
        return std::nullopt;
    const int n = g.n;
    std::vector<int> dg(n), dh(n);
    for (int v = 0; v < n; ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh)
            return std::nullopt;
    }
    std::vector<int> map(n, -1);
    std::uint64_t used = 0;
    auto rec = [&](auto &&self, int v) -> bool {
        if (v == n)
            return true;
        for (int img = 0; img < n; ++img) {
            if ((used >> img & 1) || dh[img] != dg[v])
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.adjacent(u, v) != h.adjacent(map[u], img))
                    ok = false;
            if (!ok)
                continue;
            map[v] = img;
            used |= std::uint64_t{1} << img;
            if (self(self, v + 1))
                return true;
            used &= ~(std::uint64_t{1} << img);
            map[v] = -1;
        }
        return false;
    };
    if (rec(rec, 0))
        return map;
    return std::nullopt;
}

std::optional<std::vector<int>> embeds_as_subgraph(const LabeledGraph &g,
                                                   const LabeledGraph &h)
{
    if (g.n > h.n || g.edge_count() > h.edge_count())
        return std::nullopt;
    const int n = g.n;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> map(n, -1);
    std::uint64_t used = 0;
    auto rec = [&](auto &&self, int idx) -> bool {
        if (idx == n)
            return true;
        int v = order[idx];
        for (int img = 0; img < h.n; ++img) {
            if ((used >> img & 1) || h.degree(img) < g.degree(v))
                continue;
            bool ok = true;
            for (std::uint64_t m = g.adj[v]; m && ok; m &= m - 1) {
                int u = std::countr_zero(m);
                if (map[u] >= 0 && !h.adjacent(map[u], img))
                    ok = false;
            }
            if (!ok)
                continue;
            map[v] = img;
            used |= std::uint64_t{1} << img;
            if (self(self, idx + 1))
                return true;
            used &= ~(std::uint64_t{1} << img);
            map[v] = -1;
        }
        return false;
    };
    if (rec(rec, 0))
        return map;
    return std::nullopt;
}

namespace {

// minimal upper-triangle adjacency encoding over all vertex permutations
struct GraphCanon {
    const LabeledGraph &g;
    std::vector<int> placed;
    std::uint64_t used = 0;
    std::vector<std::uint8_t> cur, best;
    size_t best_len = 0;
    std::vector<int> heuristic;

    explicit GraphCanon(const LabeledGraph &graph) : g(graph)
    {
        size_t total = static_cast<size_t>(g.n) * (g.n - 1) / 2;
        best.assign(total, 0);
        cur.reserve(total);
        heuristic.resize(g.n);
        std::iota(heuristic.begin(), heuristic.end(), 0);
        std::stable_sort(heuristic.begin(), heuristic.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    void dfs(int k)
    {
        if (k == g.n)
            return; // cur == best over the full length
        size_t off = cur.size();
        size_t seg_len = static_cast<size_t>(k);
        std::vector<std::uint8_t> seg(seg_len);
        for (int e : heuristic) {
            if (used >> e & 1)
                continue;
            for (int i = 0; i < k; ++i)
                seg[i] = g.adjacent(placed[i], e) ? 1 : 0;
            if (best_len >= off + seg_len) {
                int cmp = 0;
                for (size_t i = 0; i < seg_len; ++i)
                    if (seg[i] != best[off + i]) {
                        cmp = seg[i] > best[off + i] ? 1 : -1;
                        break;
                    }
                if (cmp > 0)
                    continue;
                if (cmp < 0) {
                    std::copy(seg.begin(), seg.end(), best.begin() + off);
                    best_len = off + seg_len;
                }
            } else {
                std::copy(seg.begin(), seg.end(), best.begin() + off);
                best_len = off + seg_len;
            }
            placed.push_back(e);
            used |= std::uint64_t{1} << e;
            cur.insert(cur.end(), seg.begin(), seg.end());
            dfs(k + 1);
            cur.resize(off);
            used &= ~(std::uint64_t{1} << e);
            placed.pop_back();
        }
    }
};

} // namespace

std::string canonical_graph_form(const LabeledGraph &g)
{
    GraphCanon c(g);
    c.dfs(0);
    std::string key;
    key.push_back(static_cast<char>(g.n));
    detail::append_packed_bits(key, c.best);
    return key;
}

std::optional<LabeledGraph> graph_from_canonical_key(const std::string &key)
{
    if (key.empty())
        return std::nullopt;
    int n = static_cast<unsigned char>(key[0]);
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    if (key.size() != 1 + (nbits + 7) / 8)
        return std::nullopt;
    auto bits = detail::unpack_bits(key, 1, nbits);
    LabeledGraph g = LabeledGraph::empty(n);
    size_t b = 0;
    // shell order: for position k, bits against positions 0..k-1
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < k; ++i, ++b)
            if (bits[b])
                g.add_edge(i, k);
    for (int v = 0; v < n; ++v)
        g.labels[v] = "v" + std::to_string(v);
    return g;
}

std::string shape_name(const LabeledGraph &g)
{
    const int n = g.n;
    if (n == 0)
        return "null";
    int e = g.edge_count();
    if (e == n * (n - 1) / 2)
        return "K" + std::to_string(n);

    auto inv = invariants(g);
    if (inv.connected && e == n - 1) {
        int deg1 = 0, deg_over2 = 0;
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) == 1)
                ++deg1;
            if (g.degree(v) > 2)
                ++deg_over2;
        }
        if (deg1 == 2 && deg_over2 == 0)
            return "P" + std::to_string(n);
    }
    if (inv.connected && e == n) {
        bool all2 = true;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) != 2)
                all2 = false;
        if (all2)
            return "C" + std::to_string(n);
    }
    if (inv.connected) {
        // complete bipartite: 2-color then check all cross pairs adjacent
        std::vector<int> side(n, -1);
        side[0] = 0;
        std::deque<int> queue{0};
        bool bip = true;
        while (!queue.empty() && bip) {
            int u = queue.front();
            queue.pop_front();
            for (std::uint64_t m = g.adj[u]; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if (side[v] == side[u])
                    bip = false;
            }
        }
        if (bip) {
            int p = static_cast<int>(std::count(side.begin(), side.end(), 0));
            int q = n - p;
            if (e == p * q) {
                if (p > q)
                    std::swap(p, q);
                return "K" + std::to_string(p) + "," + std::to_string(q);
            }
        }
    }
    // opaque but stable fallback
    std::string key = canonical_graph_form(g);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char digits[] = "0123456789abcdef";
    std::string out = "g";
    for (int i = 15; i >= 8; --i)
        out.push_back(digits[(h >> (4 * i)) & 0xf]);
    return out;
}

std::string shape_name_for_key(const std::string &canonical_key)
{
    auto g = graph_from_canonical_key(canonical_key);
    if (!g)
        return "?";
    return shape_name(*g);
}

} // namespace reslat
