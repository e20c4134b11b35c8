#include "canon.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace reslat::detail {

namespace {

struct CanonSearch {
    int n;
    const std::vector<ElemSet> &up;
    int fixed;

    std::vector<Elem> placed;
    ElemSet used = 0;
    std::vector<std::uint8_t> cur;
    std::vector<std::uint8_t> best;
    size_t best_len = 0;
    std::vector<std::vector<Elem>> winners;
    std::vector<Elem> heuristic; // candidate order for free elements

    CanonSearch(int n_, const std::vector<ElemSet> &up_, const std::vector<Elem> &prefix)
        : n(n_), up(up_), fixed(static_cast<int>(prefix.size()))
    {
        placed = prefix;
        for (Elem e : prefix)
            used |= ElemSet{1} << e;
        size_t total = 0;
        for (int k = fixed; k < n; ++k)
            total += 2 * static_cast<size_t>(k);
        cur.reserve(total);
        best.assign(total, 0);

        // cheap invariant ordering so the first leaf is near-minimal
        for (Elem e = 0; e < n; ++e)
            if (!set_contains(used, e))
                heuristic.push_back(e);
        std::stable_sort(heuristic.begin(), heuristic.end(), [&](Elem a, Elem b) {
            int ua = std::popcount(up[a]), ub = std::popcount(up[b]);
            if (ua != ub)
                return ua > ub; // more elements above = lower in the order first
            return a < b;
        });
    }

    bool leq(Elem x, Elem y) const { return set_contains(up[x], y); }

    void dfs(int k)
    {
        if (k == n) {
            winners.push_back(placed);
            return;
        }
        size_t off = cur.size();
        size_t seg_len = 2 * static_cast<size_t>(k);
        std::vector<std::uint8_t> seg(seg_len);
        for (Elem e : heuristic) {
            if (set_contains(used, e))
                continue;
            for (int i = 0; i < k; ++i) {
                seg[i] = leq(placed[i], e) ? 1 : 0;
                seg[k + i] = leq(e, placed[i]) ? 1 : 0;
            }
            if (best_len >= off + seg_len) {
                int cmp = 0;
                for (size_t i = 0; i < seg_len; ++i) {
                    if (seg[i] != best[off + i]) {
                        cmp = seg[i] < best[off + i] ? -1 : 1;
                        break;
                    }
                }
                if (cmp > 0)
                    continue;
                if (cmp < 0) {
                    std::copy(seg.begin(), seg.end(), best.begin() + off);
                    best_len = off + seg_len;
                    winners.clear();
                }
            } else {
                assert(best_len == off);
                std::copy(seg.begin(), seg.end(), best.begin() + off);
                best_len = off + seg_len;
                winners.clear();
            }
            placed.push_back(e);
            used |= ElemSet{1} << e;
            cur.insert(cur.end(), seg.begin(), seg.end());
            dfs(k + 1);
            cur.resize(off);
            used &= ~(ElemSet{1} << e);
            placed.pop_back();
        }
    }
};

} // namespace

std::vector<std::vector<Elem>> canon_order(int n, const std::vector<ElemSet> &up,
                                           const std::vector<Elem> &fixed_prefix)
{
    CanonSearch s(n, up, fixed_prefix);
    s.dfs(static_cast<int>(fixed_prefix.size()));
    return s.winners;
}

std::vector<std::vector<Elem>> relation_automorphisms(int n,
                                                      const std::vector<ElemSet> &up)
{
    std::vector<std::vector<Elem>> result;
    std::vector<Elem> perm(n, -1);
    ElemSet used = 0;

    // signature prefilter: image must match on (upset size, downset size)
    std::vector<int> upsz(n), dnsz(n);
    for (Elem x = 0; x < n; ++x) {
        upsz[x] = std::popcount(up[x]);
        int d = 0;
        for (Elem y = 0; y < n; ++y)
            if (set_contains(up[y], x))
                ++d;
        dnsz[x] = d;
    }

    auto leq = [&](Elem x, Elem y) { return set_contains(up[x], y); };

    auto rec = [&](auto &&self, int x) -> void {
        if (x == n) {
            result.push_back(perm);
            return;
        }
        for (Elem img = 0; img < n; ++img) {
            if (set_contains(used, img))
                continue;
            if (upsz[img] != upsz[x] || dnsz[img] != dnsz[x])
                continue;
            bool ok = true;
            for (Elem y = 0; y < x && ok; ++y) {
                if (leq(x, y) != leq(img, perm[y]) || leq(y, x) != leq(perm[y], img))
                    ok = false;
            }
            if (!ok)
                continue;
            perm[x] = img;
            used |= ElemSet{1} << img;
            self(self, x + 1);
            used &= ~(ElemSet{1} << img);
            perm[x] = -1;
        }
    };
    rec(rec, 0);
    return result;
}

std::vector<Elem> placement_to_spec_order(const std::vector<Elem> &placement)
{
    int n = static_cast<int>(placement.size());
    std::vector<Elem> g(n);
    g[0] = placement[0];
    if (n > 1)
        g[n - 1] = placement[1];
    for (int k = 2; k < n; ++k)
        g[k - 1] = placement[k];
    return g;
}

void append_packed_bits(std::string &out, const std::vector<std::uint8_t> &bits)
{
    size_t nbytes = (bits.size() + 7) / 8;
    size_t start = out.size();
    out.append(nbytes, '\0');
    for (size_t b = 0; b < bits.size(); ++b)
        if (bits[b])
            out[start + b / 8] |= static_cast<char>(0x80u >> (b % 8));
}

std::vector<std::uint8_t> unpack_bits(const std::string &bytes, size_t offset, size_t count)
{
    std::vector<std::uint8_t> bits(count, 0);
    for (size_t b = 0; b < count; ++b) {
        size_t idx = offset + b / 8;
        if (idx >= bytes.size())
            return {};
        bits[b] = (static_cast<unsigned char>(bytes[idx]) >> (7 - b % 8)) & 1u;
    }
    return bits;
}

std::string leq_canonical_key(int n, const std::vector<ElemSet> &up)
{
    std::vector<Elem> prefix;
    if (n == 1) {
        prefix = {0};
    } else {
        prefix = {0, n - 1};
    }
    auto winners = canon_order(n, up, prefix);
    assert(!winners.empty());
    auto g = placement_to_spec_order(winners.front());
    std::vector<std::uint8_t> bits(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            bits[static_cast<size_t>(i) * n + j] = set_contains(up[g[i]], g[j]) ? 1 : 0;
    std::string key;
    key.push_back(static_cast<char>(n));
    append_packed_bits(key, bits);
    return key;
}

} // namespace reslat::detail
