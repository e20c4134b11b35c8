#include "reslat/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "canon.hpp"

namespace reslat {

std::vector<Elem> set_elements(ElemSet s)
{
    std::vector<Elem> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

void ValidationReport::add(std::string axiom, std::vector<Elem> witness)
{
    ok = false;
    violations.push_back({std::move(axiom), std::move(witness)});
}

std::string format_report(const ValidationReport &report,
                          const std::vector<std::string> &names)
{
    std::ostringstream os;
    if (report.ok) {
        os << "ok\n";
        return os.str();
    }
    for (const auto &v : report.violations) {
        os << v.axiom << " violated at (";
        for (size_t i = 0; i < v.witness.size(); ++i) {
            if (i)
                os << ", ";
            Elem e = v.witness[i];
            if (e >= 0 && e < static_cast<Elem>(names.size()))
                os << names[e];
            else
                os << "e" << e;
        }
        os << ")\n";
    }
    return os.str();
}

// Builder with access to the private ResiduatedLattice constructor.
class AlgebraBuilder {
public:
    static ResiduatedLattice make(int n, std::vector<ElemSet> up, std::vector<ElemSet> down,
                                  std::vector<std::uint8_t> mult, std::vector<std::uint8_t> impl,
                                  std::vector<std::uint8_t> meet, std::vector<std::uint8_t> join,
                                  std::vector<std::string> names)
    {
        ResiduatedLattice a;
        a.n_ = n;
        a.up_ = std::move(up);
        a.down_ = std::move(down);
        a.mult_ = std::move(mult);
        a.impl_ = std::move(impl);
        a.meet_ = std::move(meet);
        a.join_ = std::move(join);
        a.names_ = std::move(names);
        return a;
    }
};

namespace {

std::vector<std::string> default_names(int n)
{
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i)
        names[i] = "e" + std::to_string(i);
    return names;
}

std::vector<std::uint8_t> flatten(const Matrix &m)
{
    std::vector<std::uint8_t> out;
    out.reserve(m.size() * m.size());
    for (const auto &row : m)
        for (int v : row)
            out.push_back(static_cast<std::uint8_t>(v));
    return out;
}

void check_square(const Matrix &m, size_t n, const char *what)
{
    if (m.size() != n)
        throw std::invalid_argument(std::string(what) + ": wrong row count");
    for (const auto &row : m)
        if (row.size() != n)
            throw std::invalid_argument(std::string(what) + ": non-square");
}

struct LatticeTables {
    bool poset_ok = false;
    bool lattice_ok = false;
    std::vector<ElemSet> up, down;
    std::vector<std::uint8_t> meet, join;
};

// Poset + bounds + lub/glb checks; every violation reported.
LatticeTables check_lattice(int n, const std::vector<std::uint8_t> &leq,
                            ValidationReport &report)
{
    LatticeTables t;
    auto at = [&](Elem x, Elem y) { return leq[static_cast<size_t>(x) * n + y] != 0; };

    bool poset_ok = true;
    for (Elem x = 0; x < n; ++x)
        if (!at(x, x)) {
            report.add("leq-not-reflexive", {x});
            poset_ok = false;
        }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = x + 1; y < n; ++y)
            if (at(x, y) && at(y, x)) {
                report.add("leq-not-antisymmetric", {x, y});
                poset_ok = false;
            }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (!at(x, y))
                continue;
            for (Elem z = 0; z < n; ++z)
                if (at(y, z) && !at(x, z)) {
                    report.add("leq-not-transitive", {x, y, z});
                    poset_ok = false;
                }
        }
    for (Elem x = 0; x < n; ++x) {
        if (!at(0, x)) {
            report.add("bottom-not-least", {x});
            poset_ok = false;
        }
        if (!at(x, n - 1)) {
            report.add("top-not-greatest", {x});
            poset_ok = false;
        }
    }
    t.poset_ok = poset_ok;
    if (!poset_ok)
        return t;

    t.up.assign(n, 0);
    t.down.assign(n, 0);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (at(x, y)) {
                t.up[x] |= ElemSet{1} << y;
                t.down[y] |= ElemSet{1} << x;
            }

    t.meet.assign(static_cast<size_t>(n) * n, 0);
    t.join.assign(static_cast<size_t>(n) * n, 0);
    bool lattice_ok = true;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            ElemSet ub = t.up[x] & t.up[y];
            Elem least = -1;
            for (ElemSet s = ub; s; s &= s - 1) {
                Elem z = std::countr_zero(s);
                if ((ub & ~t.up[z]) == 0) {
                    least = z;
                    break;
                }
            }
            if (least < 0) {
                if (x < y)
                    report.add("lub-missing", {x, y});
                lattice_ok = false;
            } else {
                t.join[static_cast<size_t>(x) * n + y] = static_cast<std::uint8_t>(least);
            }
            ElemSet lb = t.down[x] & t.down[y];
            Elem greatest = -1;
            for (ElemSet s = lb; s; s &= s - 1) {
                Elem z = std::countr_zero(s);
                if ((lb & ~t.down[z]) == 0) {
                    greatest = z;
                    break;
                }
            }
            if (greatest < 0) {
                if (x < y)
                    report.add("glb-missing", {x, y});
                lattice_ok = false;
            } else {
                t.meet[static_cast<size_t>(x) * n + y] = static_cast<std::uint8_t>(greatest);
            }
        }
    t.lattice_ok = lattice_ok;
    return t;
}

} // namespace

BuildResult build_flat(int n, const std::vector<std::uint8_t> &leq,
                       const std::vector<std::uint8_t> &mult,
                       const std::uint8_t *impl, std::vector<std::string> names)
{
    if (n < 1 || n > max_algebra_size)
        throw std::invalid_argument("algebra size out of range");
    if (leq.size() != static_cast<size_t>(n) * n || mult.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("table size mismatch");
    for (auto v : mult)
        if (v >= n)
            throw std::invalid_argument("mult entry out of range");
    if (names.empty())
        names = default_names(n);
    if (names.size() != static_cast<size_t>(n))
        throw std::invalid_argument("name count mismatch");

    BuildResult result;
    ValidationReport &report = result.report;

    LatticeTables lt = check_lattice(n, leq, report);

    auto mu = [&](Elem x, Elem y) { return static_cast<Elem>(mult[static_cast<size_t>(x) * n + y]); };
    const Elem top = n - 1;

    for (Elem x = 0; x < n; ++x)
        for (Elem y = x + 1; y < n; ++y)
            if (mu(x, y) != mu(y, x))
                report.add("mult-not-commutative", {x, y});
    for (Elem x = 0; x < n; ++x)
        if (mu(x, top) != x)
            report.add("unit-law", {x, top});
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
                if (mu(mu(x, y), z) != mu(x, mu(y, z)))
                    report.add("mult-not-associative", {x, y, z});

    std::vector<std::uint8_t> impl_table;
    if (lt.lattice_ok) {
        auto le = [&](Elem x, Elem y) { return set_contains(lt.up[x], y); };
        auto jn = [&](Elem x, Elem y) { return static_cast<Elem>(lt.join[static_cast<size_t>(x) * n + y]); };
        auto me = [&](Elem x, Elem y) { return static_cast<Elem>(lt.meet[static_cast<size_t>(x) * n + y]); };

        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                if (!le(mu(x, y), me(x, y)))
                    report.add("integrality", {x, y});

        impl_table.assign(static_cast<size_t>(n) * n, 0);
        bool derived_ok = true;
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                Elem t = 0;
                for (Elem a = 0; a < n; ++a)
                    if (le(mu(x, a), y))
                        t = jn(t, a);
                if (!le(mu(x, t), y)) {
                    report.add("residual-missing", {x, y});
                    derived_ok = false;
                }
                impl_table[static_cast<size_t>(x) * n + y] = static_cast<std::uint8_t>(t);
            }

        if (derived_ok && impl) {
            for (Elem x = 0; x < n; ++x)
                for (Elem y = 0; y < n; ++y)
                    if (impl[static_cast<size_t>(x) * n + y] !=
                        impl_table[static_cast<size_t>(x) * n + y])
                        report.add("impl-mismatch", {x, y});
        }
        if (derived_ok) {
            // adjunction both ways with the derived table
            auto im = [&](Elem x, Elem y) { return static_cast<Elem>(impl_table[static_cast<size_t>(x) * n + y]); };
            for (Elem x = 0; x < n; ++x)
                for (Elem y = 0; y < n; ++y)
                    for (Elem z = 0; z < n; ++z)
                        if (le(mu(x, y), z) != le(x, im(y, z))) {
                            report.add("adjunction", {x, y, z});
                        }
        }
    }

    if (report.ok)
        result.algebra = AlgebraBuilder::make(n, std::move(lt.up), std::move(lt.down),
                                              mult, std::move(impl_table),
                                              std::move(lt.meet), std::move(lt.join),
                                              std::move(names));
    return result;
}

BuildResult build(const Matrix &leq, const Matrix &mult,
                  const std::optional<Matrix> &impl, std::vector<std::string> names)
{
    size_t n = leq.size();
    if (n < 1)
        throw std::invalid_argument("empty algebra");
    check_square(leq, n, "leq");
    check_square(mult, n, "mult");
    if (impl)
        check_square(*impl, n, "impl");
    std::vector<std::uint8_t> impl_flat;
    if (impl) {
        for (const auto &row : *impl)
            for (int v : row) {
                if (v < 0 || static_cast<size_t>(v) >= n)
                    throw std::invalid_argument("impl entry out of range");
                impl_flat.push_back(static_cast<std::uint8_t>(v));
            }
    }
    for (const auto &row : mult)
        for (int v : row)
            if (v < 0 || static_cast<size_t>(v) >= n)
                throw std::invalid_argument("mult entry out of range");
    return build_flat(static_cast<int>(n), flatten(leq), flatten(mult),
                      impl ? impl_flat.data() : nullptr, std::move(names));
}

DeriveImplResult derive_implication(const Matrix &leq, const Matrix &mult)
{
    size_t n = leq.size();
    check_square(leq, n, "leq");
    check_square(mult, n, "mult");
    ValidationReport scratch;
    LatticeTables lt = check_lattice(static_cast<int>(n), flatten(leq), scratch);
    if (!lt.lattice_ok)
        throw std::invalid_argument("leq is not a bounded lattice order");
    const Elem top = static_cast<Elem>(n) - 1;
    for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
        if (mult[x][top] != x)
            throw std::invalid_argument("mult is not unital");
        for (Elem y = 0; y < static_cast<Elem>(n); ++y)
            if (mult[x][y] != mult[y][x])
                throw std::invalid_argument("mult is not commutative");
    }

    auto le = [&](Elem x, Elem y) { return set_contains(lt.up[x], y); };
    auto jn = [&](Elem x, Elem y) { return static_cast<Elem>(lt.join[static_cast<size_t>(x) * n + y]); };

    Matrix impl(n, std::vector<int>(n, 0));
    for (Elem x = 0; x < static_cast<Elem>(n); ++x)
        for (Elem y = 0; y < static_cast<Elem>(n); ++y) {
            Elem t = 0;
            for (Elem a = 0; a < static_cast<Elem>(n); ++a)
                if (le(mult[x][a], y))
                    t = jn(t, a);
            if (!le(mult[x][t], y))
                return {std::nullopt, std::make_pair(x, y)};
            impl[x][y] = t;
        }
    return {std::move(impl), std::nullopt};
}

ClassFlags classify(const ResiduatedLattice &a)
{
    const int n = a.size();
    const Elem top = a.top();
    ClassFlags f;
    f.prelinear = true;
    f.divisible = true;
    f.involutive = true;
    f.idempotent = true;
    for (Elem x = 0; x < n; ++x) {
        if (a.mult(x, x) != x)
            f.idempotent = false;
        if (a.negation(a.negation(x)) != x)
            f.involutive = false;
        for (Elem y = 0; y < n; ++y) {
            if (a.join(a.impl(x, y), a.impl(y, x)) != top)
                f.prelinear = false;
            if (a.mult(x, a.impl(x, y)) != a.meet(x, y))
                f.divisible = false;
        }
    }
    f.mtl = f.prelinear;
    f.bl = f.prelinear && f.divisible;
    f.godel = f.bl && f.idempotent;
    f.mv = f.bl && f.involutive;
    f.heyting = f.idempotent;
    return f;
}

namespace {

// per-element invariant used to cut the isomorphism search
struct ElemSig {
    int up_size, down_size;
    bool idem;
    int zero_products;

    bool operator==(const ElemSig &) const = default;
};

ElemSig signature(const ResiduatedLattice &a, Elem x)
{
    ElemSig s;
    s.up_size = std::popcount(a.upset(x));
    s.down_size = std::popcount(a.downset(x));
    s.idem = a.idempotent(x);
    s.zero_products = 0;
    for (Elem y = 0; y < a.size(); ++y)
        if (a.mult(x, y) == 0)
            ++s.zero_products;
    return s;
}

} // namespace

std::optional<std::vector<Elem>> are_isomorphic(const ResiduatedLattice &a,
                                                const ResiduatedLattice &b)
{
    const int n = a.size();
    if (b.size() != n)
        return std::nullopt;
    std::vector<ElemSig> sa(n), sb(n);
    for (Elem x = 0; x < n; ++x) {
        sa[x] = signature(a, x);
        sb[x] = signature(b, x);
    }

    std::vector<Elem> map(n, -1);
    ElemSet used = 0;
    map[0] = 0;
    map[n - 1] = n - 1;
    used |= 1u | (ElemSet{1} << (n - 1));
    if (!(sa[0] == sb[0]) || !(sa[n - 1] == sb[n - 1]))
        return std::nullopt;

    auto full_check = [&]() {
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                if (a.leq(x, y) != b.leq(map[x], map[y]))
                    return false;
                if (map[a.mult(x, y)] != b.mult(map[x], map[y]))
                    return false;
            }
        return true;
    };

    auto rec = [&](auto &&self, Elem x) -> bool {
        if (x == n - 1)
            return full_check();
        for (Elem img = 1; img < n - 1; ++img) {
            if (set_contains(used, img) || !(sa[x] == sb[img]))
                continue;
            bool ok = true;
            for (Elem y = 0; y < n && ok; ++y) {
                if (map[y] < 0)
                    continue;
                if (a.leq(x, y) != b.leq(img, map[y]) || a.leq(y, x) != b.leq(map[y], img))
                    ok = false;
                else {
                    Elem v = a.mult(x, y);
                    if (map[v] >= 0 && map[v] != b.mult(img, map[y]))
                        ok = false;
                }
            }
            if (!ok)
                continue;
            map[x] = img;
            used |= ElemSet{1} << img;
            if (self(self, x + 1))
                return true;
            used &= ~(ElemSet{1} << img);
            map[x] = -1;
        }
        return false;
    };

    if (n == 1)
        return std::vector<Elem>{0};
    if (rec(rec, 1))
        return map;
    return std::nullopt;
}

std::string canonical_form(const ResiduatedLattice &a)
{
    const int n = a.size();
    std::vector<ElemSet> up(n);
    for (Elem x = 0; x < n; ++x)
        up[x] = a.upset(x);
    std::vector<Elem> prefix = n == 1 ? std::vector<Elem>{0} : std::vector<Elem>{0, n - 1};
    auto winners = detail::canon_order(n, up, prefix);
    assert(!winners.empty());

    // leq part is identical across winners; mult part is minimized over them
    auto g0 = detail::placement_to_spec_order(winners.front());
    std::vector<std::uint8_t> leq_bits(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            leq_bits[static_cast<size_t>(i) * n + j] = a.leq(g0[i], g0[j]) ? 1 : 0;

    std::vector<std::uint8_t> best_mult;
    for (const auto &w : winners) {
        auto g = detail::placement_to_spec_order(w);
        std::vector<Elem> pos(n); // original element -> new index
        for (int i = 0; i < n; ++i)
            pos[g[i]] = i;
        std::vector<std::uint8_t> m(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[static_cast<size_t>(i) * n + j] =
                    static_cast<std::uint8_t>(pos[a.mult(g[i], g[j])]);
        if (best_mult.empty() || m < best_mult)
            best_mult = std::move(m);
    }

    std::string key;
    key.push_back(static_cast<char>(n));
    detail::append_packed_bits(key, leq_bits);
    for (auto v : best_mult)
        key.push_back(static_cast<char>(v));
    return key;
}

std::optional<ResiduatedLattice> algebra_from_canonical_key(const std::string &key)
{
    if (key.empty())
        return std::nullopt;
    int n = static_cast<unsigned char>(key[0]);
    if (n < 1 || n > max_algebra_size)
        return std::nullopt;
    size_t nn = static_cast<size_t>(n) * n;
    size_t leq_bytes = (nn + 7) / 8;
    if (key.size() != 1 + leq_bytes + nn)
        return std::nullopt;
    auto bits = detail::unpack_bits(key, 1, nn);
    if (bits.empty() && nn > 0)
        return std::nullopt;
    std::vector<std::uint8_t> leq(bits.begin(), bits.end());
    std::vector<std::uint8_t> mult(nn);
    for (size_t i = 0; i < nn; ++i)
        mult[i] = static_cast<std::uint8_t>(key[1 + leq_bytes + i]);
    auto result = build_flat(n, leq, mult);
    if (!result)
        return std::nullopt;
    return std::move(result.algebra);
}

ResiduatedLattice relabel(const ResiduatedLattice &a, const std::vector<Elem> &perm)
{
    const int n = a.size();
    if (static_cast<int>(perm.size()) != n || perm[0] != 0 || perm[n - 1] != n - 1)
        throw std::invalid_argument("relabel: perm must fix bottom and top");
    std::vector<Elem> inv(n);
    for (Elem x = 0; x < n; ++x)
        inv[perm[x]] = x;
    Matrix leq(n, std::vector<int>(n)), mult(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (Elem i = 0; i < n; ++i) {
        names[i] = a.name(inv[i]);
        for (Elem j = 0; j < n; ++j) {
            leq[i][j] = a.leq(inv[i], inv[j]) ? 1 : 0;
            mult[i][j] = perm[a.mult(inv[i], inv[j])];
        }
    }
    auto result = build(leq, mult, std::nullopt, std::move(names));
    if (!result)
        throw std::logic_error("relabel produced an invalid algebra");
    return std::move(*result.algebra);
}

std::string to_hex(const std::string &bytes)
{
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

std::optional<std::string> from_hex(const std::string &hex)
{
    if (hex.size() % 2)
        return std::nullopt;
    auto val = [](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        return -1;
    };
    std::string out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        int hi = val(hex[i]), lo = val(hex[i + 1]);
        if (hi < 0 || lo < 0)
            return std::nullopt;
        out.push_back(static_cast<char>(hi << 4 | lo));
    }
    return out;
}

} // namespace reslat
