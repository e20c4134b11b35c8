#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reslat {

using Elem = int;
using ElemSet = std::uint32_t; // bitmask of element indices

// Tables use one byte per entry; masks use one bit per element.
constexpr int max_algebra_size = 24;

constexpr bool set_contains(ElemSet s, Elem x) { return (s >> x) & 1u; }

// Membership list of a mask in ascending index order.
std::vector<Elem> set_elements(ElemSet s);

struct ClassFlags {
    bool prelinear = false;
    bool divisible = false;
    bool involutive = false;
    bool idempotent = false;
    bool mtl = false;
    bool bl = false;
    bool godel = false;
    bool mv = false;
    bool heyting = false;

    bool operator==(const ClassFlags &) const = default;
};

struct Violation {
    std::string axiom;
    std::vector<Elem> witness;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(std::string axiom, std::vector<Elem> witness);
};

// Pretty-print one violation per line, using the supplied element names.
std::string format_report(const ValidationReport &report,
                          const std::vector<std::string> &names);

class ResiduatedLattice {
public:
    int size() const { return n_; }
    Elem bottom() const { return 0; }
    Elem top() const { return n_ - 1; }

    bool leq(Elem x, Elem y) const { return set_contains(up_[x], y); }
    Elem mult(Elem x, Elem y) const { return mult_[x * n_ + y]; }
    Elem impl(Elem x, Elem y) const { return impl_[x * n_ + y]; }
    Elem meet(Elem x, Elem y) const { return meet_[x * n_ + y]; }
    Elem join(Elem x, Elem y) const { return join_[x * n_ + y]; }
    Elem negation(Elem x) const { return impl(x, 0); }
    bool idempotent(Elem x) const { return mult(x, x) == x; }

    ElemSet upset(Elem x) const { return up_[x]; }
    ElemSet downset(Elem x) const { return down_[x]; }
    ElemSet universe() const { return (ElemSet{1} << n_) - 1; }

    const std::string &name(Elem x) const { return names_[x]; }
    const std::vector<std::string> &names() const { return names_; }

private:
    ResiduatedLattice() = default;
    friend class AlgebraBuilder;

    int n_ = 0;
    std::vector<ElemSet> up_, down_;
    std::vector<std::uint8_t> mult_, impl_, meet_, join_;
    std::vector<std::string> names_;
};

struct BuildResult {
    std::optional<ResiduatedLattice> algebra;
    ValidationReport report;

    explicit operator bool() const { return algebra.has_value(); }
};

using Matrix = std::vector<std::vector<int>>; // square, row-major

// Validates every axiom and returns either the algebra or a report listing
// every violation with a witness tuple. The implication table is derived from
// (leq, mult) when absent and cross-checked when supplied.
// Throws std::invalid_argument on malformed input (non-square tables,
// out-of-range entries, n < 1 or n > max_algebra_size).
BuildResult build(const Matrix &leq, const Matrix &mult,
                  const std::optional<Matrix> &impl = std::nullopt,
                  std::vector<std::string> names = {});

// Flat row-major variant used by the enumeration inner loop.
BuildResult build_flat(int n, const std::vector<std::uint8_t> &leq,
                       const std::vector<std::uint8_t> &mult,
                       const std::uint8_t *impl = nullptr,
                       std::vector<std::string> names = {});

struct DeriveImplResult {
    std::optional<Matrix> impl;
    std::optional<std::pair<Elem, Elem>> missing_at; // residual missing at (x, y)
};

// impl(x,y) = join{a : mult(x,a) <= y}; fails with the offending cell when
// that join is not itself a member of the set. Throws std::invalid_argument
// if leq is not a bounded lattice order or mult is not commutative unital.
DeriveImplResult derive_implication(const Matrix &leq, const Matrix &mult);

ClassFlags classify(const ResiduatedLattice &a);

// perm[x] is the image of x; preserves leq and mult (impl follows).
std::optional<std::vector<Elem>> are_isomorphic(const ResiduatedLattice &a,
                                                const ResiduatedLattice &b);

// Isomorphism-class key: minimal (leq, mult) encoding over bottom/top-fixing
// permutations. Equal keys iff isomorphic.
std::string canonical_form(const ResiduatedLattice &a);

// Decode a canonical_form key back into an algebra (default element names).
std::optional<ResiduatedLattice> algebra_from_canonical_key(const std::string &key);

// Relabel by perm (perm[x] = new index of x); perm must fix bottom and top
// and preserve nothing else -- the result is revalidated via build.
ResiduatedLattice relabel(const ResiduatedLattice &a, const std::vector<Elem> &perm);

std::string to_hex(const std::string &bytes);
std::optional<std::string> from_hex(const std::string &hex);

} // namespace reslat
