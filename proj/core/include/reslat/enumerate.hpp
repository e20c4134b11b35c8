#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/graph.hpp"

namespace reslat {

// Bounded lattice, one representative per isomorphism class. 0 is bottom,
// n-1 is top.
struct LatticeSkeleton {
    int n = 0;
    std::vector<ElemSet> up;   // up[x] = {y : x <= y}
    std::string canonical_key; // leq-only canonical encoding
    std::vector<std::uint8_t> meet, join;
    std::vector<std::vector<Elem>> automorphisms; // bottom/top fixing

    bool leq(Elem x, Elem y) const { return set_contains(up[x], y); }
};

// One representative per isomorphism class, sorted by canonical key.
std::vector<LatticeSkeleton> enumerate_skeletons(int n);

// All residuated multiplications on the skeleton, one per orbit of the
// skeleton's automorphism group. Every emitted algebra has passed full
// validation.
void complete_to_residuated(const LatticeSkeleton &sk,
                            const std::function<void(const ResiduatedLattice &)> &sink);

enum class AlgebraClass { all, mtl, bl, heyting, godel, mv, non_prelinear };

const char *class_name(AlgebraClass c);
std::optional<AlgebraClass> class_from_name(const std::string &name);
bool in_class(const ClassFlags &flags, AlgebraClass c);

// One catalog entry per enumerated algebra.
struct CatalogRecord {
    int size = 0;
    std::string canonical_key; // raw bytes
    ClassFlags flags;
    int filter_count = 0;
    int max_filter_count = 0;
    int radical_size = 0;
    // comaximal filter graph
    int graph_vertices = 0;
    int graph_edges = 0;
    std::optional<int> graph_diameter;
    std::optional<int> graph_girth;
    int graph_omega = 0;
    int graph_chi = 0;
    bool graph_planar = true;
    std::string graph_key; // raw bytes
};

CatalogRecord make_catalog_record(const ResiduatedLattice &a);

struct EnumerateOptions {
    int jobs = 1;                  // worker threads
    double budget_seconds = 0;     // 0 = unlimited
    bool progress = false;         // "size/skeleton/completions" lines on stderr
};

struct SizeCensus {
    int size = 0;
    bool skipped = false; // budget ran out before the size completed
    std::vector<CatalogRecord> records; // sorted by canonical_key
};

// Enumerate one size; deterministic output regardless of jobs.
SizeCensus enumerate_size(int n, const EnumerateOptions &opt = {});

struct CensusRow {
    int size = 0;
    bool skipped = false;
    std::map<AlgebraClass, long> counts;
    std::map<AlgebraClass, long> nonnull;
    // class -> canonical graph key -> count, for non-null graphs
    std::map<AlgebraClass, std::map<std::string, long>> shapes;
};

CensusRow tabulate(const SizeCensus &census);

// Multiset of canonical graph forms for non-null graphs of the size/class.
std::map<std::string, long> shape_census(const SizeCensus &census, AlgebraClass c);

struct CensusResult {
    std::vector<CensusRow> rows;
    std::vector<SizeCensus> sizes;
    bool budget_exceeded = false;
};

// Sizes 1..n_max with a shared wall-clock budget; a size that does not finish
// within budget is reported skipped, never partial.
CensusResult census(int n_max, const EnumerateOptions &opt = {});

} // namespace reslat
