#pragma once

#include <stdexcept>
#include <string>

#include "reslat/filters.hpp"
#include "reslat/io.hpp"

namespace testutil {

inline std::string fixture_path(const std::string &name)
{
    return std::string(RESLAT_FIXTURE_DIR) + "/" + name;
}

inline reslat::ResiduatedLattice load_fixture(const std::string &name)
{
    auto parsed = reslat::parse_algebra_file(fixture_path(name));
    if (!parsed)
        throw std::runtime_error("fixture " + name + " failed to load");
    return std::move(*parsed.algebra);
}

// element index by display name
inline reslat::Elem elem(const reslat::ResiduatedLattice &a, const std::string &name)
{
    for (reslat::Elem x = 0; x < a.size(); ++x)
        if (a.name(x) == name)
            return x;
    throw std::runtime_error("no element named " + name);
}

inline reslat::ElemSet mask(const reslat::ResiduatedLattice &a,
                            std::initializer_list<const char *> names)
{
    reslat::ElemSet s = 0;
    for (const char *n : names)
        s |= reslat::ElemSet{1} << elem(a, n);
    return s;
}

inline reslat::Filter filter_of(const reslat::ResiduatedLattice &a,
                                std::initializer_list<const char *> names)
{
    return {mask(a, names), a.size()};
}

} // namespace testutil
