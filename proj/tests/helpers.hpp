#pragma once

#include "levi/arrangement.hpp"
#include "levi/oracle.hpp"

#include <vector>

namespace levi::testing {

inline Arrangement two_lines() { return canonical_relabel(wiring_arrangement(2, {{0, 2}})); }
inline Arrangement three_lines() { return enumerate_simple(3).front(); }

inline std::vector<CellRef> all_cells(const Arrangement& arr) {
    const auto t = cells(arr.map());
    std::vector<CellRef> out(t.vertices);
    out.insert(out.end(), t.edges.begin(), t.edges.end());
    out.insert(out.end(), t.faces.begin(), t.faces.end());
    return out;
}

}  // namespace levi::testing
