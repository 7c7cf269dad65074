#pragma once

// Brute-force counterparts used to check the extension algorithm: exhaustive
// search for pseudolines through two cells, enumeration of small simple
// arrangements from wiring diagrams, random arrangements, canonical forms.

#include "levi/arrangement.hpp"
#include "levi/trace.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace levi {

/// Cells of the old arrangement met by a new pseudoline, in cyclic order,
/// normalized to the least rotation of the sequence or its reverse.
using Signature = std::vector<CellRef>;

Signature canonical_signature(std::vector<CellRef> cells);
Signature signature_of(const Arrangement& arr, const Trace& trace);

/// Quotient edge count + 2.
int default_max_len(const Arrangement& arr);

/// Every simple closed curve through p and q that crosses each pseudoline once,
/// found by depth-first search over the faces of the cover. A face is entered
/// at most once; a walk has at most max_len crossings.
std::set<Signature> brute_extend(const Arrangement& arr, const CellRef& p, const CellRef& q, int max_len);

/// Byte string that is equal for two arrangements iff they are isomorphic up to
/// dart relabeling and curve renaming.
using CanonicalForm = std::string;
CanonicalForm canonical_form(const Arrangement& arr);
bool iso(const Arrangement& a, const Arrangement& b);

/// One step of a wiring diagram: the wires at levels [level, level + size)
/// cross at one point and reverse their order. size 2 is a simple crossing.
struct WiringStep {
    int level = 0;
    int size = 2;
};

/// Closes a wiring diagram antipodally. Every pair of wires must cross exactly
/// once over the whole diagram. n = 0 and n = 1 give the trivial arrangements.
Arrangement wiring_arrangement(int n, const std::vector<WiringStep>& steps);

/// One reduced word of the reversal permutation per commutation class.
std::vector<std::vector<int>> simple_wiring_words(int n);

/// Isomorphism classes of simple arrangements of n pseudolines, 1 <= n <= 6.
std::vector<Arrangement> enumerate_simple(int n);

enum class RandomMode { simple, merged };

/// Deterministic in (n, seed, mode). Merged mode contracts some groups of
/// crossings into single points; its first group has at least three wires when n >= 3.
Arrangement random_arrangement(int n, std::uint64_t seed, RandomMode mode);

}  // namespace levi
