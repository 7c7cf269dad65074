#pragma once

// Text serialization of arrangements.
//
//   psl 1
//   darts 8
//   sigma: ...
//   alpha: ...
//   tau: ...
//   labels: ...          one curve id per dart
//   name face:0 outer    optional, any number
//
// Blank lines and lines starting with '#' are ignored.

#include "levi/arrangement.hpp"

#include <map>
#include <string>

namespace levi {

struct PslDocument {
    int version = 1;
    Arrangement arrangement;
    std::map<std::string, std::string> names;  // cell text -> name
};

/// Relabels darts canonically before printing, so isomorphic inputs with
/// equal labels print identically.
std::string print_psl(const Arrangement& arr);
std::string print_psl(const PslDocument& doc);

/// Throws ParseError(line, reason); InvalidMap is passed through.
PslDocument parse_psl_document(const std::string& text);
Arrangement parse_psl(const std::string& text);

/// Per curve, the quotient vertices it visits in order; per vertex, the curves
/// through it in rotation order. Vertex ids follow `stats --cells`. Export only:
/// the rotation at a vertex is not recoverable from this form.
std::string export_crossing_lists(const Arrangement& arr);

}  // namespace levi
