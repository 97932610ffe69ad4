#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "posetpoly/fcalc.hpp"
#include "posetpoly/family.hpp"
#include "posetpoly/polytopes.hpp"
#include "posetpoly/poset.hpp"

namespace posetpoly {

// {"labels":[...],"covers":[["a","b"],...]}, labels in element order and
// cover pairs sorted by label. Single line, no spaces.
std::string poset_to_json(const Poset& p);
// Accepts any acyclic relation list under "covers". Throws ParseError on
// malformed JSON, or the usual Poset construction errors.
Poset poset_from_json(std::string_view text);

// True if text is a JSON object with a "labels" member.
bool looks_like_poset_json(std::string_view text);

// FNV-1a over the canonical JSON, as 16 hex digits.
std::uint64_t poset_hash(const Poset& p);
std::string hex64(std::uint64_t h);

enum class Format { Json, Csv };

std::string describe_report(const Poset& p, Format format);
std::string fvector_report(const Poset& p, PolytopeKind kind, Method method, const FPoly& f,
                           Format format);
std::string compare_report(const TheoremReport& r, Format format);
std::string decompose_report(const Poset& p);

enum class ExportWhat { VRep, HRep, Faces };
std::string export_polytope(const Poset& p, PolytopeKind kind, ExportWhat what);

}  // namespace posetpoly
