#pragma once

#include "ncqm/darboux.hpp"
#include "ncqm/group.hpp"
#include "ncqm/sector.hpp"
#include "ncqm/star.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ncqm {

using Json = nlohmann::ordered_json;

// Serialization conventions: rationals as canonical "p/q" strings, matrices as
// nested row arrays of rational strings, polynomial symbols as graded-lex
// ordered term records. Key order is fixed by construction, so identical
// values serialize to identical bytes.

Json to_json(const Rational& value);
Json to_json(const RatMatrix& matrix);
Json to_json(const SectorLabel& label);
Json to_json(const CentralCharacterVector& chi);
Json to_json(const CommutatorMatrix& omega);
Json to_json(const RealizationMatrix& matrix);
Json to_json(const GroupElement& g);
Json to_json(const WeylHeisenbergElement& g);
Json to_json(const Functional& l);
Json to_json(const OrbitData& data);
Json to_json(const EquivalenceVerdict& verdict);
Json to_json(const ReductionVerdict& verdict);
Json to_json(const SpectrumResult& spectrum);
Json to_json(const GaussianRational& value);
Json to_json(const PolySymbol& symbol);
Json to_json(const ShadowReport& report);

// Parsers throw DomainError{ParseError} on structural problems and propagate
// rational-syntax errors from parse_rational.

Rational rational_from_json(const Json& j);
RatMatrix matrix_from_json(const Json& j);
SectorLabel label_from_json(const Json& j);
GroupElement group_element_from_json(const Json& j);
Functional functional_from_json(const Json& j);
PolySymbol polysymbol_from_json(const Json& j);
std::vector<std::uint64_t> quanta_from_text(const std::string& text);

/// Parse a JSON document from text; ParseError on malformed input.
Json parse_json_text(const std::string& text, const std::string& what);

}  // namespace ncqm
