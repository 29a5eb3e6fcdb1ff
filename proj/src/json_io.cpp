#include "ncqm/json_io.hpp"

#include "ncqm/errors.hpp"

namespace ncqm {

namespace {

const Json& require_field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(ErrorKind::ParseError, what + " is missing field \"" + key + "\"");
  }
  return j.at(key);
}

Rational rational_field(const Json& j, const char* key, const std::string& what) {
  return rational_from_json(require_field(j, key, what));
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const RatMatrix& matrix) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < matrix.cols(); ++j) row.push_back(to_string(matrix(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SectorLabel& label) {
  return Json{{"hbar", to_string(label.hbar)},
              {"theta", to_string(label.theta)},
              {"b", to_string(label.b_in)}};
}

Json to_json(const CentralCharacterVector& chi) {
  return Json{{"alpha1", to_string(chi.alpha1)},
              {"alpha2", to_string(chi.alpha2)},
              {"alpha3", to_string(chi.alpha3)}};
}

Json to_json(const CommutatorMatrix& omega) { return to_json(omega.entries()); }

Json to_json(const RealizationMatrix& matrix) { return to_json(matrix.entries()); }

Json to_json(const GroupElement& g) {
  return Json{{"theta", to_string(g.theta)}, {"phi", to_string(g.phi)},
              {"psi", to_string(g.psi)},     {"q1", to_string(g.q1)},
              {"q2", to_string(g.q2)},       {"p1", to_string(g.p1)},
              {"p2", to_string(g.p2)}};
}

Json to_json(const WeylHeisenbergElement& g) {
  return Json{{"theta", to_string(g.theta)},
              {"q1", to_string(g.q1)},
              {"q2", to_string(g.q2)},
              {"p1", to_string(g.p1)},
              {"p2", to_string(g.p2)}};
}

Json to_json(const Functional& l) {
  return Json{{"a1", to_string(l.a1)}, {"a2", to_string(l.a2)}, {"a3", to_string(l.a3)},
              {"b1", to_string(l.b1)}, {"b2", to_string(l.b2)}, {"c1", to_string(l.c1)},
              {"c2", to_string(l.c2)}};
}

Json to_json(const OrbitData& data) {
  Json j{{"rank", data.rank}, {"kirillov", to_json(data.kirillov)}};
  j["degenerate"] = !data.label.has_value();
  j["label"] = data.label.has_value() ? to_json(*data.label) : Json(nullptr);
  return j;
}

Json to_json(const EquivalenceVerdict& verdict) {
  return Json{{"status", std::string(equivalence_status_name(verdict.status))},
              {"reason", verdict.reason}};
}

Json to_json(const ReductionVerdict& verdict) {
  return Json{{"darboux_exists", verdict.darboux_exists},
              {"conjugation_possible", verdict.conjugation_possible},
              {"sectors_equivalent", verdict.sectors_equivalent},
              {"narrative", verdict.narrative}};
}

Json to_json(const SpectrumResult& spectrum) {
  return Json{{"frequencies", spectrum.frequencies}, {"tolerance", spectrum.tolerance}};
}

Json to_json(const GaussianRational& value) {
  return Json{{"re", to_string(value.re)}, {"im", to_string(value.im)}};
}

Json to_json(const PolySymbol& symbol) {
  Json terms = Json::array();
  for (const auto& [exponents, coefficient] : symbol.terms()) {
    Json record;
    record["exponents"] = exponents;
    record["re"] = to_string(coefficient.re);
    record["im"] = to_string(coefficient.im);
    terms.push_back(std::move(record));
  }
  return terms;
}

Json to_json(const ShadowReport& report) {
  return Json{{"label", to_json(report.label)},
              {"intertwining_verified", report.intertwining_verified},
              {"samples", report.samples},
              {"sectors_equivalent", report.sectors_equivalent},
              {"narrative", report.narrative}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw DomainError(ErrorKind::ParseError,
                    "expected a rational as \"p/q\" string or integer");
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw DomainError(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) {
    throw DomainError(ErrorKind::ParseError, "matrix rows must be non-empty arrays");
  }
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) {
      throw DomainError(ErrorKind::ParseError, "matrix rows must all have equal length");
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(row.at(k));
  }
  return m;
}

SectorLabel label_from_json(const Json& j) {
  return SectorLabel{rational_field(j, "hbar", "sector label"),
                     rational_field(j, "theta", "sector label"),
                     rational_field(j, "b", "sector label")};
}

GroupElement group_element_from_json(const Json& j) {
  const std::string what = "group element";
  return GroupElement{rational_field(j, "theta", what), rational_field(j, "phi", what),
                      rational_field(j, "psi", what),   rational_field(j, "q1", what),
                      rational_field(j, "q2", what),    rational_field(j, "p1", what),
                      rational_field(j, "p2", what)};
}

Functional functional_from_json(const Json& j) {
  const std::string what = "functional";
  return Functional{rational_field(j, "a1", what), rational_field(j, "a2", what),
                    rational_field(j, "a3", what), rational_field(j, "b1", what),
                    rational_field(j, "b2", what), rational_field(j, "c1", what),
                    rational_field(j, "c2", what)};
}

PolySymbol polysymbol_from_json(const Json& j) {
  if (!j.is_array()) {
    throw DomainError(ErrorKind::ParseError, "polynomial must be an array of term records");
  }
  PolySymbol p;
  for (const Json& record : j) {
    const Json& exps = require_field(record, "exponents", "polynomial term");
    if (!exps.is_array() || exps.size() != PolySymbol::kVariables) {
      throw DomainError(ErrorKind::ParseError,
                        "polynomial term needs exactly 4 exponents");
    }
    PolySymbol::Exponents e{};
    for (std::size_t i = 0; i < PolySymbol::kVariables; ++i) {
      if (!exps.at(i).is_number_unsigned()) {
        throw DomainError(ErrorKind::ParseError,
                          "polynomial exponents must be non-negative integers");
      }
      e[i] = exps.at(i).get<std::uint32_t>();
    }
    GaussianRational c(rational_field(record, "re", "polynomial term"),
                       rational_field(record, "im", "polynomial term"));
    p = p + PolySymbol::monomial(e, c);
  }
  return p;
}

std::vector<std::uint64_t> quanta_from_text(const std::string& text) {
  std::vector<std::uint64_t> quanta;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError(ErrorKind::ParseError,
                        "quanta must be a comma-separated list of non-negative integers");
    }
    quanta.push_back(std::stoull(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return quanta;
}

Json parse_json_text(const std::string& text, const std::string& what) {
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    throw DomainError(ErrorKind::ParseError, what + " is not valid JSON");
  }
  return parsed;
}

}  // namespace ncqm
