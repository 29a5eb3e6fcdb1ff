#include "ncqm/rational.hpp"

#include "ncqm/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ncqm {

namespace {

bool all_digits(std::string_view text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }

  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits.front() == '+' || num_digits.front() == '-')) {
    num_digits.remove_prefix(1);
  }
  if (!all_digits(num_digits)) {
    throw DomainError(ErrorKind::ParseError,
                      "not a rational: \"" + std::string(text) + "\"");
  }

  BigInt numerator{std::string(num)};
  BigInt denominator = 1;
  if (!den.empty() || text.find('/') != std::string_view::npos) {
    if (!all_digits(den)) {
      throw DomainError(ErrorKind::ParseError,
                        "not a rational: \"" + std::string(text) + "\"");
    }
    denominator = BigInt(std::string(den));
    if (denominator == 0) {
      throw DomainError(ErrorKind::ParseError,
                        "zero denominator: \"" + std::string(text) + "\"");
    }
  }
  return Rational(numerator, denominator);
}

std::string to_string(const Rational& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace ncqm
