#include "toric/rational.hpp"

#include "toric/error.hpp"

#include <cctype>

namespace toric {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::InvalidCone: return "InvalidCone";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotReebType: return "NotReebType";
    case ErrorCode::NoEdge: return "NoEdge";
    case ErrorCode::EmptySlice: return "EmptySlice";
    case ErrorCode::Collinear: return "Collinear";
    case ErrorCode::InvalidPolytope: return "InvalidPolytope";
    case ErrorCode::InvalidEntry: return "InvalidEntry";
    case ErrorCode::NotTransverse: return "NotTransverse";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::OffManifold: return "OffManifold";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotAReductionPair: return "NotAReductionPair";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::OutOfBall: return "OutOfBall";
    case ErrorCode::DegenerateLevel: return "DegenerateLevel";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::SingularTangentFrame: return "SingularTangentFrame";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::BlowUp: return "BlowUp";
    case ErrorCode::ChartSingularity: return "ChartSingularity";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational make_rational(const Integer& n, const Integer& d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  return d < 0 ? Rational(-n, -d) : Rational(n, d);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_text(num))
    throw Error(ErrorCode::InvalidArgument, "not a rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_text(den))
    throw Error(ErrorCode::InvalidArgument, "not a rational: '" + std::string(text) + "'");
  const Integer q = parse_integer(den);
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(num), q);
}

RatVector parse_rational_list(std::string_view text) {
  RatVector out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_rational(const Rational& value) {
  if (denom(value) == 1) return numer(value).str();
  return numer(value).str() + "/" + denom(value).str();
}

Integer floor_div(const Rational& r) {
  const Integer n = numer(r), d = denom(r);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Integer ceil_div(const Rational& r) { return -floor_div(-r); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace toric
