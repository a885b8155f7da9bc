#include "toric/manifold.hpp"

#include "toric/error.hpp"

#include <charconv>
#include <vector>

namespace toric {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

std::size_t require_positive(std::size_t v, const char* name) {
  if (v < 1) bad(std::string(name) + " must be positive");
  return v;
}

std::vector<std::size_t> parse_numbers(std::string_view text) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    const auto colon = text.find(':');
    const auto part = text.substr(0, colon);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) bad("bad manifold parameter '" + std::string(part) + "'");
    out.push_back(v);
    if (colon == std::string_view::npos) break;
    text.remove_prefix(colon + 1);
  }
  return out;
}

}  // namespace

ManifoldSpec ManifoldSpec::sphere(std::size_t d) { return {ManifoldKind::Sphere, require_positive(d, "d"), 1, 0}; }

ManifoldSpec ManifoldSpec::lens(std::size_t d, std::size_t p) {
  return {ManifoldKind::Lens, require_positive(d, "d"), require_positive(p, "p"), 0};
}

ManifoldSpec ManifoldSpec::product(std::size_t d) { return {ManifoldKind::ProductS1S2d, require_positive(d, "d"), 1, 0}; }

ManifoldSpec ManifoldSpec::tk_sphere(std::size_t k, std::size_t d) {
  return {ManifoldKind::TkSphere, require_positive(d, "d"), 1, require_positive(k, "k")};
}

ManifoldSpec ManifoldSpec::cosphere(std::size_t d) {
  if (d < 2) bad("the cosphere bundle of T^d needs d >= 2");
  return {ManifoldKind::CosphereTorus, d, 1, 0};
}

std::size_t ManifoldSpec::torus_rank() const {
  switch (kind) {
    case ManifoldKind::Sphere:
    case ManifoldKind::Lens:
    case ManifoldKind::CosphereTorus: return d;
    case ManifoldKind::ProductS1S2d: return d + 1;
    case ManifoldKind::TkSphere: return d + k;
  }
  return d;
}

std::size_t ManifoldSpec::extra_count() const {
  switch (kind) {
    case ManifoldKind::ProductS1S2d: return 1;
    case ManifoldKind::TkSphere: return k;
    case ManifoldKind::CosphereTorus: return d;
    default: return 0;
  }
}

std::string ManifoldSpec::name() const {
  switch (kind) {
    case ManifoldKind::Sphere: return "sphere:" + std::to_string(d);
    case ManifoldKind::Lens: return "lens:" + std::to_string(d) + ":" + std::to_string(p);
    case ManifoldKind::ProductS1S2d: return "product:" + std::to_string(d);
    case ManifoldKind::TkSphere: return "tk:" + std::to_string(k) + ":" + std::to_string(d);
    case ManifoldKind::CosphereTorus: return "cosphere:" + std::to_string(d);
  }
  return "";
}

ManifoldSpec parse_manifold(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) bad("manifold must look like 'sphere:3'");
  const auto kind = text.substr(0, colon);
  const auto n = parse_numbers(text.substr(colon + 1));
  auto want = [&](std::size_t count) {
    if (n.size() != count) bad("wrong number of parameters for '" + std::string(kind) + "'");
  };
  if (kind == "sphere") return want(1), ManifoldSpec::sphere(n[0]);
  if (kind == "lens") return want(2), ManifoldSpec::lens(n[0], n[1]);
  if (kind == "product" || kind == "s1xs2d") return want(1), ManifoldSpec::product(n[0]);
  if (kind == "tk") return want(2), ManifoldSpec::tk_sphere(n[0], n[1]);
  if (kind == "cosphere") return want(1), ManifoldSpec::cosphere(n[0]);
  bad("unknown manifold '" + std::string(kind) + "'");
}

Fiber make_fiber(const ManifoldSpec& spec, RatVector levels, RatVector extra) {
  const std::size_t want_levels = spec.kind == ManifoldKind::CosphereTorus ? 0 : spec.d;
  if (levels.size() != want_levels)
    bad("expected " + std::to_string(want_levels) + " levels for " + spec.name());
  if (extra.size() != spec.extra_count())
    bad("expected " + std::to_string(spec.extra_count()) + " extra coordinates for " + spec.name());
  Rational total = 0;
  for (const auto& c : levels) {
    if (c <= 0 || c >= 1) throw Error(ErrorCode::InvariantViolation, "levels |z_j|^2 must lie in (0, 1)");
    total += c;
  }
  for (const auto& e : extra) total += e * e;
  if (total != 1)
    throw Error(ErrorCode::InvariantViolation, "levels do not satisfy the sphere identity: sum is " + format_rational(total));
  return Fiber{spec, std::move(levels), std::move(extra)};
}

}  // namespace toric
