#pragma once

#include "toric/catalog.hpp"
#include "toric/cone.hpp"
#include "toric/numerics/report.hpp"
#include "toric/polytope.hpp"
#include "toric/probes.hpp"
#include "toric/reeb_slice.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace toric::io {

using Json = nlohmann::json;

/// Malformed input, located by a JSON pointer into the offending document.
class InputError : public std::runtime_error {
 public:
  InputError(std::string pointer, const std::string& message)
      : std::runtime_error(message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const Integer& v);
Json to_json(const IntVector& v);
// Rationals are "p/q" strings ("p" when integral).
Json to_json(const Rational& v);
Json to_json(const RatVector& v);

Json to_json(const ConeClassification& c);
Json to_json(const Cone& c);
Json to_json(const ReebSynthesis& r);
Json to_json(const LabeledPolytope& p);
Json to_json(const Probe& p);
Json to_json(const ProbeVerdict& v);
Json to_json(const Fiber& f);
Json to_json(const Verdict& v);
Json to_json(const numerics::VerificationReport& r);

Integer integer_from(const Json& j, const std::string& pointer);
IntVector int_vector_from(const Json& j, const std::string& pointer);
Rational rational_from(const Json& j, const std::string& pointer);
RatVector rat_vector_from(const Json& j, const std::string& pointer);

/// {"dim": d, "normals": [[...], ...]}
Cone cone_from(const Json& j);
/// {"dim": n, "facets": [{"normal": [...], "constant": "p/q", "label": m}, ...]}
LabeledPolytope polytope_from(const Json& j);
/// {"spec": "sphere:3", "levels": ["1/3", ...], "extra": [...]}
Fiber fiber_from(const Json& j);

}  // namespace toric::io
