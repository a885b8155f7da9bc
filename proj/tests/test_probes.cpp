#include "doctest.h"

#include "oracles/known_cones.hpp"
#include "oracles/lattice_oracles.hpp"
#include "oracles/probe_oracle.hpp"
#include "toric/error.hpp"
#include "toric/probes.hpp"

#include <random>

using namespace toric;
using namespace toric::testing;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

LabeledPolytope simplex2() { return oracle::standard_simplex(2); }

// Facet index of {y >= 0} in the standard simplex.
constexpr std::size_t kBottom = 1;

LabeledPolytope unit_square() {
  return LabeledPolytope::make(2, {{iv({1, 0}), 0, 1}, {iv({0, 1}), 0, 1}, {iv({-1, 0}), -1, 1}, {iv({0, -1}), -1, 1}});
}

LabeledPolytope segment(long long a, long long b, long long label_lo = 1, long long label_hi = 1) {
  return LabeledPolytope::make(1, {{iv({1}), a, label_lo}, {iv({-1}), -b, label_hi}});
}

std::vector<RatVector> undisplaced(const std::vector<ProbeVerdict>& vs) {
  std::vector<RatVector> out;
  for (const auto& v : vs)
    if (!v.displaceable) out.push_back(v.point);
  return out;
}

}  // namespace

TEST_CASE("polytope validation") {
  const LabeledPolytope s = simplex2();
  CHECK(s.vertices() == std::vector<RatVector>{rv({"0", "0"}), rv({"0", "1"}), rv({"1", "0"})});
  CHECK(code_of([] { LabeledPolytope::make(2, {{iv({1, 0}), 0, 1}, {iv({0, 1}), 0, 1}}); }) ==
        ErrorCode::InvalidPolytope);
  CHECK(code_of([] { LabeledPolytope::make(1, {{iv({1}), 0, 0}, {iv({-1}), -1, 1}}); }) == ErrorCode::InvalidPolytope);
  CHECK(code_of([] { LabeledPolytope::make(1, {{iv({1}), 1, 1}, {iv({-1}), -1, 1}}); }) == ErrorCode::InvalidPolytope);
  // Square pyramid apex lies on four facets: not simple.
  CHECK(code_of([] {
          LabeledPolytope::make(3, {{iv({0, 0, 1}), 0, 1},
                                    {iv({1, 0, -1}), -1, 1},
                                    {iv({-1, 0, -1}), -1, 1},
                                    {iv({0, 1, -1}), -1, 1},
                                    {iv({0, -1, -1}), -1, 1}});
        }) == ErrorCode::InvalidPolytope);
  CHECK(code_of([] {
          LabeledPolytope::make(2, {{iv({1, 0}), 0, 1}, {iv({0, 1}), 0, 1}, {iv({-1, -1}), -1, 1}, {iv({-1, -1}), -2, 1}});
        }) == ErrorCode::InvalidPolytope);
}

TEST_CASE("probe lengths") {
  const LabeledPolytope s = simplex2();
  CHECK(probe_length(s, kBottom, rv({"1/4", "0"}), iv({0, 1})) == Rational(3, 4));
  CHECK(probe_length(s, kBottom, rv({"1/3", "0"}), iv({0, 1})) == Rational(2, 3));
  CHECK(probe_length(unit_square(), kBottom, rv({"1/2", "0"}), iv({0, 1})) == 1);
  CHECK(code_of([&] { probe_length(s, kBottom, rv({"0", "0"}), iv({0, 1})); }) == ErrorCode::InvalidEntry);
  CHECK(code_of([&] { probe_length(s, kBottom, rv({"1/4", "1/4"}), iv({0, 1})); }) == ErrorCode::InvalidEntry);
  CHECK(code_of([&] { probe_length(s, kBottom, rv({"1/4", "0"}), iv({0, 2})); }) == ErrorCode::NotTransverse);
}

TEST_CASE("displaces") {
  const LabeledPolytope s = simplex2();
  const Probe a = make_probe(s, kBottom, rv({"1/4", "0"}), iv({0, 1}));
  CHECK(displaces(s, a, rv({"1/4", "1/4"})));
  CHECK_FALSE(displaces(s, a, rv({"1/4", "1/2"})));
  CHECK_FALSE(displaces(s, a, rv({"1/5", "1/4"})));
  const Probe b = make_probe(s, kBottom, rv({"1/3", "0"}), iv({0, 1}));
  CHECK_FALSE(displaces(s, b, rv({"1/3", "1/3"})));
  CHECK(code_of([&] { displaces(s, a, rv({"1/4", "0"})); }) == ErrorCode::NotInterior);

  // Exit through a vertex disqualifies the probe.
  const LabeledPolytope rect = LabeledPolytope::make(
      2, {{iv({1, 0}), 0, 1}, {iv({0, 1}), 0, 1}, {iv({-1, 0}), -1, 1}, {iv({0, -1}), parse_rational("-1/2"), 1}});
  const Probe corner = make_probe(rect, 1, rv({"1/2", "0"}), iv({1, 1}));
  CHECK(corner.length == Rational(1, 2));
  CHECK_FALSE(displaces(rect, corner, rv({"5/8", "1/8"})));

  // Entry facet with label 2 never displaces.
  const LabeledPolytope seg = segment(0, 1, 2, 1);
  const Probe from_lo = make_probe(seg, 0, rv({"0"}), iv({1}));
  CHECK_FALSE(displaces(seg, from_lo, rv({"1/4"})));
  const Probe from_hi = make_probe(seg, 1, rv({"1"}), iv({-1}));
  CHECK(displaces(seg, from_hi, rv({"3/4"})));
}

TEST_CASE("find_probe") {
  const LabeledPolytope s = simplex2();
  const auto hit = find_probe(s, rv({"1/4", "1/4"}), 2);
  REQUIRE(hit.has_value());
  CHECK(displaces(s, *hit, rv({"1/4", "1/4"})));
  for (int r = 1; r <= 4; ++r) CHECK_FALSE(find_probe(s, rv({"1/3", "1/3"}), r).has_value());

  const auto seg = find_probe(segment(0, 1), rv({"1/4"}), 1);
  REQUIRE(seg.has_value());
  CHECK(seg->facet == 0);
  CHECK(seg->direction == iv({1}));
  CHECK(seg->entry == rv({"0"}));
  CHECK(seg->length == 1);
  CHECK_FALSE(find_probe(segment(0, 1), rv({"1/2"}), 3).has_value());
}

TEST_CASE("scan_grid examples") {
  const auto s3 = scan_grid(simplex2(), 3, 3);
  CHECK(s3.size() == 1);
  CHECK(undisplaced(s3) == std::vector<RatVector>{rv({"1/3", "1/3"})});

  CHECK(undisplaced(scan_grid(segment(0, 1), 4, 1)) == std::vector<RatVector>{rv({"1/2"})});
  const auto s4 = scan_grid(simplex2(), 4, 3);
  CHECK(s4.size() == 3);
  CHECK(undisplaced(s4).empty());
  for (const auto& v : s4) CHECK(verify_verdict(simplex2(), v));
}

TEST_CASE("scan_grid agrees with the brute-force oracle") {
  const std::vector<LabeledPolytope> polys{
      simplex2(), oracle::standard_simplex(3), unit_square(), segment(0, 3, 1, 2),
      LabeledPolytope::make(2, {{iv({1, 0}), 0, 1}, {iv({0, 1}), 0, 1}, {iv({0, -1}), -1, 1}, {iv({-1, -1}), -2, 1}}),
      LabeledPolytope::make(2, {{iv({1, 0}), 0, 2}, {iv({0, 1}), 0, 1}, {iv({-1, -2}), -2, 1}})};
  for (const auto& p : polys)
    for (int q : {3, 4, 5})
      for (const auto& v : scan_grid(p, q, 2)) {
        CHECK(v.displaceable == oracle::brute_force_displaced(p, v.point, 2));
        CHECK(verify_verdict(p, v));
      }
}

TEST_CASE("property: verdicts are invariant under affine lattice maps") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> shift(-3, 3);
  const LabeledPolytope base = simplex2();
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix A = oracle::random_unimodular(2, rng, 2);
    RatVector b{Rational(shift(rng)), Rational(shift(rng))};
    const LabeledPolytope p = base.affine_image(A, b);
    auto image = [&](const RatVector& x) {
      RatVector y = b;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) y[i] += A(i, k) * x[k];
      return y;
    };
    for (const auto& v : scan_grid(base, 5, 2)) {
      if (!v.displaceable) continue;
      // Transport the witness and recheck it on the image.
      const Probe& w = *v.witness;
      const IntVector dir = A.apply(w.direction);
      const RatVector entry = image(w.entry);
      std::size_t f = 0;
      while (!p.in_facet_interior(f, entry)) ++f;
      const Probe moved = make_probe(p, f, entry, dir);
      CHECK(moved.length == w.length);
      CHECK(displaces(p, moved, image(v.point)));
    }
    CHECK_FALSE(find_probe(p, image(rv({"1/3", "1/3"})), 4).has_value());
  }
}

TEST_CASE("property: half-length criterion is strict and symmetric") {
  const LabeledPolytope s = oracle::standard_simplex(3);
  for (const auto& v : scan_grid(s, 6, 2)) {
    if (!v.displaceable) continue;
    const Probe& w = *v.witness;
    // Reflecting across the midpoint gives parameter length - s > length / 2.
    const Rational s2 = w.length - v.parameter;
    CHECK(s2 * 2 > w.length);
    RatVector mirror = w.entry;
    for (std::size_t k = 0; k < mirror.size(); ++k) mirror[k] += s2 * w.direction[k];
    CHECK_FALSE(displaces(s, w, mirror));
  }
}

TEST_CASE("property: larger search radius never loses a probe") {
  const LabeledPolytope p =
      LabeledPolytope::make(2, {{iv({1, 0}), 0, 1}, {iv({0, 1}), 0, 1}, {iv({0, -1}), -1, 1}, {iv({-1, -1}), -2, 1}});
  const auto r1 = scan_grid(p, 6, 1), r2 = scan_grid(p, 6, 2), r3 = scan_grid(p, 6, 3);
  REQUIRE(r1.size() == r2.size());
  REQUIRE(r2.size() == r3.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    if (r1[i].displaceable) CHECK(r2[i].displaceable);
    if (r2[i].displaceable) CHECK(r3[i].displaceable);
  }
}
