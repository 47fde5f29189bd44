#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "smine/model.hpp"
#include "test_helpers.hpp"

using namespace smine;

namespace {

StateRecord active(double st, double et) { return active_state(st, et, fixtures::home()); }

// small-angle arc length along the equator, independent of haversine_m
double equator_arc_m(double dlon_deg) {
  return kEarthRadiusM * dlon_deg * std::numbers::pi / 180.0;
}

}  // namespace

TEST_CASE("interval_overlap requires shared positive-length duration") {
  CHECK(interval_overlap(active(0, 5), active(3, 8)));
  CHECK_FALSE(interval_overlap(active(0, 5), active(5, 8)));  // boundary touch

  // containment case, cross-checked by point sampling
  const auto outer = active(9, 12);
  const auto inner = active(10, 11);
  bool shared_point = false;
  for (double t = 8.5; t <= 12.5; t += 0.01)
    if (t > 9 && t < 12 && t > 10 && t < 11) shared_point = true;
  CHECK(shared_point);
  CHECK(interval_overlap(outer, inner));

  CHECK_THROWS_AS(interval_overlap(StateRecord{StateKind::ready, {}, {}, {}}, active(0, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(interval_overlap(active(0, 1), StateRecord{StateKind::start, 1.0, {}, fixtures::home()}),
                  std::invalid_argument);
}

TEST_CASE("interval_overlap is symmetric") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(0.0, 24.0);
  for (int i = 0; i < 300; ++i) {
    double a1 = u(rng), a2 = u(rng), b1 = u(rng), b2 = u(rng);
    const auto a = active(std::min(a1, a2), std::max(a1, a2));
    const auto b = active(std::min(b1, b2), std::max(b1, b2));
    CHECK(interval_overlap(a, b) == interval_overlap(b, a));
  }
}

TEST_CASE("active duration is exactly end minus start") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 24.0);
  for (int i = 0; i < 100; ++i) {
    double a = u(rng), b = u(rng);
    const auto rec = active(std::min(a, b), std::max(a, b));
    CHECK(rec.duration() == *rec.end_ts - *rec.start_ts);
  }
  CHECK_THROWS_AS((StateRecord{StateKind::ready, {}, {}, {}}.duration()), std::invalid_argument);
}

TEST_CASE("within_radius uses great-circle distance against the smaller radius") {
  const Location origin{0.0, 0.0, 100.0};
  CHECK(within_radius(origin, origin));  // zero distance

  const Location east_small{0.0, 0.001, 100.0};
  const double expected = equator_arc_m(0.001);  // ~111.19 m
  CHECK(std::abs(haversine_m(origin, east_small) - expected) < 1e-6);
  CHECK_FALSE(within_radius(origin, east_small));

  const Location origin_wide{0.0, 0.0, 200.0};
  const Location east_wide{0.0, 0.001, 200.0};
  CHECK(within_radius(origin_wide, east_wide));

  // the smaller radius governs
  CHECK_FALSE(within_radius(origin_wide, east_small));

  CHECK_THROWS_AS(within_radius(Location{91.0, 0.0, 10.0}, origin), std::invalid_argument);
  CHECK_THROWS_AS(within_radius(origin, Location{0.0, 181.0, 10.0}), std::invalid_argument);
  CHECK_THROWS_AS(within_radius(origin, Location{0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("within_radius is symmetric for equal radii") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> lat(-89.0, 89.0), lon(-179.0, 179.0), r(1.0, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double radius = r(rng);
    const Location a{lat(rng), lon(rng), radius};
    const Location b{lat(rng), lon(rng), radius};
    CHECK(within_radius(a, b) == within_radius(b, a));
  }
}

TEST_CASE("env_satisfies compares named values") {
  CHECK(env_satisfies(Environment{"temperature", 30.0, "degree", 0.0, fixtures::home()},
                      EnvConstraint{"temperature", Comparator::geq, 28.0}));
  CHECK(env_satisfies(Environment{"temperature", 25.0, "degree", 0.0, fixtures::home()},
                      EnvConstraint{"temperature", Comparator::eq, 25.0}));
  CHECK_FALSE(env_satisfies(Environment{"humidity", 30.0, "%", 0.0, fixtures::home()},
                            EnvConstraint{"temperature", Comparator::geq, 28.0}));

  CHECK(env_satisfies(Environment{"x", 1.0, "", 0.0, {}}, EnvConstraint{"x", Comparator::lt, 2.0}));
  CHECK_FALSE(env_satisfies(Environment{"x", 2.0, "", 0.0, {}}, EnvConstraint{"x", Comparator::lt, 2.0}));
  CHECK(env_satisfies(Environment{"x", 2.0, "", 0.0, {}}, EnvConstraint{"x", Comparator::leq, 2.0}));
  CHECK(env_satisfies(Environment{"x", 3.0, "", 0.0, {}}, EnvConstraint{"x", Comparator::gt, 2.0}));
}

TEST_CASE("env_satisfies holds for a constraint built from the value itself") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const Environment e{"q", u(rng), "unit", 1.0, fixtures::home()};
    CHECK(env_satisfies(e, EnvConstraint{"q", Comparator::eq, e.value}));
  }
}

TEST_CASE("validate_service accepts the smart-home fixtures") {
  CHECK(validate_service(fixtures::air_conditioner()).empty());
  CHECK(validate_service(fixtures::stove()).empty());
  CHECK(validate_service(fixtures::tv()).empty());
  CHECK(validate_service(fixtures::fridge()).empty());
}

TEST_CASE("validate_service reports each broken invariant") {
  auto has = [](const std::vector<Violation>& vs, const std::string& needle) {
    for (const auto& v : vs)
      if (v.message.find(needle) != std::string::npos) return true;
    return false;
  };

  SUBCASE("no operations") {
    auto s = fixtures::stove();
    s.operations.clear();
    const auto vs = validate_service(s);
    CHECK(has(vs, "operations empty"));
    CHECK_FALSE(is_valid(vs));
  }
  SUBCASE("negative duration") {
    auto s = fixtures::stove();
    s.states = {active_state(14.5, 13.0, fixtures::kitchen())};
    CHECK(has(validate_service(s), "negative duration"));
  }
  SUBCASE("ready state with payload") {
    auto s = fixtures::stove();
    s.states.push_back(StateRecord{StateKind::ready, 1.0, {}, fixtures::home()});
    const auto vs = validate_service(s);
    CHECK(has(vs, "ready state carries timestamps"));
    CHECK(has(vs, "ready state carries a location"));
  }
  SUBCASE("active state missing location") {
    auto s = fixtures::stove();
    s.states = {StateRecord{StateKind::active, 1.0, 2.0, {}}};
    CHECK(has(validate_service(s), "location missing"));
  }
  SUBCASE("out-of-range condition tokens") {
    auto s = fixtures::stove();
    s.operations[0].precondition.tokens = {0, 5, 12};
    CHECK(has(validate_service(s), "token outside [0, 9]"));
    s.operations[0].precondition.tokens = {1, 2, 3, 4};
    CHECK(has(validate_service(s), "more than 3 condition tokens"));
  }
  SUBCASE("too many parameters") {
    auto s = fixtures::stove();
    for (int i = 0; i < 6; ++i)
      s.operations[0].inputs.push_back({"p" + std::to_string(i), "int", ""});
    CHECK(has(validate_service(s), "more than 5 input parameters"));
  }
  SUBCASE("duplicate operation names") {
    auto s = fixtures::stove();
    s.operations.push_back(s.operations[0]);
    CHECK(has(validate_service(s), "duplicate operation name"));
  }
  SUBCASE("overlapping active states") {
    auto s = fixtures::stove();
    s.states = {active_state(1.0, 5.0, fixtures::home()), active_state(4.0, 6.0, fixtures::home())};
    CHECK(has(validate_service(s), "overlapping active states"));
  }
  SUBCASE("empty person id") {
    auto s = fixtures::stove();
    s.people = {Person{""}};
    CHECK(has(validate_service(s), "person id is empty"));
  }
  SUBCASE("empty parameter data_type") {
    auto s = fixtures::stove();
    s.operations[0].inputs.push_back({"p", "", ""});
    CHECK(has(validate_service(s), "data_type is empty"));
  }
}

TEST_CASE("unit mismatch is a warning, not an error") {
  auto s = fixtures::stove();
  s.operations[0].inputs.push_back({"temperature", "int", "degree"});
  s.operations[0].outputs.push_back({"temperature", "int", "fahrenheit"});
  const auto vs = validate_service(s);
  REQUIRE_FALSE(vs.empty());
  bool warned = false;
  for (const auto& v : vs)
    if (v.severity == Severity::warning && v.message.find("unit mismatch") != std::string::npos)
      warned = true;
  CHECK(warned);
  CHECK(is_valid(vs));  // warnings do not invalidate
}
