#pragma once

// Seeded synthetic repository generator. One logical random stream
// (mt19937_64 with portable rejection-sampled bounds) fully determined by the
// seed; every generated service passes validate_service.

#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "smine/model.hpp"

namespace smine {

/// Recorded in generated repository headers so runs are attributable to the
/// exact sampling scheme.
inline constexpr const char* kGeneratorId = "smine-mt19937_64-v1";

struct IntRange {
  int lo = 0;
  int hi = 0;

  bool operator==(const IntRange&) const = default;
};

struct Span {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const Span&) const = default;
};

struct GeneratorParams {
  int n_services = 100;
  IntRange ops_per_service{1, 5};
  IntRange inputs_per_op{0, 5};
  IntRange outputs_per_op{0, 5};
  IntRange cond_params_per_op{0, 3};
  IntRange cond_token_range{0, 9};
  Span temporal_range_h{0.0, 24.0};
  std::string people_alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  int type_alphabet_size = 10;
  std::uint64_t seed = 0;

  bool operator==(const GeneratorParams&) const = default;

  void validate() const {
    auto check_range = [](const IntRange& r, int floor, int ceil, const char* field) {
      if (r.lo > r.hi || r.lo < floor || r.hi > ceil)
        throw std::invalid_argument(std::string(field) + " range must satisfy " +
                                    std::to_string(floor) + " <= lo <= hi <= " +
                                    std::to_string(ceil));
    };
    if (n_services < 0) throw std::invalid_argument("n_services must be >= 0");
    check_range(ops_per_service, 1, 1000, "ops_per_service");
    check_range(inputs_per_op, 0, 5, "inputs_per_op");
    check_range(outputs_per_op, 0, 5, "outputs_per_op");
    check_range(cond_params_per_op, 0, 3, "cond_params_per_op");
    check_range(cond_token_range, 0, 9, "cond_token_range");
    if (!(temporal_range_h.lo >= 0.0) || !(temporal_range_h.hi <= 24.0) ||
        !(temporal_range_h.lo <= temporal_range_h.hi))
      throw std::invalid_argument("temporal_range_h must satisfy 0 <= lo <= hi <= 24");
    if (people_alphabet.empty()) throw std::invalid_argument("people_alphabet must be non-empty");
    if (type_alphabet_size < 1) throw std::invalid_argument("type_alphabet_size must be >= 1");
  }
};

namespace detail {

// Unbiased bounded draws on top of the raw engine output, so repositories do
// not depend on the standard library's distribution implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

inline int uniform_int(std::mt19937_64& rng, const IntRange& r) {
  return uniform_int(rng, r.lo, r.hi);
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  return lo + (hi - lo) * u;
}

}  // namespace detail

/// Every generated service sits here; pairwise distance is zero, so the
/// spatial clause of state dependency never filters generated pairs.
inline constexpr Location kSharedLocation{0.0, 0.0, 100.0};

/// Deterministic given params.seed. Per service: a uniform operation count,
/// uniformly typed parameters, uniform token conditions, one active interval
/// inside the temporal range, and one person drawn from the alphabet.
inline std::vector<ServiceDescription> generate_repository(const GeneratorParams& p) {
  p.validate();
  std::mt19937_64 rng(p.seed);

  std::vector<ServiceDescription> repo;
  repo.reserve(static_cast<std::size_t>(p.n_services));
  for (int i = 0; i < p.n_services; ++i) {
    ServiceDescription s;
    char name[16];
    std::snprintf(name, sizeof name, "svc_%05d", i);
    s.name = name;

    const int n_ops = detail::uniform_int(rng, p.ops_per_service);
    s.operations.reserve(static_cast<std::size_t>(n_ops));
    for (int o = 0; o < n_ops; ++o) {
      OperationDescription op;
      op.name = "op_" + std::to_string(o);
      const int n_in = detail::uniform_int(rng, p.inputs_per_op);
      for (int k = 0; k < n_in; ++k)
        op.inputs.push_back({"in_" + std::to_string(k),
                             "t" + std::to_string(detail::uniform_int(rng, 0, p.type_alphabet_size - 1)),
                             ""});
      const int n_out = detail::uniform_int(rng, p.outputs_per_op);
      for (int k = 0; k < n_out; ++k)
        op.outputs.push_back({"out_" + std::to_string(k),
                              "t" + std::to_string(detail::uniform_int(rng, 0, p.type_alphabet_size - 1)),
                              ""});
      const int n_pre = detail::uniform_int(rng, p.cond_params_per_op);
      for (int k = 0; k < n_pre; ++k)
        op.precondition.tokens.insert(detail::uniform_int(rng, p.cond_token_range));
      const int n_post = detail::uniform_int(rng, p.cond_params_per_op);
      for (int k = 0; k < n_post; ++k)
        op.postcondition.tokens.insert(detail::uniform_int(rng, p.cond_token_range));
      s.operations.push_back(std::move(op));
    }

    const double t1 = detail::uniform_real(rng, p.temporal_range_h.lo, p.temporal_range_h.hi);
    const double t2 = detail::uniform_real(rng, p.temporal_range_h.lo, p.temporal_range_h.hi);
    s.states.push_back(active_state(std::min(t1, t2), std::max(t1, t2), kSharedLocation));

    const int letter = detail::uniform_int(rng, 0, static_cast<int>(p.people_alphabet.size()) - 1);
    s.people.insert(Person{std::string(1, p.people_alphabet[static_cast<std::size_t>(letter)])});

    repo.push_back(std::move(s));
  }
  return repo;
}

}  // namespace smine
