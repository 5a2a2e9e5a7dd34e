#pragma once

#include <cstdint>
#include <string>

#include "packshift/event.hpp"
#include "packshift/problem.hpp"

namespace packshift {

// Deterministic trace generators. All sizes land on the 1/grid lattice so
// every intermediate the simulator computes stays exactly representable.
//
//   uniform      n inserts, sides uniform in [size_min, size_max]
//   powerlaw     n inserts, sides concentrated near 2^-k for k <= exponent
//   churn        inserts mixed with departs of random live items
//   phase-burst  quiet runs of small items, then items of size_max timed to
//                land just past the volume-change threshold epsilon
struct GeneratorSpec {
  std::string type = "uniform";
  Problem problem = Problem::vector_pack;
  int d = 1;
  std::int64_t n = 100;
  Rational size_min = Rational(1, 64);
  Rational size_max = Rational(1, 2);
  int exponent = 4;
  Rational depart_prob = Rational(1, 4);
  std::int64_t live_cap = 0;  // churn: force a depart once this many live
  Rational epsilon = Rational(1, 10);
  std::int64_t grid = 1024;
};

// Reads the spec from a JSON object string; unknown fields are errors.
GeneratorSpec parse_generator_spec(const std::string& json_text);

Trace generate_trace(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace packshift
