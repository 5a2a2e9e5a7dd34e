#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "packshift/event.hpp"
#include "packshift/geometry.hpp"
#include "packshift/problem.hpp"

namespace packshift {

// Traces are JSON lines, one event each. Sizes travel as exact strings
// ("1/3", "0.35", "1"); floating-point JSON numbers are rejected.
//
//   {"t":0,"op":"insert","id":"a","kind":"rect2d","w":"1/2","h":"0.3"}
//   {"t":1,"op":"insert","id":"b","kind":"hyperrect","sides":["1/4","1/8","1/2"]}
//   {"t":2,"op":"insert","id":"c","kind":"hypercube","dim":3,"side":"1/4"}
//   {"t":3,"op":"insert","id":"d","kind":"vector","components":["1/2","0"]}
//   {"t":4,"op":"depart","id":"a"}
Trace read_trace(std::istream& in);
Trace read_trace_file(const std::string& path);
void write_trace(std::ostream& out, const Trace& trace);
void write_trace_file(const std::string& path, const Trace& trace);

// A packing snapshot keyed by external id (live items only, so ids are
// unambiguous even when a trace reuses them across incarnations).
struct SolutionFile {
  std::string problem;
  int d = 0;
  Rational cost;
  std::map<std::string, PlacementRecord> items;
};

SolutionFile read_solution(std::istream& in);
SolutionFile read_solution_file(const std::string& path);
void write_solution(std::ostream& out, const SolutionFile& sol);
void write_solution_file(const std::string& path, const SolutionFile& sol);

// Snapshot of the live items of a run.
SolutionFile make_solution_file(const SolutionState& s, const ItemTable& items,
                                Problem problem, int d);

// Replays the trace and checks the snapshot places its final live set
// feasibly. Throws InputError when ids or dimensions do not line up.
ValidityReport validate_solution_file(const Trace& trace, const SolutionFile& sol);

}  // namespace packshift
