#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "packshift/item.hpp"

namespace packshift {

struct InsertOp {
  ItemSpec item;
};

struct DepartOp {
  std::string id;
};

// One timestamped change; each event alters the live set by exactly one item.
struct Event {
  std::int64_t t = 0;
  std::variant<InsertOp, DepartOp> op;
};

struct Trace {
  std::vector<Event> events;
};

inline bool is_insert(const Event& e) { return std::holds_alternative<InsertOp>(e.op); }

// Throws InputError unless timestamps strictly increase, every insert id is
// not currently live (re-inserting after a depart is fine), every depart
// names a live id, and all items agree on kind and dimension.
void validate_trace(const Trace& trace);

}  // namespace packshift
