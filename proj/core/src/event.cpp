#include "packshift/event.hpp"

#include <set>
#include <string>

namespace packshift {

void validate_trace(const Trace& trace) {
  std::set<std::string> live;
  std::int64_t last_t = -1;
  std::string kind;
  int dim = -1;
  for (const Event& e : trace.events) {
    if (e.t < 0) throw InputError("event with negative time " + std::to_string(e.t));
    if (e.t <= last_t) {
      throw InputError("event times must strictly increase (t=" + std::to_string(e.t) +
                       " after t=" + std::to_string(last_t) + ")");
    }
    last_t = e.t;
    if (const auto* ins = std::get_if<InsertOp>(&e.op)) {
      validate_item(ins->item);
      if (!live.insert(ins->item.id).second) {
        throw InputError("insert of already-live id '" + ins->item.id + "' at t=" +
                         std::to_string(e.t));
      }
      if (kind.empty()) {
        kind = item_kind_name(ins->item);
        dim = item_dimension(ins->item);
      } else if (kind != item_kind_name(ins->item) || dim != item_dimension(ins->item)) {
        throw InputError("mixed item kinds/dimensions in one trace (item '" +
                         ins->item.id + "')");
      }
    } else {
      const auto& dep = std::get<DepartOp>(e.op);
      if (live.erase(dep.id) == 0) {
        throw InputError("depart of non-live id '" + dep.id + "' at t=" +
                         std::to_string(e.t));
      }
    }
  }
}

}  // namespace packshift
