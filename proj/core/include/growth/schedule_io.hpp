#pragma once

#include <string>

#include "growth/schedule.hpp"

namespace growth {

/// Schedule JSON:
///   {"d": 2, "initiator": 0,
///    "slots": [{"gen": [{"p": 0, "c": 1, "act": [0]}], "del": [[0, 1]]}]}
/// Unknown top-level members are ignored. Throws ScheduleError (kMalformed)
/// naming the offending JSON path.
Schedule parse_schedule(const std::string& text);

/// Canonical form: generations in input order, "act" sorted, deletions sorted.
std::string emit_schedule(const Schedule& s, int indent = -1);

}  // namespace growth
