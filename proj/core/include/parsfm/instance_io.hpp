#pragma once

#include <string>

#include "parsfm/instance.hpp"

namespace parsfm {

// JSON wire format: {"kind": ..., "n": ..., "M": ..., "payload": {...}}.
// Payload fields per kind:
//   graph-cut              {"edges": [[u, v, w], ...]}
//   cut-minus-modular      {"edges": [[u, v, w], ...], "modular": [w0, ...]}
//   concave-of-cardinality {"g": [g0, ..., gn]}
//   coverage               {"sets": [[...], ...], "cost": c}
//   explicit-table         {"table": [f(mask 0), ..., f(mask 2^n-1)]}
// Elements are 0-based. On load the instance is rebuilt through the same
// validation as make_instance; for n <= 20 the stored M is recomputed.
SubmodularInstance instance_from_json(const std::string& text);
SubmodularInstance load_instance(const std::string& path);
std::string instance_to_json(const SubmodularInstance& instance);
void save_instance(const SubmodularInstance& instance, const std::string& path);

}  // namespace parsfm
