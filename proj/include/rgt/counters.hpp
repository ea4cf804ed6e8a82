#pragma once

#include <cstdint>

namespace rgt {

// Probe accounting, charged inside the store so callers cannot fudge it.
//
// `steps` is the machine-independent cost measure: the indexed backend charges
// exactly 1 per first_/next_ call, the legacy backend charges 1 per list entry
// it inspects while scanning. `node_entries`/`edge_entries` count candidates
// actually inspected during iteration (both backends), which is what the
// per-rule matching-attempt figures are built from. Root registry probes are
// tracked separately since they are O(1) on both backends.
struct StepCounters {
  uint64_t steps = 0;
  uint64_t node_entries = 0;
  uint64_t edge_entries = 0;
  uint64_t root_probes = 0;

  void reset() { *this = StepCounters{}; }
};

}  // namespace rgt
