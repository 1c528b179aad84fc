#pragma once

namespace affclass {

// Process-wide size limits. Set once at startup (CLI flags, environment),
// read-only afterwards.
struct Limits {
  // Cap for whole-truth-table operations: 2^24 bits keeps a table at 2 MiB.
  int max_table_vars = 24;
  // Cap for materializing a full class, partition or operation table.
  int max_materialize_vars = 4;
};

Limits& limits();

}  // namespace affclass
