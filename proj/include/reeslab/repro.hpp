#pragma once

// Fixed reproduction manifest: each item recomputes one headline result and
// reports PASS or FAIL with the data behind it.

#include <cstdint>
#include <string>
#include <vector>

#include "reeslab/linalg.hpp"
#include "reeslab/report.hpp"

namespace reeslab {

struct ReproOptions {
  FieldSpec field;
  std::uint64_t seed = kDefaultSeed;
  /// 0 = RESLAB_THREADS or hardware concurrency
  unsigned threads = 0;
  bool timings = false;
};

struct ReproItemResult {
  std::string id;
  bool pass = false;
  Json detail;
  double millis = 0;
};

/// Items run by default, in report order.
std::vector<std::string> default_repro_items();

/// Runs one item; ids are "name" or "name:a,b". Throws InputError for
/// unknown ids.
ReproItemResult run_repro_item(const std::string& id, const ReproOptions& options);

/// Runs items in parallel (results keep the requested order) and returns the
/// suite report; "verdict" is PASS iff every item passed.
Json run_repro(const std::vector<std::string>& ids, const ReproOptions& options);

/// Thread cap from RESLAB_THREADS, else hardware concurrency; at least 1.
unsigned default_thread_count();

}  // namespace reeslab
