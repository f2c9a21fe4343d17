#pragma once

#include "symid/identities.hpp"

#include <optional>
#include <span>
#include <vector>

namespace symid {

// Worker count resolution: explicit request, then the SYMID_WORKERS
// environment variable, then the hardware concurrency. Invalid values are a
// usage error.
int resolve_worker_count(std::optional<int> requested);

// Runs independent instances on up to `workers` threads. Results land in
// input order, so output is identical for every worker count.
std::vector<IdentityReport> run_instances(std::span<const Instance> instances,
                                          int workers);

}  // namespace symid
