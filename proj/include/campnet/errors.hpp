#pragma once

#include <stdexcept>
#include <string>

namespace campnet {

// Error taxonomy shared by the library and the CLI exit-code contract:
// ParseError -> 2 (unreadable/invalid input files, bad references, bad config)
// PlanError  -> 3 (duplicate ids, disconnected graphs, missing vertices, routing holes)
// EngineFault-> 5 (simulation invariant broken: ordering or conservation)
// Topology validation failures are reported, not thrown; the build command maps
// a failed connectivity check to exit 4.

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EngineFault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace campnet
