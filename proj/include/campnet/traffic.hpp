#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "campnet/topology.hpp"

namespace campnet::sim {

// Single per-run random stream; every stochastic draw goes through here in
// dispatch order, which is what makes runs reproducible. The draw algorithms
// are hand-rolled on top of mt19937_64 so the sequence does not depend on the
// standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { // [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double exponential(double rate) { return -std::log(1.0 - uniform01()) / rate; }

    // Unbiased integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace campnet::sim

namespace campnet::traffic {

inline constexpr double kNoArrival = std::numeric_limits<double>::infinity();

struct SourceSelector {
    bool all = true;
    std::string campus_site; // used when !all
};

struct SizeModel {
    enum class Kind { Fixed, Exponential };
    Kind kind = Kind::Fixed;
    int fixed_bytes = 1000;
    double mean_bytes = 1000.0; // Exponential: draw clamped to [64, 1518]
};

struct DstModel {
    bool uniform = true;     // uniform over all other workstations
    std::string fixed_dst;   // used when !uniform
};

struct TrafficProfile {
    SourceSelector sources;
    double rate_fps = 0.0; // per-source frame rate
    SizeModel size;
    DstModel dst;
    double start_s = 0.0;
    double stop_s = std::numeric_limits<double>::infinity();

    void validate(double duration_s) const; // ParseError on bad ranges
};

// Next Poisson arrival after `now`; kNoArrival when the profile rate is zero.
double next_arrival(const TrafficProfile& p, double now, sim::Rng& rng);

// Frame size draw, clamped to the Ethernet range for exponential models.
int draw_size(const SizeModel& m, sim::Rng& rng);

struct GeneratorState {
    int source_node = -1;  // workstation node index
    int profile_index = -1;
};

// One generator per selected workstation per profile; the engine owns firing.
// Raises ParseError when a positive-rate profile selects no workstation or a
// fixed destination does not resolve.
std::vector<GeneratorState> build_flows(const topology::NetworkModel& model,
                                        const std::vector<TrafficProfile>& profiles);

} // namespace campnet::traffic
