#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "campnet/devices.hpp"

namespace campnet::metrics {

struct Summary {
    double min = 0.0;
    double max = 0.0;
    double avg = 0.0;
    double variance = 0.0; // sample variance, n-1 divisor (0 for n == 1)
    double stddev = 0.0;
    std::size_t n = 0;
};

// Throws std::invalid_argument on empty input.
Summary summarize(std::span<const double> samples);

enum class SeriesKind { DelayS, LoadBps, ThroughputPps, SentPps, ReceivedPps, PacketRatePps };

std::string to_string(SeriesKind k);

struct Bucket {
    double start_s = 0.0;
    double width_s = 0.0;
    double value = 0.0;
};

struct StatSeries {
    SeriesKind kind = SeriesKind::DelayS;
    std::vector<Bucket> buckets; // contiguous from warmup end to duration
};

struct LinkUtilization {
    std::string node_a;
    std::string node_b;
    double util_ab = 0.0;
    double util_ba = 0.0;
    double max_util() const { return util_ab > util_ba ? util_ab : util_ba; }
};

struct PortStat {
    std::string node;
    std::string peer;
    std::uint64_t drops = 0;
    std::uint64_t enqueued = 0;
    std::uint64_t dequeued = 0;
    double busy_s = 0.0;
    double queue_area = 0.0;  // integral of queue length over the run
    double wait_sum_s = 0.0;  // summed queueing delay of transmitted frames
};

// Per-run collector. The engine feeds it during a run (bucket boundaries are
// closed by stats-flush events); afterwards it is read-only.
class MetricsStore {
  public:
    MetricsStore() = default;
    MetricsStore(double warmup_s, double duration_s, double bucket_s);

    // recording (engine side)
    void record_generated(const devices::Frame& f);
    void record_delivery(const devices::Frame& f); // needs delivered_at set
    void record_frame_dropped();
    void flush_bucket(double now); // closes the bucket ending at `now`
    void finish(double end_time);  // closes any open partial bucket

    // counters (whole run, warmup included)
    std::uint64_t frames_generated = 0;
    std::uint64_t frames_delivered = 0;
    std::uint64_t frames_dropped = 0;
    std::uint64_t frames_in_flight_end = 0;
    std::uint64_t duplicate_copies = 0; // extra copies absorbed at destinations
    std::uint64_t copy_drops = 0;       // queue-overflow drops, copy level
    std::uint64_t bits_generated = 0;
    std::uint64_t bits_delivered = 0;

    // measurement window state
    double warmup_s = 0.0;
    double duration_s = 0.0;
    double bucket_s = 1.0;

    std::vector<double> delay_samples;        // end-to-end, post-warmup deliveries
    std::uint64_t delivered_measured = 0;     // deliveries after warmup
    std::vector<LinkUtilization> link_utilization;
    std::vector<PortStat> port_stats;

    StatSeries series(SeriesKind kind) const;
    Summary delay_summary() const; // over delay_samples
    double utilization_of(const std::string& node_a, const std::string& node_b) const;

    void write_series_csv(const std::filesystem::path& path) const;
    void write_summary_csv(const std::filesystem::path& path) const;
    void write_counters_csv(const std::filesystem::path& path) const;
    void write_utilization_csv(const std::filesystem::path& path) const;

    // FNV-1a over the CSV payloads; equal digests = identical outputs.
    std::uint64_t digest() const;

  private:
    struct BucketAccum {
        double start = 0.0;
        double end = 0.0;
        std::uint64_t sent = 0;
        std::uint64_t received = 0;
        std::uint64_t received_bits = 0;
        double delay_sum = 0.0;
        std::uint64_t delay_n = 0;
    };
    std::vector<BucketAccum> closed_;
    BucketAccum open_;
    bool in_window(double t) const { return t >= warmup_s && t <= duration_s; }
};

} // namespace campnet::metrics
