#include "campnet/metrics.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "campnet/errors.hpp"
#include "campnet/textio.hpp"

namespace campnet::metrics {

using textio::fmt_g;

Summary summarize(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("summarize: empty sample set");
    Summary s;
    s.n = samples.size();
    s.min = samples[0];
    s.max = samples[0];
    // Welford's one-pass mean/variance.
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t k = 0;
    for (double x : samples) {
        if (x < s.min) s.min = x;
        if (x > s.max) s.max = x;
        ++k;
        double d = x - mean;
        mean += d / static_cast<double>(k);
        m2 += d * (x - mean);
    }
    s.avg = mean;
    s.variance = s.n > 1 ? m2 / static_cast<double>(s.n - 1) : 0.0;
    if (s.variance < 0.0) s.variance = 0.0;
    s.stddev = std::sqrt(s.variance);
    return s;
}

std::string to_string(SeriesKind k) {
    switch (k) {
    case SeriesKind::DelayS: return "delay_s";
    case SeriesKind::LoadBps: return "load_bps";
    case SeriesKind::ThroughputPps: return "throughput_pps";
    case SeriesKind::SentPps: return "sent_pps";
    case SeriesKind::ReceivedPps: return "received_pps";
    case SeriesKind::PacketRatePps: return "packet_rate_pps";
    }
    return "?";
}

MetricsStore::MetricsStore(double warmup_s_, double duration_s_, double bucket_s_) {
    warmup_s = warmup_s_;
    duration_s = duration_s_;
    bucket_s = bucket_s_;
    open_.start = warmup_s;
}

void MetricsStore::record_generated(const devices::Frame& f) {
    ++frames_generated;
    bits_generated += static_cast<std::uint64_t>(f.size_bytes) * 8;
    if (in_window(f.created_at)) ++open_.sent;
}

void MetricsStore::record_delivery(const devices::Frame& f) {
    if (f.delivered_at < f.created_at)
        throw EngineFault("delivery recorded without a valid timestamp");
    ++frames_delivered;
    bits_delivered += static_cast<std::uint64_t>(f.size_bytes) * 8;
    if (!in_window(f.delivered_at)) return; // warmup: counted, not sampled
    const double delay = f.delivered_at - f.created_at;
    delay_samples.push_back(delay);
    ++delivered_measured;
    ++open_.received;
    open_.received_bits += static_cast<std::uint64_t>(f.size_bytes) * 8;
    open_.delay_sum += delay;
    ++open_.delay_n;
}

void MetricsStore::record_frame_dropped() { ++frames_dropped; }

void MetricsStore::flush_bucket(double now) {
    open_.end = now;
    if (open_.end > open_.start) {
        closed_.push_back(open_);
        open_ = BucketAccum{};
        open_.start = now;
    }
}

void MetricsStore::finish(double end_time) {
    if (end_time > open_.start) flush_bucket(end_time);
}

StatSeries MetricsStore::series(SeriesKind kind) const {
    StatSeries out;
    out.kind = kind;
    std::uint64_t cum_received = 0;
    for (const auto& b : closed_) {
        const double width = b.end - b.start;
        cum_received += b.received;
        double v = 0.0;
        switch (kind) {
        case SeriesKind::DelayS:
            v = b.delay_n ? b.delay_sum / static_cast<double>(b.delay_n) : 0.0;
            break;
        case SeriesKind::LoadBps:
            v = static_cast<double>(b.received_bits) / width;
            break;
        case SeriesKind::ThroughputPps:
        case SeriesKind::ReceivedPps:
            v = static_cast<double>(b.received) / width;
            break;
        case SeriesKind::SentPps:
            v = static_cast<double>(b.sent) / width;
            break;
        case SeriesKind::PacketRatePps:
            // Running mean rate: packets so far over elapsed measured time.
            v = static_cast<double>(cum_received) / (b.end - warmup_s);
            break;
        }
        out.buckets.push_back(Bucket{b.start, width, v});
    }
    return out;
}

Summary MetricsStore::delay_summary() const { return summarize(delay_samples); }

double MetricsStore::utilization_of(const std::string& node_a, const std::string& node_b) const {
    for (const auto& u : link_utilization) {
        if ((u.node_a == node_a && u.node_b == node_b) ||
            (u.node_a == node_b && u.node_b == node_a))
            return u.max_util();
    }
    throw PlanError("no utilization recorded for link (" + node_a + "," + node_b + ")");
}

namespace {

const SeriesKind kAllKinds[] = {SeriesKind::DelayS,   SeriesKind::LoadBps,
                                SeriesKind::ThroughputPps, SeriesKind::SentPps,
                                SeriesKind::ReceivedPps,   SeriesKind::PacketRatePps};

void summary_row(std::ostream& os, const std::string& name, const Summary& s) {
    os << name << ',' << s.n << ',' << fmt_g(s.min) << ',' << fmt_g(s.max) << ',' << fmt_g(s.avg)
       << ',' << fmt_g(s.variance) << ',' << fmt_g(s.stddev) << '\n';
}

} // namespace

void MetricsStore::write_series_csv(const std::filesystem::path& path) const {
    std::ofstream os(path);
    if (!os) throw ParseError("cannot write '" + path.string() + "'");
    os << "metric,bucket_start_s,value\n";
    for (SeriesKind k : kAllKinds) {
        const auto ser = series(k);
        for (const auto& b : ser.buckets)
            os << to_string(k) << ',' << fmt_g(b.start_s) << ',' << fmt_g(b.value) << '\n';
    }
}

void MetricsStore::write_summary_csv(const std::filesystem::path& path) const {
    std::ofstream os(path);
    if (!os) throw ParseError("cannot write '" + path.string() + "'");
    os << "metric,n,min,max,avg,variance,stddev\n";
    for (SeriesKind k : kAllKinds) {
        const auto ser = series(k);
        std::vector<double> vals;
        vals.reserve(ser.buckets.size());
        for (const auto& b : ser.buckets) vals.push_back(b.value);
        if (!vals.empty()) summary_row(os, to_string(k), summarize(vals));
    }
    if (!delay_samples.empty()) summary_row(os, "delay_frame_s", delay_summary());
    if (!link_utilization.empty()) {
        std::vector<double> utils;
        utils.reserve(link_utilization.size());
        for (const auto& u : link_utilization) utils.push_back(u.max_util());
        summary_row(os, "utilization", summarize(utils));
    }
}

void MetricsStore::write_counters_csv(const std::filesystem::path& path) const {
    std::ofstream os(path);
    if (!os) throw ParseError("cannot write '" + path.string() + "'");
    os << "counter,value\n";
    os << "frames_generated," << frames_generated << '\n';
    os << "frames_delivered," << frames_delivered << '\n';
    os << "frames_dropped," << frames_dropped << '\n';
    os << "frames_in_flight_end," << frames_in_flight_end << '\n';
    os << "frames_delivered_measured," << delivered_measured << '\n';
    os << "duplicate_copies," << duplicate_copies << '\n';
    os << "copy_drops," << copy_drops << '\n';
    os << "bits_generated," << bits_generated << '\n';
    os << "bits_delivered," << bits_delivered << '\n';
}

void MetricsStore::write_utilization_csv(const std::filesystem::path& path) const {
    std::ofstream os(path);
    if (!os) throw ParseError("cannot write '" + path.string() + "'");
    os << "node_a,node_b,util_ab,util_ba,util_max\n";
    for (const auto& u : link_utilization)
        os << u.node_a << ',' << u.node_b << ',' << fmt_g(u.util_ab) << ',' << fmt_g(u.util_ba)
           << ',' << fmt_g(u.max_util()) << '\n';
}

std::uint64_t MetricsStore::digest() const {
    // Hash the same text the CSV writers produce.
    std::ostringstream all;
    for (SeriesKind k : kAllKinds) {
        const auto ser = series(k);
        for (const auto& b : ser.buckets)
            all << to_string(k) << ',' << fmt_g(b.start_s) << ',' << fmt_g(b.value) << '\n';
    }
    all << frames_generated << ',' << frames_delivered << ',' << frames_dropped << ','
        << frames_in_flight_end << ',' << bits_delivered << '\n';
    for (const auto& u : link_utilization)
        all << u.node_a << ',' << fmt_g(u.util_ab) << ',' << fmt_g(u.util_ba) << '\n';

    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : all.str()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace campnet::metrics
