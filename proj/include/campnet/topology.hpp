#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "campnet/geodesy.hpp"
#include "campnet/mst.hpp"

namespace campnet::topology {

enum class DeviceKind { Workstation, EthernetHub, AccessSwitch, CampusRouter, SonetMux, DwdmHub };
enum class LinkKind { FastEthernet, Oc12, Oc48 };
enum class LinkRole { Access, Uplink, Primary, Secondary, Backbone };
enum class AccessMode { Hub, Switch };

constexpr std::int64_t rate_bps(LinkKind k) {
    switch (k) {
    case LinkKind::FastEthernet: return 100'000'000;
    case LinkKind::Oc12: return 622'080'000;
    case LinkKind::Oc48: return 2'488'320'000;
    }
    return 0;
}

std::string to_string(DeviceKind k);
std::string to_string(LinkKind k);
std::string to_string(LinkRole r);
AccessMode access_mode_from_string(const std::string& s); // throws ParseError

struct Node {
    std::string id;
    DeviceKind kind = DeviceKind::Workstation;
    std::string site_id; // empty when the node has no site anchor
};

struct Link {
    std::string a;
    std::string b;
    LinkKind kind = LinkKind::FastEthernet;
    double length_km = 0.0;
    LinkRole role = LinkRole::Access;
};

struct NetworkModel {
    std::vector<Node> nodes;
    std::vector<Link> links;

    int node_index(const std::string& id) const; // -1 when absent
    bool has_link(const std::string& a, const std::string& b) const;
    void add_node(Node n);                        // PlanError on duplicate id
    void add_link(Link l);                        // PlanError on bad endpoint / duplicate / self-link
    void merge(NetworkModel&& fragment);          // nodes first, then links
};

// One campus as in the proposed design: `lan_count` access devices each
// serving `hosts_per_lan` workstations, lateral ring (>=3 LANs) or full mesh
// (2 LANs) among the access devices, a star to the core switch, and one
// campus router above the core.
NetworkModel build_campus(const geodesy::Site& campus, int lan_count, int hosts_per_lan,
                          AccessMode mode);

// Campus egress info used by the SONET/DWDM builders.
struct CampusRef {
    std::string router_id;
    geodesy::Site site;
};

// Adds one SONET mux for the group plus a primary OC-12 uplink per campus and
// a secondary OC-12 link from each campus router to its nearest (haversine)
// fellow campus in `campuses`. Mutually-nearest pairs share one link.
std::string attach_campuses_to_sonet(NetworkModel& model, std::span<const CampusRef> campuses,
                                     const geodesy::Site& mux_site, const std::string& mux_id);

struct MuxRef {
    std::string mux_id;
    geodesy::Site site;
};

// Adds the DWDM optical hub (anchored at the plan root's site) and OC-48
// links: the logical mux ring in DFS-preorder of `plan` (closing edge from
// the third mux up) plus one link from every mux to the hub.
std::string build_dwdm_backbone(NetworkModel& model, std::span<const MuxRef> muxes,
                                const mst::SpanningTree& plan);

struct ResilienceCheck {
    std::string link_a;
    std::string link_b;
    bool resilient = false;
};

struct ValidationReport {
    bool connected = false;
    std::vector<std::string> findings; // human-readable issues; empty when clean
    std::vector<ResilienceCheck> resilience; // one entry per primary OC-12 link
    std::map<DeviceKind, int> node_counts;
    std::map<LinkKind, int> link_counts;
    std::map<LinkRole, int> role_counts;

    bool all_resilient() const;
};

// Connectivity, primary-link failure resilience (workstations must still
// reach a SONET mux or the DWDM hub), and inventory counts.
ValidationReport validate_topology(const NetworkModel& model);

// Scenario-level assembly -------------------------------------------------

struct CampusSpec {
    std::string site_id;
    int lan_count = 1;
    int hosts_per_lan = 1;
    AccessMode mode = AccessMode::Switch;
};

struct BuildInput {
    std::vector<geodesy::Site> sites;
    std::vector<CampusSpec> campuses;
    std::map<std::string, std::string> mux_group_of; // campus site id -> group name; empty = one group
};

// Full three-level build: campuses, per-group SONET attachment (the group's
// mux sits at its first campus site), cross-group rescue secondaries for
// singleton groups, and the DWDM backbone planned by Prim over the mux sites.
NetworkModel build_network(const BuildInput& input);

} // namespace campnet::topology
