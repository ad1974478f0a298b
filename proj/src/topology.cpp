#include "campnet/topology.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <unordered_map>

#include "campnet/errors.hpp"

namespace campnet::topology {

namespace {

std::string lan_device_id(const std::string& site, int i) {
    return site + "-a" + std::to_string(i);
}

std::string host_id(const std::string& site, int lan, int h) {
    return site + "-a" + std::to_string(lan) + "-h" + std::to_string(h);
}

std::vector<std::vector<int>> adjacency(const NetworkModel& m,
                                        const Link* skip = nullptr) {
    std::vector<std::vector<int>> adj(m.nodes.size());
    for (const auto& l : m.links) {
        if (&l == skip) continue;
        int ia = m.node_index(l.a);
        int ib = m.node_index(l.b);
        adj[ia].push_back(ib);
        adj[ib].push_back(ia);
    }
    return adj;
}

} // namespace

std::string to_string(DeviceKind k) {
    switch (k) {
    case DeviceKind::Workstation: return "workstation";
    case DeviceKind::EthernetHub: return "ethernet_hub";
    case DeviceKind::AccessSwitch: return "access_switch";
    case DeviceKind::CampusRouter: return "campus_router";
    case DeviceKind::SonetMux: return "sonet_mux";
    case DeviceKind::DwdmHub: return "dwdm_hub";
    }
    return "?";
}

std::string to_string(LinkKind k) {
    switch (k) {
    case LinkKind::FastEthernet: return "fast_ethernet";
    case LinkKind::Oc12: return "oc12";
    case LinkKind::Oc48: return "oc48";
    }
    return "?";
}

std::string to_string(LinkRole r) {
    switch (r) {
    case LinkRole::Access: return "access";
    case LinkRole::Uplink: return "uplink";
    case LinkRole::Primary: return "primary";
    case LinkRole::Secondary: return "secondary";
    case LinkRole::Backbone: return "backbone";
    }
    return "?";
}

AccessMode access_mode_from_string(const std::string& s) {
    if (s == "hub") return AccessMode::Hub;
    if (s == "switch") return AccessMode::Switch;
    throw ParseError("unknown access mode '" + s + "' (expected hub|switch)");
}

int NetworkModel::node_index(const std::string& id) const {
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].id == id) return i;
    return -1;
}

bool NetworkModel::has_link(const std::string& a, const std::string& b) const {
    for (const auto& l : links)
        if ((l.a == a && l.b == b) || (l.a == b && l.b == a)) return true;
    return false;
}

void NetworkModel::add_node(Node n) {
    if (node_index(n.id) >= 0) throw PlanError("duplicate node id '" + n.id + "'");
    nodes.push_back(std::move(n));
}

void NetworkModel::add_link(Link l) {
    if (node_index(l.a) < 0) throw PlanError("link endpoint '" + l.a + "' does not exist");
    if (node_index(l.b) < 0) throw PlanError("link endpoint '" + l.b + "' does not exist");
    if (l.a == l.b) throw PlanError("self-link on '" + l.a + "'");
    if (has_link(l.a, l.b)) throw PlanError("duplicate link (" + l.a + "," + l.b + ")");
    if (l.length_km < 0.0) throw PlanError("negative link length on (" + l.a + "," + l.b + ")");
    links.push_back(std::move(l));
}

void NetworkModel::merge(NetworkModel&& fragment) {
    for (auto& n : fragment.nodes) add_node(std::move(n));
    for (auto& l : fragment.links) add_link(std::move(l));
}

NetworkModel build_campus(const geodesy::Site& campus, int lan_count, int hosts_per_lan,
                          AccessMode mode) {
    if (lan_count < 1) throw PlanError("lan_count must be >= 1");
    if (hosts_per_lan < 1) throw PlanError("hosts_per_lan must be >= 1");

    const DeviceKind access_kind =
        mode == AccessMode::Hub ? DeviceKind::EthernetHub : DeviceKind::AccessSwitch;
    const std::string& sid = campus.id;

    NetworkModel m;
    const std::string core_id = sid + "-core";
    const std::string router_id = sid + "-rtr";
    m.add_node(Node{core_id, DeviceKind::AccessSwitch, sid});
    m.add_node(Node{router_id, DeviceKind::CampusRouter, sid});

    for (int i = 1; i <= lan_count; ++i) {
        m.add_node(Node{lan_device_id(sid, i), access_kind, sid});
        for (int h = 1; h <= hosts_per_lan; ++h)
            m.add_node(Node{host_id(sid, i, h), DeviceKind::Workstation, sid});
    }

    // Host access links and the star to the core.
    for (int i = 1; i <= lan_count; ++i) {
        for (int h = 1; h <= hosts_per_lan; ++h)
            m.add_link(Link{host_id(sid, i, h), lan_device_id(sid, i), LinkKind::FastEthernet, 0.0,
                            LinkRole::Access});
        m.add_link(
            Link{lan_device_id(sid, i), core_id, LinkKind::FastEthernet, 0.0, LinkRole::Uplink});
    }

    // Lateral fabric among the access devices: ring from 3 LANs up, the
    // 2-LAN mesh degenerates to a single link.
    if (lan_count == 2) {
        m.add_link(Link{lan_device_id(sid, 1), lan_device_id(sid, 2), LinkKind::FastEthernet, 0.0,
                        LinkRole::Access});
    } else if (lan_count >= 3) {
        for (int i = 1; i <= lan_count; ++i) {
            int j = i == lan_count ? 1 : i + 1;
            m.add_link(Link{lan_device_id(sid, i), lan_device_id(sid, j), LinkKind::FastEthernet,
                            0.0, LinkRole::Access});
        }
    }

    m.add_link(Link{core_id, router_id, LinkKind::FastEthernet, 0.0, LinkRole::Uplink});
    return m;
}

std::string attach_campuses_to_sonet(NetworkModel& model, std::span<const CampusRef> campuses,
                                     const geodesy::Site& mux_site, const std::string& mux_id) {
    if (campuses.empty()) throw PlanError("attach_campuses_to_sonet needs at least one campus");

    model.add_node(Node{mux_id, DeviceKind::SonetMux, mux_site.id});
    for (const auto& c : campuses)
        model.add_link(Link{c.router_id, mux_id, LinkKind::Oc12,
                            geodesy::haversine_km(c.site.location, mux_site.location),
                            LinkRole::Primary});

    // Secondary: each campus to its nearest fellow campus; a mutual pair
    // yields one link.
    for (std::size_t i = 0; i < campuses.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        int nearest = -1;
        for (std::size_t j = 0; j < campuses.size(); ++j) {
            if (i == j) continue;
            double d = geodesy::haversine_km(campuses[i].site.location, campuses[j].site.location);
            if (d < best) {
                best = d;
                nearest = static_cast<int>(j);
            }
        }
        if (nearest < 0) continue; // single campus, no secondary
        if (!model.has_link(campuses[i].router_id, campuses[nearest].router_id))
            model.add_link(Link{campuses[i].router_id, campuses[nearest].router_id, LinkKind::Oc12,
                                best, LinkRole::Secondary});
    }
    return mux_id;
}

std::string build_dwdm_backbone(NetworkModel& model, std::span<const MuxRef> muxes,
                                const mst::SpanningTree& plan) {
    if (muxes.empty()) throw PlanError("build_dwdm_backbone needs at least one mux");
    for (const auto& mx : muxes)
        if (std::find(plan.vertices.begin(), plan.vertices.end(), mx.site.id) ==
            plan.vertices.end())
            throw PlanError("backbone plan does not span mux site '" + mx.site.id + "'");
    if (plan.vertices.size() != muxes.size())
        throw PlanError("backbone plan vertex count does not match mux count");

    std::unordered_map<std::string, const MuxRef*> by_site;
    for (const auto& mx : muxes) by_site[mx.site.id] = &mx;

    std::vector<const MuxRef*> ring;
    for (int v : plan.dfs_preorder()) {
        auto it = by_site.find(plan.vertices[v]);
        if (it == by_site.end())
            throw PlanError("backbone plan vertex '" + plan.vertices[v] + "' has no mux");
        ring.push_back(it->second);
    }

    const geodesy::Site& hub_site = ring.front()->site;
    const std::string hub_id = "dwdm-hub";
    model.add_node(Node{hub_id, DeviceKind::DwdmHub, hub_site.id});

    if (ring.size() >= 2) {
        for (std::size_t i = 0; i + 1 < ring.size(); ++i)
            model.add_link(Link{ring[i]->mux_id, ring[i + 1]->mux_id, LinkKind::Oc48,
                                geodesy::haversine_km(ring[i]->site.location,
                                                      ring[i + 1]->site.location),
                                LinkRole::Backbone});
        if (ring.size() >= 3)
            model.add_link(Link{ring.back()->mux_id, ring.front()->mux_id, LinkKind::Oc48,
                                geodesy::haversine_km(ring.back()->site.location,
                                                      ring.front()->site.location),
                                LinkRole::Backbone});
    }

    for (const auto* mx : ring)
        model.add_link(Link{mx->mux_id, hub_id, LinkKind::Oc48,
                            geodesy::haversine_km(mx->site.location, hub_site.location),
                            LinkRole::Backbone});
    return hub_id;
}

bool ValidationReport::all_resilient() const {
    return std::all_of(resilience.begin(), resilience.end(),
                       [](const ResilienceCheck& r) { return r.resilient; });
}

namespace {

// Nodes reachable from `from` with one link optionally removed.
std::vector<bool> reachable(const NetworkModel& m, int from, const Link* skip) {
    std::vector<bool> seen(m.nodes.size(), false);
    if (from < 0) return seen;
    auto adj = adjacency(m, skip);
    std::queue<int> q;
    q.push(from);
    seen[from] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
    }
    return seen;
}

} // namespace

ValidationReport validate_topology(const NetworkModel& model) {
    ValidationReport rep;
    for (const auto& n : model.nodes) rep.node_counts[n.kind]++;
    for (const auto& l : model.links) {
        rep.link_counts[l.kind]++;
        rep.role_counts[l.role]++;
    }

    if (model.nodes.empty()) {
        rep.findings.push_back("model has no nodes");
        return rep;
    }

    auto seen = reachable(model, 0, nullptr);
    rep.connected = true;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
            rep.connected = false;
            rep.findings.push_back("node '" + model.nodes[i].id + "' is unreachable from '" +
                                   model.nodes[0].id + "'");
        }
    }

    // Backbone attachment points.
    std::vector<int> backbone_nodes;
    for (int i = 0; i < static_cast<int>(model.nodes.size()); ++i)
        if (model.nodes[i].kind == DeviceKind::SonetMux || model.nodes[i].kind == DeviceKind::DwdmHub)
            backbone_nodes.push_back(i);

    const int campus_count = rep.node_counts.count(DeviceKind::CampusRouter)
                                 ? rep.node_counts.at(DeviceKind::CampusRouter)
                                 : 0;

    for (const auto& l : model.links) {
        if (l.role != LinkRole::Primary) continue;
        ResilienceCheck chk{l.a, l.b, false};
        if (campus_count >= 2 && !backbone_nodes.empty()) {
            auto ok = reachable(model, backbone_nodes.front(), &l);
            chk.resilient = true;
            for (int i = 0; i < static_cast<int>(model.nodes.size()); ++i) {
                if (model.nodes[i].kind == DeviceKind::Workstation && !ok[i]) {
                    chk.resilient = false;
                    rep.findings.push_back("removing primary link (" + l.a + "," + l.b +
                                           ") cuts off workstation '" + model.nodes[i].id + "'");
                    break;
                }
            }
        } else {
            rep.findings.push_back("primary link (" + l.a + "," + l.b +
                                   ") has no secondary fallback (single campus)");
        }
        rep.resilience.push_back(chk);
    }
    return rep;
}

NetworkModel build_network(const BuildInput& input) {
    if (input.campuses.empty()) throw PlanError("scenario declares no campuses");

    NetworkModel model;
    std::vector<CampusRef> all_campuses;

    // Group in first-appearance order over the campus list.
    std::vector<std::string> group_order;
    std::map<std::string, std::vector<CampusRef>> groups;
    for (const auto& spec : input.campuses) {
        const geodesy::Site* site = nullptr;
        for (const auto& s : input.sites)
            if (s.id == spec.site_id) site = &s;
        if (!site) throw ParseError("campus references unknown site id '" + spec.site_id + "'");

        model.merge(build_campus(*site, spec.lan_count, spec.hosts_per_lan, spec.mode));
        CampusRef ref{site->id + "-rtr", *site};
        all_campuses.push_back(ref);

        std::string group = "g1";
        if (!input.mux_group_of.empty()) {
            auto it = input.mux_group_of.find(spec.site_id);
            if (it == input.mux_group_of.end())
                throw ParseError("mux grouping has no entry for campus site '" + spec.site_id +
                                 "'");
            group = it->second;
        }
        if (!groups.count(group)) group_order.push_back(group);
        groups[group].push_back(std::move(ref));
    }

    std::vector<MuxRef> muxes;
    for (const auto& gname : group_order) {
        const auto& members = groups[gname];
        const geodesy::Site& mux_site = members.front().site; // first campus hosts the mux
        std::string mux_id =
            attach_campuses_to_sonet(model, members, mux_site, "mux-" + gname);
        muxes.push_back(MuxRef{mux_id, mux_site});
    }

    // A singleton group leaves its campus without a secondary; rescue it with
    // a link to the globally nearest other campus so one primary failure never
    // cuts a campus off.
    if (all_campuses.size() >= 2) {
        for (const auto& gname : group_order) {
            const auto& members = groups[gname];
            if (members.size() != 1) continue;
            const CampusRef& lone = members.front();
            double best = std::numeric_limits<double>::infinity();
            const CampusRef* nearest = nullptr;
            for (const auto& other : all_campuses) {
                if (other.router_id == lone.router_id) continue;
                double d = geodesy::haversine_km(lone.site.location, other.site.location);
                if (d < best) {
                    best = d;
                    nearest = &other;
                }
            }
            if (nearest && !model.has_link(lone.router_id, nearest->router_id))
                model.add_link(
                    Link{lone.router_id, nearest->router_id, LinkKind::Oc12, best, LinkRole::Secondary});
        }
    }

    // Backbone plan over mux sites, rooted at the first mux.
    std::vector<geodesy::Site> mux_sites;
    for (const auto& mx : muxes) mux_sites.push_back(mx.site);
    mst::SpanningTree plan = mst::prim_mst(mst::graph_from_sites(mux_sites), mux_sites.front().id);
    build_dwdm_backbone(model, muxes, plan);
    return model;
}

} // namespace campnet::topology
