#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace campnet::geodesy {

// Mean Earth radius; all great-circle math in this project uses this constant.
inline constexpr double kEarthRadiusKm = 6371.0;

struct GeoPoint {
    double lat_deg = 0.0; // [-90, +90]
    double lon_deg = 0.0; // [-180, +180]
};

// Validating constructor; throws ParseError outside the coordinate ranges.
GeoPoint make_geo_point(double lat_deg, double lon_deg);

enum class Tier { Province, University, Campus };

std::string to_string(Tier t);
Tier tier_from_string(const std::string& s); // throws ParseError

struct Site {
    std::string id;
    std::string name;
    Tier tier = Tier::Campus;
    GeoPoint location;
};

// Great-circle distance in kilometers (haversine on the kEarthRadiusKm sphere).
double haversine_km(const GeoPoint& a, const GeoPoint& b);

// Reads a sites CSV with header `id,name,tier,lat_deg,lon_deg`.
// Sites come back in file order. Parse/coordinate problems raise ParseError
// with the offending line number; a repeated id raises PlanError naming it.
std::vector<Site> load_sites(const std::filesystem::path& path);

const Site& site_by_id(const std::vector<Site>& sites, const std::string& id); // throws PlanError

} // namespace campnet::geodesy
