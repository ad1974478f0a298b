#include "campnet/geodesy.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "campnet/errors.hpp"

namespace campnet::geodesy {

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& text, const char* what, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError("sites csv line " + std::to_string(line_no) + ": bad " + what + " '" +
                         text + "'");
    }
}

} // namespace

GeoPoint make_geo_point(double lat_deg, double lon_deg) {
    if (!(lat_deg >= -90.0 && lat_deg <= 90.0))
        throw ParseError("latitude " + std::to_string(lat_deg) + " outside [-90, 90]");
    if (!(lon_deg >= -180.0 && lon_deg <= 180.0))
        throw ParseError("longitude " + std::to_string(lon_deg) + " outside [-180, 180]");
    return GeoPoint{lat_deg, lon_deg};
}

std::string to_string(Tier t) {
    switch (t) {
    case Tier::Province: return "province";
    case Tier::University: return "university";
    case Tier::Campus: return "campus";
    }
    return "campus";
}

Tier tier_from_string(const std::string& s) {
    if (s == "province") return Tier::Province;
    if (s == "university") return Tier::University;
    if (s == "campus") return Tier::Campus;
    throw ParseError("unknown tier '" + s + "' (expected province|university|campus)");
}

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
    const double lat1 = a.lat_deg * kDegToRad;
    const double lat2 = b.lat_deg * kDegToRad;
    const double dlat = (b.lat_deg - a.lat_deg) * kDegToRad;
    const double dlon = (b.lon_deg - a.lon_deg) * kDegToRad;
    const double sl = std::sin(dlat / 2.0);
    const double so = std::sin(dlon / 2.0);
    const double h = sl * sl + std::cos(lat1) * std::cos(lat2) * so * so;
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

std::vector<Site> load_sites(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sites file '" + path.string() + "'");

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError("sites file '" + path.string() + "' is empty");
    ++line_no;
    if (trim(line) != "id,name,tier,lat_deg,lon_deg")
        throw ParseError("sites csv line 1: expected header 'id,name,tier,lat_deg,lon_deg'");

    std::vector<Site> sites;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 5)
            throw ParseError("sites csv line " + std::to_string(line_no) + ": expected 5 fields, got " +
                             std::to_string(fields.size()));
        Site s;
        s.id = trim(fields[0]);
        s.name = trim(fields[1]);
        if (s.id.empty())
            throw ParseError("sites csv line " + std::to_string(line_no) + ": empty id");
        try {
            s.tier = tier_from_string(trim(fields[2]));
        } catch (const ParseError& e) {
            throw ParseError("sites csv line " + std::to_string(line_no) + ": " + e.what());
        }
        const double lat = parse_real(trim(fields[3]), "lat_deg", line_no);
        const double lon = parse_real(trim(fields[4]), "lon_deg", line_no);
        try {
            s.location = make_geo_point(lat, lon);
        } catch (const ParseError& e) {
            throw ParseError("sites csv line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!seen.insert(s.id).second)
            throw PlanError("duplicate site id '" + s.id + "'");
        sites.push_back(std::move(s));
    }
    return sites;
}

const Site& site_by_id(const std::vector<Site>& sites, const std::string& id) {
    for (const auto& s : sites)
        if (s.id == id) return s;
    throw PlanError("unknown site id '" + id + "'");
}

} // namespace campnet::geodesy
