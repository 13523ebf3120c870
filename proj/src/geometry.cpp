#include "uavsim/geometry.hpp"

#include "uavsim/error.hpp"
#include "uavsim/units.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <string>

namespace uavsim {

namespace {

Position2 polar(double radius, double azimuth_deg) {
    const double a = deg_to_rad(azimuth_deg);
    return {radius * std::cos(a), radius * std::sin(a)};
}

} // namespace

DeploymentLayout build_layout(double isd, double bs_height, const std::array<double, 3>& boresights_deg) {
    if (!(isd > 0.0) || !std::isfinite(isd)) {
        throw ConfigError("isd must be positive, got " + std::to_string(isd));
    }
    if (!(bs_height > 0.0) || !std::isfinite(bs_height)) {
        throw ConfigError("bs_height must be positive, got " + std::to_string(bs_height));
    }

    DeploymentLayout layout;
    layout.isd = isd;
    layout.bs_height = bs_height;

    layout.sites.col(0) = Position2::Zero();
    for (int k = 0; k < 6; ++k) {
        layout.sites.col(1 + k) = polar(isd, 60.0 * k);
    }
    for (int k = 0; k < 12; ++k) {
        const double radius = (k % 2 == 0) ? 2.0 * isd : std::sqrt(3.0) * isd;
        layout.sites.col(7 + k) = polar(radius, 30.0 * k);
    }

    // Cluster translation 3*a1 + 2*a2 with a1 = (1, 0), a2 = (1/2, sqrt(3)/2)
    // in ISD units, rotated through the six lattice directions.
    const Position2 base = isd * Position2(4.0, std::sqrt(3.0));
    layout.wrap_shifts.col(0) = Position2::Zero();
    for (int k = 0; k < 6; ++k) {
        const Eigen::Rotation2Dd rot(deg_to_rad(60.0 * k));
        layout.wrap_shifts.col(1 + k) = rot * base;
    }

    layout.sectors.reserve(kNumSectors);
    for (int site = 0; site < kNumSites; ++site) {
        for (int k = 0; k < kSectorsPerSite; ++k) {
            SectorGeometry s;
            s.sector_id = site * kSectorsPerSite + k;
            s.site_id = site;
            s.position = layout.sites.col(site);
            s.boresight_deg = wrap_unsigned_deg(boresights_deg[static_cast<std::size_t>(k)]);
            s.bs_height = bs_height;
            layout.sectors.push_back(s);
        }
    }
    return layout;
}

std::string_view to_string(PositionLabel label) {
    switch (label) {
    case PositionLabel::CellCenter:
        return "cell-center";
    case PositionLabel::CellMiddle:
        return "cell-middle";
    case PositionLabel::CellEdge:
        return "cell-edge";
    }
    return "?";
}

PositionLabel parse_position_label(std::string_view text) {
    for (PositionLabel label : kAllPositions) {
        if (text == to_string(label)) {
            return label;
        }
    }
    throw ConfigError("unknown position '" + std::string(text) + "' (expected cell-center, cell-middle or cell-edge)");
}

double radial_fraction(PositionLabel label) {
    switch (label) {
    case PositionLabel::CellCenter:
        return 0.0;
    case PositionLabel::CellMiddle:
        return 0.25;
    case PositionLabel::CellEdge:
        return 0.5;
    }
    return 0.0;
}

UavPosition make_uav(PositionLabel label, double isd, double h) {
    if (!(h > 0.0)) {
        throw ConfigError("UAV altitude must be positive, got " + std::to_string(h));
    }
    return {Position2(radial_fraction(label) * isd, 0.0), h, label};
}

Position2 wraparound_image(const DeploymentLayout& layout, const Position2& uav_xy, const Position2& site) {
    Eigen::Index best = 0;
    double best_d2 = (uav_xy - site).squaredNorm();
    for (Eigen::Index i = 1; i < kNumWrapImages; ++i) {
        const double d2 = (uav_xy - (site + layout.wrap_shifts.col(i))).squaredNorm();
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return layout.wrap_shifts.col(best);
}

LinkGeometry link_geometry(const UavPosition& uav, const SectorGeometry& sector, const Position2& image_offset) {
    const Position2 delta = uav.xy - (sector.position + image_offset);
    const double dh = uav.h - sector.bs_height;

    LinkGeometry g;
    g.d2d = delta.norm();
    g.d3d = std::hypot(g.d2d, dh);
    if (g.d3d == 0.0) {
        throw DomainError("degenerate link: UAV coincides with sector " + std::to_string(sector.sector_id));
    }
    g.theta_deg = rad_to_deg(std::atan(dh / g.d3d));
    g.phi_deg = wrap_signed_deg(rad_to_deg(std::atan2(delta.y(), delta.x())));
    g.image_offset = image_offset;
    return g;
}

LinkGeometry wrapped_link(const DeploymentLayout& layout, const UavPosition& uav, const SectorGeometry& sector) {
    return link_geometry(uav, sector, wraparound_image(layout, uav.xy, sector.position));
}

} // namespace uavsim
