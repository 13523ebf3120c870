#pragma once

#include <Eigen/Core>

#include <array>
#include <string_view>
#include <vector>

namespace uavsim {

using Position2 = Eigen::Vector2d;

inline constexpr int kNumSites = 19;
inline constexpr int kSectorsPerSite = 3;
inline constexpr int kNumSectors = kNumSites * kSectorsPerSite;
inline constexpr int kNumWrapImages = 7;

struct SectorGeometry {
    int sector_id = 0;
    int site_id = 0;
    Position2 position = Position2::Zero();
    double boresight_deg = 0.0; // [0, 360)
    double bs_height = 0.0;
};

/// 19-site tri-sector hexagonal cluster. Site 0 is at the origin, ring 1
/// at azimuths 0, 60, ..., 300 degrees and distance ISD, ring 2 alternates
/// 2*ISD corners (even multiples of 30 degrees) and sqrt(3)*ISD edge
/// midpoints (odd multiples). Sector k of site j has id 3*j + k.
struct DeploymentLayout {
    double isd = 0.0;
    double bs_height = 0.0;
    Eigen::Matrix<double, 2, kNumSites> sites;
    std::vector<SectorGeometry> sectors;
    /// Column 0 is the identity image; columns 1..6 translate the cluster
    /// onto its six neighbours in the wrap-around tiling.
    Eigen::Matrix<double, 2, kNumWrapImages> wrap_shifts;
};

DeploymentLayout build_layout(double isd, double bs_height, const std::array<double, 3>& boresights_deg);

enum class PositionLabel { CellCenter, CellMiddle, CellEdge };

inline constexpr std::array<PositionLabel, 3> kAllPositions = {
    PositionLabel::CellCenter, PositionLabel::CellMiddle, PositionLabel::CellEdge};

std::string_view to_string(PositionLabel label);
PositionLabel parse_position_label(std::string_view text);

struct UavPosition {
    Position2 xy = Position2::Zero();
    double h = 0.0;
    PositionLabel label = PositionLabel::CellCenter;
};

/// Radial offset of a labelled UAV point from the centre site as a fraction of ISD.
double radial_fraction(PositionLabel label);

/// Deterministic evaluation point inside the centre cell along azimuth 0.
UavPosition make_uav(PositionLabel label, double isd, double h);

/// Wrap-around shift minimising the horizontal UAV-to-site distance.
/// Ties keep the identity image, then the lowest image index.
Position2 wraparound_image(const DeploymentLayout& layout, const Position2& uav_xy, const Position2& site);

struct LinkGeometry {
    double d2d = 0.0;
    double d3d = 0.0;
    double theta_deg = 0.0; // atan((h - h_b) / d3d)
    double phi_deg = 0.0;   // [-180, 180)
    Position2 image_offset = Position2::Zero();
};

/// Distances and angles from a (possibly displaced) sector to the UAV.
/// `image_offset` is added to the sector position before evaluation.
/// Throws DomainError when the UAV coincides with the antenna.
LinkGeometry link_geometry(const UavPosition& uav, const SectorGeometry& sector,
                           const Position2& image_offset = Position2::Zero());

/// Convenience: wrap-around image selection followed by link_geometry.
LinkGeometry wrapped_link(const DeploymentLayout& layout, const UavPosition& uav, const SectorGeometry& sector);

} // namespace uavsim
