#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vflab/conservation.hpp"
#include "vflab/curve.hpp"
#include "vflab/energetics.hpp"
#include "vflab/field.hpp"
#include "vflab/nls.hpp"

namespace vflab::io {

/// 17-significant-digit decimal rendering (round-trips doubles exactly).
std::string fmt17(double v);

/// Curve snapshot: header `s,x,y,z,kappa,tau`, one row per node, LF endings.
/// Undefined torsion renders as nan.
void write_curve_csv(const std::filesystem::path& path,
                     const DiscreteCurve& curve, const FrenetData& frenet);

/// Field snapshot: header `l,re,im,rho,v,w`; undefined v/w render as nan.
void write_field_csv(const std::filesystem::path& path,
                     const ComplexField& field, const HydroFields& hydro);

/// Invariant series: header `t,mass,momentum,energy`.
void write_conservation_csv(const std::filesystem::path& path,
                            const ConservationReport& report);

/// Loop/ring energy scan: header `a,total,segment_term,distortion_term`.
struct EnergyScanRow {
  double a = 0.0;
  double total = 0.0;
  double segment_term = 0.0;
  double distortion_term = 0.0;
};

void write_energy_scan_csv(const std::filesystem::path& path,
                           const std::vector<EnergyScanRow>& rows);

/// Trajectory index: sampled times plus the per-time snapshot filenames.
void write_trajectory_index(const std::filesystem::path& path,
                            const std::string& experiment,
                            const std::vector<double>& times,
                            const std::vector<std::string>& files);

}  // namespace vflab::io
