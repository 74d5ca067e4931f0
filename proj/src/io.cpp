#include "vflab/io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "vflab/errors.hpp"

namespace vflab::io {

namespace {

std::ofstream open_or_throw(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_curve_csv(const std::filesystem::path& path,
                     const DiscreteCurve& curve, const FrenetData& frenet) {
  if (curve.nodes.size() != frenet.size()) {
    throw DomainError("curve and Frenet data disagree in node count");
  }
  std::ofstream out = open_or_throw(path);
  out << "s,x,y,z,kappa,tau\n";
  for (std::size_t i = 0; i < curve.nodes.size(); ++i) {
    const Vec3& r = curve.nodes[i];
    out << fmt17(frenet.arclength[i]) << ',' << fmt17(r.x()) << ','
        << fmt17(r.y()) << ',' << fmt17(r.z()) << ',' << fmt17(frenet.kappa[i])
        << ',' << (frenet.defined[i] ? fmt17(frenet.tau[i]) : "nan") << '\n';
  }
  if (!out) throw Error("failed writing " + path.string());
}

void write_field_csv(const std::filesystem::path& path,
                     const ComplexField& field, const HydroFields& hydro) {
  if (field.size() != hydro.rho.size()) {
    throw DomainError("field and hydrodynamic data disagree in sample count");
  }
  std::ofstream out = open_or_throw(path);
  out << "l,re,im,rho,v,w\n";
  for (std::size_t j = 0; j < field.size(); ++j) {
    out << fmt17(field.grid(j)) << ',' << fmt17(field.values[j].real()) << ','
        << fmt17(field.values[j].imag()) << ',' << fmt17(hydro.rho[j]) << ',';
    if (hydro.defined[j]) {
      out << fmt17(hydro.v[j]) << ',' << fmt17(hydro.w[j]);
    } else {
      out << "nan,nan";
    }
    out << '\n';
  }
  if (!out) throw Error("failed writing " + path.string());
}

void write_conservation_csv(const std::filesystem::path& path,
                            const ConservationReport& report) {
  std::ofstream out = open_or_throw(path);
  out << "t,mass,momentum,energy\n";
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    out << fmt17(report.times[i]) << ',' << fmt17(report.mass[i]) << ','
        << fmt17(report.momentum[i]) << ',' << fmt17(report.energy[i]) << '\n';
  }
  if (!out) throw Error("failed writing " + path.string());
}

void write_energy_scan_csv(const std::filesystem::path& path,
                           const std::vector<EnergyScanRow>& rows) {
  std::ofstream out = open_or_throw(path);
  out << "a,total,segment_term,distortion_term\n";
  for (const EnergyScanRow& row : rows) {
    out << fmt17(row.a) << ',' << fmt17(row.total) << ','
        << fmt17(row.segment_term) << ',' << fmt17(row.distortion_term)
        << '\n';
  }
  if (!out) throw Error("failed writing " + path.string());
}

void write_trajectory_index(const std::filesystem::path& path,
                            const std::string& experiment,
                            const std::vector<double>& times,
                            const std::vector<std::string>& files) {
  if (times.size() != files.size()) {
    throw DomainError("trajectory index: times and files disagree in length");
  }
  nlohmann::ordered_json doc;
  doc["experiment"] = experiment;
  doc["times"] = times;
  doc["files"] = files;
  std::ofstream out = open_or_throw(path);
  out << doc.dump(2) << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace vflab::io
