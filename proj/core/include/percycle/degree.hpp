#pragma once

#include <array>

#include "percycle/bounds.hpp"
#include "percycle/params.hpp"

namespace percycle::degree {

struct CertOptions {
  int quad_n = 256;        // Simpson subintervals inside avg_field
  int face_grid = 5;       // lattice points per free coordinate on each face
  int lambda_grid = 11;    // homotopy parameter samples in [0, 1]
  int boundary_grid = 5;   // lattice points per free coordinate for homotopy
  double marginal_threshold = 1e-9;  // |worst| below this flags a face marginal
  double homotopy_floor = 1e-12;     // min norm must exceed this
};

// Time average over one period of the vector field with the state frozen.
// This is the field whose boundary behaviour the certificate samples.
State5 avg_field(const ParamSet& p, const State5& x, int quad_n = 256);

struct FaceReport {
  int coord = 0;          // state index 0..4
  bool upper = false;     // which of the two faces of that coordinate
  int required_sign = 0;  // +1 on lower faces (inflow), -1 on upper (outflow)
  double worst_value = 0.0;  // lattice extreme of the tested component
  State5 worst_point{};      // state where the extreme was attained
  bool pass = false;
  bool marginal = false;
};

struct Certificate {
  // Face order: coordinate 0..4, lower before upper.
  std::array<FaceReport, 10> faces{};
  double homotopy_min_norm = 0.0;
  bool homotopy_nonvanishing = false;
  bool verdict = false;  // every face has the required strict sign

  // Brouwer degree of the averaged field on the box interior. Defined only
  // for a passing certificate; throws certificate_invalid otherwise.
  int degree_value() const;
};

// Samples all ten faces of the box on a face_grid^4 lattice per face and
// records the worst (least compliant) value of the matching component of
// the averaged field. Same order as Certificate::faces. The box-shrinking
// loop uses this directly without paying for the homotopy scan.
std::array<FaceReport, 10> face_reports(const ParamSet& p,
                                        const bounds::Box5& box,
                                        const CertOptions& opt = {});

// face_reports plus the homotopy scan and the combined verdict. The outflow
// pattern on a passing certificate pins the degree to -1.
Certificate certify_box(const ParamSet& p, const bounds::Box5& box,
                        const CertOptions& opt = {});

// Minimum over the sampled box boundary and homotopy parameter of
// || (1-lambda) * (center - x) + lambda * avg_field(x) ||_inf.
// The straight-line homotopy connects the averaged field to a field whose
// degree on the box is known; a positive minimum is the sampled evidence
// that the connection never dies on the boundary.
double homotopy_min_norm(const ParamSet& p, const bounds::Box5& box,
                         int lambda_grid, int boundary_grid, int quad_n);

}  // namespace percycle::degree
