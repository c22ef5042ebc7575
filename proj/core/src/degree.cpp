#include "percycle/degree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "percycle/errors.hpp"
#include "percycle/model.hpp"

namespace percycle::degree {

namespace {

// Simpson average of the field over one period with the coefficient values
// cached per node, so a boundary scan pays the coefficient evaluations only
// once instead of once per sampled state.
class AveragedField {
 public:
  AveragedField(const ParamSet& p, int quad_n) : n_(p.n) {
    int n = quad_n < 2 ? 2 : (quad_n % 2 != 0 ? quad_n + 1 : quad_n);
    const double h = p.T / n;
    nodes_.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
      double w = (k == 0 || k == n) ? 1.0 : (k % 2 != 0 ? 4.0 : 2.0);
      nodes_.push_back({eval_coeffs(p, k * h), w});
    }
    scale_ = h / 3.0 / p.T;
  }

  State5 operator()(const State5& x) const {
    State5 y = clamp_state(x);
    State5 acc{};
    for (const auto& nd : nodes_) {
      State5 f = rhs_from_values(nd.coeffs, n_, y, y[4]);
      for (std::size_t i = 0; i < 5; ++i) acc[i] += nd.weight * f[i];
    }
    for (std::size_t i = 0; i < 5; ++i) acc[i] *= scale_;
    return acc;
  }

 private:
  struct Node {
    CoeffValues coeffs;
    double weight;
  };
  double n_;
  double scale_ = 0.0;
  std::vector<Node> nodes_;
};

// Calls fn(x) for every point of the face_grid^4 lattice on the face of
// `box` with coordinate j pinned to `pinned`. Lattice values include both
// corners of each free coordinate exactly.
template <class Fn>
void for_each_face_point(const bounds::Box5& box, int j, double pinned, int G,
                         Fn&& fn) {
  std::array<int, 4> free_coord{};
  int nf = 0;
  for (int i = 0; i < 5; ++i) {
    if (i != j) free_coord[nf++] = i;
  }
  std::array<int, 4> digit{};
  for (;;) {
    State5 x{};
    x[j] = pinned;
    for (int d = 0; d < 4; ++d) {
      int i = free_coord[d];
      int m = digit[d];
      x[i] = m == G - 1 ? box.upper[i]
                        : box.lower[i] +
                              m * (box.upper[i] - box.lower[i]) / (G - 1);
    }
    fn(x);
    int d = 3;
    while (d >= 0 && ++digit[d] == G) digit[d--] = 0;
    if (d < 0) break;
  }
}

}  // namespace

State5 avg_field(const ParamSet& p, const State5& x, int quad_n) {
  return AveragedField(p, quad_n)(x);
}

std::array<FaceReport, 10> face_reports(const ParamSet& p,
                                        const bounds::Box5& box,
                                        const CertOptions& opt) {
  const AveragedField af(p, opt.quad_n);
  const int G = std::max(2, opt.face_grid);
  std::array<FaceReport, 10> out{};
  for (int j = 0; j < 5; ++j) {
    for (int side = 0; side < 2; ++side) {
      FaceReport fr;
      fr.coord = j;
      fr.upper = side == 1;
      fr.required_sign = fr.upper ? -1 : +1;
      const double pinned = fr.upper ? box.upper[j] : box.lower[j];
      bool first = true;
      for_each_face_point(box, j, pinned, G, [&](const State5& x) {
        const double val = af(x)[j];
        const bool worse =
            first || (fr.upper ? val > fr.worst_value : val < fr.worst_value);
        if (worse) {
          fr.worst_value = val;
          fr.worst_point = x;
          first = false;
        }
      });
      fr.pass = fr.upper ? fr.worst_value < 0.0 : fr.worst_value > 0.0;
      fr.marginal = std::abs(fr.worst_value) < opt.marginal_threshold;
      out[2 * j + side] = fr;
    }
  }
  return out;
}

double homotopy_min_norm(const ParamSet& p, const bounds::Box5& box,
                         int lambda_grid, int boundary_grid, int quad_n) {
  const AveragedField af(p, quad_n);
  const int G = std::max(2, boundary_grid);
  const int L = std::max(2, lambda_grid);
  const State5 center = box.center();
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 5; ++j) {
    for (int side = 0; side < 2; ++side) {
      const double pinned = side == 1 ? box.upper[j] : box.lower[j];
      for_each_face_point(box, j, pinned, G, [&](const State5& x) {
        const State5 phi = af(x);
        for (int l = 0; l < L; ++l) {
          const double lam = static_cast<double>(l) / (L - 1);
          double nrm = 0.0;
          for (std::size_t i = 0; i < 5; ++i) {
            const double v =
                (1.0 - lam) * (center[i] - x[i]) + lam * phi[i];
            nrm = std::max(nrm, std::abs(v));
          }
          best = std::min(best, nrm);
        }
      });
    }
  }
  return best;
}

Certificate certify_box(const ParamSet& p, const bounds::Box5& box,
                        const CertOptions& opt) {
  Certificate cert;
  cert.faces = face_reports(p, box, opt);
  cert.homotopy_min_norm = homotopy_min_norm(p, box, opt.lambda_grid,
                                             opt.boundary_grid, opt.quad_n);
  cert.homotopy_nonvanishing = cert.homotopy_min_norm > opt.homotopy_floor;
  cert.verdict = std::all_of(cert.faces.begin(), cert.faces.end(),
                             [](const FaceReport& f) { return f.pass; });
  return cert;
}

int Certificate::degree_value() const {
  if (!verdict) {
    throw PercycleError(ErrorCode::certificate_invalid,
                        "degree queried on a failing certificate");
  }
  // Uniform outflow through every face: the averaged field is homotopic to
  // x -> center - x on the boundary, whose degree on the box is (-1)^5.
  return -1;
}

}  // namespace percycle::degree
