#include "phasekit/matrix_phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "phasekit/errors.hpp"

namespace phasekit {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kScanPoints = 720;     // coarse scan of the support circle
constexpr double kArcTol = 1e-10;    // absolute angle tolerance for bisection

using Eigen::MatrixXcd;
using Eigen::VectorXd;

// Fast lower-accuracy lambda_min for the coarse scan. 1x1/2x2 are exact;
// 3x3 uses the trigonometric solution of the characteristic cubic (valid for
// complex Hermitian input since the spectrum is real); larger sizes fall back
// to the iterative solver.
double lambda_min_fast(const MatrixXcd& H) {
  const int n = static_cast<int>(H.rows());
  if (n == 1) return H(0, 0).real();
  if (n == 2) {
    const double a = H(0, 0).real();
    const double b = H(1, 1).real();
    const double c2 = std::norm(H(0, 1));
    const double mid = 0.5 * (a + b);
    const double rad = std::sqrt(0.25 * (a - b) * (a - b) + c2);
    return mid - rad;
  }
  if (n == 3) {
    const double m = (H(0, 0).real() + H(1, 1).real() + H(2, 2).real()) / 3.0;
    MatrixXcd K = H;
    K(0, 0) -= m;
    K(1, 1) -= m;
    K(2, 2) -= m;
    const double p = K.squaredNorm() / 6.0;
    if (p <= 0.0) return m;
    const double q = std::real(K(0, 0) * (K(1, 1) * K(2, 2) - K(1, 2) * K(2, 1)) -
                               K(0, 1) * (K(1, 0) * K(2, 2) - K(1, 2) * K(2, 0)) +
                               K(0, 2) * (K(1, 0) * K(2, 1) - K(1, 1) * K(2, 0))) /
                     2.0;
    const double p15 = std::pow(p, 1.5);
    const double disc = std::max(0.0, p * p * p - q * q);
    const double phi = std::atan2(std::sqrt(disc), q) / 3.0;
    // smallest root of the shifted cubic
    return m + 2.0 * std::sqrt(p) * std::cos(phi + 2.0 * kPi / 3.0);
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

struct RotationFamily {
  MatrixXcd H0;  // Herm(C)
  MatrixXcd K0;  // Herm(-iC)

  MatrixXcd at(double theta) const {
    return std::cos(theta) * H0 + std::sin(theta) * K0;
  }
  double min_eig(double theta) const { return lambda_min_hermitian(at(theta)); }
  double min_eig_fast(double theta) const { return lambda_min_fast(at(theta)); }
};

// Connected component of {theta : lambda_min(Herm(e^{-i theta}C)) > level}
// around the scan maximum, endpoints refined by bisection.
struct ArcComponent {
  double lo = 0.0, hi = 0.0;
  bool found = false;
};

ArcComponent locate_arc(const RotationFamily& fam, double level) {
  std::array<double, kScanPoints> value;
  int best = 0;
  for (int k = 0; k < kScanPoints; ++k) {
    const double theta = -kPi + 2.0 * kPi * k / kScanPoints;
    value[k] = fam.min_eig_fast(theta);
    if (value[k] > value[best]) best = k;
  }
  // the fast 3x3 path is approximate; confirm with the accurate solver
  double best_theta = -kPi + 2.0 * kPi * best / kScanPoints;
  if (fam.min_eig(best_theta) <= level) {
    // re-scan accurately in the neighborhood before giving up
    bool ok = false;
    for (int k = 0; k < kScanPoints && !ok; ++k) {
      const double theta = -kPi + 2.0 * kPi * k / kScanPoints;
      if (value[k] > level - 1e-12 && fam.min_eig(theta) > level) {
        best = k;
        best_theta = theta;
        ok = true;
      }
    }
    if (!ok) return {};
  }

  const double step = 2.0 * kPi / kScanPoints;
  auto inside = [&](double theta) { return fam.min_eig(theta) > level; };

  // walk outward on the circular grid
  int left_steps = 0;
  while (left_steps < kScanPoints &&
         inside(best_theta - (left_steps + 1) * step)) {
    ++left_steps;
  }
  int right_steps = 0;
  while (right_steps < kScanPoints - left_steps &&
         inside(best_theta + (right_steps + 1) * step)) {
    ++right_steps;
  }

  auto bisect = [&](double in, double out) {
    while (std::abs(out - in) > kArcTol) {
      const double mid = 0.5 * (in + out);
      (inside(mid) ? in : out) = mid;
    }
    return 0.5 * (in + out);
  };

  ArcComponent arc;
  arc.found = true;
  const double left_in = best_theta - left_steps * step;
  const double right_in = best_theta + right_steps * step;
  arc.lo = bisect(left_in, left_in - step);
  arc.hi = bisect(right_in, right_in + step);
  return arc;
}

int numeric_rank(const Eigen::JacobiSVD<MatrixXcd>& svd, double tol) {
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++r;
  return r;
}

// Detects matrices of the form e^{i theta'} * Hermitian: Herm(C) and
// Herm(-iC) span a line. Returns the rotation angle through theta_out.
bool is_rotated_hermitian_form(const MatrixXcd& H0, const MatrixXcd& K0,
                               double scale, double* theta_out) {
  const double nh = H0.norm(), nk = K0.norm();
  const double rel = 1e-12 * std::max(scale, 1e-300);
  if (nk <= rel * std::max(1.0, nh / std::max(scale, 1e-300))) {
    *theta_out = 0.0;
    return true;
  }
  if (nh <= rel) {
    *theta_out = kPi / 2.0;
    return true;
  }
  const Complex ip = (H0.conjugate().cwiseProduct(K0)).sum();  // <H0, K0>_F
  const double cos2 = std::norm(ip) / (nh * nh * nk * nk);
  if (cos2 < 1.0 - 1e-20) return false;
  const MatrixXcd E = (nh >= nk) ? MatrixXcd(H0 / nh) : MatrixXcd(K0 / nk);
  const double ch = (E.conjugate().cwiseProduct(H0)).sum().real();
  const double sk = (E.conjugate().cwiseProduct(K0)).sum().real();
  *theta_out = std::atan2(sk, ch);
  // confirm residual: e^{-i theta} C must be Hermitian
  const MatrixXcd R = std::sin(*theta_out) * H0 - std::cos(*theta_out) * K0;
  return R.norm() <= 1e-10 * std::max(nh, nk);
}

VectorXd sorted_descending(VectorXd v) {
  std::sort(v.data(), v.data() + v.size(), std::greater<double>());
  return v;
}

// Phases of a sectorial matrix given a rotation gamma with
// Herm(e^{-i gamma} C) positive definite.
VectorXd sectorial_phases_at(const MatrixXcd& C, double gamma) {
  const Complex rot = std::polar(1.0, -gamma);
  const MatrixXcd Cr = rot * C;
  const MatrixXcd H = hermitian_part(Cr);
  const MatrixXcd K = skew_part_as_hermitian(Cr);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
  if (es.eigenvalues()(0) <= 0.0) {
    throw ClassificationError(
        "sectorial phase path: Hermitian part not positive definite at the "
        "selected rotation");
  }
  const MatrixXcd Hinv_sqrt = es.operatorInverseSqrt();
  const MatrixXcd S = Hinv_sqrt * K * Hinv_sqrt;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es2(S, Eigen::EigenvaluesOnly);
  VectorXd ph(S.rows());
  for (int i = 0; i < ph.size(); ++i)
    ph(i) = gamma + std::atan(es2.eigenvalues()(i));
  return sorted_descending(ph);
}

// Shift the whole spectrum by a multiple of 2*pi so that the center takes
// its principal value in (-pi, pi].
void make_center_principal(VectorXd* ph, double* center) {
  if (ph->size() == 0) {
    *center = 0.0;
    return;
  }
  double c = 0.5 * ((*ph)(0) + (*ph)(ph->size() - 1));
  const double cp = principal_angle(c);
  const double shift = cp - c;
  if (shift != 0.0) ph->array() += shift;
  *center = cp;
}

struct SectorScan {
  Classification cls;
  ArcComponent strict;       // lambda_min > tol*||C||
  ArcComponent closed;       // lambda_min > -tol*||C||
  double sigma_max = 0.0;
  double rotated_theta = 0.0;     // rotation making C Hermitian, if any
  bool rotated_form = false;
  Eigen::JacobiSVD<MatrixXcd> svd;
};

SectorScan scan_matrix(const MatrixXcd& C, double tol) {
  SectorScan out;
  out.svd.compute(C, Eigen::ComputeThinU | Eigen::ComputeThinV);
  out.sigma_max = (C.size() == 0 || out.svd.singularValues().size() == 0)
                      ? 0.0
                      : out.svd.singularValues()(0);
  out.cls.numeric_rank = numeric_rank(out.svd, tol);

  if (out.cls.numeric_rank == 0) {
    // zero matrix: quasi-sectorial with an empty phase list
    out.cls.kind = SectorKind::QuasiSectorial;
    return out;
  }

  RotationFamily fam{hermitian_part(C), skew_part_as_hermitian(C)};
  out.rotated_form = is_rotated_hermitian_form(fam.H0, fam.K0, out.sigma_max,
                                               &out.rotated_theta);

  const double strict_level = tol * out.sigma_max;
  out.strict = locate_arc(fam, strict_level);
  if (out.strict.found) {
    out.cls.kind = SectorKind::Sectorial;
    return out;
  }
  out.closed = locate_arc(fam, -strict_level);
  if (!out.closed.found) {
    out.cls.kind = SectorKind::None;
    return out;
  }

  if (out.rotated_form) {
    // segment numerical range; rotated Hermitian when 0 is interior
    const Complex rot = std::polar(1.0, -out.rotated_theta);
    const MatrixXcd Ht = hermitian_part(rot * C);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(Ht, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues()(0);
    const double lmax = es.eigenvalues()(es.eigenvalues().size() - 1);
    if (lmin < -strict_level && lmax > strict_level) {
      out.cls.kind = SectorKind::RotatedHermitian;
      return out;
    }
  }

  const double gamma0 = 0.5 * (out.closed.lo + out.closed.hi);
  QuasiSectorialTest qt = quasi_sectorial_test(C, gamma0, tol);
  const double eps_scaled = qt.eps * out.sigma_max;
  out.cls.kind = (eps_scaled > 1e-7) ? SectorKind::QuasiSectorial
                                     : SectorKind::SemiSectorial;
  return out;
}

// Compress a rank-deficient (semi-)sectorial matrix onto its range. Kernel
// and range are orthogonal for any matrix admitting a generalized sectorial
// decomposition, so the compression preserves the phases.
MatrixXcd range_compression(const SectorScan& scan, const MatrixXcd& C) {
  const int r = scan.cls.numeric_rank;
  if (r == static_cast<int>(C.rows())) return C;
  const MatrixXcd Q = scan.svd.matrixU().leftCols(r);
  return Q.adjoint() * C * Q;
}

VectorXd rotated_hermitian_phases(const SectorScan& scan, const MatrixXcd& C,
                                  double tol, double* center) {
  const Complex rot = std::polar(1.0, -scan.rotated_theta);
  const MatrixXcd Ht = hermitian_part(rot * C);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(Ht, Eigen::EigenvaluesOnly);
  int pos = 0, neg = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()(i);
    if (ev > tol * scan.sigma_max) ++pos;
    if (ev < -tol * scan.sigma_max) ++neg;
  }
  // theta_0 is determined modulo pi; fix the representative in (-pi/2, pi/2].
  double theta0 = scan.rotated_theta - kPi / 2.0;
  bool swapped = false;
  while (theta0 <= -kPi / 2.0) {
    theta0 += kPi;
    swapped = !swapped;
  }
  while (theta0 > kPi / 2.0) {
    theta0 -= kPi;
    swapped = !swapped;
  }
  if (swapped) std::swap(pos, neg);
  VectorXd ph(pos + neg);
  for (int i = 0; i < pos; ++i) ph(i) = theta0 + kPi / 2.0;
  for (int i = 0; i < neg; ++i) ph(pos + i) = theta0 - kPi / 2.0;
  *center = theta0;
  return ph;
}

}  // namespace

bool is_sectorial(SectorKind k) { return k == SectorKind::Sectorial; }

bool is_quasi_sectorial(SectorKind k) {
  return k == SectorKind::Sectorial || k == SectorKind::QuasiSectorial;
}

bool is_semi_sectorial(SectorKind k) { return k != SectorKind::None; }

const char* to_string(SectorKind k) {
  switch (k) {
    case SectorKind::Sectorial: return "sectorial";
    case SectorKind::QuasiSectorial: return "quasi_sectorial";
    case SectorKind::SemiSectorial: return "semi_sectorial";
    case SectorKind::RotatedHermitian: return "rotated_hermitian";
    case SectorKind::None: return "none";
  }
  return "unknown";
}

Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& M) {
  return 0.5 * (M + M.adjoint());
}

Eigen::MatrixXcd skew_part_as_hermitian(const Eigen::MatrixXcd& M) {
  return (M - M.adjoint()) / Complex(0.0, 2.0);
}

double lambda_min_hermitian(const Eigen::MatrixXcd& H) {
  if (H.rows() == 1) return H(0, 0).real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double lambda_max_hermitian(const Eigen::MatrixXcd& H) {
  if (H.rows() == 1) return H(0, 0).real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(es.eigenvalues().size() - 1);
}

double principal_angle(double a) {
  double r = std::fmod(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  if (r > kPi) r -= 2.0 * kPi;
  return r;
}

double PhaseSpectrum::phi_max() const {
  if (phases.size() == 0) return -std::numeric_limits<double>::infinity();
  return phases(0);
}

double PhaseSpectrum::phi_min() const {
  if (phases.size() == 0) return std::numeric_limits<double>::infinity();
  return phases(phases.size() - 1);
}

SupportArc support_arc(const Eigen::MatrixXcd& C, double tol) {
  SupportArc arc;
  SectorScan scan = scan_matrix(C, tol);
  if (scan.cls.numeric_rank == 0) {
    arc.nonempty = true;
    arc.degenerate = true;
    arc.theta_lo = -kPi;
    arc.theta_hi = kPi;
    arc.delta = 0.0;
    return arc;
  }
  if (scan.strict.found) {
    arc.nonempty = true;
    arc.theta_lo = scan.strict.lo;
    arc.theta_hi = scan.strict.hi;
    arc.delta = std::max(0.0, kPi - (arc.theta_hi - arc.theta_lo));
    // report the arc with its midpoint in principal position
    const double mid = 0.5 * (arc.theta_lo + arc.theta_hi);
    const double shift = principal_angle(mid) - mid;
    arc.theta_lo += shift;
    arc.theta_hi += shift;
    return arc;
  }
  if (scan.closed.found) {
    arc.delta = std::min(kPi, std::max(0.0, kPi - (scan.closed.hi - scan.closed.lo)));
    return arc;
  }
  arc.delta = 2.0 * kPi;
  return arc;
}

Classification classify(const Eigen::MatrixXcd& C, double tol) {
  return scan_matrix(C, tol).cls;
}

PhaseSpectrum phases(const Eigen::MatrixXcd& C, double tol) {
  SectorScan scan = scan_matrix(C, tol);
  PhaseSpectrum spec;
  spec.classification = scan.cls;
  spec.rank = scan.cls.numeric_rank;

  if (scan.cls.kind == SectorKind::None) {
    std::ostringstream os;
    os << "phases: matrix is not semi-sectorial (field angle "
       << support_arc(C, tol).delta << " rad exceeds pi)";
    throw ClassificationError(os.str());
  }
  if (spec.rank == 0) return spec;  // zero matrix: empty spectrum

  if (scan.cls.kind == SectorKind::Sectorial) {
    const double gamma = 0.5 * (scan.strict.lo + scan.strict.hi);
    spec.phases = sectorial_phases_at(C, gamma);
    make_center_principal(&spec.phases, &spec.center);
    return spec;
  }

  if (scan.cls.kind == SectorKind::RotatedHermitian) {
    spec.phases = rotated_hermitian_phases(scan, C, tol, &spec.center);
    return spec;
  }

  // Quasi- and semi-sectorial: compress onto the range, then for the quasi
  // case the core is sectorial; otherwise regularize toward the boundary.
  const MatrixXcd core = range_compression(scan, C);

  if (scan.cls.kind == SectorKind::QuasiSectorial) {
    SectorScan core_scan = scan_matrix(core, tol);
    if (core_scan.strict.found) {
      const double gamma = 0.5 * (core_scan.strict.lo + core_scan.strict.hi);
      spec.phases = sectorial_phases_at(core, gamma);
      make_center_principal(&spec.phases, &spec.center);
      return spec;
    }
    // fall through: boundary-degenerate core, treat as semi-sectorial
  }

  const double gamma0 = 0.5 * (scan.closed.lo + scan.closed.hi);
  const Complex dir = std::polar(1.0, gamma0);
  const double accept = std::max(10.0 * tol, 1e-5);
  VectorXd prev;
  bool have_prev = false;
  double prev_delta = 0.0;
  for (double delta = 1e-3; delta >= 0.99e-12; delta *= 0.1) {
    const MatrixXcd Creg =
        core + delta * scan.sigma_max * dir *
                   MatrixXcd::Identity(core.rows(), core.cols());
    VectorXd ph = sectorial_phases_at(Creg, gamma0);
    if (have_prev) {
      const double diff = (ph - prev).cwiseAbs().maxCoeff();
      if (diff < accept) {
        // one Richardson step on the sqrt(delta) error model
        const double s = std::sqrt(0.1);
        VectorXd extrap = (ph - s * prev) / (1.0 - s);
        spec.phases = extrap;
        make_center_principal(&spec.phases, &spec.center);
        return spec;
      }
    }
    prev = ph;
    prev_delta = delta;
    have_prev = true;
  }
  std::ostringstream os;
  os << "phases: regularization schedule (1e-3 down to 1e-12) did not "
        "converge; last iterates at delta = "
     << prev_delta << " and delta = " << prev_delta * 10.0;
  throw ConvergenceError(os.str());
}

std::vector<Complex> numerical_range_boundary(const Eigen::MatrixXcd& C,
                                              int k) {
  if (k < 8) throw std::invalid_argument("numerical_range_boundary: k >= 8");
  std::vector<Complex> pts;
  pts.reserve(k);
  const MatrixXcd H0 = hermitian_part(C);
  const MatrixXcd K0 = skew_part_as_hermitian(C);
  for (int i = 0; i < k; ++i) {
    const double theta = 2.0 * kPi * i / k;
    const MatrixXcd H = std::cos(theta) * H0 + std::sin(theta) * K0;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
    const auto v = es.eigenvectors().col(H.rows() - 1);
    pts.push_back((v.adjoint() * C * v)(0, 0));
  }
  return pts;
}

QuasiSectorialTest quasi_sectorial_test(const Eigen::MatrixXcd& C, double alpha,
                                        double tol) {
  QuasiSectorialTest out;
  const int n = static_cast<int>(C.rows());
  Eigen::JacobiSVD<MatrixXcd> svd(C);
  const double smax = (n == 0) ? 0.0 : svd.singularValues()(0);
  if (smax <= 0.0) {
    out.eps = 1e12;  // zero matrix: inequality vacuous for any eps
    out.holds = true;
    return out;
  }
  const Complex rot = std::polar(1.0, alpha);
  const int rank = numeric_rank(svd, kDefaultTol);
  if (rank == n) {
    const MatrixXcd Cinv = C.partialPivLu().inverse();
    out.eps = 2.0 * lambda_min_hermitian(hermitian_part(rot * Cinv));
    if (out.eps < 0.0) out.eps = 0.0;
    out.holds = out.eps > tol;
    return out;
  }
  const MatrixXcd H2 = rot.real() != 0.0 || rot.imag() != 0.0
                           ? MatrixXcd(std::conj(rot) * C + rot * C.adjoint())
                           : MatrixXcd(C + C.adjoint());
  const MatrixXcd G = C.adjoint() * C;
  const double ptol = tol * 2.0 * smax;
  auto feasible = [&](double eps) {
    return lambda_min_hermitian(H2 - eps * G) >= -ptol;
  };
  if (!feasible(0.0)) {
    out.eps = 0.0;
    out.holds = false;
    return out;
  }
  double lo = 0.0, hi = 1.0;
  while (feasible(hi) && hi < 1e12) {
    lo = hi;
    hi *= 4.0;
  }
  if (hi >= 1e12) {
    out.eps = hi;
    out.holds = true;
    return out;
  }
  while (hi - lo > 1e-6 * std::max(hi, 1e-12)) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  out.eps = lo;
  out.holds = out.eps > tol;
  return out;
}

PhaseSpectrum pinv_phases(const PhaseSpectrum& spec) {
  PhaseSpectrum out;
  out.rank = spec.rank;
  out.classification = spec.classification;
  out.phases = VectorXd(spec.phases.size());
  for (int i = 0; i < spec.phases.size(); ++i)
    out.phases(i) = -spec.phases(spec.phases.size() - 1 - i);
  out.center = -spec.center;
  return out;
}

ProductAngleReport product_angle_bounds(const Eigen::MatrixXcd& A,
                                        const Eigen::MatrixXcd& B, double tol) {
  PhaseSpectrum specA = phases(A, tol);
  if (!is_quasi_sectorial(specA.classification.kind)) {
    throw ClassificationError(
        "product_angle_bounds: A must be quasi-sectorial, got " +
        std::string(to_string(specA.classification.kind)));
  }
  PhaseSpectrum specB = phases(B, tol);

  ProductAngleReport rep;
  rep.bound_lo = specA.phi_min() + specB.phi_min();
  rep.bound_hi = specA.phi_max() + specB.phi_max();

  const MatrixXcd AB = A * B;
  Eigen::ComplexEigenSolver<MatrixXcd> es(AB, false);
  const auto& ev = es.eigenvalues();
  double max_abs = 0.0;
  for (int i = 0; i < ev.size(); ++i) max_abs = std::max(max_abs, std::abs(ev(i)));
  const double anchor = specA.center + specB.center;

  std::vector<double> angles;
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= tol * std::max(max_abs, 1e-300)) continue;
    const double raw = std::arg(ev(i));
    angles.push_back(anchor + principal_angle(raw - anchor));
  }
  rep.nonzero_count = static_cast<int>(angles.size());
  rep.angles = Eigen::Map<VectorXd>(angles.data(), angles.size());

  constexpr double kAngleSlack = 1e-8;
  for (double a : rep.angles)
    if (a < rep.bound_lo - kAngleSlack || a > rep.bound_hi + kAngleSlack)
      rep.all_within = false;

  Eigen::JacobiSVD<MatrixXcd> svd(AB);
  rep.rank_ab = numeric_rank(svd, tol);
  rep.count_matches_rank = (rep.nonzero_count == rep.rank_ab);
  return rep;
}

bool small_phase_matrix(const Eigen::MatrixXcd& A, double alpha, double beta,
                        double tol) {
  PhaseSpectrum spec = phases(A, tol);
  if (!is_quasi_sectorial(spec.classification.kind)) {
    throw ClassificationError(
        "small_phase_matrix: A must be quasi-sectorial, got " +
        std::string(to_string(spec.classification.kind)));
  }
  if (spec.rank == 0) return true;  // det(I + 0*B) is never zero
  const double lo = -kPi - spec.phi_min();
  const double hi = kPi - spec.phi_max();
  for (int k = -2; k <= 2; ++k) {
    const double a = alpha + 2.0 * kPi * k;
    const double b = beta + 2.0 * kPi * k;
    if (a > lo && b < hi) return true;
  }
  return false;
}

}  // namespace phasekit
