#pragma once

// Phases of a complex square matrix via the geometry of its numerical range.
//
// A matrix C with 0 outside (or on the boundary of) the convex hull of
// W(C) = {x*Cx : |x|=1} admits a congruence to a diagonal unitary; the
// arguments of that unitary's eigenvalues are the phases of C. This header
// provides the sectoriality classification, phase spectra, support-arc
// geometry and the matrix-level phase lemmas used by the system-level
// modules.

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace phasekit {

using Complex = std::complex<double>;

// Default relative tolerance for rank decisions and positive-(semi)definite
// classifications: singular values count when > tol * sigma_max, Hermitian
// parts count as PSD when lambda_min >= -tol * ||C||.
inline constexpr double kDefaultTol = 1e-9;

enum class SectorKind {
  Sectorial,         // 0 outside W(C)
  QuasiSectorial,    // 0 a sharp boundary point; kernel orthogonal to range
  SemiSectorial,     // field angle <= pi
  RotatedHermitian,  // W(C) a line segment with 0 in its relative interior
  None,              // field angle 2*pi (0 interior to W(C))
};

bool is_sectorial(SectorKind k);        // Sectorial only
bool is_quasi_sectorial(SectorKind k);  // Sectorial or QuasiSectorial
bool is_semi_sectorial(SectorKind k);   // anything but None
const char* to_string(SectorKind k);

struct Classification {
  SectorKind kind = SectorKind::None;
  int numeric_rank = 0;
};

// The open arc of rotation angles theta for which Herm(e^{-i theta} C) is
// positive definite. By the supporting-ray geometry, theta_lo = phi_max - pi/2
// and theta_hi = phi_min + pi/2, so the arc midpoint is the phase center and
// delta = pi - (theta_hi - theta_lo) is the field angle of C.
struct SupportArc {
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  double delta = 0.0;      // field angle, in [0, pi] or 2*pi
  bool nonempty = false;
  bool degenerate = false;  // zero matrix: whole-circle convention
};

struct PhaseSpectrum {
  Eigen::VectorXd phases;  // sorted descending, rank entries
  double center = 0.0;     // (phi_max + phi_min)/2 for nonempty spectra
  int rank = 0;
  Classification classification;

  // Zero-matrix conventions: phi_max = -inf, phi_min = +inf.
  double phi_max() const;
  double phi_min() const;
};

SupportArc support_arc(const Eigen::MatrixXcd& C, double tol = kDefaultTol);

Classification classify(const Eigen::MatrixXcd& C, double tol = kDefaultTol);

// Phase spectrum of a (semi-)sectorial matrix, phase center selected in
// (-pi, pi]. Sectorial matrices go through the accretive-part congruence;
// quasi-sectorial ones are first compressed onto their range; remaining
// semi-sectorial ones are handled by a vanishing-regularization schedule
// whose limit recovers the generalized-decomposition phases (E-blocks
// contribute theta_0 +/- pi/2). Throws ClassificationError when the field
// angle exceeds pi and ConvergenceError when the schedule stalls.
PhaseSpectrum phases(const Eigen::MatrixXcd& C, double tol = kDefaultTol);

// k boundary points of W(C) by the support-function method (top eigenvector
// of Herm(e^{-i theta} C) over a uniform theta grid). Requires k >= 8.
std::vector<Complex> numerical_range_boundary(const Eigen::MatrixXcd& C, int k);

struct QuasiSectorialTest {
  bool holds = false;
  double eps = 0.0;  // largest eps with e^{-ia}C + e^{ia}C* >= eps C*C
};

// Largest eps (relative accuracy 1e-6) such that
// e^{-i alpha} C + e^{i alpha} C* - eps C*C is PSD; holds = (eps > tol).
QuasiSectorialTest quasi_sectorial_test(const Eigen::MatrixXcd& C, double alpha,
                                        double tol = kDefaultTol);

// Phases of the Moore-Penrose inverse: phi_i(C^+) = -phi_{r-i+1}(C).
PhaseSpectrum pinv_phases(const PhaseSpectrum& spec);

struct ProductAngleReport {
  Eigen::VectorXd angles;    // arguments of nonzero eigenvalues of AB,
                             // branch anchored at gamma(A) + gamma(B)
  double bound_lo = 0.0;     // phi_min(A) + phi_min(B)
  double bound_hi = 0.0;     // phi_max(A) + phi_max(B)
  bool all_within = true;    // every angle inside [lo, hi] up to 1e-8
  int nonzero_count = 0;
  int rank_ab = 0;
  bool count_matches_rank = false;
};

// Eigenvalue-angle bounds for the product of a quasi-sectorial A and a
// semi-sectorial B. Eigenvalue arguments are selected in the branch
// (gamma(A)+gamma(B)-pi, gamma(A)+gamma(B)+pi].
ProductAngleReport product_angle_bounds(const Eigen::MatrixXcd& A,
                                        const Eigen::MatrixXcd& B,
                                        double tol = kDefaultTol);

// Matrix small phase theorem: det(I + AB) != 0 for every semi-sectorial B
// with phases in [alpha, beta] iff [alpha, beta] fits inside
// (-pi - phi_min(A), pi - phi_max(A)) modulo 2*pi. Requires A
// quasi-sectorial.
bool small_phase_matrix(const Eigen::MatrixXcd& A, double alpha, double beta,
                        double tol = kDefaultTol);

// Helpers shared across modules.
Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& M);
// Hermitian K with M = H + iK, i.e. K = (M - M*) / 2i.
Eigen::MatrixXcd skew_part_as_hermitian(const Eigen::MatrixXcd& M);
double lambda_min_hermitian(const Eigen::MatrixXcd& H);
double lambda_max_hermitian(const Eigen::MatrixXcd& H);
// Wrap an angle into (-pi, pi].
double principal_angle(double a);

}  // namespace phasekit
