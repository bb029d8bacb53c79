// ops.hpp — Dense complex operator primitives for 2- and 4-dimensional
// Hilbert spaces: Pauli/ladder operators, tensor products, partial traces,
// and functions of Hermitian matrices (log, exp, entropies).
//
// Basis convention, fixed globally:
//   * single qubit: |0> = ground first, |1> = excited second;
//   * two qubits:   system (S) first, ancilla (A) second, so the product
//     basis order is |00>, |01>, |10>, |11>;
//   * sigma_z = |1><1| - |0><0| = diag(-1,+1), i.e. the excited state has
//     sigma_z eigenvalue +1 and H = omega*sigma_z puts it at energy +omega;
//   * sigma_plus = |1><0| raises, sigma_minus = |0><1| lowers, and
//     sigma_x*sigma_y = i*sigma_z holds with sigma_y = [[0,i],[-i,0]].
//
// All entropic quantities are in nats; conversion to bits happens at the
// reporting layer only.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <numbers>
#include <string>

namespace qsa {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Matrix = Eigen::MatrixXcd;
using Vector2 = Eigen::Vector2cd;
using Vector = Eigen::VectorXcd;

// Eigenvalues of a state below this floor are clamped before taking logs,
// so pure states (rank-deficient inputs) never produce NaN. The induced
// entropy bias is <= dim * kEpsLog * |ln kEpsLog|.
inline constexpr double kEpsLog = 1e-14;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

namespace ops {

// --------------------------- qubit operators --------------------------------

Matrix2 identity2();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
Matrix2 raising();   // |1><0|
Matrix2 lowering();  // |0><1|

// Named single-qubit operator lookup; name in {x, y, z, identity}.
Matrix2 pauli(const std::string& name);

// Basis kets in the fixed convention.
Vector2 ket_ground();
Vector2 ket_excited();
Vector2 ket_plus();
Vector2 ket_minus();

inline Matrix2 projector(const Vector2& v) { return v * v.adjoint(); }

// --------------------------- tensor structure -------------------------------

// Tensor product, S factor first: kron(a, b) acts as a on S and b on A.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

enum class Subsystem { System, Ancilla };

// Reduced state of the kept qubit; trace preserving.
Matrix2 partial_trace(const Matrix4& rho, Subsystem keep);

// Column-stacking vectorization and its inverse.
Vector vec(const Matrix& a);
Matrix unvec(const Vector& v, Eigen::Index dim);

// --------------------------- Hermitian utilities ----------------------------

inline Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

bool is_hermitian(const Matrix& a, double tol = 1e-12);

// max entrywise |rho - rho^dag|, |Tr rho - 1|, and min eigenvalue checks
struct StateCheck {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool ok(double psd_tol = 1e-10) const {
    return hermiticity_defect <= 1e-12 && trace_defect <= 1e-10 &&
           min_eigenvalue >= -psd_tol;
  }
};
StateCheck check_state(const Matrix& rho);

// --------------------------- matrix functions -------------------------------

// Natural log of a Hermitian state; eigenvalues clamped at kEpsLog.
Matrix matrix_log(const Matrix& rho);

// exp of a Hermitian matrix, largest eigenvalue subtracted before
// exponentiation to avoid overflow (the shift cancels on normalization).
Matrix exp_hermitian_shifted(const Matrix& h, double scale = 1.0);

// Sum of |eigenvalues|; rejects non-Hermitian input.
double trace_norm(const Matrix& a);

// --------------------------- entropies --------------------------------------

// -sum p ln p over eigenvalues, 0 ln 0 := 0.  Nats.
double von_neumann_entropy(const Matrix& rho);

inline double nats_to_bits(double s) { return s / std::numbers::ln2_v<double>; }

// Tr rho ln rho - Tr rho ln w.  Returns +infinity when rho has weight
// beyond tolerance on the numerical null space of w.
double relative_entropy(const Matrix& rho, const Matrix& w);

}  // namespace ops
}  // namespace qsa
