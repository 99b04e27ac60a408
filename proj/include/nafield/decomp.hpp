#pragma once

#include <Eigen/Dense>

#include <complex>
#include <iosfwd>
#include <vector>

#include "nafield/errors.hpp"

namespace nafield {

/// One gauge-field sample A^a_mu: color a = 1..3 rows, Euclidean mu = 1..4
/// columns.
using GaugeSnapshot = Eigen::Matrix<double, 3, 4>;

/// A = Phi * frame with orthonormal frame rows e^i_mu.
struct FrameDecomposition {
  Eigen::Matrix3d phi;
  Eigen::Matrix<double, 3, 4> frame;
  double residual = 0.0;  // ||A - phi*frame||_F
};

/// Color-symmetric factorization: frame = right singular directions of A
/// ordered by decreasing singular value, sign fixed so the first nonzero
/// entry of each row is positive; rows with singular value below
/// tol*||A||_F are replaced by a deterministic coordinate-aligned
/// Gram-Schmidt completion. Phi = A * frame^T reconstructs exactly up to
/// roundoff because the row space of a 3x4 matrix fits in three frame rows.
FrameDecomposition decompose_su2(const GaugeSnapshot& A, double tol = 1e-10);

/// Off-diagonal split W = psi1 * e + conj(psi2) * conj(e) against a null
/// frame e (e.e = 0, e.conj(e) = 1, plain sums over mu).
struct OffDiagonalSplit {
  std::complex<double> psi1{0.0, 0.0};
  std::complex<double> psi2{0.0, 0.0};
  Eigen::Vector4cd e;
  double residual = 0.0;  // ||W - psi1 e - conj(psi2) conj(e)||
};

/// psi1 = conj(e).W and psi2 = conj(e.W), forced by contracting the split
/// with conj(e) and e. Throws Error("InvalidFrame", ...) if e violates the
/// null/normalization conditions beyond tol.
OffDiagonalSplit extract_offdiagonal(const Eigen::Vector4cd& W, const Eigen::Vector4cd& e,
                                     double tol = 1e-10);

/// Picks e = (u + i v)/sqrt(2) with (u, v) the dominant real 2-plane of
/// (Re W, Im W); that parametrization satisfies the null conditions
/// identically, and the dominant plane minimizes the split residual.
/// Degenerate directions are completed deterministically from coordinate
/// axes.
OffDiagonalSplit fit_null_frame(const Eigen::Vector4cd& W, double tol = 1e-10);

/// Snapshot stream: blocks of 3 lines x 4 reals, blank-line separated.
std::vector<GaugeSnapshot> read_snapshots(std::istream& in);

/// "Phi" block (3x3), "frame" block (3x4), then "residual=<float>".
void write_decomposition(std::ostream& out, const FrameDecomposition& d);

}  // namespace nafield
