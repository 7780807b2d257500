// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#include "tsop/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tsop {

namespace {

double max_abs_entry(const ComplexMatrix& m) {
  return m.cwiseAbs().maxCoeff();
}

double pd_threshold(double norm) { return 1e-10 * std::max(1.0, norm); }

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("HermitianMatrix requires a square matrix");
  }
  if (m.rows() < 1) {
    throw DimensionError("HermitianMatrix requires dim >= 1");
  }
  const double scale = max_abs_entry(m);
  if (scale > 0) {
    const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (defect > 1e-12 * scale) {
      std::ostringstream msg;
      msg << "matrix is not Hermitian: defect " << defect << " exceeds "
          << 1e-12 * scale;
      throw NotHermitianError(msg.str(), defect);
    }
  }
  mat_ = 0.5 * (m + m.adjoint().eval());
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionError("HermitianMatrix requires a square matrix");
  }
  HermitianMatrix out(ComplexMatrix::Zero(m.rows(), m.cols()));
  out.mat_ = 0.5 * (m + m.adjoint().eval());
  return out;
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return HermitianMatrix(ComplexMatrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& entries) {
  ComplexMatrix m = ComplexMatrix::Zero(entries.size(), entries.size());
  for (Eigen::Index i = 0; i < entries.size(); ++i) {
    m(i, i) = entries(i);
  }
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  if (other.dim() != dim()) {
    throw DimensionError("dimension mismatch in matrix addition");
  }
  return HermitianMatrix(mat_ + other.mat_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
  if (other.dim() != dim()) {
    throw DimensionError("dimension mismatch in matrix subtraction");
  }
  return HermitianMatrix(mat_ - other.mat_);
}

HermitianMatrix operator*(double s, const HermitianMatrix& m) {
  return HermitianMatrix(s * m.mat_);
}

HermitianMatrix SpectralDecomposition::apply(
    const std::function<double(double)>& f) const {
  RealVector mapped(eigenvalues.size());
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    mapped(i) = f(eigenvalues(i));
  }
  ComplexMatrix rebuilt =
      eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
  return HermitianMatrix::symmetrized(rebuilt);
}

double SpectralDecomposition::max_abs_eigenvalue() const {
  return eigenvalues.cwiseAbs().maxCoeff();
}

SpectralDecomposition spectral(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.raw());
  if (solver.info() != Eigen::Success) {
    throw EigensolverError("eigensolver failed to converge", m.dim(),
                           max_abs_entry(m.raw()));
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

PositivityClass classify(const SpectralDecomposition& s) {
  const double min_eig = s.min_eigenvalue();
  const double thr = pd_threshold(s.max_abs_eigenvalue());
  PositivityClass::Kind kind;
  if (min_eig > thr) {
    kind = PositivityClass::Kind::PositiveDefinite;
  } else if (min_eig >= -thr) {
    kind = PositivityClass::Kind::PositiveSemidefinite;
  } else {
    kind = PositivityClass::Kind::Indefinite;
  }
  return PositivityClass{kind, min_eig};
}

PositivityClass classify(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.raw(),
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw EigensolverError("eigensolver failed to converge", m.dim(),
                           max_abs_entry(m.raw()));
  }
  const double min_eig = solver.eigenvalues()(0);
  const double norm = solver.eigenvalues().cwiseAbs().maxCoeff();
  const double thr = pd_threshold(norm);
  PositivityClass::Kind kind;
  if (min_eig > thr) {
    kind = PositivityClass::Kind::PositiveDefinite;
  } else if (min_eig >= -thr) {
    kind = PositivityClass::Kind::PositiveSemidefinite;
  } else {
    kind = PositivityClass::Kind::Indefinite;
  }
  return PositivityClass{kind, min_eig};
}

HermitianMatrix matrix_power(const HermitianMatrix& m, double a) {
  if (a == 0.0) {
    return HermitianMatrix::identity(m.dim());
  }
  const bool integral = std::floor(a) == a;
  SpectralDecomposition s = spectral(m);
  if (!(integral && a >= 1.0)) {
    PositivityClass cls = classify(s);
    if (!cls.positive_definite()) {
      std::ostringstream msg;
      msg << "matrix_power with exponent " << a
          << " requires a positive definite matrix (min eigenvalue "
          << cls.min_eig << ")";
      throw NotPositiveDefiniteError(msg.str(), cls.min_eig);
    }
  }
  return s.apply([a](double w) { return std::pow(w, a); });
}

HermitianMatrix matrix_log(const HermitianMatrix& m) {
  SpectralDecomposition s = spectral(m);
  PositivityClass cls = classify(s);
  if (!cls.positive_definite()) {
    throw NotPositiveDefiniteError("matrix_log requires a positive definite matrix",
                                   cls.min_eig);
  }
  return s.apply([](double w) { return std::log(w); });
}

HermitianMatrix kron(const HermitianMatrix& x, const HermitianMatrix& y,
                     int max_dim) {
  const int dx = x.dim();
  const int dy = y.dim();
  if (static_cast<long>(dx) * dy > max_dim) {
    std::ostringstream msg;
    msg << "Kronecker product dimension " << dx * dy << " exceeds cap "
        << max_dim;
    throw DimensionError(msg.str());
  }
  ComplexMatrix out(dx * dy, dx * dy);
  for (int i = 0; i < dx; ++i) {
    for (int j = 0; j < dx; ++j) {
      out.block(i * dy, j * dy, dy, dy) = x.raw()(i, j) * y.raw();
    }
  }
  return HermitianMatrix(out);
}

HermitianMatrix congruence(const HermitianMatrix& m, const HermitianMatrix& c) {
  if (m.dim() != c.dim()) {
    throw DimensionError("dimension mismatch in congruence transform");
  }
  return HermitianMatrix::symmetrized(c.raw() * m.raw() * c.raw());
}

LoewnerVerdict loewner_leq(const HermitianMatrix& lhs,
                           const HermitianMatrix& rhs,
                           const TolerancePolicy& tol) {
  if (lhs.dim() != rhs.dim()) {
    throw DimensionError("dimension mismatch in Loewner comparison");
  }
  const double scale = std::max(operator_norm(lhs), operator_norm(rhs));
  const double tolerance = tol.bound(scale);
  HermitianMatrix diff = rhs - lhs;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(diff.raw(),
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw EigensolverError("eigensolver failed to converge", diff.dim(),
                           max_abs_entry(diff.raw()));
  }
  const double witness = solver.eigenvalues()(0);
  return LoewnerVerdict{witness >= -tolerance, witness, tolerance};
}

double operator_norm(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.raw(),
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw EigensolverError("eigensolver failed to converge", m.dim(),
                           max_abs_entry(m.raw()));
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double trace(const HermitianMatrix& m) {
  // Diagonal entries are exactly real after (M + M*)/2.
  return m.raw().trace().real();
}

}  // namespace tsop
