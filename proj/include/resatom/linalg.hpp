#pragma once

// Fixed-size complex linear algebra for the two-level models: the operator
// matrices (Pauli, alpha, beta), spinor states, and the decompositions used
// to propagate them. Only dimensions 2 and 4 occur; anything else is
// rejected rather than supported.

#include <array>
#include <complex>
#include <vector>

#include "resatom/errors.hpp"
#include "resatom/tolerances.hpp"

namespace resatom {

using cplx = std::complex<double>;

enum class Axis { X, Y, Z };

// ---------------------------------------------------------------------------
// spatial 3-vectors
// ---------------------------------------------------------------------------

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  Vec3 scaled(double s) const { return {s * x, s * y, s * z}; }
  // Throws std::invalid_argument for the zero vector.
  Vec3 normalized() const;
};

double dot(const Vec3& a, const Vec3& b);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);

struct CVec3 {
  cplx x{};
  cplx y{};
  cplx z{};

  static CVec3 from(const Vec3& v) { return {cplx(v.x), cplx(v.y), cplx(v.z)}; }
};

// Bilinear product, no conjugation: dot(v, conj(v)) is real and >= 0.
cplx dot(const CVec3& a, const CVec3& b);
CVec3 conj(const CVec3& v);
double norm2(const CVec3& v);

CVec3 operator+(const CVec3& a, const CVec3& b);
CVec3 operator-(const CVec3& a, const CVec3& b);
CVec3 operator*(const cplx& s, const CVec3& v);

// ---------------------------------------------------------------------------
// dense complex matrices, n in {2, 4}
// ---------------------------------------------------------------------------

class ComplexMatrix {
 public:
  // Zero matrix. Throws std::invalid_argument unless n is 2 or 4.
  explicit ComplexMatrix(int n);
  static ComplexMatrix identity(int n);

  int size() const { return n_; }

  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  // Largest elementwise |entry|.
  double max_abs() const;
  bool is_hermitian(double tol = ALGEBRA_TOL) const;
  bool all_finite() const;

  std::array<cplx, 2> apply(const std::array<cplx, 2>& v) const;
  std::array<cplx, 4> apply(const std::array<cplx, 4>& v) const;

 private:
  int n_;
  std::array<cplx, 16> a_{};
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const cplx& s, const ComplexMatrix& m);

cplx determinant(const ComplexMatrix& m);

// ---------------------------------------------------------------------------
// spinor states
// ---------------------------------------------------------------------------

class Spinor2 {
 public:
  Spinor2() : a_{cplx(1.0), cplx(0.0)} {}
  // Scales the amplitudes to unit norm; throws std::invalid_argument on zero.
  static Spinor2 normalized(cplx a0, cplx a1);
  // No normalization; used by the propagators, which keep the norm within
  // NORM_DRIFT_TOL by unitarity rather than by rescaling.
  static Spinor2 raw(cplx a0, cplx a1);

  const cplx& operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
  const std::array<cplx, 2>& amplitudes() const { return a_; }
  double norm() const;
  std::array<double, 2> populations() const;

 private:
  std::array<cplx, 2> a_;
};

class Spinor4 {
 public:
  Spinor4() : a_{cplx(1.0), cplx(0.0), cplx(0.0), cplx(0.0)} {}
  static Spinor4 normalized(const std::array<cplx, 4>& a);
  static Spinor4 raw(const std::array<cplx, 4>& a);

  const cplx& operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
  const std::array<cplx, 4>& amplitudes() const { return a_; }
  double norm() const;
  std::array<double, 4> populations() const;

 private:
  std::array<cplx, 4> a_;
};

// ---------------------------------------------------------------------------
// operator constructors
// ---------------------------------------------------------------------------

ComplexMatrix make_pauli(Axis axis);

// 4x4 block form [[0, sigma], [sigma, 0]]; transforms as a polar vector
// under conjugation by the standard Dirac beta.
ComplexMatrix make_alpha(Axis axis);

// diag(1, 0, -1, 0). Singular by construction: beta1^2 = diag(1,0,1,0),
// det = 0, unlike the standard involutive beta.
ComplexMatrix make_beta1();

// Standard parity operator diag(1, 1, -1, -1); used by the parity audit.
ComplexMatrix make_dirac_beta();

// ---------------------------------------------------------------------------
// decompositions
// ---------------------------------------------------------------------------

struct HermitianEigensystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // unitary, k-th column pairs with values[k]
};

// Closed form for 2x2, cyclic complex Jacobi for 4x4. Throws
// std::domain_error when the input is not Hermitian.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

// exp(M). Hermitian and anti-Hermitian inputs go through the
// eigendecomposition (keeping exponentials of anti-Hermitian generators
// unitary to machine precision); everything else uses scaling-and-squaring
// with a truncated series. Throws std::invalid_argument on non-finite input.
ComplexMatrix matrix_exponential(const ComplexMatrix& m);

}  // namespace resatom
