#include "resatom/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace resatom {

namespace {

void require_dimension(int n) {
  if (n != 2 && n != 4) {
    throw std::invalid_argument("matrix dimension must be 2 or 4, got " + std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// vectors
// ---------------------------------------------------------------------------

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  return {x / n, y / n, z / n};
}

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

cplx dot(const CVec3& a, const CVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

CVec3 conj(const CVec3& v) { return {std::conj(v.x), std::conj(v.y), std::conj(v.z)}; }

double norm2(const CVec3& v) { return std::norm(v.x) + std::norm(v.y) + std::norm(v.z); }

CVec3 operator+(const CVec3& a, const CVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
CVec3 operator-(const CVec3& a, const CVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
CVec3 operator*(const cplx& s, const CVec3& v) { return {s * v.x, s * v.y, s * v.z}; }

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

ComplexMatrix::ComplexMatrix(int n) : n_(n) { require_dimension(n); }

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out(i, j) = std::conj((*this)(j, i));
  }
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j)));
  }
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  const double scale = std::max(1.0, max_abs());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol * scale) return false;
    }
  }
  return true;
}

bool ComplexMatrix::all_finite() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const cplx v = (*this)(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  }
  return true;
}

std::array<cplx, 2> ComplexMatrix::apply(const std::array<cplx, 2>& v) const {
  if (n_ != 2) throw std::invalid_argument("apply: 2-vector requires a 2x2 matrix");
  return {(*this)(0, 0) * v[0] + (*this)(0, 1) * v[1],
          (*this)(1, 0) * v[0] + (*this)(1, 1) * v[1]};
}

std::array<cplx, 4> ComplexMatrix::apply(const std::array<cplx, 4>& v) const {
  if (n_ != 4) throw std::invalid_argument("apply: 4-vector requires a 4x4 matrix");
  std::array<cplx, 4> out{};
  for (int i = 0; i < 4; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < 4; ++j) s += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  ComplexMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  ComplexMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  const int n = a.size();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

ComplexMatrix operator*(const cplx& s, const ComplexMatrix& m) {
  ComplexMatrix out(m.size());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) out(i, j) = s * m(i, j);
  }
  return out;
}

cplx determinant(const ComplexMatrix& m) {
  // Gaussian elimination with partial pivoting on a copy; n <= 4.
  const int n = m.size();
  ComplexMatrix a = m;
  cplx det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (std::abs(a(pivot, col)) == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cplx f = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// spinors
// ---------------------------------------------------------------------------

Spinor2 Spinor2::normalized(cplx a0, cplx a1) {
  const double n = std::sqrt(std::norm(a0) + std::norm(a1));
  if (n == 0.0) throw std::invalid_argument("spinor amplitudes are all zero");
  Spinor2 s;
  s.a_ = {a0 / n, a1 / n};
  return s;
}

Spinor2 Spinor2::raw(cplx a0, cplx a1) {
  Spinor2 s;
  s.a_ = {a0, a1};
  return s;
}

double Spinor2::norm() const { return std::sqrt(std::norm(a_[0]) + std::norm(a_[1])); }

std::array<double, 2> Spinor2::populations() const {
  return {std::norm(a_[0]), std::norm(a_[1])};
}

Spinor4 Spinor4::normalized(const std::array<cplx, 4>& a) {
  double n2 = 0.0;
  for (const cplx& c : a) n2 += std::norm(c);
  if (n2 == 0.0) throw std::invalid_argument("spinor amplitudes are all zero");
  const double n = std::sqrt(n2);
  Spinor4 s;
  for (std::size_t i = 0; i < 4; ++i) s.a_[i] = a[i] / n;
  return s;
}

Spinor4 Spinor4::raw(const std::array<cplx, 4>& a) {
  Spinor4 s;
  s.a_ = a;
  return s;
}

double Spinor4::norm() const {
  double n2 = 0.0;
  for (const cplx& c : a_) n2 += std::norm(c);
  return std::sqrt(n2);
}

std::array<double, 4> Spinor4::populations() const {
  return {std::norm(a_[0]), std::norm(a_[1]), std::norm(a_[2]), std::norm(a_[3])};
}

// ---------------------------------------------------------------------------
// operator constructors
// ---------------------------------------------------------------------------

ComplexMatrix make_pauli(Axis axis) {
  ComplexMatrix m(2);
  switch (axis) {
    case Axis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Axis::Y:
      m(0, 1) = cplx(0.0, -1.0);
      m(1, 0) = cplx(0.0, 1.0);
      break;
    case Axis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix make_alpha(Axis axis) {
  const ComplexMatrix sigma = make_pauli(axis);
  ComplexMatrix m(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m(i, j + 2) = sigma(i, j);
      m(i + 2, j) = sigma(i, j);
    }
  }
  return m;
}

ComplexMatrix make_beta1() {
  ComplexMatrix m(4);
  m(0, 0) = 1.0;
  m(2, 2) = -1.0;
  return m;
}

ComplexMatrix make_dirac_beta() {
  ComplexMatrix m(4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 2) = -1.0;
  m(3, 3) = -1.0;
  return m;
}

// ---------------------------------------------------------------------------
// eigendecomposition
// ---------------------------------------------------------------------------

namespace {

// In-place symmetrization removes the caller's rounding-level asymmetry so
// the solvers below can assume exact Hermiticity.
ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix h(m.size());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }
  return h;
}

HermitianEigensystem eigensystem_2x2(const ComplexMatrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const cplx b = h(0, 1);
  const double babs = std::abs(b);

  HermitianEigensystem out{{0.0, 0.0}, ComplexMatrix::identity(2)};
  if (babs == 0.0) {
    out.values = {a, d};
    if (d > a) {
      out.values = {d, a};
      out.vectors(0, 0) = 0.0;
      out.vectors(1, 0) = 1.0;
      out.vectors(0, 1) = 1.0;
      out.vectors(1, 1) = 0.0;
    }
    return out;
  }

  const double mean = 0.5 * (a + d);
  const double disc = std::hypot(0.5 * (a - d), babs);
  const double lam_hi = mean + disc;
  const double lam_lo = mean - disc;

  // lam_hi - a as a quotient avoids cancellation when a dominates d.
  double gap;
  if (a >= d) {
    gap = (babs * babs) / (disc + 0.5 * (a - d));
  } else {
    gap = 0.5 * (d - a) + disc;
  }
  cplx v0 = b;
  cplx v1 = gap;
  const double n = std::sqrt(std::norm(v0) + std::norm(v1));
  v0 /= n;
  v1 /= n;

  out.values = {lam_hi, lam_lo};
  out.vectors(0, 0) = v0;
  out.vectors(1, 0) = v1;
  // Orthogonal complement is the second eigenvector of a Hermitian 2x2.
  out.vectors(0, 1) = -std::conj(v1);
  out.vectors(1, 1) = std::conj(v0);
  return out;
}

HermitianEigensystem eigensystem_jacobi(const ComplexMatrix& h) {
  const int n = h.size();
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, a.max_abs());
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    }
    if (off <= 1e-16 * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double rho = std::abs(apq);
        if (rho <= 1e-300) continue;
        const cplx phase = apq / rho;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * rho);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Unitary plane rotation G: G(p,p)=c, G(p,q)=s*phase,
        // G(q,p)=-s*conj(phase), G(q,q)=c; update A <- G^H A G, V <- V G.
        for (int i = 0; i < n; ++i) {
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = c * aip - s * std::conj(phase) * aiq;
          a(i, q) = s * phase * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          const cplx apj = a(p, j);
          const cplx aqj = a(q, j);
          a(p, j) = c * apj - s * phase * aqj;
          a(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
        for (int i = 0; i < n; ++i) {
          const cplx vip = v(i, p);
          const cplx viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigensystem out{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(n)};
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.values[static_cast<std::size_t>(k)] = a(src, src).real();
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, src);
  }
  return out;
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (!m.all_finite()) throw std::invalid_argument("eigensystem: non-finite matrix entries");
  if (!m.is_hermitian()) throw std::domain_error("eigensystem: matrix is not Hermitian");
  const ComplexMatrix h = hermitian_part(m);
  return m.size() == 2 ? eigensystem_2x2(h) : eigensystem_jacobi(h);
}

// ---------------------------------------------------------------------------
// matrix exponential
// ---------------------------------------------------------------------------

namespace {

ComplexMatrix exp_via_eigensystem(const ComplexMatrix& h, bool anti_hermitian) {
  const HermitianEigensystem es = hermitian_eigensystem(h);
  const int n = h.size();
  ComplexMatrix d(n);
  for (int k = 0; k < n; ++k) {
    const double lam = es.values[static_cast<std::size_t>(k)];
    d(k, k) = anti_hermitian ? std::polar(1.0, lam) : cplx(std::exp(lam));
  }
  return es.vectors * d * es.vectors.adjoint();
}

ComplexMatrix exp_scaling_squaring(const ComplexMatrix& m) {
  const int n = m.size();
  int squarings = 0;
  double scale = m.max_abs();
  while (scale > 0.5 && squarings < 64) {
    scale *= 0.5;
    ++squarings;
  }
  const double factor = std::ldexp(1.0, -squarings);
  ComplexMatrix x = cplx(factor) * m;

  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 32; ++k) {
    term = cplx(1.0 / k) * (term * x);
    sum = sum + term;
    if (term.max_abs() < 1e-20) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace

ComplexMatrix matrix_exponential(const ComplexMatrix& m) {
  if (!m.all_finite()) throw std::invalid_argument("matrix_exponential: non-finite entries");

  const double scale = std::max(1.0, m.max_abs());
  const ComplexMatrix adj = m.adjoint();
  if ((m - adj).max_abs() <= 1e-13 * scale) {
    return exp_via_eigensystem(hermitian_part(m), /*anti_hermitian=*/false);
  }
  if ((m + adj).max_abs() <= 1e-13 * scale) {
    // m = i h with h Hermitian; exp(m) = V exp(i lambda) V^H stays unitary.
    ComplexMatrix h(m.size());
    for (int i = 0; i < m.size(); ++i) {
      for (int j = 0; j < m.size(); ++j) h(i, j) = cplx(0.0, -1.0) * m(i, j);
    }
    return exp_via_eigensystem(hermitian_part(h), /*anti_hermitian=*/true);
  }
  return exp_scaling_squaring(m);
}

}  // namespace resatom
