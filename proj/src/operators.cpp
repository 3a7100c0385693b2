#include "hardy/operators.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace hardy {

namespace {

// Compression of the Laurent matrix of phi: entry (p, q) = phi^(p - q).
Eigen::MatrixXcd compress(const FourierVector& phi, const std::vector<int>& rows, const std::vector<int>& cols) {
  Eigen::MatrixXcd M(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) M(i, j) = phi[rows[i] - cols[j]];
  return M;
}

FourierVector tidy(const FourierVector& f) { return f.trimmed(1e-18 * (1.0 + f.max_abs())); }

// Rows of an H^2 window 0..N embedded in the full window -N..N.
Eigen::MatrixXcd embed_plus(const Eigen::MatrixXcd& Q, int N) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * N + 1, Q.cols());
  out.bottomRows(N + 1) = Q;
  return out;
}

}  // namespace

int BasisTag::dimension() const {
  switch (kind) {
    case BasisKind::Hplus: return N + 1;
    case BasisKind::Hminus: return N;
    case BasisKind::Ku: return ku_dim;
    case BasisKind::KuPerpBlock:
    case BasisKind::Full: return 2 * N + 1;
  }
  return 0;
}

std::vector<int> BasisTag::frequencies() const {
  std::vector<int> f;
  switch (kind) {
    case BasisKind::Hplus:
      for (int n = 0; n <= N; ++n) f.push_back(n);
      break;
    case BasisKind::Hminus:
      for (int n = -N; n <= -1; ++n) f.push_back(n);
      break;
    case BasisKind::KuPerpBlock:
      for (int n = 0; n <= N; ++n) f.push_back(n);
      for (int n = -N; n <= -1; ++n) f.push_back(n);
      break;
    case BasisKind::Full:
      for (int n = -N; n <= N; ++n) f.push_back(n);
      break;
    case BasisKind::Ku: throw std::invalid_argument("Ku basis has no frequency slots");
  }
  return f;
}

const char* to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::Hplus: return "Hplus";
    case BasisKind::Hminus: return "Hminus";
    case BasisKind::Ku: return "Ku";
    case BasisKind::KuPerpBlock: return "KuPerpBlock";
    case BasisKind::Full: return "Full";
  }
  return "?";
}

OperatorMatrix::OperatorMatrix(BasisTag r, BasisTag c, Eigen::MatrixXcd m) : rows(r), cols(c), entries(std::move(m)) {
  if (entries.rows() != rows.dimension() || entries.cols() != cols.dimension())
    throw std::invalid_argument("OperatorMatrix: dimensions do not match basis tags");
}

Eigen::VectorXcd to_coords(const FourierVector& f, const BasisTag& tag) {
  std::vector<int> fr = tag.frequencies();
  Eigen::VectorXcd v(fr.size());
  for (std::size_t k = 0; k < fr.size(); ++k) v(k) = f[fr[k]];
  return v;
}

FourierVector from_coords(const Eigen::VectorXcd& v, const BasisTag& tag) {
  std::vector<int> fr = tag.frequencies();
  if (static_cast<std::size_t>(v.size()) != fr.size()) throw std::invalid_argument("from_coords: size mismatch");
  FourierVector out = FourierVector::zeros({-tag.N, tag.N});
  for (std::size_t k = 0; k < fr.size(); ++k) out.at(fr[k]) = v(k);
  return out;
}

OperatorMatrix toeplitz(const FourierVector& phi, int N) {
  auto t = BasisTag::hplus(N);
  return {t, t, compress(phi, t.frequencies(), t.frequencies())};
}

OperatorMatrix hankel(const FourierVector& phi, int N) {
  auto r = BasisTag::hminus(N), c = BasisTag::hplus(N);
  return {r, c, compress(phi, r.frequencies(), c.frequencies())};
}

OperatorMatrix dual_toeplitz(const FourierVector& phi, int N) {
  auto t = BasisTag::hminus(N);
  return {t, t, compress(phi, t.frequencies(), t.frequencies())};
}

OperatorMatrix laurent(const FourierVector& phi, int N) {
  auto t = BasisTag::full(N);
  return {t, t, compress(phi, t.frequencies(), t.frequencies())};
}

ModelSpace::ModelSpace(BlaschkeProduct u, double eps) : u_(std::move(u)), eps_(eps) {
  uc_ = coeffs(u_, eps_);
  ubar_ = uc_.conj_function();
  tail_ = std::max(uc_.hi(), tail_length(u_, eps_));
  const int L = tail_;
  std::vector<cplx> zl = u_.zero_list();
  for (std::size_t k = 0; k < zl.size(); ++k) {
    const cplx a = zl[k];
    const double s = std::sqrt(1.0 - std::norm(a));
    std::vector<cplx> x(L + 1, cplx(0.0));
    cplx p = s;
    for (int n = 0; n <= L; ++n) {
      x[n] = p;
      p *= std::conj(a);
    }
    for (std::size_t j = 0; j < k; ++j) {
      const cplx b = zl[j], bb = std::conj(zl[j]);
      std::vector<cplx> y(L + 1);
      y[0] = -b * x[0];
      for (int n = 1; n <= L; ++n) y[n] = bb * y[n - 1] + x[n - 1] - b * x[n];
      x = std::move(y);
    }
    basis_.emplace_back(0, std::move(x));
  }
}

Eigen::MatrixXcd ModelSpace::basis_matrix(int N) const {
  Eigen::MatrixXcd Q(N + 1, basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (int n = 0; n <= N; ++n) Q(n, k) = basis_[k][n];
  return Q;
}

FourierVector ModelSpace::project_uH2(const FourierVector& f) const {
  return tidy(convolve(uc_, project_plus(convolve(ubar_, f))));
}

FourierVector ModelSpace::project_Ku(const FourierVector& f) const {
  FourierVector p = project_plus(f);
  return tidy(p - project_uH2(p));
}

FourierVector ModelSpace::project_Ku_perp(const FourierVector& f) const {
  return tidy(project_minus(f) + project_uH2(f));
}

FourierVector ModelSpace::conjugate(const FourierVector& f) const { return tidy(conjugate_Cu(f, uc_)); }

FourierVector ModelSpace::apply_dtto(const FourierVector& phi, const FourierVector& h) const {
  return dtto_direct(phi, uc_, h);
}

OperatorMatrix model_projection(const ModelSpace& K, int N) {
  Eigen::MatrixXcd Tu = toeplitz(K.u_coeffs(), N).entries;
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(N + 1, N + 1) - Tu * Tu.adjoint();
  auto t = BasisTag::hplus(N);
  return {t, t, P};
}

OperatorMatrix model_projection(const BlaschkeProduct& u, int N, double eps) {
  return model_projection(ModelSpace(u, eps), N);
}

OperatorMatrix tto(const FourierVector& phi, const ModelSpace& K, int N) {
  Eigen::MatrixXcd Q = K.basis_matrix(N);
  Eigen::MatrixXcd A = Q.adjoint() * toeplitz(phi, N).entries * Q;
  auto t = BasisTag::ku(N, K.dimension());
  return {t, t, A};
}

OperatorMatrix truncated_hankel_B(const FourierVector& phi, const ModelSpace& K, int N) {
  Eigen::MatrixXcd Q = embed_plus(K.basis_matrix(N), N);
  Eigen::MatrixXcd LQ = laurent(phi, N).entries * Q;
  Eigen::MatrixXcd B = LQ - Q * (Q.adjoint() * LQ);
  return {BasisTag::full(N), BasisTag::ku(N, K.dimension()), B};
}

OperatorMatrix dtto_matrix(const FourierVector& phi, const ModelSpace& K, int N) {
  Eigen::MatrixXcd Q = embed_plus(K.basis_matrix(N), N);
  Eigen::MatrixXcd L = laurent(phi, N).entries;
  Eigen::MatrixXcd QtL = Q.adjoint() * L;
  Eigen::MatrixXcd LQ = L * Q;
  Eigen::MatrixXcd QtLQ = QtL * Q;
  Eigen::MatrixXcd D = L - Q * QtL - LQ * Q.adjoint() + Q * QtLQ * Q.adjoint();
  auto t = BasisTag::full(N);
  return {t, t, D};
}

OperatorMatrix perp_projection(const ModelSpace& K, int N) {
  Eigen::MatrixXcd Q = embed_plus(K.basis_matrix(N), N);
  auto t = BasisTag::full(N);
  return {t, t, Eigen::MatrixXcd::Identity(2 * N + 1, 2 * N + 1) - Q * Q.adjoint()};
}

OperatorMatrix dtto_block(const FourierVector& phi, const FourierVector& u_coeffs, int N) {
  Eigen::MatrixXcd M(2 * N + 1, 2 * N + 1);
  M.topLeftCorner(N + 1, N + 1) = toeplitz(phi, N).entries;
  M.topRightCorner(N + 1, N) = hankel(convolve(u_coeffs, phi.conj_function()), N).entries.adjoint();
  M.bottomLeftCorner(N, N + 1) = hankel(convolve(u_coeffs, phi), N).entries;
  M.bottomRightCorner(N, N) = dual_toeplitz(phi, N).entries;
  auto t = BasisTag::ku_perp_block(N);
  return {t, t, M};
}

FourierVector dtto_direct(const FourierVector& phi, const FourierVector& u_coeffs, const FourierVector& h) {
  FourierVector ph = convolve(phi, h);
  FourierVector inner_part = project_plus(convolve(u_coeffs.conj_function(), ph));
  return tidy(project_minus(ph) + convolve(u_coeffs, inner_part));
}

FourierVector block_to_function(const Eigen::VectorXcd& v, const FourierVector& u_coeffs, int N) {
  if (v.size() != 2 * N + 1) throw std::invalid_argument("block_to_function: size mismatch");
  std::vector<cplx> f(v.data(), v.data() + N + 1);
  std::vector<cplx> g(v.data() + N + 1, v.data() + 2 * N + 1);
  FourierVector out = convolve(u_coeffs, FourierVector(0, std::move(f)));
  if (N > 0) out += FourierVector(-N, std::move(g));
  return out;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& M) {
  if (M.size() == 0) return Eigen::VectorXd();
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
  return svd.singularValues();
}

double operator_norm(const OperatorMatrix& M) {
  Eigen::VectorXd s = singular_values(M.entries);
  return s.size() ? s(0) : 0.0;
}

ExtremalSubspace extremal_space(const OperatorMatrix& M, double tol) {
  ExtremalSubspace out;
  out.tag = M.cols;
  if (M.entries.size() == 0) return out;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M.entries, Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  out.sigma_max = s(0);
  if (tol <= 0.0) tol = 1e-8 * out.sigma_max;
  Eigen::Index k = 0;
  while (k < s.size() && s(k) >= out.sigma_max - tol) {
    out.basis.push_back(svd.matrixV().col(k));
    ++k;
  }
  const Eigen::Index ncols = M.entries.cols();
  double next = k < s.size() ? s(k) : 0.0;
  out.gap = (k < ncols) ? out.sigma_max - next : out.sigma_max;
  return out;
}

}  // namespace hardy
