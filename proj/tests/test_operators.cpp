#include <random>

#include "doctest.h"
#include "hardy/operators.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

FourierVector rnd(std::mt19937_64& g, int lo, int hi) {
  std::normal_distribution<double> N(0, 1);
  std::vector<cplx> c(hi - lo + 1);
  for (auto& x : c) x = {N(g), N(g)};
  return FourierVector(lo, c);
}

const std::vector<cplx> kZeros{0.5, cplx(-0.2, 0.6), cplx(0.1, -0.7)};

BlaschkeProduct sample_u() {
  std::vector<BlaschkeZero> zs;
  for (auto a : kZeros) zs.push_back({a, 1});
  return BlaschkeProduct(1.0, 0, zs);
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("matrix builders are compressions of the Laurent matrix") {
    std::mt19937_64 g(21);
    FourierVector phi = rnd(g, -3, 4);
    const int N = 6;
    OperatorMatrix T = toeplitz(phi, N), H = hankel(phi, N), S = dual_toeplitz(phi, N), L = laurent(phi, N);
    CHECK(T.entries.rows() == N + 1);
    CHECK(H.entries.rows() == N);
    CHECK(S.entries.rows() == N);
    CHECK(L.entries.rows() == 2 * N + 1);
    for (int p = 0; p <= N; ++p)
      for (int q = 0; q <= N; ++q) CHECK(T.entries(p, q) == phi[p - q]);
    for (int p = -N; p <= -1; ++p) {
      for (int q = 0; q <= N; ++q) CHECK(H.entries(p + N, q) == phi[p - q]);
      for (int q = -N; q <= -1; ++q) CHECK(S.entries(p + N, q + N) == phi[p - q]);
    }
    for (int p = -N; p <= N; ++p)
      for (int q = -N; q <= N; ++q) CHECK(L.entries(p + N, q + N) == phi[p - q]);
  }

  TEST_CASE("coordinates round trip") {
    std::mt19937_64 g(22);
    FourierVector f = rnd(g, -4, 4);
    BasisTag tag = BasisTag::ku_perp_block(4);
    CHECK(tag.dimension() == 9);
    CHECK(from_coords(to_coords(f, tag), tag) == f);
    CHECK_THROWS(BasisTag::ku(4, 2).frequencies());
  }

  TEST_CASE("takenaka basis is orthonormal and spans the kernel functions") {
    ModelSpace K(sample_u());
    REQUIRE(K.basis().size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(std::abs(inner(K.basis()[i], K.basis()[j]) - (i == j ? 1.0 : 0.0)) < 1e-13);
    std::mt19937_64 g(23);
    FourierVector f = rnd(g, 0, 10);
    // Gram system for the reproducing kernels k_a(z) = 1 / (1 - conj(a) z)
    Eigen::Matrix3cd G;
    Eigen::Vector3cd rhs;
    for (int i = 0; i < 3; ++i) {
      rhs(i) = 0.0;
      for (int n = 0; n <= 10; ++n) rhs(i) += f[n] * std::pow(kZeros[i], n);
      for (int j = 0; j < 3; ++j) G(i, j) = 1.0 / (1.0 - std::conj(kZeros[j]) * kZeros[i]);
    }
    Eigen::Vector3cd c = G.partialPivLu().solve(rhs);
    FourierVector ref = FourierVector::zeros({0, 120});
    for (int n = 0; n <= 120; ++n)
      for (int j = 0; j < 3; ++j) ref.at(n) += c(j) * std::pow(std::conj(kZeros[j]), n);
    CHECK(max_abs_diff(K.project_Ku(f), ref, {0, 120}) < 1e-12);
    CHECK((K.project_Ku(f) + K.project_uH2(f) - f).norm() < 1e-12);
  }

  TEST_CASE("model projection routes agree") {
    ModelSpace K(sample_u());
    const int N = 40;
    Eigen::MatrixXcd Q = K.basis_matrix(N);
    Eigen::MatrixXcd P = model_projection(K, N).entries;
    CHECK((P - Q * Q.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((P * P - P).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((P - P.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    Eigen::VectorXd sv = singular_values(P);
    CHECK((sv.array() > 0.5).count() == 3);
  }

  TEST_CASE("explicit DTTO formula matches a grid oracle") {
    std::mt19937_64 g(24);
    BlaschkeProduct u = sample_u();
    ModelSpace K(u);
    for (int k = 0; k < 4; ++k) {
      FourierVector phi = rnd(g, -4, 4);
      FourierVector h = convolve(K.u_coeffs(), rnd(g, 0, 5)) + rnd(g, -6, -1);
      FourierVector Dh = dtto_direct(phi, K.u_coeffs(), h);
      auto phih = [&](cplx z) {
        return phi.evaluate(std::arg(z)) * h.evaluate(std::arg(z));
      };
      FourierVector minus = oracle::grid_coeffs(phih, -40, -1);
      FourierVector inner_part = oracle::grid_coeffs([&](cplx z) { return std::conj(oracle::blaschke(kZeros, z)) * phih(z); }, 0, 120);
      FourierVector plus = oracle::grid_coeffs(
          [&](cplx z) { return oracle::blaschke(kZeros, z) * inner_part.evaluate(std::arg(z)); }, 0, 120);
      FourierVector ref = minus + plus;
      CHECK(max_abs_diff(Dh, ref, {-40, 120}) < 1e-11);
      CHECK((K.apply_dtto(phi, h) - Dh).norm() < 1e-12);
    }
  }

  TEST_CASE("block model top-left corner is T_phi and norm is bounded by sup") {
    std::mt19937_64 g(25);
    FourierVector phi = rnd(g, -3, 3);
    FourierVector uc = coeffs(sample_u());
    const int N = 20;
    OperatorMatrix blk = dtto_block(phi, uc, N);
    CHECK(blk.rows == BasisTag::ku_perp_block(N));
    CHECK((blk.entries.topLeftCorner(N + 1, N + 1) - toeplitz(phi, N).entries).cwiseAbs().maxCoeff() == 0.0);
    CHECK((blk.entries.bottomRightCorner(N, N) - dual_toeplitz(phi, N).entries).cwiseAbs().maxCoeff() == 0.0);
    double sup = 0.0;
    for (int j = 0; j < 4096; ++j) sup = std::max(sup, std::abs(phi.evaluate(kTwoPi * j / 4096)));
    CHECK(operator_norm(blk) <= sup * (1 + 1e-6));
  }

  TEST_CASE("bidiagonal Toeplitz section has the closed-form norm") {
    // singular values of I + S on n x n are 2 cos(k pi / (2n + 1))
    FourierVector phi(0, {0.5, 0.5});
    for (int N : {4, 16, 40}) CHECK(std::abs(operator_norm(toeplitz(phi, N)) - std::cos(kPi / (2 * N + 3))) < 1e-14);
  }

  TEST_CASE("extremal subspace of a diagonal operator") {
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(4, 4);
    D.diagonal() << 3.0, 1.0, 3.0, 0.5;
    ExtremalSubspace ex = extremal_space({BasisTag::ku(0, 4), BasisTag::ku(0, 4), D});
    CHECK(ex.sigma_max == doctest::Approx(3.0));
    CHECK(ex.basis.size() == 2);
    CHECK(ex.gap == doctest::Approx(2.0));
    for (const auto& v : ex.basis) CHECK(std::abs(v(1)) + std::abs(v(3)) < 1e-12);
  }

  TEST_CASE("dtto matrix vanishes on the model space") {
    ModelSpace K(sample_u());
    const int M = 60;
    OperatorMatrix D = dtto_matrix(FourierVector::basis(1), K, M);
    Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(2 * M + 1, 3);
    Q.bottomRows(M + 1) = K.basis_matrix(M);
    CHECK((D.entries * Q).cwiseAbs().maxCoeff() < 1e-12);
  }
}
