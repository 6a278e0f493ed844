// Copyright 2026 The superadmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "superadmm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "superadmm/rng.hpp"

namespace superadmm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDensity = 0.15;

// Stream identifiers. Every random quantity draws from its own stream so
// that changing one recipe does not perturb the others.
enum Stream : std::uint64_t {
  kMaskA = 1,
  kValueA,
  kMaskM,
  kValueM,
  kCostQ,
  kLower,
  kUpper,
  kMaskV,
  kValueV,
  kNoise,
  kNoiseMix,
  kOutlier,
  kDynamics,
  kInputMatrix,
  kStateWeight,
  kStateBound,
  kInputBound,
  kInitialState,
};

// Bernoulli(0.15) mask from one stream, N(0, 1) values from another,
// traversed column by column.
SparseMatrix sparse_gaussian(Index rows, Index cols, std::uint64_t seed,
                             std::uint64_t mask_stream,
                             std::uint64_t value_stream) {
  Rng mask(seed, mask_stream);
  Rng value(seed, value_stream);
  SparseMatrix out(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      if (mask.bernoulli(kDensity)) {
        out.rowidx.push_back(i);
        out.values.push_back(value.normal(0.0, 1.0));
      }
    }
    out.colptr[j + 1] = static_cast<Index>(out.rowidx.size());
  }
  return out;
}

// Upper triangle of M M' + shift I.
SparseMatrix gram_upper(const SparseMatrix& M, double shift) {
  const Index n = M.nrows;
  const SparseMatrix Mt = transpose(M);  // column j of Mt is row j of M
  SparseMatrix out(n, n);
  std::vector<double> acc(n, 0.0);
  std::vector<bool> used(n, false);
  std::vector<Index> rows;
  for (Index j = 0; j < n; ++j) {
    rows.clear();
    for (Index p = Mt.colptr[j]; p < Mt.colptr[j + 1]; ++p) {
      const Index k = Mt.rowidx[p];
      const double mjk = Mt.values[p];
      for (Index r = M.colptr[k]; r < M.colptr[k + 1]; ++r) {
        const Index i = M.rowidx[r];
        if (i > j) continue;
        if (!used[i]) {
          used[i] = true;
          rows.push_back(i);
        }
        acc[i] += M.values[r] * mjk;
      }
    }
    if (!used[j]) {
      used[j] = true;
      rows.push_back(j);
    }
    acc[j] += shift;
    std::sort(rows.begin(), rows.end());
    for (Index i : rows) {
      out.rowidx.push_back(i);
      out.values.push_back(acc[i]);
      acc[i] = 0.0;
      used[i] = false;
    }
    out.colptr[j + 1] = static_cast<Index>(out.rowidx.size());
  }
  return out;
}

struct Triplets {
  std::vector<Index> rows;
  std::vector<Index> cols;
  std::vector<double> vals;

  void add(Index i, Index j, double v) {
    rows.push_back(i);
    cols.push_back(j);
    vals.push_back(v);
  }
  SparseMatrix build(Index nrows, Index ncols) const {
    return SparseMatrix::from_triplets(nrows, ncols, rows, cols, vals);
  }
};

QpProblem make_problem(SparseMatrix P, std::vector<double> q, SparseMatrix A,
                       std::vector<double> l, std::vector<double> u) {
  RawProblem raw;
  raw.n = P.ncols;
  raw.m = A.nrows;
  raw.P = std::move(P);
  raw.q = std::move(q);
  raw.A = std::move(A);
  raw.l = std::move(l);
  raw.u = std::move(u);
  return validate_problem(std::move(raw));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw GeneratorError(what);
}

using EigenMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMat to_eigen(const DenseMatrix& a) {
  return Eigen::Map<const EigenMat>(a.data.data(), a.rows, a.cols);
}

DenseMatrix from_eigen(const EigenMat& a) {
  DenseMatrix out(static_cast<int>(a.rows()), static_cast<int>(a.cols()));
  Eigen::Map<EigenMat>(out.data.data(), a.rows(), a.cols()) = a;
  return out;
}

double matrix_inf_norm(const EigenMat& a) {
  return a.rows() == 0 ? 0.0 : a.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kMpc:
      return "mpc";
    case Family::kLasso:
      return "lasso";
    case Family::kHuber:
      return "huber";
    case Family::kRandom:
      return "random";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : {Family::kMpc, Family::kLasso, Family::kHuber, Family::kRandom}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

DenseMatrix solve_dare(const DenseMatrix& A_in, const DenseMatrix& B_in,
                       const DenseMatrix& Q_in, const DenseMatrix& R_in) {
  const EigenMat A = to_eigen(A_in);
  const EigenMat B = to_eigen(B_in);
  const EigenMat Q = to_eigen(Q_in);
  const EigenMat R = to_eigen(R_in);
  require(A.rows() == A.cols() && B.rows() == A.rows() &&
              Q.rows() == A.rows() && Q.cols() == A.cols() &&
              R.rows() == B.cols() && R.cols() == B.cols(),
          "solve_dare: inconsistent dimensions");

  constexpr int kMaxIterations = 100000;
  EigenMat P = Q;
  for (int it = 0; it < kMaxIterations; ++it) {
    const EigenMat PA = P * A;
    const EigenMat BtPA = B.transpose() * PA;
    const EigenMat S = R + B.transpose() * P * B;
    const EigenMat gain = S.ldlt().solve(BtPA);
    EigenMat next = A.transpose() * PA - BtPA.transpose() * gain + Q;
    // ldlt() reads one triangle of S; an unsymmetric P lets the other half
    // drift and the recursion diverges along unstable modes.
    next = 0.5 * (next + next.transpose()).eval();
    if (!next.allFinite()) break;
    const double change = matrix_inf_norm(next - P);
    const double scale = matrix_inf_norm(P);
    P = std::move(next);
    if (change <= 1e-10 * scale) return from_eigen(P);
  }
  throw GeneratorError("Riccati iteration did not converge");
}

QpProblem gen_mpc(int nx, int horizon, std::uint64_t seed) {
  require(nx >= 2 && nx % 2 == 0, "mpc: nx must be even and positive");
  require(horizon >= 1, "mpc: horizon must be >= 1");
  const int nu = nx / 2;
  const int N = horizon;

  // A non-stabilizable draw is redrawn from fresh streams.
  constexpr int kMaxDraws = 16;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const std::uint64_t s = seed + 0x1000003ULL * static_cast<std::uint64_t>(draw);

    DenseMatrix Abar(nx, nx);
    DenseMatrix Bbar(nx, nu);
    DenseMatrix Q(nx, nx);
    DenseMatrix R(nu, nu);
    {
      Rng rng(s, kDynamics);
      for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < nx; ++j) {
          Abar(i, j) = (i == j ? 1.0 : 0.0) + rng.normal(0.0, 0.1);
        }
      }
    }
    {
      Rng rng(s, kInputMatrix);
      for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < nu; ++j) Bbar(i, j) = rng.normal(0.0, 1.0);
      }
    }
    {
      Rng rng(s, kStateWeight);
      for (int i = 0; i < nx; ++i) Q(i, i) = rng.uniform(0.0, 10.0);
    }
    for (int i = 0; i < nu; ++i) R(i, i) = 0.1;

    DenseMatrix QT;
    try {
      QT = solve_dare(Abar, Bbar, Q, R);
    } catch (const GeneratorError&) {
      continue;
    }

    std::vector<double> xbar(nx), ubar(nu), x0(nx);
    {
      Rng rng(s, kStateBound);
      for (auto& v : xbar) v = rng.uniform(1.0, 5.0);
    }
    {
      Rng rng(s, kInputBound);
      for (auto& v : ubar) v = rng.uniform(1.0, 5.0);
    }
    {
      Rng rng(s, kInitialState);
      for (int i = 0; i < nx; ++i) x0[i] = rng.uniform(-0.5 * xbar[i], 0.5 * xbar[i]);
    }

    const Index n = (N + 1) * nx + N * nu;
    const Index u_offset = (N + 1) * nx;
    auto xi = [&](int stage, int r) { return stage * nx + r; };
    auto ui = [&](int stage, int c) { return u_offset + stage * nu + c; };

    // The quadratic terms carry no 1/2, hence the factor 2.
    Triplets p;
    for (int stage = 0; stage < N; ++stage) {
      for (int r = 0; r < nx; ++r) p.add(xi(stage, r), xi(stage, r), 2.0 * Q(r, r));
    }
    for (int c = 0; c < nx; ++c) {
      for (int r = 0; r <= c; ++r) {
        if (QT(r, c) != 0.0) p.add(xi(N, r), xi(N, c), 2.0 * QT(r, c));
      }
    }
    for (int stage = 0; stage < N; ++stage) {
      for (int c = 0; c < nu; ++c) p.add(ui(stage, c), ui(stage, c), 2.0 * R(c, c));
    }

    Triplets a;
    std::vector<double> l, u;
    Index row = 0;
    for (int r = 0; r < nx; ++r, ++row) {
      a.add(row, xi(0, r), 1.0);
      l.push_back(x0[r]);
      u.push_back(x0[r]);
    }
    for (int stage = 0; stage < N; ++stage) {
      for (int r = 0; r < nx; ++r, ++row) {
        a.add(row, xi(stage + 1, r), 1.0);
        for (int c = 0; c < nx; ++c) a.add(row, xi(stage, c), -Abar(r, c));
        for (int c = 0; c < nu; ++c) a.add(row, ui(stage, c), -Bbar(r, c));
        l.push_back(0.0);
        u.push_back(0.0);
      }
    }
    for (int stage = 1; stage <= N; ++stage) {
      for (int r = 0; r < nx; ++r, ++row) {
        a.add(row, xi(stage, r), 1.0);
        l.push_back(-xbar[r]);
        u.push_back(xbar[r]);
      }
    }
    for (int stage = 0; stage < N; ++stage) {
      for (int c = 0; c < nu; ++c, ++row) {
        a.add(row, ui(stage, c), 1.0);
        l.push_back(-ubar[c]);
        u.push_back(ubar[c]);
      }
    }

    return make_problem(p.build(n, n), std::vector<double>(n, 0.0),
                        a.build(row, n), std::move(l), std::move(u));
  }
  throw GeneratorError("mpc: no stabilizable system after repeated draws");
}

QpProblem gen_lasso(int n, std::uint64_t seed, std::optional<int> m_data) {
  require(n >= 1, "lasso: n must be >= 1");
  const int md = m_data.value_or(100 * n);
  require(md >= 1, "lasso: m_data must be >= 1");

  const SparseMatrix Ad = sparse_gaussian(md, n, seed, kMaskA, kValueA);
  std::vector<double> v(n, 0.0);
  {
    Rng mask(seed, kMaskV);
    Rng value(seed, kValueV);
    for (auto& vj : v) {
      const bool zero = mask.bernoulli(0.5);
      const double draw = value.normal(0.0, 1.0 / n);
      vj = zero ? 0.0 : draw;
    }
  }
  std::vector<double> b = spmv(Ad, v);
  {
    Rng noise(seed, kNoise);
    for (auto& bi : b) bi += noise.normal(0.0, 1.0);
  }
  const double lambda = 0.2 * infinity_norm(spmv_transpose(Ad, b));

  // Variables (y, x, t).
  const Index nvar = md + 2 * n;
  const Index x0 = md;
  const Index t0 = md + n;

  SparseMatrix P(nvar, nvar);
  for (Index j = 0; j < nvar; ++j) {
    if (j < md) {
      P.rowidx.push_back(j);
      P.values.push_back(2.0);
    }
    P.colptr[j + 1] = static_cast<Index>(P.rowidx.size());
  }
  std::vector<double> q(nvar, 0.0);
  for (int j = 0; j < n; ++j) q[t0 + j] = lambda;

  Triplets a;
  std::vector<double> l, u;
  for (Index i = 0; i < md; ++i) a.add(i, i, 1.0);
  for (Index j = 0; j < n; ++j) {
    for (Index p = Ad.colptr[j]; p < Ad.colptr[j + 1]; ++p) {
      a.add(Ad.rowidx[p], x0 + j, -Ad.values[p]);
    }
  }
  for (Index i = 0; i < md; ++i) {
    l.push_back(-b[i]);
    u.push_back(-b[i]);
  }
  for (Index j = 0; j < n; ++j) {
    a.add(md + j, x0 + j, 1.0);
    a.add(md + j, t0 + j, -1.0);
    l.push_back(-kInf);
    u.push_back(0.0);
  }
  for (Index j = 0; j < n; ++j) {
    a.add(md + n + j, x0 + j, 1.0);
    a.add(md + n + j, t0 + j, 1.0);
    l.push_back(0.0);
    u.push_back(kInf);
  }
  return make_problem(std::move(P), std::move(q), a.build(md + 2 * n, nvar),
                      std::move(l), std::move(u));
}

QpProblem gen_huber(int n, std::uint64_t seed, std::optional<int> m_data) {
  require(n >= 1, "huber: n must be >= 1");
  const int md = m_data.value_or(100 * n);
  require(md >= 1, "huber: m_data must be >= 1");
  constexpr double kHuberM = 1.0;

  const SparseMatrix Ad = sparse_gaussian(md, n, seed, kMaskA, kValueA);
  std::vector<double> v(n);
  {
    Rng value(seed, kValueV);
    for (auto& vj : v) vj = value.normal(0.0, 1.0 / n);
  }
  std::vector<double> b = spmv(Ad, v);
  {
    Rng mix(seed, kNoiseMix);
    Rng noise(seed, kNoise);
    Rng outlier(seed, kOutlier);
    for (auto& bi : b) {
      const bool regular = mix.bernoulli(0.95);
      const double gauss = noise.normal(0.0, 0.25);
      const double wild = outlier.uniform(0.0, 10.0);
      bi += regular ? gauss : wild;
    }
  }

  // Variables (x, u, r, s).
  const Index nvar = n + 3 * md;
  const Index u0 = n;
  const Index r0 = n + md;
  const Index s0 = n + 2 * md;

  SparseMatrix P(nvar, nvar);
  for (Index j = 0; j < nvar; ++j) {
    if (j >= u0 && j < r0) {
      P.rowidx.push_back(j);
      P.values.push_back(2.0);
    }
    P.colptr[j + 1] = static_cast<Index>(P.rowidx.size());
  }
  std::vector<double> q(nvar, 0.0);
  for (Index i = 0; i < md; ++i) {
    q[r0 + i] = 2.0 * kHuberM;
    q[s0 + i] = 2.0 * kHuberM;
  }

  Triplets a;
  std::vector<double> l, u;
  for (Index j = 0; j < n; ++j) {
    for (Index p = Ad.colptr[j]; p < Ad.colptr[j + 1]; ++p) {
      a.add(Ad.rowidx[p], j, Ad.values[p]);
    }
  }
  for (Index i = 0; i < md; ++i) {
    a.add(i, u0 + i, -1.0);
    a.add(i, r0 + i, -1.0);
    a.add(i, s0 + i, 1.0);
    l.push_back(b[i]);
    u.push_back(b[i]);
  }
  for (Index i = 0; i < md; ++i) {
    a.add(md + i, r0 + i, 1.0);
    l.push_back(0.0);
    u.push_back(kInf);
  }
  for (Index i = 0; i < md; ++i) {
    a.add(2 * md + i, s0 + i, 1.0);
    l.push_back(0.0);
    u.push_back(kInf);
  }
  return make_problem(std::move(P), std::move(q), a.build(3 * md, nvar),
                      std::move(l), std::move(u));
}

QpProblem gen_random_qp(int n, int m, std::uint64_t seed) {
  require(n >= 1 && m >= 1, "random: n and m must be >= 1");
  const SparseMatrix M = sparse_gaussian(n, n, seed, kMaskM, kValueM);
  SparseMatrix P = gram_upper(M, 1e-2);
  std::vector<double> q(n);
  {
    Rng rng(seed, kCostQ);
    for (auto& v : q) v = rng.normal(0.0, 1.0);
  }
  SparseMatrix A = sparse_gaussian(m, n, seed, kMaskA, kValueA);
  std::vector<double> l(m), u(m);
  {
    Rng lo(seed, kLower);
    Rng hi(seed, kUpper);
    for (int i = 0; i < m; ++i) {
      l[i] = -lo.uniform();
      u[i] = hi.uniform();
    }
  }
  return make_problem(std::move(P), std::move(q), std::move(A), std::move(l),
                      std::move(u));
}

QpProblem generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::kMpc:
      return gen_mpc(spec.nx, spec.horizon, spec.seed);
    case Family::kLasso:
      return gen_lasso(spec.n, spec.seed);
    case Family::kHuber:
      return gen_huber(spec.n, spec.seed);
    case Family::kRandom:
      return gen_random_qp(spec.n, spec.m, spec.seed);
  }
  throw GeneratorError("unknown family");
}

}  // namespace superadmm
