#include "krein/linrel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace krein {

namespace {

void require_square_pair(const ParamPair& pair) {
  if (pair.a.rows() != pair.a.cols() || pair.b.rows() != pair.b.cols() ||
      pair.a.rows() != pair.b.rows())
    throw std::invalid_argument("parameter pair must consist of square matrices of equal size");
  if (!all_finite(pair.a) || !all_finite(pair.b))
    throw std::invalid_argument("parameter pair contains non-finite entries");
}

// The sesquilinear boundary form on basis columns: X1^H X2 must be Hermitian
// exactly when the relation is isotropic for [.,.].
ComplexMatrix boundary_form(const LinearRelation& rel) {
  return rel.x1_block().adjoint() * rel.x2_block();
}

}  // namespace

LinearRelation::LinearRelation(int n, ComplexMatrix basis) : n_(n), basis_(std::move(basis)) {
  if (n < 0) throw std::invalid_argument("boundary dimension must be nonnegative");
  if (basis_.rows() != 2 * n)
    throw std::invalid_argument("relation basis must have 2n rows");
  if (basis_.cols() > 2 * n)
    throw std::invalid_argument("relation dimension exceeds 2n");
  if (!all_finite(basis_))
    throw std::invalid_argument("relation basis contains non-finite entries");
  const Eigen::Index m = basis_.cols();
  if (m > 0) {
    const double resid = (basis_.adjoint() * basis_ - ComplexMatrix::Identity(m, m)).norm();
    if (resid > 1e-12 * std::max(1.0, static_cast<double>(m)))
      throw std::invalid_argument("relation basis columns are not orthonormal");
  }
}

LinearRelation LinearRelation::zero(int n) {
  return LinearRelation(n, ComplexMatrix(2 * n, 0));
}

ComplexMatrix pair_block_matrix(const ParamPair& pair) {
  const int n = pair.dim();
  ComplexMatrix m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = pair.a;
  m.topRightCorner(n, n) = -pair.b;
  m.bottomLeftCorner(n, n) = pair.b;
  m.bottomRightCorner(n, n) = pair.a;
  return m;
}

LinearRelation relation_from_span(int n, const std::vector<ComplexVector>& vectors) {
  ComplexMatrix stacked(2 * n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != 2 * n)
      throw std::invalid_argument("span vectors must all have 2n components");
    stacked.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return LinearRelation(n, column_space(stacked));
}

LinearRelation relation_from_pair(const ParamPair& pair) {
  require_square_pair(pair);
  const int n = pair.dim();
  ComplexMatrix k(n, 2 * n);
  k.leftCols(n) = pair.a;
  k.rightCols(n) = -pair.b;
  return LinearRelation(n, kernel_space(k));
}

LinearRelation relation_from_normalized_range(const ParamPair& pair) {
  require_square_pair(pair);
  if (!is_normalized(pair))
    throw std::invalid_argument("relation_from_normalized_range requires a normalized pair");
  const int n = pair.dim();
  ComplexMatrix stacked(2 * n, n);
  stacked.topRows(n) = pair.b.adjoint();
  stacked.bottomRows(n) = pair.a.adjoint();
  return LinearRelation(n, column_space(stacked));
}

LinearRelation adjoint_relation(const LinearRelation& rel) {
  const int n = rel.space_dim();
  const Eigen::Index m = rel.dim();
  if (m == 0) return LinearRelation(n, ComplexMatrix::Identity(2 * n, 2 * n));
  // Lambda^* is the orthogonal complement of J Lambda, J(x1,x2) = (-x2,x1).
  ComplexMatrix rotated(2 * n, m);
  rotated.topRows(n) = -rel.x2_block();
  rotated.bottomRows(n) = rel.x1_block();
  return LinearRelation(n, orthogonal_complement(rotated));
}

bool is_symmetric(const LinearRelation& rel) {
  if (rel.dim() == 0) return true;
  const ComplexMatrix h = boundary_form(rel);
  return (h - h.adjoint()).norm() <= 1e-10 * std::max(1.0, h.norm());
}

bool is_selfadjoint(const LinearRelation& rel) {
  return is_symmetric(rel) && rel.dim() == rel.space_dim();
}

PairConditions check_pair(const ParamPair& pair) {
  require_square_pair(pair);
  PairConditions out;
  const ComplexMatrix comm = pair.a * pair.b.adjoint() - pair.b * pair.a.adjoint();
  out.bg1 = comm.norm() <= 1e-10 * std::max(1.0, pair.a.norm() * pair.b.norm());
  const ComplexMatrix m = pair_block_matrix(pair);
  out.bg2 = sigma_min(m) > rank_cutoff * std::max(1.0, sigma_max(m));
  return out;
}

bool is_normalized(const ParamPair& pair) {
  require_square_pair(pair);
  const ComplexMatrix m = pair_block_matrix(pair);
  return sigma_min(m) > rank_cutoff * std::max(1.0, sigma_max(m));
}

ParamPair cayley_pair(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("Cayley parameter must be square");
  const Eigen::Index n = u.rows();
  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  const double resid = (u.adjoint() * u - eye).norm();
  if (resid > 1e-10 * std::max(1.0, u.norm()))
    throw std::invalid_argument("Cayley parameter is not unitary");
  return ParamPair{Complex(0, 1) * (eye + u), eye - u};
}

ComplexMatrix cayley_transform(const LinearRelation& rel) {
  if (!is_selfadjoint(rel))
    throw std::invalid_argument("Cayley transform requires a self-adjoint relation");
  const int n = rel.space_dim();
  // For an orthonormal basis of a self-adjoint relation, P = X2 + i X1 is
  // unitary, so U = (X2 - i X1) P^H solves U(x2 + i x1) = x2 - i x1.
  const ComplexMatrix p = rel.x2_block() + Complex(0, 1) * rel.x1_block();
  const ComplexMatrix q = rel.x2_block() - Complex(0, 1) * rel.x1_block();
  const ComplexMatrix u = q * p.adjoint();
  const double resid = (u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm();
  if (resid > 1e-10 * std::max(1.0, static_cast<double>(n)))
    throw std::runtime_error("Cayley factor is singular; relation is not self-adjoint");
  return u;
}

ParamPair normalize_pair(const ParamPair& pair) {
  const PairConditions cond = check_pair(pair);
  if (!cond.selfadjoint())
    throw std::invalid_argument("normalize_pair requires a pair satisfying bg1 and bg2");
  return cayley_pair(cayley_transform(relation_from_pair(pair)));
}

ComplexMatrix recover_denormalizer(const ParamPair& normalized, const ParamPair& other) {
  require_square_pair(normalized);
  require_square_pair(other);
  const int n = normalized.dim();
  if (other.dim() != n) throw std::invalid_argument("pair dimensions differ");
  if (!is_normalized(normalized))
    throw std::invalid_argument("reference pair is not normalized");
  if (!relations_equal(relation_from_pair(normalized), relation_from_pair(other)))
    throw std::invalid_argument("pairs parameterize different relations");

  // M^{C,D} (M^{A,B})^{-1} = L (+) L.
  const ComplexMatrix m_ab = pair_block_matrix(normalized);
  const ComplexMatrix m_cd = pair_block_matrix(other);
  const ComplexMatrix s =
      m_ab.transpose().partialPivLu().solve(m_cd.transpose()).transpose();
  const ComplexMatrix l = s.topLeftCorner(n, n);
  const double scale = std::max(1.0, l.norm());
  const double mismatch = (s.bottomRightCorner(n, n) - l).norm() +
                          s.topRightCorner(n, n).norm() + s.bottomLeftCorner(n, n).norm();
  if (mismatch > 1e-8 * scale)
    throw std::runtime_error("denormalizer blocks are inconsistent; pairs do not share a relation");
  return l;
}

std::vector<int> arnold_projection(const LinearRelation& rel) {
  if (!is_selfadjoint(rel))
    throw std::invalid_argument("arnold_projection requires a self-adjoint relation");
  const int n = rel.space_dim();
  if (n > 16) throw std::invalid_argument("arnold_projection supports n <= 16");
  const ComplexMatrix& basis = rel.basis();

  const auto minor_is_regular = [&](const std::vector<int>& theta) {
    std::vector<bool> swap(n, false);
    for (int j : theta) swap[j] = true;
    ComplexMatrix minor(n, n);
    for (int j = 0; j < n; ++j) minor.row(j) = basis.row(swap[j] ? n + j : j);
    return sigma_min(minor) > rank_cutoff * std::max(1.0, sigma_max(minor));
  };

  // Subsets by increasing cardinality, lexicographic within each size.
  for (int k = 0; k <= n; ++k) {
    std::vector<int> theta(k);
    for (int i = 0; i < k; ++i) theta[i] = i;
    while (true) {
      if (minor_is_regular(theta)) return theta;
      int i = k - 1;
      while (i >= 0 && theta[i] == n - k + i) --i;
      if (i < 0) break;
      ++theta[i];
      for (int j = i + 1; j < k; ++j) theta[j] = theta[j - 1] + 1;
    }
  }
  throw std::runtime_error("no injective coordinate projection exists; relation is not Lagrangian");
}

bool relations_equal(const LinearRelation& r1, const LinearRelation& r2, double tol) {
  if (r1.space_dim() != r2.space_dim())
    throw std::invalid_argument("relations live on different boundary spaces");
  if (r1.dim() != r2.dim()) return false;
  return (r1.projector() - r2.projector()).norm() <= tol;
}

}  // namespace krein
