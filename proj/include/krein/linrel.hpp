#pragma once

#include <vector>

#include "krein/types.hpp"

namespace krein {

// A linear relation on G = C^n: a linear subspace of G (+) G, stored as a
// 2n x m matrix with orthonormal columns. Rows 0..n-1 hold the x1 components
// of the basis vectors, rows n..2n-1 the x2 components.
class LinearRelation {
 public:
  LinearRelation(int n, ComplexMatrix basis);

  static LinearRelation zero(int n);

  int space_dim() const { return n_; }                          // n
  int dim() const { return static_cast<int>(basis_.cols()); }   // m
  const ComplexMatrix& basis() const { return basis_; }
  ComplexMatrix x1_block() const { return basis_.topRows(n_); }
  ComplexMatrix x2_block() const { return basis_.bottomRows(n_); }
  ComplexMatrix projector() const { return basis_ * basis_.adjoint(); }

 private:
  int n_;
  ComplexMatrix basis_;
};

// Boundary-condition parameters: a pair of n x n matrices encoding the
// condition A x1 = B x2 on (x1, x2) in G (+) G.
struct ParamPair {
  ComplexMatrix a;
  ComplexMatrix b;
  int dim() const { return static_cast<int>(a.rows()); }
};

struct PairConditions {
  bool bg1 = false;  // A B^* = B A^*
  bool bg2 = false;  // ker M^{A,B} = 0
  bool selfadjoint() const { return bg1 && bg2; }
};

// M^{A,B} = [[A, -B], [B, A]] acting on G (+) G.
ComplexMatrix pair_block_matrix(const ParamPair& pair);

// Span of the given vectors in G (+) G; each vector must have 2n entries.
LinearRelation relation_from_span(int n, const std::vector<ComplexVector>& vectors);

// Lambda^{A,B} = ker [A | -B].
LinearRelation relation_from_pair(const ParamPair& pair);

// {(B^* u, A^* u)}; valid for normalized pairs only.
LinearRelation relation_from_normalized_range(const ParamPair& pair);

// Lambda^* = {(x1,x2) : <x1,y2> = <x2,y1> for all (y1,y2) in Lambda}.
LinearRelation adjoint_relation(const LinearRelation& rel);

bool is_symmetric(const LinearRelation& rel);
bool is_selfadjoint(const LinearRelation& rel);

PairConditions check_pair(const ParamPair& pair);

// True iff M^{A,B} is boundedly invertible; coincides with bg2 in finite
// dimension but is kept as a separate predicate.
bool is_normalized(const ParamPair& pair);

// (A, B) = (i(1+U), 1-U) for unitary U; always normalized.
ParamPair cayley_pair(const ComplexMatrix& u);

// The unique unitary U with U(x2 + i x1) = x2 - i x1 on the relation.
// Requires a self-adjoint relation.
ComplexMatrix cayley_transform(const LinearRelation& rel);

// Replaces a pair satisfying bg1/bg2 by the Cayley parameterization of the
// same relation.
ParamPair normalize_pair(const ParamPair& pair);

// Given a normalized pair (A,B) and another pair (C,D) of the same relation,
// recovers the injective factor L with C = LA, D = LB.
ComplexMatrix recover_denormalizer(const ParamPair& normalized, const ParamPair& other);

// Smallest index set theta (by cardinality, then lexicographically) such that
// the relation projects injectively onto the coordinate subspace spanned by
// {(e_j,0) : j not in theta} and {(0,e_j) : j in theta}. Indices are 0-based.
// Requires a self-adjoint relation with n <= 16.
std::vector<int> arnold_projection(const LinearRelation& rel);

bool relations_equal(const LinearRelation& r1, const LinearRelation& r2,
                     double tol = subspace_tol);

}  // namespace krein
