#pragma once

#include <vector>

#include <Eigen/Dense>

#include "r0colloc/grid2d.hpp"
#include "r0colloc/model.hpp"

namespace r0colloc {

/// Dense discretization of B phi = lambda M phi on a tensor grid.
///
/// Interior rows collocate the operators: B carries the cubature of the
/// birth kernel, M the differentiation-matrix transport plus the reaction
/// term. One row per boundary node carries its nonlocal condition instead
/// (value minus cubature of the boundary kernel), the corner node carries
/// the x-side condition, and nodes marked singular carry plain Dirichlet
/// rows. All rows of B in boundary_index_set are zero.
struct DiscretePencil {
  Eigen::MatrixXd B;
  Eigen::MatrixXd M;
  TensorGrid grid;
  std::vector<int> boundary_index_set;  ///< ascending flat indices
};

/// Birth matrix: interior row (i,j), column (k,h) holds
/// w_{x,k} w_{y,h} K(x_i, y_j, x_k, y_h); boundary rows are zero.
Eigen::MatrixXd assemble_B(const ModelSpec& spec, const TensorGrid& grid);

/// Transition matrix: interior rows apply
///   a(x_i,y_j) Dx[i,k] b(x_k,y_j)  +  c(x_i,y_j) Dy[j,h] d(x_i,y_h)
/// plus mu on the diagonal; boundary rows hold the node value minus the
/// cubature of the matching boundary kernel.
Eigen::MatrixXd assemble_M(const ModelSpec& spec, const TensorGrid& grid);

/// Assembles both matrices and the boundary row set in one pass.
DiscretePencil assemble(const ModelSpec& spec, const TensorGrid& grid);

}  // namespace r0colloc
