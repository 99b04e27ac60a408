#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "nafield/errors.hpp"

namespace nafield {

enum class Spin { Up, Down };

/// Finite Fock space for the slave-boson construction: fermion modes
/// (site, spin) with Jordan-Wigner ordering, plus one truncated boson per
/// site. State layout (documented, load-bearing for exported matrices):
///   mode index m = 2*site + (spin == Down), i.e. site-major, Up before Down;
///   fermion bits: bit m of `fbits` is the occupation of mode m;
///   boson index: bos = sum_s n_s * (N_b+1)^(sites-1-s)  (site 0 major);
///   basis index = fbits * (N_b+1)^sites + bos  (fermion bits major).
struct FockBasis {
  int sites = 1;      // 1 or 2
  int boson_cap = 1;  // N_b >= 1

  int n_modes() const { return 2 * sites; }
  int boson_states() const;  // (N_b+1)^sites
  int dim() const;           // 2^(2*sites) * (N_b+1)^sites

  int mode_index(int site, Spin s) const;
  int boson_occupation(int bos, int site) const;

  void require_site(int site) const;
};

using DenseOperator = Eigen::MatrixXcd;

struct FermionOps {
  DenseOperator f;
  DenseOperator f_dagger;
};

struct BosonOps {
  DenseOperator b;
  DenseOperator b_dagger;
};

/// Jordan-Wigner fermion pair for one mode; CAR hold exactly.
FermionOps build_fermion(int site, Spin spin, const FockBasis& basis);

/// Truncated boson ladder pair for one site; [b, b_dagger] = I exactly on
/// occupations below the truncation edge.
BosonOps build_boson(int site, const FockBasis& basis);

/// Projected electron creation operator c_dagger = f_dagger * b.
DenseOperator electron_op(int site, Spin spin, const FockBasis& basis);

/// n_up + n_down + b_dagger b at one site.
DenseOperator constraint_operator(int site, const FockBasis& basis);

/// Orthogonal projector onto the eigenvalue-1 eigenspace of the constraint.
DenseOperator constraint_projector(int site, const FockBasis& basis);

/// Product of all per-site constraint projectors.
DenseOperator physical_projector(const FockBasis& basis);

/// Basis indices of the physical subspace, ascending. Size 3^sites.
std::vector<int> physical_indices(const FockBasis& basis);

/// Restriction of an operator to the physical subspace, rows/cols ordered
/// by physical_indices.
Eigen::MatrixXcd restrict_physical(const DenseOperator& op, const FockBasis& basis);

struct RelationResult {
  std::string name;
  double max_violation = 0.0;
  bool pass = false;
};

struct FockReport {
  std::vector<RelationResult> relations;
  bool all_pass() const;
};

/// Checks the projected-electron algebra on the physical subspace: CAR and
/// truncated CCR, constraint invariance, per-site number bound, nilpotency
/// and no-double-occupancy, holon matrix elements, and the anticommutators
/// of the projected operators against an independently built 3-state
/// (holon/up/down) oracle. Pass threshold 1e-12 per relation.
FockReport verify_projected_algebra(const FockBasis& basis);

/// "relation=<name> max_violation=<float> pass=<bool>"
std::string to_line(const RelationResult& r);

/// Dimension header line then rows of whitespace-separated "re im" pairs.
std::string format_operator(const DenseOperator& op);

}  // namespace nafield
