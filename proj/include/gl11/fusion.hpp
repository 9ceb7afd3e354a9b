#pragma once

// Projectors and the two-branch fusion hierarchy of R- and K-matrices.
//
// Auxiliary spaces:
//   Base        V           parities (0,1)
//   Bar         span{psi}   (0,1)   first branch, level 1
//   Tilde       span{phi}   (1,0)   first branch, level 2
//   BarPrime    span{psibar}(1,0)   second branch, level 1
//   TildePrime  span{phit}  (1,0)   second branch, level 2
//
// Every fused R- and K-matrix is affine in u. The direct definitions divide
// by scalar normalizations with zeros, so downstream code uses the affine
// form c0 + u c1 recovered from two generic samples; it is exact wherever
// the direct formula is defined and extends it through removable points.

#include <string_view>
#include <vector>

#include "gl11/graded.hpp"
#include "gl11/model.hpp"

namespace gl11 {

enum class Aux { Base, Bar, Tilde, BarPrime, TildePrime };

std::string_view aux_name(Aux a);
GradedSpace aux_space(Aux a);
/// (branch, level) -> Aux; level 0 is Base. Throws PreconditionError.
Aux aux_from(int branch, int level);

enum class ProjectorKind {
  PlusPair,     // P^(+) on V (x) V
  MinusPair,    // P^(-) on V (x) V
  SecondMinus,  // first-branch level-2 projector on V_bar (x) V
  SecondPlus,   // second-branch level-2 projector on V_bar' (x) V
};

struct Projector {
  ProjectorKind kind;
  std::vector<std::vector<cplx>> basis;  // image basis in the pair space
  GradedSpace image;
  GradedOperator isometry;  // image -> pair space, columns = basis
  GradedOperator op;        // isometry * isometry^dagger
};

/// Projector built from its explicit basis. The degeneracy relation of the
/// matching (fused) R-matrix at `eta` is checked; a residual above 1e-11
/// throws StructuralError.
Projector projector(ProjectorKind kind, cplx eta);
/// Same without the degeneracy cross-check.
Projector projector_unchecked(ProjectorKind kind);

/// Operator affine in the spectral parameter.
struct AffineOperator {
  GradedOperator c0;
  GradedOperator c1;
  GradedOperator at(cplx u) const { return c0 + u * c1; }
};

/// R_{aux,V}(u) straight from the fusion formula. Throws DomainError when
/// the scalar normalization vanishes.
GradedOperator fuse_r_direct(Aux aux, cplx u, cplx eta);
/// Affine form of R_{aux,V}.
AffineOperator fused_r(Aux aux, cplx eta);
/// R_{aux,V}(u) for (branch, level) as in the hierarchy; level 0 gives R.
GradedOperator fuse_r(int branch, int level, cplx u, cplx eta);

enum class Side { Minus, Plus };

/// Scalar normalization dividing the fused K-matrix of (aux, side) at u.
cplx k_normalization(Aux aux, Side side, cplx u, const ModelParameters& p);

/// K^{side}_{aux}(u) on G (x) V_aux straight from the fusion formula. Throws
/// DomainError naming the factor when |normalization| <= 1e-8.
GradedOperator fuse_k_direct(Aux aux, Side side, cplx u, const ModelParameters& p,
                             const GrassmannContext& g = {});
/// Affine form of K^{side}_{aux}.
AffineOperator fused_k(Aux aux, Side side, const ModelParameters& p,
                       const GrassmannContext& g = {});
/// Entry by (branch, level, sign '+' or '-').
GradedOperator fuse_k(int branch, int level, char sign, cplx u, const ModelParameters& p,
                      const GrassmannContext& g = {});

}  // namespace gl11
