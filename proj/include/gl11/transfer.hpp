#pragma once

// Monodromy, reflecting monodromy, (fused) transfer matrices and the
// Hamiltonians.
//
// Chain layouts:
//   periodic   [aux, V_1, ..., V_N]          transfer acts on V^N
//   open       [G, aux, V_1, ..., V_N]       transfer acts on G (x) V^N
// where G is the Grassmann site of model.hpp.

#include <array>
#include <memory>
#include <mutex>
#include <vector>

#include "gl11/fusion.hpp"
#include "gl11/graded.hpp"
#include "gl11/model.hpp"

namespace gl11 {

/// R_{aux,j} products on an arbitrary chain: T_aux(u) =
/// R_{aux,s_1}(u - theta_1) ... R_{aux,s_N}(u - theta_N) with s_j =
/// first_site + j - 1.
GradedOperator monodromy_on(const Chain& chain, std::size_t aux_pos, Aux aux,
                            std::size_t first_site, cplx u, const ModelParameters& p);
/// Reflecting product R_{s_N,aux}(u + theta_N) ... R_{s_1,aux}(u + theta_1).
GradedOperator reflecting_monodromy_on(const Chain& chain, std::size_t aux_pos, Aux aux,
                                       std::size_t first_site, cplx u,
                                       const ModelParameters& p);

/// Cached evaluator for one parameter set. Embedded R- and K-coefficients
/// are built once per auxiliary space on first use; evaluation is then a
/// chain of affine combinations and products. Safe for concurrent use.
class TransferEngine {
 public:
  explicit TransferEngine(ModelParameters p, GrassmannContext g = {});

  const ModelParameters& params() const { return p_; }
  const GrassmannContext& grassmann() const { return g_; }

  /// Physical space of the transfer matrix: V^N, or G (x) V^N when open.
  const Chain& physical_chain() const { return physical_; }

  /// T_aux(u) on [aux, V^N].
  GradedOperator monodromy(Aux aux, cplx u) const;
  /// T^hat_aux(u) on [aux, V^N].
  GradedOperator reflecting_monodromy(Aux aux, cplx u) const;

  /// str_aux of T (periodic) or of K^+ T K^- T^hat (open).
  GradedOperator transfer(Aux aux, cplx u) const;
  /// Grassmann body of the open transfer matrix; the transfer itself when
  /// periodic.
  GradedOperator transfer_body(Aux aux, cplx u) const;

 private:
  struct AuxCache {
    Chain chain;  // [aux, V^N] or [G, aux, V^N]
    std::vector<GradedOperator> r0, r1;        // R_{aux,j} = r0 + w r1
    std::vector<GradedOperator> rh0, rh1;      // reflecting factors
    GradedOperator km0, km1, kp0, kp1;         // embedded K^-, K^+
  };

  const AuxCache& cache(Aux aux) const;
  GradedOperator product(const AuxCache& c, bool reflecting, cplx u) const;

  ModelParameters p_;
  GrassmannContext g_;
  Chain physical_;
  mutable std::array<std::once_flag, 5> once_;
  mutable std::array<std::unique_ptr<AuxCache>, 5> caches_;
};

GradedOperator monodromy(const ModelParameters& p, Aux aux, cplx u);
GradedOperator reflecting_monodromy(const ModelParameters& p, Aux aux, cplx u);
/// Kind follows p.boundary.
GradedOperator transfer(const ModelParameters& p, Aux aux, cplx u);

/// Periodic: sum_j P_{j,j+1} with P_{N,1} closing the ring, on V^N.
/// Open: nearest-neighbour sum plus both Grassmann boundary terms, on
/// G (x) V^N, equal to t''(0) / (8 eta^N (1 + a+ eta)) at theta = 0. The
/// a-/b-/f- term acts on site N and the a+/b+/f+ term on site 1, matching
/// the operator order inside t(u); bulk terms carry eta^(N-2).
GradedOperator hamiltonian(const ModelParameters& p, const GrassmannContext& g = {});

/// Fermionic site operators on the physical chain (1-based site index).
GradedOperator annihilator(const Chain& chain, std::size_t site_pos);
GradedOperator creator(const Chain& chain, std::size_t site_pos);
GradedOperator number(const Chain& chain, std::size_t site_pos);

}  // namespace gl11
