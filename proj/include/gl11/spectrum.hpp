#pragma once

// Bethe roots, T-Q eigenvalues, energies and the determinant-based
// certification of the spectrum.
//
// Periodic: Q(u) = prod_k (u - mu_k); an infinite root is a flag and adds a
// factor 1 to every Q-ratio. Open: Q(u) = prod_k (u - lambda_k)(u + lambda_k
// + eta), one representative per pair lambda <-> -lambda - eta.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl11/fusion.hpp"
#include "gl11/model.hpp"
#include "gl11/poly.hpp"
#include "gl11/verification.hpp"

namespace gl11 {

struct BetheRootSet {
  Boundary kind = Boundary::Periodic;
  std::vector<cplx> finite_roots;
  bool has_infinite_root = false;

  int m() const { return static_cast<int>(finite_roots.size()) + (has_infinite_root ? 1 : 0); }
  /// Canonical text key, e.g. "{0.5+0.5i, inf}".
  std::string key() const;
};

struct SpectralLine {
  BetheRootSet roots;
  std::optional<cplx> energy;  // only at theta = 0
  double bae_residual = 0.0;
};

struct Spectrum {
  ModelParameters params;
  std::vector<cplx> candidates;
  std::vector<SpectralLine> lines;  // canonical order
};

/// Degree-(N-1) BAE polynomial prod(mu - theta - eta) - prod(mu - theta),
/// ascending coefficients, top term removed analytically.
Coefficients periodic_bae_polynomial(const ModelParameters& p);
/// D(lambda) = alpha(lambda) - alpha(-lambda - eta), degree 2N+1.
Coefficients open_bae_polynomial(const ModelParameters& p);

/// Finite periodic roots, sorted canonically.
std::vector<cplx> solve_bae_periodic(const ModelParameters& p);
/// One representative per pair, chosen with Im(lambda + eta/2) < 0 (ties:
/// Re < 0); the trivial root -eta/2 is removed. Throws StructuralError when
/// a root is left unpaired or the trivial root is missing.
std::vector<cplx> solve_bae_open(const ModelParameters& p);

/// All subsets of the candidates (periodic: times the optional infinite
/// root). Ordered by M, then subset index order of the candidates.
std::vector<BetheRootSet> enumerate_states(const ModelParameters& p,
                                           const std::vector<cplx>& candidates);

/// Lambda at level Base, Bar (t^(1)), BarPrime (t^(2)) or Tilde. Throws
/// DomainError within 1e-10 of a zero of the Q denominator.
cplx tq_lambda(const BetheRootSet& roots, const ModelParameters& p, Aux level, cplx u);

/// Max over roots of |BAE ratio - 1|.
double bae_residual(const BetheRootSet& roots, const ModelParameters& p);

/// Energy at theta = 0. Throws PreconditionError for theta != 0 and
/// DomainError for a root on a pole.
cplx energy(const BetheRootSet& roots, const ModelParameters& p);

/// Solver + enumeration + energies (energies only at theta = 0).
Spectrum compute_spectrum(const ModelParameters& p);

/// Determinant oracles at three generic u*: per-state membership, the
/// characteristic polynomial of t_body(u*) against prod_s (x - Lambda_s), and
/// at theta = 0 the same two checks for H against the Bethe energies.
VerificationReport certify_spectrum(const ModelParameters& p, const Spectrum& s,
                                    std::uint64_t seed, double tol = 1e-6);

/// BAE residuals, the functional relations of every state at the
/// inhomogeneities, special values, asymptotics, the degree bound and
/// (open) the Q-symmetry. Needs generic theta for the relations at theta_j.
VerificationReport check_spectral_relations(const ModelParameters& p, const Spectrum& s,
                                            double tol = 1e-8);

/// Spectra at theta_j = eps * (random unit) for eps = 1e-2, 1e-3, linearly
/// extrapolated to eps = 0 and compared with the homogeneous T-Q values at a
/// fixed u*; tolerance 10 eps^2 scale.
VerificationReport check_continuity(const ModelParameters& homogeneous, std::uint64_t seed);

/// Coefficients of det(x I - a) from LU determinants on a circle of radius
/// 1 + ||a||_F, degree dim(a).
Coefficients characteristic_polynomial(const CMatrix& a);

/// max_k |c_k - d_k| r^k / max_k |d_k| r^k: relative error of two
/// polynomials on the circle |x| = r.
double polynomial_distance(const Coefficients& c, const Coefficients& d, double r);

}  // namespace gl11
