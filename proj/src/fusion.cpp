#include "gl11/fusion.hpp"

#include <array>
#include <cmath>
#include <string>

#include "gl11/errors.hpp"

namespace gl11 {
namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

// Generic sample points (in units of eta) for recovering affine forms. Zeros
// of every normalization sit at real multiples of eta/2 or at -1/a, so these
// are safe unless a boundary scalar is tuned onto them; the list has spares.
constexpr std::array<cplx, 6> kSamplePoints = {
    cplx(0.37, 0.61), cplx(-0.83, 0.29), cplx(0.55, -0.47),
    cplx(-0.21, -0.73), cplx(1.13, 0.17), cplx(-1.41, -0.39)};

void require_nonzero(cplx value, const char* what) {
  if (std::abs(value) <= 1e-8)
    throw DomainError(std::string("normalization factor ") + what + " vanishes");
}

AffineOperator affine_from(cplx u1, const GradedOperator& v1, cplx u2,
                           const GradedOperator& v2) {
  AffineOperator out;
  out.c1 = (1.0 / (u1 - u2)) * (v1 - v2);
  out.c0 = v1 - u1 * out.c1;
  return out;
}

GradedOperator project(const GradedOperator& x, const GradedOperator& w) {
  return w.adjoint() * x * w;
}

}  // namespace

std::string_view aux_name(Aux a) {
  switch (a) {
    case Aux::Base: return "base";
    case Aux::Bar: return "bar";
    case Aux::Tilde: return "tilde";
    case Aux::BarPrime: return "bar'";
    case Aux::TildePrime: return "tilde'";
  }
  return "?";
}

GradedSpace aux_space(Aux a) {
  switch (a) {
    case Aux::Base:
    case Aux::Bar: return GradedSpace{0, 1};
    case Aux::Tilde:
    case Aux::BarPrime:
    case Aux::TildePrime: return GradedSpace{1, 0};
  }
  return {};
}

Aux aux_from(int branch, int level) {
  if (level == 0) return Aux::Base;
  if (branch == 1 && level == 1) return Aux::Bar;
  if (branch == 1 && level == 2) return Aux::Tilde;
  if (branch == 2 && level == 1) return Aux::BarPrime;
  if (branch == 2 && level == 2) return Aux::TildePrime;
  throw PreconditionError("fusion branch must be 1|2 and level 0|1|2");
}

Projector projector_unchecked(ProjectorKind kind) {
  Projector pr;
  pr.kind = kind;
  GradedSpace pair;
  const double r2 = 1.0 / kSqrt2;
  const double r3 = 1.0 / kSqrt3;
  switch (kind) {
    case ProjectorKind::PlusPair:
      pair = tensor(GradedSpace::fundamental(), GradedSpace::fundamental());
      pr.basis = {{1, 0, 0, 0}, {0, r2, r2, 0}};
      pr.image = aux_space(Aux::Bar);
      break;
    case ProjectorKind::MinusPair:
      pair = tensor(GradedSpace::fundamental(), GradedSpace::fundamental());
      pr.basis = {{0, r2, -r2, 0}, {0, 0, 0, 1}};
      pr.image = aux_space(Aux::BarPrime);
      break;
    case ProjectorKind::SecondMinus:
      pair = tensor(aux_space(Aux::Bar), GradedSpace::fundamental());
      pr.basis = {{0, kSqrt2 * r3, -r3, 0}, {0, 0, 0, 1}};
      pr.image = aux_space(Aux::Tilde);
      break;
    case ProjectorKind::SecondPlus:
      pair = tensor(aux_space(Aux::BarPrime), GradedSpace::fundamental());
      pr.basis = {{1, 0, 0, 0}, {0, -r3, kSqrt2 * r3, 0}};
      pr.image = aux_space(Aux::TildePrime);
      break;
  }
  CMatrix w(pair.dim(), pr.basis.size());
  for (std::size_t c = 0; c < pr.basis.size(); ++c)
    for (std::size_t r = 0; r < pair.dim(); ++r) w(r, c) = pr.basis[c][r];
  pr.isometry = GradedOperator(pr.image, pair, std::move(w));
  if (pr.isometry.parity(1e-15) != 0)
    throw StructuralError("projector basis mixes parities");
  pr.op = pr.isometry * pr.isometry.adjoint();
  return pr;
}

Projector projector(ProjectorKind kind, cplx eta) {
  Projector pr = projector_unchecked(kind);
  GradedOperator lhs;
  cplx scale;
  switch (kind) {
    case ProjectorKind::PlusPair:
      lhs = r_matrix(eta, eta);
      scale = 2.0 * eta;
      break;
    case ProjectorKind::MinusPair:
      lhs = r_matrix(-eta, eta);
      scale = -2.0 * eta;
      break;
    case ProjectorKind::SecondMinus:
      lhs = fused_r(Aux::Bar, eta).at(-1.5 * eta);
      scale = -3.0 * eta;
      break;
    case ProjectorKind::SecondPlus:
      lhs = fused_r(Aux::BarPrime, eta).at(1.5 * eta);
      scale = 3.0 * eta;
      break;
  }
  if (relative_residual(lhs, scale * pr.op) > 1e-11)
    throw StructuralError("projector disagrees with the degenerate R-matrix");
  return pr;
}

GradedOperator fuse_r_direct(Aux aux, cplx u, cplx eta) {
  const GradedSpace v = GradedSpace::fundamental();
  const GradedOperator id_v = GradedOperator::identity(v);
  switch (aux) {
    case Aux::Base: return r_matrix(u, eta);
    case Aux::Bar:
    case Aux::BarPrime: {
      const bool bar = aux == Aux::Bar;
      const cplx half = 0.5 * eta;
      const cplx norm = bar ? u + half : u - half;
      require_nonzero(norm, bar ? "(u + eta/2)" : "(u - eta/2)");
      const Projector pr = projector_unchecked(bar ? ProjectorKind::PlusPair
                                                   : ProjectorKind::MinusPair);
      const Chain chain({v, v, v});
      const GradedOperator p = chain.embed(pr.op, {0, 1});
      const GradedOperator x = p * chain.embed(r_matrix(bar ? u - half : u + half, eta), {0, 2}) *
                               chain.embed(r_matrix(bar ? u + half : u - half, eta), {1, 2}) * p;
      return (1.0 / norm) * project(x, super_tensor(pr.isometry, id_v));
    }
    case Aux::Tilde:
    case Aux::TildePrime: {
      const bool first = aux == Aux::Tilde;
      require_nonzero(u, "u");
      const Aux inner = first ? Aux::Bar : Aux::BarPrime;
      const Projector pr = projector_unchecked(first ? ProjectorKind::SecondMinus
                                                     : ProjectorKind::SecondPlus);
      const Chain chain({aux_space(inner), v, v});
      const GradedOperator p = chain.embed(pr.op, {0, 1});
      const GradedOperator inner_r =
          fused_r(inner, eta).at(first ? u - 0.5 * eta : u + 0.5 * eta);
      const GradedOperator x = p * chain.embed(r_matrix(first ? u + eta : u - eta, eta), {1, 2}) *
                               chain.embed(inner_r, {0, 2}) * p;
      return (1.0 / u) * project(x, super_tensor(pr.isometry, id_v));
    }
  }
  throw PreconditionError("unknown auxiliary space");
}

AffineOperator fused_r(Aux aux, cplx eta) {
  if (aux == Aux::Base) {
    const GradedSpace v = GradedSpace::fundamental();
    return {eta * super_permutation(v), GradedOperator::identity(tensor(v, v))};
  }
  const cplx u1 = eta * kSamplePoints[0];
  const cplx u2 = eta * kSamplePoints[1];
  return affine_from(u1, fuse_r_direct(aux, u1, eta), u2, fuse_r_direct(aux, u2, eta));
}

GradedOperator fuse_r(int branch, int level, cplx u, cplx eta) {
  return fused_r(aux_from(branch, level), eta).at(u);
}

cplx k_normalization(Aux aux, Side side, cplx u, const ModelParameters& p) {
  const cplx e = p.eta;
  const cplx h = 0.5 * e;
  const bool minus = side == Side::Minus;
  const cplx am = p.a_minus;
  const cplx ap = p.a_plus;
  switch (aux) {
    case Aux::Base: return 1.0;
    case Aux::Bar:
      return minus ? (1.0 + (u - h) * am) * (u + h) : (1.0 + (u + h) * ap) * (u - h);
    case Aux::BarPrime:
      return minus ? (1.0 - (u + h) * am) * (u - h) : (1.0 - (u - h) * ap) * (u + h);
    case Aux::Tilde:
      return minus ? 2.0 * (1.0 - (u + e) * am) * (u - h) : 2.0 * (1.0 - u * ap) * (u + e);
    case Aux::TildePrime:
      return minus ? 2.0 * (1.0 + (u - e) * am) * (u + h) : 2.0 * (1.0 + u * ap) * (u - e);
  }
  return 1.0;
}

GradedOperator fuse_k_direct(Aux aux, Side side, cplx u, const ModelParameters& p,
                             const GrassmannContext& g) {
  const GradedSpace v = GradedSpace::fundamental();
  const bool minus = side == Side::Minus;
  auto k = [&](cplx x) { return minus ? k_minus(x, p, g) : k_plus(x, p, g); };
  if (aux == Aux::Base) return k(u);

  const cplx norm = k_normalization(aux, side, u, p);
  if (std::abs(norm) <= 1e-8)
    throw DomainError(std::string("fused K normalization vanishes for aux ") +
                      std::string(aux_name(aux)));
  const cplx e = p.eta;
  const cplx h = 0.5 * e;
  const GradedOperator id_g = GradedOperator::identity(g.aux_space);

  if (aux == Aux::Bar || aux == Aux::BarPrime) {
    const bool bar = aux == Aux::Bar;
    const Projector pr =
        projector_unchecked(bar ? ProjectorKind::PlusPair : ProjectorKind::MinusPair);
    const Chain chain({g.aux_space, v, v});
    const GradedOperator proj = chain.embed(pr.op, {1, 2});
    GradedOperator x;
    if (minus) {
      // P K_1(u -+ eta/2) R_{2,1}(2u) K_2(u +- eta/2) P
      x = proj * chain.embed(k(bar ? u - h : u + h), {0, 1}) *
          chain.embed(r_matrix(2.0 * u, e), {2, 1}) *
          chain.embed(k(bar ? u + h : u - h), {0, 2}) * proj;
    } else {
      // P K_2(u +- eta/2) R_{1,2}(-2u) K_1(u -+ eta/2) P
      x = proj * chain.embed(k(bar ? u + h : u - h), {0, 2}) *
          chain.embed(r_matrix(-2.0 * u, e), {1, 2}) *
          chain.embed(k(bar ? u - h : u + h), {0, 1}) * proj;
    }
    return (1.0 / norm) * project(x, super_tensor(id_g, pr.isometry));
  }

  const bool first = aux == Aux::Tilde;
  const Aux inner = first ? Aux::Bar : Aux::BarPrime;
  const Projector pr =
      projector_unchecked(first ? ProjectorKind::SecondMinus : ProjectorKind::SecondPlus);
  const Chain chain({g.aux_space, aux_space(inner), v});
  const GradedOperator proj = chain.embed(pr.op, {1, 2});
  const AffineOperator inner_k = fused_k(inner, side, p, g);
  const AffineOperator inner_r = fused_r(inner, e);
  const cplx shift = first ? e : -e;       // K_2 argument offset
  const cplx inner_shift = first ? -h : h;  // K_inner argument offset
  GradedOperator x;
  if (minus) {
    // P K_2(u +- eta) R_{inner,2}(2u +- eta/2) K_inner(u -+ eta/2) P
    x = proj * chain.embed(k(u + shift), {0, 2}) *
        chain.embed(inner_r.at(2.0 * u - inner_shift), {1, 2}) *
        chain.embed(inner_k.at(u + inner_shift), {0, 1}) * proj;
  } else {
    // P K_inner(u -+ eta/2) R_{2,inner}(-2u -+ eta/2) K_2(u +- eta) P
    x = proj * chain.embed(inner_k.at(u + inner_shift), {0, 1}) *
        chain.embed(inner_r.at(-2.0 * u + inner_shift), {1, 2}) *
        chain.embed(k(u + shift), {0, 2}) * proj;
  }
  return (1.0 / norm) * project(x, super_tensor(id_g, pr.isometry));
}

AffineOperator fused_k(Aux aux, Side side, const ModelParameters& p,
                       const GrassmannContext& g) {
  if (aux == Aux::Base) {
    const GradedOperator k0 = side == Side::Minus ? k_minus(0.0, p, g) : k_plus(0.0, p, g);
    const GradedOperator k1 = side == Side::Minus ? k_minus(1.0, p, g) : k_plus(1.0, p, g);
    return {k0, k1 - k0};
  }
  cplx nodes[2];
  int found = 0;
  for (const cplx s : kSamplePoints) {
    const cplx u = p.eta * s;
    if (std::abs(k_normalization(aux, side, u, p)) > 1e-3 * (1.0 + std::abs(p.eta))) {
      nodes[found++] = u;
      if (found == 2) break;
    }
  }
  if (found < 2) throw DomainError("no admissible sample points for fused K");
  return affine_from(nodes[0], fuse_k_direct(aux, side, nodes[0], p, g), nodes[1],
                     fuse_k_direct(aux, side, nodes[1], p, g));
}

GradedOperator fuse_k(int branch, int level, char sign, cplx u, const ModelParameters& p,
                      const GrassmannContext& g) {
  if (sign != '+' && sign != '-') throw PreconditionError("K sign must be '+' or '-'");
  return fuse_k_direct(aux_from(branch, level), sign == '-' ? Side::Minus : Side::Plus, u, p,
                       g);
}

}  // namespace gl11
