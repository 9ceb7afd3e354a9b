#include "gl11/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "gl11/errors.hpp"
#include "gl11/fusion.hpp"
#include "gl11/poly.hpp"
#include "gl11/transfer.hpp"

namespace gl11 {
namespace {

const GradedSpace kV = GradedSpace::fundamental();

std::string str(cplx z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string label(const std::string& head, std::size_t j) {
  return head + " j=" + std::to_string(j + 1);
}

double commutator_residual(const GradedOperator& a, const GradedOperator& b) {
  const double na = a.matrix().frobenius_norm();
  const double nb = b.matrix().frobenius_norm();
  const GradedOperator c = a * b - b * a;
  return c.matrix().frobenius_norm() / std::max(na * nb, 1e-300);
}

/// |a| / scale for identities of the form a = 0.
double zero_residual(const GradedOperator& a, double scale) {
  return a.matrix().frobenius_norm() / std::max(scale, 1e-300);
}

std::vector<GradedSpace> with_front(std::initializer_list<GradedSpace> front, int n) {
  std::vector<GradedSpace> f(front);
  for (int j = 0; j < n; ++j) f.push_back(kV);
  return f;
}

GradedOperator lift(const GradedOperator& w, const GradedOperator& rest) {
  return super_tensor(w, rest);
}

GradedOperator r_aux(Aux a, cplx u, cplx eta) { return fused_r(a, eta).at(u); }

ModelParameters as_open(const ModelParameters& p) {
  ModelParameters q = p;
  q.boundary = Boundary::Open;
  return q;
}

// 4x4 closed forms of the fused R-matrices.
GradedOperator closed_form_fused_r(Aux a, cplx u, cplx eta) {
  CMatrix m(4, 4);
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  switch (a) {
    case Aux::Base: return r_matrix(u, eta);
    case Aux::Bar:
    case Aux::BarPrime: {
      const double sign = a == Aux::Bar ? 1.0 : -1.0;
      m(0, 0) = u + 1.5 * eta;
      m(1, 1) = u - 0.5 * eta;
      m(1, 2) = m(2, 1) = sign * s2 * eta;
      m(2, 2) = u + 0.5 * eta;
      m(3, 3) = u - 1.5 * eta;
      break;
    }
    case Aux::Tilde:
    case Aux::TildePrime:
      m(0, 0) = u + 2.0 * eta;
      m(1, 1) = u - eta;
      m(1, 2) = m(2, 1) = -s3 * eta;
      m(2, 2) = u + eta;
      m(3, 3) = u - 2.0 * eta;
      break;
  }
  return {tensor(aux_space(a), kV), std::move(m)};
}

void require_open_theta_clear(const ModelParameters& p) {
  const cplx e = p.eta;
  const cplx bad[] = {0.0, 0.5 * e, -0.5 * e, e, -e, 1.5 * e, -1.5 * e};
  for (std::size_t j = 0; j < p.theta.size(); ++j)
    for (const cplx b : bad)
      if (std::abs(p.theta[j] - b) < 1e-6)
        throw PreconditionError("theta_" + std::to_string(j + 1) +
                                " sits on a singular point of the open identities");
}

}  // namespace

void VerificationReport::add(std::string family, std::string lbl, double residual,
                             double tolerance, std::string note) {
  CheckResult c;
  c.family = std::move(family);
  c.label = std::move(lbl);
  c.residual = residual;
  c.tolerance = tolerance;
  c.passed = std::isfinite(residual) && residual <= tolerance;
  c.note = std::move(note);
  checks.push_back(std::move(c));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, std::isfinite(c.residual) ? c.residual : INFINITY);
  return m;
}

ModelParameters random_parameters(SeededDraw& draw, int n_sites, Boundary boundary) {
  ModelParameters p;
  p.n_sites = n_sites;
  p.boundary = boundary;
  p.eta = std::polar(draw.uniform(0.6, 1.4), draw.uniform(-0.4, 0.4));
  const cplx e = p.eta;
  const cplx single[] = {0.0, 0.5 * e, -0.5 * e, e, -e, 1.5 * e, -1.5 * e};
  const cplx pair[] = {0.0, e, -e, 2.0 * e, -2.0 * e};
  p.theta.clear();
  while (static_cast<int>(p.theta.size()) < n_sites) {
    const cplx th = draw.complex(-1.0, 1.0);
    bool ok = true;
    for (const cplx b : single) ok = ok && std::abs(th - b) > 0.1;
    for (const cplx o : p.theta)
      for (const cplx b : pair) ok = ok && std::abs(th - o - b) > 0.1 && std::abs(th + o - b) > 0.1;
    if (ok) p.theta.push_back(th);
  }
  p.a_minus = draw.complex(-1.0, 1.0);
  p.a_plus = draw.complex(-1.0, 1.0);
  p.b_minus = draw.complex(-1.0, 1.0);
  p.b_plus = draw.complex(-1.0, 1.0);
  p.f_minus = draw.complex(-1.0, 1.0);
  p.f_plus = draw.complex(-1.0, 1.0);
  return p;
}

VerificationReport verify_rk(const ModelParameters& p, std::uint64_t seed, int draws,
                             double tol) {
  VerificationReport rep;
  rep.name = "verify-rk";
  rep.seed = seed;
  rep.params = p;
  SeededDraw draw(seed);
  const cplx eta = p.eta;
  const Chain c2({kV, kV});
  const Chain c3({kV, kV, kV});
  const GradedOperator id2 = c2.identity();
  auto r = [&](cplx u) { return r_matrix(u, eta); };

  rep.add("regularity", "R(0) = eta P", relative_residual(r(0.0), eta * super_permutation(kV)), tol);
  rep.add("degeneracy", "R(eta) = 2 eta P+",
          relative_residual(r(eta), (2.0 * eta) * projector_unchecked(ProjectorKind::PlusPair).op),
          tol);
  rep.add("degeneracy", "R(-eta) = -2 eta P-",
          relative_residual(r(-eta),
                            (-2.0 * eta) * projector_unchecked(ProjectorKind::MinusPair).op),
          tol);

  for (int d = 0; d < draws; ++d) {
    const cplx u = draw.complex(-1.5, 1.5);
    const cplx v = draw.complex(-1.5, 1.5);
    const std::string at = "u=" + str(u) + " v=" + str(v);
    const GradedOperator lhs = c3.embed(r(u - v), {0, 1}) * c3.embed(r(u), {0, 2}) *
                               c3.embed(r(v), {1, 2});
    const GradedOperator rhs = c3.embed(r(v), {1, 2}) * c3.embed(r(u), {0, 2}) *
                               c3.embed(r(u - v), {0, 1});
    rep.add("GYBE", at, relative_residual(lhs, rhs), tol);
    rep.add("unitarity", at,
            relative_residual(c2.embed(r(u), {0, 1}) * c2.embed(r(-u), {1, 0}),
                              (-(u - eta) * (u + eta)) * id2),
            tol);
    rep.add("crossing-unitarity", at,
            relative_residual(partial_super_transpose(r(-u), kV, 1) *
                                  partial_super_transpose(c2.embed(r(u), {1, 0}), kV, 1),
                              (-u * u) * id2),
            tol);
  }

  GrassmannContext g;
  rep.add("grassmann", "E^2 = 0", (g.generator * g.generator).matrix().max_abs(), 0.0);
  rep.add("grassmann", "E odd", g.generator.parity() == 1 ? 0.0 : 1.0, 0.0);

  const ModelParameters q = as_open(p);
  const Chain ck({g.aux_space, kV, kV});
  rep.add("K", "K-(0) = I", relative_residual(k_minus(0.0, q), GradedOperator::identity(tensor(g.aux_space, kV))), tol);
  rep.add("K", "K+(0) = I", relative_residual(k_plus(0.0, q), GradedOperator::identity(tensor(g.aux_space, kV))), tol);
  for (int d = 0; d < draws; ++d) {
    const cplx u = draw.complex(-1.5, 1.5);
    const cplx v = draw.complex(-1.5, 1.5);
    const std::string at = "u=" + str(u) + " v=" + str(v);
    auto km1 = ck.embed(k_minus(u, q), {0, 1});
    auto km2 = ck.embed(k_minus(v, q), {0, 2});
    GradedOperator lhs = ck.embed(r(u - v), {1, 2}) * km1 * ck.embed(r(u + v), {2, 1}) * km2;
    GradedOperator rhs = km2 * ck.embed(r(u + v), {1, 2}) * km1 * ck.embed(r(u - v), {2, 1});
    rep.add("RE", at, relative_residual(lhs, rhs), tol);
    auto kp1 = ck.embed(k_plus(u, q), {0, 1});
    auto kp2 = ck.embed(k_plus(v, q), {0, 2});
    lhs = ck.embed(r(v - u), {1, 2}) * kp1 * ck.embed(r(-u - v), {2, 1}) * kp2;
    rhs = kp2 * ck.embed(r(-u - v), {1, 2}) * kp1 * ck.embed(r(v - u), {2, 1});
    rep.add("DRE", at, relative_residual(lhs, rhs), tol);
  }
  if (std::abs(q.b_minus) + std::abs(q.f_minus) + std::abs(q.b_plus) + std::abs(q.f_plus) > 0.0) {
    const GradedOperator km = k_minus(0.3, q);
    const GradedOperator kp = k_plus(0.7, q);
    const double norm = (km * kp - kp * km).matrix().frobenius_norm();
    std::ostringstream note;
    note << "commutator norm " << norm;
    rep.add("K-noncommuting", "[K-(0.3), K+(0.7)] != 0 (residual = 1e-3 / norm)",
            1e-3 / std::max(norm, 1e-300), 1.0, note.str());
  }
  return rep;
}

VerificationReport verify_fusion(const ModelParameters& p, std::uint64_t seed, int draws,
                                 double tol) {
  VerificationReport rep;
  rep.name = "verify-fusion";
  rep.seed = seed;
  rep.params = p;
  SeededDraw draw(seed);
  const cplx eta = p.eta;
  const Aux fused[] = {Aux::Bar, Aux::BarPrime, Aux::Tilde, Aux::TildePrime};

  const std::pair<ProjectorKind, const char*> kinds[] = {
      {ProjectorKind::PlusPair, "P+"},
      {ProjectorKind::MinusPair, "P-"},
      {ProjectorKind::SecondMinus, "PP-"},
      {ProjectorKind::SecondPlus, "PC+"}};
  for (const auto& [kind, name] : kinds) {
    try {
      const Projector pr = projector(kind, eta);
      rep.add("projector", std::string(name) + " degeneracy", 0.0, tol);
      rep.add("projector", std::string(name) + " idempotent",
              relative_residual(pr.op * pr.op, pr.op), tol);
      rep.add("projector", std::string(name) + " rank 2",
              std::abs(pr.op.matrix().trace() - 2.0), tol);
      rep.add("projector", std::string(name) + " orthonormal basis",
              relative_residual(pr.isometry.adjoint() * pr.isometry,
                                GradedOperator::identity(pr.image)),
              tol);
    } catch (const StructuralError& e) {
      rep.add("projector", std::string(name) + " degeneracy", INFINITY, tol, e.what());
    }
  }
  rep.add("projector", "P+ + P- = I",
          relative_residual(projector_unchecked(ProjectorKind::PlusPair).op +
                                projector_unchecked(ProjectorKind::MinusPair).op,
                            GradedOperator::identity(tensor(kV, kV))),
          tol);

  for (int d = 0; d < draws; ++d) {
    const cplx u = draw.complex(-1.5, 1.5);
    const cplx v = draw.complex(-1.5, 1.5);
    const std::string at = "u=" + str(u) + " v=" + str(v);
    for (const Aux a : fused) {
      const std::string name(aux_name(a));
      rep.add("closed-form", name + " " + at,
              relative_residual(r_aux(a, u, eta), closed_form_fused_r(a, u, eta)), tol);
      const Chain c({aux_space(a), kV, kV});
      const GradedOperator lhs = c.embed(r_aux(a, u - v, eta), {0, 1}) *
                                 c.embed(r_aux(a, u, eta), {0, 2}) *
                                 c.embed(r_matrix(v, eta), {1, 2});
      const GradedOperator rhs = c.embed(r_matrix(v, eta), {1, 2}) *
                                 c.embed(r_aux(a, u, eta), {0, 2}) *
                                 c.embed(r_aux(a, u - v, eta), {0, 1});
      rep.add("fused-GYBE", name + " " + at, relative_residual(lhs, rhs), tol);
    }
    rep.add("closure-R", at,
            relative_residual(r_aux(Aux::Tilde, u, eta), r_aux(Aux::TildePrime, u, eta)), tol);
  }

  // R_{n,aux} from its own fusion formula equals R_{aux,n} on the chain.
  {
    const cplx u = draw.complex(-1.5, 1.5);
    for (const bool bar : {true, false}) {
      const Projector pr = projector_unchecked(bar ? ProjectorKind::PlusPair : ProjectorKind::MinusPair);
      const Chain c({kV, kV, kV});
      const cplx h = 0.5 * eta;
      const GradedOperator pp = c.embed(pr.op, {0, 1});
      GradedOperator x = pp * c.embed(r_matrix(bar ? u - h : u + h, eta), {2, 0}) *
                         c.embed(r_matrix(bar ? u + h : u - h, eta), {2, 1}) * pp;
      x = (1.0 / (bar ? u + h : u - h)) * x;
      const GradedOperator w = lift(pr.isometry, GradedOperator::identity(kV));
      const GradedOperator reduced = w.adjoint() * x * w;
      const Aux a = bar ? Aux::Bar : Aux::BarPrime;
      rep.add("flip", std::string(aux_name(a)) + " u=" + str(u),
              relative_residual(reduced, r_aux(a, u, eta)), tol);
    }
    for (const bool first : {true, false}) {
      const Aux inner = first ? Aux::Bar : Aux::BarPrime;
      const Projector pr = projector_unchecked(first ? ProjectorKind::SecondMinus : ProjectorKind::SecondPlus);
      const Chain c({aux_space(inner), kV, kV});
      const GradedOperator pp = c.embed(pr.op, {0, 1});
      GradedOperator x = pp * c.embed(r_matrix(first ? u + eta : u - eta, eta), {2, 1}) *
                         c.embed(r_aux(inner, first ? u - 0.5 * eta : u + 0.5 * eta, eta), {0, 2}) * pp;
      x = (1.0 / u) * x;
      const GradedOperator w = lift(pr.isometry, GradedOperator::identity(kV));
      const Aux a = first ? Aux::Tilde : Aux::TildePrime;
      rep.add("flip", std::string(aux_name(a)) + " u=" + str(u),
              relative_residual(w.adjoint() * x * w, r_aux(a, u, eta)), tol);
    }
  }

  const ModelParameters q = as_open(p);
  GrassmannContext g;
  for (const Aux a : fused) {
    for (const Side s : {Side::Minus, Side::Plus}) {
      const std::string name = std::string(aux_name(a)) + (s == Side::Minus ? " K-" : " K+");
      const AffineOperator k = fused_k(a, s, q, g);
      const cplx u3 = q.eta * cplx(0.213, -0.917);
      try {
        rep.add("fused-K-affine", name, relative_residual(k.at(u3), fuse_k_direct(a, s, u3, q, g)), tol);
      } catch (const DomainError& e) {
        rep.add("fused-K-affine", name, INFINITY, tol, e.what());
      }
    }
  }
  for (int d = 0; d < draws; ++d) {
    const cplx u = draw.complex(-1.5, 1.5);
    const cplx v = draw.complex(-1.5, 1.5);
    const std::string at = "u=" + str(u) + " v=" + str(v);
    for (const Side s : {Side::Minus, Side::Plus})
      rep.add("closure-K", std::string(s == Side::Minus ? "K- " : "K+ ") + at,
              relative_residual(fused_k(Aux::Tilde, s, q, g).at(u),
                                fused_k(Aux::TildePrime, s, q, g).at(u)),
              tol);
    for (const Aux a : fused) {
      const Chain c({g.aux_space, aux_space(a), kV});
      const AffineOperator ra = fused_r(a, eta);
      const AffineOperator km = fused_k(a, Side::Minus, q, g);
      const AffineOperator kp = fused_k(a, Side::Plus, q, g);
      auto rr = [&](cplx x) { return c.embed(ra.at(x), {1, 2}); };
      auto ka = [&](const AffineOperator& k, cplx x) { return c.embed(k.at(x), {0, 1}); };
      auto kb = [&](bool minus, cplx x) {
        return c.embed(minus ? k_minus(x, q, g) : k_plus(x, q, g), {0, 2});
      };
      GradedOperator lhs = rr(u - v) * ka(km, u) * rr(u + v) * kb(true, v);
      GradedOperator rhs = kb(true, v) * rr(u + v) * ka(km, u) * rr(u - v);
      rep.add("fused-RE", std::string(aux_name(a)) + " " + at, relative_residual(lhs, rhs), tol);
      lhs = rr(v - u) * ka(kp, u) * rr(-u - v) * kb(false, v);
      rhs = kb(false, v) * rr(-u - v) * ka(kp, u) * rr(v - u);
      rep.add("fused-DRE", std::string(aux_name(a)) + " " + at, relative_residual(lhs, rhs), tol);
    }
  }
  return rep;
}

VerificationReport verify_projection_identities(const ModelParameters& p, std::uint64_t seed,
                                                double tol) {
  p.require_generic();
  VerificationReport rep;
  rep.name = "projection-identities";
  rep.seed = seed;
  rep.params = p;
  SeededDraw draw(seed);
  const int n = p.n_sites;
  const cplx eta = p.eta;
  const cplx h = 0.5 * eta;

  const Chain cvv(with_front({kV, kV}, n));
  const Chain cbar(with_front({aux_space(Aux::Bar), kV}, n));
  const Chain cbarp(with_front({aux_space(Aux::BarPrime), kV}, n));
  const Chain cbar1(with_front({aux_space(Aux::Bar)}, n));
  const Chain cbarp1(with_front({aux_space(Aux::BarPrime)}, n));
  const Chain ctil1(with_front({aux_space(Aux::Tilde)}, n));
  const Chain ctilp1(with_front({aux_space(Aux::TildePrime)}, n));
  const GradedOperator id_sites = Chain(with_front({}, n)).identity();

  const Projector pp = projector_unchecked(ProjectorKind::PlusPair);
  const Projector pm = projector_unchecked(ProjectorKind::MinusPair);
  const Projector ppm = projector_unchecked(ProjectorKind::SecondMinus);
  const Projector pcp = projector_unchecked(ProjectorKind::SecondPlus);
  const GradedOperator p_plus = cvv.embed(pp.op, {0, 1});
  const GradedOperator p_minus = cvv.embed(pm.op, {0, 1});
  const GradedOperator p_pm = cbar.embed(ppm.op, {0, 1});
  const GradedOperator p_cp = cbarp.embed(pcp.op, {0, 1});

  auto T = [&](const Chain& c, std::size_t pos, Aux a, cplx u) {
    return monodromy_on(c, pos, a, c.size() - static_cast<std::size_t>(n), u, p);
  };
  auto Th = [&](const Chain& c, std::size_t pos, Aux a, cplx u) {
    return reflecting_monodromy_on(c, pos, a, c.size() - static_cast<std::size_t>(n), u, p);
  };
  auto absorb = [&](const GradedOperator& proj, const GradedOperator& a) {
    return relative_residual(proj * a, a);
  };

  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    const cplx x = p.theta[j];
    rep.add("absorption", label("P+ T1 T2", j),
            absorb(p_plus, T(cvv, 0, Aux::Base, x) * T(cvv, 1, Aux::Base, x + eta)), tol);
    rep.add("absorption", label("P- T1 T2", j),
            absorb(p_minus, T(cvv, 0, Aux::Base, x) * T(cvv, 1, Aux::Base, x - eta)), tol);
    rep.add("absorption", label("PP- T2 Tbar", j),
            absorb(p_pm, T(cbar, 1, Aux::Base, x) * T(cbar, 0, Aux::Bar, x - 3.0 * h)), tol);
    rep.add("absorption", label("PC+ T2 Tbar'", j),
            absorb(p_cp, T(cbarp, 1, Aux::Base, x) * T(cbarp, 0, Aux::BarPrime, x + 3.0 * h)),
            tol);
    rep.add("absorption-reflecting", label("P+ Th1 Th2", j),
            absorb(p_plus, Th(cvv, 0, Aux::Base, -x) * Th(cvv, 1, Aux::Base, -x + eta)), tol);
    rep.add("absorption-reflecting", label("P- Th1 Th2", j),
            absorb(p_minus, Th(cvv, 0, Aux::Base, -x) * Th(cvv, 1, Aux::Base, -x - eta)), tol);
    rep.add("absorption-reflecting", label("PP- Th2 Thbar", j),
            absorb(p_pm, Th(cbar, 1, Aux::Base, -x) * Th(cbar, 0, Aux::Bar, -x - 3.0 * h)), tol);
    rep.add("absorption-reflecting", label("PC+ Th2 Thbar'", j),
            absorb(p_cp, Th(cbarp, 1, Aux::Base, -x) * Th(cbarp, 0, Aux::BarPrime, -x + 3.0 * h)),
            tol);
  }

  const cplx u = draw.complex(-1.0, 1.0);
  const std::string at = "u=" + str(u);
  auto prod_shift = [&](cplx s) {
    cplx out = 1.0;
    for (const cplx th : p.theta) out *= u + th + s;
    return out;
  };
  const GradedOperator w_pp = lift(pp.isometry, id_sites);
  const GradedOperator w_pm = lift(pm.isometry, id_sites);
  const GradedOperator w_ppm = lift(ppm.isometry, id_sites);
  const GradedOperator w_pcp = lift(pcp.isometry, id_sites);

  auto fused_line = [&](const char* family, const char* name, const GradedOperator& proj,
                        const GradedOperator& prod, cplx factor, const GradedOperator& w,
                        const GradedOperator& fused_t) {
    rep.add(family, std::string(name) + " " + at,
            relative_residual(proj * prod * proj, factor * (w * fused_t * w.adjoint())), tol);
  };
  fused_line("fused-product", "P+ T1(u) T2(u+eta) P+", p_plus,
             T(cvv, 0, Aux::Base, u) * T(cvv, 1, Aux::Base, u + eta), a_function(p, u + eta),
             w_pp, T(cbar1, 0, Aux::Bar, u + h));
  fused_line("fused-product", "P- T1(u) T2(u-eta) P-", p_minus,
             T(cvv, 0, Aux::Base, u) * T(cvv, 1, Aux::Base, u - eta), a_function(p, u - eta),
             w_pm, T(cbarp1, 0, Aux::BarPrime, u - h));
  fused_line("fused-product", "PP- T2(u+eta) Tbar(u-eta/2) PP-", p_pm,
             T(cbar, 1, Aux::Base, u + eta) * T(cbar, 0, Aux::Bar, u - h), a_function(p, u),
             w_ppm, T(ctil1, 0, Aux::Tilde, u));
  fused_line("fused-product", "PC+ T2(u-eta) Tbar'(u+eta/2) PC+", p_cp,
             T(cbarp, 1, Aux::Base, u - eta) * T(cbarp, 0, Aux::BarPrime, u + h),
             a_function(p, u), w_pcp, T(ctilp1, 0, Aux::TildePrime, u));
  fused_line("fused-product-reflecting", "P+ Th1(u) Th2(u+eta) P+", p_plus,
             Th(cvv, 0, Aux::Base, u) * Th(cvv, 1, Aux::Base, u + eta), prod_shift(eta), w_pp,
             Th(cbar1, 0, Aux::Bar, u + h));
  fused_line("fused-product-reflecting", "P- Th1(u) Th2(u-eta) P-", p_minus,
             Th(cvv, 0, Aux::Base, u) * Th(cvv, 1, Aux::Base, u - eta), prod_shift(-eta), w_pm,
             Th(cbarp1, 0, Aux::BarPrime, u - h));
  fused_line("fused-product-reflecting", "PP- Th2(u+eta) Thbar(u-eta/2) PP-", p_pm,
             Th(cbar, 1, Aux::Base, u + eta) * Th(cbar, 0, Aux::Bar, u - h), prod_shift(0.0),
             w_ppm, Th(ctil1, 0, Aux::Tilde, u));
  fused_line("fused-product-reflecting", "PC+ Th2(u-eta) Thbar'(u+eta/2) PC+", p_cp,
             Th(cbarp, 1, Aux::Base, u - eta) * Th(cbarp, 0, Aux::BarPrime, u + h),
             prod_shift(0.0), w_pcp, Th(ctilp1, 0, Aux::TildePrime, u));

  // Absorption at generic u from RTT at the degenerate point.
  auto fa = [&](const char* name, const GradedOperator& proj, const GradedOperator& prod) {
    rep.add("absorption-generic", std::string(name) + " " + at, relative_residual(prod * proj, proj * prod * proj),
            tol);
  };
  fa("T1(u) T2(u+eta) P+", p_plus, T(cvv, 0, Aux::Base, u) * T(cvv, 1, Aux::Base, u + eta));
  fa("T1(u) T2(u-eta) P-", p_minus, T(cvv, 0, Aux::Base, u) * T(cvv, 1, Aux::Base, u - eta));
  fa("Tbar(u) T2(u-3eta/2) PP-", p_pm,
     T(cbar, 0, Aux::Bar, u) * T(cbar, 1, Aux::Base, u - 3.0 * h));
  fa("Tbar'(u) T2(u+3eta/2) PC+", p_cp,
     T(cbarp, 0, Aux::BarPrime, u) * T(cbarp, 1, Aux::Base, u + 3.0 * h));
  fa("Th1(u) Th2(u+eta) P+", p_plus, Th(cvv, 0, Aux::Base, u) * Th(cvv, 1, Aux::Base, u + eta));
  fa("Th1(u) Th2(u-eta) P-", p_minus, Th(cvv, 0, Aux::Base, u) * Th(cvv, 1, Aux::Base, u - eta));
  fa("Thbar(u) Th2(u-3eta/2) PP-", p_pm,
     Th(cbar, 0, Aux::Bar, u) * Th(cbar, 1, Aux::Base, u - 3.0 * h));
  fa("Thbar'(u) Th2(u+3eta/2) PC+", p_cp,
     Th(cbarp, 0, Aux::BarPrime, u) * Th(cbarp, 1, Aux::Base, u + 3.0 * h));
  return rep;
}

VerificationReport verify_operator_identities(const ModelParameters& p, double tol) {
  p.require_generic();
  VerificationReport rep;
  rep.params = p;
  const TransferEngine te(p);
  const cplx eta = p.eta;
  const cplx h = 0.5 * eta;
  auto t = [&](Aux a, cplx u) { return te.transfer(a, u); };

  if (!p.open()) {
    rep.name = "operator-identities-periodic";
    for (std::size_t j = 0; j < p.theta.size(); ++j) {
      const cplx x = p.theta[j];
      const GradedOperator t0 = t(Aux::Base, x);
      rep.add("product-identity", label("t(x) t(x+eta) = a(x+eta) t1(x+eta/2)", j),
              relative_residual(t0 * t(Aux::Base, x + eta),
                                a_function(p, x + eta) * t(Aux::Bar, x + h)),
              tol);
      rep.add("product-identity", label("t(x-eta) t(x) = a(x-eta) t2(x-eta/2)", j),
              relative_residual(t(Aux::Base, x - eta) * t0,
                                a_function(p, x - eta) * t(Aux::BarPrime, x - h)),
              tol);
      rep.add("product-identity", label("t1(x-3eta/2) t(x) = a(x-eta) tt(x-eta)", j),
              relative_residual(t(Aux::Bar, x - 3.0 * h) * t0,
                                a_function(p, x - eta) * t(Aux::Tilde, x - eta)),
              tol);
      rep.add("product-identity", label("t2(x+3eta/2) t(x) = a(x+eta) tt(x+eta)", j),
              relative_residual(t(Aux::BarPrime, x + 3.0 * h) * t0,
                                a_function(p, x + eta) * t(Aux::Tilde, x + eta)),
              tol);
    }
    return rep;
  }

  rep.name = "operator-identities-open";
  require_open_theta_clear(p);
  for (std::size_t j = 0; j < p.theta.size(); ++j) {
    for (const int sign : {1, -1}) {
      const cplx x = static_cast<double>(sign) * p.theta[j];
      const std::string s = sign > 0 ? "+" : "-";
      const GradedOperator t0 = t(Aux::Base, x);
      cplx f = -0.25 * x * (x + eta) / ((x + h) * (x + h)) * alpha_function(p, x);
      rep.add("product-identity", label("line1 " + s, j),
              relative_residual(t0 * t(Aux::Base, x + eta), f * t(Aux::Bar, x + h)), tol);
      f = -0.25 * x * (x - eta) / ((x - h) * (x - h)) * alpha_function(p, -x);
      rep.add("product-identity", label("line2 " + s, j),
              relative_residual(t(Aux::Base, x - eta) * t0, f * t(Aux::BarPrime, x - h)), tol);
      f = -x * (x - 3.0 * h) / ((x - h) * (x - eta)) * alpha_function(p, -x);
      rep.add("product-identity", label("line3 " + s, j),
              relative_residual(t(Aux::Bar, x - 3.0 * h) * t0, f * t(Aux::Tilde, x - eta)), tol);
      f = -x * (x + 3.0 * h) / ((x + h) * (x + eta)) * alpha_function(p, x);
      rep.add("product-identity", label("line4 " + s, j),
              relative_residual(t(Aux::BarPrime, x + 3.0 * h) * t0, f * t(Aux::Tilde, x + eta)),
              tol);
    }
  }
  return rep;
}

VerificationReport verify_transfer_properties(const ModelParameters& p, std::uint64_t seed,
                                              double tol) {
  VerificationReport rep;
  rep.name = "transfer-properties";
  rep.seed = seed;
  rep.params = p;
  SeededDraw draw(seed);
  const TransferEngine te(p);
  const int n = p.n_sites;
  const cplx eta = p.eta;
  const Aux levels[] = {Aux::Base, Aux::Bar, Aux::BarPrime, Aux::Tilde};

  const cplx u = draw.complex(-1.0, 1.0);
  const cplx v = draw.complex(-1.0, 1.0);
  const std::string at = "u=" + str(u) + " v=" + str(v);
  for (const Aux a : levels)
    for (const Aux b : levels)
      rep.add("commutativity",
              "[" + std::string(aux_name(a)) + "(u), " + std::string(aux_name(b)) + "(v)] " + at,
              commutator_residual(te.transfer(a, u), te.transfer(b, v)), tol);
  rep.add("tilde-equality", "u=" + str(u),
          relative_residual(te.transfer(Aux::Tilde, u), te.transfer(Aux::TildePrime, u)), tol);

  for (const Aux a : {Aux::Base, Aux::Bar, Aux::BarPrime, Aux::Tilde, Aux::TildePrime}) {
    const Chain c(with_front({aux_space(a), kV}, n));
    const GradedOperator r = c.embed(fused_r(a, eta).at(u - v), {0, 1});
    const GradedOperator ta = monodromy_on(c, 0, a, 2, u, p);
    const GradedOperator tb = monodromy_on(c, 1, Aux::Base, 2, v, p);
    rep.add("RTT", std::string(aux_name(a)) + " " + at, relative_residual(r * ta * tb, tb * ta * r),
            tol);
    const GradedOperator ha = reflecting_monodromy_on(c, 0, a, 2, u, p);
    const GradedOperator hb = reflecting_monodromy_on(c, 1, Aux::Base, 2, v, p);
    rep.add("RTT-reflecting", std::string(aux_name(a)) + " " + at,
            relative_residual(r * ha * hb, hb * ha * r), tol);
  }

  const double radius = 1.0 + std::abs(eta) + [&] {
    double m = 0.0;
    for (const cplx th : p.theta) m = std::max(m, std::abs(th));
    return m;
  }();
  if (!p.open()) {
    for (const Aux a : levels) {
      PolySamples s;
      s.degree_bound = n;
      s.nodes = circle_nodes(static_cast<std::size_t>(n) + 1, radius);
      for (const cplx x : s.nodes) s.operator_values.push_back(te.transfer(a, x));
      const auto coeffs = interpolate_operator(s);
      double scale = 0.0;
      for (const auto& c : coeffs) scale = std::max(scale, c.matrix().max_abs() * std::pow(radius, 0.0));
      rep.add("degree", std::string(aux_name(a)) + " top coefficient u^N vanishes",
              coeffs.back().matrix().max_abs() / std::max(scale, 1e-300), tol);
    }
    return rep;
  }

  const cplx k = kappa(p);
  const std::pair<Aux, double> lead[] = {
      {Aux::Base, 2.0}, {Aux::Bar, -8.0}, {Aux::BarPrime, 8.0}, {Aux::Tilde, -8.0}};
  const GradedOperator id = te.physical_chain().identity();
  for (const auto& [a, factor] : lead) {
    PolySamples s;
    s.degree_bound = 2 * n + 2;
    s.nodes = circle_nodes(static_cast<std::size_t>(2 * n + 3), radius);
    for (const cplx x : s.nodes) s.operator_values.push_back(te.transfer(a, x));
    const auto coeffs = interpolate_operator(s);
    double scale = 0.0;
    for (std::size_t d = 0; d < coeffs.size(); ++d)
      scale = std::max(scale, coeffs[d].matrix().max_abs());
    const GradedOperator expected = (factor * k) * id;
    rep.add("asymptotics", std::string(aux_name(a)) + " coefficient u^(2N+2) vanishes",
            coeffs.back().matrix().max_abs() / std::max(scale, 1e-300), tol);
    rep.add("asymptotics", std::string(aux_name(a)) + " coefficient u^(2N+1) = " +
                      std::to_string(static_cast<int>(factor)) + " kappa I",
            relative_residual(coeffs[coeffs.size() - 2], expected), tol);
  }

  const double scale = te.transfer(Aux::Base, eta * cplx(0.61, 0.23)).matrix().frobenius_norm();
  const cplx h = 0.5 * eta;
  for (const Aux a : levels)
    rep.add("special-point", std::string(aux_name(a)) + "(0) = 0", zero_residual(te.transfer(a, 0.0), scale),
            tol);
  rep.add("special-point", "t1(-eta/2) = -2 t(-eta)",
          relative_residual(te.transfer(Aux::Bar, -h), -2.0 * te.transfer(Aux::Base, -eta)), tol);
  rep.add("special-point", "t1(eta/2) = -2 t(eta)",
          relative_residual(te.transfer(Aux::Bar, h), -2.0 * te.transfer(Aux::Base, eta)), tol);
  rep.add("special-point", "t2(-eta/2) = 2 t(-eta)",
          relative_residual(te.transfer(Aux::BarPrime, -h), 2.0 * te.transfer(Aux::Base, -eta)),
          tol);
  rep.add("special-point", "t2(eta/2) = 2 t(eta)",
          relative_residual(te.transfer(Aux::BarPrime, h), 2.0 * te.transfer(Aux::Base, eta)), tol);
  rep.add("special-point", "tt(eta) = 2/3 t1(3eta/2)",
          relative_residual(te.transfer(Aux::Tilde, eta),
                            (2.0 / 3.0) * te.transfer(Aux::Bar, 3.0 * h)),
          tol);

  const TransferEngine body(p.body());
  for (const Aux a : levels) {
    const GradedOperator b1 = grassmann_body(te.transfer(a, u), 1e-11);
    const GradedOperator b0 = grassmann_body(body.transfer(a, u), 1e-11);
    rep.add("grassmann-body", std::string(aux_name(a)) + " u=" + str(u),
            max_abs_diff(b1.matrix(), b0.matrix()) / std::max(1.0, b0.matrix().max_abs()), 1e-12);
  }
  return rep;
}

VerificationReport verify_fusion_products(const ModelParameters& p, std::uint64_t seed,
                                          double tol) {
  if (!p.open()) throw PreconditionError("fusion products are defined for the open chain");
  VerificationReport rep;
  rep.name = "fusion-products";
  rep.seed = seed;
  rep.params = p;
  SeededDraw draw(seed);
  const int n = p.n_sites;
  const cplx eta = p.eta;
  const cplx h = 0.5 * eta;
  const TransferEngine te(p);
  const GrassmannContext& g = te.grassmann();
  const cplx u = draw.complex(-1.0, 1.0);

  auto product_side = [&](Aux a, cplx ua, cplx ub, cplx r_plus_arg, cplx r_minus_arg) {
    // K_a^+(ua) R_{2,a}(r+) K_2^+(ub) T_2(ub) T_a(ua) K_2^-(ub) R_{a,2}(r-) K_a^-(ua)
    //   Th_2(ub) Th_a(ua), with a at position 1 and the unfused space at 2.
    const Chain c(with_front({g.aux_space, aux_space(a), kV}, n));
    const AffineOperator ra = fused_r(a, eta);
    const GradedOperator kap = c.embed(fused_k(a, Side::Plus, p, g).at(ua), {0, 1});
    const GradedOperator kam = c.embed(fused_k(a, Side::Minus, p, g).at(ua), {0, 1});
    const GradedOperator kbp = c.embed(k_plus(ub, p, g), {0, 2});
    const GradedOperator kbm = c.embed(k_minus(ub, p, g), {0, 2});
    const GradedOperator x =
        kap * c.embed(ra.at(r_plus_arg), {1, 2}) * kbp * monodromy_on(c, 2, Aux::Base, 3, ub, p) *
        monodromy_on(c, 1, a, 3, ua, p) * kbm * c.embed(ra.at(r_minus_arg), {1, 2}) * kam *
        reflecting_monodromy_on(c, 2, Aux::Base, 3, ub, p) *
        reflecting_monodromy_on(c, 1, a, 3, ua, p);
    return c.partial_super_trace(x, {1, 2});
  };

  {
    // Two-transfer product written with the base space at position 1 and the second copy
    // at 2: K_2^+ R_{1,2}(-2u-eta) K_1^+ T_1 T_2 K_1^- R_{2,1}(2u+eta) K_2^- Th_1 Th_2.
    const Chain c(with_front({g.aux_space, kV, kV}, n));
    auto r = [&](cplx x) { return c.embed(r_matrix(x, eta), {1, 2}); };
    const GradedOperator x =
        c.embed(k_plus(u + eta, p, g), {0, 2}) * r(-2.0 * u - eta) *
        c.embed(k_plus(u, p, g), {0, 1}) * monodromy_on(c, 1, Aux::Base, 3, u, p) *
        monodromy_on(c, 2, Aux::Base, 3, u + eta, p) * c.embed(k_minus(u, p, g), {0, 1}) *
        r(2.0 * u + eta) * c.embed(k_minus(u + eta, p, g), {0, 2}) *
        reflecting_monodromy_on(c, 1, Aux::Base, 3, u, p) *
        reflecting_monodromy_on(c, 2, Aux::Base, 3, u + eta, p);
    const cplx rho2 = -(2.0 * u + eta) * (2.0 * u + eta);
    const GradedOperator rhs = (1.0 / rho2) * c.partial_super_trace(x, {1, 2});
    rep.add("double-product", "u=" + str(u),
            relative_residual(te.transfer(Aux::Base, u) * te.transfer(Aux::Base, u + eta), rhs), tol);
  }

  auto fitted = [&](const char* family, const GradedOperator& lhs, const GradedOperator& s) {
    cplx num{};
    double den = 0.0;
    const auto a = lhs.matrix().data();
    const auto b = s.matrix().data();
    for (std::size_t i = 0; i < a.size(); ++i) {
      num += std::conj(b[i]) * a[i];
      den += std::norm(b[i]);
    }
    const cplx c = num / std::max(den, 1e-300);
    rep.add(family, "u=" + str(u) + " up to a fitted scalar",
            relative_residual(lhs, c * s), tol, "fitted 1/rho = " + str(c));
  };
  fitted("double-product-bar", te.transfer(Aux::Bar, u - h) * te.transfer(Aux::Base, u + eta),
         product_side(Aux::Bar, u - h, u + eta, -2.0 * u - h, 2.0 * u + h));
  fitted("double-product-bar'", te.transfer(Aux::BarPrime, u + h) * te.transfer(Aux::Base, u - eta),
         product_side(Aux::BarPrime, u + h, u - eta, -2.0 * u + h, 2.0 * u - h));
  return rep;
}

VerificationReport verify_hamiltonian(const ModelParameters& p, double tol) {
  for (const cplx th : p.theta)
    if (th != cplx{}) throw PreconditionError("Hamiltonian check requires theta = 0");
  VerificationReport rep;
  rep.name = "hamiltonian";
  rep.params = p;
  const TransferEngine te(p);
  const cplx eta = p.eta;
  const GradedOperator h_direct = hamiltonian(p, te.grassmann());
  if (!p.open()) {
    const cplx step = 1e-5 * eta;
    const GradedOperator t0 = te.transfer(Aux::Base, 0.0);
    const GradedOperator d1 =
        (1.0 / (2.0 * step)) * (te.transfer(Aux::Base, step) - te.transfer(Aux::Base, -step));
    // X = eta t'(0) t(0)^{-1}  <=>  t(0)^T X^T = eta t'(0)^T
    const CMatrix xt = solve(t0.matrix().transpose(), (eta * d1).matrix().transpose());
    const GradedOperator h_fd(h_direct.domain(), xt.transpose());
    rep.add("hamiltonian", "periodic eta t'(0) t(0)^-1", relative_residual(h_fd, h_direct), tol);
    return rep;
  }
  const cplx step = 1e-2 * eta;
  auto t = [&](double k) { return te.transfer(Aux::Base, k * step); };
  const GradedOperator d2 = (1.0 / (12.0 * step * step)) *
                            (-1.0 * t(2) + 16.0 * t(1) - 30.0 * t(0) + 16.0 * t(-1) - 1.0 * t(-2));
  const cplx norm = 8.0 * std::pow(eta, static_cast<double>(p.n_sites)) * (1.0 + p.a_plus * eta);
  rep.add("hamiltonian", "open t''(0) / (8 eta^N (1 + a+ eta))",
          relative_residual((1.0 / norm) * d2, h_direct), tol);
  return rep;
}

}  // namespace gl11
