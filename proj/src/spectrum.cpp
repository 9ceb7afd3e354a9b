#include "gl11/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gl11/aberth.hpp"
#include "gl11/errors.hpp"
#include "gl11/transfer.hpp"

namespace gl11 {
namespace {

constexpr double kPoleTolerance = 1e-10;
constexpr double kDedupTolerance = 1e-8;
constexpr double kPairTolerance = 1e-7;
constexpr double kMembershipTolerance = 1e-8;

std::string fmt(cplx z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag())
     << "i";
  return os.str();
}

/// Ascending by real part, then imaginary part; parts closer than 1e-9 tie.
bool canonical_less(cplx a, cplx b) {
  if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
  if (std::abs(a.imag() - b.imag()) > 1e-9) return a.imag() < b.imag();
  return false;
}

bool all_zero(const std::vector<cplx>& v) {
  return std::all_of(v.begin(), v.end(), [](cplx z) { return z == cplx{}; });
}

Coefficients sub(const Coefficients& a, const Coefficients& b) {
  Coefficients out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

cplx q_periodic(const BetheRootSet& r, cplx u) {
  cplx q = 1.0;
  for (const cplx mu : r.finite_roots) q *= u - mu;
  return q;
}

cplx q_open(const BetheRootSet& r, cplx eta, cplx u) {
  cplx q = 1.0;
  for (const cplx l : r.finite_roots) q *= (u - l) * (u + l + eta);
  return q;
}

void guard_pole(cplx denominator_arg, const BetheRootSet& r, const ModelParameters& p) {
  for (const cplx l : r.finite_roots) {
    const bool hit = std::abs(denominator_arg - l) < kPoleTolerance ||
                     (r.kind == Boundary::Open &&
                      std::abs(denominator_arg + l + p.eta) < kPoleTolerance);
    if (hit)
      throw DomainError("tq_lambda: evaluation point within 1e-10 of a Q zero at " + fmt(l) +
                        "; shift the node");
  }
}

double det_residual(const CMatrix& a, cplx lambda) {
  CMatrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
  const double scale = a.frobenius_norm() + std::abs(lambda);
  const double logdet = std::log(std::abs(lu_determinant(m)));
  return std::exp(logdet - static_cast<double>(a.rows()) * std::log(std::max(scale, 1e-300)));
}

std::vector<cplx> lambdas(const Spectrum& s, const ModelParameters& p, Aux level, cplx u) {
  std::vector<cplx> out;
  out.reserve(s.lines.size());
  for (const auto& line : s.lines) out.push_back(tq_lambda(line.roots, p, level, u));
  return out;
}

/// A spectral point where no Q-ratio of any state is near a pole.
cplx generic_point(SeededDraw& draw, const Spectrum& s, const ModelParameters& p) {
  for (;;) {
    const cplx u = std::abs(p.eta) * draw.complex(-1.0, 1.0);
    try {
      for (const Aux a : {Aux::Base, Aux::Bar, Aux::BarPrime, Aux::Tilde}) lambdas(s, p, a, u);
      bool clear = true;
      for (const auto& line : s.lines)
        for (const cplx l : line.roots.finite_roots)
          for (const double k : {-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0})
            clear = clear && std::abs(u - l + k * p.eta) > 1e-2 &&
                    std::abs(u + l + p.eta + k * p.eta) > 1e-2;
      if (clear) return u;
    } catch (const DomainError&) {
    }
  }
}

}  // namespace

std::string BetheRootSet::key() const {
  std::string out = "{";
  for (std::size_t i = 0; i < finite_roots.size(); ++i) {
    if (i > 0) out += ", ";
    out += fmt(finite_roots[i]);
  }
  if (has_infinite_root) out += finite_roots.empty() ? "inf" : ", inf";
  return out + "}";
}

Coefficients periodic_bae_polynomial(const ModelParameters& p) {
  p.validate();
  std::vector<cplx> shifted(p.theta);
  for (cplx& s : shifted) s += p.eta;
  Coefficients d = sub(poly_from_roots(shifted), poly_from_roots(p.theta));
  d.pop_back();  // both products are monic
  return d;
}

Coefficients open_bae_polynomial(const ModelParameters& p) {
  p.validate();
  const cplx e = p.eta;
  Coefficients lhs = poly_mul(Coefficients{1.0, p.a_minus}, Coefficients{1.0 + p.a_plus * e, p.a_plus});
  Coefficients rhs =
      poly_mul(Coefficients{1.0 - p.a_minus * e, -p.a_minus}, Coefficients{1.0, -p.a_plus});
  for (const cplx th : p.theta) {
    lhs = poly_mul(lhs, poly_from_roots(std::vector<cplx>{-th - e, th - e}));
    rhs = poly_mul(rhs, poly_from_roots(std::vector<cplx>{th, -th}));
  }
  Coefficients d = sub(lhs, rhs);
  d.pop_back();  // a- a+ u^(2N+2) cancels
  return d;
}

std::vector<cplx> solve_bae_periodic(const ModelParameters& p) {
  const Coefficients d = periodic_bae_polynomial(p);
  std::vector<cplx> roots = dedup_roots(aberth_roots(d).roots, kDedupTolerance);
  std::sort(roots.begin(), roots.end(), canonical_less);
  return roots;
}

std::vector<cplx> solve_bae_open(const ModelParameters& p) {
  if (!p.open()) throw PreconditionError("solve_bae_open: boundary must be open");
  const cplx e = p.eta;
  std::vector<cplx> roots = dedup_roots(aberth_roots(open_bae_polynomial(p)).roots, kDedupTolerance);

  const cplx trivial = -0.5 * e;
  auto it = std::min_element(roots.begin(), roots.end(), [&](cplx a, cplx b) {
    return std::abs(a - trivial) < std::abs(b - trivial);
  });
  if (it == roots.end() || std::abs(*it - trivial) > kPairTolerance * (1.0 + std::abs(e)))
    throw StructuralError("solve_bae_open: trivial root -eta/2 not found");
  roots.erase(it);

  std::vector<cplx> reps;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const cplx target = -roots[i] - e;
    std::size_t best = roots.size();
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (!used[j] && (best == roots.size() ||
                       std::abs(roots[j] - target) < std::abs(roots[best] - target)))
        best = j;
    if (best == roots.size() ||
        std::abs(roots[best] - target) > kPairTolerance * (1.0 + std::abs(roots[i])))
      throw StructuralError("solve_bae_open: root " + fmt(roots[i]) + " has no partner");
    used[best] = true;
    const cplx a = roots[i];
    const cplx b = roots[best];
    // Average the pair onto the exact involution before picking.
    const cplx z = 0.5 * ((a + 0.5 * e) - (b + 0.5 * e));
    const bool a_side = z.imag() < -1e-12 || (std::abs(z.imag()) <= 1e-12 && z.real() < 0.0);
    reps.push_back(a_side ? z - 0.5 * e : -z - 0.5 * e);
  }
  std::sort(reps.begin(), reps.end(), canonical_less);
  return reps;
}

std::vector<BetheRootSet> enumerate_states(const ModelParameters& p,
                                           const std::vector<cplx>& candidates) {
  const std::size_t n = candidates.size();
  if (n >= 20) throw PreconditionError("enumerate_states: too many candidates");
  struct Entry {
    BetheRootSet set;
    std::vector<std::size_t> idx;
  };
  std::vector<Entry> all;
  const int flags = p.open() ? 1 : 2;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    for (int inf = 0; inf < flags; ++inf) {
      Entry e;
      e.set.kind = p.boundary;
      e.set.has_infinite_root = inf == 1;
      for (std::size_t k = 0; k < n; ++k)
        if ((mask >> k) & 1U) {
          e.set.finite_roots.push_back(candidates[k]);
          e.idx.push_back(k);
        }
      all.push_back(std::move(e));
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) {
    if (a.set.m() != b.set.m()) return a.set.m() < b.set.m();
    if (a.idx.size() != b.idx.size()) return a.idx.size() > b.idx.size();
    if (a.idx != b.idx) return a.idx < b.idx;
    return !a.set.has_infinite_root && b.set.has_infinite_root;
  });
  std::vector<BetheRootSet> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(std::move(e.set));
  return out;
}

cplx tq_lambda(const BetheRootSet& r, const ModelParameters& p, Aux level, cplx u) {
  const cplx e = p.eta;
  const cplx h = 0.5 * e;
  if (r.kind == Boundary::Periodic) {
    auto a = [&](cplx x) { return a_function(p, x); };
    auto ratio = [&](cplx num, cplx den) {
      guard_pole(den, r, p);
      return q_periodic(r, num) / q_periodic(r, den);
    };
    switch (level) {
      case Aux::Base: return (a(u) - a(u - e)) * ratio(u + e, u);
      case Aux::Bar: return (a(u - h) - a(u - 3.0 * h)) * ratio(u + 3.0 * h, u - h);
      case Aux::BarPrime: return (a(u - 3.0 * h) - a(u - h)) * ratio(u + 3.0 * h, u - h);
      case Aux::Tilde:
      case Aux::TildePrime: return (a(u - 2.0 * e) - a(u - e)) * ratio(u + 2.0 * e, u - e);
    }
    throw PreconditionError("tq_lambda: unknown level");
  }
  auto al = [&](cplx x) { return alpha_function(p, x); };
  auto ratio = [&](cplx num, cplx den) {
    guard_pole(den, r, p);
    return q_open(r, e, num) / q_open(r, e, den);
  };
  auto prefactor = [&](cplx num, cplx den) {
    if (std::abs(den) < kPoleTolerance) throw DomainError("tq_lambda: prefactor pole");
    return num / den;
  };
  switch (level) {
    case Aux::Base:
      return prefactor(2.0 * u, 2.0 * u + e) * (al(u) - al(-u - e)) * ratio(u - e, u);
    case Aux::Bar:
    case Aux::BarPrime: {
      const double sign = level == Aux::Bar ? -1.0 : 1.0;
      return prefactor(sign * 4.0 * u, u + e) * (al(u + h) - al(-u - 3.0 * h)) *
             ratio(u - 3.0 * h, u + h);
    }
    case Aux::Tilde:
    case Aux::TildePrime:
      return prefactor(-8.0 * u, 2.0 * u + 3.0 * e) * (al(u + e) - al(-u - 2.0 * e)) *
             ratio(u - 2.0 * e, u + e);
  }
  throw PreconditionError("tq_lambda: unknown level");
}

double bae_residual(const BetheRootSet& r, const ModelParameters& p) {
  double worst = 0.0;
  for (const cplx x : r.finite_roots) {
    cplx ratio;
    if (r.kind == Boundary::Periodic) {
      ratio = 1.0;
      for (const cplx th : p.theta) ratio *= (x - th - p.eta) / (x - th);
    } else {
      ratio = alpha_function(p, x) / alpha_function(p, -x - p.eta);
    }
    worst = std::max(worst, std::abs(ratio - 1.0));
  }
  return worst;
}

cplx energy(const BetheRootSet& r, const ModelParameters& p) {
  if (!all_zero(p.theta)) throw PreconditionError("energy: formula holds at theta = 0");
  const cplx e = p.eta;
  const double n = static_cast<double>(p.n_sites);
  cplx sum{};
  for (const cplx x : r.finite_roots) {
    const cplx other = r.kind == Boundary::Periodic ? e - x : x + e;
    if (std::abs(x) < 1e-12 || std::abs(other) < 1e-12)
      throw DomainError("energy: root " + fmt(x) + " on a pole");
    sum += r.kind == Boundary::Periodic ? e * e / (other * x) : 1.0 / (x * other);
  }
  if (r.kind == Boundary::Periodic) return sum - n;
  return std::pow(e, n) * sum +
         0.5 * std::pow(e, n - 2.0) * (2.0 * n - 1.0 + p.a_minus * e - 1.0 / (1.0 + p.a_plus * e));
}

Spectrum compute_spectrum(const ModelParameters& p) {
  p.validate();
  Spectrum s;
  s.params = p;
  s.candidates = p.open() ? solve_bae_open(p) : solve_bae_periodic(p);
  const bool homogeneous = all_zero(p.theta);
  for (auto& set : enumerate_states(p, s.candidates)) {
    SpectralLine line;
    line.bae_residual = bae_residual(set, p);
    if (homogeneous) line.energy = energy(set, p);
    line.roots = std::move(set);
    s.lines.push_back(std::move(line));
  }
  return s;
}

Coefficients characteristic_polynomial(const CMatrix& a) {
  const std::size_t n = a.rows();
  const double r = 1.0 + a.frobenius_norm();
  // Interpolate q(y) = det(r y I - a) on the unit circle, then unscale.
  PolySamples s;
  s.degree_bound = static_cast<int>(n);
  s.nodes = circle_nodes(n + 1, 1.0);
  for (const cplx y : s.nodes) {
    CMatrix m = (-1.0) * a;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += r * y;
    s.values.push_back(lu_determinant(m));
  }
  Coefficients c = interpolate(s);
  double scale = 1.0;
  for (cplx& z : c) {
    z /= scale;
    scale *= r;
  }
  return c;
}

double polynomial_distance(const Coefficients& c, const Coefficients& d, double r) {
  const std::size_t n = std::max(c.size(), d.size());
  double num = 0.0;
  double den = 0.0;
  double w = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx ck = k < c.size() ? c[k] : 0.0;
    const cplx dk = k < d.size() ? d[k] : 0.0;
    num = std::max(num, std::abs(ck - dk) * w);
    den = std::max(den, std::abs(dk) * w);
    w *= r;
  }
  return num / std::max(den, 1e-300);
}

VerificationReport certify_spectrum(const ModelParameters& p, const Spectrum& s,
                                    std::uint64_t seed, double tol) {
  VerificationReport rep;
  rep.name = "certify-spectrum";
  rep.seed = seed;
  rep.params = p;
  SeededDraw draw(seed);
  const TransferEngine te(p);
  const std::size_t dim = std::size_t{1} << p.n_sites;

  rep.add("state-count", std::to_string(s.lines.size()) + " states for dimension " +
                             std::to_string(dim),
          s.lines.size() == dim ? 0.0 : INFINITY, 0.0);
  for (const auto& line : s.lines)
    rep.add("bae", line.roots.key(), line.bae_residual, 1e-9);

  for (int k = 0; k < 3; ++k) {
    const cplx u = generic_point(draw, s, p);
    const std::string at = "u*=" + fmt(u);
    const CMatrix tb = te.transfer_body(Aux::Base, u).matrix();
    const std::vector<cplx> lam = lambdas(s, p, Aux::Base, u);
    for (std::size_t i = 0; i < lam.size(); ++i)
      rep.add("membership", s.lines[i].roots.key() + " " + at, det_residual(tb, lam[i]),
              kMembershipTolerance);
    const double r = 1.0 + tb.frobenius_norm();
    rep.add("completeness", "charpoly t_body " + at,
            polynomial_distance(characteristic_polynomial(tb), poly_from_roots(lam), r), tol);
    // The fused levels share the eigenbasis; their T-Q values must give the
    // characteristic polynomials of the fused transfer matrices as well.
    for (const Aux a : {Aux::Bar, Aux::BarPrime, Aux::Tilde}) {
      const CMatrix fb = te.transfer_body(a, u).matrix();
      rep.add("completeness-fused",
              "charpoly " + std::string(aux_name(a)) + "_body " + at,
              polynomial_distance(characteristic_polynomial(fb), poly_from_roots(lambdas(s, p, a, u)),
                                  1.0 + fb.frobenius_norm()),
              tol);
    }
  }

  const bool homogeneous = all_zero(p.theta);
  if (!homogeneous) return rep;
  if (!p.open() && p.n_sites < 2) {
    rep.add("energy", "skipped: periodic Hamiltonian needs N >= 2", 0.0, tol);
    return rep;
  }
  GradedOperator h = hamiltonian(p, te.grassmann());
  if (p.open()) h = grassmann_body(h, 1e-12);
  const CMatrix& hm = h.matrix();
  std::vector<cplx> energies;
  for (const auto& line : s.lines) {
    if (!line.energy) continue;
    energies.push_back(*line.energy);
    rep.add("energy-membership", line.roots.key() + " E=" + fmt(*line.energy),
            det_residual(hm, *line.energy), tol);
  }
  rep.add("energy-completeness", "charpoly H",
          polynomial_distance(characteristic_polynomial(hm), poly_from_roots(energies),
                              1.0 + hm.frobenius_norm()),
          tol);
  if (p.hermitian()) {
    double worst = 0.0;
    for (const cplx en : energies) worst = std::max(worst, std::abs(en.imag()));
    rep.add("energy-reality", "max |Im E|", worst, 1e-8);
  }
  return rep;
}

VerificationReport check_spectral_relations(const ModelParameters& p, const Spectrum& s,
                                            double tol) {
  VerificationReport rep;
  rep.name = "spectral-relations";
  rep.params = p;
  const cplx e = p.eta;
  const cplx h = 0.5 * e;
  const int n = p.n_sites;
  auto rel = [](cplx a, cplx b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
  };
  // Scale for the zero checks: |Lambda| at a generic point.
  auto scale_of = [&](const BetheRootSet& r, Aux a) {
    return std::max(std::abs(tq_lambda(r, p, a, e * cplx(0.613, 0.271))), 1e-300);
  };
  bool generic = true;
  try {
    p.require_generic();
  } catch (const PreconditionError&) {
    generic = false;
  }

  for (const auto& line : s.lines) {
    const BetheRootSet& r = line.roots;
    const std::string key = r.key();
    auto L = [&](Aux a, cplx u) { return tq_lambda(r, p, a, u); };

    // Degree / asymptotics from interpolation on a circle outside all roots.
    double radius = 2.0 + 3.0 * std::abs(e);
    for (const cplx th : p.theta) radius = std::max(radius, 2.0 + 2.0 * std::abs(th) + 3.0 * std::abs(e));
    for (const cplx x : r.finite_roots) radius = std::max(radius, 2.0 + 2.0 * std::abs(x) + 3.0 * std::abs(e));
    const Aux levels[] = {Aux::Base, Aux::Bar, Aux::BarPrime, Aux::Tilde};
    const double lead[] = {2.0, -8.0, 8.0, -8.0};
    for (std::size_t li = 0; li < 4; ++li) {
      const Aux a = levels[li];
      PolySamples ps;
      if (p.open()) {
        ps.degree_bound = 2 * n + 2;
        ps.nodes = circle_nodes(static_cast<std::size_t>(2 * n + 3), radius);
      } else {
        ps.degree_bound = n;
        ps.nodes = circle_nodes(static_cast<std::size_t>(n + 1), radius);
      }
      for (const cplx x : ps.nodes) ps.values.push_back(L(a, x));
      const Coefficients c = interpolate(ps);
      double mx = 0.0;
      double w = 1.0;
      for (const cplx z : c) {
        mx = std::max(mx, std::abs(z) * w);
        w *= radius;
      }
      const double top = std::abs(c.back()) * std::pow(radius, ps.degree_bound) / std::max(mx, 1e-300);
      const std::string name(aux_name(a));
      if (p.open()) {
        rep.add("asymptotics", key + " " + name + " u^(2N+2) vanishes", top, tol);
        rep.add("asymptotics", key + " " + name + " u^(2N+1) coefficient",
                rel(c[c.size() - 2], lead[li] * kappa(p)), tol);
      } else {
        rep.add("degree", key + " " + name + " degree <= N-1", top, tol);
      }
    }

    if (p.open()) {
      for (const Aux a : levels)
        rep.add("special-value", key + " " + std::string(aux_name(a)) + "(0) = 0",
                std::abs(L(a, 0.0)) / scale_of(r, a), tol);
      rep.add("special-value", key + " L1(-eta/2) = -2 L(-eta)", rel(L(Aux::Bar, -h), -2.0 * L(Aux::Base, -e)), tol);
      rep.add("special-value", key + " L1(eta/2) = -2 L(eta)", rel(L(Aux::Bar, h), -2.0 * L(Aux::Base, e)), tol);
      rep.add("special-value", key + " L2(-eta/2) = 2 L(-eta)", rel(L(Aux::BarPrime, -h), 2.0 * L(Aux::Base, -e)), tol);
      rep.add("special-value", key + " L2(eta/2) = 2 L(eta)", rel(L(Aux::BarPrime, h), 2.0 * L(Aux::Base, e)), tol);
      rep.add("special-value", key + " Lt(eta) = 2/3 L1(3eta/2)",
              rel(L(Aux::Tilde, e), (2.0 / 3.0) * L(Aux::Bar, 3.0 * h)), tol);
      // Q-symmetry: flip every root to its partner.
      BetheRootSet flipped = r;
      for (cplx& x : flipped.finite_roots) x = -x - e;
      const cplx u = e * cplx(0.613, 0.271);
      rep.add("q-symmetry", key, rel(tq_lambda(flipped, p, Aux::Base, u), L(Aux::Base, u)), tol);
    }

    if (!generic) continue;
    for (std::size_t j = 0; j < p.theta.size(); ++j) {
      const std::string jl = " j=" + std::to_string(j + 1);
      if (!p.open()) {
        const cplx x = p.theta[j];
        rep.add("functional-relation", key + jl + " line1",
                rel(L(Aux::Base, x) * L(Aux::Base, x + e), a_function(p, x + e) * L(Aux::Bar, x + h)), tol);
        rep.add("functional-relation", key + jl + " line2",
                rel(L(Aux::Base, x - e) * L(Aux::Base, x), a_function(p, x - e) * L(Aux::BarPrime, x - h)), tol);
        rep.add("functional-relation", key + jl + " line3",
                rel(L(Aux::Bar, x - 3.0 * h) * L(Aux::Base, x), a_function(p, x - e) * L(Aux::Tilde, x - e)), tol);
        rep.add("functional-relation", key + jl + " line4",
                rel(L(Aux::BarPrime, x + 3.0 * h) * L(Aux::Base, x), a_function(p, x + e) * L(Aux::Tilde, x + e)), tol);
        continue;
      }
      for (const double sg : {1.0, -1.0}) {
        const cplx x = sg * p.theta[j];
        const std::string tag = key + jl + (sg > 0 ? " +" : " -");
        cplx f = -0.25 * x * (x + e) / ((x + h) * (x + h)) * alpha_function(p, x);
        rep.add("functional-relation", tag + " line1", rel(L(Aux::Base, x) * L(Aux::Base, x + e), f * L(Aux::Bar, x + h)), tol);
        f = -0.25 * x * (x - e) / ((x - h) * (x - h)) * alpha_function(p, -x);
        rep.add("functional-relation", tag + " line2", rel(L(Aux::Base, x - e) * L(Aux::Base, x), f * L(Aux::BarPrime, x - h)), tol);
        f = -x * (x - 3.0 * h) / ((x - h) * (x - e)) * alpha_function(p, -x);
        rep.add("functional-relation", tag + " line3", rel(L(Aux::Bar, x - 3.0 * h) * L(Aux::Base, x), f * L(Aux::Tilde, x - e)), tol);
        f = -x * (x + 3.0 * h) / ((x + h) * (x + e)) * alpha_function(p, x);
        rep.add("functional-relation", tag + " line4", rel(L(Aux::BarPrime, x + 3.0 * h) * L(Aux::Base, x), f * L(Aux::Tilde, x + e)), tol);
      }
    }
  }
  return rep;
}

VerificationReport check_continuity(const ModelParameters& homogeneous, std::uint64_t seed) {
  if (!all_zero(homogeneous.theta)) throw PreconditionError("check_continuity: theta must be 0");
  VerificationReport rep;
  rep.name = "continuity";
  rep.seed = seed;
  rep.params = homogeneous;
  SeededDraw draw(seed);
  std::vector<cplx> dir(homogeneous.theta.size());
  for (cplx& d : dir) d = std::polar(1.0, draw.uniform(0.0, 6.283185307179586));

  const Spectrum s0 = compute_spectrum(homogeneous);
  const cplx u = generic_point(draw, s0, homogeneous);
  const std::vector<cplx> l0 = lambdas(s0, homogeneous, Aux::Base, u);
  const double eps[2] = {1e-2, 1e-3};
  std::vector<cplx> le[2];
  for (int k = 0; k < 2; ++k) {
    ModelParameters q = homogeneous;
    for (std::size_t j = 0; j < dir.size(); ++j) q.theta[j] = eps[k] * dir[j];
    const Spectrum sk = compute_spectrum(q);
    le[k] = lambdas(sk, q, Aux::Base, u);
  }
  double scale = 1.0;
  for (const cplx z : l0) scale = std::max(scale, std::abs(z));
  auto nearest = [](const std::vector<cplx>& pool, std::vector<bool>& used, cplx z) {
    std::size_t best = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!used[i] && (best == pool.size() || std::abs(pool[i] - z) < std::abs(pool[best] - z)))
        best = i;
    used[best] = true;
    return pool[best];
  };
  std::vector<bool> used1(l0.size(), false), used2(l0.size(), false);
  double worst = 0.0;
  if (le[0].size() != l0.size() || le[1].size() != l0.size()) worst = INFINITY;
  for (std::size_t i = 0; i < l0.size() && std::isfinite(worst); ++i) {
    const cplx a = nearest(le[0], used1, l0[i]);
    const cplx b = nearest(le[1], used2, l0[i]);
    // Linear extrapolation to eps = 0 from the two perturbed values.
    const cplx extrap = (eps[0] * b - eps[1] * a) / (eps[0] - eps[1]);
    worst = std::max(worst, std::abs(extrap - l0[i]));
  }
  const double tolerance = 10.0 * eps[0] * eps[0] * scale;
  std::ostringstream note;
  note << "u*=" << fmt(u) << ", scale " << scale;
  rep.add("continuity", "Richardson limit of Lambda(u*) at eps=1e-2,1e-3", worst, tolerance, note.str());
  return rep;
}

}  // namespace gl11
