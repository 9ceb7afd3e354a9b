#include "gl11/transfer.hpp"

#include <cmath>

#include "gl11/errors.hpp"

namespace gl11 {
namespace {

std::vector<GradedSpace> sites(int n) {
  return std::vector<GradedSpace>(static_cast<std::size_t>(n), GradedSpace::fundamental());
}

std::size_t aux_index(Aux a) { return static_cast<std::size_t>(a); }

}  // namespace

GradedOperator monodromy_on(const Chain& chain, std::size_t aux_pos, Aux aux,
                            std::size_t first_site, cplx u, const ModelParameters& p) {
  const AffineOperator r = fused_r(aux, p.eta);
  GradedOperator t = chain.identity();
  for (int j = 0; j < p.n_sites; ++j)
    t = t * chain.embed(r.at(u - p.theta[static_cast<std::size_t>(j)]),
                        {aux_pos, first_site + static_cast<std::size_t>(j)});
  return t;
}

GradedOperator reflecting_monodromy_on(const Chain& chain, std::size_t aux_pos, Aux aux,
                                       std::size_t first_site, cplx u,
                                       const ModelParameters& p) {
  // R_{j,aux} embedded at (j, aux) equals R_{aux,j} embedded at (aux, j):
  // the fused R-matrices are even and invariant under the graded flip.
  const AffineOperator r = fused_r(aux, p.eta);
  GradedOperator t = chain.identity();
  for (int j = p.n_sites; j-- > 0;)
    t = t * chain.embed(r.at(u + p.theta[static_cast<std::size_t>(j)]),
                        {aux_pos, first_site + static_cast<std::size_t>(j)});
  return t;
}

TransferEngine::TransferEngine(ModelParameters p, GrassmannContext g)
    : p_(std::move(p)), g_(std::move(g)) {
  p_.validate();
  std::vector<GradedSpace> f = sites(p_.n_sites);
  if (p_.open()) f.insert(f.begin(), g_.aux_space);
  physical_ = Chain(std::move(f));
}

const TransferEngine::AuxCache& TransferEngine::cache(Aux aux) const {
  const std::size_t i = aux_index(aux);
  std::call_once(once_[i], [&] {
    auto c = std::make_unique<AuxCache>();
    std::vector<GradedSpace> f = sites(p_.n_sites);
    f.insert(f.begin(), aux_space(aux));
    if (p_.open()) f.insert(f.begin(), g_.aux_space);
    c->chain = Chain(std::move(f));
    const std::size_t a = p_.open() ? 1 : 0;
    const AffineOperator r = fused_r(aux, p_.eta);
    for (int j = 0; j < p_.n_sites; ++j) {
      const std::size_t s = a + 1 + static_cast<std::size_t>(j);
      const cplx th = p_.theta[static_cast<std::size_t>(j)];
      // R(w - th) = (c0 - th c1) + w c1, and likewise with +th.
      const GradedOperator e0 = c->chain.embed(r.c0, {a, s});
      const GradedOperator e1 = c->chain.embed(r.c1, {a, s});
      c->r0.push_back(e0 - th * e1);
      c->rh0.push_back(e0 + th * e1);
      c->r1.push_back(e1);
      c->rh1.push_back(e1);
    }
    if (p_.open()) {
      const AffineOperator km = fused_k(aux, Side::Minus, p_, g_);
      const AffineOperator kp = fused_k(aux, Side::Plus, p_, g_);
      c->km0 = c->chain.embed(km.c0, {0, 1});
      c->km1 = c->chain.embed(km.c1, {0, 1});
      c->kp0 = c->chain.embed(kp.c0, {0, 1});
      c->kp1 = c->chain.embed(kp.c1, {0, 1});
    }
    caches_[i] = std::move(c);
  });
  return *caches_[i];
}

GradedOperator TransferEngine::product(const AuxCache& c, bool reflecting, cplx u) const {
  const std::size_t n = c.r0.size();
  GradedOperator t;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = reflecting ? n - 1 - k : k;
    GradedOperator f = reflecting ? c.rh0[j] : c.r0[j];
    f.matrix().add_scaled(u, reflecting ? c.rh1[j].matrix() : c.r1[j].matrix());
    t = k == 0 ? std::move(f) : t * f;
  }
  return t;
}

GradedOperator TransferEngine::monodromy(Aux aux, cplx u) const {
  if (p_.open()) {
    const Chain chain([&] {
      std::vector<GradedSpace> f = sites(p_.n_sites);
      f.insert(f.begin(), aux_space(aux));
      return Chain(std::move(f));
    }());
    return monodromy_on(chain, 0, aux, 1, u, p_);
  }
  return product(cache(aux), false, u);
}

GradedOperator TransferEngine::reflecting_monodromy(Aux aux, cplx u) const {
  if (p_.open()) {
    std::vector<GradedSpace> f = sites(p_.n_sites);
    f.insert(f.begin(), aux_space(aux));
    return reflecting_monodromy_on(Chain(std::move(f)), 0, aux, 1, u, p_);
  }
  return product(cache(aux), true, u);
}

GradedOperator TransferEngine::transfer(Aux aux, cplx u) const {
  const AuxCache& c = cache(aux);
  if (!p_.open()) return c.chain.partial_super_trace(product(c, false, u), {0});
  GradedOperator kp = c.kp0;
  kp.matrix().add_scaled(u, c.kp1.matrix());
  GradedOperator km = c.km0;
  km.matrix().add_scaled(u, c.km1.matrix());
  const GradedOperator full = kp * product(c, false, u) * km * product(c, true, u);
  return c.chain.partial_super_trace(full, {1});
}

GradedOperator TransferEngine::transfer_body(Aux aux, cplx u) const {
  const GradedOperator t = transfer(aux, u);
  return p_.open() ? grassmann_body(t, 1e-11) : t;
}

GradedOperator monodromy(const ModelParameters& p, Aux aux, cplx u) {
  p.validate();
  std::vector<GradedSpace> f = sites(p.n_sites);
  f.insert(f.begin(), aux_space(aux));
  return monodromy_on(Chain(std::move(f)), 0, aux, 1, u, p);
}

GradedOperator reflecting_monodromy(const ModelParameters& p, Aux aux, cplx u) {
  p.validate();
  std::vector<GradedSpace> f = sites(p.n_sites);
  f.insert(f.begin(), aux_space(aux));
  return reflecting_monodromy_on(Chain(std::move(f)), 0, aux, 1, u, p);
}

GradedOperator transfer(const ModelParameters& p, Aux aux, cplx u) {
  return TransferEngine(p).transfer(aux, u);
}

GradedOperator annihilator(const Chain& chain, std::size_t site_pos) {
  return chain.embed(GradedOperator::unit(GradedSpace::fundamental(), 0, 1), {site_pos});
}

GradedOperator creator(const Chain& chain, std::size_t site_pos) {
  return chain.embed(GradedOperator::unit(GradedSpace::fundamental(), 1, 0), {site_pos});
}

GradedOperator number(const Chain& chain, std::size_t site_pos) {
  return chain.embed(GradedOperator::unit(GradedSpace::fundamental(), 1, 1), {site_pos});
}

GradedOperator hamiltonian(const ModelParameters& p, const GrassmannContext& g) {
  p.validate();
  const GradedSpace v = GradedSpace::fundamental();
  const GradedOperator perm = super_permutation(v);
  const std::size_t n = static_cast<std::size_t>(p.n_sites);
  if (!p.open()) {
    if (n < 2) throw PreconditionError("periodic Hamiltonian needs at least two sites");
    const Chain chain(sites(p.n_sites));
    GradedOperator h = GradedOperator::zero(chain.space());
    for (std::size_t j = 0; j < n; ++j) h += chain.embed(perm, {j, (j + 1) % n});
    return h;
  }
  std::vector<GradedSpace> f = sites(p.n_sites);
  f.insert(f.begin(), g.aux_space);
  const Chain chain(std::move(f));
  const cplx eta = p.eta;
  GradedOperator h = GradedOperator::zero(chain.space());
  const cplx bulk = std::pow(eta, static_cast<double>(p.n_sites) - 2.0);
  for (std::size_t j = 1; j < n; ++j) h += bulk * chain.embed(perm, {j, j + 1});

  const GradedOperator id = chain.identity();
  const GradedOperator e = chain.embed(g.generator, {0});
  const GradedOperator es = chain.embed(g.adjoint(), {0});
  const cplx edge = std::pow(eta, static_cast<double>(p.n_sites) - 1.0);
  auto boundary = [&](std::size_t s, cplx a, cplx b, cplx fc) {
    return a * id - (2.0 * a) * number(chain, s) + b * (e * annihilator(chain, s)) +
           fc * (es * creator(chain, s));
  };
  // K^- meets site N in str{K^+ T K^- T^hat} with T = R_{0,1} ... R_{0,N},
  // so its boundary term sits on site N and the K^+ term on site 1.
  h += (edge / 2.0) * boundary(n, p.a_minus, p.b_minus, p.f_minus);
  h += (edge / (2.0 * (1.0 + p.a_plus * eta))) * boundary(1, p.a_plus, p.b_plus, p.f_plus);
  return h;
}

}  // namespace gl11
