#include <string>

#include "twistgate/descent.hpp"
#include "twistgate/errors.hpp"

namespace twistgate {
namespace {

inline constexpr std::size_t kMaxModuleBits = 16;

ModMatrix multiply(const ModMatrix& x, const ModMatrix& y, std::uint32_t mask) {
  ModMatrix out{x.n, std::vector<std::uint32_t>(x.n * x.n, 0)};
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < x.n; ++l) acc += std::uint64_t{x.at(i, l)} * y.at(l, j);
      out.entries[i * x.n + j] = static_cast<std::uint32_t>(acc) & mask;
    }
  return out;
}

ModMatrix identity(std::size_t n) {
  ModMatrix out{n, std::vector<std::uint32_t>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) out.entries[i * n + i] = 1;
  return out;
}

std::vector<std::uint32_t> involutive_units(unsigned k) {
  const std::uint32_t q = 1u << k;
  std::vector<std::uint32_t> out;
  for (std::uint32_t u = 1; u < q; u += 2)
    if ((std::uint64_t{u} * u) % q == 1) out.push_back(u);
  return out;
}

std::uint32_t inverse_unit(std::uint32_t u, unsigned k) {
  const std::uint32_t q = 1u << k;
  for (std::uint32_t v = 1; v < q; v += 2)
    if ((std::uint64_t{u} * v) % q == 1) return v;
  throw std::logic_error("not a unit");
}

}  // namespace

SignedModule::SignedModule(unsigned k, std::size_t n, std::vector<ModMatrix> generators)
    : k_(k), n_(n), generators_(std::move(generators)) {
  if (k == 0 || n == 0) throw DomainError("SignedModule needs k >= 1 and n >= 1");
  if (k * n > kMaxModuleBits) throw DomainError("SignedModule larger than 2^16 elements");
  if (generators_.empty() || generators_.size() > 8) throw DomainError("SignedModule needs 1 to 8 generators");
  const std::uint32_t mask = modulus() - 1;
  for (auto& g : generators_) {
    if (g.n != n || g.entries.size() != n * n) throw DomainError("generator matrix has the wrong shape");
    for (auto& e : g.entries) e &= mask;
  }
  const ModMatrix id = identity(n);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (multiply(generators_[i], generators_[i], mask) != id)
      throw NonInvolutiveActionError("generator " + std::to_string(i) + " does not square to the identity");
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (multiply(generators_[i], generators_[j], mask) != multiply(generators_[j], generators_[i], mask))
        throw NonCommutingActionError("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                      " do not commute");
  }
}

ModuleElement SignedModule::element(std::size_t index) const {
  ModuleElement m(n_);
  for (std::size_t i = 0; i < n_; ++i) m[i] = static_cast<std::uint32_t>(index >> (k_ * i)) & (modulus() - 1);
  return m;
}

ModuleElement SignedModule::apply(const ModMatrix& g, const ModuleElement& m) const {
  ModuleElement out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc += std::uint64_t{g.at(i, j)} * m[j];
    out[i] = static_cast<std::uint32_t>(acc) & (modulus() - 1);
  }
  return out;
}

ModuleElement SignedModule::act(std::uint32_t mask, const ModuleElement& m) const {
  ModuleElement out = m;
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (mask >> i & 1u) out = apply(generators_[i], out);
  return out;
}

ModuleElement SignedModule::add(const ModuleElement& x, const ModuleElement& y) const {
  ModuleElement out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (x[i] + y[i]) & (modulus() - 1);
  return out;
}

ModuleElement SignedModule::scale(std::int64_t c, const ModuleElement& m) const {
  const std::int64_t q = modulus();
  const std::int64_t cr = ((c % q) + q) % q;
  ModuleElement out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>((cr * m[i]) % q);
  return out;
}

LemmaSumCertificate lemma_sum_check(const SignedModule& module) {
  const std::size_t r = module.r();
  const std::uint32_t group_size = 1u << r;
  const auto characters = all_characters(r);
  const ModuleElement zero(module.n(), 0);

  LemmaSumCertificate cert;
  cert.passed = true;
  cert.decompositions.reserve(module.size());
  for (std::size_t index = 0; index < module.size(); ++index) {
    const ModuleElement m = module.element(index);
    std::vector<ModuleElement> orbit(group_size);
    for (std::uint32_t sigma = 0; sigma < group_size; ++sigma) orbit[sigma] = module.act(sigma, m);

    Decomposition dec{m, {}};
    ModuleElement total = zero;
    for (const auto& s : characters) {
      ModuleElement component = zero;
      for (std::uint32_t sigma = 0; sigma < group_size; ++sigma)
        component = module.add(component, module.scale(s.value_on(sigma), orbit[sigma]));
      // component must lie in M_s: sigma(component) = s(sigma) component for all sigma.
      for (std::uint32_t sigma = 0; sigma < group_size; ++sigma)
        if (module.act(sigma, component) != module.scale(s.value_on(sigma), component)) cert.passed = false;
      total = module.add(total, component);
      dec.components.push_back({s, std::move(component)});
    }
    if (total != module.scale(group_size, m)) cert.passed = false;
    cert.decompositions.push_back(std::move(dec));
    ++cert.elements_checked;
  }
  return cert;
}

std::vector<ModMatrix> involutive_generators(unsigned k, std::size_t n) {
  if (k == 0 || n == 0 || n > 2) throw DomainError("involutive_generators supports n in {1, 2}");
  const auto units = involutive_units(k);
  std::vector<ModMatrix> out;
  if (n == 1) {
    for (auto u : units) out.push_back({1, {u}});
    return out;
  }
  for (auto u : units)
    for (auto v : units) out.push_back({2, {u, 0, 0, v}});
  const std::uint32_t q = 1u << k;
  for (std::uint32_t a = 1; a < q; a += 2) out.push_back({2, {0, a, inverse_unit(a, k), 0}});
  return out;
}

std::vector<SignedModule> signed_module_family(unsigned k, std::size_t n, std::size_t r) {
  if (r == 0 || r > 4) throw DomainError("signed_module_family supports 1 <= r <= 4");
  const auto gens = involutive_generators(k, n);
  const std::uint32_t mask = (1u << k) - 1;
  std::vector<SignedModule> out;
  std::vector<std::size_t> pick(r, 0);
  while (true) {
    bool commuting = true;
    for (std::size_t i = 0; i < r && commuting; ++i)
      for (std::size_t j = i + 1; j < r && commuting; ++j)
        commuting = multiply(gens[pick[i]], gens[pick[j]], mask) == multiply(gens[pick[j]], gens[pick[i]], mask);
    if (commuting) {
      std::vector<ModMatrix> chosen;
      for (auto idx : pick) chosen.push_back(gens[idx]);
      out.emplace_back(k, n, std::move(chosen));
    }
    std::size_t pos = 0;
    while (pos < r && ++pick[pos] == gens.size()) pick[pos++] = 0;
    if (pos == r) break;
  }
  return out;
}

}  // namespace twistgate
