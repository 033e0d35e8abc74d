#include "cglab/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "cglab/errors.hpp"

namespace cglab {

namespace detail {

struct GroupData {
  Modulus modulus;
  std::vector<CyclicComponent> components;
  // dlog[i][r] = exponent of r modulo components[i].prime_power, -1 off the
  // component's domain.
  std::vector<std::vector<std::int32_t>> dlog;
  u64 size = 1;
  u64 exponent = 1;
  std::vector<u64> scale;
  std::vector<u64> stride;
};

}  // namespace detail

// --- UnityValue --------------------------------------------------------------

UnityValue UnityValue::root(u64 k, u64 d) {
  if (d == 0) throw InvalidArgument("root of unity order must be positive");
  k %= d;
  const u64 g = std::gcd(k, d);
  UnityValue v;
  v.numerator_ = k / g;
  v.order_ = d / g;
  return v;
}

std::complex<double> UnityValue::render() const {
  if (is_zero()) return {0.0, 0.0};
  // Quarter turns are returned exactly.
  if ((4 * numerator_) % order_ == 0) {
    switch ((4 * numerator_) / order_) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(numerator_) /
                       static_cast<double>(order_);
  return {std::cos(angle), std::sin(angle)};
}

UnityValue UnityValue::conj() const {
  if (is_zero()) return *this;
  return root(order_ - numerator_, order_);
}

UnityValue operator*(const UnityValue& a, const UnityValue& b) {
  if (a.is_zero() || b.is_zero()) return UnityValue::zero();
  const u64 d = std::lcm(a.order_, b.order_);
  const u64 k = (static_cast<u128>(a.numerator_) * (d / a.order_) +
                 static_cast<u128>(b.numerator_) * (d / b.order_)) % d;
  return UnityValue::root(k, d);
}

// --- group construction ------------------------------------------------------

namespace {

u64 smallest_primitive_root(u64 p, u64 q, u64 order) {
  std::vector<u64> order_primes;
  for (const auto& pp : factorize(order)) order_primes.push_back(pp.prime);
  for (u64 g = 2; g < q; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (u64 r : order_primes) {
      if (pow_mod(g, order / r, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  // q = 2 has the trivial unit group; callers never ask for it.
  return 1;
}

void add_component(detail::GroupData& g, CyclicComponent c, std::vector<std::int32_t> table) {
  g.components.push_back(c);
  g.dlog.push_back(std::move(table));
}

}  // namespace

CharacterGroup CharacterGroup::build(const Modulus& m, const Budget& budget) {
  if (m.value() > budget.max_modulus) {
    throw BudgetExceeded("modulus " + std::to_string(m.value()) +
                         " exceeds max_modulus for character tables");
  }
  auto g = std::make_shared<detail::GroupData>(detail::GroupData{m, {}, {}, 1, 1, {}, {}});
  for (const auto& pp : m.factorization()) {
    const u64 q = pp.value();
    if (pp.prime == 2) {
      if (pp.exponent == 1) continue;
      if (pp.exponent == 2) {
        std::vector<std::int32_t> t(4, -1);
        t[1] = 0;
        t[3] = 1;
        add_component(*g, {CyclicComponent::Kind::kMinusOne, 2, 4, 2, 3}, std::move(t));
        continue;
      }
      // n = (-1)^s * 5^t (mod 2^e)
      const u64 five_order = q / 4;
      std::vector<std::int32_t> sign(q, -1), five(q, -1);
      u64 x = 1;
      for (u64 t = 0; t < five_order; ++t) {
        sign[x] = 0;
        five[x] = static_cast<std::int32_t>(t);
        sign[q - x] = 1;
        five[q - x] = static_cast<std::int32_t>(t);
        x = x * 5 % q;
      }
      add_component(*g, {CyclicComponent::Kind::kMinusOne, 2, q, 2, q - 1}, std::move(sign));
      add_component(*g, {CyclicComponent::Kind::kFive, 2, q, five_order, 5}, std::move(five));
      continue;
    }
    const u64 order = q / pp.prime * (pp.prime - 1);
    const u64 gen = smallest_primitive_root(pp.prime, q, order);
    std::vector<std::int32_t> t(q, -1);
    u64 x = 1;
    for (u64 j = 0; j < order; ++j) {
      t[x] = static_cast<std::int32_t>(j);
      x = mul_mod(x, gen, q);
    }
    add_component(*g, {CyclicComponent::Kind::kOddPrimePower, pp.prime, q, order, gen}, std::move(t));
  }
  for (const auto& c : g->components) {
    g->stride.push_back(g->size);
    g->size *= c.order;
    g->exponent = std::lcm(g->exponent, c.order);
  }
  for (const auto& c : g->components) g->scale.push_back(g->exponent / c.order);
  return CharacterGroup(std::move(g));
}

CharacterGroup build_group(const Modulus& m, const Budget& budget) {
  return CharacterGroup::build(m, budget);
}

const Modulus& CharacterGroup::modulus() const { return data_->modulus; }
std::span<const CyclicComponent> CharacterGroup::components() const { return data_->components; }
u64 CharacterGroup::size() const { return data_->size; }
u64 CharacterGroup::exponent() const { return data_->exponent; }
u64 CharacterGroup::phase_scale(std::size_t component) const { return data_->scale.at(component); }

Character CharacterGroup::principal() const {
  return Character(data_, std::vector<u64>(data_->components.size(), 0));
}

Character CharacterGroup::character(u64 index) const {
  if (index >= data_->size) {
    throw InvalidArgument("character index " + std::to_string(index) + " out of range");
  }
  std::vector<u64> e(data_->components.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = index % data_->components[i].order;
    index /= data_->components[i].order;
  }
  return Character(data_, std::move(e));
}

Character CharacterGroup::from_exponents(std::vector<u64> exponents) const {
  if (exponents.size() != data_->components.size()) {
    throw InvalidArgument("exponent vector length does not match component count");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exponents[i] %= data_->components[i].order;
  }
  return Character(data_, std::move(exponents));
}

std::optional<std::vector<u64>> CharacterGroup::dlogs(i64 n) const {
  const u64 r = data_->modulus.reduce(n);
  if (std::gcd(r, data_->modulus.value()) != 1) return std::nullopt;
  std::vector<u64> out(data_->components.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<u64>(data_->dlog[i][r % data_->components[i].prime_power]);
  }
  return out;
}

u64 CharacterGroup::unit_from_dlogs(std::span<const u64> exponents) const {
  if (exponents.size() != data_->components.size()) {
    throw InvalidArgument("exponent vector length does not match component count");
  }
  // Residue per prime-power factor, then CRT.
  u128 x = 0, mod = 1;
  std::size_t ci = 0;
  for (const auto& pp : data_->modulus.factorization()) {
    const u64 q = pp.value();
    u64 r = 1;
    while (ci < data_->components.size() && data_->components[ci].prime == pp.prime) {
      const auto& c = data_->components[ci];
      r = mul_mod(r, pow_mod(c.generator, exponents[ci] % c.order, q), q);
      ++ci;
    }
    r %= q;
    // x' = x + mod * ((r - x) * mod^{-1} mod q)
    const u64 x_mod_q = static_cast<u64>(x % q);
    const u64 diff = (r + q - x_mod_q) % q;
    const u64 inv = q == 1 ? 0 : mod_inverse(static_cast<i64>(mod % q), Modulus::build(q));
    x += mod * mul_mod(diff, inv, q);
    mod *= q;
  }
  return static_cast<u64>(x % data_->modulus.value());
}

bool CharacterGroup::owns(const Character& chi) const { return chi.group_ == data_; }

// --- Character ---------------------------------------------------------------

u64 Character::index() const {
  u64 idx = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) idx += exponents_[i] * group_->stride[i];
  return idx;
}

bool Character::is_principal() const {
  for (u64 e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

u64 Character::modulus() const { return group_->modulus.value(); }
u64 Character::group_exponent() const { return group_->exponent; }

std::optional<u64> Character::phase(i64 n) const {
  const u64 r = group_->modulus.reduce(n);
  if (std::gcd(r, group_->modulus.value()) != 1) return std::nullopt;
  u64 phase = 0;
  const u64 L = group_->exponent;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const auto& c = group_->components[i];
    const auto d = static_cast<u64>(group_->dlog[i][r % c.prime_power]);
    phase = (phase + mul_mod(exponents_[i] * group_->scale[i] % L, d, L)) % L;
  }
  return phase;
}

UnityValue evaluate(const Character& chi, i64 n) {
  const auto ph = chi.phase(n);
  if (!ph) return UnityValue::zero();
  return UnityValue::root(*ph, chi.group_exponent());
}

Character multiply(const Character& a, const Character& b) {
  if (a.group_ != b.group_) throw GroupMismatch("characters belong to different groups");
  std::vector<u64> e(a.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = (a.exponents_[i] + b.exponents_[i]) % a.group_->components[i].order;
  }
  return Character(a.group_, std::move(e));
}

Character conjugate(const Character& chi) {
  std::vector<u64> e(chi.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const u64 ord = chi.group_->components[i].order;
    e[i] = (ord - chi.exponents_[i]) % ord;
  }
  return Character(chi.group_, std::move(e));
}

std::vector<Character> all_characters(const CharacterGroup& group) {
  std::vector<Character> out;
  out.reserve(group.size());
  for (u64 i = 0; i < group.size(); ++i) out.push_back(group.character(i));
  return out;
}

std::complex<double> orthogonality_check(const CharacterGroup& group, i64 a, i64 b) {
  std::complex<double> total = 0.0;
  for (u64 i = 0; i < group.size(); ++i) {
    const Character chi = group.character(i);
    total += (evaluate(chi, a) * evaluate(chi, b).conj()).render();
  }
  return total / static_cast<double>(group.size());
}

}  // namespace cglab
