#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cglab/budget.hpp"
#include "cglab/residue.hpp"

namespace cglab {

// Exact character value: exp(2*pi*i * numerator / order) in lowest terms, or
// the distinguished zero taken on non-units.
class UnityValue {
 public:
  static UnityValue zero() { return UnityValue(); }
  static UnityValue one() { return root(0, 1); }
  // exp(2*pi*i*k/d); throws InvalidArgument for d == 0.
  static UnityValue root(u64 k, u64 d);

  bool is_zero() const { return order_ == 0; }
  u64 numerator() const { return numerator_; }
  u64 order() const { return order_; }

  std::complex<double> render() const;
  UnityValue conj() const;

  friend UnityValue operator*(const UnityValue& a, const UnityValue& b);
  friend bool operator==(const UnityValue&, const UnityValue&) = default;

 private:
  UnityValue() = default;

  u64 numerator_ = 0;
  u64 order_ = 0;  // 0 encodes Zero
};

// One cyclic factor of the unit group (Z/mZ)^*, attached to a prime-power
// factor q of m.
struct CyclicComponent {
  enum class Kind { kOddPrimePower, kMinusOne, kFive };

  Kind kind = Kind::kOddPrimePower;
  u64 prime = 0;
  u64 prime_power = 0;  // q
  u64 order = 0;
  u64 generator = 0;  // modulo q
};

namespace detail {
struct GroupData;
}

class CharacterGroup;

// A Dirichlet character, stored as its exponent vector over the cyclic
// components of its group.
class Character {
 public:
  const std::vector<u64>& exponents() const { return exponents_; }
  // Position in the canonical enumeration (first component varies fastest).
  u64 index() const;
  bool is_principal() const;
  u64 modulus() const;
  // Exponent of the owning group (denominator of every phase).
  u64 group_exponent() const;

  // Numerator of the value at n over the group exponent, or nullopt on
  // non-units.
  std::optional<u64> phase(i64 n) const;

  bool same_group(const Character& other) const { return group_ == other.group_; }

  friend bool operator==(const Character& a, const Character& b) {
    return a.group_ == b.group_ && a.exponents_ == b.exponents_;
  }

 private:
  friend class CharacterGroup;
  friend Character conjugate(const Character&);
  friend Character multiply(const Character&, const Character&);

  Character(std::shared_ptr<const detail::GroupData> group, std::vector<u64> exponents)
      : group_(std::move(group)), exponents_(std::move(exponents)) {}

  std::shared_ptr<const detail::GroupData> group_;
  std::vector<u64> exponents_;
};

// The full group of Dirichlet characters modulo m, with discrete-log tables
// for every cyclic component. Copies share the same underlying group, so
// characters from copies remain compatible.
//
// Components are ordered by ascending prime; for 2^e with e >= 3 the <-1>
// component precedes the <5> component. Modulus 2 contributes no component
// and modulus 4 contributes <-1> only.
class CharacterGroup {
 public:
  // Throws BudgetExceeded when m exceeds budget.max_modulus.
  static CharacterGroup build(const Modulus& m, const Budget& budget = {});

  const Modulus& modulus() const;
  std::span<const CyclicComponent> components() const;
  // Number of characters, phi(m).
  u64 size() const;
  // lcm of the component orders; every phase is a numerator over this.
  u64 exponent() const;
  // exponent() / order of component i.
  u64 phase_scale(std::size_t component) const;

  Character principal() const;
  // Character at a canonical index in [0, size()).
  Character character(u64 index) const;
  Character from_exponents(std::vector<u64> exponents) const;

  // Per-component discrete logs of n, or nullopt if n is not a unit.
  std::optional<std::vector<u64>> dlogs(i64 n) const;
  // Inverse of dlogs: the unit in [0, m) whose discrete logs are the given
  // exponents.
  u64 unit_from_dlogs(std::span<const u64> exponents) const;

  bool owns(const Character& chi) const;

 private:
  explicit CharacterGroup(std::shared_ptr<const detail::GroupData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::GroupData> data_;
};

CharacterGroup build_group(const Modulus& m, const Budget& budget = {});

UnityValue evaluate(const Character& chi, i64 n);

// Throws GroupMismatch when the characters come from different groups.
Character multiply(const Character& a, const Character& b);
Character conjugate(const Character& chi);
inline bool is_principal(const Character& chi) { return chi.is_principal(); }

// All phi(m) characters in canonical order, principal first.
std::vector<Character> all_characters(const CharacterGroup& group);

// (1/phi(m)) * sum over chi of chi(a) * conj(chi(b)).
std::complex<double> orthogonality_check(const CharacterGroup& group, i64 a, i64 b);

}  // namespace cglab
