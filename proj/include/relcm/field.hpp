#pragma once

#include <cstdint>

namespace relcm {

// Residue in [0, p). Arithmetic goes through the owning PrimeField.
using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool isPrime(std::uint64_t value);

/// The prime field Z/pZ. Elements are plain residues; the field object
/// carries the modulus. Primes are limited to p < 2^31 so sums fit in 32 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + (p_ - b); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  Coeff fromInt(std::int64_t v) const;
  // Representative in (-p/2, p/2].
  std::int64_t toSigned(Coeff a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace relcm
