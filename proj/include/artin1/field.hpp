#pragma once

// Prime fields F_p and their quadratic extensions F_{p^2} = F_p[u]/(u^2 - n),
// where n is the smallest positive nonresidue mod p. Characteristics 2 and 3
// are rejected everywhere. The quadratic character chi is served from a full
// lookup table when q fits under a size cutoff; above it, chi falls back to
// an Euler-criterion power for degree 1 and to chi_p(Norm(z)) for degree 2.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "artin1/errors.hpp"

namespace artin1 {

// Element of F_p (deg 1) or F_{p^2} (deg 2), value c0 + c1*u. Plain value type;
// carries (p, deg) so mismatched-field operands can be rejected.
struct Fe {
  uint32_t c0 = 0;
  uint32_t c1 = 0;
  uint32_t p = 0;
  uint8_t deg = 1;

  friend bool operator==(const Fe& a, const Fe& b) = default;
};

class Field {
 public:
  enum class ChiMode { Auto, ForceFormula };  // ForceFormula exists for tests

  // Errors: NonPrime unless p is prime; UnsupportedCharacteristic for p in {2,3};
  // BadInput unless degree is 1 or 2.
  static Field make(uint64_t p, int degree, ChiMode mode = ChiMode::Auto);

  uint32_t p() const;
  int degree() const;
  uint64_t q() const;
  // Smallest positive quadratic nonresidue mod p (the u^2 value for degree 2).
  uint32_t nonresidue() const;
  bool chi_tabled() const;

  Fe zero() const;
  Fe one() const;
  Fe element(uint64_t c0, uint64_t c1 = 0) const;  // reduces mod p
  Fe from_int(int64_t v) const;                    // reduces a signed integer into F_p
  // Enumeration order: index(c0 + c1*u) = c0 + c1*p, indices 0..q-1.
  Fe from_index(uint64_t i) const;
  uint64_t index(const Fe& z) const;
  // Embeds an F_p element into this field (identity when degree matches).
  Fe embed(const Fe& z) const;

  Fe add(const Fe& a, const Fe& b) const;
  Fe sub(const Fe& a, const Fe& b) const;
  Fe neg(const Fe& a) const;
  Fe mul(const Fe& a, const Fe& b) const;
  Fe inv(const Fe& a) const;                   // DivisionByZero on 0
  Fe div(const Fe& a, const Fe& b) const;      // DivisionByZero on b = 0
  Fe pow(const Fe& a, uint64_t e) const;       // square-and-multiply
  bool is_zero(const Fe& a) const;

  // Quadratic character: 0 on zero, +1 on nonzero squares, -1 otherwise.
  int chi(const Fe& a) const;
  // Norm to F_p: z * z^p = c0^2 - n*c1^2 (equals z for degree 1).
  Fe norm(const Fe& z) const;

  // Cube root: for q = 2 (mod 3) the cube map is a bijection and the unique
  // root is z^((2q-1)/3); for q = 1 (mod 3) returns the smallest root in
  // enumeration order, or nullopt when z is not a cube. Errors: ZeroInput.
  std::optional<Fe> cube_root(const Fe& z) const;

  // Raw quadratic-character table indexed by element index, or nullptr when
  // the field is above the table cutoff. Immutable; safe to share across threads.
  const int8_t* chi_table() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

bool is_prime_u64(uint64_t n);

// Number of entries above which the chi table is not materialized.
inline constexpr uint64_t kChiTableCutoff = uint64_t(1) << 26;

}  // namespace artin1
