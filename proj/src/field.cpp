#include "artin1/field.hpp"

#include <algorithm>

namespace artin1 {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::ZeroTwist: return "ZeroTwist";
    case Errc::NoCubeRoot: return "NoCubeRoot";
    case Errc::ZeroC: return "ZeroC";
    case Errc::UnsupportedFiberType: return "UnsupportedFiberType";
    case Errc::NonMinimalPlace: return "NonMinimalPlace";
    case Errc::AuditFailed: return "AuditFailed";
    case Errc::SelftestFailed: return "SelftestFailed";
    case Errc::ReportedMismatch: return "ReportedMismatch";
    case Errc::CrosscheckFailed: return "CrosscheckFailed";
    case Errc::Falsified: return "Falsified";
    case Errc::BadInput: return "BadInput";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t i = 2; i * i <= n; ++i)
    if (n % i == 0) return false;
  return true;
}

struct Field::Data {
  uint32_t p = 0;
  int degree = 1;
  uint64_t q = 0;
  uint32_t n = 0;  // smallest nonresidue mod p
  std::vector<int8_t> chi_p;   // always built (size p): needed for the norm fallback
  std::vector<int8_t> chi;     // full table of size q, empty when above cutoff
  bool tabled = false;
};

namespace {

uint32_t mulp(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>(uint64_t(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = (unsigned __int128)(r)*a % m;
    a = (unsigned __int128)(a)*a % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::make(uint64_t p, int degree, ChiMode mode) {
  if (p == 2 || p == 3)
    fail(Errc::UnsupportedCharacteristic,
         "characteristic " + std::to_string(p) +
             " is not supported (the elliptic pencils used here degenerate)");
  if (!is_prime_u64(p)) fail(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (degree != 1 && degree != 2) fail(Errc::BadInput, "field degree must be 1 or 2");
  if (p > (uint64_t(1) << 31)) fail(Errc::BadInput, "characteristic too large");

  auto d = std::make_shared<Data>();
  d->p = static_cast<uint32_t>(p);
  d->degree = degree;
  d->q = degree == 1 ? p : p * p;

  d->chi_p.assign(p, int8_t(-1));
  d->chi_p[0] = 0;
  for (uint64_t x = 1; x < p; ++x) d->chi_p[x * x % p] = 1;
  d->n = 0;
  for (uint32_t m = 2; m < p; ++m)
    if (d->chi_p[m] == -1) {
      d->n = m;
      break;
    }

  if (mode == ChiMode::Auto && d->q <= kChiTableCutoff) {
    d->tabled = true;
    if (degree == 1) {
      d->chi = d->chi_p;
    } else {
      d->chi.assign(d->q, 0);
      for (uint32_t c1 = 0; c1 < d->p; ++c1) {
        uint64_t nc1sq = uint64_t(d->n) * mulp(c1, c1, d->p) % d->p;
        for (uint32_t c0 = 0; c0 < d->p; ++c0) {
          uint32_t norm = static_cast<uint32_t>((uint64_t(mulp(c0, c0, d->p)) + d->p - nc1sq) % d->p);
          d->chi[uint64_t(c0) + uint64_t(d->p) * c1] = d->chi_p[norm];
        }
      }
    }
  }
  Field f;
  f.d_ = std::move(d);
  return f;
}

uint32_t Field::p() const { return d_->p; }
int Field::degree() const { return d_->degree; }
uint64_t Field::q() const { return d_->q; }
uint32_t Field::nonresidue() const { return d_->n; }
bool Field::chi_tabled() const { return d_->tabled; }
const int8_t* Field::chi_table() const { return d_->tabled ? d_->chi.data() : nullptr; }

bool operator==(const Field& a, const Field& b) {
  return a.d_->p == b.d_->p && a.d_->degree == b.d_->degree;
}

namespace {
void check_member(uint32_t p, int deg, const Fe& z) {
  if (z.p != p || z.deg != deg)
    fail(Errc::FieldMismatch, "element of F_" + std::to_string(z.p) +
                                  (z.deg == 2 ? "^2" : "") + " used in F_" + std::to_string(p) +
                                  (deg == 2 ? "^2" : ""));
}
}  // namespace

#define ARTIN1_CHECK(z) check_member(d_->p, d_->degree, (z))

Fe Field::zero() const { return Fe{0, 0, d_->p, static_cast<uint8_t>(d_->degree)}; }
Fe Field::one() const { return Fe{1, 0, d_->p, static_cast<uint8_t>(d_->degree)}; }

Fe Field::element(uint64_t c0, uint64_t c1) const {
  if (d_->degree == 1 && c1 % d_->p != 0)
    fail(Errc::BadInput, "nonzero u-coefficient in a degree-1 field");
  return Fe{static_cast<uint32_t>(c0 % d_->p), static_cast<uint32_t>(c1 % d_->p), d_->p,
            static_cast<uint8_t>(d_->degree)};
}

Fe Field::from_int(int64_t v) const {
  int64_t r = v % int64_t(d_->p);
  if (r < 0) r += d_->p;
  return element(static_cast<uint64_t>(r));
}

Fe Field::from_index(uint64_t i) const {
  if (i >= d_->q) fail(Errc::BadInput, "element index out of range");
  return Fe{static_cast<uint32_t>(i % d_->p), static_cast<uint32_t>(i / d_->p), d_->p,
            static_cast<uint8_t>(d_->degree)};
}

uint64_t Field::index(const Fe& z) const {
  ARTIN1_CHECK(z);
  return uint64_t(z.c0) + uint64_t(d_->p) * z.c1;
}

Fe Field::embed(const Fe& z) const {
  if (z.p != d_->p) fail(Errc::FieldMismatch, "embedding across different characteristics");
  if (z.deg > d_->degree) fail(Errc::FieldMismatch, "no embedding of F_p^2 into F_p");
  return Fe{z.c0, z.c1, d_->p, static_cast<uint8_t>(d_->degree)};
}

bool Field::is_zero(const Fe& a) const {
  ARTIN1_CHECK(a);
  return a.c0 == 0 && a.c1 == 0;
}

Fe Field::add(const Fe& a, const Fe& b) const {
  ARTIN1_CHECK(a);
  ARTIN1_CHECK(b);
  uint32_t p = d_->p;
  return Fe{(a.c0 + b.c0) % p, (a.c1 + b.c1) % p, p, a.deg};
}

Fe Field::sub(const Fe& a, const Fe& b) const {
  ARTIN1_CHECK(a);
  ARTIN1_CHECK(b);
  uint32_t p = d_->p;
  return Fe{(a.c0 + p - b.c0) % p, (a.c1 + p - b.c1) % p, p, a.deg};
}

Fe Field::neg(const Fe& a) const {
  ARTIN1_CHECK(a);
  uint32_t p = d_->p;
  return Fe{(p - a.c0) % p, (p - a.c1) % p, p, a.deg};
}

Fe Field::mul(const Fe& a, const Fe& b) const {
  ARTIN1_CHECK(a);
  ARTIN1_CHECK(b);
  uint32_t p = d_->p;
  if (d_->degree == 1) return Fe{mulp(a.c0, b.c0, p), 0, p, 1};
  // (a0 + a1 u)(b0 + b1 u) = (a0 b0 + n a1 b1) + (a0 b1 + a1 b0) u
  uint32_t c0 = static_cast<uint32_t>((uint64_t(a.c0) * b.c0 + uint64_t(d_->n) * mulp(a.c1, b.c1, p)) % p);
  uint32_t c1 = static_cast<uint32_t>((uint64_t(a.c0) * b.c1 + uint64_t(a.c1) * b.c0) % p);
  return Fe{c0, c1, p, 2};
}

Fe Field::inv(const Fe& a) const {
  ARTIN1_CHECK(a);
  if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
  uint32_t p = d_->p;
  if (d_->degree == 1)
    return Fe{static_cast<uint32_t>(powmod(a.c0, p - 2, p)), 0, p, 1};
  // z^-1 = conj(z) / Norm(z), Norm(z) = c0^2 - n c1^2 in F_p*
  uint32_t nrm = static_cast<uint32_t>((uint64_t(mulp(a.c0, a.c0, p)) + p -
                                        uint64_t(d_->n) * mulp(a.c1, a.c1, p) % p) %
                                       p);
  uint32_t ni = static_cast<uint32_t>(powmod(nrm, p - 2, p));
  return Fe{mulp(a.c0, ni, p), mulp((p - a.c1) % p, ni, p), p, 2};
}

Fe Field::div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }

Fe Field::pow(const Fe& a, uint64_t e) const {
  ARTIN1_CHECK(a);
  Fe r = one();
  Fe base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fe Field::norm(const Fe& z) const {
  ARTIN1_CHECK(z);
  if (d_->degree == 1) return z;
  uint32_t p = d_->p;
  uint32_t v = static_cast<uint32_t>((uint64_t(mulp(z.c0, z.c0, p)) + p -
                                      uint64_t(d_->n) * mulp(z.c1, z.c1, p) % p) %
                                     p);
  return Fe{v, 0, p, 2};  // lies in the prime subfield
}

int Field::chi(const Fe& a) const {
  ARTIN1_CHECK(a);
  if (a.c0 == 0 && a.c1 == 0) return 0;
  if (d_->tabled) return d_->chi[uint64_t(a.c0) + uint64_t(d_->p) * a.c1];
  if (d_->degree == 1) {
    uint64_t v = powmod(a.c0, (d_->p - 1) / 2, d_->p);
    return v == 1 ? 1 : -1;
  }
  return d_->chi_p[norm(a).c0];
}

std::optional<Fe> Field::cube_root(const Fe& z) const {
  ARTIN1_CHECK(z);
  if (is_zero(z)) fail(Errc::ZeroInput, "cube root of zero");
  uint64_t q = d_->q;
  if (q % 3 == 2) {
    // cube map is a bijection: the unique root is z^((2q-1)/3)
    return pow(z, (2 * q - 1) / 3);
  }
  Fe probe = pow(z, (q - 1) / 3);
  if (!(probe == one())) return std::nullopt;
  for (uint64_t i = 1; i < q; ++i) {  // smallest root in enumeration order
    Fe y = from_index(i);
    if (mul(mul(y, y), y) == z) return y;
  }
  fail(Errc::Internal, "cube root probe passed but no root found");
}

#undef ARTIN1_CHECK

}  // namespace artin1
