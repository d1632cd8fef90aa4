#include "artin1/poly.hpp"

namespace artin1 {

Poly::Poly(uint32_t p, std::vector<uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 5) fail(Errc::BadInput, "polynomial characteristic must be >= 5");
  for (auto& c : c_) c %= p_;
  normalize();
}

Poly Poly::monomial(uint32_t p, uint32_t c, uint32_t k) {
  std::vector<uint32_t> v(k + 1, 0);
  v[k] = c;
  return Poly(p, std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::add(const Poly& o) const {
  if (p_ != o.p_) fail(Errc::FieldMismatch, "polynomial characteristics differ");
  std::vector<uint32_t> out(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] = (out[i] + o.c_[i]) % p_;
  return Poly(p_, std::move(out));
}

Poly Poly::sub(const Poly& o) const { return add(o.scale(p_ - 1)); }

Poly Poly::mul(const Poly& o) const {
  if (p_ != o.p_) fail(Errc::FieldMismatch, "polynomial characteristics differ");
  if (is_zero() || o.is_zero()) return zero(p_);
  std::vector<uint32_t> out(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      out[i + j] = static_cast<uint32_t>((out[i + j] + uint64_t(c_[i]) * o.c_[j]) % p_);
  return Poly(p_, std::move(out));
}

Poly Poly::scale(uint32_t c) const {
  std::vector<uint32_t> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    out[i] = static_cast<uint32_t>(uint64_t(c_[i]) * (c % p_) % p_);
  return Poly(p_, std::move(out));
}

Fe Poly::eval(const Field& F, const Fe& t) const {
  if (F.p() != p_) fail(Errc::FieldMismatch, "evaluation field has different characteristic");
  Fe r = F.zero();
  for (size_t i = c_.size(); i-- > 0;) r = F.add(F.mul(r, t), F.element(c_[i]));
  return r;
}

std::pair<Poly, Poly> Poly::divmod_monic(const Poly& monic) const {
  if (p_ != monic.p_) fail(Errc::FieldMismatch, "polynomial characteristics differ");
  if (monic.is_zero() || monic.c_.back() != 1)
    fail(Errc::BadInput, "divisor must be monic and nonzero");
  const int dm = monic.degree();
  std::vector<uint32_t> rem = c_;
  std::vector<uint32_t> quot(c_.size() > size_t(dm) ? c_.size() - dm : 0, 0);
  int dr = static_cast<int>(rem.size()) - 1;
  while (dr >= dm) {
    uint32_t lead = rem[dr];
    if (lead != 0) {
      quot[dr - dm] = lead;
      for (int i = 0; i <= dm; ++i) {
        uint64_t sub = uint64_t(lead) * monic.c_[i] % p_;
        rem[dr - dm + i] = static_cast<uint32_t>((rem[dr - dm + i] + p_ - sub) % p_);
      }
    }
    --dr;
  }
  return {Poly(p_, std::move(quot)), Poly(p_, std::move(rem))};
}

Poly Poly::exact_div(const Poly& monic) const {
  auto [q, r] = divmod_monic(monic);
  if (!r.is_zero()) fail(Errc::Internal, "exact_div left a nonzero remainder");
  return q;
}

int Poly::valuation(const Poly& monic) const {
  if (is_zero()) return kValInfinity;
  int v = 0;
  Poly cur = *this;
  while (true) {
    auto [q, r] = cur.divmod_monic(monic);
    if (!r.is_zero()) return v;
    ++v;
    cur = std::move(q);
    if (cur.is_zero()) return v;  // defensive: cannot happen for nonzero input
  }
}

Poly Poly::reverse_window(uint32_t window) const {
  if (degree() > static_cast<int>(window)) fail(Errc::BadInput, "degree exceeds reversal window");
  std::vector<uint32_t> out(window + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) out[window - i] = c_[i];
  return Poly(p_, std::move(out));
}

}  // namespace artin1
