#include "lyndon/bigarith.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lyndon {

static_assert(GMP_NAIL_BITS == 0, "nail bits are not supported");
static_assert(GMP_NUMB_BITS == 64, "64-bit limbs expected");

BigCount::BigCount(const mpz_class& v) : value_(v) {
  if (sgn(value_) < 0) throw std::underflow_error("BigCount must be nonnegative");
}

BigCount BigCount::from_decimal(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  }
  return BigCount(mpz_class(std::string(text), 10));
}

BigCount BigCount::pow(unsigned long base, unsigned long exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return BigCount(r);
}

unsigned long BigCount::to_ulong() const {
  if (!fits_ulong()) throw std::overflow_error("BigCount does not fit a machine word");
  return value_.get_ui();
}

BigCount& BigCount::operator-=(const BigCount& o) {
  if (cmp(value_, o.value_) < 0) throw std::underflow_error("BigCount subtraction below zero");
  value_ -= o.value_;
  return *this;
}

BigCount BigCount::exact_divide(const BigCount& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(value_.get_mpz_t(), divisor.value_.get_mpz_t())) {
    throw std::domain_error("inexact division");
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return BigCount(q);
}

BigCount BigCount::div_floor(const BigCount& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return BigCount(q);
}

BigCount BigCount::mod(const BigCount& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return BigCount(r);
}

Polynomial Polynomial::truncated(std::size_t m) const {
  Polynomial out(m);
  std::copy_n(coeffs.begin(), std::min(m, coeffs.size()), out.coeffs.begin());
  return out;
}

namespace kronecker {

namespace {

constexpr std::size_t kLimbBits = GMP_NUMB_BITS;

std::size_t bit_length(const mpz_class& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::size_t max_bit_length(std::span<const mpz_class> c) {
  std::size_t best = 0;
  for (const auto& v : c) best = std::max(best, bit_length(v));
  return best;
}

mpz_class from_limbs(std::span<const mp_limb_t> limbs) {
  mpz_class out;
  if (!limbs.empty()) mpz_import(out.get_mpz_t(), limbs.size(), -1, sizeof(mp_limb_t), 0, 0, limbs.data());
  return out;
}

}  // namespace

std::size_t chunk_width(std::size_t bits_f, std::size_t bits_g, std::size_t len_f, std::size_t len_g) {
  const std::size_t terms = std::min(len_f, len_g);
  const std::size_t log_terms = terms <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(terms - 1));
  return bits_f + bits_g + log_terms + 1;
}

mpz_class pack(std::span<const mpz_class> coeffs, std::size_t width) {
  if (width == 0) throw std::invalid_argument("chunk width must be positive");
  const std::size_t total_bits = coeffs.size() * width;
  std::vector<mp_limb_t> buf(total_bits / kLimbBits + 2, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const mpz_srcptr c = coeffs[i].get_mpz_t();
    if (mpz_sgn(c) < 0) throw std::invalid_argument("pack: negative coefficient");
    if (mpz_sgn(c) != 0 && mpz_sizeinbase(c, 2) > width) throw std::invalid_argument("pack: coefficient too wide");
    const std::size_t offset = i * width;
    const std::size_t base = offset / kLimbBits;
    const unsigned shift = static_cast<unsigned>(offset % kLimbBits);
    const std::size_t nlimbs = mpz_size(c);
    for (std::size_t t = 0; t < nlimbs; ++t) {
      const mp_limb_t limb = mpz_getlimbn(c, static_cast<mp_size_t>(t));
      buf[base + t] |= limb << shift;
      if (shift != 0) buf[base + t + 1] |= limb >> (kLimbBits - shift);
    }
  }
  return from_limbs(buf);
}

std::vector<mpz_class> unpack(const mpz_class& packed, std::size_t width, std::size_t count) {
  if (width == 0) throw std::invalid_argument("chunk width must be positive");
  const mpz_srcptr p = packed.get_mpz_t();
  if (mpz_sgn(p) < 0) throw std::invalid_argument("unpack: negative input");
  const std::size_t size = mpz_size(p);
  const mp_limb_t* limbs = mpz_limbs_read(p);
  auto limb_at = [&](std::size_t idx) -> mp_limb_t { return idx < size ? limbs[idx] : 0; };

  const std::size_t chunk_limbs = (width + kLimbBits - 1) / kLimbBits;
  const unsigned tail_bits = static_cast<unsigned>(width % kLimbBits);
  std::vector<mp_limb_t> tmp(chunk_limbs);
  std::vector<mpz_class> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t offset = i * width;
    const std::size_t base = offset / kLimbBits;
    if (base >= size) break;
    const unsigned shift = static_cast<unsigned>(offset % kLimbBits);
    for (std::size_t t = 0; t < chunk_limbs; ++t) {
      mp_limb_t v = limb_at(base + t) >> shift;
      if (shift != 0) v |= limb_at(base + t + 1) << (kLimbBits - shift);
      tmp[t] = v;
    }
    if (tail_bits != 0) tmp[chunk_limbs - 1] &= (mp_limb_t{1} << tail_bits) - 1;
    out[i] = from_limbs(tmp);
  }
  return out;
}

std::vector<mpz_class> multiply_nonnegative(std::span<const mpz_class> f, std::span<const mpz_class> g) {
  if (f.empty() || g.empty()) return {};
  const std::size_t result_len = f.size() + g.size() - 1;
  const std::size_t bf = max_bit_length(f);
  const std::size_t bg = max_bit_length(g);
  if (bf == 0 || bg == 0) return std::vector<mpz_class>(result_len);
  const std::size_t width = chunk_width(bf, bg, f.size(), g.size());
  const mpz_class product = pack(f, width) * pack(g, width);
  return unpack(product, width, result_len);
}

}  // namespace kronecker

namespace {

struct SignSplit {
  std::vector<mpz_class> pos;
  std::vector<mpz_class> neg;
  bool has_pos = false;
  bool has_neg = false;
};

SignSplit split_signs(const std::vector<mpz_class>& c) {
  SignSplit s{std::vector<mpz_class>(c.size()), std::vector<mpz_class>(c.size())};
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int sign = sgn(c[i]);
    if (sign > 0) {
      s.pos[i] = c[i];
      s.has_pos = true;
    } else if (sign < 0) {
      s.neg[i] = -c[i];
      s.has_neg = true;
    }
  }
  return s;
}

void accumulate(std::vector<mpz_class>& acc, const std::vector<mpz_class>& part, bool subtract) {
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (subtract) {
      acc[i] -= part[i];
    } else {
      acc[i] += part[i];
    }
  }
}

}  // namespace

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  if (f.size() == 0 || g.size() == 0) return Polynomial{};
  Polynomial out(f.size() + g.size() - 1);
  const SignSplit sf = split_signs(f.coeffs);
  const SignSplit sg = split_signs(g.coeffs);
  if (sf.has_pos && sg.has_pos) accumulate(out.coeffs, kronecker::multiply_nonnegative(sf.pos, sg.pos), false);
  if (sf.has_pos && sg.has_neg) accumulate(out.coeffs, kronecker::multiply_nonnegative(sf.pos, sg.neg), true);
  if (sf.has_neg && sg.has_pos) accumulate(out.coeffs, kronecker::multiply_nonnegative(sf.neg, sg.pos), true);
  if (sf.has_neg && sg.has_neg) accumulate(out.coeffs, kronecker::multiply_nonnegative(sf.neg, sg.neg), false);
  return out;
}

Polynomial poly_mul_truncated(const Polynomial& f, const Polynomial& g, std::size_t m) {
  if (m == 0) return Polynomial{};
  return poly_mul(f.truncated(std::min(m, f.size())), g.truncated(std::min(m, g.size()))).truncated(m);
}

Polynomial series_inverse(const Polynomial& h, std::size_t m) {
  if (h.size() == 0 || h[0] != 1) throw std::invalid_argument("series_inverse: constant term must be 1");
  if (m == 0) return Polynomial{};
  Polynomial f(std::vector<mpz_class>{1});
  std::size_t k = 1;
  while (k < m) {
    const std::size_t next = std::min(2 * k, m);
    // f <- f * (2 - h*f) mod x^next
    Polynomial correction = poly_mul_truncated(h, f, next);
    for (auto& c : correction.coeffs) c = -c;
    correction[0] += 2;
    f = poly_mul_truncated(f, correction, next);
    k = next;
  }
  return f;
}

}  // namespace lyndon
