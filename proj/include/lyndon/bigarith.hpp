#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lyndon {

/// Arbitrary-precision nonnegative integer. Subtraction below zero throws
/// std::underflow_error; exact division with a remainder throws
/// std::domain_error.
class BigCount {
 public:
  BigCount() = default;
  BigCount(unsigned long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigCount(const mpz_class& v);

  static BigCount from_decimal(std::string_view text);
  static BigCount pow(unsigned long base, unsigned long exponent);

  const mpz_class& value() const noexcept { return value_; }
  std::string to_string() const { return value_.get_str(10); }
  bool fits_ulong() const { return value_.fits_ulong_p() != 0; }
  unsigned long to_ulong() const;
  bool is_zero() const { return sgn(value_) == 0; }

  BigCount& operator+=(const BigCount& o) { value_ += o.value_; return *this; }
  BigCount& operator-=(const BigCount& o);
  BigCount& operator*=(const BigCount& o) { value_ *= o.value_; return *this; }

  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

  BigCount exact_divide(const BigCount& divisor) const;
  /// floor(this / divisor) and this mod divisor.
  BigCount div_floor(const BigCount& divisor) const;
  BigCount mod(const BigCount& divisor) const;

  friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_;
};

/// Truncated power series / polynomial with signed big-integer coefficients.
/// coeffs[k] is the coefficient of x^k; the length is explicit, trailing
/// zeros are kept.
struct Polynomial {
  std::vector<mpz_class> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<mpz_class> c) : coeffs(std::move(c)) {}
  explicit Polynomial(std::size_t length) : coeffs(length) {}

  std::size_t size() const noexcept { return coeffs.size(); }
  const mpz_class& operator[](std::size_t k) const { return coeffs[k]; }
  mpz_class& operator[](std::size_t k) { return coeffs[k]; }

  /// First m coefficients, zero-padded when m > size().
  Polynomial truncated(std::size_t m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs == b.coeffs; }
};

namespace kronecker {

/// Packs nonnegative coefficients into one integer, coefficient i occupying
/// bits [i*width, (i+1)*width). Every coefficient must be < 2^width.
mpz_class pack(std::span<const mpz_class> coeffs, std::size_t width);

/// Inverse of pack: reads `count` chunks of `width` bits.
std::vector<mpz_class> unpack(const mpz_class& packed, std::size_t width, std::size_t count);

/// Product of two nonnegative coefficient sequences by a single big-integer
/// multiplication.
std::vector<mpz_class> multiply_nonnegative(std::span<const mpz_class> f, std::span<const mpz_class> g);

/// Chunk width used by multiply_nonnegative for operands with the given
/// maximal coefficient bit lengths and lengths.
std::size_t chunk_width(std::size_t bits_f, std::size_t bits_g, std::size_t len_f, std::size_t len_g);

}  // namespace kronecker

/// Exact product, length size(f)+size(g)-1 (empty if either is empty).
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// poly_mul(f mod x^m, g mod x^m) mod x^m, length m.
Polynomial poly_mul_truncated(const Polynomial& f, const Polynomial& g, std::size_t m);

/// f with f*h = 1 (mod x^m) by Newton doubling. h[0] must be 1.
Polynomial series_inverse(const Polynomial& h, std::size_t m);

}  // namespace lyndon
