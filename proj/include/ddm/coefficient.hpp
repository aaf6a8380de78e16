#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ddm {

/// Exact Gaussian rational re + im*i backed by GMP rationals.
///
/// Textual form: "3/2", "-1", "2i", "-3/2i" (meaning -(3/2)i), "i", "1+2i", "1/2-i".
/// to_string() and parse() round-trip exactly.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Coefficient(mpq_class re, mpq_class im = 0);

  const mpq_class& real() const noexcept { return re_; }
  const mpq_class& imag() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Coefficient conj() const { return Coefficient(re_, -im_); }

  Coefficient& operator+=(const Coefficient& other);
  Coefficient& operator-=(const Coefficient& other);
  Coefficient& operator*=(const Coefficient& other);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator-(const Coefficient& a) { return Coefficient(-a.re_, -a.im_); }
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

  /// Throws Error(ParseError) on malformed text; the caller supplies location context.
  static Coefficient parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace ddm
