#include "ddm/coefficient.hpp"

#include <cctype>

#include "ddm/error.hpp"

namespace ddm {

namespace {

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "bad coefficient '" + std::string(text) + "': " + why);
}

// Unsigned rational "p" or "p/q" with decimal digits only.
mpq_class parse_unsigned_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) bad(whole, "missing number");
  auto slash = text.find('/');
  auto digits = [&](std::string_view part) {
    if (part.empty()) bad(whole, "missing digits");
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) bad(whole, "unexpected character");
    }
  };
  digits(text.substr(0, slash));
  if (slash != std::string_view::npos) digits(text.substr(slash + 1));
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) bad(whole, "not a rational");
  if (sgn(q.get_den()) == 0) bad(whole, "zero denominator");
  q.canonicalize();
  return q;
}

// One signed part "[-+]p[/q][i]" or "[-+]i".
void add_part(std::string_view part, std::string_view whole, mpq_class& re, mpq_class& im) {
  bool negative = false;
  if (!part.empty() && (part.front() == '+' || part.front() == '-')) {
    negative = part.front() == '-';
    part.remove_prefix(1);
  }
  bool imaginary = !part.empty() && part.back() == 'i';
  if (imaginary) part.remove_suffix(1);
  mpq_class value = (imaginary && part.empty()) ? mpq_class(1) : parse_unsigned_rational(part, whole);
  if (negative) value = -value;
  (imaginary ? im : re) += value;
}

std::string unsigned_text(const mpq_class& q) {
  mpq_class a = abs(q);
  return a.get_str();
}

}  // namespace

Coefficient::Coefficient(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& other) {
  mpq_class re = re_ * other.re_ - im_ * other.im_;
  mpq_class im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Coefficient::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  if (abs(im_) != 1) out += unsigned_text(im_);
  out += 'i';
  return out;
}

Coefficient Coefficient::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  std::string_view s = compact;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) bad(text, "empty");
  // Split at a sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] == '+' || s[k] == '-') {
      if (split != std::string_view::npos) bad(text, "too many terms");
      split = k;
    }
  }
  mpq_class re = 0;
  mpq_class im = 0;
  if (split == std::string_view::npos) {
    add_part(s, text, re, im);
  } else {
    std::string_view first = s.substr(0, split);
    std::string_view second = s.substr(split);
    if (first.back() == 'i' || second.back() != 'i') bad(text, "expected real+imaginary order");
    add_part(first, text, re, im);
    add_part(second, text, re, im);
  }
  return Coefficient(re, im);
}

}  // namespace ddm
