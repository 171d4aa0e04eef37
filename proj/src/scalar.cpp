#include "cliff/scalar.hpp"

#include <stdexcept>

namespace cliff {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian rational");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  if (z.is_real()) return os << z.re_;
  if (sgn(z.re_) == 0) return os << z.im_ << "i";
  return os << "(" << z.re_ << (sgn(z.im_) < 0 ? "" : "+") << z.im_ << "i)";
}

std::optional<Exact> ScalarTraits<Exact>::sqrt(const Exact& s) {
  if (!s.is_real() || sgn(s.real()) < 0) return std::nullopt;
  const mpz_class& num = s.real().get_num();
  const mpz_class& den = s.real().get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn = ::sqrt(num);
  mpz_class rd = ::sqrt(den);
  return Exact(Rational(rn, rd));
}

}  // namespace cliff
