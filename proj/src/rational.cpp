#include "rational.hpp"

#include <climits>
#include <stdexcept>

namespace genera {

namespace {

mpz_class mpz_from_ll(long long v) {
    if (v >= LONG_MIN && v <= LONG_MAX)
        return mpz_class(static_cast<long>(v));
    return mpz_class(std::to_string(v));
}

}  // namespace

Rational::Rational(long long n) : v_(mpz_from_ll(n)) {}

Rational::Rational(long long num, long long den) {
    if (den == 0)
        throw std::domain_error("rational: division by zero");
    mpq_class q(mpz_from_ll(num));
    q /= mpq_class(mpz_from_ll(den));
    v_ = std::move(q);
}

Rational Rational::from_string(std::string_view s) {
    // Strict shape: -?digits(/digits)?  with a positive denominator.
    auto bad = [&] {
        return std::domain_error("rational: cannot parse \"" + std::string(s) + "\"");
    };
    if (s.empty())
        throw bad();
    std::size_t i = 0;
    if (s[0] == '-')
        i = 1;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        ++i;
        ++digits;
    }
    if (digits == 0)
        throw bad();
    std::size_t den_digits = 0;
    if (i < s.size()) {
        if (s[i] != '/')
            throw bad();
        ++i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            ++i;
            ++den_digits;
        }
        if (den_digits == 0 || i != s.size())
            throw bad();
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
        throw bad();
    if (sgn(q.get_den()) == 0)
        throw std::domain_error("rational: zero denominator in \"" + std::string(s) + "\"");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero())
        throw std::domain_error("rational: division by zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(mpq_class(v_ + o.v_));
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(mpq_class(v_ - o.v_));
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(mpq_class(v_ * o.v_));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero())
        throw std::domain_error("rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    int c = cmp(v_, o.v_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::binomial(long long n, unsigned long k) {
    mpz_class nz = mpz_from_ll(n);
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), nz.get_mpz_t(), k);
    return Rational(mpq_class(r));
}

}  // namespace genera
