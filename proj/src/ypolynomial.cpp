#include "ypolynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace genera {

void YPolynomial::set_from(std::vector<Rational> coefficients) {
    while (!coefficients.empty() && coefficients.back().is_zero())
        coefficients.pop_back();
    c_ = std::move(coefficients);
}

YPolynomial YPolynomial::from_coefficients(std::vector<Rational> coefficients) {
    YPolynomial p;
    p.set_from(std::move(coefficients));
    return p;
}

YPolynomial YPolynomial::y() {
    YPolynomial p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

std::optional<int> YPolynomial::degree() const {
    if (c_.empty())
        return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

Rational YPolynomial::coeff(int k) const {
    if (k < 0)
        throw std::out_of_range("polynomial: negative power of y");
    if (static_cast<std::size_t>(k) >= c_.size())
        return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

YPolynomial YPolynomial::inverse() const {
    if (!is_unit())
        throw std::domain_error("polynomial: only nonzero constants are invertible in Q[y]");
    return YPolynomial(c_[0].inverse());
}

YPolynomial YPolynomial::operator-() const {
    YPolynomial r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_)
        r.c_.push_back(-c);
    return r;
}

YPolynomial YPolynomial::operator+(const YPolynomial& o) const {
    std::vector<Rational> s(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        s[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        s[i] += o.c_[i];
    return from_coefficients(std::move(s));
}

YPolynomial YPolynomial::operator-(const YPolynomial& o) const {
    return *this + (-o);
}

YPolynomial YPolynomial::operator*(const YPolynomial& o) const {
    if (c_.empty() || o.c_.empty())
        return YPolynomial();
    std::vector<Rational> s(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            s[i + j] += c_[i] * o.c_[j];
    return from_coefficients(std::move(s));
}

YPolynomial YPolynomial::scaled(const Rational& q) const {
    if (q.is_zero())
        return YPolynomial();
    YPolynomial r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_)
        r.c_.push_back(c * q);
    return r;
}

Rational YPolynomial::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

std::string YPolynomial::str() const {
    if (c_.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero())
            continue;
        Rational a = c;
        if (out.empty()) {
            if (c.sign() < 0) {
                out += "-";
                a = -c;
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0)
                a = -c;
        }
        std::string mag = a.str();
        if (k == 0) {
            out += mag;
        } else {
            if (mag != "1")
                out += mag + "*";
            out += k == 1 ? "y" : "y^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace genera
