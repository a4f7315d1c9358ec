#include "nubex/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace nubex {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// optional leading '-' followed by at least one digit
bool signed_digits(const std::string& s) {
    if (s.empty()) return false;
    return s[0] == '-' ? all_digits(s.substr(1)) : all_digits(s);
}

[[noreturn]] void bad(const std::string& text, const char* why) {
    throw std::invalid_argument("malformed rational '" + text + "': " + why);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::pow(const Rational& base, unsigned long exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den_mpz_t(), exp);
    mpq_class r(num);
    r /= mpq_class(den);
    return Rational(std::move(r));
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) bad(text, "empty string");

    if (auto slash = text.find('/'); slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!signed_digits(num)) bad(text, "numerator is not an integer");
        if (!all_digits(den)) bad(text, "denominator is not a positive integer");
        mpz_class d(den, 10);
        if (d == 0) bad(text, "zero denominator");
        mpq_class q(mpz_class(num, 10), d);
        q.canonicalize();
        return Rational(std::move(q));
    }

    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string ip = text.substr(0, dot);
        const std::string fp = text.substr(dot + 1);
        bool neg = false;
        if (!ip.empty() && ip[0] == '-') { neg = true; ip.erase(0, 1); }
        if (!all_digits(ip) || !all_digits(fp)) bad(text, "not a finite decimal");
        mpz_class scaled(ip + fp, 10);  // ip.fp == (ip concat fp) / 10^|fp|
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        mpq_class q(neg ? mpz_class(-scaled) : scaled, den);
        q.canonicalize();
        return Rational(std::move(q));
    }

    if (!signed_digits(text)) bad(text, "not an integer, fraction, or finite decimal");
    return Rational(mpq_class(mpz_class(text, 10)));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nubex
