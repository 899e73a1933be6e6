#include "perv/rational.hpp"

#include <cctype>
#include <ostream>

#include "perv/errors.hpp"

namespace perv {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::BadRational: return "BadRational";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::CommutativityViolation: return "CommutativityViolation";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::UnitViolation: return "UnitViolation";
    case ErrorKind::GradeOutOfRange: return "GradeOutOfRange";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
    case ErrorKind::ForeignVector: return "ForeignVector";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::MissingProduct: return "MissingProduct";
    case ErrorKind::NoIntegral: return "NoIntegral";
    case ErrorKind::DegeneratePairing: return "DegeneratePairing";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::RepeatedLabel: return "RepeatedLabel";
    case ErrorKind::ZeroMultiplicity: return "ZeroMultiplicity";
    case ErrorKind::MissingGenus: return "MissingGenus";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::BadInvocation: return "BadInvocation";
    }
    return "Error";
}

Rational::Rational(long n, long d) {
    if (d == 0)
        throw Error(ErrorKind::BadRational, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    // strict grammar: -?digits(/digits)?, denominator nonzero
    const std::string s(text);
    const auto bad = [&] {
        return Error(ErrorKind::BadRational, "'" + s + "' is not an integer or p/q rational");
    };
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-')
        ++i;
    const std::size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (i == num_start)
        throw bad();
    const std::string num = s.substr(0, i);
    std::string den = "1";
    if (i < s.size()) {
        if (s[i] != '/')
            throw bad();
        const std::size_t den_start = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == den_start || i != s.size())
            throw bad();
        den = s.substr(den_start);
    }
    mpz_class d(den);
    if (d == 0)
        throw Error(ErrorKind::BadRational, "'" + s + "' has zero denominator");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error(ErrorKind::BadRational, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace perv
