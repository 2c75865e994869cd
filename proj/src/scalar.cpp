#include <craut/scalar.hpp>

#include <ostream>
#include <stdexcept>

namespace craut {

Scalar& Scalar::operator*=(const Scalar& o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    Rational den = o.norm2();
    if (sgn(den) == 0) throw std::domain_error("Scalar: division by zero");
    Rational re = (re_ * o.re_ + im_ * o.im_) / den;
    Rational im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string to_string(const Rational& value)
{
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Scalar& s)
{
    if (s.is_real()) return to_string(s.re());
    std::string out;
    if (sgn(s.re()) != 0) out = to_string(s.re()) + (sgn(s.im()) > 0 ? "+" : "");
    return out + to_string(s.im()) + "*i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

Rational parse_rational(std::string_view text)
{
    auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::size_t start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
    if (num.size() == start) throw bad();
    for (std::size_t k = start; k < num.size(); ++k)
        if (num[k] < '0' || num[k] > '9') throw bad();
    Integer n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    Integer d = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (den.empty()) throw bad();
        for (char c : den)
            if (c < '0' || c > '9') throw bad();
        d = Integer(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

} // namespace craut
