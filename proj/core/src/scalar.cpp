#include <laurentcalc/scalar.hpp>

#include <laurentcalc/error.hpp>

namespace lc
{

bool GaussianRational::is_integer() const
{
    return is_real() && m_re.get_den() == 1;
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero()) {
        throw precondition_error("division_by_zero", "inverse of zero");
    }
    const Rational n = norm2();
    return {m_re / n, -m_im / n};
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o)
{
    m_re += o.m_re;
    m_im += o.m_im;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o)
{
    m_re -= o.m_re;
    m_im -= o.m_im;
    return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o)
{
    if (is_real() && o.is_real()) {
        m_re *= o.m_re;
        return *this;
    }
    Rational re = m_re * o.m_re - m_im * o.m_im;
    Rational im = m_re * o.m_im + m_im * o.m_re;
    m_re = std::move(re);
    m_im = std::move(im);
    return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o)
{
    if (o.is_zero()) {
        throw precondition_error("division_by_zero", "division by zero");
    }
    if (o.is_real()) {
        m_re /= o.m_re;
        m_im /= o.m_re;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational &a, const GaussianRational &b)
{
    const int c = cmp(a.m_re, b.m_re);
    if (c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const int d = cmp(a.m_im, b.m_im);
    if (d != 0) {
        return d < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string rational_to_string(const Rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s)
{
    if (s.empty()) {
        throw parse_error("empty rational");
    }
    std::string str(s);
    const auto slash = str.find('/');
    auto check_int = [&](const std::string &t) {
        std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (start >= t.size()) {
            throw parse_error("malformed rational '" + str + "'");
        }
        for (std::size_t k = start; k < t.size(); ++k) {
            if (t[k] < '0' || t[k] > '9') {
                throw parse_error("malformed rational '" + str + "'");
            }
        }
    };
    std::string num = slash == std::string::npos ? str : str.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : str.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    mpz_class n(num), d(den);
    if (d == 0) {
        throw parse_error("zero denominator in '" + str + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string GaussianRational::to_string() const
{
    if (is_real()) {
        return rational_to_string(m_re);
    }
    std::string out = rational_to_string(m_re);
    if (sgn(m_im) < 0) {
        out += " - " + rational_to_string(-m_im) + " i";
    } else {
        out += " + " + rational_to_string(m_im) + " i";
    }
    return out;
}

GaussianRational GaussianRational::parse(std::string_view s)
{
    std::string t;
    for (char c : s) {
        if (c != ' ' && c != '\t') {
            t.push_back(c);
        }
    }
    if (t.empty()) {
        throw parse_error("empty scalar");
    }
    if (t.back() != 'i') {
        return GaussianRational(parse_rational(t));
    }
    t.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if (t[k] == '+' || t[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? "0" : t.substr(0, split);
    std::string im_part = split == std::string::npos ? t : t.substr(split);
    if (im_part.empty() || im_part == "+") {
        im_part = "1";
    } else if (im_part == "-") {
        im_part = "-1";
    }
    return {parse_rational(re_part), parse_rational(im_part)};
}

Scalar pow(const Scalar &x, unsigned k)
{
    Scalar r(1), b = x;
    while (k) {
        if (k & 1u) {
            r *= b;
        }
        k >>= 1u;
        if (k) {
            b *= b;
        }
    }
    return r;
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &z)
{
    return os << z.to_string();
}

} // namespace lc
