#include "wreath/scalar.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace wreath {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b)
{
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    trim(out);
    return out;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size())
        return {Poly{}, a};
    Poly q(a.size() - db, Rational(0));
    const Rational lead = b.back();
    for (std::size_t k = a.size(); k-- > db;)
    {
        if (a[k] == 0)
            continue;
        Rational c = a[k] / lead;
        q[k - db] = c;
        for (std::size_t t = 0; t <= db; ++t)
            a[k - db + t] -= c * b[t];
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly compute_cyclotomic(int m)
{
    // x^m - 1 divided by Phi_d for every proper divisor d of m
    Poly p(m + 1, Rational(0));
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
    {
        if (m % d == 0)
            p = poly_divmod(p, cyclotomic_polynomial(d)).first;
    }
    return p;
}

Poly reduce(const Poly& p, int m)
{
    Poly r = poly_divmod(p, cyclotomic_polynomial(m)).second;
    r.resize(totient(m), Rational(0));
    return r;
}

}   // namespace

int totient(int m)
{
    if (m < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    int result = m;
    int k = m;
    for (int p = 2; p * p <= k; ++p)
    {
        if (k % p == 0)
        {
            while (k % p == 0)
                k /= p;
            result -= result / p;
        }
    }
    if (k > 1)
        result -= result / k;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int m)
{
    static std::mutex lock;
    static std::map<int, Poly> cache;
    if (m < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = cache.find(m);
        if (it != cache.end())
            return it->second;
    }
    Poly p = compute_cyclotomic(m);
    std::lock_guard<std::mutex> guard(lock);
    return cache.emplace(m, std::move(p)).first->second;
}

CycloNumber CycloNumber::from_powers(int order, const std::vector<Rational>& coefficients)
{
    if (order < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    Poly folded(order, Rational(0));
    for (std::size_t k = 0; k < coefficients.size(); ++k)
        folded[k % order] += coefficients[k];
    CycloNumber out;
    out.order_ = order;
    out.poly_ = reduce(folded, order);
    out.normalize();
    return out;
}

CycloNumber CycloNumber::zeta(int order, long k)
{
    if (order < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    long e = ((k % order) + order) % order;
    std::vector<Rational> c(e + 1, Rational(0));
    c[e] = 1;
    return from_powers(order, c);
}

void CycloNumber::normalize()
{
    if (order_ == 1)
    {
        if (!poly_.empty())
            rat_ = poly_[0];
        poly_.clear();
        return;
    }
    rat_ = 0;
    for (std::size_t k = 1; k < poly_.size(); ++k)
    {
        if (poly_[k] != 0)
            return;
    }
    rat_ = poly_.empty() ? Rational(0) : poly_[0];
    poly_.clear();
    order_ = 1;
}

int CycloNumber::common_order(const CycloNumber& a, const CycloNumber& b)
{
    if (a.order_ == 1)
        return b.order_;
    if (b.order_ == 1 || a.order_ == b.order_)
        return a.order_;
    throw OrderMismatch("cannot combine elements of Q(zeta_" + std::to_string(a.order_) +
                        ") and Q(zeta_" + std::to_string(b.order_) + ")");
}

const Rational& CycloNumber::rational() const
{
    if (order_ != 1)
        throw std::domain_error("scalar " + str() + " is not rational");
    return rat_;
}

std::vector<Rational> CycloNumber::coefficients(int m) const
{
    std::vector<Rational> out(totient(m), Rational(0));
    if (order_ == 1)
    {
        out[0] = rat_;
        return out;
    }
    if (order_ != m)
        throw OrderMismatch("element of Q(zeta_" + std::to_string(order_) +
                            ") requested in Q(zeta_" + std::to_string(m) + ")");
    return poly_;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& other)
{
    int m = common_order(*this, other);
    if (m == 1)
    {
        rat_ += other.rat_;
        return *this;
    }
    Poly a = coefficients(m);
    Poly b = other.coefficients(m);
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] += b[k];
    order_ = m;
    poly_ = std::move(a);
    normalize();
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& other)
{
    return *this += -other;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& other)
{
    int m = common_order(*this, other);
    if (m == 1)
    {
        rat_ *= other.rat_;
        return *this;
    }
    if (other.order_ == 1)
    {
        for (auto& c : poly_)
            c *= other.rat_;
        normalize();
        return *this;
    }
    if (order_ == 1)
    {
        Rational r = rat_;
        *this = other;
        for (auto& c : poly_)
            c *= r;
        normalize();
        return *this;
    }
    Poly prod = poly_mul(poly_, other.poly_);
    poly_ = reduce(prod, m);
    order_ = m;
    normalize();
    return *this;
}

CycloNumber CycloNumber::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero");
    if (order_ == 1)
        return CycloNumber(Rational(1) / rat_);
    // extended Euclid: s * a + t * Phi = gcd, gcd a nonzero constant
    Poly r0 = cyclotomic_polynomial(order_);
    Poly r1 = poly_;
    trim(r1);
    Poly s0{}, s1{Rational(1)};
    while (r1.size() > 1)
    {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant because Phi_m is irreducible
    Rational c = r1.at(0);
    for (auto& x : s1)
        x /= c;
    return from_powers(order_, s1);
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& other)
{
    if (other.order_ == 1)
    {
        if (other.rat_ == 0)
            throw std::domain_error("division by zero");
        if (order_ == 1)
        {
            rat_ /= other.rat_;
            return *this;
        }
        for (auto& c : poly_)
            c /= other.rat_;
        return *this;
    }
    return *this *= other.inverse();
}

CycloNumber CycloNumber::operator-() const
{
    CycloNumber out = *this;
    out.rat_ = -out.rat_;
    for (auto& c : out.poly_)
        c = -c;
    return out;
}

std::string CycloNumber::str() const
{
    if (order_ == 1)
        return rat_.str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < poly_.size(); ++k)
    {
        const Rational& c = poly_[k];
        if (c == 0)
            continue;
        Rational shown = c;
        if (!first)
        {
            os << (c < 0 ? " - " : " + ");
            shown = abs(c);
        }
        if (k == 0)
            os << shown.str();
        else if (shown == 1)
            os << "z^" << k;
        else
            os << shown.str() << "*z^" << k;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& x)
{
    return os << x.str();
}

namespace {

class ScalarParser
{
  public:
    ScalarParser(std::string_view text, int m) : text_(text), m_(m), coeffs_(m, Rational(0)) {}

    Scalar parse()
    {
        skip();
        if (pos_ == text_.size())
            fail("empty scalar");
        int sign = 1;
        if (peek() == '+' || peek() == '-')
        {
            sign = take() == '-' ? -1 : 1;
            skip();
        }
        term(sign);
        skip();
        while (pos_ < text_.size())
        {
            char op = take();
            if (op != '+' && op != '-')
                fail("expected '+' or '-'");
            skip();
            term(op == '-' ? -1 : 1);
            skip();
        }
        return CycloNumber::from_powers(m_, coeffs_);
    }

  private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ScalarParseError("bad scalar '" + std::string(text_) + "': " + why);
    }

    Integer integer(bool allow_sign)
    {
        skip();
        std::string digits;
        if (allow_sign && (peek() == '-' || peek() == '+'))
            digits += take();
        while (std::isdigit(static_cast<unsigned char>(peek())))
            digits += take();
        if (digits.empty() || digits == "-" || digits == "+")
            fail("expected integer");
        if (digits[0] == '+')
            digits.erase(0, 1);
        return Integer(digits);
    }

    long power()
    {
        // after 'z'
        skip();
        if (peek() != '^')
            return 1;
        take();
        Integer k = integer(false);
        if (k > 1000000)
            fail("exponent too large");
        return k.convert_to<long>();
    }

    void term(int sign)
    {
        skip();
        Rational coefficient = 1;
        long exponent = 0;
        if (peek() == 'z')
        {
            take();
            exponent = power();
        }
        else
        {
            Integer num = integer(true);
            Integer den = 1;
            skip();
            if (peek() == '/')
            {
                take();
                den = integer(false);
                if (den == 0)
                    fail("zero denominator");
            }
            coefficient = Rational(num, den);
            skip();
            if (peek() == '*')
            {
                take();
                skip();
                if (peek() != 'z')
                    fail("expected 'z' after '*'");
                take();
                exponent = power();
            }
        }
        coeffs_[exponent % m_] += sign * coefficient;
    }

    std::string_view text_;
    int m_;
    std::vector<Rational> coeffs_;
    std::size_t pos_ = 0;
};

}   // namespace

Scalar parse_scalar(std::string_view text, int m)
{
    if (m < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    return ScalarParser(text, m).parse();
}

}   // namespace wreath
