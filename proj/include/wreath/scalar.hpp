/**
 * Exact elements of the cyclotomic field Q(zeta_m).
 *
 * A `CycloNumber` is stored in canonical form: rational values (including
 * every element that happens to lie in Q) carry order 1 and a single
 * rational; everything else carries its order m and phi(m) coefficients
 * of a polynomial in zeta reduced modulo the m-th cyclotomic polynomial.
 * Rationals therefore embed into every Q(zeta_m), while combining two
 * irrational elements of different orders is an error.
 */
#ifndef WREATH_SCALAR_HPP
#define WREATH_SCALAR_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace wreath {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

struct OrderMismatch : std::domain_error
{
    using std::domain_error::domain_error;
};

struct ScalarParseError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/** Euler's totient. */
int totient(int m);

/** Integer coefficients of the m-th cyclotomic polynomial, lowest degree first. */
const std::vector<Rational>& cyclotomic_polynomial(int m);

class CycloNumber
{
  public:
    CycloNumber() = default;
    CycloNumber(int value) : rat_(value) {}
    CycloNumber(long value) : rat_(value) {}
    CycloNumber(const Rational& value) : rat_(value) {}
    CycloNumber(const Integer& num, const Integer& den) : rat_(num, den) {}

    /** The element sum_k coefficients[k] * zeta^k of Q(zeta_order), reduced. */
    static CycloNumber from_powers(int order, const std::vector<Rational>& coefficients);

    /** zeta_order^k. */
    static CycloNumber zeta(int order, long k = 1);

    /** Order of the smallest field this value was constructed in (1 for rationals). */
    int order() const { return order_; }
    bool is_rational() const { return order_ == 1; }
    bool is_zero() const { return order_ == 1 && rat_ == 0; }

    /** Rational value; throws if the element is irrational. */
    const Rational& rational() const;

    /** phi(m) coefficients in Q(zeta_m); m must be compatible with this value. */
    std::vector<Rational> coefficients(int m) const;

    CycloNumber inverse() const;

    CycloNumber& operator+=(const CycloNumber& other);
    CycloNumber& operator-=(const CycloNumber& other);
    CycloNumber& operator*=(const CycloNumber& other);
    CycloNumber& operator/=(const CycloNumber& other);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
    friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
    CycloNumber operator-() const;

    friend bool operator==(const CycloNumber& a, const CycloNumber& b)
    {
        return a.order_ == b.order_ && a.rat_ == b.rat_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    /** Text in the scalar grammar, e.g. `1/2 + 3*z^2`. */
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const CycloNumber& x);

  private:
    void normalize();
    static int common_order(const CycloNumber& a, const CycloNumber& b);

    int order_ = 1;
    Rational rat_ = 0;
    std::vector<Rational> poly_;   // only used when order_ > 1
};

using Scalar = CycloNumber;

/** Parse the scalar grammar; `z` denotes zeta_m. */
Scalar parse_scalar(std::string_view text, int m);

// Eigen scalar hooks (found by ADL)
inline const CycloNumber& conj(const CycloNumber& x) { return x; }
inline const CycloNumber& real(const CycloNumber& x) { return x; }
inline CycloNumber imag(const CycloNumber&) { return 0; }
inline CycloNumber abs2(const CycloNumber& x) { return x * x; }

}   // namespace wreath

namespace Eigen {

template <>
struct NumTraits<wreath::CycloNumber> : GenericNumTraits<wreath::CycloNumber>
{
    typedef wreath::CycloNumber Real;
    typedef wreath::CycloNumber NonInteger;
    typedef wreath::CycloNumber Nested;
    typedef wreath::CycloNumber Literal;

    enum
    {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}   // namespace Eigen

#endif
