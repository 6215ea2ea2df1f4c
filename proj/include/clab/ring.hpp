#pragma once

// Exact Laurent-polynomial and rational-function arithmetic in one
// variable over Q, plus a four-variable integer Laurent ring used by
// the Fox calculus.

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace clab {

using Int = mpz_class;
using Rat = mpq_class;

// Sparse Laurent polynomial with exact rational coefficients.
// Invariant: no stored zero coefficients; zero polynomial = empty map.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rat& c, int exp = 0);
    Laurent(long c, int exp);  // convenience for integer literals

    // monomial t^e
    static Laurent t(int exp = 1);
    // coefficients c[0], c[1], ... attached to exponents lo, lo+1, ...
    static Laurent from_coeffs(int lo, const std::vector<Rat>& c);

    bool is_zero() const { return c_.empty(); }
    // single nonzero term c*t^k (the units of Q[t,t^-1])
    bool is_unit() const { return c_.size() == 1; }

    int lo() const;    // lowest exponent, requires nonzero
    int hi() const;    // highest exponent, requires nonzero
    int span() const;  // hi - lo

    Rat coeff(int exp) const;
    const std::map<int, Rat>& terms() const { return c_; }

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return c_ != o.c_; }

    Laurent scaled(const Rat& s) const;
    Laurent shifted(int exp) const;  // * t^exp

    // t -> t^-1
    Laurent conj() const;
    // d/dt (formal)
    Laurent derivative() const;

    // evaluation at a nonzero rational point (negative exponents allowed)
    Rat eval_rat(const Rat& x) const;
    std::complex<double> eval(std::complex<double> z) const;
    // p(e^{2 pi i r})
    std::complex<double> eval_unit(const Rat& r) const;

    bool has_integer_coeffs() const;
    std::string str() const;

    void set(int exp, const Rat& c);  // inserts/overwrites, drops zeros

private:
    std::map<int, Rat> c_;
};

Laurent operator*(const Rat& s, const Laurent& p);

// u*p with u = +-t^k chosen so the lowest exponent is 0 and the
// constant term is positive.
Laurent normalize_units(const Laurent& p);
// positive rational multiple of normalize_units(p) with coprime
// integer coefficients (for display and cross-ring comparison)
Laurent primitive_integer(const Laurent& p);
// leading coefficient 1, lowest exponent 0
Laurent monic(const Laurent& p);
// equal up to a unit +-c*t^k
bool associated(const Laurent& a, const Laurent& b);

// a = q*b + r with span(r) < span(b) or r = 0
std::pair<Laurent, Laurent> divmod(const Laurent& a, const Laurent& b);
// monic gcd
Laurent gcd(const Laurent& a, const Laurent& b);
bool divides(const Laurent& d, const Laurent& a);
// requires divisibility
Laurent exact_div(const Laurent& a, const Laurent& d);
Laurent pow(const Laurent& p, unsigned e);

// Element of Q(t), stored reduced with the denominator normalized to
// lowest exponent 0 and leading coefficient 1.
class RationalFn {
public:
    RationalFn() : num_(), den_(Rat(1)) {}
    RationalFn(Laurent num, Laurent den);
    explicit RationalFn(const Laurent& p) : RationalFn(p, Laurent(Rat(1))) {}

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    // lies in Q[t,t^-1]
    bool is_polynomial() const { return den_.is_unit(); }

    RationalFn operator-() const;
    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn inv() const;
    RationalFn conj() const;
    bool operator==(const RationalFn& o) const
    { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    std::string str() const;

private:
    Laurent num_, den_;
};

RationalFn operator*(const Laurent& p, const RationalFn& f);

// Canonical coset representative of f in Q(t)/Q[t,t^-1]: the proper
// fractional part, zero exactly when f is a Laurent polynomial.
RationalFn reduce_mod_lambda(const RationalFn& f);

// Z[Z^4]: carrier for abelianized Fox derivatives of words in x1..x4.
class MultiLaurent {
public:
    using Exps = std::array<int, 4>;

    MultiLaurent() = default;
    static MultiLaurent monomial(const Exps& e, const Int& c = 1);
    static MultiLaurent constant(const Int& c);

    bool is_zero() const { return c_.empty(); }
    const std::map<Exps, Int>& terms() const { return c_; }

    MultiLaurent operator-() const;
    MultiLaurent operator+(const MultiLaurent& o) const;
    MultiLaurent operator-(const MultiLaurent& o) const;
    MultiLaurent operator*(const MultiLaurent& o) const;
    bool operator==(const MultiLaurent& o) const { return c_ == o.c_; }
    bool operator!=(const MultiLaurent& o) const { return c_ != o.c_; }

    std::string str() const;

private:
    std::map<Exps, Int> c_;
};

}  // namespace clab
