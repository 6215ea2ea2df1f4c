#include "clab/ring.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace clab {

Laurent::Laurent(const Rat& c, int exp) {
    if (c != 0) c_[exp] = c;
}

Laurent::Laurent(long c, int exp) {
    if (c != 0) c_[exp] = Rat(c);
}

Laurent Laurent::t(int exp) { return Laurent(Rat(1), exp); }

Laurent Laurent::from_coeffs(int lo, const std::vector<Rat>& c) {
    Laurent p;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) p.c_[lo + static_cast<int>(i)] = c[i];
    return p;
}

int Laurent::lo() const {
    if (is_zero()) throw std::domain_error("lo() of zero polynomial");
    return c_.begin()->first;
}

int Laurent::hi() const {
    if (is_zero()) throw std::domain_error("hi() of zero polynomial");
    return c_.rbegin()->first;
}

int Laurent::span() const { return hi() - lo(); }

Rat Laurent::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rat(0) : it->second;
}

void Laurent::set(int exp, const Rat& c) {
    if (c == 0)
        c_.erase(exp);
    else
        c_[exp] = c;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.c_) r.set(e, r.coeff(e) + c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.c_) r.set(e, r.coeff(e) - c);
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

Laurent Laurent::scaled(const Rat& s) const {
    Laurent r;
    if (s == 0) return r;
    for (auto& [e, c] : c_) r.c_[e] = c * s;
    return r;
}

Laurent Laurent::shifted(int exp) const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[e + exp] = c;
    return r;
}

Laurent Laurent::conj() const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

Laurent Laurent::derivative() const {
    Laurent r;
    for (auto& [e, c] : c_)
        if (e != 0) r.c_[e - 1] = c * e;
    return r;
}

Rat Laurent::eval_rat(const Rat& x) const {
    if (x == 0) throw std::domain_error("eval_rat at 0 for Laurent polynomial");
    Rat acc(0);
    for (auto& [e, c] : c_) {
        Rat p(1);
        Rat base = e >= 0 ? x : Rat(1) / x;
        for (int i = 0; i < std::abs(e); ++i) p *= base;
        acc += c * p;
    }
    return acc;
}

std::complex<double> Laurent::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto& [e, c] : c_)
        acc += c.get_d() * std::pow(z, static_cast<double>(e));
    return acc;
}

std::complex<double> Laurent::eval_unit(const Rat& r) const {
    double theta = 2.0 * std::numbers::pi * r.get_d();
    return eval(std::polar(1.0, theta));
}

bool Laurent::has_integer_coeffs() const {
    for (auto& [e, c] : c_)
        if (c.get_den() != 1) return false;
    return true;
}

Laurent operator*(const Rat& s, const Laurent& p) { return p.scaled(s); }

Laurent normalize_units(const Laurent& p) {
    if (p.is_zero()) throw std::domain_error("normalize_units of zero");
    Laurent q = p.shifted(-p.lo());
    if (q.coeff(0) < 0) q = -q;
    return q;
}

Laurent primitive_integer(const Laurent& p) {
    if (p.is_zero()) throw std::domain_error("primitive_integer of zero");
    Int den_lcm = 1, num_gcd = 0;
    for (auto& [e, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                c.get_num().get_mpz_t());
    }
    Rat s = Rat(den_lcm) / Rat(num_gcd);
    return normalize_units(p.scaled(s));
}

Laurent monic(const Laurent& p) {
    if (p.is_zero()) throw std::domain_error("monic of zero");
    Laurent q = p.shifted(-p.lo());
    return q.scaled(Rat(1) / q.coeff(q.hi()));
}

bool associated(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return monic(a) == monic(b);
}

std::pair<Laurent, Laurent> divmod(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Laurent q, r = a;
    while (!r.is_zero() && r.span() >= b.span()) {
        int e = r.hi() - b.hi();
        Rat c = r.coeff(r.hi()) / b.coeff(b.hi());
        Laurent m(c, e);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

Laurent gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd(0,0) undefined");
    Laurent x = a, y = b;
    while (!y.is_zero()) {
        Laurent r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return monic(x);
}

bool divides(const Laurent& d, const Laurent& a) {
    if (d.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    return divmod(a, d).second.is_zero();
}

Laurent exact_div(const Laurent& a, const Laurent& d) {
    auto [q, r] = divmod(a, d);
    if (!r.is_zero()) throw std::domain_error("exact_div: not divisible");
    return q;
}

Laurent pow(const Laurent& p, unsigned e) {
    Laurent r(Rat(1));
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : c_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1) && e != 0;
        if (!unit_coeff) os << a.get_str();
        if (e != 0) {
            if (!unit_coeff) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

RationalFn::RationalFn(Laurent num, Laurent den) {
    if (den.is_zero()) throw std::domain_error("RationalFn with zero denominator");
    if (num.is_zero()) {
        num_ = Laurent();
        den_ = Laurent(Rat(1));
        return;
    }
    Laurent g = gcd(num, den);
    num = exact_div(num, g);
    den = exact_div(den, g);
    // normalize denominator: lowest exponent 0, leading coefficient 1
    Rat lead = den.coeff(den.hi());
    int sh = den.lo();
    den_ = den.shifted(-sh).scaled(Rat(1) / lead);
    num_ = num.shifted(-sh).scaled(Rat(1) / lead);
}

RationalFn RationalFn::operator-() const {
    RationalFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::conj() const {
    return RationalFn(num_.conj(), den_.conj());
}

RationalFn operator*(const Laurent& p, const RationalFn& f) {
    return RationalFn(p) * f;
}

std::string RationalFn::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFn reduce_mod_lambda(const RationalFn& f) {
    if (f.is_polynomial()) return RationalFn();
    const Laurent& d = f.den();  // normalized: lowest exponent 0, d(0) != 0
    int n = d.span();
    // canonical residue of the numerator modulo d*Lambda': the unique
    // representative supported on exponents 0..span(d)-1
    Laurent r = f.num();
    while (!r.is_zero() && (r.hi() >= n || r.lo() < 0)) {
        if (r.hi() >= n) {
            Rat c = r.coeff(r.hi()) / d.coeff(n);
            r -= Laurent(c, r.hi() - n) * d;
        } else {
            Rat c = r.coeff(r.lo()) / d.coeff(0);
            r -= Laurent(c, r.lo()) * d;
        }
    }
    return RationalFn(r, d);
}

MultiLaurent MultiLaurent::monomial(const Exps& e, const Int& c) {
    MultiLaurent m;
    if (c != 0) m.c_[e] = c;
    return m;
}

MultiLaurent MultiLaurent::constant(const Int& c) {
    return monomial({0, 0, 0, 0}, c);
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r;
    for (auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
    MultiLaurent r = *this;
    for (auto& [e, c] : o.c_) {
        Int v = r.c_.count(e) ? r.c_[e] + c : c;
        if (v == 0)
            r.c_.erase(e);
        else
            r.c_[e] = v;
    }
    return r;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const {
    return *this + (-o);
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
    MultiLaurent r;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) {
            Exps e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
            Int v = c1 * c2;
            if (r.c_.count(e)) v += r.c_[e];
            if (v == 0)
                r.c_.erase(e);
            else
                r.c_[e] = v;
        }
    return r;
}

std::string MultiLaurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : c_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (int i = 0; i < 4; ++i)
            if (e[i] != 0) os << "*t" << (i + 1) << "^" << e[i];
    }
    return os.str();
}

}  // namespace clab
