#include "clab/seifert.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <numbers>

#include <Eigen/Dense>

namespace clab {

SeifertForm::SeifertForm(IntMat a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols())
        throw std::invalid_argument("Seifert matrix must be square");
    if (a_.rows() % 2 != 0)
        throw std::invalid_argument("Seifert matrix has odd dimension");
    IntMat skew(a_.rows(), a_.cols());
    for (int i = 0; i < a_.rows(); ++i)
        for (int j = 0; j < a_.cols(); ++j)
            skew.at(i, j) = a_.at(i, j) - a_.at(j, i);
    if (skew.det() != 1)
        throw std::invalid_argument(
            "det(A - A^T) must be 1 (unimodular antisymmetrization)");
}

SeifertForm connected_sum(const SeifertForm& s1, const SeifertForm& s2) {
    return SeifertForm(IntMat::block_diag(s1.matrix(), s2.matrix()));
}

SeifertForm inverse(const SeifertForm& s) {
    return SeifertForm(-s.matrix().transpose());
}

Laurent alexander_polynomial(const SeifertForm& s) {
    if (s.size() == 0) return Laurent(Rat(1));
    return normalize_units(presentation_matrix(s.matrix()).det());
}

int arf_invariant(const SeifertForm& s) {
    Rat v = alexander_polynomial(s).eval_rat(Rat(-1));
    Int n = v.get_num();  // Delta(-1) is an odd integer
    Int m = n % 8;
    if (m < 0) m += 8;
    return (m == 1 || m == 7) ? 0 : 1;
}

int levine_tristram(const SeifertForm& s, const Rat& r) {
    return hermitian_signature(s.matrix(), r);
}

std::optional<int> SignatureFunction::value_at(const Rat& r) const {
    if (r <= 0 || r >= 1)
        throw std::domain_error("signature function is defined on (0,1)");
    double rd = r.get_d();
    size_t idx = 0;
    for (const SigBreak& b : breaks) {
        if (b.exact ? (b.r == r) : (std::abs(b.rd - rd) < 1e-9))
            return std::nullopt;  // lands on a jump
        if (b.exact ? (b.r < r) : (b.rd < rd)) ++idx;
    }
    return values[idx];
}

bool SignatureFunction::all_breaks_exact() const {
    return std::all_of(breaks.begin(), breaks.end(),
                       [](const SigBreak& b) { return b.exact; });
}

SignatureFunction SignatureFunction::negated() const {
    SignatureFunction f = *this;
    for (int& v : f.values) v = -v;
    return f;
}

bool SignatureFunction::operator==(const SignatureFunction& o) const {
    if (values != o.values || breaks.size() != o.breaks.size()) return false;
    for (size_t i = 0; i < breaks.size(); ++i) {
        const SigBreak &a = breaks[i], &b = o.breaks[i];
        if (a.exact != b.exact) return false;
        if (a.exact && a.r != b.r) return false;
        if (!a.exact && std::abs(a.rd - b.rd) > 1e-9) return false;
    }
    return true;
}

namespace {

// q-th cyclotomic polynomial (integer coefficients, cached)
const Laurent& cyclotomic(int q) {
    static std::map<int, Laurent> cache;
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    Laurent num = Laurent::t(q) - Laurent(Rat(1));
    for (int d = 1; d < q; ++d)
        if (q % d == 0) num = exact_div(num, cyclotomic(d));
    return cache.emplace(q, num).first->second;
}

std::vector<std::complex<double>> poly_roots(const Laurent& p) {
    Laurent q = p.shifted(-p.lo());
    int n = q.hi();
    if (n == 0) return {};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    double lead = q.coeff(n).get_d();
    for (int i = 0; i < n; ++i) {
        comp(i, n - 1) = -q.coeff(i).get_d() / lead;
        if (i > 0) comp(i, i - 1) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    std::vector<std::complex<double>> roots;
    for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

// root parameters r in (0,1) of p on the unit circle, exact where the
// root is identified as a root of unity
std::vector<SigBreak> circle_root_params(const Laurent& p) {
    std::vector<SigBreak> out;
    for (auto z : poly_roots(p)) {
        if (std::abs(std::abs(z) - 1.0) > 1e-6) continue;
        double r = std::arg(z) / (2.0 * std::numbers::pi);
        if (r < 0) r += 1.0;
        if (r < 1e-9 || r > 1.0 - 1e-9) continue;  // t=1 is never a root
        SigBreak b{false, Rat(0), r};
        // try to identify r as p/q with small q, verified exactly
        for (int q = 2; q <= 64 && !b.exact; ++q) {
            long num = std::lround(r * q);
            if (num <= 0 || num >= q) continue;
            if (std::abs(r - static_cast<double>(num) / q) > 5e-7) continue;
            long g = std::gcd(num, static_cast<long>(q));
            int qq = static_cast<int>(q / g);
            if (qq < 2) continue;
            if (divides(cyclotomic(qq), p)) {
                b.exact = true;
                b.r = Rat(num / g, qq);
                b.rd = b.r.get_d();
            }
        }
        if (!b.exact) {
            // polish on the unit circle and demand convergence
            std::complex<double> zz = z / std::abs(z);
            Laurent dp = p.derivative();
            for (int it = 0; it < 50 && std::abs(p.eval(zz)) > 1e-12; ++it) {
                std::complex<double> d = dp.eval(zz);
                if (std::abs(d) < 1e-14) break;
                zz -= p.eval(zz) / d;
                zz /= std::abs(zz);
            }
            if (std::abs(p.eval(zz)) > 1e-6)
                throw std::runtime_error(
                    "unit-circle root finding failed to converge");
            b.rd = std::arg(zz) / (2.0 * std::numbers::pi);
            if (b.rd < 0) b.rd += 1.0;
        }
        out.push_back(b);
    }
    std::sort(out.begin(), out.end(),
              [](const SigBreak& a, const SigBreak& b) { return a.rd < b.rd; });
    // merge multiplicities
    std::vector<SigBreak> merged;
    for (const SigBreak& b : out) {
        if (!merged.empty() && std::abs(merged.back().rd - b.rd) < 1e-7) {
            if (b.exact) merged.back() = b;
            continue;
        }
        merged.push_back(b);
    }
    return merged;
}

}  // namespace

SignatureFunction signature_function(const SeifertForm& s) {
    if (s.size() == 0) return SignatureFunction::constant(0);
    Laurent delta = alexander_polynomial(s);
    SignatureFunction f;
    f.breaks = circle_root_params(delta);
    std::vector<double> cuts{0.0};
    for (const SigBreak& b : f.breaks) cuts.push_back(b.rd);
    cuts.push_back(1.0);
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        f.values.push_back(
            hermitian_signature(s.matrix(), (cuts[i] + cuts[i + 1]) / 2.0));
    return f;
}

Tri fox_milnor(const SeifertForm& s) {
    Laurent delta = primitive_integer(alexander_polynomial(s));
    int n = delta.span();
    if (n == 0) return Tri::yes;  // Delta = 1, f = 1
    if (n % 2 != 0) return Tri::no;
    if (!associated(delta, delta.conj())) return Tri::no;
    int m = n / 2;

    // Mignotte-style bound on coefficients of integer divisors of delta
    double norm = 0.0, maxc = 0.0;
    for (auto& [e, c] : delta.terms()) {
        double v = std::abs(c.get_d());
        norm += v * v;
        maxc = std::max(maxc, v);
    }
    long bound = static_cast<long>(
        std::ceil(std::ldexp(std::sqrt(norm) + maxc, m)));

    Int leadc = delta.coeff(n).get_num();
    Int lead_abs = abs(leadc);
    std::vector<long> lead_divisors;
    for (Int d = 1; d <= lead_abs; ++d)
        if (lead_abs % d == 0) lead_divisors.push_back(d.get_si());

    double total = static_cast<double>(lead_divisors.size()) * 2.0 *
                   std::pow(2.0 * bound + 1.0, std::max(0, m - 1));
    if (total > 5e6) return Tri::inconclusive;

    std::vector<long> coeffs(m + 1, 0);
    // enumerate middle coefficients recursively
    auto test = [&]() {
        std::vector<Rat> rc;
        for (long c : coeffs) rc.emplace_back(c);
        Laurent fpoly = Laurent::from_coeffs(0, rc);
        if (fpoly.is_zero() || fpoly.coeff(0) == 0) return false;
        return associated(fpoly * fpoly.conj(), delta);
    };
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == m) return test();
        for (long c = -bound; c <= bound; ++c) {
            coeffs[idx] = c;
            if (rec(idx + 1)) return true;
        }
        return false;
    };
    for (long am : lead_divisors) {
        coeffs[m] = am;
        Int a0_int = lead_abs / am;
        long a0_abs = a0_int.get_si();
        long a0v = a0_abs;
        for (int sign = 0; sign < 2; ++sign) {
            coeffs[0] = sign == 0 ? a0v : -a0v;
            if (m == 1) {
                if (test()) return Tri::yes;
            } else if (rec(1)) {
                return Tri::yes;
            }
        }
    }
    return Tri::no;
}

namespace {

using Vec = std::vector<Int>;

Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec matvec(const IntMat& m, const Vec& v) {
    Vec r(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

// primitive vectors with entries in [-b, b], first nonzero entry
// positive, in lexicographic order
std::vector<Vec> primitive_vectors(int n, int b) {
    std::vector<Vec> out;
    Vec v(n, 0);
    std::function<void(int)> rec = [&](int idx) {
        if (idx == n) {
            Int g = 0;
            for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(),
                                           x.get_mpz_t());
            if (g != 1) return;
            for (const Int& x : v) {
                if (x == 0) continue;
                if (x > 0) out.push_back(v);
                return;
            }
            return;
        }
        for (long c = -b; c <= b; ++c) {
            v[idx] = c;
            rec(idx + 1);
        }
    };
    rec(0);
    return out;
}

// canonical key for the lattice spanned by the columns of b (row-style
// Hermite normal form of the transpose)
std::vector<Int> lattice_key(std::vector<Vec> basis) {
    // rows = basis vectors
    int rows = static_cast<int>(basis.size());
    int cols = static_cast<int>(basis[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclid down column c
        for (;;) {
            int piv = -1;
            Int best = 0;
            for (int i = r; i < rows; ++i) {
                Int m = abs(basis[i][c]);
                if (m != 0 && (best == 0 || m < best)) { best = m; piv = i; }
            }
            if (piv < 0) break;
            std::swap(basis[r], basis[piv]);
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (basis[i][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), basis[i][c].get_mpz_t(),
                           basis[r][c].get_mpz_t());
                for (int j = 0; j < cols; ++j) basis[i][j] -= q * basis[r][j];
                if (basis[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (basis[r][c] != 0) {
            if (basis[r][c] < 0)
                for (int j = 0; j < cols; ++j) basis[r][j] = -basis[r][j];
            // reduce rows above the pivot
            for (int i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), basis[i][c].get_mpz_t(),
                           basis[r][c].get_mpz_t());
                for (int j = 0; j < cols; ++j) basis[i][j] -= q * basis[r][j];
            }
            ++r;
        }
    }
    std::vector<Int> key;
    for (auto& row : basis)
        for (auto& x : row) key.push_back(x);
    return key;
}

IntMat columns_matrix(const std::vector<Vec>& basis, int n) {
    IntMat b(n, static_cast<int>(basis.size()));
    for (int j = 0; j < b.cols(); ++j)
        for (int i = 0; i < n; ++i) b.at(i, j) = basis[j][i];
    return b;
}

// all rank-g sublattices spanned by pairwise A-isotropic candidate
// vectors, deduplicated; each entry is a column basis
std::vector<std::vector<Vec>> isotropic_lattices(const IntMat& a, int g,
                                                 int bound) {
    int n = a.rows();
    std::vector<Vec> cand;
    std::vector<Vec> av, atv;
    for (const Vec& v : primitive_vectors(n, bound)) {
        Vec w = matvec(a, v);
        if (dot(v, w) != 0) continue;
        cand.push_back(v);
        av.push_back(w);
        atv.push_back(matvec(a.transpose(), v));
    }
    std::vector<std::vector<Vec>> found;
    std::map<std::vector<Int>, bool> seen;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == g) {
            std::vector<Vec> basis;
            for (int i : pick) basis.push_back(cand[i]);
            // require full rank g
            IntMat b = columns_matrix(basis, n);
            IntSmithForm s = int_smith_normal_form(b);
            int rank = 0;
            for (const Int& d : s.d)
                if (d != 0) ++rank;
            if (rank != g) return;
            auto key = lattice_key(basis);
            if (seen.emplace(key, true).second) found.push_back(basis);
            return;
        }
        for (int i = start; i < static_cast<int>(cand.size()); ++i) {
            bool ok = true;
            for (int j : pick)
                if (dot(cand[j], av[i]) != 0 || dot(cand[i], av[j]) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return found;
}

bool block_zero(const IntMat& m, int r0, int c0, int g) {
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (m.at(r0 + i, c0 + j) != 0) return false;
    return true;
}

}  // namespace

bool verify_witness(const SeifertForm& s, const LagrangianWitness& w) {
    const IntMat& p = w.basis_change;
    if (p.rows() != s.size() || !p.is_unimodular()) return false;
    IntMat c = s.matrix().congruence(p);
    int g = s.genus();
    if (!block_zero(c, 0, 0, g)) return false;
    if (w.kind == LagrangianWitness::Kind::hyperbolic &&
        !block_zero(c, g, g, g))
        return false;
    return true;
}

std::optional<LagrangianWitness> find_metabolizer(const SeifertForm& s,
                                                  int entry_bound) {
    if (entry_bound < 1) throw std::invalid_argument("entry_bound must be >= 1");
    int g = s.genus();
    if (g == 0)
        return LagrangianWitness{IntMat::identity(0),
                                 LagrangianWitness::Kind::metabolic};
    for (const auto& basis : isotropic_lattices(s.matrix(), g, entry_bound)) {
        auto p = complete_to_unimodular(columns_matrix(basis, s.size()));
        if (!p) continue;
        LagrangianWitness w{*p, LagrangianWitness::Kind::metabolic};
        if (verify_witness(s, w)) return w;
    }
    return std::nullopt;
}

std::optional<LagrangianWitness> find_hyperbolic_basis(const SeifertForm& s,
                                                       int entry_bound) {
    if (entry_bound < 1) throw std::invalid_argument("entry_bound must be >= 1");
    int g = s.genus();
    if (g == 0)
        return LagrangianWitness{IntMat::identity(0),
                                 LagrangianWitness::Kind::hyperbolic};
    auto lattices = isotropic_lattices(s.matrix(), g, entry_bound);
    int n = s.size();
    for (size_t i = 0; i < lattices.size(); ++i)
        for (size_t j = 0; j < lattices.size(); ++j) {
            if (i == j) continue;
            IntMat p(n, n);
            for (int c = 0; c < g; ++c)
                for (int r = 0; r < n; ++r) {
                    p.at(r, c) = lattices[i][c][r];
                    p.at(r, g + c) = lattices[j][c][r];
                }
            Int d = p.det();
            if (d != 1 && d != -1) continue;
            LagrangianWitness w{p, LagrangianWitness::Kind::hyperbolic};
            if (verify_witness(s, w)) return w;
        }
    return std::nullopt;
}

}  // namespace clab
