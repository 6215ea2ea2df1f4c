#include "clab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace clab {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::transpose() const {
    IntMat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    IntMat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            for (int j = 0; j < o.cols_; ++j)
                m.at(i, j) += at(i, k) * o.at(k, j);
    return m;
}

IntMat IntMat::operator-() const {
    IntMat m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = -at(i, j);
    return m;
}

IntMat IntMat::block_diag(const IntMat& a, const IntMat& b) {
    IntMat m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

IntMat IntMat::congruence(const IntMat& p) const {
    return p.transpose() * (*this) * p;
}

Int IntMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    IntMat w = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), v.get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

bool IntMat::is_unimodular() const {
    if (rows_ != cols_) return false;
    Int d = det();
    return d == 1 || d == -1;
}

IntMat IntMat::unimodular_inverse() const {
    Int d = det();
    if (d != 1 && d != -1)
        throw std::domain_error("matrix is not unimodular");
    int n = rows_;
    IntMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // cofactor C_ji
            IntMat minor(n - 1, n - 1);
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc++) = at(r, c);
                }
                ++mr;
            }
            Int cof = minor.det();
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(i, j) = cof * d;  // d = 1/d for d = +-1
        }
    return inv;
}

LaurentMat LaurentMat::identity(int n) {
    LaurentMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Laurent(Rat(1));
    return m;
}

LaurentMat LaurentMat::operator*(const LaurentMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    LaurentMat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

Laurent LaurentMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    int n = rows_;
    if (n == 0) return Laurent(Rat(1));
    LaurentMat w = *this;
    Laurent prev(Rat(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) { p = i; break; }
            if (p < 0) return Laurent();
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = exact_div(
                    w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
        prev = w.at(k, k);
    }
    Laurent d = w.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

bool LaurentMat::is_unimodular() const {
    if (rows_ != cols_) return false;
    Laurent d = det();
    return d.is_unit();
}

LaurentMat LaurentMat::unimodular_inverse() const {
    Laurent d = det();
    if (!d.is_unit()) throw std::domain_error("matrix is not unimodular");
    // unit inverse of c*t^k is (1/c)*t^-k
    Laurent dinv(Rat(1) / d.coeff(d.lo()), -d.lo());
    int n = rows_;
    LaurentMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentMat minor(n - 1, n - 1);
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc++) = at(r, c);
                }
                ++mr;
            }
            Laurent cof = minor.det();
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(i, j) = cof * dinv;
        }
    return inv;
}

LaurentMat presentation_matrix(const IntMat& a) {
    int n = a.rows();
    LaurentMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Laurent e(Rat(a.at(i, j)), 1);
            e -= Laurent(Rat(a.at(j, i)), 0);
            m.at(i, j) = e;
        }
    return m;
}

namespace {

// elementary operations tracking U (left) and V (right)
struct SnfWork {
    LaurentMat d, u, v;

    void swap_rows(int i, int j) {
        for (int c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row i += f * row j
    void row_axpy(int i, int j, const Laurent& f) {
        for (int c = 0; c < d.cols(); ++c) d.at(i, c) += f * d.at(j, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) += f * u.at(j, c);
    }
    // col i += f * col j
    void col_axpy(int i, int j, const Laurent& f) {
        for (int r = 0; r < d.rows(); ++r) d.at(r, i) += f * d.at(r, j);
        for (int r = 0; r < v.rows(); ++r) v.at(r, i) += f * v.at(r, j);
    }
    // scale row i by a unit
    void row_scale(int i, const Laurent& unit) {
        for (int c = 0; c < d.cols(); ++c) d.at(i, c) = unit * d.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = unit * u.at(i, c);
    }
};

void diagonalize(SnfWork& w) {
    int n = std::min(w.d.rows(), w.d.cols());
    for (int k = 0; k < n; ++k) {
        for (;;) {
            // pivot: nonzero entry of minimal span in the trailing block
            int pi = -1, pj = -1, best = -1;
            for (int i = k; i < w.d.rows(); ++i)
                for (int j = k; j < w.d.cols(); ++j)
                    if (!w.d.at(i, j).is_zero() &&
                        (best < 0 || w.d.at(i, j).span() < best)) {
                        best = w.d.at(i, j).span();
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) return;  // trailing block is zero
            if (pi != k) w.swap_rows(k, pi);
            if (pj != k) w.swap_cols(k, pj);

            bool clean = true;
            for (int i = k + 1; i < w.d.rows(); ++i) {
                if (w.d.at(i, k).is_zero()) continue;
                Laurent q = divmod(w.d.at(i, k), w.d.at(k, k)).first;
                w.row_axpy(i, k, -q);
                if (!w.d.at(i, k).is_zero()) clean = false;
            }
            for (int j = k + 1; j < w.d.cols(); ++j) {
                if (w.d.at(k, j).is_zero()) continue;
                Laurent q = divmod(w.d.at(k, j), w.d.at(k, k)).first;
                w.col_axpy(j, k, -q);
                if (!w.d.at(k, j).is_zero()) clean = false;
            }
            if (clean) break;
        }
    }
}

}  // namespace

SmithForm smith_normal_form(const LaurentMat& m) {
    SnfWork w{m, LaurentMat::identity(m.rows()), LaurentMat::identity(m.cols())};
    int n = std::min(m.rows(), m.cols());
    for (;;) {
        diagonalize(w);
        // enforce the divisibility chain
        int bad = -1;
        for (int i = 0; i + 1 < n && bad < 0; ++i) {
            if (w.d.at(i, i).is_zero()) continue;
            for (int j = i + 1; j < n; ++j)
                if (!w.d.at(j, j).is_zero() &&
                    !divides(w.d.at(i, i), w.d.at(j, j))) {
                    w.col_axpy(i, j, Laurent(Rat(1)));
                    bad = i;
                    break;
                }
        }
        if (bad < 0) break;
    }
    // move any interior zero diagonal entries to the end
    // (cannot occur with min-span pivoting, but keep the form canonical)
    SmithForm out;
    out.d.reserve(n);
    for (int i = 0; i < n; ++i) {
        Laurent di = w.d.at(i, i);
        if (di.is_zero()) {
            out.d.push_back(di);
            continue;
        }
        // make the diagonal entry monic with lowest exponent 0
        Laurent unit(Rat(1) / di.coeff(di.hi()), -di.lo());
        w.row_scale(i, unit);
        out.d.push_back(w.d.at(i, i));
    }
    out.u = w.u;
    out.v = w.v;
    return out;
}

std::vector<std::vector<RationalFn>> invert_over_fractions(const LaurentMat& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    Laurent d = m.det();
    if (d.is_zero()) throw std::domain_error("singular matrix");
    std::vector<std::vector<RationalFn>> inv(n, std::vector<RationalFn>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentMat minor(n - 1, n - 1);
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc++) = m.at(r, c);
                }
                ++mr;
            }
            Laurent cof = n == 1 ? Laurent(Rat(1)) : minor.det();
            if ((i + j) % 2 != 0) cof = -cof;
            inv[i][j] = RationalFn(cof, d);
        }
    return inv;
}

int hermitian_signature(const IntMat& a, const Rat& r) {
    if (r <= 0 || r >= 1)
        throw std::domain_error("hermitian_signature needs r in (0,1)");
    return hermitian_signature(a, r.get_d());
}

int hermitian_signature(const IntMat& a, double r) {
    if (a.rows() != a.cols()) throw std::invalid_argument("non-square matrix");
    int n = a.rows();
    if (n == 0) return 0;
    // reject evaluation at roots of the Alexander polynomial
    Laurent delta = presentation_matrix(a).det();
    std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi * r);
    if (std::abs(delta.eval(w)) < 1e-9)
        throw std::domain_error(
            "signature undefined at a root of the Alexander polynomial");

    Eigen::MatrixXcd h(n, n);
    std::complex<double> cw = std::conj(w);
    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> v = (1.0 - w) * a.at(i, j).get_d() +
                                     (1.0 - cw) * a.at(j, i).get_d();
            h(i, j) = v;
            scale = std::max(scale, std::abs(v));
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue computation failed");
    int sig = 0;
    for (int i = 0; i < n; ++i) {
        double lam = es.eigenvalues()(i);
        if (std::abs(lam) < 1e-7 * std::max(scale, 1.0))
            throw std::domain_error(
                "eigenvalue too close to zero for a reliable signature");
        sig += lam > 0 ? 1 : -1;
    }
    return sig;
}

namespace {

struct IntSnfWork {
    IntMat d, u, v;

    void swap_rows(int i, int j) {
        for (int c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void row_axpy(int i, int j, const Int& f) {
        for (int c = 0; c < d.cols(); ++c) d.at(i, c) += f * d.at(j, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) += f * u.at(j, c);
    }
    void col_axpy(int i, int j, const Int& f) {
        for (int r = 0; r < d.rows(); ++r) d.at(r, i) += f * d.at(r, j);
        for (int r = 0; r < v.rows(); ++r) v.at(r, i) += f * v.at(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

void int_diagonalize(IntSnfWork& w) {
    int n = std::min(w.d.rows(), w.d.cols());
    for (int k = 0; k < n; ++k) {
        for (;;) {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = k; i < w.d.rows(); ++i)
                for (int j = k; j < w.d.cols(); ++j) {
                    Int m = abs(w.d.at(i, j));
                    if (m != 0 && (best == 0 || m < best)) {
                        best = m;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) return;
            if (pi != k) w.swap_rows(k, pi);
            if (pj != k) w.swap_cols(k, pj);

            bool clean = true;
            for (int i = k + 1; i < w.d.rows(); ++i) {
                if (w.d.at(i, k) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.d.at(i, k).get_mpz_t(),
                           w.d.at(k, k).get_mpz_t());
                w.row_axpy(i, k, -q);
                if (w.d.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < w.d.cols(); ++j) {
                if (w.d.at(k, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.d.at(k, j).get_mpz_t(),
                           w.d.at(k, k).get_mpz_t());
                w.col_axpy(j, k, -q);
                if (w.d.at(k, j) != 0) clean = false;
            }
            if (clean) break;
        }
    }
}

}  // namespace

IntSmithForm int_smith_normal_form(const IntMat& m) {
    IntSnfWork w{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
    int n = std::min(m.rows(), m.cols());
    for (;;) {
        int_diagonalize(w);
        int bad = -1;
        for (int i = 0; i + 1 < n && bad < 0; ++i) {
            if (w.d.at(i, i) == 0) continue;
            for (int j = i + 1; j < n; ++j)
                if (w.d.at(j, j) != 0 && w.d.at(j, j) % w.d.at(i, i) != 0) {
                    w.col_axpy(i, j, 1);
                    bad = i;
                    break;
                }
        }
        if (bad < 0) break;
    }
    IntSmithForm out;
    for (int i = 0; i < n; ++i) {
        if (w.d.at(i, i) < 0) w.negate_row(i);
        out.d.push_back(w.d.at(i, i));
    }
    out.u = w.u;
    out.v = w.v;
    return out;
}

std::optional<IntMat> complete_to_unimodular(const IntMat& b) {
    int n = b.rows(), g = b.cols();
    if (g > n) throw std::invalid_argument("too many columns");
    IntSmithForm s = int_smith_normal_form(b);
    for (int i = 0; i < g; ++i)
        if (s.d[i] != 1) return std::nullopt;  // rank-deficient or imprimitive
    // U*B*V = [I; 0]  =>  B*V = first g columns of U^-1
    return s.u.unimodular_inverse();
}

}  // namespace clab
