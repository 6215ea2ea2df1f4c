#include "clab/alexmodule.hpp"

namespace clab {

std::vector<Laurent> AlexanderModule::orders() const {
    std::vector<Laurent> out;
    for (const CyclicPiece& p : pieces) out.push_back(p.order);
    return out;
}

Laurent AlexanderModule::order_product() const {
    Laurent prod(Rat(1));
    for (const CyclicPiece& p : pieces) prod *= p.order;
    return prod;
}

AlexanderModule decompose(const SeifertForm& s) {
    AlexanderModule m;
    m.presentation_dim = s.size();
    LaurentMat pres = presentation_matrix(s.matrix());
    SmithForm snf = smith_normal_form(pres);
    m.to_module = snf.u;
    LaurentMat uinv = snf.u.unimodular_inverse();
    for (size_t i = 0; i < snf.d.size(); ++i) {
        if (snf.d[i].is_unit()) continue;
        if (snf.d[i].is_zero())
            throw std::domain_error("Alexander module is not torsion");
        CyclicPiece p;
        p.order = snf.d[i];
        p.name = "e" + std::to_string(m.pieces.size() + 1);
        for (int r = 0; r < uinv.rows(); ++r)
            p.lift.push_back(uinv.at(r, static_cast<int>(i)));
        m.pieces.push_back(std::move(p));
    }
    return m;
}

namespace {

// p = a*b with gcd(a,b) = 1 and a carrying every factor shared with h;
// returns false when no proper split exists
bool split_by_hint(const Laurent& p, const Laurent& h, Laurent& a, Laurent& b) {
    Laurent g = gcd(p, h);
    if (g.is_unit()) return false;
    a = g;
    for (;;) {
        Laurent q = exact_div(p, a);
        Laurent g2 = gcd(q, a);
        if (g2.is_unit()) {
            b = monic(q);
            a = monic(a);
            return !b.is_unit();
        }
        a *= g2;
    }
}

// maintain a pairwise-coprime basis whose products cover the inputs
void coprime_insert(std::vector<Laurent>& basis, Laurent x) {
    if (x.is_zero()) return;
    x = monic(x);
    if (x.is_unit()) return;
    for (size_t i = 0; i < basis.size(); ++i) {
        Laurent g = gcd(x, basis[i]);
        if (g.is_unit()) continue;
        Laurent b = basis[i];
        basis.erase(basis.begin() + static_cast<long>(i));
        coprime_insert(basis, exact_div(b, g));
        coprime_insert(basis, exact_div(x, g));
        coprime_insert(basis, g);
        return;
    }
    basis.push_back(x);
}

}  // namespace

AlexanderModule crt_split(const AlexanderModule& m,
                          const std::vector<Laurent>& hints) {
    std::vector<Laurent> basis;
    for (const Laurent& h : hints) coprime_insert(basis, h);
    for (const CyclicPiece& p : m.pieces) coprime_insert(basis, p.order);
    AlexanderModule out;
    out.presentation_dim = m.presentation_dim;
    out.to_module = m.to_module;
    for (const CyclicPiece& piece : m.pieces) {
        std::vector<CyclicPiece> parts{piece};
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Laurent& h : basis) {
                std::vector<CyclicPiece> next;
                for (const CyclicPiece& part : parts) {
                    Laurent a, b;
                    if (split_by_hint(part.order, h, a, b)) {
                        CyclicPiece pa, pb;
                        pa.order = a;
                        pb.order = b;
                        for (const Laurent& x : part.lift) {
                            pa.lift.push_back(b * x);
                            pb.lift.push_back(a * x);
                        }
                        pa.name = part.name + "a";
                        pb.name = part.name + "b";
                        next.push_back(std::move(pa));
                        next.push_back(std::move(pb));
                        changed = true;
                    } else {
                        next.push_back(part);
                    }
                }
                parts = std::move(next);
            }
        }
        for (auto& p : parts) out.pieces.push_back(std::move(p));
    }
    for (size_t i = 0; i < out.pieces.size(); ++i)
        out.pieces[i].name = "e" + std::to_string(i + 1);
    return out;
}

AlexanderModule crt_split(const AlexanderModule& m, const SeifertForm& s) {
    std::vector<Laurent> hints;
    LaurentMat pres = presentation_matrix(s.matrix());
    for (int i = 0; i < pres.rows(); ++i)
        for (int j = 0; j < pres.cols(); ++j)
            if (!pres.at(i, j).is_zero() && !pres.at(i, j).is_unit())
                hints.push_back(monic(pres.at(i, j)));
    return crt_split(m, hints);
}

BlanchfieldForm blanchfield(const SeifertForm& s) {
    BlanchfieldForm b;
    if (s.size() == 0) return b;
    LaurentMat pres = presentation_matrix(s.matrix());
    auto inv = invert_over_fractions(pres);
    Laurent one_minus_t = Laurent(Rat(1)) - Laurent::t();
    b.matrix.resize(s.size());
    for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < s.size(); ++j)
            b.matrix[i].push_back(
                reduce_mod_lambda(one_minus_t * inv[i][j]));
    return b;
}

RationalFn pair(const BlanchfieldForm& b, const std::vector<Laurent>& u,
                const std::vector<Laurent>& v) {
    size_t n = b.matrix.size();
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("pairing dimension mismatch");
    RationalFn acc;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (u[i].is_zero() || v[j].is_zero()) continue;
            acc = acc + (u[i].conj() * v[j]) * b.matrix[i][j];
        }
    return reduce_mod_lambda(acc);
}

std::vector<Submodule> self_annihilating_submodules(const AlexanderModule& m,
                                                    const BlanchfieldForm& b) {
    size_t n = m.pieces.size();
    // supported shape: pairwise coprime, square-free cyclic orders
    for (size_t i = 0; i < n; ++i) {
        const Laurent& d = m.pieces[i].order;
        if (!gcd(d, d.derivative()).is_unit())
            throw ModuleShapeError("cyclic order is not square-free");
        for (size_t j = i + 1; j < n; ++j)
            if (!gcd(d, m.pieces[j].order).is_unit())
                throw ModuleShapeError("cyclic orders are not coprime");
    }
    Laurent delta = m.order_product();
    std::vector<Submodule> out;
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        Submodule sub;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t{1} << i)) {
                sub.piece_indices.push_back(static_cast<int>(i));
                sub.generators.push_back(m.pieces[i].lift);
                sub.orders.push_back(m.pieces[i].order);
            }
        // pairing must vanish identically on the submodule
        bool isotropic = true;
        for (const auto& u : sub.generators)
            for (const auto& v : sub.generators)
                if (!pair(b, u, v).is_zero()) {
                    isotropic = false;
                    break;
                }
        if (!isotropic) continue;
        // order condition for X = X-perp: prod * conj(prod) = Delta
        Laurent prod(Rat(1));
        for (const Laurent& d : sub.orders) prod *= d;
        if (delta.is_unit()) {
            if (!prod.is_unit()) continue;
        } else if (prod.is_unit() || !associated(prod * prod.conj(), delta)) {
            continue;
        }
        out.push_back(std::move(sub));
    }
    return out;
}

bool generates(const std::vector<Laurent>& orders,
               const std::vector<std::vector<Laurent>>& classes) {
    int m = static_cast<int>(orders.size());
    if (m == 0) return true;
    int k = static_cast<int>(classes.size());
    LaurentMat rel(m, k + m);
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(classes[j].size()) != m)
            throw std::invalid_argument("class vector dimension mismatch");
        for (int i = 0; i < m; ++i) rel.at(i, j) = classes[j][i];
    }
    for (int i = 0; i < m; ++i) rel.at(i, k + i) = orders[i];
    SmithForm s = smith_normal_form(rel);
    int units = 0;
    for (const Laurent& d : s.d)
        if (!d.is_zero() && d.is_unit()) ++units;
    return units == m;
}

}  // namespace clab
