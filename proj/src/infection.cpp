#include "clab/infection.hpp"

#include <cmath>
#include <stdexcept>

namespace clab {

KnotDescriptor KnotDescriptor::leaf(SeifertForm s) {
    KnotDescriptor d;
    d.kind = Kind::seifert_leaf;
    d.form = std::move(s);
    return d;
}

KnotDescriptor KnotDescriptor::step_leaf_of(SignatureFunction sig) {
    KnotDescriptor d;
    d.kind = Kind::step_leaf;
    d.steps = std::move(sig);
    return d;
}

KnotDescriptor KnotDescriptor::sum(std::vector<KnotDescriptor> parts) {
    KnotDescriptor d;
    d.kind = Kind::sum;
    d.children = std::move(parts);
    return d;
}

KnotDescriptor KnotDescriptor::infection(
    KnotDescriptor seed,
    std::vector<std::pair<InfectionAxis, KnotDescriptor>> arms) {
    KnotDescriptor d;
    d.kind = Kind::infection;
    d.children.push_back(std::move(seed));
    for (auto& [axis, companion] : arms) {
        if (axis.derived_depth < 1)
            throw std::invalid_argument("axis must lie in the commutator subgroup");
        d.axes.push_back(std::move(axis));
        d.children.push_back(std::move(companion));
    }
    return d;
}

SeifertForm effective_seifert(const KnotDescriptor& d) {
    switch (d.kind) {
        case KnotDescriptor::Kind::seifert_leaf:
            return d.form;
        case KnotDescriptor::Kind::step_leaf:
            throw std::domain_error(
                "signature-only leaf carries no Seifert form");
        case KnotDescriptor::Kind::sum: {
            SeifertForm acc;
            for (const KnotDescriptor& c : d.children)
                acc = connected_sum(acc, effective_seifert(c));
            return acc;
        }
        case KnotDescriptor::Kind::infection:
            for (const InfectionAxis& a : d.axes)
                if (!a.disjoint_from_surface || a.derived_depth < 1)
                    throw std::domain_error(
                        "axis does not preserve the Seifert form");
            return effective_seifert(d.children.at(0));
    }
    throw std::logic_error("unreachable");
}

RhoValue rho_z(const SignatureFunction& sig) {
    RhoValue r;
    if (sig.all_breaks_exact()) {
        Rat prev(0), total(0);
        for (size_t i = 0; i < sig.breaks.size(); ++i) {
            total += Rat(sig.values[i]) * (sig.breaks[i].r - prev);
            prev = sig.breaks[i].r;
        }
        total += Rat(sig.values.back()) * (Rat(1) - prev);
        r.is_exact = true;
        r.exact = total;
        r.lo = r.hi = total.get_d();
        return r;
    }
    // numeric breakpoints are Newton-polished to ~1e-9; propagate a
    // conservative enclosure per inexact jump
    double prev = 0, total = 0, err = 1e-12;
    for (size_t i = 0; i < sig.breaks.size(); ++i) {
        double x = sig.breaks[i].exact ? sig.breaks[i].r.get_d()
                                       : sig.breaks[i].rd;
        total += sig.values[i] * (x - prev);
        if (!sig.breaks[i].exact)
            err += std::abs(sig.values[i + 1] - sig.values[i]) * 1e-8;
        prev = x;
    }
    total += sig.values.back() * (1.0 - prev);
    r.is_exact = false;
    r.lo = total - err;
    r.hi = total + err;
    return r;
}

RhoValue rho_z_knot(const KnotDescriptor& d) {
    switch (d.kind) {
        case KnotDescriptor::Kind::seifert_leaf:
            return rho_z(signature_function(d.form));
        case KnotDescriptor::Kind::step_leaf:
            return rho_z(d.steps);
        case KnotDescriptor::Kind::sum: {
            RhoValue acc;
            for (const KnotDescriptor& c : d.children) {
                RhoValue v = rho_z_knot(c);
                if (acc.is_exact && v.is_exact) acc.exact += v.exact;
                acc.is_exact = acc.is_exact && v.is_exact;
                acc.lo += v.lo;
                acc.hi += v.hi;
            }
            if (acc.is_exact) acc.lo = acc.hi = acc.exact.get_d();
            return acc;
        }
        case KnotDescriptor::Kind::infection:
            throw std::domain_error(
                "abelian rho of an infected knot is out of scope");
    }
    throw std::logic_error("unreachable");
}

Check gilmer_livingston_check(
    const std::vector<SignatureFunction>& curve_sigs) {
    Check out = Check::pass;
    for (const SignatureFunction& f : curve_sigs) {
        for (Rat r : {Rat(1, 3), Rat(2, 3)}) {
            std::optional<int> v;
            try {
                v = f.value_at(r);
            } catch (const std::domain_error&) {
                v.reset();
            }
            if (!v.has_value()) return Check::indeterminate;
            // doubled companion J#J has twice the signature
            if (2 * *v != 0) out = Check::fail;
        }
    }
    return out;
}

namespace {

void note(std::vector<std::string>* notes, std::string s) {
    if (notes) notes->push_back(std::move(s));
}

// ordered pairs (X, Y) of self-annihilating submodules whose piece
// index sets are disjoint and cover every piece
std::vector<std::pair<int, int>> submodule_assignments(
    const std::vector<Submodule>& subs, size_t piece_count) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = 0; j < subs.size(); ++j) {
            std::vector<bool> used(piece_count, false);
            bool ok = true;
            for (int p : subs[i].piece_indices) used[p] = true;
            for (int p : subs[j].piece_indices) {
                if (used[p]) ok = false;
                used[p] = true;
            }
            for (bool u : used) ok = ok && u;
            if (ok) out.emplace_back(static_cast<int>(i),
                                     static_cast<int>(j));
        }
    return out;
}

}  // namespace

Dof double_one_five_obstruction(const KnotDescriptor& d,
                                std::vector<std::string>* notes) {
    if (d.kind != KnotDescriptor::Kind::infection) return Dof::inapplicable;
    SeifertForm s = effective_seifert(d);
    AlexanderModule m = crt_split(decompose(s), s);
    BlanchfieldForm b = blanchfield(s);
    std::vector<Submodule> subs;
    try {
        subs = self_annihilating_submodules(m, b);
    } catch (const ModuleShapeError& e) {
        note(notes, std::string("module shape unsupported: ") + e.what());
        return Dof::inconclusive;
    }
    auto assignments = submodule_assignments(subs, m.pieces.size());
    if (assignments.empty()) {
        note(notes, "no complementary self-annihilating assignment exists");
        return Dof::inconclusive;
    }

    // per-arm data: pairing targets and companion rho
    struct Arm {
        const InfectionAxis* axis;
        RhoValue rho;
    };
    std::vector<Arm> arms;
    for (size_t i = 0; i < d.axes.size(); ++i) {
        RhoValue rho;
        try {
            rho = rho_z_knot(d.children[i + 1]);
        } catch (const std::domain_error&) {
            note(notes, "nested infection companion, rho unavailable");
            return Dof::inconclusive;
        }
        arms.push_back({&d.axes[i], rho});
    }

    bool all_full = true, all_explained = true;
    for (auto [xi, yi] : assignments) {
        bool has_struct = false, has_full = false, rho_uncertain = false;
        for (const Arm& arm : arms) {
            if (arm.axis->module_class.empty()) continue;
            bool hit = false;
            for (int side : {xi, yi})
                for (const auto& gen : subs[side].generators)
                    if (!pair(b, gen, arm.axis->module_class).is_zero())
                        hit = true;
            if (!hit) continue;
            has_struct = true;
            if (arm.rho.known_nonzero() && arm.rho.is_exact)
                has_full = true;
            else if (!arm.rho.is_exact)
                rho_uncertain = true;
        }
        if (has_full) {
            note(notes,
                 "assignment (" + std::to_string(xi) + "," +
                     std::to_string(yi) +
                     "): nonzero pairing axis with nonzero companion rho");
            continue;
        }
        all_full = false;
        // structurally witnessed but the companion rho vanished exactly
        if (!(has_struct && !rho_uncertain)) all_explained = false;
    }
    if (all_full) return Dof::obstructed;
    if (all_explained) {
        note(notes, "every witnessing companion has rho exactly zero");
        return Dof::unobstructed;
    }
    note(notes, "some assignment has no usable pairing/rho witness");
    return Dof::inconclusive;
}

ObstructionReport classify(const KnotDescriptor& d, int search_bound) {
    ObstructionReport r;
    SeifertForm s = effective_seifert(d);
    r.arf = arf_invariant(s);
    if (r.arf != 0)
        r.notes.push_back("nonzero Arf invariant: not doubly (0)-solvable");

    r.metabolizer = find_metabolizer(s, search_bound);
    Tri fm = fox_milnor(s);
    if (r.metabolizer.has_value())
        r.alg_slice = Tri::yes;
    else if (fm == Tri::no)
        r.alg_slice = Tri::no;
    else
        r.alg_slice = Tri::inconclusive;
    if (fm == Tri::no)
        r.notes.push_back("Alexander polynomial fails the norm factorization");

    r.hyperbolic = find_hyperbolic_basis(s, search_bound);
    if (r.hyperbolic.has_value())
        r.alg_doubly_slice = Tri::yes;
    else if (r.alg_slice == Tri::no)
        r.alg_doubly_slice = Tri::no;
    else
        r.alg_doubly_slice = Tri::inconclusive;

    try {
        AlexanderModule m = crt_split(decompose(s), s);
        r.selfann_count = static_cast<int>(
            self_annihilating_submodules(m, blanchfield(s)).size());
    } catch (const ModuleShapeError&) {
        r.selfann_count = -1;
        r.notes.push_back("self-annihilating enumeration: unsupported shape");
    }

    if (d.kind == KnotDescriptor::Kind::infection) {
        std::vector<SignatureFunction> sigs;
        bool sig_ok = true;
        for (size_t i = 1; i < d.children.size(); ++i) {
            const KnotDescriptor& c = d.children[i];
            if (c.kind == KnotDescriptor::Kind::step_leaf)
                sigs.push_back(c.steps);
            else {
                try {
                    sigs.push_back(signature_function(effective_seifert(c)));
                } catch (const std::domain_error&) {
                    sig_ok = false;
                }
            }
        }
        r.gilmer_livingston =
            sig_ok ? gilmer_livingston_check(sigs) : Check::indeterminate;
        r.double_one_five = double_one_five_obstruction(d, &r.notes);
    }
    return r;
}

}  // namespace clab
