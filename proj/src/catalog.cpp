#include "clab/catalog.hpp"

#include <stdexcept>

namespace clab {

namespace {

SignatureFunction step_sig_2_5() {
    SignatureFunction f;
    Rat s(2, 5), s2(3, 5);
    f.breaks.push_back({true, s, s.get_d()});
    f.breaks.push_back({true, s2, s2.get_d()});
    f.values = {0, 2, 0};
    return f;
}

InfectionAxis eta(int i) {
    InfectionAxis a;
    a.module_class.assign(2, Laurent());
    a.module_class[i] = Laurent(Rat(1));
    a.derived_depth = 1;
    a.disjoint_from_surface = true;
    a.name = "eta" + std::to_string(i + 1);
    return a;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> c;
    c.push_back({"unknot", KnotDescriptor::leaf(SeifertForm(IntMat(0, 0))),
                 "trivial knot, empty Seifert form"});
    c.push_back({"trefoil_right",
                 KnotDescriptor::leaf(SeifertForm(
                     IntMat::from_rows({{-1, 1}, {0, -1}}))),
                 "right-handed trefoil, genus 1"});
    c.push_back({"seed_k",
                 KnotDescriptor::leaf(SeifertForm(IntMat::from_rows(
                     {{-1, 0, 0, 0},
                      {-1, -1, 0, 0},
                      {0, 0, 1, 1},
                      {0, 0, 0, 1}}))),
                 "genus 2 fibred doubly slice ribbon knot, trefoil # mirror"});
    c.push_back({"gl",
                 KnotDescriptor::leaf(SeifertForm(
                     IntMat::from_rows({{0, 1}, {2, 0}}))),
                 "genus 1 doubly slice knot with module (t-2)(2t-1)"});
    KnotDescriptor gl = c.back().descriptor;
    KnotDescriptor j = KnotDescriptor::step_leaf_of(step_sig_2_5());
    c.push_back({"thm15",
                 KnotDescriptor::infection(gl, {{eta(1), j}}),
                 "gl infected along eta2 by a step-signature companion"});
    c.push_back({"thm10",
                 KnotDescriptor::infection(gl, {{eta(0), j}, {eta(1), j}}),
                 "gl infected along eta1 and eta2"});
    return c;
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("catalog self-test failed: " + what);
}

void self_test(const std::vector<CatalogEntry>& c) {
    auto find = [&](const std::string& n) -> const KnotDescriptor& {
        for (const CatalogEntry& e : c)
            if (e.name == n) return e.descriptor;
        throw std::logic_error("catalog self-test: missing " + n);
    };
    Laurent d1 = Laurent::from_coeffs(0, {Rat(1), Rat(-1), Rat(1)});
    Laurent dgl = Laurent::from_coeffs(0, {Rat(2), Rat(-5), Rat(2)});

    SeifertForm unknot = effective_seifert(find("unknot"));
    expect(alexander_polynomial(unknot) == Laurent(Rat(1)), "unknot Delta");

    SeifertForm tre = effective_seifert(find("trefoil_right"));
    expect(alexander_polynomial(tre) == d1, "trefoil Delta");
    expect(arf_invariant(tre) == 1, "trefoil Arf");
    expect(levine_tristram(tre, Rat(1, 2)) == -2, "trefoil signature");

    SeifertForm seed = effective_seifert(find("seed_k"));
    expect(alexander_polynomial(seed) == d1 * d1, "seed Delta");
    auto seed_orders = decompose(seed).orders();
    expect(seed_orders.size() == 2 && associated(seed_orders[0], d1) &&
               associated(seed_orders[1], d1),
           "seed module orders");

    SeifertForm gl = effective_seifert(find("gl"));
    expect(alexander_polynomial(gl) == dgl, "gl Delta");
    expect(arf_invariant(gl) == 0, "gl Arf");
    expect(crt_split(decompose(gl), gl).pieces.size() == 2, "gl CRT pieces");

    const KnotDescriptor& t15 = find("thm15");
    expect(effective_seifert(t15) == gl, "thm15 Seifert invariance");
    RhoValue rho = rho_z_knot(t15.children.at(1));
    expect(rho.is_exact && rho.exact == Rat(2, 5), "thm15 companion rho");

    const KnotDescriptor& t10 = find("thm10");
    expect(t10.axes.size() == 2, "thm10 axis count");
    expect(effective_seifert(t10) == gl, "thm10 Seifert invariance");
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> c = build();
        self_test(c);
        return c;
    }();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace clab
