#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "clab/catalog.hpp"
#include "clab/io.hpp"
#include "clab/words.hpp"

using namespace clab;

namespace {

// name from the catalog, otherwise a file path
KnotDescriptor resolve_knot(const std::string& spec) {
    if (const CatalogEntry* e = catalog_find(spec)) return e->descriptor;
    if (spec.find('/') == std::string::npos &&
        spec.find('.') == std::string::npos)
        throw ParseError("unknown catalog knot '" + spec + "'", 1, 1);
    return load_descriptor_file(spec);
}

int cmd_catalog(bool as_json) {
    if (as_json) {
        std::cout << "[\n";
        bool first = true;
        for (const CatalogEntry& e : catalog()) {
            if (!first) std::cout << ",\n";
            first = false;
            std::cout << "  {\"name\": \"" << e.name << "\", \"note\": \""
                      << e.note << "\"}";
        }
        std::cout << "\n]\n";
    } else {
        for (const CatalogEntry& e : catalog())
            std::cout << e.name << ": " << e.note << "\n";
    }
    return 0;
}

int cmd_invariants(const std::string& knot, bool as_json) {
    KnotDescriptor d = resolve_knot(knot);
    SeifertForm s = effective_seifert(d);
    Laurent delta = alexander_polynomial(s);
    AlexanderModule m = crt_split(decompose(s), s);
    SignatureFunction sig = signature_function(s);
    Tri fm = fox_milnor(s);
    if (as_json) {
        std::cout << "{\n  \"alexander\": \"" << delta.str() << "\",\n"
                  << "  \"arf\": " << arf_invariant(s) << ",\n"
                  << "  \"genus\": " << s.genus() << ",\n"
                  << "  \"fox_milnor\": \""
                  << (fm == Tri::yes ? "yes"
                                     : fm == Tri::no ? "no" : "inconclusive")
                  << "\",\n  \"module_orders\": [";
        bool first = true;
        for (const Laurent& o : m.orders()) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << "\"" << o.str() << "\"";
        }
        std::cout << "],\n  \"signature\": \"" << signature_str(sig)
                  << "\"\n}\n";
    } else {
        std::cout << "alexander: " << delta.str() << "\n";
        std::cout << "arf: " << arf_invariant(s) << "\n";
        std::cout << "genus: " << s.genus() << "\n";
        std::cout << "fox_milnor: "
                  << (fm == Tri::yes ? "yes"
                                     : fm == Tri::no ? "no" : "inconclusive")
                  << "\n";
        std::cout << "module_orders:";
        for (const Laurent& o : m.orders()) std::cout << " (" << o.str() << ")";
        if (m.pieces.empty()) std::cout << " (trivial)";
        std::cout << "\n";
        std::cout << "signature: " << signature_str(sig) << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& knot, int bound, bool as_json) {
    KnotDescriptor d = resolve_knot(knot);
    ObstructionReport r = classify(d, bound);
    std::cout << (as_json ? report_json(r) : report_text(r));
    return 0;
}

int cmd_family(int a, int c, int n, bool count_only, bool as_json) {
    auto fam = generate_family({a, c, n});
    if (count_only) {
        std::cout << fam.size() << "\n";
        return 0;
    }
    if (as_json) {
        std::cout << "[\n";
        for (size_t i = 0; i < fam.size(); ++i)
            std::cout << "  [\"" << word_str(fam[i].first) << "\", \""
                      << word_str(fam[i].second) << "\"]"
                      << (i + 1 < fam.size() ? ",\n" : "\n");
        std::cout << "]\n";
    } else {
        for (const CommPair& p : fam)
            std::cout << "(" << word_str(p.first) << ", "
                      << word_str(p.second) << ")\n";
    }
    return 0;
}

int cmd_rho(const std::string& knot, const std::string& cm, bool as_json) {
    KnotDescriptor d = resolve_knot(knot);
    RhoValue r = rho_z_knot(d);
    std::string value = r.is_exact
                            ? rat_str(r.exact)
                            : "[" + std::to_string(r.lo) + ", " +
                                  std::to_string(r.hi) + "]";
    if (as_json)
        std::cout << "{\"rho_z\": \"" << value << "\", \"exact\": "
                  << (r.is_exact ? "true" : "false") << "}\n";
    else
        std::cout << "rho_z: " << value << (r.is_exact ? "" : " (interval)")
                  << "\n";
    if (!cm.empty()) {
        Rat c = parse_rational(cm);
        bool exceeds = r.is_exact ? (abs(r.exact) > c)
                                  : (r.lo > c.get_d() || r.hi < -c.get_d());
        std::cout << "exceeds_cm: " << (exceeds ? "yes" : "no") << "\n";
        if (!exceeds) return 2;
    }
    return 0;
}

int cmd_blanchfield(const std::string& knot) {
    KnotDescriptor d = resolve_knot(knot);
    SeifertForm s = effective_seifert(d);
    BlanchfieldForm b = blanchfield(s);
    std::cout << "matrix (" << s.size() << "x" << s.size() << "):\n";
    for (int i = 0; i < s.size(); ++i) {
        for (int j = 0; j < s.size(); ++j)
            std::cout << (j ? "  " : "") << b.matrix[i][j].str();
        std::cout << "\n";
    }
    try {
        AlexanderModule m = crt_split(decompose(s), s);
        auto subs = self_annihilating_submodules(m, b);
        std::cout << "self_annihilating_submodules: " << subs.size() << "\n";
    } catch (const ModuleShapeError& e) {
        std::cout << "self_annihilating_submodules: unsupported ("
                  << e.what() << ")\n";
        return 2;
    }
    return 0;
}

int cmd_metabolizer(const std::string& knot, int bound, bool hyperbolic) {
    KnotDescriptor d = resolve_knot(knot);
    SeifertForm s = effective_seifert(d);
    auto w = hyperbolic ? find_hyperbolic_basis(s, bound)
                        : find_metabolizer(s, bound);
    const char* what = hyperbolic ? "hyperbolic" : "metabolic";
    if (!w.has_value()) {
        std::cout << "no " << what << " basis found at bound " << bound
                  << " (inconclusive)\n";
        return 2;
    }
    std::cout << what << " basis change:\n";
    for (int r = 0; r < w->basis_change.rows(); ++r) {
        for (int c = 0; c < w->basis_change.cols(); ++c)
            std::cout << (c ? " " : "") << w->basis_change.at(r, c);
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact algebraic sliceness and double-sliceness obstructions"};
    app.require_subcommand(1);

    std::string knot, cm;
    int bound = 2, fa = 1, fc = 3, fn = 1;
    bool as_json = false, count_only = false, hyperbolic = false;

    CLI::App* inv = app.add_subcommand("invariants", "basic knot invariants");
    inv->add_option("--knot", knot, "catalog name or input file")->required();
    inv->add_flag("--json", as_json);

    CLI::App* cls = app.add_subcommand("classify", "full obstruction report");
    cls->add_option("--knot", knot)->required();
    cls->add_option("--bound", bound, "search bound for lattice vectors");
    cls->add_flag("--json", as_json);

    CLI::App* fam = app.add_subcommand("family", "commutator pair families");
    fam->add_option("--a", fa)->required();
    fam->add_option("--c", fc)->required();
    fam->add_option("--n", fn)->required();
    fam->add_flag("--count", count_only);
    fam->add_flag("--json", as_json);

    CLI::App* rho = app.add_subcommand("rho", "abelian rho invariant");
    rho->add_option("--knot", knot)->required();
    rho->add_option("--cm", cm, "compare |rho| against this bound");
    rho->add_flag("--json", as_json);

    CLI::App* bl = app.add_subcommand("blanchfield", "pairing matrix");
    bl->add_option("--knot", knot)->required();

    CLI::App* met = app.add_subcommand("metabolizer", "lagrangian search");
    met->add_option("--knot", knot)->required();
    met->add_option("--bound", bound);
    met->add_flag("--hyperbolic", hyperbolic, "require both blocks zero");

    CLI::App* cat = app.add_subcommand("catalog", "list built-in knots");
    cat->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (inv->parsed()) return cmd_invariants(knot, as_json);
        if (cls->parsed()) return cmd_classify(knot, bound, as_json);
        if (fam->parsed()) return cmd_family(fa, fc, fn, count_only, as_json);
        if (rho->parsed()) return cmd_rho(knot, cm, as_json);
        if (bl->parsed()) return cmd_blanchfield(knot);
        if (met->parsed()) return cmd_metabolizer(knot, bound, hyperbolic);
        if (cat->parsed()) return cmd_catalog(as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
