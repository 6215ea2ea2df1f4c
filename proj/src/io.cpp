#include "clab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace clab {

using nlohmann::json;

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational", 1, 1);
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + s + "'", 1, 1);
    }
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

Laurent parse_laurent(const std::string& s) {
    // terms: [+-] [coef] [t [^ exp]]
    Laurent out;
    size_t i = 0, n = s.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == n) throw ParseError("empty polynomial", 1, 1);
    bool any = false;
    while (i < n) {
        skip_ws();
        if (i == n) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw ParseError("expected '+' or '-'", 1, static_cast<int>(i) + 1);
        }
        std::string digits;
        while (i < n && (std::isdigit(static_cast<unsigned char>(s[i])) ||
                         s[i] == '/'))
            digits += s[i++];
        skip_ws();
        Rat coef = digits.empty() ? Rat(1) : parse_rational(digits);
        if (sign < 0) coef = -coef;
        int exp = 0;
        if (i < n && (s[i] == 't' || s[i] == '*')) {
            if (s[i] == '*') { ++i; skip_ws(); }
            if (i >= n || s[i] != 't')
                throw ParseError("expected 't'", 1, static_cast<int>(i) + 1);
            ++i;
            exp = 1;
            if (i < n && s[i] == '^') {
                ++i;
                std::string es;
                if (i < n && s[i] == '-') es += s[i++];
                while (i < n && std::isdigit(static_cast<unsigned char>(s[i])))
                    es += s[i++];
                if (es.empty() || es == "-")
                    throw ParseError("missing exponent", 1,
                                     static_cast<int>(i) + 1);
                exp = std::stoi(es);
            }
        } else if (digits.empty()) {
            throw ParseError("expected coefficient or 't'", 1,
                             static_cast<int>(i) + 1);
        }
        out += Laurent(coef, exp);
        any = true;
        skip_ws();
    }
    return out;
}

SeifertForm parse_seifert_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t h = line.find('#');
            if (h != std::string::npos) line.erase(h);
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("empty input", 1, 1);
    std::istringstream hdr(line);
    std::string tag;
    int n = -1;
    hdr >> tag >> n;
    if (tag != "seifert" || n < 0)
        throw ParseError("expected header 'seifert <n>'", lineno, 1);
    if (n % 2 != 0)
        throw ParseError("odd dimension: Seifert forms have even size",
                         lineno, 9);
    IntMat a(n, n);
    for (int r = 0; r < n; ++r) {
        if (!next_line())
            throw ParseError("expected " + std::to_string(n) + " rows",
                             lineno + 1, 1);
        std::istringstream row(line);
        for (int c = 0; c < n; ++c) {
            long v;
            if (!(row >> v))
                throw ParseError("row has fewer than " + std::to_string(n) +
                                     " integer entries",
                                 lineno, 1);
            a.at(r, c) = v;
        }
        long extra;
        if (row >> extra)
            throw ParseError("row has more than " + std::to_string(n) +
                                 " entries",
                             lineno, 1);
    }
    try {
        return SeifertForm(a);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, 1);
    }
}

std::string emit_seifert_text(const SeifertForm& s) {
    std::ostringstream os;
    os << "seifert " << s.size() << "\n";
    for (int r = 0; r < s.size(); ++r) {
        for (int c = 0; c < s.size(); ++c) {
            if (c) os << " ";
            os << s.matrix().at(r, c);
        }
        os << "\n";
    }
    return os.str();
}

namespace {

SignatureFunction steps_from_json(const json& j) {
    SignatureFunction f;
    f.values = {0};
    Rat prev(0);
    for (const json& step : j) {
        if (!step.is_array() || step.size() != 2)
            throw ParseError("each step must be [breakpoint, value]", 1, 1);
        Rat r = parse_rational(step[0].get<std::string>());
        if (r <= prev || r >= 1)
            throw ParseError("breakpoints must increase within (0,1)", 1, 1);
        f.breaks.push_back({true, r, r.get_d()});
        f.values.push_back(step[1].get<int>());
        prev = r;
    }
    return f;
}

json steps_to_json(const SignatureFunction& f) {
    json out = json::array();
    for (size_t i = 0; i < f.breaks.size(); ++i) {
        if (!f.breaks[i].exact)
            throw std::domain_error("cannot serialize inexact breakpoints");
        out.push_back({rat_str(f.breaks[i].r), f.values[i + 1]});
    }
    return out;
}

SeifertForm matrix_from_json(const json& j) {
    int n = static_cast<int>(j.size());
    IntMat a(n, n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(j[r].size()) != n)
            throw ParseError("matrix rows must all have length " +
                                 std::to_string(n),
                             1, 1);
        for (int c = 0; c < n; ++c) a.at(r, c) = j[r][c].get<long>();
    }
    try {
        return SeifertForm(a);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

KnotDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("descriptor needs a \"kind\" tag", 1, 1);
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "leaf") return KnotDescriptor::leaf(matrix_from_json(j.at("matrix")));
    if (kind == "steps")
        return KnotDescriptor::step_leaf_of(steps_from_json(j.at("steps")));
    if (kind == "sum") {
        std::vector<KnotDescriptor> parts;
        for (const json& p : j.at("parts"))
            parts.push_back(descriptor_from_json(p));
        return KnotDescriptor::sum(std::move(parts));
    }
    if (kind == "infection") {
        std::vector<std::pair<InfectionAxis, KnotDescriptor>> arms;
        for (const json& arm : j.at("arms")) {
            InfectionAxis axis;
            const json& ja = arm.at("axis");
            for (const json& c : ja.at("class"))
                axis.module_class.push_back(
                    parse_laurent(c.get<std::string>()));
            axis.derived_depth = ja.value("depth", 1);
            axis.disjoint_from_surface = ja.value("disjoint", true);
            axis.name = ja.value("name", "");
            arms.emplace_back(std::move(axis),
                              descriptor_from_json(arm.at("companion")));
        }
        return KnotDescriptor::infection(
            descriptor_from_json(j.at("seed")), std::move(arms));
    }
    throw ParseError("unknown kind '" + kind + "'", 1, 1);
}

json descriptor_to_json(const KnotDescriptor& d) {
    json j;
    switch (d.kind) {
        case KnotDescriptor::Kind::seifert_leaf: {
            j["kind"] = "leaf";
            json m = json::array();
            for (int r = 0; r < d.form.size(); ++r) {
                json row = json::array();
                for (int c = 0; c < d.form.size(); ++c)
                    row.push_back(d.form.matrix().at(r, c).get_si());
                m.push_back(row);
            }
            j["matrix"] = m;
            break;
        }
        case KnotDescriptor::Kind::step_leaf:
            j["kind"] = "steps";
            j["steps"] = steps_to_json(d.steps);
            break;
        case KnotDescriptor::Kind::sum: {
            j["kind"] = "sum";
            json parts = json::array();
            for (const KnotDescriptor& c : d.children)
                parts.push_back(descriptor_to_json(c));
            j["parts"] = parts;
            break;
        }
        case KnotDescriptor::Kind::infection: {
            j["kind"] = "infection";
            j["seed"] = descriptor_to_json(d.children.at(0));
            json arms = json::array();
            for (size_t i = 0; i < d.axes.size(); ++i) {
                json axis;
                json cls = json::array();
                for (const Laurent& c : d.axes[i].module_class)
                    cls.push_back(c.str());
                axis["class"] = cls;
                axis["depth"] = d.axes[i].derived_depth;
                axis["disjoint"] = d.axes[i].disjoint_from_surface;
                if (!d.axes[i].name.empty()) axis["name"] = d.axes[i].name;
                arms.push_back({{"axis", axis},
                                {"companion",
                                 descriptor_to_json(d.children.at(i + 1))}});
            }
            j["arms"] = arms;
            break;
        }
    }
    return j;
}

}  // namespace

KnotDescriptor parse_descriptor_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), 1, static_cast<int>(e.byte) + 1);
    }
    return descriptor_from_json(j);
}

std::string emit_descriptor_json(const KnotDescriptor& d) {
    return descriptor_to_json(d).dump(2) + "\n";
}

KnotDescriptor load_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'", 1, 1);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_descriptor_json(text);
    return KnotDescriptor::leaf(parse_seifert_text(text));
}

std::string signature_str(const SignatureFunction& f) {
    std::ostringstream os;
    os << f.values[0];
    for (size_t i = 0; i < f.breaks.size(); ++i) {
        os << " | ";
        if (f.breaks[i].exact)
            os << rat_str(f.breaks[i].r);
        else
            os << "~" << f.breaks[i].rd;
        os << " | " << f.values[i + 1];
    }
    return os.str();
}

namespace {

const char* tri_str(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "inconclusive";
    }
}

const char* check_str(Check c) {
    switch (c) {
        case Check::pass: return "pass";
        case Check::fail: return "fail";
        case Check::indeterminate: return "indeterminate";
        default: return "inapplicable";
    }
}

const char* dof_str(Dof d) {
    switch (d) {
        case Dof::obstructed: return "obstructed";
        case Dof::unobstructed: return "unobstructed";
        case Dof::inconclusive: return "inconclusive";
        default: return "inapplicable";
    }
}

}  // namespace

std::string report_text(const ObstructionReport& r) {
    std::ostringstream os;
    os << "arf: " << r.arf << "\n";
    os << "alg_slice: " << tri_str(r.alg_slice) << "\n";
    os << "alg_doubly_slice: " << tri_str(r.alg_doubly_slice) << "\n";
    os << "selfann_count: "
       << (r.selfann_count < 0 ? std::string("unsupported")
                               : std::to_string(r.selfann_count))
       << "\n";
    os << "gilmer_livingston: " << check_str(r.gilmer_livingston) << "\n";
    os << "double_one_five: " << dof_str(r.double_one_five) << "\n";
    for (const std::string& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string report_json(const ObstructionReport& r) {
    json j;
    j["arf"] = r.arf;
    j["alg_slice"] = tri_str(r.alg_slice);
    j["alg_doubly_slice"] = tri_str(r.alg_doubly_slice);
    if (r.selfann_count >= 0)
        j["selfann_count"] = r.selfann_count;
    else
        j["selfann_count"] = nullptr;
    j["gilmer_livingston"] = check_str(r.gilmer_livingston);
    j["double_one_five"] = dof_str(r.double_one_five);
    j["notes"] = r.notes;
    j["has_metabolizer_witness"] = r.metabolizer.has_value();
    j["has_hyperbolic_witness"] = r.hyperbolic.has_value();
    return j.dump(2) + "\n";
}

}  // namespace clab
