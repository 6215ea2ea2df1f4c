#include "clab/words.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace clab {

GroupWord reduce(const GroupWord& w) {
    GroupWord out;
    for (const Letter& l : w) {
        if (l.gen < 1 || l.gen > 4 || (l.exp != 1 && l.exp != -1))
            throw std::invalid_argument("bad letter");
        if (!out.empty() && out.back().gen == l.gen &&
            out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

GroupWord inverse_word(const GroupWord& w) {
    GroupWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->gen, -it->exp});
    return out;
}

GroupWord concat(const GroupWord& u, const GroupWord& v) {
    GroupWord out = u;
    out.insert(out.end(), v.begin(), v.end());
    return reduce(out);
}

GroupWord generator(int i, int exp) {
    return reduce({{i, exp}});
}

GroupWord commutator(const GroupWord& y, const GroupWord& z) {
    return concat(concat(inverse_word(y), inverse_word(z)), concat(y, z));
}

GroupWord conjugate(const GroupWord& y, const GroupWord& x) {
    return concat(concat(inverse_word(x), y), x);
}

std::string word_str(const GroupWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const Letter& l : w) {
        s += "x" + std::to_string(l.gen);
        if (l.exp == -1) s += "^-1";
    }
    return s;
}

namespace {

void check_label(int a, int c) {
    if (a != 1 && a != 2) throw std::invalid_argument("label a not in {1,2}");
    if (c != 3 && c != 4) throw std::invalid_argument("label c not in {3,4}");
}

CommPair base_pair(int a, int c) {
    CommPair p;
    p.a = a;
    p.c = c;
    p.depth = 1;
    GroupWord xa = generator(a), xb = generator(3 - a);
    GroupWord xc = generator(c), xd = generator(7 - c);
    p.first = commutator(xa, xb);
    p.second = commutator(xa, xc);
    return p;
}

// the three recursion branches applied to (y, z)
CommPair step_pair(const CommPair& p, int branch) {
    GroupWord xa = generator(p.a);
    const GroupWord& y = p.first;
    const GroupWord& z = p.second;
    CommPair q;
    q.a = p.a;
    q.c = p.c;
    q.depth = p.depth + 1;
    q.derivation = p.derivation;
    q.derivation.push_back(branch);
    switch (branch) {
        case 0:
            q.first = commutator(y, conjugate(y, xa));
            q.second = commutator(z, conjugate(z, xa));
            break;
        case 1:
            q.first = commutator(y, z);
            q.second = commutator(z, conjugate(z, xa));
            break;
        case 2:
            q.first = commutator(y, conjugate(y, xa));
            q.second = commutator(y, z);
            break;
        default:
            throw std::invalid_argument("derivation branch not in 0..2");
    }
    return q;
}

}  // namespace

std::vector<CommPair> generate_family(const FamilySpec& spec) {
    check_label(spec.a, spec.c);
    if (spec.n < 1) throw std::invalid_argument("depth must be >= 1");
    std::vector<CommPair> level{base_pair(spec.a, spec.c)};
    for (int d = 1; d < spec.n; ++d) {
        std::vector<CommPair> next;
        for (const CommPair& p : level)
            for (int b = 0; b < 3; ++b) next.push_back(step_pair(p, b));
        level = std::move(next);
    }
    return level;
}

namespace {

long pow3(int e) {
    long r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

long count_union(const std::vector<FamilySpec>& specs) {
    std::set<std::pair<GroupWord, GroupWord>> seen;
    for (const FamilySpec& s : specs)
        for (const CommPair& p : generate_family(s))
            seen.insert({p.first, p.second});
    return 2 * static_cast<long>(seen.size());
}

}  // namespace

long family_union_count(int m) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    long count =
        count_union({{1, 3, m - 1}, {1, 4, m - 1}, {2, 3, m - 1}});
    if (count != 2 * pow3(m - 1))
        throw std::logic_error("family union count disagrees with 2*3^(m-1)");
    return count;
}

long family_union_count(int k, int l) {
    if (k < 2 || l < k) throw std::invalid_argument("need l >= k >= 2");
    long count = count_union(
        {{1, 3, k - 1}, {1, 4, k - 1}, {2, 3, k - 1}, {2, 4, l - 1}});
    if (count != 2 * (3 * pow3(k - 2) + pow3(l - 2)))
        throw std::logic_error("family union count disagrees with closed form");
    return count;
}

std::array<long, 4> abelianization(const GroupWord& w) {
    std::array<long, 4> e{0, 0, 0, 0};
    for (const Letter& l : w) e[l.gen - 1] += l.exp;
    return e;
}

MultiLaurent fox_derivative_ab(const GroupWord& w, int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("generator index");
    MultiLaurent d;
    MultiLaurent::Exps prefix{0, 0, 0, 0};
    for (const Letter& l : reduce(w)) {
        if (l.exp == 1) {
            if (l.gen == i) d = d + MultiLaurent::monomial(prefix);
            prefix[l.gen - 1] += 1;
        } else {
            prefix[l.gen - 1] -= 1;
            if (l.gen == i) d = d - MultiLaurent::monomial(prefix);
        }
    }
    return d;
}

bool in_second_derived(const GroupWord& w) {
    if (abelianization(w) != std::array<long, 4>{0, 0, 0, 0}) return false;
    for (int i = 1; i <= 4; ++i)
        if (!fox_derivative_ab(w, i).is_zero()) return false;
    return true;
}

bool certify_depth(const CommPair& p) {
    check_label(p.a, p.c);
    if (p.depth < 1 ||
        static_cast<int>(p.derivation.size()) != p.depth - 1)
        throw std::invalid_argument("malformed derivation");
    CommPair q = base_pair(p.a, p.c);
    for (int b : p.derivation) q = step_pair(q, b);
    return q.first == reduce(p.first) && q.second == reduce(p.second);
}

}  // namespace clab
