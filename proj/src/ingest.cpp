#include "tnov/ingest.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace tnov {

PDCode parse_pd(const std::string& text) {
    PDCode code;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool seen = false;
    while (std::getline(is, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (trimmed.empty()) continue;
        if (trimmed.rfind("pd:", 0) != 0)
            throw input_error("line " + std::to_string(lineno) + ": expected 'pd:' line");
        seen = true;
        std::string body = trimmed.substr(3);
        size_t pos = 0;
        while (pos < body.size()) {
            while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
            if (pos >= body.size()) break;
            if (body[pos] != 'X' && body[pos] != 'x')
                throw input_error("line " + std::to_string(lineno) + ": expected X(...)");
            ++pos;
            if (pos >= body.size() || body[pos] != '(')
                throw input_error("line " + std::to_string(lineno) + ": expected '(' after X");
            size_t close = body.find(')', pos);
            if (close == std::string::npos)
                throw input_error("line " + std::to_string(lineno) + ": unterminated X(...)");
            std::string inner = body.substr(pos + 1, close - pos - 1);
            std::array<int, 4> cr{};
            int idx = 0;
            std::istringstream cs(inner);
            std::string tok;
            while (std::getline(cs, tok, ',')) {
                if (idx >= 4) throw input_error("line " + std::to_string(lineno) + ": too many arc labels");
                try {
                    cr[static_cast<size_t>(idx++)] = std::stoi(tok);
                } catch (const std::exception&) {
                    throw input_error("line " + std::to_string(lineno) + ": bad arc label '" + tok + "'");
                }
            }
            if (idx != 4) throw input_error("line " + std::to_string(lineno) + ": crossing needs 4 labels");
            code.crossings.push_back(cr);
            pos = close + 1;
        }
    }
    if (!seen) throw input_error("no 'pd:' line found");
    return code;
}

namespace {

// successor permutation along the link: under i -> k forced, over j -> l or
// l -> j chosen by backtracking so every edge has exactly one successor
struct SuccBuilder {
    const std::vector<std::array<int, 4>>& crossings;
    std::vector<int> edges;
    std::map<int, int> succ;
    std::set<int> used;
    std::vector<std::array<std::pair<int, int>, 2>> options;

    explicit SuccBuilder(const PDCode& code) : crossings(code.crossings) {
        std::set<int> es;
        std::map<int, int> count;
        for (const auto& c : crossings)
            for (int e : c) {
                es.insert(e);
                ++count[e];
            }
        for (auto& [e, n] : count)
            if (n != 2) throw input_error("malformed PD code: arc label " + std::to_string(e) +
                                          " appears " + std::to_string(n) + " times");
        edges.assign(es.begin(), es.end());
        for (const auto& c : crossings) {
            int i = c[0], j = c[1], k = c[2], l = c[3];
            if (succ.count(i)) throw input_error("malformed PD code: duplicate under-incoming arc");
            succ[i] = k;
            used.insert(k);
            std::pair<int, int> fwd{j, l}, bwd{l, j};
            if (l == j + 1)
                options.push_back({fwd, bwd});
            else if (j == l + 1)
                options.push_back({bwd, fwd});
            else if (l < j)
                options.push_back({fwd, bwd});
            else
                options.push_back({bwd, fwd});
        }
    }

    bool rec(size_t idx) {
        if (idx == options.size()) return succ.size() == edges.size();
        for (const auto& [a, b] : options[idx]) {
            if (succ.count(a) || used.count(b)) continue;
            succ[a] = b;
            used.insert(b);
            if (rec(idx + 1)) return true;
            succ.erase(a);
            used.erase(b);
        }
        return false;
    }
};

struct UnionFind {
    std::map<int, int> parent;
    int find(int x) {
        if (!parent.count(x)) parent[x] = x;
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string arc_name(size_t i) {
    // a, b, ..., z, a1, b1, ...
    std::string base(1, static_cast<char>('a' + i % 26));
    if (i >= 26) base += std::to_string(i / 26);
    return base;
}

}  // namespace

LinkPresentation pd_to_wirtinger(const PDCode& code) {
    if (code.crossings.empty()) throw input_error("PD code has no crossings");
    SuccBuilder sb(code);
    if (!sb.rec(0)) throw input_error("malformed PD code: no consistent orientation");

    // components: cycles of the successor permutation
    std::map<int, int> comp;
    int ncomp = 0;
    for (int e : sb.edges) {
        if (comp.count(e)) continue;
        int x = e;
        while (!comp.count(x)) {
            comp[x] = ncomp;
            x = sb.succ[x];
        }
        ++ncomp;
    }
    // arcs: edges joined across over-passages
    UnionFind uf;
    for (int e : sb.edges) uf.find(e);
    for (const auto& c : code.crossings) uf.unite(c[1], c[3]);
    std::vector<int> arc_roots;
    for (int e : sb.edges) {
        int r = uf.find(e);
        if (std::find(arc_roots.begin(), arc_roots.end(), r) == arc_roots.end())
            arc_roots.push_back(r);
    }
    std::sort(arc_roots.begin(), arc_roots.end());
    auto gen_of = [&](int edge) {
        int r = uf.find(edge);
        return static_cast<int>(std::find(arc_roots.begin(), arc_roots.end(), r) - arc_roots.begin());
    };

    LinkPresentation lp;
    for (size_t i = 0; i < arc_roots.size(); ++i) lp.presentation.generators.push_back(arc_name(i));
    std::vector<FreeWord> relators;
    for (const auto& c : code.crossings) {
        int i = c[0], j = c[1], k = c[2], l = c[3];
        int over = gen_of(j);
        int gin = gen_of(i), gout = gen_of(k);
        bool positive = sb.succ.count(j) && sb.succ[j] == l;  // over-strand runs j -> l
        int e = positive ? 1 : -1;
        // out = over^e * in * over^-e
        FreeWord rel = FreeWord({Letter{gout, -1}, Letter{over, e}, Letter{gin, 1}, Letter{over, -e}});
        if (!rel.is_identity()) relators.push_back(rel);
    }
    // one Wirtinger relator is always redundant
    if (relators.size() == code.crossings.size() && !relators.empty()) relators.pop_back();
    lp.presentation.relators = relators;
    lp.components = ncomp;
    lp.component_of_generator.resize(arc_roots.size(), 0);
    for (int e : sb.edges) lp.component_of_generator[static_cast<size_t>(gen_of(e))] = comp[e];
    return lp;
}

LinkPresentation braid_closure(const std::string& text) {
    std::string body = text;
    size_t hash = body.find('#');
    if (hash != std::string::npos) body = body.substr(0, hash);
    size_t colon = body.find("braid:");
    if (colon != std::string::npos) body = body.substr(colon + 6);
    std::istringstream is(body);
    std::string tok;
    std::vector<int> word;  // +i for sigma_i, -i for inverse
    int max_strand = 1;
    while (is >> tok) {
        bool inv = tok[0] == 'S';
        if (tok[0] != 's' && tok[0] != 'S') throw input_error("bad braid token '" + tok + "'");
        std::string num = tok.substr(1);
        size_t caret = num.find("^-1");
        if (caret != std::string::npos) {
            inv = !inv;
            num = num.substr(0, caret);
        }
        int i;
        try {
            i = std::stoi(num);
        } catch (const std::exception&) {
            throw input_error("bad braid token '" + tok + "'");
        }
        if (i < 1) throw input_error("braid letters are numbered from 1");
        max_strand = std::max(max_strand, i + 1);
        word.push_back(inv ? -i : i);
    }
    if (word.empty()) throw input_error("empty braid word");
    int n = max_strand;

    LinkPresentation lp;
    for (int i = 0; i < n; ++i) lp.presentation.generators.push_back(arc_name(static_cast<size_t>(i)));
    // run the Artin action on the strand words
    std::vector<FreeWord> strand(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) strand[static_cast<size_t>(i)] = FreeWord::generator(i);
    for (int letter : word) {
        size_t i = static_cast<size_t>(std::abs(letter)) - 1;
        FreeWord a = strand[i], b = strand[i + 1];
        if (letter > 0) {
            strand[i] = a * b * a.inverse();
            strand[i + 1] = a;
        } else {
            strand[i] = b;
            strand[i + 1] = b.inverse() * a * b;
        }
    }
    // closure: x_j = beta(x)_j; one relation is redundant
    std::vector<FreeWord> relators;
    for (int i = 0; i < n; ++i) {
        FreeWord rel = FreeWord::generator(i).inverse() * strand[static_cast<size_t>(i)];
        if (!rel.is_identity()) relators.push_back(rel);
    }
    if (relators.size() == static_cast<size_t>(n) && !relators.empty()) relators.pop_back();
    lp.presentation.relators = relators;

    // components: cycles of the strand permutation
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int letter : word) {
        size_t i = static_cast<size_t>(std::abs(letter)) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int ncomp = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[static_cast<size_t>(i)] >= 0) continue;
        int x = i;
        while (comp[static_cast<size_t>(x)] < 0) {
            comp[static_cast<size_t>(x)] = ncomp;
            x = perm[static_cast<size_t>(x)];
        }
        ++ncomp;
    }
    lp.components = ncomp;
    lp.component_of_generator = comp;
    return lp;
}

MeridianMap meridian_map(const LinkPresentation& lp) {
    MeridianMap mm;
    mm.components = lp.components;
    mm.component_of_generator = lp.component_of_generator;
    size_t s = lp.presentation.num_generators();
    mm.one_variable.k = 1;
    mm.one_variable.images.assign(s, Monomial{1});
    mm.multi_variable.k = lp.components;
    mm.multi_variable.images.resize(s);
    for (size_t j = 0; j < s; ++j) {
        Monomial m(static_cast<size_t>(lp.components), 0);
        m[static_cast<size_t>(lp.component_of_generator[j])] = 1;
        mm.multi_variable.images[j] = m;
    }
    if (!validate_epimorphism(mm.one_variable, lp.presentation))
        throw math_error("meridian map does not kill the relators");
    if (!validate_epimorphism(mm.multi_variable, lp.presentation))
        throw math_error("component meridian map is inconsistent with the relators");
    return mm;
}

}  // namespace tnov
