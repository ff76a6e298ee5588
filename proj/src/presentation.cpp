#include "tnov/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tnov {

FreeWord::FreeWord(std::vector<Letter> letters) {
    for (const Letter& l : letters) {
        if (l.exp != 1 && l.exp != -1) throw math_error("letter exponent must be +-1");
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

FreeWord FreeWord::inverse() const {
    std::vector<Letter> inv;
    inv.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        inv.push_back(Letter{it->gen, -it->exp});
    return FreeWord(std::move(inv));
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
    return FreeWord(std::move(cat));
}

bool FreeWord::operator<(const FreeWord& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
}

int Presentation::generator_index(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

// ------------------------------------------------------------------- parsing

namespace {

std::string lowercase(const std::string& s) {
    std::string r = s;
    std::transform(r.begin(), r.end(), r.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return r;
}

bool valid_generator_name(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::islower(c) || std::isdigit(c);
    });
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

FreeWord parse_word(const std::string& text, const Presentation& p) {
    std::vector<Letter> letters;
    for (const std::string& tok : split_ws(text)) {
        std::string core = tok;
        long long power = 1;
        size_t caret = tok.find('^');
        if (caret != std::string::npos) {
            core = tok.substr(0, caret);
            try {
                power = std::stoll(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw input_error("bad power in word token '" + tok + "'");
            }
        }
        if (core.empty()) throw input_error("empty word token");
        bool upper = std::isupper(static_cast<unsigned char>(core[0]));
        std::string name = upper ? lowercase(core) : core;
        int g = p.generator_index(name);
        if (g < 0) throw input_error("unknown generator '" + core + "' in relator");
        int exp = upper ? -1 : 1;
        long long total = power * exp;
        for (long long i = 0; i < std::llabs(total); ++i)
            letters.push_back(Letter{g, total > 0 ? 1 : -1});
    }
    return FreeWord(std::move(letters));
}

std::string render_word(const FreeWord& w, const Presentation& p) {
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : w.letters()) {
        if (!first) os << " ";
        std::string name = p.generators[static_cast<size_t>(l.gen)];
        if (l.exp == -1)
            std::transform(name.begin(), name.end(), name.begin(),
                           [](unsigned char c) { return std::toupper(c); });
        os << name;
        first = false;
    }
    return os.str();
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<int, std::string>> rel_lines;
    while (std::getline(is, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (trimmed.empty()) continue;
        if (trimmed.rfind("gens:", 0) == 0) {
            if (!p.generators.empty())
                throw input_error("line " + std::to_string(lineno) + ": duplicate gens line");
            for (const std::string& name : split_ws(trimmed.substr(5))) {
                if (!valid_generator_name(name))
                    throw input_error("line " + std::to_string(lineno) + ": bad generator name '" +
                                      name + "'");
                if (p.generator_index(name) >= 0)
                    throw input_error("line " + std::to_string(lineno) + ": duplicate generator '" +
                                      name + "'");
                p.generators.push_back(name);
            }
        } else if (trimmed.rfind("rel:", 0) == 0) {
            rel_lines.emplace_back(lineno, trimmed.substr(4));
        } else {
            throw input_error("line " + std::to_string(lineno) + ": expected 'gens:' or 'rel:'");
        }
    }
    if (p.generators.empty()) throw input_error("presentation has no 'gens:' line");
    for (auto& [ln, body] : rel_lines) {
        try {
            p.relators.push_back(parse_word(body, p));
        } catch (const input_error& e) {
            throw input_error("line " + std::to_string(ln) + ": " + e.what());
        }
    }
    return p;
}

// ------------------------------------------------------------------ group ring

GroupRingElement GroupRingElement::of_word(const FreeWord& w, const mpz_class& c) {
    GroupRingElement e;
    if (c != 0) e.terms_[w] = c;
    return e;
}

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r = a;
    for (auto& [w, c] : b.terms_) {
        mpz_class s = c;
        auto it = r.terms_.find(w);
        if (it != r.terms_.end()) s += it->second;
        if (s == 0)
            r.terms_.erase(w);
        else
            r.terms_[w] = s;
    }
    return r;
}

GroupRingElement gr_neg(const GroupRingElement& a) {
    GroupRingElement r = a;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

GroupRingElement gr_sub(const GroupRingElement& a, const GroupRingElement& b) {
    return gr_add(a, gr_neg(b));
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms()) {
            FreeWord w = wa * wb;
            mpz_class s = ca * cb;
            auto it = r.terms_.find(w);
            if (it != r.terms_.end()) s += it->second;
            if (s == 0)
                r.terms_.erase(w);
            else
                r.terms_[w] = s;
        }
    return r;
}

GroupRingElement one_minus(const FreeWord& g) {
    return gr_sub(GroupRingElement::one(), GroupRingElement::of_word(g));
}

std::string GroupRingElement::to_string(const Presentation& p) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : terms_) {
        mpz_class ca = c < 0 ? mpz_class(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (ca != 1 || w.is_identity()) os << ca.get_str();
        if (!w.is_identity()) {
            if (ca != 1) os << "*";
            os << "(" << render_word(w, p) << ")";
        }
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------------------ Fox calculus

GroupRingElement fox_derivative(const FreeWord& r, int gen) {
    GroupRingElement result;
    FreeWord prefix;
    for (const Letter& l : r.letters()) {
        if (l.gen == gen) {
            if (l.exp == 1) {
                result = gr_add(result, GroupRingElement::of_word(prefix));
            } else {
                FreeWord w = prefix * FreeWord::generator(l.gen, -1);
                result = gr_add(result, GroupRingElement::of_word(w, -1));
            }
        }
        prefix = prefix * FreeWord::generator(l.gen, l.exp);
    }
    return result;
}

std::vector<std::vector<GroupRingElement>> alexander_matrix(const Presentation& p) {
    std::vector<std::vector<GroupRingElement>> m;
    m.reserve(p.relators.size());
    for (const FreeWord& r : p.relators) {
        std::vector<GroupRingElement> row;
        row.reserve(p.generators.size());
        for (size_t j = 0; j < p.generators.size(); ++j)
            row.push_back(fox_derivative(r, static_cast<int>(j)));
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<GroupRingElement> fundamental_column(const Presentation& p) {
    std::vector<GroupRingElement> col;
    col.reserve(p.generators.size());
    for (size_t j = 0; j < p.generators.size(); ++j)
        col.push_back(one_minus(FreeWord::generator(static_cast<int>(j))));
    return col;
}

bool product_vanishes_in_zg(const Presentation& p,
                            const std::vector<std::vector<GroupRingElement>>& alex,
                            const std::vector<GroupRingElement>& alpha) {
    for (size_t i = 0; i < alex.size(); ++i) {
        GroupRingElement acc;
        for (size_t j = 0; j < alpha.size(); ++j)
            acc = gr_add(acc, gr_mul(alex[i][j], alpha[j]));
        // the free-ring value of row_i * alpha is 1 - h_i
        GroupRingElement expected = one_minus(p.relators[i]);
        if (!(acc == expected)) return false;
    }
    return true;
}

}  // namespace tnov
