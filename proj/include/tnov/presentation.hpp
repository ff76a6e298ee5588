#pragma once

/* Finitely presented groups: freely reduced words, the integral group ring,
   Fox derivatives and the Alexander matrix of a presentation.

   Word grammar: whitespace-separated tokens, lowercase token = generator,
   uppercase = its inverse, optional ^n powers (n may be negative). */

#include "tnov/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace tnov {

struct Letter {
    int gen;
    int exp;  // +1 or -1
    bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
    bool operator<(const Letter& o) const { return gen != o.gen ? gen < o.gen : exp < o.exp; }
};

class FreeWord {
  public:
    FreeWord() = default;
    explicit FreeWord(std::vector<Letter> letters);  // freely reduces

    static FreeWord generator(int g, int e = 1) { return FreeWord({Letter{g, e}}); }

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& o) const;

    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
    bool operator<(const FreeWord& o) const;

  private:
    std::vector<Letter> letters_;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<FreeWord> relators;

    size_t num_generators() const { return generators.size(); }
    size_t num_relators() const { return relators.size(); }
    int generator_index(const std::string& name) const;  // -1 if absent
};

// `gens: <name>+` line, then `rel: <word>` lines; comments start with '#'.
Presentation parse_presentation(const std::string& text);

FreeWord parse_word(const std::string& text, const Presentation& p);
std::string render_word(const FreeWord& w, const Presentation& p);

// ------------------------------------------------------------ group ring ZG

class GroupRingElement {
  public:
    using TermMap = std::map<FreeWord, mpz_class>;

    GroupRingElement() = default;
    static GroupRingElement zero() { return GroupRingElement(); }
    static GroupRingElement one() { return of_word(FreeWord()); }
    static GroupRingElement of_word(const FreeWord& w, const mpz_class& c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }

    std::string to_string(const Presentation& p) const;

  private:
    TermMap terms_;
    friend GroupRingElement gr_add(const GroupRingElement&, const GroupRingElement&);
    friend GroupRingElement gr_neg(const GroupRingElement&);
    friend GroupRingElement gr_mul(const GroupRingElement&, const GroupRingElement&);
};

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_neg(const GroupRingElement& a);
GroupRingElement gr_sub(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);

// 1 - g as a group ring element
GroupRingElement one_minus(const FreeWord& g);

// ---------------------------------------------------------------- Fox calculus

// d(r)/d(g): d(g)/d(g) = 1, d(g^-1)/d(g) = -g^-1, d(uv)/dg = du/dg + u dv/dg
GroupRingElement fox_derivative(const FreeWord& r, int gen);

// l x s matrix with entry (i,j) = d(h_i)/d(g_j)
std::vector<std::vector<GroupRingElement>> alexander_matrix(const Presentation& p);

// column (1-g_1, ..., 1-g_s)^T
std::vector<GroupRingElement> fundamental_column(const Presentation& p);

// A*alpha + (h_i - 1) = 0 in the free group ring (Fox fundamental identity),
// i.e. A*alpha = 0 in ZG.  Returns true when the identity holds.
bool product_vanishes_in_zg(const Presentation& p,
                            const std::vector<std::vector<GroupRingElement>>& alex,
                            const std::vector<GroupRingElement>& alpha);

}  // namespace tnov
