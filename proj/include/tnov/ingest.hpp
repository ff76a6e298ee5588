#pragma once

/* Planar-diagram codes and braid words to Wirtinger-style presentations of
   link groups, with the meridian abelianization convention.

   PD crossings are 4-tuples (i,j,k,l) read counterclockwise starting from the
   incoming under-arc i; the under-strand leaves at k and the over-strand
   occupies j and l. */

#include "tnov/abelian.hpp"
#include "tnov/presentation.hpp"

#include <array>
#include <string>
#include <vector>

namespace tnov {

struct PDCode {
    std::vector<std::array<int, 4>> crossings;
};

// `pd: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)` lines; comments start with '#'
PDCode parse_pd(const std::string& text);

struct LinkPresentation {
    Presentation presentation;
    int components = 0;
    std::vector<int> component_of_generator;  // per Wirtinger generator
};

// one generator per arc, one relator per crossing, trivial relators removed,
// last redundant relator dropped (deficiency one)
LinkPresentation pd_to_wirtinger(const PDCode& code);

// `braid: s1 s1 s1` (S1 = inverse letter); closure implied
LinkPresentation braid_closure(const std::string& text);

struct MeridianMap {
    int components = 0;
    std::vector<int> component_of_generator;
    AbelianMap one_variable;     // every meridian to t
    AbelianMap multi_variable;   // per-component variables
};

MeridianMap meridian_map(const LinkPresentation& lp);

}  // namespace tnov
