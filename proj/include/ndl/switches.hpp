#ifndef NDL_SWITCHES_HPP
#define NDL_SWITCHES_HPP

#include <vector>

#include "ndl/graph.hpp"

namespace ndl {

// Remove edges {v1,v2} and {w1,w2}; add edges {v1,w2} and {v2,w1}.
// The orientation matters: it decides which new edges appear.
struct TwoSwitch {
    int v1 = 0, v2 = 0, w1 = 0, w2 = 0;

    // Representative of the symmetry class
    // (v1,v2,w1,w2) ~ (w1,w2,v1,v2) ~ (v2,v1,w2,w1) ~ (w2,w1,v2,v1).
    TwoSwitch canonical() const;

    friend bool operator==(const TwoSwitch&, const TwoSwitch&) = default;
    friend auto operator<=>(const TwoSwitch&, const TwoSwitch&) = default;
};

using SwitchSequence = std::vector<TwoSwitch>;

enum class SwitchClass {
    invalid,
    plain,
    degree_restricted, // additionally deg(v1)=deg(w1) and deg(v2)=deg(w2)
};

// Total classification; edges inside {v1,w1} or {v2,w2} are allowed.
SwitchClass classify_switch(const Graph& g, const TwoSwitch& s);

// Hard contract: throws invalid_switch unless classify != invalid.
// Every vertex degree is unchanged in the result.
Graph apply_switch(const Graph& g, const TwoSwitch& s);

// The switch on the same four vertices that undoes s.
TwoSwitch inverse_switch(const TwoSwitch& s);

// All valid switches, deduplicated under the tuple symmetry, in
// lexicographic order of the canonical tuple. restricted=true keeps
// only degree-restricted ones. O(m^2) over oriented edge pairs.
std::vector<TwoSwitch> enumerate_switches(const Graph& g, bool restricted);

} // namespace ndl

#endif
