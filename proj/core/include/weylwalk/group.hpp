#pragma once

#include <string>

namespace weylwalk {

// A: SL(m), Weyl group S_m. C: Sp(2g), Weyl group the hyperoctahedral group
// of signed permutations on g letters.
enum class Family { A, C };

struct GroupSpec {
    Family family = Family::A;
    unsigned rank = 2; // m for type A, g for type C

    unsigned dim() const { return family == Family::A ? rank : 2 * rank; }
    bool operator==(const GroupSpec&) const = default;

    std::string name() const; // "SL(3)", "Sp(4)"
};

// Parses "SL(m)" (m >= 2) or "Sp(2g)" (g >= 1, even argument).
GroupSpec parse_group(const std::string& text);

} // namespace weylwalk
