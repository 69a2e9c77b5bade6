#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weylwalk/group.hpp"

namespace weylwalk {

// Conjugacy class label. Type A: partition of m (cycle type). Type C: a pair
// of partitions (pos, neg) with |pos| + |neg| = g (signed cycle type).
// Parts are kept sorted descending so equality is structural.
struct WeylClass {
    Family family = Family::A;
    std::vector<unsigned> parts; // type A
    std::vector<unsigned> pos;   // type C
    std::vector<unsigned> neg;   // type C

    static WeylClass type_a(std::vector<unsigned> parts);
    static WeylClass type_c(std::vector<unsigned> pos, std::vector<unsigned> neg);

    unsigned weight() const; // m or g

    auto operator<=>(const WeylClass&) const = default;

    std::string to_string() const;
};

// All conjugacy classes of the Weyl group with exact class fractions
// |C| / |W|.
struct ClassTable {
    GroupSpec group;
    std::vector<WeylClass> classes;
    std::vector<mpq_class> fractions; // aligned with classes; sums to 1 exactly
    mpz_class weyl_order;

    std::size_t size() const { return classes.size(); }
    // index of a class; throws config_error when absent
    std::size_t index_of(const WeylClass& c) const;
    mpz_class class_size(std::size_t i) const; // |C| = fraction * |W|
};

// Practical cap rank <= 64.
ClassTable enumerate_classes(const GroupSpec& group);

struct Certificate {
    enum class Verdict { ProvenFullWeyl, Inconclusive, Degenerate };
    Verdict verdict = Verdict::Inconclusive;
    std::vector<WeylClass> observed; // table order
    std::vector<WeylClass> missing;  // table order
};

// Jordan's lemma: no proper subgroup of a finite group meets every conjugacy
// class. Together with the a priori inclusion Gal <= W, observing all classes
// proves the full Weyl group; anything less is Inconclusive.
Certificate jordan_certificate(const ClassTable& table, const std::set<WeylClass>& observed);

// Explicit enumeration for small groups: every (signed) permutation with its
// class label. Validation oracle for the centralizer-order fractions.
// Type A caps at m <= 8, type C at g <= 5.
struct BruteForceElement {
    // images[i] = signed image of letter i: +(j+1) or -(j+1), 0-based letters
    std::vector<int> images;
    WeylClass cls;
};
std::vector<BruteForceElement> brute_force_group(const GroupSpec& group);

// Number of partitions of n; cross-check for class counts.
mpz_class partition_count(unsigned n);

std::string verdict_name(Certificate::Verdict v);

} // namespace weylwalk
