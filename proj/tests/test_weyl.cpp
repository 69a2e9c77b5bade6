#include <doctest.h>

#include <map>

#include "weylwalk/errors.hpp"
#include "weylwalk/weyl.hpp"

using namespace weylwalk;

TEST_SUITE("weyl") {

TEST_CASE("S_3 classes and fractions") {
    const ClassTable t = enumerate_classes(GroupSpec{Family::A, 3});
    REQUIRE(t.size() == 3);
    std::map<WeylClass, mpq_class> got;
    for (std::size_t i = 0; i < t.size(); ++i) got[t.classes[i]] = t.fractions[i];
    CHECK(got[WeylClass::type_a({1, 1, 1})] == mpq_class(1, 6));
    CHECK(got[WeylClass::type_a({2, 1})] == mpq_class(1, 2));
    CHECK(got[WeylClass::type_a({3})] == mpq_class(1, 3));
    CHECK(t.weyl_order == 6);
}

TEST_CASE("identity class fraction is 1/m!") {
    for (unsigned m : {2u, 4u, 7u}) {
        const ClassTable t = enumerate_classes(GroupSpec{Family::A, m});
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), m);
        std::vector<unsigned> ones(m, 1);
        CHECK(t.fractions[t.index_of(WeylClass::type_a(ones))] == mpq_class(1) / mpq_class(fact));
    }
}

TEST_CASE("W(C_2) has 5 classes; all-negative-ones class has fraction 1/8") {
    const ClassTable t = enumerate_classes(GroupSpec{Family::C, 2});
    REQUIRE(t.size() == 5);
    CHECK(t.weyl_order == 8);
    CHECK(t.fractions[t.index_of(WeylClass::type_c({}, {1, 1}))] == mpq_class(1, 8));
}

TEST_CASE("fractions sum to exactly 1 (A: m <= 20, C: g <= 12)") {
    for (unsigned m = 2; m <= 20; ++m) {
        const ClassTable t = enumerate_classes(GroupSpec{Family::A, m});
        mpq_class total = 0;
        for (const auto& f : t.fractions) total += f;
        CHECK(total == 1);
    }
    for (unsigned g = 1; g <= 12; ++g) {
        const ClassTable t = enumerate_classes(GroupSpec{Family::C, g});
        mpq_class total = 0;
        for (const auto& f : t.fractions) total += f;
        CHECK(total == 1);
    }
}

TEST_CASE("class counts match the partition-counting routine") {
    for (unsigned m = 2; m <= 20; ++m) {
        const ClassTable t = enumerate_classes(GroupSpec{Family::A, m});
        CHECK(mpz_class(static_cast<unsigned long>(t.size())) == partition_count(m));
    }
    for (unsigned g = 1; g <= 12; ++g) {
        const ClassTable t = enumerate_classes(GroupSpec{Family::C, g});
        mpz_class expect = 0;
        for (unsigned k = 0; k <= g; ++k) expect += partition_count(k) * partition_count(g - k);
        CHECK(mpz_class(static_cast<unsigned long>(t.size())) == expect);
    }
}

TEST_CASE("formula fractions equal brute-force counts (A: m <= 8)") {
    for (unsigned m = 2; m <= 8; ++m) {
        const ClassTable t = enumerate_classes(GroupSpec{Family::A, m});
        const auto elements = brute_force_group(GroupSpec{Family::A, m});
        CHECK(mpz_class(static_cast<unsigned long>(elements.size())) == t.weyl_order);
        std::map<WeylClass, unsigned long> counts;
        for (const auto& el : elements) ++counts[el.cls];
        for (std::size_t i = 0; i < t.size(); ++i) {
            CHECK(mpq_class(counts[t.classes[i]]) ==
                  t.fractions[i] * mpq_class(t.weyl_order));
        }
    }
}

TEST_CASE("formula fractions equal brute-force counts (C: g <= 5)") {
    for (unsigned g = 1; g <= 5; ++g) {
        const ClassTable t = enumerate_classes(GroupSpec{Family::C, g});
        const auto elements = brute_force_group(GroupSpec{Family::C, g});
        CHECK(mpz_class(static_cast<unsigned long>(elements.size())) == t.weyl_order);
        std::map<WeylClass, unsigned long> counts;
        for (const auto& el : elements) ++counts[el.cls];
        for (std::size_t i = 0; i < t.size(); ++i) {
            CHECK(mpq_class(counts[t.classes[i]]) ==
                  t.fractions[i] * mpq_class(t.weyl_order));
        }
    }
}

TEST_CASE("brute force spot checks from the class formulas") {
    // (A,4): class (2,2) has 3 elements, fraction 1/8
    const auto a4 = brute_force_group(GroupSpec{Family::A, 4});
    unsigned long n22 = 0;
    for (const auto& el : a4)
        if (el.cls == WeylClass::type_a({2, 2})) ++n22;
    CHECK(n22 == 3);
    // (C,1): two classes of size 1 in |W| = 2
    const auto c1 = brute_force_group(GroupSpec{Family::C, 1});
    CHECK(c1.size() == 2);
    // (C,3): 2^3 * 3! = 48 elements
    CHECK(brute_force_group(GroupSpec{Family::C, 3}).size() == 48);
}

TEST_CASE("jordan_certificate verdicts") {
    const ClassTable t = enumerate_classes(GroupSpec{Family::A, 3});
    SUBCASE("all classes observed proves the full Weyl group") {
        std::set<WeylClass> obs(t.classes.begin(), t.classes.end());
        const Certificate c = jordan_certificate(t, obs);
        CHECK(c.verdict == Certificate::Verdict::ProvenFullWeyl);
        CHECK(c.missing.empty());
    }
    SUBCASE("a missing class is inconclusive") {
        std::set<WeylClass> obs{WeylClass::type_a({1, 1, 1}), WeylClass::type_a({2, 1})};
        const Certificate c = jordan_certificate(t, obs);
        CHECK(c.verdict == Certificate::Verdict::Inconclusive);
        REQUIRE(c.missing.size() == 1);
        CHECK(c.missing[0] == WeylClass::type_a({3}));
    }
    SUBCASE("empty observation set misses everything") {
        const Certificate c = jordan_certificate(t, {});
        CHECK(c.verdict == Certificate::Verdict::Inconclusive);
        CHECK(c.missing.size() == t.size());
    }
    SUBCASE("a foreign class is an input error") {
        CHECK_THROWS_AS(jordan_certificate(t, {WeylClass::type_a({4})}), config_error);
    }
}

TEST_CASE("descriptor range errors") {
    CHECK_THROWS_AS(enumerate_classes(GroupSpec{Family::A, 1}), config_error);
    CHECK_THROWS_AS(enumerate_classes(GroupSpec{Family::A, 65}), config_error);
    CHECK_THROWS_AS(brute_force_group(GroupSpec{Family::A, 9}), config_error);
    CHECK_THROWS_AS(brute_force_group(GroupSpec{Family::C, 6}), config_error);
}

} // TEST_SUITE
