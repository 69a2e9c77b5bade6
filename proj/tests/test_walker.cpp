#include <doctest.h>

#include "weylwalk/charpoly.hpp"
#include "weylwalk/errors.hpp"
#include "weylwalk/fp.hpp"
#include "weylwalk/walker.hpp"

using namespace weylwalk;

TEST_SUITE("walker") {

TEST_CASE("group parsing and membership") {
    CHECK(parse_group("SL(3)") == GroupSpec{Family::A, 3});
    CHECK(parse_group("Sp(4)") == GroupSpec{Family::C, 2});
    CHECK_THROWS_AS(parse_group("Sp(3)"), config_error);
    CHECK_THROWS_AS(parse_group("SL(1)"), config_error);
    CHECK_THROWS_AS(parse_group("SO(4)"), config_error);

    CHECK(group_contains(GroupSpec{Family::A, 2}, IntMatrix::identity(2)));
    IntMatrix two = IntMatrix::identity(2);
    two.at(0, 0) = 2;
    CHECK_FALSE(group_contains(GroupSpec{Family::A, 2}, two));
}

TEST_CASE("default generators: SL(2) has 5 elements, SL(3) has 13") {
    CHECK(default_generators(GroupSpec{Family::A, 2}).size() == 5);
    CHECK(default_generators(GroupSpec{Family::A, 3}).size() == 13);
}

TEST_CASE("default symplectic generators satisfy M^T J M = J") {
    for (unsigned g : {1u, 2u, 3u}) {
        const GroupSpec group{Family::C, g};
        for (const auto& gen : default_generators(group)) {
            CHECK(group_contains(group, gen.matrix));
        }
    }
    CHECK(default_generators(GroupSpec{Family::C, 2}).size() == 21);
}

TEST_CASE("generation mod p: SL(2) closure has all 24 elements at p=3") {
    const GroupSpec sl2{Family::A, 2};
    CHECK(sl_group_order(2, 3) == 24);
    CHECK(verify_generation_mod_p(sl2, default_generators(sl2), 3));
}

TEST_CASE("generation mod p: Sp(4) closure has all 51840 elements at p=3") {
    const GroupSpec sp4{Family::C, 2};
    CHECK(sp_group_order(2, 3) == 51840);
    CHECK(verify_generation_mod_p(sp4, default_generators(sp4), 3));
}

TEST_CASE("identity alone does not generate") {
    const GroupSpec sl2{Family::A, 2};
    std::vector<Generator> only_id;
    only_id.push_back({IntMatrix::identity(2), "id"});
    CHECK_FALSE(verify_generation_mod_p(sl2, only_id, 3));
}

TEST_CASE("walk determinism and n = 0") {
    WalkConfig config;
    config.group = parse_group("SL(3)");
    config.length = 0;
    config.master_seed = 42;
    config.validate_and_fill();
    CHECK(*run_walk(config, 0).exact == IntMatrix::identity(3));

    config.length = 40;
    const WalkState a = run_walk(config, 7);
    const WalkState b = run_walk(config, 7);
    REQUIRE(a.exact.has_value());
    CHECK(*a.exact == *b.exact);
    const WalkState c = run_walk(config, 8);
    CHECK_FALSE(*a.exact == *c.exact);
}

TEST_CASE("dual mode: exact reduction equals every modular component") {
    WalkConfig config;
    config.group = parse_group("SL(3)");
    config.length = 30;
    config.master_seed = 2026;
    config.mode = WalkMode::Dual;
    config.primes = primes_from(2, 20);
    config.validate_and_fill();
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        const WalkState state = run_walk(config, trial);
        REQUIRE(state.exact.has_value());
        REQUIRE(state.modular.size() == 20);
        for (std::size_t k = 0; k < config.primes.size(); ++k) {
            CHECK(state.exact->reduce(config.primes[k]) == state.modular[k]);
        }
    }
}

TEST_CASE("walk stays in the group (audit at stride 1)") {
    for (const char* name : {"SL(2)", "Sp(4)"}) {
        WalkConfig config;
        config.group = parse_group(name);
        config.length = 50;
        config.master_seed = 3;
        config.membership_check_stride = 1; // audit every step
        config.validate_and_fill();
        const WalkState state = run_walk(config, 0);
        CHECK(group_contains(config.group, *state.exact));
    }
}

TEST_CASE("walk_charpoly delegates to the algebra routes") {
    WalkConfig config;
    config.group = parse_group("Sp(4)");
    config.length = 25;
    config.master_seed = 5;
    config.mode = WalkMode::Dual;
    config.primes = {5, 7};
    config.validate_and_fill();
    const WalkState state = run_walk(config, 1);
    const WalkCharpoly cp = walk_charpoly(state);
    REQUIRE(cp.exact.has_value());
    CHECK(cp.exact->is_monic());
    CHECK(cp.exact->is_palindromic());
    REQUIRE(cp.modular.size() == 2);
    CHECK(cp.modular[0] == cp.exact->reduce(5));
    CHECK(cp.modular[1] == cp.exact->reduce(7));
}

TEST_CASE("type C walks yield palindromic charpolys (g = 1..3)") {
    for (unsigned g : {1u, 2u, 3u}) {
        WalkConfig config;
        config.group = GroupSpec{Family::C, g};
        config.length = 60;
        config.master_seed = 1000 + g;
        config.validate_and_fill();
        for (std::uint64_t trial = 0; trial < 10; ++trial) {
            const WalkState state = run_walk(config, trial);
            CHECK(charpoly_exact(*state.exact).is_palindromic());
        }
    }
}

TEST_CASE("asymmetric configs fail loudly") {
    WalkConfig config;
    config.group = parse_group("SL(2)");
    config.length = 5;
    // E12+ without its inverse
    config.generators.push_back({IntMatrix::identity(2), "id"});
    IntMatrix e12 = IntMatrix::identity(2);
    e12.at(0, 1) = 1;
    config.generators.push_back({e12, "E12+"});
    CHECK_THROWS_AS(config.validate_and_fill(), config_error);

    // inverse present but with a different weight
    WalkConfig config2;
    config2.group = parse_group("SL(2)");
    config2.length = 5;
    config2.generators.push_back({IntMatrix::identity(2), "id"});
    config2.generators.push_back({e12, "E12+"});
    IntMatrix e12i = IntMatrix::identity(2);
    e12i.at(0, 1) = -1;
    config2.generators.push_back({e12i, "E12-"});
    config2.weights = {mpq_class(1, 2), mpq_class(1, 3), mpq_class(1, 6)};
    CHECK_THROWS_AS(config2.validate_and_fill(), config_error);
}

TEST_CASE("identity generator is required") {
    WalkConfig config;
    config.group = parse_group("SL(2)");
    config.length = 5;
    IntMatrix e12 = IntMatrix::identity(2);
    e12.at(0, 1) = 1;
    IntMatrix e12i = IntMatrix::identity(2);
    e12i.at(0, 1) = -1;
    config.generators.push_back({e12, "E12+"});
    config.generators.push_back({e12i, "E12-"});
    CHECK_THROWS_AS(config.validate_and_fill(), config_error);
}

TEST_CASE("weights must sum to 1 and stay positive") {
    WalkConfig config;
    config.group = parse_group("SL(2)");
    config.length = 5;
    config.weights.assign(5, mpq_class(1, 4));
    CHECK_THROWS_AS(config.validate_and_fill(), config_error);
}

TEST_CASE("non-uniform rational weights are honored deterministically") {
    WalkConfig config;
    config.group = parse_group("SL(2)");
    config.length = 64;
    config.master_seed = 77;
    // heavier identity: 3/7, the four elementary generators 1/7 each
    config.weights = {mpq_class(3, 7), mpq_class(1, 7), mpq_class(1, 7), mpq_class(1, 7),
                      mpq_class(1, 7)};
    config.validate_and_fill();
    const WalkState a = run_walk(config, 0);
    const WalkState b = run_walk(config, 0);
    CHECK(*a.exact == *b.exact);
    CHECK(group_contains(config.group, *a.exact));
}

TEST_CASE("modular mode rejects composite primes and exact mode rejects primes") {
    WalkConfig config;
    config.group = parse_group("SL(2)");
    config.length = 5;
    config.mode = WalkMode::Modular;
    config.primes = {4};
    CHECK_THROWS_AS(config.validate_and_fill(), config_error);
    WalkConfig config2;
    config2.group = parse_group("SL(2)");
    config2.length = 5;
    config2.mode = WalkMode::Exact;
    config2.primes = {5};
    CHECK_THROWS_AS(config2.validate_and_fill(), config_error);
}

TEST_CASE("step sampling matches the exact rational weights") {
    WalkConfig config;
    config.group = parse_group("SL(2)");
    config.length = 1;
    config.master_seed = 64;
    config.trace_limit = 1;
    // identity 1/2, the four elementary generators 1/8 each
    config.weights = {mpq_class(1, 2), mpq_class(1, 8), mpq_class(1, 8), mpq_class(1, 8),
                      mpq_class(1, 8)};
    config.validate_and_fill();
    std::vector<std::uint64_t> counts(5, 0);
    const std::uint64_t trials = 80000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const WalkState state = run_walk(config, t);
        REQUIRE(state.trace.size() == 1);
        ++counts[state.trace[0]];
    }
    const double n = static_cast<double>(trials);
    CHECK(std::abs(static_cast<double>(counts[0]) / n - 0.5) < 0.01);
    for (int i = 1; i < 5; ++i)
        CHECK(std::abs(static_cast<double>(counts[i]) / n - 0.125) < 0.01);
}

TEST_CASE("prime requests") {
    PrimeRequest req;
    req.count = 4;
    req.min = 5;
    CHECK(req.resolve() == std::vector<std::uint64_t>{5, 7, 11, 13});
    PrimeRequest bad;
    CHECK_THROWS_AS(bad.resolve(), config_error);
}

TEST_CASE("entry growth is monitored in exact mode") {
    WalkConfig config;
    config.group = parse_group("SL(2)");
    config.length = 80;
    config.master_seed = 9;
    config.validate_and_fill();
    const WalkState state = run_walk(config, 0);
    CHECK(state.max_entry_bits > 0);
    CHECK(state.max_entry_bits <= 200); // ~2.5 bits per step at the very worst
}

TEST_CASE("trace records the first labels up to the limit") {
    WalkConfig config;
    config.group = parse_group("SL(2)");
    config.length = 30;
    config.master_seed = 12;
    config.trace_limit = 10;
    config.validate_and_fill();
    const WalkState state = run_walk(config, 0);
    CHECK(state.trace.size() == 10);
    for (std::uint32_t idx : state.trace) CHECK(idx < config.generators.size());
}

} // TEST_SUITE
