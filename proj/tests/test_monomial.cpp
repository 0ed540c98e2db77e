#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace bgbc;
using namespace bgbc_test;

TEST_CASE("canonicalize: square of an odd mode vanishes", "[fock]") {
    auto cf = canonicalize({mk('b', 1, -1), mk('b', 1, -1)});
    CHECK(cf.vanished);
}

TEST_CASE("canonicalize: one odd transposition flips the sign", "[fock]") {
    auto cf = canonicalize({mk('c', 2, -1), mk('c', 1, -1)});
    REQUIRE(!cf.vanished);
    CHECK(cf.sign == -1);
    CHECK(cf.word == mono({mk('c', 1, -1), mk('c', 2, -1)}));
}

TEST_CASE("canonicalize: even modes commute freely", "[fock]") {
    auto cf = canonicalize({mk('B', 1, -2), mk('G', 1, -1), mk('B', 1, -1)});
    REQUIRE(!cf.vanished);
    CHECK(cf.sign == 1);
    CHECK(cf.word.modes ==
          std::vector<ModeKey>{mk('B', 1, -2), mk('B', 1, -1), mk('G', 1, -1)});
}

TEST_CASE("canonicalize rejects annihilation modes", "[fock]") {
    CHECK_THROWS_AS(canonicalize({mk('B', 1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize({mk('G', 1, 0)}), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent", "[fock]") {
    Monomial m = mono({mk('b', 1, -2), mk('c', 2, -1), mk('B', 1, -1)});
    auto cf = canonicalize(m.modes);
    REQUIRE(!cf.vanished);
    CHECK(cf.sign == 1);
    CHECK(cf.word == m);
}

TEST_CASE("canonicalize sign equals the parity of the odd subsequence permutation", "[fock]") {
    auto rng = test_rng(42);
    std::vector<ModeKey> alphabet;
    for (int level = -3; level <= -1; ++level)
        for (char k : {'b', 'c', 'B', 'G'})
            for (int i = 1; i <= 2; ++i) alphabet.push_back(mk(k, i, level));

    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<ModeKey> word;
        for (int i = len(rng); i > 0; --i) word.push_back(alphabet[pick(rng)]);

        // Independent sign: count inversions of the odd subsequence.
        std::vector<ModeKey> odds;
        for (const auto& m : word)
            if (m.parity() == Parity::odd) odds.push_back(m);
        bool repeated = false;
        int inversions = 0;
        for (std::size_t i = 0; i < odds.size(); ++i)
            for (std::size_t j = i + 1; j < odds.size(); ++j) {
                if (odds[i] == odds[j]) repeated = true;
                if (odds[j] < odds[i]) ++inversions;
            }

        auto cf = canonicalize(word);
        if (repeated) {
            CHECK(cf.vanished);
        } else {
            REQUIRE(!cf.vanished);
            CHECK(cf.sign == (inversions % 2 == 0 ? 1 : -1));
            CHECK(std::is_sorted(cf.word.modes.begin(), cf.word.modes.end()));
        }
    }
}

TEST_CASE("gradings of the weight-one boson", "[fock]") {
    Gradings g = mono({mk('B', 1, -1)}).gradings();
    CHECK(g.weight == 1);
    CHECK(g.fermion == 0);
    CHECK(g.parity == Parity::even);
}

TEST_CASE("gradings: mode-algebra degree counts c once and gamma twice", "[fock]") {
    Gradings g = mono({mk('G', 2, -2), mk('c', 1, -1)}).gradings();
    CHECK(g.sw_degree == 3);
    CHECK(g.weight == 1);
    CHECK(g.fermion == 1);
}

TEST_CASE("gradings of the vacuum", "[fock]") {
    Gradings g = Monomial{}.gradings();
    CHECK(g.weight == 0);
    CHECK(g.fermion == 0);
    CHECK(g.sw_degree == 0);
    CHECK(g.gamma_degree == 0);
    CHECK(g.parity == Parity::even);
}

TEST_CASE("gradings are additive over concatenation", "[fock]") {
    auto rng = test_rng(7);
    auto pool = detail::monomial_pool(2, 3);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const Monomial& a = pool[pick(rng)];
        const Monomial& b = pool[pick(rng)];
        std::vector<ModeKey> both = a.modes;
        both.insert(both.end(), b.modes.begin(), b.modes.end());
        auto cf = canonicalize(both);
        if (cf.vanished) continue;
        Gradings ga = a.gradings(), gb = b.gradings(), gc = cf.word.gradings();
        CHECK(gc.weight == ga.weight + gb.weight);
        CHECK(gc.fermion == ga.fermion + gb.fermion);
        CHECK(gc.sw_degree == ga.sw_degree + gb.sw_degree);
        CHECK(gc.gamma_degree == ga.gamma_degree + gb.gamma_degree);
    }
}

TEST_CASE("monomial serialization", "[fock]") {
    CHECK(Monomial{}.to_string() == "1");
    CHECK(mono({mk('c', 2, -3), mk('b', 1, -1)}).to_string() == "c[2,-3] b[1,-1]");
    CHECK(mono({mk('G', 1, -1)}).to_string() == "G[1,-1]");
}

TEST_CASE("linear_combine cancels and scales exactly", "[fock]") {
    State s = st({mk('B', 1, -1)}, 1) + st({mk('c', 1, -1)}, 2, 3);
    {
        std::vector<Rational> coeffs = {rational(1), rational(-1)};
        std::vector<State> states = {s, s};
        CHECK(linear_combine(coeffs, states).is_zero());
    }
    {
        std::vector<Rational> coeffs = {rational(2)};
        State half = s;
        half *= rational(1, 2);
        std::vector<State> states = {half};
        CHECK(linear_combine(coeffs, states) == s);
    }
    CHECK(linear_combine({}, {}).is_zero());
}

TEST_CASE("state stores no zero coefficients", "[fock]") {
    State s;
    s.add(mono({mk('b', 1, -1)}), rational(1, 2));
    s.add(mono({mk('b', 1, -1)}), rational(-1, 2));
    CHECK(s.is_zero());
    CHECK(s.term_count() == 0);
}
