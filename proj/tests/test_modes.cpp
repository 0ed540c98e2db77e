#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace bgbc;
using namespace bgbc_test;

TEST_CASE("beta zero mode contracts against the dual gamma", "[modes]") {
    CHECK(apply_mode(mk('B', 1, 0), generator(GenKind::gamma, 1)) == State::vacuum());
    CHECK(apply_mode(mk('B', 1, 0), generator(GenKind::gamma, 2)).is_zero());
}

TEST_CASE("b zero mode anticommutes through the word", "[modes]") {
    // b1_(0) c1_(-1) b2_(-1) 1: {b1_(0), c1_(-1)} = 1 removes c1 giving
    // b2_(-1)1; the leftover -c1_(-1) b1_(0) b2_(-1) 1 dies on the vacuum.
    State s = apply_mode(mk('c', 1, -1), apply_mode(mk('b', 2, -1), State::vacuum()));
    CHECK(apply_mode(mk('b', 1, 0), s) == st({mk('b', 2, -1)}));
}

TEST_CASE("apply_mode_sequence: empty sequence is the identity", "[modes]") {
    State s = st({mk('B', 1, -1)}, 3, 2);
    CHECK(apply_mode_sequence({}, s) == s);
}

TEST_CASE("apply_mode_sequence: double contraction carries multiplicity", "[modes]") {
    // beta1_(0) applied twice to gamma1_(-1) gamma1_(-1) 1: the first
    // sweep contracts either factor (2 gamma1), the second gives 2.
    State s = st({mk('G', 1, -1), mk('G', 1, -1)});
    std::vector<ModeKey> ops = {mk('B', 1, 0), mk('B', 1, 0)};
    CHECK(apply_mode_sequence(ops, s) == scaled_vacuum(2));
}

TEST_CASE("annihilation modes kill the vacuum", "[modes]") {
    for (char kind : {'b', 'c', 'B', 'G'})
        for (int level = 0; level <= 3; ++level)
            CHECK(apply_mode(mk(kind, 1, level), State::vacuum()).is_zero());
}

TEST_CASE("level -1 modes create the generator states", "[modes]") {
    for (char kind : {'b', 'c', 'B', 'G'}) {
        State expected = st({mk(kind, 2, -1)});
        CHECK(apply_mode(mk(kind, 2, -1), State::vacuum()) == expected);
    }
}

TEST_CASE("translation of the vacuum is zero", "[modes]") {
    CHECK(translation(State::vacuum()).is_zero());
}

TEST_CASE("translation shifts levels with multiplicity k", "[modes]") {
    CHECK(translation(st({mk('B', 1, -1)})) == st({mk('B', 1, -2)}));
    CHECK(translation(st({mk('B', 1, -2)})) == st({mk('B', 1, -3)}, 2));
    // gamma_(-1) follows the same k = 1 rule.
    CHECK(translation(st({mk('G', 1, -1)})) == st({mk('G', 1, -2)}));
}

TEST_CASE("commutator law: modes satisfy the delta contractions", "[modes]") {
    // For all generator pairs and |m|, |n| <= 3 at d = 2, check
    // [a_(m), b_(n)]_{+-} s = delta * s on a spanning set.
    const int d = 2;
    std::vector<State> probes;
    for (int w = 0; w <= 2; ++w) {
        WeightSpaceBasis basis = enumerate_basis(d, w, std::nullopt, 1);
        for (const auto& m : basis.elements) probes.push_back(State::of(m));
    }

    auto super_commutator = [](const ModeKey& x, const ModeKey& y, const State& s) {
        State xy = apply_mode(x, apply_mode(y, s));
        State yx = apply_mode(y, apply_mode(x, s));
        const int sign =
            (x.parity() == Parity::odd && y.parity() == Parity::odd) ? 1 : -1;
        State t = yx;
        t *= Rational(sign);
        return xy + t;
    };
    auto expected_delta = [](const ModeKey& x, const ModeKey& y) -> int {
        if (x.index != y.index || x.level + y.level + 1 != 0) return 0;
        auto pair_of = [](GenKind a, GenKind b, GenKind p, GenKind q) {
            return (a == p && b == q) || (a == q && b == p);
        };
        if (pair_of(x.kind, y.kind, GenKind::b, GenKind::c)) return 1;
        if (pair_of(x.kind, y.kind, GenKind::beta, GenKind::gamma))
            return x.kind == GenKind::beta ? 1 : -1;
        return 0;
    };

    for (char kx : {'b', 'c', 'B', 'G'})
        for (char ky : {'b', 'c', 'B', 'G'})
            for (int ix = 1; ix <= d; ++ix)
                for (int iy = 1; iy <= d; ++iy)
                    for (int m = -3; m <= 3; ++m)
                        for (int n = -3; n <= 3; ++n) {
                            ModeKey x = mk(kx, ix, m), y = mk(ky, iy, n);
                            const int delta = expected_delta(x, y);
                            for (std::size_t p = 0; p < probes.size(); p += 7) {
                                State want = probes[p];
                                want *= Rational(delta);
                                CHECK(super_commutator(x, y, probes[p]) == want);
                            }
                        }
}

TEST_CASE("translation commutes with modes per the translation axiom", "[modes]") {
    // d(a_(n) s) - a_(n) ds = -n a_(n-1) s for generator modes.
    auto rng = test_rng(11);
    auto pool = detail::monomial_pool(2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> level(-3, 2);
    const char kinds[4] = {'b', 'c', 'B', 'G'};
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> index(1, 2);

    for (int trial = 0; trial < 300; ++trial) {
        ModeKey a = mk(kinds[kind(rng)], index(rng), level(rng));
        State s = State::of(pool[pick(rng)], detail::random_coeff(rng));
        State lhs = translation(apply_mode(a, s)) - apply_mode(a, translation(s));
        State rhs = apply_mode(ModeKey{a.kind, a.index, a.level - 1}, s);
        rhs *= Rational(-a.level);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("modes shift conformal weight by their weight", "[modes]") {
    auto pool = detail::monomial_pool(2, 2);
    for (char kind : {'b', 'c', 'B', 'G'})
        for (int level = -2; level <= 2; ++level) {
            ModeKey op = mk(kind, 1, level);
            for (std::size_t p = 0; p < pool.size(); p += 5) {
                State out = apply_mode(op, State::of(pool[p]));
                if (out.is_zero()) continue;
                CHECK(out.homogeneous_weight().value() ==
                      pool[p].weight() + op.weight());
            }
        }
}
