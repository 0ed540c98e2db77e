#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgbc/products.hpp"

namespace bgbc {

/// The distinguished fields of the rank-d system.
///
///   Q = sum_i :beta^i c^i:            the odd screening current
///   L = sum_i (:beta^i dgamma^i: - :b^i dc^i:)   the stress tensor
///   J = -sum_i :b^i c^i:              the ghost-number current
///   G = sum_i :b^i dgamma^i:          the second supercurrent
///   D = :b^1 ... b^d:     E = :c^1 ... c^d:
///   B = Q_(0) D           C = G_(0) E
///
/// and, when d = 2l is even, the symplectic variants
///
///   D' = sum_i :b^{2i-1} b^{2i}:   E' = sum_i :c^{2i-1} c^{2i}:
///   B' = Q_(0) D'                  C' = G_(0) E'.
///
/// {Q, L, J, G, D, E, B, C} generate the Odake algebra; {Q, L, J, G,
/// D', E', B', C'} generate the small N=4 superconformal algebra.
struct FieldCatalog {
    int dim_v = 0;
    State Q, L, J, G, D, E, B, C;
    std::optional<State> Dp, Ep, Bp, Cp;

    bool has_primed() const { return Dp.has_value(); }

    const State& primed(char which) const {
        if (!has_primed())
            throw std::domain_error(
                "primed fields require even dimension d = 2l; rank is " + std::to_string(dim_v));
        switch (which) {
            case 'D': return *Dp;
            case 'E': return *Ep;
            case 'B': return *Bp;
            case 'C': return *Cp;
        }
        throw std::invalid_argument("primed: expected one of D, E, B, C");
    }

    /// The eight generators of the Odake algebra, in reporting order.
    std::vector<std::pair<std::string, State>> odake_generators() const {
        return {{"Q", Q}, {"L", L}, {"J", J}, {"G", G},
                {"D", D}, {"E", E}, {"B", B}, {"C", C}};
    }

    /// The eight generators of the small N=4 algebra (even d only).
    std::vector<std::pair<std::string, State>> n4_generators() const {
        return {{"Q", Q},           {"L", L},           {"J", J},           {"G", G},
                {"D'", primed('D')}, {"E'", primed('E')}, {"B'", primed('B')}, {"C'", primed('C')}};
    }
};

inline FieldCatalog standard_fields(int d) {
    if (d < 1) throw std::invalid_argument("standard_fields: rank must be >= 1");
    FieldCatalog f;
    f.dim_v = d;
    for (int i = 1; i <= d; ++i) {
        State dgamma = translation(generator(GenKind::gamma, i));
        State dc = translation(generator(GenKind::c, i));
        f.Q += apply_mode(ModeKey{GenKind::beta, i, -1}, generator(GenKind::c, i));
        f.L += apply_mode(ModeKey{GenKind::beta, i, -1}, dgamma);
        f.L -= apply_mode(ModeKey{GenKind::b, i, -1}, dc);
        f.J -= apply_mode(ModeKey{GenKind::b, i, -1}, generator(GenKind::c, i));
        f.G += apply_mode(ModeKey{GenKind::b, i, -1}, dgamma);
    }
    {
        std::vector<ModeKey> bs, cs;
        for (int i = 1; i <= d; ++i) {
            bs.push_back(ModeKey{GenKind::b, i, -1});
            cs.push_back(ModeKey{GenKind::c, i, -1});
        }
        f.D = State::of(Monomial{bs});
        f.E = State::of(Monomial{cs});
    }
    f.B = nth_product(f.Q, 0, f.D);
    f.C = nth_product(f.G, 0, f.E);

    if (d % 2 == 0) {
        State dp, ep;
        for (int i = 1; 2 * i <= d; ++i) {
            dp += State::of(
                Monomial{{ModeKey{GenKind::b, 2 * i - 1, -1}, ModeKey{GenKind::b, 2 * i, -1}}});
            ep += State::of(
                Monomial{{ModeKey{GenKind::c, 2 * i - 1, -1}, ModeKey{GenKind::c, 2 * i, -1}}});
        }
        f.Dp = dp;
        f.Ep = ep;
        f.Bp = nth_product(f.Q, 0, dp);
        f.Cp = nth_product(f.G, 0, ep);
    }
    return f;
}

}  // namespace bgbc
