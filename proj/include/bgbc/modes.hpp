#pragma once

#include <span>

#include "bgbc/state.hpp"

namespace bgbc {

namespace detail {

/// Scalar supercommutator [a_(m), P_(n)]_{+/-} of an annihilation mode
/// with a creation mode. The only nonzero contractions, fixed once from
/// the generator OPEs and skew-symmetry, are
///   [beta^i_(m), gamma^j_(n)] =  delta_ij delta_{m+n+1,0}
///   [gamma^i_(m), beta^j_(n)] = -delta_ij delta_{m+n+1,0}
///   {b^i_(m),    c^j_(n)}     =  delta_ij delta_{m+n+1,0}
///   {c^i_(m),    b^j_(n)}     =  delta_ij delta_{m+n+1,0}
inline int contraction(const ModeKey& op, const ModeKey& factor) {
    if (op.index != factor.index || op.level + factor.level + 1 != 0) return 0;
    switch (op.kind) {
        case GenKind::beta: return factor.kind == GenKind::gamma ? 1 : 0;
        case GenKind::gamma: return factor.kind == GenKind::beta ? -1 : 0;
        case GenKind::b: return factor.kind == GenKind::c ? 1 : 0;
        case GenKind::c: return factor.kind == GenKind::b ? 1 : 0;
    }
    return 0;
}

inline void apply_creation(const ModeKey& op, const Monomial& m, const Rational& coeff,
                           State& out) {
    const auto& w = m.modes;
    std::size_t pos = 0;
    int sign = 1;
    const bool odd = op.parity() == Parity::odd;
    while (pos < w.size() && !(op < w[pos])) {
        if (odd) {
            if (w[pos] == op) return;  // square of an odd mode
            if (w[pos].parity() == Parity::odd) sign = -sign;
        }
        ++pos;
    }
    Monomial res;
    res.modes.reserve(w.size() + 1);
    res.modes.insert(res.modes.end(), w.begin(), w.begin() + static_cast<long>(pos));
    res.modes.push_back(op);
    res.modes.insert(res.modes.end(), w.begin() + static_cast<long>(pos), w.end());
    out.add(res, sign < 0 ? Rational(-coeff) : coeff);
}

/// Annihilation by a single left-to-right sweep: commute op past each
/// factor, picking up the scalar contraction and the Koszul sign of the
/// factors crossed; op finally annihilates the vacuum.
inline void apply_annihilation(const ModeKey& op, const Monomial& m, const Rational& coeff,
                               State& out) {
    const auto& w = m.modes;
    int sign = 1;
    const bool odd = op.parity() == Parity::odd;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (int delta = contraction(op, w[i]); delta != 0) {
            Monomial res;
            res.modes.reserve(w.size() - 1);
            for (std::size_t j = 0; j < w.size(); ++j)
                if (j != i) res.modes.push_back(w[j]);
            Rational c = coeff * (sign * delta);
            out.add(res, c);
        }
        if (odd && w[i].parity() == Parity::odd) sign = -sign;
    }
}

}  // namespace detail

/// Action of one generator mode on a state: creation modes prepend into
/// canonical position, annihilation modes contract through the word.
inline State apply_mode(const ModeKey& op, const State& s) {
    State out;
    for (const auto& [m, c] : s.terms()) {
        if (op.is_creation())
            detail::apply_creation(op, m, c, out);
        else
            detail::apply_annihilation(op, m, c, out);
    }
    return out;
}

/// Right-to-left composition: ops[0] is applied last.
inline State apply_mode_sequence(std::span<const ModeKey> ops, State s) {
    for (auto it = ops.rbegin(); it != ops.rend() && !s.is_zero(); ++it)
        s = apply_mode(*it, s);
    return s;
}

/// The translation operator, a derivation with P_(-k) -> k P_(-k-1) on
/// every generator factor.
inline State translation(const State& s) {
    State out;
    for (const auto& [m, c] : s.terms()) {
        for (std::size_t i = 0; i < m.modes.size(); ++i) {
            std::vector<ModeKey> raw = m.modes;
            long k = -raw[i].level;
            raw[i].level -= 1;
            CanonicalForm cf = canonicalize(std::move(raw));
            if (cf.vanished) continue;
            Rational t = c * (cf.sign * k);
            out.add(cf.word, t);
        }
    }
    return out;
}

inline State translation_power(State s, long k) {
    for (long i = 0; i < k && !s.is_zero(); ++i) s = translation(s);
    return s;
}

}  // namespace bgbc
