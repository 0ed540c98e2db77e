#pragma once

#include <map>

#include "bgbc/fields.hpp"
#include "bgbc/vector_field.hpp"

namespace bgbc {

/// The state P(gamma_1,...,gamma_d) for a polynomial P: products of the
/// commuting weight-zero generators gamma^i_(-1).
inline State polynomial_in_gamma(const Polynomial& p, int d) {
    State out;
    for (const auto& [mono, c] : p) {
        std::vector<ModeKey> word;
        for (int i = 1; i <= d; ++i)
            for (int e = 0; e < mono[std::size_t(i - 1)]; ++e)
                word.push_back(ModeKey{GenKind::gamma, i, -1});
        out.add(Monomial{std::move(word)}, c);
    }
    return out;
}

/// The current sum_i :P_i(gamma) b^i: attached to a vector field.
inline State vector_field_current(const PolyVectorField& v) {
    State out;
    for (int i = 1; i <= v.dim; ++i) {
        State pi = polynomial_in_gamma(v.comp[std::size_t(i - 1)], v.dim);
        if (pi.is_zero()) continue;
        out += wick(pi, generator(GenKind::b, i));
    }
    return out;
}

/// The action of polynomial vector fields by derivations: the field v
/// acts as the zero mode of Q_(0) applied to its current,
///   L(v) = (Q_(0) sum_i :P_i(gamma) b^i:)_(0).
/// Build once per field; apply to as many states as needed.
class CartanOperator {
  public:
    CartanOperator(const PolyVectorField& v, const State& q_field)
        : source_(nth_product(q_field, 0, vector_field_current(v))) {}

    const State& source() const { return source_; }

    State apply(const State& s) const { return nth_product(source_, 0, s); }

  private:
    State source_;
};

inline State cartan_action(const PolyVectorField& v, const State& s) {
    FieldCatalog f = standard_fields(v.dim);
    return CartanOperator(v, f.Q).apply(s);
}

/// An element g t^n of g_0[t], with g a linear vector field given by its
/// matrix M (so g = sum_{ij} M_{ij} x_i d/dx_j).
struct G0tElement {
    Mat m;
    int power = 0;
};

/// Derivation action of g t^n on the mode algebra, per generator factor:
/// labels of gamma/c transform by M, labels of beta/b by -M^T, and the
/// level is raised by n with the cutoffs
///   beta, b, c: g t^n P_(-k) = 0 for n >= k
///   gamma:      g t^n P_(-k) = 0 for n >= k-1.
/// The jet coordinates of the mode algebra are beta/b/c_(-j-1) and
/// (1/(j+1)) d^j(gamma_(-2)); on those the action is pure substitution
/// with level shift, which puts the factor (k-1-n)/(k-1) on a shifted
/// gamma_(-k). Without that factor the action would not commute with the
/// derivation into the invariant ring.
/// States must be free of gamma_(-1) factors (the polynomial part).
inline State g0t_action(const G0tElement& e, const State& s) {
    const int d = e.m.rows();
    if (e.power < 0) throw std::invalid_argument("g0t_action: power must be >= 0");
    State out;
    for (const auto& [mono, coeff] : s.terms()) {
        if (mono.gamma_degree() > 0)
            throw std::invalid_argument(
                "g0t_action: state has gamma_(-1) factors (not in the mode algebra)");
        for (std::size_t i = 0; i < mono.modes.size(); ++i) {
            const ModeKey f = mono.modes[i];
            const int k = -f.level;
            const int cutoff = (f.kind == GenKind::gamma) ? k - 1 : k;
            if (e.power >= cutoff) continue;
            Rational scale(1);
            if (f.kind == GenKind::gamma) scale = rational(k - 1 - e.power, k - 1);
            for (int w = 1; w <= d; ++w) {
                Rational t = (f.kind == GenKind::gamma || f.kind == GenKind::c)
                                 ? e.m.at(w - 1, f.index - 1)
                                 : Rational(-e.m.at(f.index - 1, w - 1));
                if (sgn(t) == 0) continue;
                std::vector<ModeKey> raw = mono.modes;
                raw[i] = ModeKey{f.kind, w, f.level + e.power};
                CanonicalForm cf = canonicalize(std::move(raw));
                if (cf.vanished) continue;
                Rational c = coeff * t * scale * cf.sign;
                out.add(cf.word, c);
            }
        }
    }
    return out;
}

/// Supercommutative product of the mode algebra (concatenation with the
/// Koszul sign); this is not the Wick product.
inline State sw_mul(const State& a, const State& b) {
    State out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<ModeKey> raw = ma.modes;
            raw.insert(raw.end(), mb.modes.begin(), mb.modes.end());
            CanonicalForm cf = canonicalize(std::move(raw));
            if (cf.vanished) continue;
            Rational c = ca * cb * cf.sign;
            out.add(cf.word, c);
        }
    return out;
}

/// Decomposition by the mode-algebra grading (#c + 2 #gamma).
inline std::map<int, State> sw_components(const State& s) {
    std::map<int, State> out;
    for (const auto& [m, c] : s.terms()) out[m.sw_degree()].add(m, c);
    return out;
}

/// The top graded component; the zero state for zero input.
inline State sw_top(const State& s) {
    auto comps = sw_components(s);
    if (comps.empty()) return {};
    return comps.rbegin()->second;
}

/// Basis of the degree-zero Lie algebra of the series, as matrices.
inline std::vector<Mat> g0_basis(int d, SeriesKind series) {
    std::vector<Mat> out;
    for (const auto& v : vect_basis(d, 0, series)) out.push_back(matrix_of_linear_field(v));
    return out;
}

}  // namespace bgbc
