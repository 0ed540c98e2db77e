#pragma once

#include "bgbc/linalg.hpp"
#include "bgbc/modes.hpp"

namespace bgbc {

/// The vertex algebra automorphism induced by an invertible linear map
/// psi of V: vector labels (beta, b) transform by psi, covector labels
/// (gamma, c) by the inverse transpose, so the canonical pairing is
/// preserved.
class LinearIso {
  public:
    explicit LinearIso(Mat psi) : psi_(std::move(psi)) {
        if (psi_.rows() != psi_.cols())
            throw std::invalid_argument("LinearIso: matrix must be square");
        inv_ = psi_.inverse();  // throws std::domain_error if singular
    }

    int dim() const { return psi_.rows(); }
    const Mat& matrix() const { return psi_; }

    State apply(const State& s) const {
        const int d = dim();
        State out;
        for (const auto& [mono, coeff] : s.terms()) {
            State acc = State::of(Monomial{}, coeff);
            for (auto it = mono.modes.rbegin(); it != mono.modes.rend(); ++it) {
                const ModeKey& f = *it;
                if (f.index < 1 || f.index > d)
                    throw std::invalid_argument("LinearIso: monomial index exceeds rank");
                State next;
                for (int j = 1; j <= d; ++j) {
                    Rational t = label_coeff(f.kind, f.index, j);
                    if (sgn(t) == 0) continue;
                    State part = apply_mode(ModeKey{f.kind, j, f.level}, acc);
                    part *= t;
                    next += part;
                }
                acc = std::move(next);
                if (acc.is_zero()) break;
            }
            out += acc;
        }
        return out;
    }

  private:
    Rational label_coeff(GenKind kind, int i, int j) const {
        if (kind == GenKind::beta || kind == GenKind::b) return psi_.at(j - 1, i - 1);
        return inv_.at(i - 1, j - 1);
    }

    Mat psi_;
    Mat inv_;
};

inline State apply_linear_iso(const Mat& psi, const State& s) { return LinearIso(psi).apply(s); }

}  // namespace bgbc
