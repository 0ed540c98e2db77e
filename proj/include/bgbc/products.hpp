#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bgbc/modes.hpp"

namespace bgbc {

namespace detail {

/// Evaluates the n-th product of one canonical word against a state by
/// peeling the leftmost mode.  Writing the word as P_(m) w' with
/// j = -m-1, the word equals (1/j!) :(d^j P) w': and the modes of a
/// normally ordered product expand as
///
///   :AB:_(n) = sum_{k<0} A_(k) B_(n-k-1)
///            + (-1)^{|A||B|} sum_{k>=0} B_(n-k-1) A_(k),
///
/// with (d^j P)_(k) = (-1)^j k(k-1)...(k-j+1) P_(k-j).  Both sums are
/// truncated by weight positivity: a product landing in negative
/// conformal weight is zero.
class WordProduct {
  public:
    WordProduct(const Monomial& word, const State& b) : word_(word.modes), b0_(b) {
        const std::size_t n = word_.size();
        suffix_weight_.assign(n + 1, 0);
        suffix_odd_.assign(n + 1, 0);
        for (std::size_t i = n; i-- > 0;) {
            suffix_weight_[i] = suffix_weight_[i + 1] + word_[i].weight();
            suffix_odd_[i] = suffix_odd_[i + 1] + (word_[i].parity() == Parity::odd ? 1 : 0);
        }
        b0_weight_ = b.max_weight();
    }

    State eval(long n) { return rec(0, n, b0_, true); }

  private:
    State rec(std::size_t pos, long n, const State& b, bool b_original) {
        if (b.is_zero()) return {};
        if (pos == word_.size()) return n == -1 ? b : State{};
        if (b_original) {
            auto it = memo_.find({pos, n});
            if (it != memo_.end()) return it->second;
        }

        const ModeKey head = word_[pos];
        const long j = -head.level - 1;
        const long wt_rest = suffix_weight_[pos + 1];
        const long wt_b = b_original ? b0_weight_ : b.max_weight();
        const Rational inv_jfact(Integer(1), factorial(j));

        State acc;

        // Creation side: k < 0, truncated where the inner product would
        // land below weight zero.
        for (long k = -1; k >= n - wt_rest - wt_b; --k) {
            State inner = rec(pos + 1, n - k - 1, b, b_original);
            if (inner.is_zero()) continue;
            Integer ff = falling_factorial(k, j);
            if (j % 2 != 0) ff = -ff;
            if (sgn(ff) == 0) continue;
            State term = apply_mode(ModeKey{head.kind, head.index, static_cast<int>(k - j)}, inner);
            term *= Rational(ff);
            acc += term;
        }

        // Annihilation side: k >= j (the falling factorial kills k < j).
        const int sign2 =
            (head.parity() == Parity::odd && suffix_odd_[pos + 1] % 2 != 0) ? -1 : 1;
        for (long k = j; k - j <= wt_b + 1; ++k) {
            State bm = apply_mode(ModeKey{head.kind, head.index, static_cast<int>(k - j)}, b);
            if (bm.is_zero()) continue;
            State inner = rec(pos + 1, n - k - 1, bm, false);
            if (inner.is_zero()) continue;
            Integer ff = falling_factorial(k, j);
            if (j % 2 != 0) ff = -ff;
            inner *= Rational(sign2 * ff);
            acc += inner;
        }

        acc *= inv_jfact;
        if (b_original) memo_.emplace(std::make_pair(pos, n), acc);
        return acc;
    }

    const std::vector<ModeKey>& word_;
    const State& b0_;
    long b0_weight_ = -1;
    std::vector<long> suffix_weight_;
    std::vector<int> suffix_odd_;
    std::map<std::pair<std::size_t, long>, State> memo_;
};

}  // namespace detail

/// Exact n-th product a_(n) b for arbitrary states and any integer n.
inline State nth_product(const State& a, long n, const State& b) {
    if (a.is_zero() || b.is_zero()) return {};
    State out;
    for (const auto& [mono, coeff] : a.terms()) {
        detail::WordProduct wp(mono, b);
        State t = wp.eval(n);
        t *= coeff;
        out += t;
    }
    return out;
}

/// Wick (normally ordered) product :ab: = a_(-1) b.
inline State wick(const State& a, const State& b) { return nth_product(a, -1, b); }

/// Right-nested iterated Wick product :a_1 a_2 ... a_k:.
inline State iterated_wick(std::span<const State> factors) {
    State acc = State::vacuum();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = wick(*it, acc);
    return acc;
}

inline State iterated_wick(std::initializer_list<State> factors) {
    return iterated_wick(std::span<const State>(factors.begin(), factors.size()));
}

/// All singular OPE coefficients a_(n) b, n >= 0. Finitely many are
/// nonzero: the n-th product has weight wt(a) + wt(b) - n - 1.
inline std::map<long, State> ope_singular(const State& a, const State& b) {
    std::map<long, State> out;
    if (a.is_zero() || b.is_zero()) return out;
    const long nmax = a.max_weight() + b.max_weight();
    for (long n = 0; n <= nmax; ++n) {
        State p = nth_product(a, n, b);
        if (!p.is_zero()) out.emplace(n, std::move(p));
    }
    return out;
}

namespace detail {

inline std::pair<State, State> parity_split(const State& s) {
    State even_part, odd_part;
    for (const auto& [m, c] : s.terms()) {
        if (m.parity() == Parity::even)
            even_part.add(m, c);
        else
            odd_part.add(m, c);
    }
    return {even_part, odd_part};
}

}  // namespace detail

/// Checks the skew-symmetry identity
///   a_(n) b = sum_k (-1)^{k+1} (-1)^{|a||b|} (b_(k) a)_(n-k-1) 1
/// by evaluating both sides; states are split into parity-homogeneous
/// parts first. The right side collapses via X_(-j-1) 1 = d^j X / j!.
inline bool skew_symmetry_check(const State& a, const State& b, long n) {
    auto [ae, ao] = detail::parity_split(a);
    auto [be, bo] = detail::parity_split(b);
    const State* aparts[2] = {&ae, &ao};
    const State* bparts[2] = {&be, &bo};

    State lhs = nth_product(a, n, b);
    State rhs;
    for (int pa = 0; pa < 2; ++pa) {
        for (int pb = 0; pb < 2; ++pb) {
            const State& ap = *aparts[pa];
            const State& bp = *bparts[pb];
            if (ap.is_zero() || bp.is_zero()) continue;
            const int koszul = (pa == 1 && pb == 1) ? -1 : 1;
            const long kmax = ap.max_weight() + bp.max_weight();
            for (long k = n; k <= kmax; ++k) {
                State x = nth_product(bp, k, ap);
                if (x.is_zero()) continue;
                const long jj = k - n;  // (n-k-1)-th mode on vacuum: d^jj / jj!
                State t = translation_power(std::move(x), jj);
                if (t.is_zero()) continue;
                int sign = ((k + 1) % 2 == 0) ? 1 : -1;
                sign *= koszul;
                t *= Rational(Integer(sign), factorial(jj));
                rhs += t;
            }
        }
    }
    return lhs == rhs;
}

}  // namespace bgbc
