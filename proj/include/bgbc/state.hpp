#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bgbc/monomial.hpp"
#include "bgbc/rational.hpp"

namespace bgbc {

/// A finite linear combination of Monomials with exact rational
/// coefficients. Zero coefficients are never stored, so equality is
/// coefficientwise equality of the term maps.
class State {
  public:
    using TermMap = std::map<Monomial, Rational>;

    State() = default;

    static State vacuum() {
        State s;
        s.terms_[Monomial{}] = 1;
        return s;
    }

    static State of(Monomial m, Rational coeff = 1) {
        State s;
        s.add(std::move(m), std::move(coeff));
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add(const Monomial& m, const Rational& coeff) {
        if (is_zero_coeff(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    State& operator+=(const State& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    State& operator-=(const State& o) {
        for (const auto& [m, c] : o.terms_) add(m, Rational(-c));
        return *this;
    }
    State& operator*=(const Rational& r) {
        if (is_zero_coeff(r)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= r;
        return *this;
    }

    friend State operator+(State a, const State& b) { return a += b; }
    friend State operator-(State a, const State& b) { return a -= b; }
    friend State operator*(const Rational& r, State s) { return s *= r; }
    friend State operator-(State s) { return s *= Rational(-1); }
    friend bool operator==(const State&, const State&) = default;

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Largest conformal weight over the terms; -1 for the zero state.
    int max_weight() const {
        int w = -1;
        for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
        return w;
    }

    int max_gamma_degree() const {
        int g = 0;
        for (const auto& [m, c] : terms_) g = std::max(g, m.gamma_degree());
        return g;
    }

    /// The common value of a grading over all terms, if there is one.
    std::optional<int> homogeneous_weight() const {
        return homogeneous([](const Monomial& m) { return m.weight(); });
    }
    std::optional<int> homogeneous_fermion() const {
        return homogeneous([](const Monomial& m) { return m.fermion(); });
    }
    std::optional<Parity> homogeneous_parity() const {
        std::optional<Parity> p;
        for (const auto& [m, c] : terms_) {
            if (!p)
                p = m.parity();
            else if (*p != m.parity())
                return std::nullopt;
        }
        return p;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                first = false;
                if (sgn(a) < 0) {
                    s += "- ";
                    a = -a;
                }
            } else {
                s += (sgn(a) < 0) ? " - " : " + ";
                if (sgn(a) < 0) a = -a;
            }
            if (a != 1 || m.is_vacuum()) {
                s += a.get_str();
                if (!m.is_vacuum()) s += ' ';
            }
            if (!m.is_vacuum()) s += m.to_string();
        }
        return s;
    }

  private:
    template <typename F>
    std::optional<int> homogeneous(F&& grading) const {
        std::optional<int> v;
        for (const auto& [m, c] : terms_) {
            int g = grading(m);
            if (!v)
                v = g;
            else if (*v != g)
                return std::nullopt;
        }
        return v;
    }

    static bool is_zero_coeff(const Rational& r) { return sgn(r) == 0; }

    TermMap terms_;
};

/// The weight-zero generator states: beta/b/c at level -1, gamma at level
/// -1 (the polynomial generator). These are the states whose fields are
/// the system's strong generators.
inline State generator(GenKind kind, int index) {
    return State::of(Monomial{{ModeKey{kind, index, -1}}});
}

inline State linear_combine(std::span<const Rational> coeffs, std::span<const State> states) {
    if (coeffs.size() != states.size())
        throw std::invalid_argument("linear_combine: size mismatch");
    State out;
    for (std::size_t i = 0; i < states.size(); ++i) {
        State t = states[i];
        t *= coeffs[i];
        out += t;
    }
    return out;
}

}  // namespace bgbc
