#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bgbc/state.hpp"

namespace bgbc {

/// An ordered enumeration of the canonical monomials with fixed gradings.
/// Columns of every operator matrix are indexed by such a basis.
struct WeightSpaceBasis {
    int dim_v = 0;                // rank d
    int weight = 0;               // conformal weight K
    std::optional<int> fermion;   // optional fermion-number filter
    int gamma_degree_bound = 0;   // max number of gamma_(-1) factors
    std::vector<Monomial> elements;
    std::map<Monomial, int> index;

    int size() const { return static_cast<int>(elements.size()); }

    int position(const Monomial& m) const {
        auto it = index.find(m);
        if (it == index.end())
            throw std::out_of_range("basis does not contain monomial " + m.to_string());
        return it->second;
    }
};

namespace detail {

inline void enumerate_rec(const std::vector<ModeKey>& alphabet, std::size_t next, int weight_left,
                          int gamma_left, std::vector<ModeKey>& word,
                          std::vector<Monomial>& out) {
    if (weight_left == 0) {
        // Remaining weight-0 letters (c_(-1), gamma_(-1)) may still enter.
        bool tail_has_weight_zero = false;
        for (std::size_t i = next; i < alphabet.size(); ++i)
            if (alphabet[i].weight() == 0) tail_has_weight_zero = true;
        if (!tail_has_weight_zero) {
            out.push_back(Monomial{word});
            return;
        }
    }
    if (next == alphabet.size()) {
        if (weight_left == 0) out.push_back(Monomial{word});
        return;
    }
    const ModeKey& key = alphabet[next];
    const int w = key.weight();
    int max_mult;
    if (key.parity() == Parity::odd)
        max_mult = 1;
    else if (key.kind == GenKind::gamma && key.level == -1)
        max_mult = gamma_left;
    else
        max_mult = w > 0 ? weight_left / w : 0;
    if (w > 0) max_mult = std::min(max_mult, weight_left / w);
    for (int mult = 0; mult <= max_mult; ++mult) {
        if (w * mult > weight_left) break;
        int used_gamma = (key.kind == GenKind::gamma && key.level == -1) ? mult : 0;
        for (int t = 0; t < mult; ++t) word.push_back(key);
        enumerate_rec(alphabet, next + 1, weight_left - w * mult, gamma_left - used_gamma, word,
                      out);
        for (int t = 0; t < mult; ++t) word.pop_back();
    }
}

}  // namespace detail

/// All canonical monomials of conformal weight K at rank d, with at most
/// `gamma_degree_bound` factors of gamma_(-1) and an optional fermion
/// filter, in deterministic lexicographic order. Bound 0 yields a basis
/// of the weight-K space of the polynomial-free subalgebra.
inline WeightSpaceBasis enumerate_basis(int d, int weight, std::optional<int> fermion,
                                        int gamma_degree_bound) {
    if (d < 1) throw std::invalid_argument("enumerate_basis: rank must be >= 1");
    if (weight < 0) throw std::invalid_argument("enumerate_basis: weight must be >= 0");
    if (gamma_degree_bound < 0)
        throw std::invalid_argument("enumerate_basis: gamma_degree_bound must be >= 0");

    // Creation alphabet limited to modes of weight <= K, in canonical order.
    std::vector<ModeKey> alphabet;
    for (int level = -(weight + 1); level <= -1; ++level) {
        for (GenKind kind : {GenKind::b, GenKind::c, GenKind::beta, GenKind::gamma}) {
            for (int i = 1; i <= d; ++i) {
                ModeKey key{kind, i, level};
                if (key.weight() > weight) continue;
                if (kind == GenKind::gamma && level == -1 && gamma_degree_bound == 0) continue;
                alphabet.push_back(key);
            }
        }
    }

    WeightSpaceBasis basis;
    basis.dim_v = d;
    basis.weight = weight;
    basis.fermion = fermion;
    basis.gamma_degree_bound = gamma_degree_bound;

    std::vector<ModeKey> word;
    std::vector<Monomial> all;
    detail::enumerate_rec(alphabet, 0, weight, gamma_degree_bound, word, all);
    std::sort(all.begin(), all.end());
    for (auto& m : all) {
        if (fermion && m.fermion() != *fermion) continue;
        basis.index.emplace(m, static_cast<int>(basis.elements.size()));
        basis.elements.push_back(std::move(m));
    }
    return basis;
}

/// Coordinates of a state in a basis, as a sparse (position, coefficient)
/// list. Throws if a term of the state lies outside the basis.
inline std::vector<std::pair<int, Rational>> coordinates(const WeightSpaceBasis& basis,
                                                         const State& s) {
    std::vector<std::pair<int, Rational>> row;
    row.reserve(s.term_count());
    for (const auto& [m, c] : s.terms()) row.emplace_back(basis.position(m), c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

}  // namespace bgbc
