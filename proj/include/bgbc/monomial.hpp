#pragma once

#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgbc/rational.hpp"

namespace bgbc {

/// Generator kinds of the rank-d beta-gamma-bc system. The enum order is
/// the canonical kind rank used when sorting words: b < c < beta < gamma.
enum class GenKind : std::uint8_t { b = 0, c = 1, beta = 2, gamma = 3 };

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline bool is_odd(GenKind k) { return k == GenKind::b || k == GenKind::c; }

inline char kind_letter(GenKind k) {
    switch (k) {
        case GenKind::b: return 'b';
        case GenKind::c: return 'c';
        case GenKind::beta: return 'B';
        case GenKind::gamma: return 'G';
    }
    return '?';
}

/// One mode a_(n) of a generator field a(z) = sum_n a_(n) z^{-n-1}.
/// `index` is the coordinate direction in 1..d; `level` is the mode
/// subscript n. Creation modes have level < 0, annihilation modes
/// level >= 0 (for every kind).
struct ModeKey {
    GenKind kind;
    int index;
    int level;

    bool is_creation() const { return level < 0; }
    Parity parity() const { return is_odd(kind) ? Parity::odd : Parity::even; }

    /// Conformal weight contribution: beta/b have field weight 1, gamma/c
    /// weight 0, and a_(n) shifts weight by wt(a) - n - 1.
    int weight() const {
        return (kind == GenKind::beta || kind == GenKind::b) ? -level : -level - 1;
    }

    /// Fermion-number contribution (eigenvalue of the ghost-number charge).
    int fermion() const {
        if (kind == GenKind::c) return 1;
        if (kind == GenKind::b) return -1;
        return 0;
    }

    friend auto operator<=>(const ModeKey& a, const ModeKey& b) {
        if (auto c = a.level <=> b.level; c != 0) return c;
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.index <=> b.index;
    }
    friend bool operator==(const ModeKey&, const ModeKey&) = default;

    std::string to_string() const {
        std::ostringstream os;
        os << kind_letter(kind) << '[' << index << ',' << level << ']';
        return os.str();
    }
};

/// All gradings of a monomial at once.
struct Gradings {
    int weight = 0;        // eigenvalue of L_(1)
    int fermion = 0;       // eigenvalue of J_(0)
    int sw_degree = 0;     // #c modes + 2 * #gamma modes
    int gamma_degree = 0;  // #gamma modes at level -1 (the polynomial part)
    Parity parity = Parity::even;
};

/// A canonically ordered word of creation modes applied to the vacuum.
/// Invariants: modes sorted ascending by (level, kind, index), no repeated
/// odd mode, every mode a creation mode. The empty word is the vacuum.
struct Monomial {
    std::vector<ModeKey> modes;

    bool is_vacuum() const { return modes.empty(); }
    std::size_t size() const { return modes.size(); }

    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        return a.modes <=> b.modes;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    Gradings gradings() const {
        Gradings g;
        int odd_count = 0;
        for (const ModeKey& m : modes) {
            g.weight += m.weight();
            g.fermion += m.fermion();
            if (m.kind == GenKind::c) g.sw_degree += 1;
            if (m.kind == GenKind::gamma) {
                g.sw_degree += 2;
                if (m.level == -1) g.gamma_degree += 1;
            }
            if (m.parity() == Parity::odd) ++odd_count;
        }
        g.parity = (odd_count % 2 == 0) ? Parity::even : Parity::odd;
        return g;
    }

    int weight() const { return gradings().weight; }
    int fermion() const { return gradings().fermion; }
    int gamma_degree() const { return gradings().gamma_degree; }
    int sw_degree() const { return gradings().sw_degree; }
    Parity parity() const { return gradings().parity; }

    std::string to_string() const {
        if (modes.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < modes.size(); ++i) {
            if (i) s += ' ';
            s += modes[i].to_string();
        }
        return s;
    }
};

/// Result of sorting a raw word into canonical form. `vanished` is set
/// when an odd mode repeats (its square is zero); the sign is the parity
/// of the permutation restricted to the odd modes.
struct CanonicalForm {
    int sign = 1;
    Monomial word;
    bool vanished = false;
};

inline CanonicalForm canonicalize(std::vector<ModeKey> raw) {
    for (const ModeKey& m : raw) {
        if (!m.is_creation())
            throw std::invalid_argument("canonicalize: annihilation mode " + m.to_string() +
                                        " in a word (creation modes have level < 0)");
    }
    CanonicalForm out;
    // Insertion sort; each adjacent swap of two odd modes flips the sign.
    for (std::size_t i = 1; i < raw.size(); ++i) {
        ModeKey key = raw[i];
        std::size_t j = i;
        while (j > 0 && key < raw[j - 1]) {
            if (key.parity() == Parity::odd && raw[j - 1].parity() == Parity::odd)
                out.sign = -out.sign;
            raw[j] = raw[j - 1];
            --j;
        }
        raw[j] = key;
    }
    for (std::size_t i = 1; i < raw.size(); ++i) {
        if (raw[i] == raw[i - 1] && raw[i].parity() == Parity::odd) {
            out.vanished = true;
            out.sign = 1;
            return out;
        }
    }
    out.word.modes = std::move(raw);
    return out;
}

}  // namespace bgbc
