#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bgbc/linalg.hpp"

namespace bgbc {

/// Exponent multi-index over x_1..x_d.
using Multi = std::vector<int>;

/// Polynomial in x_1..x_d with rational coefficients, keyed by exponent.
using Polynomial = std::map<Multi, Rational>;

inline int total_degree(const Multi& m) {
    int t = 0;
    for (int e : m) t += e;
    return t;
}

inline void poly_add(Polynomial& p, const Multi& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) p.erase(it);
    }
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Multi m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            Rational c = ca * cb;
            poly_add(out, m, c);
        }
    return out;
}

/// d/dx_i (i is 1-based).
inline Polynomial poly_partial(const Polynomial& p, int i) {
    Polynomial out;
    for (const auto& [m, c] : p) {
        int e = m[std::size_t(i - 1)];
        if (e == 0) continue;
        Multi mm = m;
        mm[std::size_t(i - 1)] -= 1;
        Rational t = c * e;
        poly_add(out, mm, t);
    }
    return out;
}

/// All exponent multi-indices of total degree `deg` over d variables, in
/// lexicographic order.
inline std::vector<Multi> monomials_of_degree(int d, int deg) {
    std::vector<Multi> out;
    Multi cur(std::size_t(d), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == d - 1) {
            cur[std::size_t(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[std::size_t(pos)] = e;
            self(self, pos + 1, left - e);
        }
    };
    if (d >= 1 && deg >= 0) rec(rec, 0, deg);
    return out;
}

/// A polynomial vector field sum_i P_i d/dx_i on the rank-d space.
/// Degree-n fields have homogeneous coefficients of degree n+1.
struct PolyVectorField {
    int dim = 0;
    std::vector<Polynomial> comp;  // comp[i-1] = P_i

    explicit PolyVectorField(int d = 0) : dim(d), comp(std::size_t(d)) {}

    bool is_zero() const {
        for (const auto& p : comp)
            if (!p.empty()) return false;
        return true;
    }

    /// The grading degree n (coefficients of degree n+1); nullopt if the
    /// field is zero or inhomogeneous.
    std::optional<int> degree() const {
        std::optional<int> deg;
        for (const auto& p : comp)
            for (const auto& [m, c] : p) {
                int t = total_degree(m);
                if (!deg)
                    deg = t;
                else if (*deg != t)
                    return std::nullopt;
            }
        if (!deg) return std::nullopt;
        return *deg - 1;
    }

    friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

    std::string to_string() const {
        std::ostringstream os;
        bool any = false;
        for (int i = 1; i <= dim; ++i) {
            for (const auto& [m, c] : comp[std::size_t(i - 1)]) {
                if (any) os << " + ";
                any = true;
                os << c.get_str();
                for (int v = 1; v <= dim; ++v)
                    for (int e = 0; e < m[std::size_t(v - 1)]; ++e) os << " x" << v;
                os << " d" << i;
            }
        }
        if (!any) os << "0";
        return os.str();
    }
};

inline PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) {
    for (int i = 0; i < a.dim; ++i)
        for (const auto& [m, c] : b.comp[std::size_t(i)]) poly_add(a.comp[std::size_t(i)], m, c);
    return a;
}

inline PolyVectorField operator*(const Rational& r, PolyVectorField v) {
    for (auto& p : v.comp) {
        Polynomial q;
        for (const auto& [m, c] : p) poly_add(q, m, Rational(r * c));
        p = std::move(q);
    }
    return v;
}

/// [v, w]: components sum_i (P_i d_i P'_j - P'_i d_i P_j) for each j.
inline PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w) {
    if (v.dim != w.dim) throw std::invalid_argument("lie_bracket: rank mismatch");
    PolyVectorField out(v.dim);
    for (int j = 1; j <= v.dim; ++j) {
        Polynomial acc;
        for (int i = 1; i <= v.dim; ++i) {
            for (const auto& [m, c] : poly_mul(v.comp[std::size_t(i - 1)],
                                               poly_partial(w.comp[std::size_t(j - 1)], i)))
                poly_add(acc, m, c);
            for (const auto& [m, c] : poly_mul(w.comp[std::size_t(i - 1)],
                                               poly_partial(v.comp[std::size_t(j - 1)], i)))
                poly_add(acc, m, Rational(-c));
        }
        out.comp[std::size_t(j - 1)] = std::move(acc);
    }
    return out;
}

inline Polynomial divergence(const PolyVectorField& v) {
    Polynomial out;
    for (int i = 1; i <= v.dim; ++i)
        for (const auto& [m, c] : poly_partial(v.comp[std::size_t(i - 1)], i)) poly_add(out, m, c);
    return out;
}

/// The two constant-coefficient forms the engine works with: the volume
/// form dx_1 ^ ... ^ dx_d and, for even d = 2l, the symplectic form
/// sum_i dx_{2i-1} ^ dx_{2i}.
enum class FormKind { volume, symplectic };

/// L_v omega = 0, evaluated exactly. For the volume form this is
/// divergence freeness; for the symplectic form, d(i_v omega) = 0 by
/// Cartan's formula since the form is closed.
inline bool preserves_form(const PolyVectorField& v, FormKind form) {
    if (form == FormKind::volume) return divergence(v).empty();
    if (v.dim % 2 != 0)
        throw std::domain_error("symplectic form requires even dimension d = 2l");
    // i_v omega = sum_i (P_{2i-1} dx_{2i} - P_{2i} dx_{2i-1}); compute its
    // exterior derivative coefficient on each dx_j ^ dx_k.
    std::vector<Polynomial> a(std::size_t(v.dim));  // a[m-1] = coefficient of dx_m
    for (int i = 1; 2 * i <= v.dim; ++i) {
        for (const auto& [m, c] : v.comp[std::size_t(2 * i - 2)])
            poly_add(a[std::size_t(2 * i - 1)], m, c);
        for (const auto& [m, c] : v.comp[std::size_t(2 * i - 1)])
            poly_add(a[std::size_t(2 * i - 2)], m, Rational(-c));
    }
    for (int j = 1; j <= v.dim; ++j)
        for (int k = j + 1; k <= v.dim; ++k) {
            Polynomial coeff = poly_partial(a[std::size_t(k - 1)], j);
            for (const auto& [m, c] : poly_partial(a[std::size_t(j - 1)], k))
                poly_add(coeff, m, Rational(-c));
            if (!coeff.empty()) return false;
        }
    return true;
}

enum class SeriesKind { general, special, hamiltonian };

/// Deterministic basis of the degree-n part of the chosen series.
///   general:     all x^alpha d/dx_i, |alpha| = n+1
///   special:     kernel of the divergence (volume-preserving fields)
///   hamiltonian: v_H over monomial Hamiltonians H of degree n+2, with
///                v_H = sum_i (dH/dx_{2i}) d_{2i-1} - (dH/dx_{2i-1}) d_{2i}
inline std::vector<PolyVectorField> vect_basis(int d, int n, SeriesKind series) {
    if (n < -1) throw std::invalid_argument("vect_basis: degree must be >= -1");
    if (series == SeriesKind::hamiltonian && d % 2 != 0)
        throw std::domain_error("the Hamiltonian series requires even dimension d = 2l");

    std::vector<PolyVectorField> out;
    if (series == SeriesKind::general ||
        (series == SeriesKind::special && n == -1)) {
        auto monos = monomials_of_degree(d, n + 1);
        for (int i = 1; i <= d; ++i)
            for (const auto& m : monos) {
                PolyVectorField v(d);
                v.comp[std::size_t(i - 1)][m] = 1;
                out.push_back(std::move(v));
            }
        return out;
    }

    if (series == SeriesKind::special) {
        // Kernel of div : Vect_n -> Sym^n in the lexicographic bases.
        auto dom_monos = monomials_of_degree(d, n + 1);
        auto cod_monos = monomials_of_degree(d, n);
        std::map<Multi, int> cod_index;
        for (std::size_t i = 0; i < cod_monos.size(); ++i)
            cod_index[cod_monos[i]] = static_cast<int>(i);

        const int ncols = d * static_cast<int>(dom_monos.size());
        std::vector<std::map<int, Rational>> rows(cod_monos.size());
        int col = 0;
        for (int i = 1; i <= d; ++i)
            for (const auto& m : dom_monos) {
                Polynomial p{{m, Rational(1)}};
                for (const auto& [mm, cc] : poly_partial(p, i))
                    rows[std::size_t(cod_index.at(mm))][col] += cc;
                ++col;
            }
        RowReducer red(ncols);
        for (auto& r : rows) {
            SparseRow sr(r.begin(), r.end());
            red.add_row(std::move(sr));
        }
        for (const auto& vec : red.kernel()) {
            PolyVectorField v(d);
            int c = 0;
            for (int i = 1; i <= d; ++i)
                for (const auto& m : dom_monos) {
                    if (sgn(vec[std::size_t(c)]) != 0)
                        poly_add(v.comp[std::size_t(i - 1)], m, vec[std::size_t(c)]);
                    ++c;
                }
            out.push_back(std::move(v));
        }
        return out;
    }

    // Hamiltonian series.
    for (const auto& h : monomials_of_degree(d, n + 2)) {
        Polynomial hp{{h, Rational(1)}};
        PolyVectorField v(d);
        for (int i = 1; 2 * i <= d; ++i) {
            for (const auto& [m, c] : poly_partial(hp, 2 * i))
                poly_add(v.comp[std::size_t(2 * i - 2)], m, c);
            for (const auto& [m, c] : poly_partial(hp, 2 * i - 1))
                poly_add(v.comp[std::size_t(2 * i - 1)], m, Rational(-c));
        }
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

/// Matrix M of a degree-0 (linear) field v = sum_{ij} M_{ij} x_i d/dx_j.
inline Mat matrix_of_linear_field(const PolyVectorField& v) {
    Mat m(v.dim, v.dim);
    for (int j = 1; j <= v.dim; ++j)
        for (const auto& [mono, c] : v.comp[std::size_t(j - 1)]) {
            if (total_degree(mono) != 1)
                throw std::invalid_argument("matrix_of_linear_field: field is not linear");
            for (int i = 1; i <= v.dim; ++i)
                if (mono[std::size_t(i - 1)] == 1) m.at(i - 1, j - 1) = c;
        }
    return m;
}

inline PolyVectorField linear_field_of_matrix(const Mat& m) {
    PolyVectorField v(m.rows());
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j) {
            if (sgn(m.at(i - 1, j - 1)) == 0) continue;
            Multi mono(std::size_t(m.rows()), 0);
            mono[std::size_t(i - 1)] = 1;
            poly_add(v.comp[std::size_t(j - 1)], mono, m.at(i - 1, j - 1));
        }
    return v;
}

}  // namespace bgbc
