#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <tuple>

#include "bgbc/basis.hpp"
#include "bgbc/cartan.hpp"
#include "bgbc/linear_iso.hpp"
#include "bgbc/parallel.hpp"

namespace bgbc {

using StateOperator = std::function<State(const State&)>;

/// Matrix of an operator between two enumerated weight spaces; column j
/// is the image of domain element j in codomain coordinates. Throws if
/// an image leaves the codomain span (the caller must widen the
/// gamma-degree bound).
struct OperatorMatrix {
    WeightSpaceBasis domain;
    WeightSpaceBasis codomain;
    std::vector<SparseRow> columns;
};

inline OperatorMatrix operator_matrix(const StateOperator& op, WeightSpaceBasis domain,
                                      WeightSpaceBasis codomain) {
    OperatorMatrix out{std::move(domain), std::move(codomain), {}};
    out.columns.resize(std::size_t(out.domain.size()));
    parallel_for(out.columns.size(), [&](std::size_t j) {
        State image = op(State::of(out.domain.elements[j]));
        out.columns[j] = coordinates(out.codomain, image);
    });
    return out;
}

struct KernelResult {
    int dim = 0;
    std::vector<State> basis;  // reduced echelon basis over the domain
};

namespace detail {

/// Intersects `current` with the kernel of one operator. Coordinates on
/// the image side are assigned lazily, so no codomain enumeration is
/// needed.
inline std::vector<State> kernel_step(const StateOperator& op, const std::vector<State>& current) {
    const int k = static_cast<int>(current.size());
    std::vector<State> images(static_cast<std::size_t>(k));
    parallel_for(images.size(), [&](std::size_t j) { images[j] = op(current[j]); });

    std::map<Monomial, std::map<int, Rational>> rows;
    for (int j = 0; j < k; ++j)
        for (const auto& [m, c] : images[std::size_t(j)].terms()) rows[m][j] = c;

    RowReducer red(k);
    for (const auto& [m, row] : rows) red.add_row(SparseRow(row.begin(), row.end()));

    std::vector<State> next;
    for (const auto& vec : red.kernel()) {
        State s;
        for (int j = 0; j < k; ++j)
            if (sgn(vec[std::size_t(j)]) != 0) {
                State t = current[std::size_t(j)];
                t *= vec[std::size_t(j)];
                s += t;
            }
        next.push_back(std::move(s));
    }
    return next;
}

/// Deterministic reduced echelon form of a list of states over a basis.
inline std::vector<State> echelonize(const std::vector<State>& states,
                                     const WeightSpaceBasis& basis) {
    RowReducer red(basis.size());
    for (const auto& s : states) red.add_row(coordinates(basis, s));
    std::vector<State> out;
    for (const auto& [pcol, row] : red.pivot_rows()) {
        State s;
        for (const auto& [col, c] : row) s.add(basis.elements[std::size_t(col)], c);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace detail

/// Joint kernel of a family of operators on a weight space: the exact
/// invariant subspace, with a deterministic echelon basis.
inline KernelResult joint_kernel(const std::vector<StateOperator>& ops,
                                 const WeightSpaceBasis& domain) {
    std::vector<State> current;
    current.reserve(std::size_t(domain.size()));
    for (const auto& m : domain.elements) current.push_back(State::of(m));
    for (const auto& op : ops) {
        if (current.empty()) break;
        current = detail::kernel_step(op, current);
    }
    KernelResult res;
    res.basis = detail::echelonize(current, domain);
    res.dim = static_cast<int>(res.basis.size());
    return res;
}

enum class ProductKind {
    wick,        // normally ordered vertex algebra product
    mode_algebra // supercommutative product of the mode algebra
};

struct SpanResult {
    int dim = 0;
    std::vector<State> basis;
    long words_evaluated = 0;
};

namespace detail {

struct Letter {
    State value;
    int weight = 0;
    int fermion = 0;
    bool weight_zero_generator = false;
};

/// Enumerates words in the letters with prescribed total weight and
/// fermion number and evaluates their products. Weight-zero letters are
/// capped at d occurrences (they vanish beyond: each carries d, resp. 2,
/// odd modes at level -1) and derivative order is capped at K, so the
/// enumeration is finite by construction.
class WordSpan {
  public:
    WordSpan(std::vector<Letter> letters, int weight, int fermion, ProductKind kind, int max_len,
             int max_weight_zero)
        : letters_(std::move(letters)),
          weight_(weight),
          fermion_(fermion),
          kind_(kind),
          max_len_(max_len),
          max_weight_zero_(max_weight_zero) {}

    std::vector<State>& evaluate() {
        std::vector<std::size_t> word;
        rec(word, 0, 0, 0, 0);
        return values_;
    }

    long words() const { return words_; }

  private:
    void rec(std::vector<std::size_t>& word, int wsum, int fsum, int zeros, std::size_t min_idx) {
        if (wsum == weight_ && fsum == fermion_) {
            ++words_;
            State v = eval_word(word);
            if (!v.is_zero()) values_.push_back(std::move(v));
        }
        if (static_cast<int>(word.size()) >= max_len_) return;
        // Commutative products range over multisets; ordered words
        // otherwise.
        const std::size_t start = (kind_ == ProductKind::mode_algebra) ? min_idx : 0;
        for (std::size_t i = start; i < letters_.size(); ++i) {
            const Letter& l = letters_[i];
            if (wsum + l.weight > weight_) continue;
            const int z = zeros + (l.weight_zero_generator ? 1 : 0);
            if (z > max_weight_zero_) continue;
            word.push_back(i);
            rec(word, wsum + l.weight, fsum + l.fermion, z, i);
            word.pop_back();
        }
    }

    State eval_word(const std::vector<std::size_t>& word) {
        if (word.empty()) return State::vacuum();
        auto it = cache_.find(word);
        if (it != cache_.end()) return it->second;
        std::vector<std::size_t> tail(word.begin() + 1, word.end());
        State rest = eval_word(tail);
        State out;
        if (!rest.is_zero()) {
            const State& head = letters_[word.front()].value;
            out = (kind_ == ProductKind::wick) ? wick(head, rest) : sw_mul(head, rest);
        }
        cache_.emplace(word, out);
        return out;
    }

    std::vector<Letter> letters_;
    int weight_, fermion_;
    ProductKind kind_;
    int max_len_, max_weight_zero_;
    std::map<std::vector<std::size_t>, State> cache_;
    std::vector<State> values_;
    long words_ = 0;
};

}  // namespace detail

/// Lexicographic-pivot span of all iterated products of derivatives of
/// the generators at fixed weight and fermion number.
inline SpanResult differential_span(const std::vector<std::pair<std::string, State>>& generators,
                                    int d, int weight, int fermion, ProductKind kind) {
    std::vector<detail::Letter> letters;
    for (const auto& [name, g] : generators) {
        auto w = g.homogeneous_weight();
        auto f = g.homogeneous_fermion();
        if (!w || !f)
            throw std::invalid_argument("differential_span: generator " + name +
                                        " is not weight/fermion homogeneous");
        State cur = g;
        for (int k = 0; *w + k <= weight; ++k) {
            if (!cur.is_zero())
                letters.push_back(
                    {cur, *w + k, *f, /*weight_zero_generator=*/(*w + k) == 0});
            cur = translation(cur);
        }
    }
    detail::WordSpan span(std::move(letters), weight, fermion, kind,
                          /*max_len=*/weight + d, /*max_weight_zero=*/d);
    std::vector<State>& values = span.evaluate();

    WeightSpaceBasis sector = enumerate_basis(d, weight, fermion, 0);
    SpanResult res;
    res.words_evaluated = span.words();
    res.basis = detail::echelonize(values, sector);
    res.dim = static_cast<int>(res.basis.size());
    return res;
}

/// One bigraded slot of an invariant-theory comparison.
struct InvariantEntry {
    int weight = 0;
    int fermion = 0;
    int domain_dim = 0;
    int kernel_dim = 0;
    int kernel_dim_prev_degree = 0;  // with fields of degree <= N-1 only
    int span_dim = 0;
    bool match = false;
    bool stable = false;
    bool span_in_kernel = false;
    bool wplus_reduction_ok = false;
};

struct InvariantReport {
    int dim_v = 0;
    SeriesKind series = SeriesKind::special;
    int max_weight = 0;
    int degree_bound = 0;
    std::vector<InvariantEntry> entries;
    bool all_match = true;
    bool all_stable = true;
    bool all_span_in_kernel = true;
    bool all_wplus_ok = true;
};

namespace detail {

inline std::vector<std::pair<std::string, State>> series_generators(const FieldCatalog& f,
                                                                    SeriesKind series) {
    if (series == SeriesKind::special) return f.odake_generators();
    if (series == SeriesKind::hamiltonian) return f.n4_generators();
    throw std::invalid_argument("invariant comparison: series must be special or hamiltonian");
}

/// Generators of the current-algebra invariant ring in the mode algebra.
/// Seven of the eight field preimages are polynomials in the level-zero
/// jet variables; the stress tensor is not (its bc half is a jet-1
/// pairing, invariant only inside dJ). Its top graded component, the
/// beta-gamma pairing, is the classical invariant that belongs in the
/// list, so it replaces L here.
inline std::vector<std::pair<std::string, State>> mode_algebra_generators(const FieldCatalog& f,
                                                                          SeriesKind series) {
    auto gens = series_generators(f, series);
    for (auto& [name, g] : gens) {
        if (name == "L") {
            name = "L_top";
            g = sw_top(g);
        }
    }
    return gens;
}

/// Sector list of a weight space: (fermion, monomials) grouped from one
/// full enumeration.
inline std::map<int, std::vector<Monomial>> fermion_sectors(int d, int weight, int gamma_bound) {
    WeightSpaceBasis full = enumerate_basis(d, weight, std::nullopt, gamma_bound);
    std::map<int, std::vector<Monomial>> sectors;
    for (const auto& m : full.elements) sectors[m.fermion()].push_back(m);
    return sectors;
}

inline WeightSpaceBasis sector_basis(int d, int weight, int fermion, int gamma_bound) {
    return enumerate_basis(d, weight, fermion, gamma_bound);
}

}  // namespace detail

/// Runs the full kernel-vs-span comparison: joint kernels of the series
/// action in field degrees -1..N on the gamma-free weight spaces, against
/// the differential span of the matching eight generators. The kernel
/// dimension one degree earlier is recorded so stabilization is reported,
/// never assumed. The reduction to the gamma-free subspace is itself
/// verified on a gamma-degree <= 1 extension of each sector.
inline InvariantReport compare_invariants(int d, SeriesKind series, int max_weight,
                                          int degree_bound) {
    if (degree_bound < 0)
        throw std::invalid_argument("compare_invariants: degree bound must be >= 0");
    FieldCatalog fields = standard_fields(d);
    auto gens = detail::series_generators(fields, series);

    // One Cartan operator per vector field, grouped by degree.
    std::vector<std::vector<CartanOperator>> by_degree;
    for (int n = -1; n <= degree_bound; ++n) {
        std::vector<CartanOperator> ops;
        for (const auto& v : vect_basis(d, n, series)) ops.emplace_back(v, fields.Q);
        by_degree.push_back(std::move(ops));
    }

    InvariantReport report;
    report.dim_v = d;
    report.series = series;
    report.max_weight = max_weight;
    report.degree_bound = degree_bound;

    for (int K = 0; K <= max_weight; ++K) {
        for (auto& [fermion, monos] : detail::fermion_sectors(d, K, 0)) {
            InvariantEntry entry;
            entry.weight = K;
            entry.fermion = fermion;
            entry.domain_dim = static_cast<int>(monos.size());

            std::vector<State> current;
            for (const auto& m : monos) current.push_back(State::of(m));
            for (std::size_t deg = 0; deg < by_degree.size(); ++deg) {
                for (const auto& op : by_degree[deg]) {
                    if (current.empty()) break;
                    current = detail::kernel_step(
                        [&op](const State& s) { return op.apply(s); }, current);
                }
                if (deg + 2 == by_degree.size())
                    entry.kernel_dim_prev_degree = static_cast<int>(current.size());
            }
            WeightSpaceBasis sector = detail::sector_basis(d, K, fermion, 0);
            std::vector<State> kernel = detail::echelonize(current, sector);
            entry.kernel_dim = static_cast<int>(kernel.size());
            entry.stable = entry.kernel_dim == entry.kernel_dim_prev_degree;

            SpanResult span = differential_span(gens, d, K, fermion, ProductKind::wick);
            entry.span_dim = span.dim;
            entry.match = entry.span_dim == entry.kernel_dim;

            entry.span_in_kernel = true;
            for (const auto& s : span.basis)
                for (const auto& degree_ops : by_degree)
                    for (const auto& op : degree_ops)
                        if (!op.apply(s).is_zero()) entry.span_in_kernel = false;

            // The degree -1 operators alone must cut the gamma-extended
            // sector down to its gamma-free part.
            {
                WeightSpaceBasis ext = detail::sector_basis(d, K, fermion, 1);
                std::vector<State> cur;
                for (const auto& m : ext.elements) cur.push_back(State::of(m));
                for (const auto& op : by_degree[0])
                    cur = detail::kernel_step([&op](const State& s) { return op.apply(s); }, cur);
                bool ok = static_cast<int>(cur.size()) == entry.domain_dim;
                for (const auto& s : cur)
                    if (s.max_gamma_degree() != 0) ok = false;
                entry.wplus_reduction_ok = ok;
            }

            report.all_match = report.all_match && entry.match;
            report.all_stable = report.all_stable && entry.stable;
            report.all_span_in_kernel = report.all_span_in_kernel && entry.span_in_kernel;
            report.all_wplus_ok = report.all_wplus_ok && entry.wplus_reduction_ok;
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

/// Kernel dimensions of the g_0[t] action (t-powers 0..K) on the weight-K
/// slices of the mode algebra, against the span of the same eight
/// generators under the supercommutative product.
inline InvariantReport compare_g0t_invariants(int d, SeriesKind series, int max_weight) {
    FieldCatalog fields = standard_fields(d);
    auto gens = detail::mode_algebra_generators(fields, series);
    std::vector<Mat> g0 = g0_basis(d, series);

    InvariantReport report;
    report.dim_v = d;
    report.series = series;
    report.max_weight = max_weight;
    report.degree_bound = 0;

    for (int K = 0; K <= max_weight; ++K) {
        for (auto& [fermion, monos] : detail::fermion_sectors(d, K, 0)) {
            InvariantEntry entry;
            entry.weight = K;
            entry.fermion = fermion;
            entry.domain_dim = static_cast<int>(monos.size());

            std::vector<State> current;
            for (const auto& m : monos) current.push_back(State::of(m));
            for (int power = 0; power <= K && !current.empty(); ++power)
                for (const auto& g : g0) {
                    G0tElement e{g, power};
                    current = detail::kernel_step(
                        [&e](const State& s) { return g0t_action(e, s); }, current);
                }
            WeightSpaceBasis sector = detail::sector_basis(d, K, fermion, 0);
            std::vector<State> kernel = detail::echelonize(current, sector);
            entry.kernel_dim = static_cast<int>(kernel.size());
            entry.kernel_dim_prev_degree = entry.kernel_dim;
            entry.stable = true;

            SpanResult span = differential_span(gens, d, K, fermion, ProductKind::mode_algebra);
            entry.span_dim = span.dim;
            entry.match = entry.span_dim == entry.kernel_dim;

            entry.span_in_kernel = true;
            for (const auto& s : span.basis)
                for (int power = 0; power <= K; ++power)
                    for (const auto& g : g0)
                        if (!g0t_action(G0tElement{g, power}, s).is_zero())
                            entry.span_in_kernel = false;
            entry.wplus_reduction_ok = true;

            report.all_match = report.all_match && entry.match;
            report.all_span_in_kernel = report.all_span_in_kernel && entry.span_in_kernel;
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

/// Fixed points of a finite matrix group acting through the induced
/// vertex algebra automorphisms, computed two ways: as the joint kernel
/// of (iso - id) and as the rank of the averaging projector.
struct GroupInvariantEntry {
    int weight = 0;
    int fermion = 0;
    int domain_dim = 0;
    int fixed_dim = 0;
    int projector_rank = 0;
    bool agree = false;
};

struct GroupInvariantReport {
    int dim_v = 0;
    int max_weight = 0;
    int gamma_bound = 0;
    std::size_t group_order = 0;
    std::vector<GroupInvariantEntry> entries;
    bool all_agree = true;
};

inline void check_group_closure(const std::vector<Mat>& group) {
    if (group.empty()) throw std::invalid_argument("group: empty element list");
    bool has_identity = false;
    for (const auto& g : group) {
        if (g == Mat::identity(g.rows())) has_identity = true;
        g.inverse();  // throws if singular
    }
    if (!has_identity) throw std::invalid_argument("group: identity element missing");
    for (const auto& g : group)
        for (const auto& h : group) {
            Mat gh = g * h;
            bool found = false;
            for (const auto& k : group)
                if (k == gh) found = true;
            if (!found)
                throw std::invalid_argument("group: element list is not closed under products");
        }
}

inline GroupInvariantReport finite_group_invariants(const std::vector<Mat>& group, int d,
                                                    int max_weight, int gamma_bound = 0) {
    check_group_closure(group);
    std::vector<LinearIso> isos;
    for (const auto& g : group) isos.emplace_back(g);

    GroupInvariantReport report;
    report.dim_v = d;
    report.max_weight = max_weight;
    report.gamma_bound = gamma_bound;
    report.group_order = group.size();

    const Rational inv_order(Integer(1), Integer(static_cast<long>(group.size())));
    for (int K = 0; K <= max_weight; ++K) {
        for (auto& [fermion, monos] : detail::fermion_sectors(d, K, gamma_bound)) {
            GroupInvariantEntry entry;
            entry.weight = K;
            entry.fermion = fermion;
            entry.domain_dim = static_cast<int>(monos.size());
            WeightSpaceBasis sector = detail::sector_basis(d, K, fermion, gamma_bound);

            std::vector<State> current;
            for (const auto& m : monos) current.push_back(State::of(m));
            for (const auto& iso : isos)
                current = detail::kernel_step(
                    [&iso](const State& s) { return iso.apply(s) - s; }, current);
            entry.fixed_dim = static_cast<int>(detail::echelonize(current, sector).size());

            RowReducer red(sector.size());
            for (const auto& m : sector.elements) {
                State avg;
                for (const auto& iso : isos) avg += iso.apply(State::of(m));
                avg *= inv_order;
                if (!avg.is_zero()) red.add_row(coordinates(sector, avg));
            }
            entry.projector_rank = red.rank();
            entry.agree = entry.projector_rank == entry.fixed_dim;
            report.all_agree = report.all_agree && entry.agree;
            report.entries.push_back(entry);
        }
    }
    return report;
}

/// Plain-text bigraded dimension table, rows sorted by (weight, fermion).
inline std::string hilbert_series_table(
    const std::vector<std::tuple<int, int, long>>& dims) {
    std::ostringstream os;
    if (dims.empty()) return "";
    os << "weight fermion dim\n";
    auto sorted = dims;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [w, f, dim] : sorted) os << w << ' ' << f << ' ' << dim << '\n';
    return os.str();
}

}  // namespace bgbc
