#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "deform/dgla.hpp"

namespace deform {

/// Zero bracket on a given complex; d*d = 0 is required.
inline Dgla abelian_dgla(const GradedVectorSpace& space, const GradedMap& differential) {
    Dgla g(space);
    g.set_differential(differential);
    for (int n : space.degrees()) {
        Matrix dd = differential.block(n + 1) * differential.block(n);
        if (!dd.is_zero())
            throw std::invalid_argument("abelian_dgla: differential does not square to zero");
    }
    return g;
}

/// Minimal dgla with a nontrivial obstruction: x in degree 1, y in degree 2,
/// d = 0 and [x,x] = 2y.  H^1 = <x>, H^2 = <y>, Kuranishi base k[xi]/(xi^2).
inline Dgla obstruction_toy() {
    GradedVectorSpace v({{"x", 1}, {"y", 2}});
    Dgla g(v);
    g.set_bracket("x", "x", {{"y", Rational(2)}});
    return g;
}

/// Minimal dgla with nontrivial degree-1 splitting data: g^0 = <z,w>,
/// g^1 = <x1,x2>, dz = x1, dw = 0, all brackets zero.  H^0 = <w>, H^1 = <x2>.
inline Dgla split_toy() {
    GradedVectorSpace v({{"z", 0}, {"w", 0}, {"x1", 1}, {"x2", 1}});
    Dgla g(v);
    Matrix d0(2, 2);
    d0(0, 0) = Rational(1);  // z -> x1
    g.set_differential_block(0, std::move(d0));
    return g;
}

/// An ungraded Lie algebra given by structure constants, the seed for the
/// deformation complex below.
struct LieAlgebraData {
    std::size_t dim = 0;
    std::vector<std::string> names;
    // bracket[i][j] = coordinates of [e_i, e_j]
    std::vector<std::vector<Vec>> bracket;

    static LieAlgebraData abelian(std::size_t n) {
        LieAlgebraData l;
        l.dim = n;
        for (std::size_t i = 0; i < n; ++i) l.names.push_back("e" + std::to_string(i));
        l.bracket.assign(n, std::vector<Vec>(n, zero_vec(n)));
        return l;
    }

    /// sl2 with basis e, h, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    static LieAlgebraData sl2() {
        LieAlgebraData l;
        l.dim = 3;
        l.names = {"e", "h", "f"};
        l.bracket.assign(3, std::vector<Vec>(3, zero_vec(3)));
        auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
            l.bracket[i][j][k] = Rational(c);
            l.bracket[j][i][k] = Rational(-c);
        };
        set(1, 0, 0, 2);   // [h,e] = 2e
        set(1, 2, 2, -2);  // [h,f] = -2f
        set(0, 2, 1, 1);   // [e,f] = h
        return l;
    }

    ValidationReport validate() const {
        ValidationReport report;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (!is_zero(bracket[i][j] + bracket[j][i]))
                    report.add("AntisymmetryViolation", {names[i], names[j]});
        auto br = [&](const Vec& a, const Vec& b) {
            Vec r = zero_vec(dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    if (!(a[i] * b[j]).is_zero()) r = r + (a[i] * b[j]) * bracket[i][j];
            return r;
        };
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) {
                    Vec ei = zero_vec(dim), ej = zero_vec(dim), ek = zero_vec(dim);
                    ei[i] = Rational(1);
                    ej[j] = Rational(1);
                    ek[k] = Rational(1);
                    Vec acc = br(ei, br(ej, ek)) + br(ej, br(ek, ei)) + br(ek, br(ei, ej));
                    if (!is_zero(acc))
                        report.add("JacobiViolation", {names[i], names[j], names[k]});
                }
        return report;
    }
};

namespace detail {

/// Alternating-position bookkeeping for Hom(Lambda^a L, L) functionals.
struct AltBasis {
    std::vector<std::vector<std::size_t>> tuples;  // sorted index tuples per arity entry
};

inline std::vector<std::vector<std::size_t>> sorted_tuples(std::size_t n, std::size_t a) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == a) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

/// Deformation complex of an ungraded Lie algebra: g^n = Hom(Lambda^{n+1}L, L)
/// for 0 <= n+1 <= min(dim L, W), with the Nijenhuis-Richardson bracket
/// [f,g] = f.g - (-1)^{|f||g|} g.f (insertion into the first slot, summed
/// over unshuffles) and d = [mu, -] for mu the bracket of L.
///
/// Maurer-Cartan elements of g tensor m_A are exactly the deformations of
/// the bracket of L over A.  For W >= dim L the output is a genuine dgla;
/// a smaller W truncates arities above W, and then the bracket axioms only
/// hold below the cut.
class AdjointComplex {
public:
    AdjointComplex(LieAlgebraData lie, std::size_t max_arity)
        : lie_(std::move(lie)), max_arity_(std::min(lie_.dim, max_arity)) {
        for (std::size_t a = 0; a <= max_arity_; ++a)
            tuples_.push_back(detail::sorted_tuples(lie_.dim, a));
    }

    const LieAlgebraData& lie() const { return lie_; }
    std::size_t max_arity() const { return max_arity_; }

    /// A cochain of arity a as a table: value on each sorted a-tuple.
    using Cochain = std::vector<Vec>;

    Cochain zero_cochain(std::size_t arity) const {
        return Cochain(tuples_[arity].size(), zero_vec(lie_.dim));
    }

    std::size_t tuple_index(std::size_t arity, const std::vector<std::size_t>& sorted) const {
        const auto& ts = tuples_[arity];
        auto it = std::lower_bound(ts.begin(), ts.end(), sorted);
        if (it == ts.end() || *it != sorted)
            throw std::logic_error("AdjointComplex: tuple not found");
        return static_cast<std::size_t>(it - ts.begin());
    }

    const std::vector<std::vector<std::size_t>>& tuples(std::size_t arity) const {
        return tuples_[arity];
    }

    /// Evaluate a cochain on an arbitrary tuple (antisymmetrizing), with the
    /// first argument a vector of L.
    Vec eval(const Cochain& f, std::size_t arity, const Vec& first,
             const std::vector<std::size_t>& rest) const {
        Vec out = zero_vec(lie_.dim);
        for (std::size_t a = 0; a < lie_.dim; ++a) {
            if (first[a].is_zero()) continue;
            int sign = 1;
            bool repeat = false;
            std::vector<std::size_t> tuple;
            tuple.reserve(arity);
            tuple.push_back(a);
            for (std::size_t r : rest) {
                if (r == a) {
                    repeat = true;
                    break;
                }
                tuple.push_back(r);
            }
            if (repeat) continue;
            // insertion sort, counting transpositions
            for (std::size_t i = 1; i < tuple.size(); ++i)
                for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
                    std::swap(tuple[j - 1], tuple[j]);
                    sign = -sign;
                }
            const Vec& val = f[tuple_index(arity, tuple)];
            Rational c = sign > 0 ? first[a] : -first[a];
            for (std::size_t t = 0; t < lie_.dim; ++t) out[t] += c * val[t];
        }
        return out;
    }

    /// Insertion product f.g of cochains of arities af, ag; result arity
    /// af + ag - 1.  Empty result if that exceeds the window.
    std::optional<Cochain> insertion(const Cochain& f, std::size_t af, const Cochain& g,
                                     std::size_t ag) const {
        if (af == 0) {
            // no slot to insert into
            return std::nullopt;
        }
        std::size_t arity = af + ag - 1;
        if (arity > max_arity_) return std::nullopt;
        Cochain out = zero_cochain(arity);
        const auto& args_list = tuples_[arity];
        for (std::size_t ti = 0; ti < args_list.size(); ++ti) {
            const auto& args = args_list[ti];
            // choose which ag of the args feed g, in order
            for (const auto& pick : detail::sorted_tuples(arity, ag)) {
                std::vector<std::size_t> gargs, fargs;
                std::vector<bool> used(arity, false);
                for (std::size_t p : pick) used[p] = true;
                int sign = 1;
                // parity of the unshuffle (picked positions first)
                for (std::size_t p = 0, seen = 0; p < arity; ++p) {
                    if (used[p]) {
                        sign = (p - seen) % 2 == 0 ? sign : -sign;
                        ++seen;
                    }
                }
                for (std::size_t p = 0; p < arity; ++p)
                    (used[p] ? gargs : fargs).push_back(args[p]);
                Vec gval = g[tuple_index(ag, gargs)];
                Vec term = eval(f, af, gval, fargs);
                if (sign < 0) term = Rational(-1) * term;
                out[ti] = out[ti] + term;
            }
        }
        return out;
    }

    Dgla build() const {
        GradedVectorSpace space;
        for (std::size_t a = 0; a <= max_arity_; ++a) {
            int degree = static_cast<int>(a) - 1;
            for (const auto& tuple : tuples_[a])
                for (std::size_t t = 0; t < lie_.dim; ++t)
                    space.add_basis(basis_label(tuple, t), degree);
        }
        Dgla g(space);

        // mu as a cochain of arity 2 (absent if dim L < 2)
        Cochain mu;
        if (max_arity_ >= 2) {
            mu = zero_cochain(2);
            for (std::size_t ti = 0; ti < tuples_[2].size(); ++ti) {
                const auto& t = tuples_[2][ti];
                mu[ti] = lie_.bracket[t[0]][t[1]];
            }
        }

        auto nr_bracket = [&](const Cochain& f, std::size_t af, const Cochain& gch,
                              std::size_t ag) -> std::optional<Cochain> {
            auto fg = insertion(f, af, gch, ag);
            auto gf = insertion(gch, ag, f, af);
            if (!fg && !gf) return std::nullopt;
            std::size_t arity = af + ag - 1;
            Cochain out = fg ? *fg : zero_cochain(arity);
            if (gf) {
                int p = static_cast<int>(af) - 1, q = static_cast<int>(ag) - 1;
                Rational s = (p * q) % 2 == 0 ? Rational(-1) : Rational(1);
                for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + s * (*gf)[i];
            }
            return out;
        };

        auto cochain_to_terms = [&](const Cochain& c, std::size_t arity) {
            std::vector<std::pair<std::string, Rational>> terms;
            for (std::size_t ti = 0; ti < tuples_[arity].size(); ++ti)
                for (std::size_t t = 0; t < lie_.dim; ++t)
                    if (!c[ti][t].is_zero())
                        terms.emplace_back(basis_label(tuples_[arity][ti], t), c[ti][t]);
            return terms;
        };

        for (std::size_t af = 0; af <= max_arity_; ++af)
            for (std::size_t ag = 0; ag <= max_arity_; ++ag) {
                if (af + ag < 1) continue;
                for (std::size_t fi = 0; fi < tuples_[af].size(); ++fi)
                    for (std::size_t ft = 0; ft < lie_.dim; ++ft)
                        for (std::size_t gi = 0; gi < tuples_[ag].size(); ++gi)
                            for (std::size_t gt = 0; gt < lie_.dim; ++gt) {
                                Cochain f = zero_cochain(af);
                                f[fi][ft] = Rational(1);
                                Cochain h = zero_cochain(ag);
                                h[gi][gt] = Rational(1);
                                auto br = nr_bracket(f, af, h, ag);
                                if (!br) continue;
                                auto terms = cochain_to_terms(*br, af + ag - 1);
                                if (!terms.empty())
                                    g.set_bracket(basis_label(tuples_[af][fi], ft),
                                                  basis_label(tuples_[ag][gi], gt), terms);
                            }
            }

        if (max_arity_ >= 2) {
            for (std::size_t a = 0; a <= max_arity_; ++a) {
                int degree = static_cast<int>(a) - 1;
                std::size_t rows_arity = a + 1;
                if (rows_arity > max_arity_) continue;
                Matrix block(space.dim(degree + 1), space.dim(degree));
                for (std::size_t ci = 0; ci < tuples_[a].size(); ++ci)
                    for (std::size_t ct = 0; ct < lie_.dim; ++ct) {
                        Cochain f = zero_cochain(a);
                        f[ci][ct] = Rational(1);
                        auto df = nr_bracket(mu, 2, f, a);
                        if (!df) continue;
                        std::size_t col =
                            space.find(basis_label(tuples_[a][ci], ct)).pos;
                        for (std::size_t ti = 0; ti < tuples_[a + 1].size(); ++ti)
                            for (std::size_t t = 0; t < lie_.dim; ++t)
                                if (!(*df)[ti][t].is_zero()) {
                                    std::size_t row =
                                        space.find(basis_label(tuples_[a + 1][ti], t)).pos;
                                    block(row, col) = (*df)[ti][t];
                                }
                    }
                g.set_differential_block(degree, std::move(block));
            }
        }
        return g;
    }

    std::string basis_label(const std::vector<std::size_t>& tuple, std::size_t target) const {
        std::string s;
        if (tuple.empty())
            s = "1";
        else
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                if (i) s += "^";
                s += lie_.names[tuple[i]];
            }
        return s + "->" + lie_.names[target];
    }

private:
    LieAlgebraData lie_;
    std::size_t max_arity_;
    std::vector<std::vector<std::vector<std::size_t>>> tuples_;
};

inline Dgla adjoint_dgla(const LieAlgebraData& lie, std::size_t max_arity) {
    if (!lie.validate().ok())
        throw std::invalid_argument("adjoint_dgla: input is not a Lie algebra");
    return AdjointComplex(lie, max_arity).build();
}

}  // namespace deform
