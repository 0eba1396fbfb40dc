#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deform/errors.hpp"
#include "deform/graded.hpp"

namespace deform {

/// Differential graded Lie algebra over the rationals: a graded space, a
/// degree +1 differential and bracket structure constants.  Values are
/// immutable once built; construction goes through the setters below and a
/// final validate_dgla in any code that needs a certified structure.
class Dgla {
public:
    Dgla() = default;
    explicit Dgla(GradedVectorSpace space)
        : space_(std::move(space)), d_(space_, space_, +1) {}

    const GradedVectorSpace& space() const { return space_; }
    const GradedMap& differential() const { return d_; }

    void set_differential(GradedMap d) {
        if (d.degree() != 1) throw std::invalid_argument("Dgla: differential must have degree +1");
        if (!(d.source() == space_) || !(d.target() == space_))
            throw std::invalid_argument("Dgla: differential must be an endomorphism of the space");
        d_ = std::move(d);
    }

    void set_differential_block(int degree, Matrix block) { d_.set_block(degree, std::move(block)); }

    /// Structure constants for one ordered pair of basis elements.
    void set_bracket(const std::string& left, const std::string& right,
                     const std::vector<std::pair<std::string, Rational>>& terms) {
        BasisRef x = space_.find(left);
        BasisRef y = space_.find(right);
        std::vector<std::pair<BasisRef, Rational>> t;
        for (const auto& [label, c] : terms)
            if (!c.is_zero()) t.emplace_back(space_.find(label), c);
        if (t.empty())
            brackets_.erase({x, y});
        else
            brackets_[{x, y}] = std::move(t);
    }

    /// Fills every missing transpose pair by graded antisymmetry
    /// [y,x] = -(-1)^{pq}[x,y].  Explicitly stored pairs are left alone.
    void complete_antisymmetric() {
        auto snapshot = brackets_;
        for (const auto& [key, terms] : snapshot) {
            auto [x, y] = key;
            if (brackets_.count({y, x})) continue;
            if (x == y) continue;
            Rational sign = (x.degree * y.degree) % 2 == 0 ? Rational(-1) : Rational(1);
            std::vector<std::pair<BasisRef, Rational>> t;
            for (const auto& [ref, c] : terms) t.emplace_back(ref, sign * c);
            brackets_[{y, x}] = std::move(t);
        }
    }

    const std::vector<std::pair<BasisRef, Rational>>& bracket_terms(const BasisRef& x,
                                                                    const BasisRef& y) const {
        static const std::vector<std::pair<BasisRef, Rational>> empty;
        auto it = brackets_.find({x, y});
        return it == brackets_.end() ? empty : it->second;
    }

    GradedElement bracket_basis(const BasisRef& x, const BasisRef& y) const {
        GradedElement e;
        for (const auto& [ref, c] : bracket_terms(x, y)) {
            Vec v = zero_vec(space_.dim(ref.degree));
            v[ref.pos] = c;
            e.add(ref.degree, v);
        }
        return e;
    }

    /// Bilinear extension of the structure constants.
    GradedElement bracket(const GradedElement& a, const GradedElement& b) const {
        GradedElement out;
        for (const auto& [p, av] : a.comps)
            for (const auto& [q, bv] : b.comps)
                for (std::size_t i = 0; i < av.size(); ++i) {
                    if (av[i].is_zero()) continue;
                    for (std::size_t j = 0; j < bv.size(); ++j) {
                        if (bv[j].is_zero()) continue;
                        Rational c = av[i] * bv[j];
                        for (const auto& [ref, s] :
                             bracket_terms(BasisRef{p, i}, BasisRef{q, j})) {
                            Vec v = zero_vec(space_.dim(ref.degree));
                            v[ref.pos] = c * s;
                            out.add(ref.degree, v);
                        }
                    }
                }
        return out;
    }

    GradedElement d(const GradedElement& e) const { return d_.apply(e); }

    const std::map<std::pair<BasisRef, BasisRef>, std::vector<std::pair<BasisRef, Rational>>>&
    brackets() const {
        return brackets_;
    }

private:
    GradedVectorSpace space_;
    GradedMap d_;
    std::map<std::pair<BasisRef, BasisRef>, std::vector<std::pair<BasisRef, Rational>>> brackets_;
};

/// Exhaustive check of the three dgla axioms plus degree coherence of the
/// stored structure constants, over all basis tuples.
inline ValidationReport validate_dgla(const Dgla& g) {
    ValidationReport report;
    const GradedVectorSpace& v = g.space();
    std::vector<BasisRef> refs = v.all_refs();

    for (const auto& [key, terms] : g.brackets()) {
        auto [x, y] = key;
        for (const auto& [ref, c] : terms) {
            if (c.is_zero()) continue;
            if (ref.degree != x.degree + y.degree) {
                report.add("DegreeViolation", {v.label(x), v.label(y)},
                           "term " + v.label(ref) + " has degree " + std::to_string(ref.degree) +
                               ", expected " + std::to_string(x.degree + y.degree));
                break;
            }
        }
    }

    for (int n : v.degrees()) {
        Matrix dd = g.differential().block(n + 1) * g.differential().block(n);
        if (!dd.is_zero())
            report.add("DifferentialSquareViolation", {std::to_string(n)},
                       "d o d is nonzero on degree " + std::to_string(n));
    }

    auto elem_eq = [](const GradedElement& a, const GradedElement& b) {
        GradedElement diff = a;
        diff.add_scaled(Rational(-1), b);
        return diff.is_zero();
    };

    for (const BasisRef& x : refs)
        for (const BasisRef& y : refs) {
            GradedElement xy = g.bracket_basis(x, y);
            GradedElement yx = g.bracket_basis(y, x);
            GradedElement sum = xy;
            Rational sign = (x.degree * y.degree) % 2 == 0 ? Rational(1) : Rational(-1);
            sum.add_scaled(sign, yx);
            if (!sum.is_zero())
                report.add("AntisymmetryViolation", {v.label(x), v.label(y)});

            GradedElement lhs = g.d(xy);
            GradedElement rhs = g.bracket(g.d(GradedElement::basis(v, x)),
                                          GradedElement::basis(v, y));
            Rational s = x.degree % 2 == 0 ? Rational(1) : Rational(-1);
            rhs.add_scaled(s, g.bracket(GradedElement::basis(v, x),
                                        g.d(GradedElement::basis(v, y))));
            if (!elem_eq(lhs, rhs)) report.add("LeibnizViolation", {v.label(x), v.label(y)});
        }

    auto sgn = [](int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };
    for (const BasisRef& x : refs)
        for (const BasisRef& y : refs)
            for (const BasisRef& z : refs) {
                int p = x.degree, q = y.degree, r = z.degree;
                GradedElement ex = GradedElement::basis(v, x);
                GradedElement ey = GradedElement::basis(v, y);
                GradedElement ez = GradedElement::basis(v, z);
                GradedElement acc;
                acc.add_scaled(sgn(p * r), g.bracket(ex, g.bracket(ey, ez)));
                acc.add_scaled(sgn(p * q), g.bracket(ey, g.bracket(ez, ex)));
                acc.add_scaled(sgn(q * r), g.bracket(ez, g.bracket(ex, ey)));
                if (!acc.is_zero())
                    report.add("JacobiViolation", {v.label(x), v.label(y), v.label(z)});
            }

    return report;
}

/// Kernel, image, and a canonical cohomology splitting in one degree.
struct Cohomology {
    std::size_t dim = 0;
    std::vector<Vec> representatives;  // cocycle lifts, coordinates in g^n
    Subspace cocycles;                 // Z^n
    Subspace coboundaries;             // B^n
    Subspace h_lift;                   // canonical complement of B^n inside Z^n

    Cohomology() : cocycles(0), coboundaries(0), h_lift(0) {}
};

inline Cohomology cohomology(const Dgla& g, int n) {
    Cohomology out;
    out.cocycles = kernel_basis(g.differential().block(n));
    out.coboundaries = image_basis(g.differential().block(n - 1));
    out.h_lift = complement(out.coboundaries, out.cocycles);
    out.dim = out.h_lift.dim();
    out.representatives = out.h_lift.basis();
    return out;
}

inline bool cohomology_vanishes_below(const Dgla& g, int bound) {
    if (g.space().empty()) return true;
    for (int n = g.space().min_degree() - 1; n < bound; ++n)
        if (cohomology(g, n).dim != 0) return false;
    return true;
}

/// Mapping cone of the identity: Cn(g)^n = g^n + eps*g^{n-1} with eps of
/// degree +1.  The unique dgla structure in this shape extending the
/// bracket of g is
///   d(x + eps y)            = dx + eps(x - dy),
///   [x + eps y, x' + eps y'] = [x,x'] + eps/2 ([y,x'] + (-1)^{|x|}[x,y']),
/// and the result is acyclic in every degree.
inline Dgla cone(const Dgla& g) {
    const GradedVectorSpace& v = g.space();
    GradedVectorSpace cv;
    std::vector<int> cone_degrees;
    {
        std::set<int> degs;
        for (int d : v.degrees()) {
            degs.insert(d);
            degs.insert(d + 1);
        }
        cone_degrees.assign(degs.begin(), degs.end());
    }
    for (int n : cone_degrees) {
        for (const std::string& label : v.labels(n)) cv.add_basis(label, n);
        for (const std::string& label : v.labels(n - 1)) cv.add_basis("eps_" + label, n);
    }
    Dgla c(cv);

    auto plain = [&](const BasisRef& r) { return cv.find(v.label(r)); };
    auto eps = [&](const BasisRef& r) { return cv.find("eps_" + v.label(r)); };

    // d(x) = dx + eps x;  d(eps y) = -eps dy
    for (int n : cone_degrees) {
        std::size_t rows = cv.dim(n + 1), cols = cv.dim(n);
        if (rows == 0 || cols == 0) continue;
        Matrix block(rows, cols);
        Matrix dg_n = g.differential().block(n);
        Matrix dg_prev = g.differential().block(n - 1);
        for (std::size_t j = 0; j < v.dim(n); ++j) {
            BasisRef src{n, j};
            std::size_t col = plain(src).pos;
            block(eps(src).pos, col) = Rational(1);
            for (std::size_t i = 0; i < v.dim(n + 1); ++i)
                if (!dg_n(i, j).is_zero()) block(plain(BasisRef{n + 1, i}).pos, col) = dg_n(i, j);
        }
        for (std::size_t j = 0; j < v.dim(n - 1); ++j) {
            std::size_t col = eps(BasisRef{n - 1, j}).pos;
            for (std::size_t i = 0; i < v.dim(n); ++i)
                if (!dg_prev(i, j).is_zero())
                    block(eps(BasisRef{n, i}).pos, col) = -dg_prev(i, j);
        }
        c.set_differential_block(n, std::move(block));
    }

    auto add_terms = [&](const std::string& l, const std::string& r, const BasisRef& gx,
                         const BasisRef& gy, const Rational& scale, bool to_eps) {
        std::vector<std::pair<std::string, Rational>> terms;
        for (const auto& [ref, coeff] : g.bracket_terms(gx, gy)) {
            std::string label = to_eps ? "eps_" + v.label(ref) : v.label(ref);
            terms.emplace_back(label, scale * coeff);
        }
        if (!terms.empty()) c.set_bracket(l, r, terms);
    };
    const Rational half(1, 2);
    for (const BasisRef& x : v.all_refs())
        for (const BasisRef& y : v.all_refs()) {
            add_terms(v.label(x), v.label(y), x, y, Rational(1), false);
            Rational sx = x.degree % 2 == 0 ? half : -half;
            add_terms(v.label(x), "eps_" + v.label(y), x, y, sx, true);
            add_terms("eps_" + v.label(x), v.label(y), x, y, half, true);
        }
    return c;
}

/// Map of dglas: a degree-0 chain map also preserving brackets.
struct DglaMorphism {
    Dgla source;
    Dgla target;
    GradedMap map;  // degree 0
};

inline ValidationReport validate_morphism(const DglaMorphism& f) {
    ValidationReport report;
    const GradedVectorSpace& sv = f.source.space();
    for (int n : sv.degrees()) {
        Matrix lhs = f.target.differential().block(n) * f.map.block(n);
        Matrix rhs = f.map.block(n + 1) * f.source.differential().block(n);
        if (lhs != rhs) report.add("ChainMapViolation", {std::to_string(n)});
    }
    for (const BasisRef& x : sv.all_refs())
        for (const BasisRef& y : sv.all_refs()) {
            GradedElement lhs = f.map.apply(f.source.bracket_basis(x, y));
            GradedElement rhs =
                f.target.bracket(f.map.apply(GradedElement::basis(sv, x)),
                                 f.map.apply(GradedElement::basis(sv, y)));
            lhs.add_scaled(Rational(-1), rhs);
            if (!lhs.is_zero()) report.add("BracketViolation", {sv.label(x), sv.label(y)});
        }
    return report;
}

/// Matrix of H^n(f) in the canonical representative bases.
inline Matrix induced_map_on_H(const DglaMorphism& f, int n) {
    if (!validate_morphism(f).ok()) throw InvalidMorphism("induced_map_on_H: invalid morphism");
    Cohomology hs = cohomology(f.source, n);
    Cohomology ht = cohomology(f.target, n);
    Matrix m(ht.dim, hs.dim);
    if (hs.dim == 0 || f.target.space().dim(n) == 0) return m;
    // columns: [target representatives | target coboundary basis]
    std::vector<Vec> cols = ht.representatives;
    for (const Vec& b : ht.coboundaries.basis()) cols.push_back(b);
    Matrix basis_matrix = Matrix::from_columns(cols);
    for (std::size_t j = 0; j < hs.dim; ++j) {
        Vec image = f.map.apply(n, hs.representatives[j]);
        auto coords = solve(basis_matrix, image);
        if (!coords) throw std::logic_error("induced_map_on_H: image is not a cocycle class");
        for (std::size_t i = 0; i < ht.dim; ++i) m(i, j) = (*coords)[i];
    }
    return m;
}

struct DegreeWindow {
    int lo = 0;
    int hi = 0;
};

/// True in degree n iff H^n(f) is invertible.
inline std::map<int, bool> quasi_iso_check(const DglaMorphism& f, const DegreeWindow& w) {
    if (!validate_morphism(f).ok()) throw InvalidMorphism("quasi_iso_check: invalid morphism");
    std::map<int, bool> out;
    for (int n = w.lo; n <= w.hi; ++n) {
        std::size_t hs = cohomology(f.source, n).dim;
        std::size_t ht = cohomology(f.target, n).dim;
        Matrix m = induced_map_on_H(f, n);
        out[n] = (hs == ht) && rank(m) == hs;
    }
    return out;
}

}  // namespace deform
