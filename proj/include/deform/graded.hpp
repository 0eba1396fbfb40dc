#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "deform/linalg.hpp"

namespace deform {

/// Position of a basis element: its degree and its index inside that
/// degree's component.
struct BasisRef {
    int degree = 0;
    std::size_t pos = 0;

    friend bool operator==(const BasisRef& a, const BasisRef& b) {
        return a.degree == b.degree && a.pos == b.pos;
    }
    friend bool operator!=(const BasisRef& a, const BasisRef& b) { return !(a == b); }
    friend bool operator<(const BasisRef& a, const BasisRef& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.pos < b.pos;
    }
};

/// Finite-support integer-graded vector space with named bases.  Labels are
/// unique across all degrees so reports can name elements unambiguously.
class GradedVectorSpace {
public:
    GradedVectorSpace() = default;

    explicit GradedVectorSpace(const std::vector<std::pair<std::string, int>>& basis) {
        for (const auto& [label, degree] : basis) add_basis(label, degree);
    }

    void add_basis(const std::string& label, int degree) {
        if (index_.count(label))
            throw std::invalid_argument("GradedVectorSpace: duplicate label '" + label + "'");
        auto& comp = components_[degree];
        index_[label] = BasisRef{degree, comp.size()};
        comp.push_back(label);
    }

    std::size_t dim(int degree) const {
        auto it = components_.find(degree);
        return it == components_.end() ? 0 : it->second.size();
    }

    std::size_t total_dim() const {
        std::size_t n = 0;
        for (const auto& [d, c] : components_) n += c.size();
        return n;
    }

    const std::vector<std::string>& labels(int degree) const {
        static const std::vector<std::string> empty;
        auto it = components_.find(degree);
        return it == components_.end() ? empty : it->second;
    }

    const std::string& label(const BasisRef& ref) const {
        auto it = components_.find(ref.degree);
        if (it == components_.end() || ref.pos >= it->second.size())
            throw std::out_of_range("GradedVectorSpace: bad basis ref");
        return it->second[ref.pos];
    }

    bool has_label(const std::string& label) const { return index_.count(label) != 0; }

    BasisRef find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end())
            throw std::out_of_range("GradedVectorSpace: unknown label '" + label + "'");
        return it->second;
    }

    /// Sorted list of degrees with a nonzero component.
    std::vector<int> degrees() const {
        std::vector<int> ds;
        for (const auto& [d, c] : components_)
            if (!c.empty()) ds.push_back(d);
        return ds;
    }

    int min_degree() const {
        auto ds = degrees();
        if (ds.empty()) throw std::logic_error("GradedVectorSpace: empty space has no degrees");
        return ds.front();
    }
    int max_degree() const {
        auto ds = degrees();
        if (ds.empty()) throw std::logic_error("GradedVectorSpace: empty space has no degrees");
        return ds.back();
    }
    bool empty() const { return total_dim() == 0; }

    /// All basis refs in (degree, position) order.
    std::vector<BasisRef> all_refs() const {
        std::vector<BasisRef> refs;
        for (const auto& [d, c] : components_)
            for (std::size_t i = 0; i < c.size(); ++i) refs.push_back(BasisRef{d, i});
        return refs;
    }

    friend bool operator==(const GradedVectorSpace& a, const GradedVectorSpace& b) {
        return a.components_ == b.components_;
    }
    friend bool operator!=(const GradedVectorSpace& a, const GradedVectorSpace& b) {
        return !(a == b);
    }

private:
    std::map<int, std::vector<std::string>> components_;
    std::map<std::string, BasisRef> index_;
};

/// Element of a graded vector space as homogeneous coordinate vectors.
/// Missing degrees are zero.
struct GradedElement {
    std::map<int, Vec> comps;

    static GradedElement zero() { return {}; }

    static GradedElement basis(const GradedVectorSpace& v, const BasisRef& ref) {
        GradedElement e;
        Vec c = zero_vec(v.dim(ref.degree));
        c[ref.pos] = Rational(1);
        e.comps[ref.degree] = std::move(c);
        return e;
    }

    Vec component(int degree, const GradedVectorSpace& v) const {
        auto it = comps.find(degree);
        return it == comps.end() ? zero_vec(v.dim(degree)) : it->second;
    }

    bool is_zero() const {
        for (const auto& [d, c] : comps)
            if (!deform::is_zero(c)) return false;
        return true;
    }

    GradedElement& add(int degree, const Vec& coords) {
        auto it = comps.find(degree);
        if (it == comps.end())
            comps[degree] = coords;
        else
            it->second = it->second + coords;
        return *this;
    }

    GradedElement& add_scaled(const Rational& c, const GradedElement& other) {
        for (const auto& [d, v] : other.comps) add(d, c * v);
        return *this;
    }
};

/// Degree-homogeneous linear map between graded spaces, stored blockwise.
/// A missing block is the zero map.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(GradedVectorSpace source, GradedVectorSpace target, int degree)
        : source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

    static GradedMap identity(const GradedVectorSpace& v) {
        GradedMap f(v, v, 0);
        for (int d : v.degrees()) f.set_block(d, Matrix::identity(v.dim(d)));
        return f;
    }

    static GradedMap zero(const GradedVectorSpace& source, const GradedVectorSpace& target,
                          int degree) {
        return GradedMap(source, target, degree);
    }

    const GradedVectorSpace& source() const { return source_; }
    const GradedVectorSpace& target() const { return target_; }
    int degree() const { return degree_; }

    void set_block(int source_degree, Matrix block) {
        std::size_t rows = target_.dim(source_degree + degree_);
        std::size_t cols = source_.dim(source_degree);
        if (block.rows() != rows || block.cols() != cols)
            throw std::invalid_argument("GradedMap: block shape mismatch at degree " +
                                        std::to_string(source_degree));
        if (block.is_zero())
            blocks_.erase(source_degree);
        else
            blocks_[source_degree] = std::move(block);
    }

    Matrix block(int source_degree) const {
        auto it = blocks_.find(source_degree);
        if (it != blocks_.end()) return it->second;
        return Matrix(target_.dim(source_degree + degree_), source_.dim(source_degree));
    }

    Vec apply(int source_degree, const Vec& coords) const {
        return block(source_degree).apply(coords);
    }

    GradedElement apply(const GradedElement& e) const {
        GradedElement out;
        for (const auto& [d, c] : e.comps) {
            if (target_.dim(d + degree_) == 0) continue;
            Vec image = apply(d, c);
            if (!deform::is_zero(image)) out.add(d + degree_, image);
        }
        return out;
    }

    /// this after other (degrees add).
    GradedMap compose(const GradedMap& other) const {
        GradedMap f(other.source_, target_, degree_ + other.degree_);
        for (int d : other.source_.degrees()) {
            Matrix m = block(d + other.degree_) * other.block(d);
            if (!m.is_zero()) f.set_block(d, std::move(m));
        }
        return f;
    }

    friend bool operator==(const GradedMap& a, const GradedMap& b) {
        if (a.source_ != b.source_ || a.target_ != b.target_ || a.degree_ != b.degree_)
            return false;
        std::set<int> degs;
        for (const auto& [d, m] : a.blocks_) degs.insert(d);
        for (const auto& [d, m] : b.blocks_) degs.insert(d);
        for (int d : degs)
            if (a.block(d) != b.block(d)) return false;
        return true;
    }

private:
    GradedVectorSpace source_, target_;
    int degree_ = 0;
    std::map<int, Matrix> blocks_;
};

/// (V[n])^i = V^{n+i}: a basis element of degree d moves to degree d - n,
/// so k in degree 0 shifted by n lands in degree -n.
inline GradedVectorSpace shift(const GradedVectorSpace& v, int n) {
    GradedVectorSpace out;
    for (int d : v.degrees())
        for (const std::string& label : v.labels(d)) out.add_basis(label, d - n);
    return out;
}

/// (V^dual)^i has the basis dual to V^{-i}; dual labels get a "^" suffix.
inline GradedVectorSpace dual(const GradedVectorSpace& v) {
    GradedVectorSpace out;
    std::vector<int> ds = v.degrees();
    for (auto it = ds.rbegin(); it != ds.rend(); ++it)
        for (const std::string& label : v.labels(*it)) out.add_basis(label + "^", -*it);
    return out;
}

/// (V (x) W)^n = sum over p of V^p (x) W^{n-p}, basis ordered V-factor major
/// within each p, p ascending.
inline GradedVectorSpace tensor(const GradedVectorSpace& v, const GradedVectorSpace& w) {
    GradedVectorSpace out;
    std::set<int> total_degrees;
    for (int p : v.degrees())
        for (int q : w.degrees()) total_degrees.insert(p + q);
    for (int n : total_degrees)
        for (int p : v.degrees()) {
            int q = n - p;
            if (w.dim(q) == 0) continue;
            for (const std::string& a : v.labels(p))
                for (const std::string& b : w.labels(q)) out.add_basis(a + "*" + b, n);
        }
    return out;
}

/// v (x) w -> (-1)^{|v||w|} w (x) v on homogeneous basis elements.
inline GradedMap koszul_swap(const GradedVectorSpace& v, const GradedVectorSpace& w) {
    GradedVectorSpace vw = tensor(v, w);
    GradedVectorSpace wv = tensor(w, v);
    GradedMap f(vw, wv, 0);
    for (int n : vw.degrees()) {
        Matrix m(wv.dim(n), vw.dim(n));
        const auto& src_labels = vw.labels(n);
        for (int p : v.degrees()) {
            int q = n - p;
            if (w.dim(q) == 0) continue;
            for (const std::string& a : v.labels(p))
                for (const std::string& b : w.labels(q)) {
                    std::size_t src = static_cast<std::size_t>(
                        std::find(src_labels.begin(), src_labels.end(), a + "*" + b) -
                        src_labels.begin());
                    std::size_t dst = wv.find(b + "*" + a).pos;
                    m(dst, src) = (p * q) % 2 == 0 ? Rational(1) : Rational(-1);
                }
        }
        f.set_block(n, std::move(m));
    }
    return f;
}

}  // namespace deform
