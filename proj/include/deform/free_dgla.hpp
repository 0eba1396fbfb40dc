#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deform/dgla.hpp"

namespace deform {

/// Truncation window for free constructions.  Length truncation is the
/// quotient by the ideal of longer words, so the truncated structure is a
/// genuine dgla.  A degree cap is likewise a quotient when no generator has
/// negative degree; it is rejected otherwise.
struct FreeWindow {
    std::size_t max_word_length = 3;
    std::optional<int> max_degree;
};

/// Free graded Lie algebra on named generators, realized inside the tensor
/// algebra and cut to a window.  The basis consists of standard bracketings
/// of Lyndon words plus the squares [u,u] of odd-degree Lyndon elements;
/// independence and spanning are verified by exact rank computations at
/// build time.  A differential may be prescribed on generators (values are
/// combinations of basis words) and is extended as a derivation.
class FreeDgla {
    using Word = std::vector<std::size_t>;
    using Tensor = std::map<Word, Rational>;

public:
    FreeDgla(std::vector<std::pair<std::string, int>> generators, FreeWindow window)
        : gens_(std::move(generators)), window_(window) {
        if (window_.max_degree)
            for (const auto& [label, deg] : gens_)
                if (deg < 0)
                    throw std::invalid_argument(
                        "FreeDgla: a degree cap is not a quotient with negative-degree "
                        "generators; drop the cap or the generator");
        build_basis();
    }

    const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }
    const FreeWindow& window() const { return window_; }
    const GradedVectorSpace& space() const { return space_; }

    bool is_generator(const std::string& label) const {
        for (const auto& [l, d] : gens_)
            if (l == label) return true;
        return false;
    }

    /// Differential on one generator as a combination of basis labels; must
    /// be called before build().  Raises the degree by one.
    void set_generator_differential(const std::string& gen,
                                    const std::vector<std::pair<std::string, Rational>>& value) {
        std::size_t gi = gen_index(gen);
        Tensor t;
        int expected = gens_[gi].second + 1;
        for (const auto& [label, c] : value) {
            std::size_t bi = basis_index(label);
            if (basis_[bi].degree != expected)
                throw std::invalid_argument("FreeDgla: differential of " + gen +
                                            " must be homogeneous of degree " +
                                            std::to_string(expected));
            add_scaled(t, c, basis_[bi].tensor);
        }
        gen_d_[gi] = std::move(t);
    }

    /// Assembles the dgla: structure constants by exact coordinates in the
    /// Lyndon basis, differential extended as a derivation.
    Dgla build() const {
        Dgla g(space_);

        std::map<int, std::vector<std::size_t>> by_degree;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            by_degree[basis_[i].degree].push_back(i);

        std::map<int, Matrix> basis_matrix;  // tensor coordinates per degree
        std::map<int, std::map<Word, std::size_t>> word_index;
        for (const auto& [deg, idxs] : by_degree) {
            std::map<Word, std::size_t>& wi = word_index[deg];
            for (std::size_t i : idxs)
                for (const auto& [w, c] : basis_[i].tensor)
                    if (!wi.count(w)) {
                        std::size_t n = wi.size();
                        wi[w] = n;
                    }
            Matrix m(wi.size(), idxs.size());
            for (std::size_t col = 0; col < idxs.size(); ++col)
                for (const auto& [w, c] : basis_[idxs[col]].tensor) m(wi.at(w), col) = c;
            basis_matrix[deg] = std::move(m);
        }

        auto to_coords = [&](const Tensor& t, int deg) -> Vec {
            auto mit = basis_matrix.find(deg);
            if (mit == basis_matrix.end()) {
                if (!t.empty()) throw std::logic_error("FreeDgla: element outside basis span");
                return Vec{};
            }
            const auto& wi = word_index.at(deg);
            Vec rhs = zero_vec(mit->second.rows());
            for (const auto& [w, c] : t) {
                auto it = wi.find(w);
                if (it == wi.end()) throw std::logic_error("FreeDgla: element outside basis span");
                rhs[it->second] = c;
            }
            auto x = solve(mit->second, rhs);
            if (!x) throw std::logic_error("FreeDgla: element outside basis span");
            return *x;
        };

        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (basis_[i].length + basis_[j].length > window_.max_word_length) continue;
                int deg = basis_[i].degree + basis_[j].degree;
                if (window_.max_degree && deg > *window_.max_degree) continue;
                Tensor br = commutator(basis_[i].tensor, basis_[i].degree, basis_[j].tensor,
                                       basis_[j].degree);
                if (br.empty()) continue;
                Vec coords = to_coords(br, deg);
                std::vector<std::pair<std::string, Rational>> terms;
                const auto& idxs = by_degree.at(deg);
                for (std::size_t k = 0; k < coords.size(); ++k)
                    if (!coords[k].is_zero())
                        terms.emplace_back(basis_[idxs[k]].label, coords[k]);
                if (!terms.empty()) g.set_bracket(basis_[i].label, basis_[j].label, terms);
            }

        bool any_d = false;
        for (const auto& [gi, t] : gen_d_) any_d = any_d || !t.empty();
        if (any_d) {
            for (const auto& [deg, idxs] : by_degree) {
                Matrix block(space_.dim(deg + 1), space_.dim(deg));
                for (std::size_t col = 0; col < idxs.size(); ++col) {
                    Tensor dt = derive(basis_[idxs[col]].tensor);
                    if (dt.empty()) continue;
                    Vec coords = to_coords(dt, deg + 1);
                    const auto& tidx = by_degree.at(deg + 1);
                    for (std::size_t k = 0; k < coords.size(); ++k)
                        if (!coords[k].is_zero())
                            block(space_.find(basis_[tidx[k]].label).pos, col) = coords[k];
                }
                if (!block.is_zero()) g.set_differential_block(deg, std::move(block));
            }
        }
        return g;
    }

private:
    struct BasisElement {
        std::string label;
        int degree = 0;
        std::size_t length = 0;
        Tensor tensor;
    };

    std::size_t gen_index(const std::string& label) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].first == label) return i;
        throw std::out_of_range("FreeDgla: unknown generator '" + label + "'");
    }

    std::size_t basis_index(const std::string& label) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].label == label) return i;
        throw std::out_of_range("FreeDgla: unknown basis word '" + label + "'");
    }

    int word_degree(const Word& w) const {
        int d = 0;
        for (std::size_t i : w) d += gens_[i].second;
        return d;
    }

    static void add_scaled(Tensor& into, const Rational& c, const Tensor& t) {
        for (const auto& [w, x] : t) {
            Rational v = into.count(w) ? into[w] + c * x : c * x;
            if (v.is_zero())
                into.erase(w);
            else
                into[w] = v;
        }
    }

    /// Concatenation product, dropping words beyond the length window.
    Tensor concat(const Tensor& a, const Tensor& b) const {
        Tensor out;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                if (wa.size() + wb.size() > window_.max_word_length) continue;
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                Rational v = (out.count(w) ? out[w] : Rational(0)) + ca * cb;
                if (v.is_zero())
                    out.erase(w);
                else
                    out[w] = v;
            }
        return out;
    }

    Tensor commutator(const Tensor& a, int deg_a, const Tensor& b, int deg_b) const {
        Tensor out = concat(a, b);
        Rational s = (deg_a * deg_b) % 2 == 0 ? Rational(-1) : Rational(1);
        Tensor ba = concat(b, a);
        add_scaled(out, s, ba);
        return out;
    }

    /// Derivation extending the generator differentials to tensor words.
    Tensor derive(const Tensor& t) const {
        Tensor out;
        for (const auto& [w, c] : t) {
            int prefix_deg = 0;
            for (std::size_t k = 0; k < w.size(); ++k) {
                auto dit = gen_d_.find(w[k]);
                if (dit != gen_d_.end() && !dit->second.empty()) {
                    Rational sign = prefix_deg % 2 == 0 ? c : -c;
                    for (const auto& [dw, dc] : dit->second) {
                        Word nw;
                        nw.reserve(w.size() - 1 + dw.size());
                        nw.insert(nw.end(), w.begin(), w.begin() + k);
                        nw.insert(nw.end(), dw.begin(), dw.end());
                        nw.insert(nw.end(), w.begin() + k + 1, w.end());
                        if (nw.size() > window_.max_word_length) continue;
                        Rational v = (out.count(nw) ? out[nw] : Rational(0)) + sign * dc;
                        if (v.is_zero())
                            out.erase(nw);
                        else
                            out[nw] = v;
                    }
                }
                prefix_deg += gens_[w[k]].second;
            }
        }
        return out;
    }

    bool is_lyndon(const Word& w) const {
        for (std::size_t s = 1; s < w.size(); ++s) {
            Word suffix(w.begin() + s, w.end());
            if (!(w < suffix)) return false;
        }
        return true;
    }

    /// Standard factorization: split before the lexicographically smallest
    /// proper suffix; both halves are Lyndon.
    std::pair<Word, Word> standard_factorization(const Word& w) const {
        std::size_t best = 1;
        Word best_suffix(w.begin() + 1, w.end());
        for (std::size_t s = 2; s < w.size(); ++s) {
            Word suffix(w.begin() + s, w.end());
            if (suffix < best_suffix) {
                best = s;
                best_suffix = std::move(suffix);
            }
        }
        return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
    }

    Tensor bracketing(const Word& w) const {
        if (w.size() == 1) return Tensor{{w, Rational(1)}};
        auto [u, v] = standard_factorization(w);
        return commutator(bracketing(u), word_degree(u), bracketing(v), word_degree(v));
    }

    std::string word_label(const Word& w) const {
        if (w.size() == 1) return gens_[w[0]].first;
        auto [u, v] = standard_factorization(w);
        return "[" + word_label(u) + "," + word_label(v) + "]";
    }

    void build_basis() {
        std::map<std::pair<std::size_t, int>, std::vector<Tensor>> left_normed;
        std::vector<std::vector<Word>> words_by_length(window_.max_word_length + 1);
        if (!gens_.empty()) {
            for (std::size_t i = 0; i < gens_.size(); ++i) words_by_length[1].push_back({i});
            for (std::size_t len = 2; len <= window_.max_word_length; ++len)
                for (const Word& w : words_by_length[len - 1])
                    for (std::size_t i = 0; i < gens_.size(); ++i) {
                        Word nw = w;
                        nw.push_back(i);
                        words_by_length[len].push_back(nw);
                    }
        }

        // true dimensions per (length, degree): rank of the left-normed spans
        std::map<std::pair<std::size_t, int>, std::size_t> true_dim;
        {
            std::map<std::pair<std::size_t, int>, std::vector<Tensor>> spans;
            for (std::size_t len = 1; len <= window_.max_word_length; ++len)
                for (const Word& w : words_by_length[len]) {
                    int deg = word_degree(w);
                    if (window_.max_degree && deg > *window_.max_degree) continue;
                    // left-normed bracketing [g_{w_0}, [g_{w_1}, [...]]]
                    Tensor t{{Word{w.back()}, Rational(1)}};
                    int tdeg = gens_[w.back()].second;
                    for (std::size_t k = w.size() - 1; k-- > 0;) {
                        t = commutator(Tensor{{Word{w[k]}, Rational(1)}}, gens_[w[k]].second, t,
                                       tdeg);
                        tdeg += gens_[w[k]].second;
                    }
                    if (!t.empty()) spans[{len, deg}].push_back(std::move(t));
                }
            for (const auto& [key, tensors] : spans) true_dim[key] = tensor_rank(tensors);
        }

        // candidates: Lyndon bracketings, then odd squares, in (length, word) order
        struct Candidate {
            std::size_t length;
            Word sort_key;
            bool square;
            Word base;
        };
        std::vector<Candidate> candidates;
        for (std::size_t len = 1; len <= window_.max_word_length; ++len)
            for (const Word& w : words_by_length[len]) {
                if (!is_lyndon(w)) continue;
                int deg = word_degree(w);
                if (!(window_.max_degree && deg > *window_.max_degree))
                    candidates.push_back({len, w, false, w});
                if (deg % 2 != 0 && 2 * len <= window_.max_word_length &&
                    !(window_.max_degree && 2 * deg > *window_.max_degree)) {
                    Word key = w;
                    key.insert(key.end(), w.begin(), w.end());
                    candidates.push_back({2 * len, key, true, w});
                }
            }
        std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
            if (a.length != b.length) return a.length < b.length;
            if (a.sort_key != b.sort_key) return a.sort_key < b.sort_key;
            return a.square < b.square;
        });

        std::map<std::pair<std::size_t, int>, std::vector<Tensor>> accepted;
        for (const Candidate& c : candidates) {
            Tensor t;
            std::string label;
            if (c.square) {
                Tensor base = bracketing(c.base);
                int bd = word_degree(c.base);
                t = commutator(base, bd, base, bd);
                label = "[" + word_label(c.base) + "," + word_label(c.base) + "]";
            } else {
                t = bracketing(c.base);
                label = word_label(c.base);
            }
            if (t.empty()) continue;
            int deg = c.square ? 2 * word_degree(c.base) : word_degree(c.base);
            auto& bucket = accepted[{c.length, deg}];
            bucket.push_back(t);
            if (tensor_rank(bucket) != bucket.size()) {
                bucket.pop_back();
                continue;
            }
            basis_.push_back({label, deg, c.length, std::move(t)});
        }

        for (const auto& [key, dim] : true_dim) {
            std::size_t got = accepted.count(key) ? accepted.at(key).size() : 0;
            if (got != dim)
                throw std::logic_error(
                    "FreeDgla: Lyndon basis does not match the left-normed span at length " +
                    std::to_string(key.first) + ", degree " + std::to_string(key.second));
        }

        std::sort(basis_.begin(), basis_.end(), [](const BasisElement& a, const BasisElement& b) {
            if (a.degree != b.degree) return a.degree < b.degree;
            if (a.length != b.length) return a.length < b.length;
            return a.label < b.label;
        });
        for (const BasisElement& b : basis_) space_.add_basis(b.label, b.degree);
    }

    static std::size_t tensor_rank(const std::vector<Tensor>& tensors) {
        std::map<Word, std::size_t> wi;
        for (const Tensor& t : tensors)
            for (const auto& [w, c] : t)
                if (!wi.count(w)) {
                    std::size_t n = wi.size();
                    wi[w] = n;
                }
        Matrix m(tensors.size(), wi.size());
        for (std::size_t i = 0; i < tensors.size(); ++i)
            for (const auto& [w, c] : tensors[i]) m(i, wi.at(w)) = c;
        return rank(m);
    }

    std::vector<std::pair<std::string, int>> gens_;
    FreeWindow window_;
    std::vector<BasisElement> basis_;
    GradedVectorSpace space_;
    std::map<std::size_t, Tensor> gen_d_;
};

/// Free dgla on the basis of V; if a differential on V is supplied it is
/// extended as a derivation.
inline FreeDgla free_dgla(const GradedVectorSpace& v, const FreeWindow& window) {
    std::vector<std::pair<std::string, int>> gens;
    for (int d : v.degrees())
        for (const std::string& label : v.labels(d)) gens.emplace_back(label, d);
    return FreeDgla(std::move(gens), window);
}

inline FreeDgla free_dgla(const GradedVectorSpace& v, const GradedMap& d_on_v,
                          const FreeWindow& window) {
    FreeDgla f = free_dgla(v, window);
    for (int n : v.degrees()) {
        Matrix block = d_on_v.block(n);
        for (std::size_t j = 0; j < v.dim(n); ++j) {
            std::vector<std::pair<std::string, Rational>> value;
            for (std::size_t i = 0; i < v.dim(n + 1); ++i)
                if (!block(i, j).is_zero())
                    value.emplace_back(v.labels(n + 1)[i], block(i, j));
            if (!value.empty()) f.set_generator_differential(v.labels(n)[j], value);
        }
    }
    return f;
}

}  // namespace deform
