#pragma once

// Zero-divisors in the tensor square of the cohomology ring, the explicit
// generator families certifying the zero-divisor-cup-length, and the
// topological-complexity report.
//
// H^*(X x X) is modelled as H^* (x) H^* on the critical-cell basis.  A
// tensor element is kept symbolically as a GF(2) sum of factor-list pairs
// (left generators, right generators); expansion evaluates each side through
// the ring engine and cancels equal basis pairs mod 2.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "stripcells/ring.hpp"

namespace stripcells {

using FactorList = std::vector<Generator>;  // kept sorted

namespace detail {

inline std::string factor_key(const FactorList& fs) {
    std::string key;
    for (const Generator& g : fs)
        key += std::to_string(g.first) + "," + std::to_string(g.second) + ";";
    return key;
}

struct ProductCache {
    std::unordered_map<std::string, CohClass> memo;

    const CohClass& product(const FactorList& fs, const StripParams& p, WheelOrder order) {
        std::string key = factor_key(fs);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        CohClass value = multiply_generators(fs, p, order);
        return memo.emplace(std::move(key), std::move(value)).first->second;
    }
};

} // namespace detail

struct TensorTerm {
    FactorList left, right;
};

/// GF(2) sum of left (x) right factor monomials.  Terms are kept in a
/// canonical sorted form with equal pairs cancelled.
class TensorElement {
public:
    TensorElement() = default;

    static TensorElement one() {
        TensorElement t;
        t.terms_.push_back(TensorTerm{{}, {}});
        t.rebuild_keys();
        return t;
    }

    static TensorElement from_terms(std::vector<TensorTerm> terms) {
        TensorElement t;
        t.terms_ = std::move(terms);
        for (auto& term : t.terms_) {
            std::sort(term.left.begin(), term.left.end());
            std::sort(term.right.begin(), term.right.end());
        }
        t.cancel();
        return t;
    }

    const std::vector<TensorTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    friend TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
        std::vector<TensorTerm> cross;
        cross.reserve(a.terms_.size() * b.terms_.size());
        for (const TensorTerm& x : a.terms_) {
            for (const TensorTerm& y : b.terms_) {
                TensorTerm t;
                t.left = x.left;
                t.left.insert(t.left.end(), y.left.begin(), y.left.end());
                t.right = x.right;
                t.right.insert(t.right.end(), y.right.begin(), y.right.end());
                cross.push_back(std::move(t));
            }
        }
        return from_terms(std::move(cross));
    }

private:
    void rebuild_keys() {
        keys_.clear();
        for (const TensorTerm& t : terms_)
            keys_.push_back(detail::factor_key(t.left) + "|" + detail::factor_key(t.right));
    }

    void cancel() {
        rebuild_keys();
        std::map<std::string, std::pair<TensorTerm, int>> acc;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            auto it = acc.find(keys_[i]);
            if (it == acc.end())
                acc.emplace(keys_[i], std::make_pair(terms_[i], 1));
            else
                it->second.second ^= 1;
        }
        terms_.clear();
        for (auto& [key, tp] : acc)
            if (tp.second) terms_.push_back(std::move(tp.first));
        rebuild_keys();
    }

    std::vector<TensorTerm> terms_;
    std::vector<std::string> keys_;
};

/// x (x) 1 + 1 (x) x.  Over GF(2) the two Kuenneth legs carry the same sign,
/// and the unit's zero-divisor cancels to zero.
inline TensorElement zero_divisor(const CohClass& x) {
    if (x.is_zero()) return TensorElement{};
    if (!x.factors)
        throw unsupported_product("zero-divisor needs a tracked factorization");
    return TensorElement::from_terms({TensorTerm{*x.factors, {}}, TensorTerm{{}, *x.factors}});
}

struct BasisPair {
    Symbol left, right;
};

/// Evaluates a tensor element on the critical basis: GF(2) sum of
/// (left cell, right cell) pairs, sorted by canonical text.
inline std::vector<BasisPair> expand(const TensorElement& t, const StripParams& p,
                                     WheelOrder order, detail::ProductCache* cache = nullptr) {
    detail::ProductCache local;
    detail::ProductCache& memo = cache ? *cache : local;
    std::map<std::pair<std::string, std::string>, BasisPair> acc;
    for (const TensorTerm& term : t.terms()) {
        const CohClass& lc = memo.product(term.left, p, order);
        if (lc.is_zero()) continue;
        const CohClass& rc = memo.product(term.right, p, order);
        if (rc.is_zero()) continue;
        for (const Symbol& l : lc.terms) {
            for (const Symbol& r : rc.terms) {
                auto key = std::make_pair(format_symbol(l), format_symbol(r));
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(std::move(key), BasisPair{l, r});
                else
                    acc.erase(it);  // GF(2)
            }
        }
    }
    std::vector<BasisPair> out;
    out.reserve(acc.size());
    for (auto& [key, pair] : acc) out.push_back(std::move(pair));
    return out;
}

inline std::vector<BasisPair> bidegree_component(const std::vector<BasisPair>& pairs,
                                                 int left_degree, int right_degree) {
    std::vector<BasisPair> out;
    for (const BasisPair& bp : pairs)
        if (bp.left.dimension() == left_degree && bp.right.dimension() == right_degree)
            out.push_back(bp);
    return out;
}

/// The two generator families whose zero-divisors realize the full
/// zero-divisor-cup-length when n > w.
///
/// With m = ceil(n/w) and r = n - w(m-1) in 1..w, branch i of the a-family
/// pairs the first label n-i with the w-1 (last branch: r-1) second labels
/// n-m-(w-1)i-j; the branches sweep the seconds 1..n-m exactly once.  The
/// b-family keeps the seconds and shifts each first cyclically by one inside
/// {n-m+1..n}, so paired entries differ in the first label and every group
/// of equal firsts stays below w members in each family.
struct LemmaFamilies {
    std::vector<Generator> a, b;
    int m = 0;  // ceil(n/w)
    int r = 0;  // n - w(m-1), number of labels in the last branch
};

inline LemmaFamilies lemma_families(const StripParams& p, WheelOrder order) {
    if (p.n <= p.w)
        throw std::invalid_argument(
            "the generator families need n > w; for n <= w use the report branches");
    LemmaFamilies fam;
    fam.m = p.min_blocks();
    fam.r = p.n - p.w * (fam.m - 1);

    for (int i = 0; i <= fam.m - 1; ++i) {
        int last_j = (i < fam.m - 1) ? p.w - 2 : fam.r - 2;
        for (int j = 0; j <= last_j; ++j) {
            int first_a = p.n - i;
            int second = p.n - fam.m - (p.w - 1) * i - j;
            int first_b = (first_a == p.n) ? p.n - fam.m + 1 : first_a + 1;
            fam.a.push_back(generator(first_a, second, p, order));
            fam.b.push_back(generator(first_b, second, p, order));
        }
    }

    // the counting and range facts the construction promises
    int expected = p.n - fam.m;
    if (static_cast<int>(fam.a.size()) != expected ||
        static_cast<int>(fam.b.size()) != expected)
        throw std::logic_error("family size mismatch");
    std::vector<char> seen_a(static_cast<std::size_t>(p.n) + 1, 0);
    std::vector<char> seen_b(static_cast<std::size_t>(p.n) + 1, 0);
    for (int k = 0; k < expected; ++k) {
        const Generator& ga = fam.a[static_cast<std::size_t>(k)];
        const Generator& gb = fam.b[static_cast<std::size_t>(k)];
        if (ga.second != gb.second || ga.first == gb.first)
            throw std::logic_error("paired family entries must share the second label only");
        if (ga.first <= p.n - fam.m || gb.first <= p.n - fam.m)
            throw std::logic_error("family first labels must lie in the top m labels");
        if (ga.second < 1 || ga.second > p.n - fam.m)
            throw std::logic_error("family second labels must lie in 1..n-m");
        if (seen_a[static_cast<std::size_t>(ga.second)]++ ||
            seen_b[static_cast<std::size_t>(gb.second)]++)
            throw std::logic_error("family second labels must be distinct");
    }
    return fam;
}

struct ZdclCertificate {
    int length = 0;
    std::vector<BasisPair> witness;  // the bidegree (n-m, n-m) component
};

/// Multiplies the zero-divisors of all 2(n-m) family generators and checks
/// that the product is nonzero; by the grading every term already lies in
/// bidegree (n-m, n-m), and appending one more zero-divisor kills the
/// product.  Failure of any of this is a certification error.
inline ZdclCertificate zdcl_certificate(const StripParams& p, WheelOrder order) {
    LemmaFamilies fam = lemma_families(p, order);
    std::vector<Generator> all = fam.a;
    all.insert(all.end(), fam.b.begin(), fam.b.end());

    detail::ProductCache cache;
    TensorElement product = TensorElement::one();
    for (const Generator& g : all)
        product = tensor_multiply(product, zero_divisor(generator_class(g)));

    std::vector<BasisPair> expanded = expand(product, p, order, &cache);
    int half = p.n - fam.m;
    std::vector<BasisPair> witness = bidegree_component(expanded, half, half);
    if (witness.size() != expanded.size())
        throw certification_error("zero-divisor product has terms outside the top bidegree");
    if (witness.empty())
        throw certification_error(
            "the family product of " + std::to_string(2 * half) +
            " zero-divisors vanished at (n=" + std::to_string(p.n) +
            ", w=" + std::to_string(p.w) + "); wheel order or family construction is wrong");

    for (const Generator& g : all) {
        TensorElement longer = tensor_multiply(product, zero_divisor(generator_class(g)));
        if (!expand(longer, p, order, &cache).empty())
            throw certification_error("a product of more than 2(n-m) zero-divisors "
                                      "failed to vanish");
    }
    return ZdclCertificate{2 * half, std::move(witness)};
}

struct ZdclSearchResult {
    int length = 0;      // best found
    bool complete = false;  // false when the budget ran out
};

/// Depth-first search for the longest nonzero product of zero-divisors of
/// degree-1 basis classes.  Candidates are sets of distinct pair generators
/// whose first labels never collide with second labels (the engine cannot
/// evaluate chained columns); a zero running product prunes the branch, and
/// the grading caps every product at 2(n-m) factors.  The budget bounds the
/// number of extensions evaluated.
inline ZdclSearchResult zdcl_search(const StripParams& p, WheelOrder order,
                                    long budget = 200000) {
    if (p.n <= p.w)
        throw std::invalid_argument("zero-divisor search needs n > w");
    std::vector<Generator> gens;
    for (int i = 2; i <= p.n; ++i)
        for (int j = 1; j < i; ++j) gens.push_back(generator(i, j, p, order));

    const int cap = 2 * p.top_dimension();
    detail::ProductCache cache;
    ZdclSearchResult result;
    result.complete = true;
    long nodes = 0;

    std::vector<char> first_used(static_cast<std::size_t>(p.n) + 1, 0);
    std::vector<char> second_used(static_cast<std::size_t>(p.n) + 1, 0);

    auto dfs = [&](auto&& self, std::size_t start, int depth,
                   const TensorElement& current) -> void {
        result.length = std::max(result.length, depth);
        if (depth == cap || !result.complete) return;
        for (std::size_t k = start; k < gens.size(); ++k) {
            const Generator& g = gens[k];
            if (first_used[static_cast<std::size_t>(g.second)] ||
                second_used[static_cast<std::size_t>(g.first)])
                continue;  // would chain columns; engine cannot evaluate
            if (++nodes > budget) {
                result.complete = false;
                return;
            }
            TensorElement next = tensor_multiply(current, zero_divisor(generator_class(g)));
            if (expand(next, p, order, &cache).empty()) continue;
            ++first_used[static_cast<std::size_t>(g.first)];
            ++second_used[static_cast<std::size_t>(g.second)];
            self(self, k + 1, depth + 1, next);
            --first_used[static_cast<std::size_t>(g.first)];
            --second_used[static_cast<std::size_t>(g.second)];
            if (!result.complete || result.length == cap) return;
        }
    };
    dfs(dfs, 0, 0, TensorElement::one());
    return result;
}

enum class TCBranch { contractible, planar_config, strip_theorem };

inline std::string to_string(TCBranch b) {
    switch (b) {
    case TCBranch::contractible: return "Contractible";
    case TCBranch::planar_config: return "PlanarConfig";
    case TCBranch::strip_theorem: return "StripTheorem";
    }
    return "?";
}

struct TCReport {
    int n = 0, w = 0, m = 0, dim = 0;
    int lower = 0, upper = 0;
    std::optional<int> value;
    TCBranch branch = TCBranch::strip_theorem;
    bool certified = false;
    std::optional<int> zdcl;          // certified length; 0 for a point
    std::vector<BasisPair> witness;   // empty unless certified
};

/// Topological complexity of the width-w configuration space of n disks.
///
///   n = 1:      the space is contractible and TC = 1.
///   1 < n <= w: the strip does not constrain the disks up to homotopy and
///               TC = 2n - 2, quoted from the planar configuration space.
///   n > w:      the zero-divisor certificate forces TC > 2(n - m) while the
///               complex has dimension n - m, so TC = 2n - 2m + 1 exactly.
inline TCReport tc_report(const StripParams& p, WheelOrder order) {
    TCReport rep;
    rep.n = p.n;
    rep.w = p.w;
    rep.m = p.min_blocks();
    rep.dim = p.top_dimension();

    if (p.n == 1) {
        rep.branch = TCBranch::contractible;
        rep.lower = rep.upper = 1;
        rep.value = 1;
        rep.zdcl = 0;
        return rep;
    }
    if (p.n <= p.w) {
        rep.branch = TCBranch::planar_config;
        rep.lower = rep.upper = 2 * p.n - 2;
        rep.value = 2 * p.n - 2;
        return rep;
    }
    ZdclCertificate cert = zdcl_certificate(p, order);
    rep.branch = TCBranch::strip_theorem;
    rep.zdcl = cert.length;
    rep.lower = cert.length + 1;
    rep.upper = 2 * rep.dim + 1;
    if (rep.lower != rep.upper)
        throw certification_error("certified lower bound does not meet the dimension bound");
    rep.value = rep.lower;
    rep.certified = true;
    rep.witness = std::move(cert.witness);
    return rep;
}

} // namespace stripcells
