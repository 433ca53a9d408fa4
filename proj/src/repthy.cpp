#include "expoweyl/repthy.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace expoweyl {

void Character::add(const FieldScalar& weight, long long dim) {
    if (dim == 0) return;
    for (auto it = entries_.begin(); it != entries_.end(); ++it)
        if (it->first == weight) {
            it->second += dim;
            if (it->second == 0) entries_.erase(it);
            return;
        }
    entries_.emplace_back(weight, dim);
}

long long Character::dim(const FieldScalar& weight) const {
    for (const auto& [w, d] : entries_)
        if (w == weight) return d;
    return 0;
}

long long Character::total() const {
    long long t = 0;
    for (const auto& [w, d] : entries_) t += d;
    return t;
}

bool Character::operator==(const Character& o) const {
    if (entries_.size() != o.entries_.size()) return false;
    for (const auto& [w, d] : entries_)
        if (o.dim(w) != d) return false;
    return true;
}

namespace {

std::size_t leading_index(const LatticeVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

} // namespace

NegativePart::NegativePart(std::vector<LatticeVector> g) : gens(std::move(g)) {
    if (gens.empty()) throw std::invalid_argument("NegativePart: no generators");
    const std::size_t dim = gens[0].size();
    for (const auto& v : gens) {
        if (v.size() != dim) throw std::invalid_argument("NegativePart: dimension mismatch");
        std::size_t j = leading_index(v);
        if (j == v.size() || v[j] >= 0)
            throw std::invalid_argument(
                "NegativePart: generators must be lexicographically negative");
    }
    // sorted by leading index, so every suffix of the generator list only
    // touches a suffix of the coordinates
    std::sort(gens.begin(), gens.end(), [](const LatticeVector& a, const LatticeVector& b) {
        return leading_index(a) < leading_index(b);
    });
}

namespace {

long long count_multisets(const NegativePart& neg, std::size_t idx, const LatticeVector& r,
                          std::map<std::pair<std::size_t, LatticeVector>, long long>& memo) {
    if (lattice_is_zero(r)) return 1; // only the empty tail sums to zero
    if (idx == neg.gens.size()) return 0;
    auto key = std::make_pair(idx, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const LatticeVector& g = neg.gens[idx];
    const std::size_t j = leading_index(g);
    // generators from idx on vanish before coordinate j
    for (std::size_t m = 0; m < j; ++m)
        if (r[m] != 0) return memo[key] = 0;
    if (r[j] > 0) return memo[key] = 0;
    long long kmax = r[j] / g[j]; // both nonpositive/negative
    long long total = 0;
    LatticeVector rem = r;
    for (long long k = 0; k <= kmax; ++k) {
        total += count_multisets(neg, idx + 1, rem, memo);
        for (std::size_t m = 0; m < rem.size(); ++m) rem[m] -= g[m];
    }
    return memo[key] = total;
}

// positive weights making every generator strictly negative: a lex-negative
// vector stays negative under w when each w[i] dominates the tail
std::vector<long long> lex_weights(const NegativePart& neg) {
    const std::size_t d = neg.gens[0].size();
    long long maxabs = 1;
    for (const auto& g : neg.gens)
        for (long long c : g) maxabs = std::max(maxabs, std::llabs(c));
    std::vector<long long> w(d);
    long long tail = 0;
    for (std::size_t i = d; i-- > 0;) {
        w[i] = 1 + maxabs * tail;
        tail += w[i];
    }
    return w;
}

long long weigh(const std::vector<long long>& w, const LatticeVector& v) {
    long long s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * v[i];
    return s;
}

long long count_tuples(const NegativePart& neg, const std::vector<long long>& w,
                       const LatticeVector& r, std::map<LatticeVector, long long>& memo) {
    if (lattice_is_zero(r)) return 1;
    // nonempty sums of generators have strictly negative weight
    if (weigh(w, r) >= 0) return 0;
    if (auto it = memo.find(r); it != memo.end()) return it->second;
    // any nonempty tuple ends in some generator
    long long total = 0;
    LatticeVector prev(r.size());
    for (const auto& g : neg.gens) {
        for (std::size_t m = 0; m < r.size(); ++m) prev[m] = r[m] - g[m];
        total += count_tuples(neg, w, prev, memo);
    }
    return memo[r] = total;
}

} // namespace

long long verma_weight_dim(const NegativePart& neg, const LatticeVector& n, bool ordered) {
    if (n.size() != neg.gens[0].size())
        throw std::invalid_argument("verma_weight_dim: dimension mismatch");
    if (ordered) {
        std::map<LatticeVector, long long> memo;
        return count_tuples(neg, lex_weights(neg), n, memo);
    }
    std::map<std::pair<std::size_t, LatticeVector>, long long> memo;
    return count_multisets(neg, 0, n, memo);
}

FieldScalar verma_action_rank1(const FieldScalar& lambda, long long n) {
    if (n < 0) throw std::invalid_argument("verma_action_rank1: negative depth");
    return lambda - FieldScalar(lambda.table(), Rational(n));
}

Character bgg_character(const SymbolTablePtr& tab, long long n, int depth) {
    if (n < 0) throw std::invalid_argument("bgg_character: highest weight must be >= 0");
    if (depth <= 0) throw std::invalid_argument("bgg_character: depth must be positive");
    NegativePart neg(std::vector<LatticeVector>{{-1}});
    Character ch;
    for (int k = 0; k <= depth; ++k) {
        // weight mu = n - k in D(n), depth below -n-2 in the second Verma
        long long top = verma_weight_dim(neg, {-static_cast<long long>(k)});
        long long sub_depth = -n - 2 - (n - k);
        long long sub = sub_depth >= 0 ? verma_weight_dim(neg, {-sub_depth}) : 0;
        ch.add(FieldScalar(tab, Rational(n - k)), top - sub);
    }
    return ch;
}

Character duality_on_characters(const Character& ch) {
    Character r;
    for (const auto& [w, d] : ch.entries()) r.add(-w, d);
    return r;
}

SupportType classify_support(const RingConfigPtr& cfg, const FieldScalar& chi_x) {
    const auto& tab = *cfg->table;
    // symbols generating the embedding subfield
    std::vector<bool> in_embed(tab.size(), false);
    for (const auto& s : cfg->basis.embed)
        for (std::size_t i = 0; i < tab.size(); ++i)
            if (s.uses_symbol(i))
                in_embed[i] = true;
    for (std::size_t i = 0; i < tab.size(); ++i) {
        if (!chi_x.uses_symbol(i)) continue;
        if (!tab.at(i).algebraic()) return SupportType::dense;
        if (!in_embed[i]) return SupportType::dense;
    }
    return SupportType::discrete;
}

std::pair<FieldScalar, FieldScalar> discrete_module_action(long long n, long long k,
                                                           const FieldScalar& q_char) {
    if (q_char.is_zero())
        throw std::invalid_argument("discrete_module_action: character value must be nonzero");
    return {FieldScalar(q_char.table(), Rational(n + k)), q_char.pow(n + k)};
}

} // namespace expoweyl
