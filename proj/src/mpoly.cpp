#include "expoweyl/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace expoweyl {

namespace {

// lex comparison restricted to transcendental coordinates
int lex_cmp_trans(const SymbolTable& tab, const MPoly::Exponents& a, const MPoly::Exponents& b) {
    for (std::size_t i = 0; i < tab.size(); ++i) {
        if (tab.at(i).algebraic()) continue;
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

bool divides_trans(const SymbolTable& tab, const MPoly::Exponents& d, const MPoly::Exponents& n) {
    for (std::size_t i = 0; i < tab.size(); ++i)
        if (!tab.at(i).algebraic() && d[i] > n[i]) return false;
    return true;
}

} // namespace

MPoly::MPoly(SymbolTablePtr tab, const Rational& c) : tab_(std::move(tab)) {
    if (!tab_) throw std::invalid_argument("MPoly: null symbol table");
    if (c != 0) terms_.emplace(Exponents(tab_->size(), 0), c);
}

MPoly MPoly::symbol(SymbolTablePtr tab, std::size_t index, int power) {
    MPoly p(tab, Rational(1));
    if (power < 0) throw std::invalid_argument("MPoly::symbol: negative power");
    if (power > 0) {
        Exponents e(tab->size(), 0);
        e[index] = power;
        p.terms_.clear();
        p.terms_.emplace(std::move(e), Rational(1));
        p.reduce_algebraic();
    }
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("MPoly: not a constant");
    return terms_.begin()->second;
}

bool MPoly::is_algebraic_only() const {
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < tab_->size(); ++i)
            if (e[i] != 0 && !tab_->at(i).algebraic()) return false;
    return true;
}

bool MPoly::uses_symbol(std::size_t index) const {
    for (const auto& [e, c] : terms_)
        if (e[index] != 0) return true;
    return false;
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (tab_ != o.tab_) throw std::invalid_argument("MPoly: symbol table mismatch");
    MPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    if (tab_ != o.tab_) throw std::invalid_argument("MPoly: symbol table mismatch");
    MPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (tab_ != o.tab_) throw std::invalid_argument("MPoly: symbol table mismatch");
    MPoly r(tab_);
    Exponents e(tab_->size(), 0);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    r.reduce_algebraic();
    return r;
}

MPoly MPoly::scaled(const Rational& c) const {
    MPoly r(tab_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, cc] : r.terms_) cc *= c;
    return r;
}

void MPoly::reduce_algebraic() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            const Exponents& e = it->first;
            for (std::size_t i = 0; i < tab_->size(); ++i) {
                const auto& s = tab_->at(i);
                if (!s.algebraic() || e[i] < s.degree()) continue;
                // theta^d = -(c_0 + c_1 theta + ... + c_{d-1} theta^{d-1})
                Exponents base = e;
                base[i] -= s.degree();
                Rational coeff = it->second;
                terms_.erase(it);
                for (int j = 0; j < s.degree(); ++j) {
                    if (s.min_poly[j] == 0) continue;
                    Exponents ne = base;
                    ne[i] += j;
                    add_term(ne, -s.min_poly[j] * coeff);
                }
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
}

int MPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

MPoly MPoly::coeff_in(std::size_t var, int k) const {
    MPoly r(tab_);
    for (const auto& [e, c] : terms_)
        if (e[var] == k) {
            Exponents ne = e;
            ne[var] = 0;
            r.add_term(ne, c);
        }
    return r;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
    MPoly r(tab_);
    // cache powers of value
    std::vector<MPoly> pow{MPoly(tab_, Rational(1))};
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(pow.size()) <= e[var]) pow.push_back(pow.back() * value);
        Exponents ne = e;
        ne[var] = 0;
        MPoly mono(tab_);
        mono.terms_.emplace(std::move(ne), c);
        r += mono * pow[e[var]];
    }
    return r;
}

MPoly MPoly::lex_leading_transcendental_coeff() const {
    if (is_zero()) return MPoly(tab_);
    // find lex-greatest transcendental exponent pattern, collect its K coefficient
    const Exponents* best = nullptr;
    for (const auto& [e, c] : terms_)
        if (!best || lex_cmp_trans(*tab_, *best, e) < 0) best = &e;
    MPoly r(tab_);
    for (const auto& [e, c] : terms_)
        if (lex_cmp_trans(*tab_, e, *best) == 0) {
            Exponents ne(tab_->size(), 0);
            for (std::size_t i = 0; i < tab_->size(); ++i)
                if (tab_->at(i).algebraic()) ne[i] = e[i];
            r.add_term(ne, c);
        }
    return r;
}

MPoly MPoly::algebraic_inverse() const {
    if (is_zero()) throw std::domain_error("MPoly: inverse of zero");
    if (!is_algebraic_only()) throw std::domain_error("MPoly: inverse of non-algebraic element");
    const auto& tab = *tab_;
    // enumerate the Q-basis of the algebraic layer
    std::vector<Exponents> basis;
    Exponents cur(tab.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == tab.size()) {
            basis.push_back(cur);
            return;
        }
        if (!tab.at(i).algebraic()) {
            rec(i + 1);
            return;
        }
        for (int k = 0; k < tab.at(i).degree(); ++k) {
            cur[i] = k;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    const std::size_t n = basis.size();
    std::map<Exponents, std::size_t> pos;
    for (std::size_t j = 0; j < n; ++j) pos.emplace(basis[j], j);

    // columns: coordinates of (*this) * basis_j; solve M z = e(1)
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        MPoly bj(tab_);
        bj.terms_.emplace(basis[j], Rational(1));
        MPoly prod = *this * bj;
        for (const auto& [e, c] : prod.terms_) M[pos.at(e)][j] = c;
    }
    M[pos.at(Exponents(tab.size(), 0))][n] = 1;

    // Gaussian elimination
    std::size_t row = 0;
    std::vector<int> pivot_col(n, -1);
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && M[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(M[p], M[row]);
        Rational inv = Rational(1) / M[row][col];
        for (auto& x : M[row]) x *= inv;
        for (std::size_t r2 = 0; r2 < n; ++r2) {
            if (r2 == row || M[r2][col] == 0) continue;
            Rational f = M[r2][col];
            for (std::size_t c2 = col; c2 <= n; ++c2) M[r2][c2] -= f * M[row][c2];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    if (row < n) {
        // singular multiplication map: element is a zero divisor
        throw std::domain_error("MPoly: algebraic layer element not invertible");
    }
    MPoly inv(tab_);
    for (std::size_t r2 = 0; r2 < n; ++r2)
        inv.add_term(basis[pivot_col[r2]], M[r2][n]);
    return inv;
}

MPoly MPoly::exact_div(const MPoly& n, const MPoly& d) {
    if (d.is_zero()) throw std::domain_error("MPoly: division by zero");
    if (d.is_constant()) return n.scaled(Rational(1) / d.constant_value());
    if (d.is_algebraic_only()) return n * d.algebraic_inverse();
    const auto& tab = *n.tab_;
    MPoly num = n, q(n.tab_);
    MPoly lcd = d.lex_leading_transcendental_coeff();
    MPoly lcd_inv = lcd.algebraic_inverse();
    // lex-leading transcendental exponent of d
    const Exponents* ed = nullptr;
    for (const auto& [e, c] : d.terms_)
        if (!ed || lex_cmp_trans(tab, *ed, e) < 0) ed = &e;
    Exponents d_lead(tab.size(), 0);
    for (std::size_t i = 0; i < tab.size(); ++i)
        if (!tab.at(i).algebraic()) d_lead[i] = (*ed)[i];

    while (!num.is_zero()) {
        const Exponents* en = nullptr;
        for (const auto& [e, c] : num.terms_)
            if (!en || lex_cmp_trans(tab, *en, e) < 0) en = &e;
        if (!divides_trans(tab, d_lead, *en))
            throw std::domain_error("MPoly: inexact division");
        MPoly cn = num.lex_leading_transcendental_coeff();
        MPoly qt = cn * lcd_inv;
        Exponents shift(tab.size(), 0);
        for (std::size_t i = 0; i < tab.size(); ++i)
            if (!tab.at(i).algebraic()) shift[i] = (*en)[i] - d_lead[i];
        MPoly mono(n.tab_);
        mono.terms_.emplace(shift, Rational(1));
        MPoly term = qt * mono;
        q += term;
        num -= term * d;
    }
    return q;
}

namespace {

// content of p viewed as univariate in var: gcd of its coefficients
MPoly content_in(const MPoly& p, std::size_t var);

MPoly pseudo_rem(MPoly a, const MPoly& b, std::size_t var) {
    int db = b.degree_in(var);
    MPoly lb = b.coeff_in(var, db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        int da = a.degree_in(var);
        MPoly la = a.coeff_in(var, da);
        MPoly xs = MPoly::symbol(a.table(), var, da - db);
        a = a * lb - b * la * xs;
        // degree in var strictly decreased
    }
    return a;
}

// index of the single transcendental variable of p, provided p involves no
// algebraic symbols and exactly one variable; tab.size() otherwise
std::size_t sole_transcendental_var(const MPoly& p) {
    const auto& tab = *p.table();
    std::size_t var = tab.size();
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (e[i] == 0) continue;
            if (tab.at(i).algebraic()) return tab.size();
            if (var == tab.size())
                var = i;
            else if (var != i)
                return tab.size();
        }
    return var;
}

// dense univariate polynomials over Q, lowest degree first, no trailing zeros
using UPoly = std::vector<Rational>;

void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly upoly_rem(UPoly a, const UPoly& b) {
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        upoly_trim(a);
    }
    return a;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        a = upoly_rem(std::move(a), b);
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        Rational inv = Rational(1) / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

// gcd when u is univariate in var over Q: the gcd lies in Q[var], so it is the
// univariate gcd of u with the Q[var]-coefficients of p grouped by the
// monomials in the remaining symbols
MPoly gcd_with_univariate(const MPoly& u, const MPoly& p, std::size_t var) {
    auto tab = u.table();
    UPoly g;
    for (const auto& [e, c] : u.terms()) {
        if (g.size() <= static_cast<std::size_t>(e[var])) g.resize(e[var] + 1, Rational(0));
        g[e[var]] = c;
    }
    std::map<MPoly::Exponents, UPoly> groups;
    for (const auto& [e, c] : p.terms()) {
        MPoly::Exponents key = e;
        int k = key[var];
        key[var] = 0;
        auto& up = groups[key];
        if (up.size() <= static_cast<std::size_t>(k)) up.resize(k + 1, Rational(0));
        up[k] = c;
    }
    for (auto& [key, up] : groups) {
        upoly_trim(up);
        g = upoly_gcd(std::move(g), up);
        if (g.size() <= 1) return MPoly(tab, Rational(1));
    }
    MPoly r(tab);
    for (std::size_t k = 0; k < g.size(); ++k)
        if (g[k] != 0) {
            MPoly::Exponents e(tab->size(), 0);
            e[var] = static_cast<int>(k);
            r.add_term(e, g[k]);
        }
    return r;
}

MPoly gcd_impl(const MPoly& a, const MPoly& b) {
    auto tab = a.table();
    auto normalize_monic = [](const MPoly& p) {
        if (p.is_zero()) return p;
        return p * p.lex_leading_transcendental_coeff().algebraic_inverse();
    };
    if (a.is_zero()) return normalize_monic(b);
    if (b.is_zero()) return normalize_monic(a);
    // any nonzero K element is a unit: gcd is trivial
    if (a.is_algebraic_only() || b.is_algebraic_only()) return MPoly(tab, Rational(1));
    // split off the monomial factor of each operand: variables are primes, so
    // gcd(m_a f, m_b g) = gcd(m_a, m_b) gcd(f, g) once m ∤ f, m ∤ g
    {
        auto min_exps = [&](const MPoly& p) {
            MPoly::Exponents m(tab->size(), 0);
            bool first = true;
            for (const auto& [e, c] : p.terms()) {
                for (std::size_t i = 0; i < tab->size(); ++i)
                    if (!tab->at(i).algebraic())
                        m[i] = first ? e[i] : std::min(m[i], e[i]);
                first = false;
            }
            return m;
        };
        MPoly::Exponents ma = min_exps(a), mb = min_exps(b);
        bool strip = false;
        for (std::size_t i = 0; i < tab->size(); ++i)
            if (ma[i] > 0 || mb[i] > 0) strip = true;
        if (strip) {
            auto shift = [&](const MPoly& p, const MPoly::Exponents& m) {
                MPoly r(tab);
                for (const auto& [e, c] : p.terms()) {
                    MPoly::Exponents ne = e;
                    for (std::size_t i = 0; i < ne.size(); ++i)
                        if (!tab->at(i).algebraic()) ne[i] -= m[i];
                    r.add_term(ne, c);
                }
                return r;
            };
            MPoly::Exponents mg(tab->size(), 0);
            for (std::size_t i = 0; i < tab->size(); ++i) mg[i] = std::min(ma[i], mb[i]);
            MPoly g = gcd_impl(shift(a, ma), shift(b, mb));
            MPoly r(tab);
            for (const auto& [e, c] : g.terms()) {
                MPoly::Exponents ne = e;
                for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += mg[i];
                r.add_term(ne, c);
            }
            return r;
        }
    }
    // a univariate operand over Q pins the gcd inside Q[var]
    if (std::size_t v = sole_transcendental_var(b); v < tab->size())
        return gcd_with_univariate(b, a, v);
    if (std::size_t v = sole_transcendental_var(a); v < tab->size())
        return gcd_with_univariate(a, b, v);
    // a variable occurring in only one operand cannot occur in the gcd, so
    // replace that operand by its content with respect to the variable
    for (std::size_t i = 0; i < tab->size(); ++i) {
        if (tab->at(i).algebraic()) continue;
        bool ua = a.uses_symbol(i), ub = b.uses_symbol(i);
        if (ua && !ub) return gcd_impl(content_in(a, i), b);
        if (ub && !ua) return gcd_impl(a, content_in(b, i));
    }
    // common-support variable of least degree
    std::size_t var = tab->size();
    int best = -1;
    for (std::size_t i = 0; i < tab->size(); ++i) {
        if (tab->at(i).algebraic() || !a.uses_symbol(i)) continue;
        int d = std::min(a.degree_in(i), b.degree_in(i));
        if (best < 0 || d < best) {
            best = d;
            var = i;
        }
    }
    if (var == tab->size()) return MPoly(tab, Rational(1)); // both nonzero K elements

    MPoly ca = content_in(a, var), cb = content_in(b, var);
    MPoly pa = MPoly::exact_div(a, ca), pb = MPoly::exact_div(b, cb);
    MPoly cg = gcd_impl(ca, cb);

    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MPoly r = pseudo_rem(pa, pb, var);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = MPoly(tab);
        } else {
            pb = MPoly::exact_div(r, content_in(r, var));
        }
    }
    return normalize_monic(cg * pa);
}

MPoly content_in(const MPoly& p, std::size_t var) {
    MPoly c(p.table());
    for (int k = 0; k <= p.degree_in(var); ++k) {
        MPoly ck = p.coeff_in(var, k);
        if (ck.is_zero()) continue;
        c = gcd_impl(c, ck);
        // content is only needed up to a unit of K
        if (c.is_algebraic_only()) return MPoly(p.table(), Rational(1));
    }
    return c;
}

} // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    if (a.tab_ != b.tab_) throw std::invalid_argument("MPoly: symbol table mismatch");
    return gcd_impl(a, b);
}

} // namespace expoweyl
