#pragma once
// Sparse exact multivariate polynomials over the Gaussian rationals, with a
// fixed arity and canonical graded-lex term order (variable 0 highest).
// Provides arithmetic, substitution with power caching, differentiation,
// evaluation, monic division in a chosen variable, and perfect-square
// extraction.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "epwv/exact/gaussian.hpp"
#include "epwv/multipoly/monomial.hpp"

namespace epwv::multipoly {

using exact::Gq;

class Poly {
public:
    using TermMap = std::map<Mono, Gq, GradedLexDesc>;

    explicit Poly(int arity = 0) : arity_(arity) {}

    static Poly constant(int arity, Gq c) {
        Poly p(arity);
        if (!c.is_zero()) p.terms_.emplace(Mono{}, std::move(c));
        return p;
    }

    static Poly monomial(int arity, std::initializer_list<int> exps,
                         Gq c = Gq(1)) {
        Poly p(arity);
        if (!c.is_zero())
            p.terms_.emplace(Mono::from_exponents(exps), std::move(c));
        return p;
    }

    static Poly variable(int arity, int var) {
        Poly p(arity);
        p.terms_.emplace(Mono{}.with_exp(var, 1), Gq(1));
        return p;
    }

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int degree() const {
        // leading term has maximal degree under graded-lex
        return terms_.empty() ? -1 : terms_.begin()->first.degree();
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
        return d;
    }

    const std::pair<const Mono, Gq>& leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero");
        return *terms_.begin();
    }

    void add_term(const Mono& m, const Gq& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly p(arity_);
        for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
        return p;
    }

    Poly& operator+=(const Poly& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_arity(b);
        Poly p(a.arity_);
        for (const auto& [m1, c1] : a.terms_)
            for (const auto& [m2, c2] : b.terms_) p.add_term(m1 * m2, c1 * c2);
        return p;
    }

    Poly scaled(const Gq& k) const {
        Poly p(arity_);
        if (k.is_zero()) return p;
        for (const auto& [m, c] : terms_) p.terms_.emplace(m, c * k);
        return p;
    }

    Poly pow(int k) const {
        Poly r = constant(arity_, Gq(1));
        Poly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    Poly diff(int var) const {
        if (var < 0 || var >= arity_)
            throw std::invalid_argument("diff: variable index out of range");
        Poly p(arity_);
        for (const auto& [m, c] : terms_) {
            int e = m.exp(var);
            if (e == 0) continue;
            p.terms_.emplace(m.with_exp(var, e - 1), c * Gq(e));
        }
        return p;
    }

    Gq eval(const std::vector<Gq>& point) const {
        if (static_cast<int>(point.size()) != arity_)
            throw std::invalid_argument("eval: point length != arity");
        Gq s(0);
        for (const auto& [m, c] : terms_) {
            Gq v = c;
            for (int var = 0; var < arity_; ++var) {
                int e = m.exp(var);
                for (int k = 0; k < e; ++k) v *= point[var];
            }
            s += v;
        }
        return s;
    }

    // Substitute variable j by images[j]; all images share one arity, which
    // becomes the arity of the result. Powers of images are cached.
    Poly subst(const std::vector<Poly>& images) const;

    bool operator==(const Poly& o) const {
        return arity_ == o.arity_ &&
               std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                          o.terms_.end(),
                          [](const auto& a, const auto& b) {
                              return a.first == b.first && a.second == b.second;
                          });
    }

    // Canonical text: one term per line "COEFF e0 ... e{arity-1}", terms in
    // graded-lex descending order. Byte-deterministic.
    std::string dump() const {
        std::ostringstream os;
        for (const auto& [m, c] : terms_) {
            os << c.str();
            for (int v = 0; v < arity_; ++v) os << ' ' << m.exp(v);
            os << '\n';
        }
        return os.str();
    }

private:
    void check_arity(const Poly& o) const {
        if (arity_ != o.arity_)
            throw std::invalid_argument("polynomial arity mismatch");
    }

    int arity_;
    TermMap terms_;
};

// Generic composition of a polynomial over any commutative ring R supporting
// operator+, operator*, and scalar_mul(Gq, R). `one` is the ring unit.
template <typename R>
R compose(const Poly& p, const std::vector<R>& images, const R& one) {
    if (static_cast<int>(images.size()) != p.arity())
        throw std::invalid_argument("compose: images length != arity");
    std::map<std::pair<int, int>, R> cache;
    auto power = [&](int var, int e) -> const R& {
        auto key = std::make_pair(var, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        R v = one;
        // binary powering over the cache
        if (e == 1) {
            v = images[var];
        } else {
            R base = images[var];
            int k = e;
            bool first = true;
            while (k > 0) {
                if (k & 1) {
                    v = first ? base : v * base;
                    first = false;
                }
                k >>= 1;
                if (k > 0) base = base * base;
            }
        }
        return cache.emplace(key, std::move(v)).first->second;
    };
    std::optional<R> acc;
    for (const auto& [m, c] : p.terms()) {
        std::optional<R> t;
        for (int var = 0; var < p.arity(); ++var) {
            int e = m.exp(var);
            if (e == 0) continue;
            t = t ? (*t) * power(var, e) : power(var, e);
        }
        R term = scalar_mul(c, t ? *t : one);
        acc = acc ? (*acc) + term : std::move(term);
    }
    if (acc) return *acc;
    return scalar_mul(Gq(0), one);
}

inline Poly scalar_mul(const Gq& c, const Poly& p) { return p.scaled(c); }

inline Poly Poly::subst(const std::vector<Poly>& images) const {
    if (images.empty()) {
        if (arity_ != 0) throw std::invalid_argument("subst: no images");
        return *this;
    }
    return compose<Poly>(*this, images,
                         Poly::constant(images[0].arity(), Gq(1)));
}

struct DivisionResult {
    Poly quotient;
    Poly remainder;
};

// Exact division by a divisor monic in the chosen variable: dividend =
// divisor * quotient + remainder with deg_var(remainder) < deg_var(divisor).
// Rejects non-monic divisors (the coefficient of var^deg must be the
// constant 1).
inline DivisionResult divide_by_monic_in_variable(const Poly& dividend,
                                                  const Poly& divisor,
                                                  int var) {
    const int arity = dividend.arity();
    if (divisor.arity() != arity)
        throw std::invalid_argument("divide: arity mismatch");
    const int dv = divisor.degree_in(var);
    // leading coefficient in var must be exactly 1
    Poly lead(arity);
    for (const auto& [m, c] : divisor.terms())
        if (m.exp(var) == dv) lead.add_term(m.with_exp(var, 0), c);
    if (!(lead == Poly::constant(arity, Gq(1))))
        throw std::invalid_argument("divide: divisor not monic in variable");

    Poly quotient(arity), remainder = dividend;
    while (true) {
        int d = remainder.degree_in(var);
        if (d < dv || remainder.is_zero()) break;
        // coefficient of var^d as a polynomial piece * var^(d-dv)
        Poly piece(arity);
        for (const auto& [m, c] : remainder.terms())
            if (m.exp(var) == d) piece.add_term(m.with_exp(var, d - dv), c);
        if (piece.is_zero()) break;
        quotient += piece;
        remainder -= divisor * piece;
    }
    return {std::move(quotient), std::move(remainder)};
}

struct SquareRoot {
    Gq scale;   // p == scale * root^2
    Poly root;  // leading coefficient 1
};

// Perfect-square extraction: returns r (monic leading coefficient) and scalar
// c with p == c * r^2 when such r exists over the Gaussian rationals.
inline std::optional<SquareRoot> perfect_square_root(const Poly& p) {
    if (p.is_zero()) return SquareRoot{Gq(0), Poly(p.arity())};
    const auto& [lm, lc] = p.leading_term();
    for (int v = 0; v < p.arity(); ++v)
        if (lm.exp(v) % 2 != 0) return std::nullopt;
    Poly pp = p.scaled(Gq(1) / lc);
    Mono half;
    for (int v = 0; v < p.arity(); ++v) half = half.with_exp(v, lm.exp(v) / 2);
    Poly r(p.arity());
    r.add_term(half, Gq(1));
    for (std::size_t guard = 0; guard < 200000; ++guard) {
        Poly res = pp - r * r;
        if (res.is_zero()) return SquareRoot{lc, r};
        const auto& [tm, tc] = res.leading_term();
        if (!tm.divisible_by(half)) return std::nullopt;
        r.add_term(tm / half, tc / Gq(2));
    }
    return std::nullopt;
}

}  // namespace epwv::multipoly
