#pragma once

#include "toric/halfopen.hpp"
#include "toric/laurent.hpp"

namespace toric {

/// Element of the fraction field of Q[M] in summed form: a Laurent-polynomial
/// numerator over a multiset of denominator factors (1 - e^w). Canonical form:
/// every denominator vector is lex-positive (1/(1-e^{-w}) is rewritten as
/// -e^w/(1-e^w)), factors sorted, zero numerator clears the denominator.
/// Different summation paths can give different forms of the same function;
/// gf_equals is the sanctioned comparison.
class RationalGenFun {
  public:
    RationalGenFun() = default;

    RationalGenFun(LaurentPoly num, std::vector<Vec> den)
        : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    static RationalGenFun zero(std::size_t /*rank*/) {
        return RationalGenFun(LaurentPoly::zero(), {});
    }

    static RationalGenFun constant(const Rat& c, std::size_t rank) {
        return RationalGenFun(LaurentPoly::constant(c, rank), {});
    }

    const LaurentPoly& numerator() const { return num_; }
    const std::vector<Vec>& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    void canonicalize() {
        for (Vec& w : den_) {
            if (toric::is_zero(w)) throw std::invalid_argument("zero denominator vector");
            if (!lex_positive(w)) {
                // 1/(1 - e^{-v}) = -e^{v}/(1 - e^{v}) with v = -w lex-positive
                Vec v = neg(w);
                num_ = num_.shifted(v).scaled(Rat(-1));
                w = std::move(v);
            }
        }
        std::sort(den_.begin(), den_.end(), lex_less);
        if (num_.is_zero()) den_.clear();
    }

    friend bool operator==(const RationalGenFun& a, const RationalGenFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    LaurentPoly num_;
    std::vector<Vec> den_;
};

namespace detail {

/// Multiset difference a \ b on sorted denominator lists.
inline std::vector<Vec> den_difference(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::vector<Vec> out;
    std::size_t i = 0, j = 0;
    while (i < a.size()) {
        if (j < b.size() && a[i] == b[j]) {
            ++i;
            ++j;
        } else if (j < b.size() && lex_less(b[j], a[i])) {
            ++j;
        } else {
            out.push_back(a[i]);
            ++i;
        }
    }
    return out;
}

inline std::vector<Vec> den_union_max(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::vector<Vec> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && lex_less(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || lex_less(b[j], a[i])) {
            out.push_back(b[j++]);
        } else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

inline std::vector<Vec> den_intersection(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::vector<Vec> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            out.push_back(a[i]);
            ++i;
            ++j;
        } else if (lex_less(a[i], b[j])) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

inline LaurentPoly times_factors(LaurentPoly p, const std::vector<Vec>& factors) {
    for (const Vec& w : factors) p = p * one_minus_exp(w);
    return p;
}

}  // namespace detail

inline RationalGenFun gf_add(const RationalGenFun& f, const RationalGenFun& g) {
    // least common denominator (multiset max) keeps numerators small
    std::vector<Vec> den = detail::den_union_max(f.denominator(), g.denominator());
    LaurentPoly num =
        detail::times_factors(f.numerator(), detail::den_difference(den, f.denominator())) +
        detail::times_factors(g.numerator(), detail::den_difference(den, g.denominator()));
    return RationalGenFun(std::move(num), std::move(den));
}

inline RationalGenFun gf_sub(const RationalGenFun& f, const RationalGenFun& g) {
    std::vector<Vec> den = detail::den_union_max(f.denominator(), g.denominator());
    LaurentPoly num =
        detail::times_factors(f.numerator(), detail::den_difference(den, f.denominator())) -
        detail::times_factors(g.numerator(), detail::den_difference(den, g.denominator()));
    return RationalGenFun(std::move(num), std::move(den));
}

inline RationalGenFun gf_mul(const RationalGenFun& f, const RationalGenFun& g) {
    std::vector<Vec> den = f.denominator();
    den.insert(den.end(), g.denominator().begin(), g.denominator().end());
    return RationalGenFun(f.numerator() * g.numerator(), std::move(den));
}

/// Multiply by the monomial e^m (the character twist).
inline RationalGenFun gf_scale_by_monomial(const RationalGenFun& f, const Vec& m) {
    return RationalGenFun(f.numerator().shifted(m), f.denominator());
}

inline RationalGenFun gf_scale(const RationalGenFun& f, const Rat& c) {
    return RationalGenFun(f.numerator().scaled(c), f.denominator());
}

/// Substitute e^m -> e^{-m} throughout.
inline RationalGenFun gf_exponent_negated(const RationalGenFun& f) {
    std::vector<Vec> den;
    for (const Vec& w : f.denominator()) den.push_back(neg(w));
    return RationalGenFun(f.numerator().exponent_negated(), std::move(den));
}

/// Exact equality as rational functions: cross-multiplied numerators agree
/// (common denominator factors cancelled first).
inline bool gf_equals(const RationalGenFun& f, const RationalGenFun& g) {
    std::vector<Vec> common = detail::den_intersection(f.denominator(), g.denominator());
    LaurentPoly a =
        detail::times_factors(f.numerator(), detail::den_difference(g.denominator(), common));
    LaurentPoly b =
        detail::times_factors(g.numerator(), detail::den_difference(f.denominator(), common));
    return a == b;
}

/// The summed series S(sum of e^m over the lattice points of c): each
/// half-open piece contributes its parallelepiped numerator over its ray
/// factors. A cone containing a line sums to zero.
inline RationalGenFun cone_generating_function(const Cone& c, const Int& cap = Int(1000000)) {
    std::size_t rank = c.ambient_rank();
    if (!c.is_pointed()) return RationalGenFun::zero(rank);
    RationalGenFun total = RationalGenFun::zero(rank);
    for (const HalfOpenSimplicialCone& piece : half_open_triangulation(c)) {
        LaurentPoly num;
        for (const Vec& p : parallelepiped_points(piece, cap)) num.add_term(p, Rat(1));
        total = gf_add(total, RationalGenFun(std::move(num), piece.rays));
    }
    return total;
}

/// Univariate Laurent series truncated at t^order: coefficients of
/// t^lead .. t^order.
struct TruncatedSeries {
    int lead = 0;
    int order = 0;
    std::vector<Rat> coeff;  // coeff[i] belongs to t^(lead + i)

    Rat at(int k) const {
        if (k < lead || k > order) return Rat(0);
        return coeff[static_cast<std::size_t>(k - lead)];
    }

    /// True when all coefficients of negative powers vanish.
    bool pole_free() const {
        for (int k = lead; k < 0; ++k)
            if (at(k) != 0) return false;
        return true;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r;
        r.lead = std::min(a.lead, b.lead);
        r.order = std::min(a.order, b.order);
        if (r.order < r.lead) r.order = r.lead - 1;
        for (int k = r.lead; k <= r.order; ++k) r.coeff.push_back(a.at(k) + b.at(k));
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        int lo = std::min(a.lead, b.lead);
        int hi = std::min(a.order, b.order);
        for (int k = lo; k <= hi; ++k)
            if (a.at(k) != b.at(k)) return false;
        return true;
    }
};

namespace detail {

/// Coefficients of exp(s*t) truncated at t^n.
inline std::vector<Rat> exp_series(const Int& s, int n) {
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (int k = 1; k <= n; ++k) c[k] = c[k - 1] * Rat(s, Int(k));
    return c;
}

/// Multiplicative inverse of a unit power series, truncated at t^n.
inline std::vector<Rat> invert_unit_series(const std::vector<Rat>& u, int n) {
    std::vector<Rat> inv(static_cast<std::size_t>(n) + 1, Rat(0));
    inv[0] = Rat(1) / u[0];
    for (int k = 1; k <= n; ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j) {
            if (j < static_cast<int>(u.size())) s += u[j] * inv[k - j];
        }
        inv[k] = -s / u[0];
    }
    return inv;
}

}  // namespace detail

/// Laurent expansion of f under e^m -> exp(<m, xi> t), truncated at t^order.
/// Every denominator factor contributes a simple zero, so the pole order is
/// the number of factors. xi must be generic: <xi, w> != 0 for every
/// denominator vector w.
inline TruncatedSeries specialize(const RationalGenFun& f, const Vec& xi, int order) {
    int pole = static_cast<int>(f.denominator().size());
    int work = order + pole;  // numerator precision needed
    if (work < 0) work = 0;
    for (const Vec& w : f.denominator())
        if (dot(w, xi) == 0)
            throw std::invalid_argument("specialize: xi is not generic, <xi, w> = 0 for w = " +
                                        to_string(w));
    // numerator as a power series
    std::vector<Rat> num(static_cast<std::size_t>(work) + 1, Rat(0));
    for (const auto& [m, c] : f.numerator().terms()) {
        std::vector<Rat> e = detail::exp_series(dot(m, xi), work);
        for (int k = 0; k <= work; ++k) num[k] += c * e[k];
    }
    // each factor (1 - e^{st}) = (-s t) * g(st) with g a unit series
    Rat scalar(1);
    std::vector<Rat> unit(static_cast<std::size_t>(work) + 1, Rat(0));
    unit[0] = 1;
    for (const Vec& w : f.denominator()) {
        Int s = dot(w, xi);
        scalar *= Rat(-s);
        // g(y) = (e^y - 1)/y at y = s t: coefficients s^k / (k+1)!
        std::vector<Rat> g(static_cast<std::size_t>(work) + 1);
        Rat p(1);
        for (int k = 0; k <= work; ++k) {
            g[k] = p / factorial_rat(k + 1);
            p *= Rat(s);
        }
        std::vector<Rat> mult(static_cast<std::size_t>(work) + 1, Rat(0));
        for (int i = 0; i <= work; ++i)
            for (int j = 0; i + j <= work; ++j) mult[i + j] += unit[i] * g[j];
        unit = std::move(mult);
    }
    std::vector<Rat> uinv = detail::invert_unit_series(unit, work);
    TruncatedSeries out;
    out.lead = -pole;
    out.order = order;
    out.coeff.assign(static_cast<std::size_t>(order + pole) + 1, Rat(0));
    for (int i = 0; i <= work; ++i)
        for (int j = 0; i + j <= work; ++j) out.coeff[i + j] += num[i] * uinv[j] / scalar;
    return out;
}

/// Deterministic search for generic directions: enumerate xi by increasing
/// max-norm, lexicographic within a shell, and keep those with <xi, w> != 0
/// for all given vectors. `skip` selects later hits of the same search.
inline Vec generic_direction(const std::vector<Vec>& denominators, std::size_t rank,
                             std::size_t skip = 0) {
    for (long shell = 1;; ++shell) {
        Vec xi(rank, Int(-shell));
        bool exhausted = false;
        while (!exhausted) {
            bool on_shell = false;
            for (const Int& x : xi)
                if (abs_int(x) == shell) {
                    on_shell = true;
                    break;
                }
            if (on_shell) {
                bool ok = true;
                for (const Vec& w : denominators)
                    if (dot(w, xi) == 0) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    if (skip == 0) return xi;
                    --skip;
                }
            }
            // lexicographic successor inside [-shell, shell]^rank
            std::size_t pos = rank;
            exhausted = true;
            while (pos > 0) {
                --pos;
                xi[pos] += 1;
                if (xi[pos] <= shell) {
                    exhausted = false;
                    break;
                }
                xi[pos] = -shell;
            }
        }
    }
}

}  // namespace toric
