#pragma once

#include <functional>
#include <map>
#include <optional>

#include "toric/linalg.hpp"

namespace toric {

/// Multivariate polynomial over Q, used for elements of the symmetric algebra
/// S(M) (functions on N ⊗ Q) and their truncations.
class Poly {
  public:
    using Exp = std::vector<int>;

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly zero(std::size_t nvars) { return Poly(nvars); }

    static Poly constant(const Rat& c, std::size_t nvars) {
        Poly p(nvars);
        if (c != 0) p.terms_[Exp(nvars, 0)] = c;
        return p;
    }

    static Poly variable(std::size_t i, std::size_t nvars) {
        Poly p(nvars);
        Exp e(nvars, 0);
        e[i] = 1;
        p.terms_[e] = 1;
        return p;
    }

    /// The linear form sum_j coeffs[j] * x_j.
    static Poly linear_form(const QVec& coeffs) {
        Poly p(coeffs.size());
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0) continue;
            Exp e(coeffs.size(), 0);
            e[j] = 1;
            p.terms_[e] = coeffs[j];
        }
        return p;
    }

    static Poly linear_form(const Vec& coeffs) {
        return linear_form(QVec(coeffs.begin(), coeffs.end()));
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Exp, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    void add_term(const Exp& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rat coefficient(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    Poly scaled(const Rat& c) const {
        Poly r(nvars_);
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = c * k;
        return r;
    }

    /// Terms of total degree exactly k.
    Poly homogeneous_component(int k) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (s == k) r.terms_[e] = c;
        }
        return r;
    }

    /// Drop terms of total degree above K.
    Poly truncated(int K) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (s <= K) r.terms_[e] = c;
        }
        return r;
    }

    /// Substitute x_i -> sum_j m[i][j] * y_j (m has nvars rows).
    Poly substitute_linear(const QMat& m, std::size_t new_nvars) const {
        std::vector<std::vector<Poly>> powers(nvars_);  // powers[i][k] = (row_i)^k
        Poly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            Poly term = Poly::constant(c, new_nvars);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (powers[i].empty()) {
                    powers[i].push_back(Poly::constant(Rat(1), new_nvars));
                    powers[i].push_back(Poly::linear_form(m[i]));
                }
                while (static_cast<int>(powers[i].size()) <= e[i])
                    powers[i].push_back(powers[i].back() * powers[i][1]);
                term = term * powers[i][static_cast<std::size_t>(e[i])];
            }
            r = r + term;
        }
        return r;
    }

    /// Exact division by a homogeneous linear form; nullopt when not divisible.
    std::optional<Poly> divided_by_linear(const Poly& l) const {
        if (l.is_zero() || l.total_degree() != 1) throw std::invalid_argument("not a linear form");
        // leading variable of l in lex order
        const auto& lt = *l.terms_.begin();
        std::size_t lead_var = 0;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (lt.first[i] == 1) {
                lead_var = i;
                break;
            }
        Rat lc = lt.second;
        Poly rem = *this;
        Poly quot(nvars_);
        while (!rem.is_zero()) {
            const auto& [e, c] = *rem.terms_.begin();  // lex-smallest; any order works
            if (e[lead_var] == 0) return std::nullopt;
            Exp qe = e;
            qe[lead_var] -= 1;
            Rat qc = c / lc;
            quot.add_term(qe, qc);
            Poly t(nvars_);
            t.terms_[qe] = qc;
            rem = rem - t * l;
        }
        return quot;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  private:
    std::size_t nvars_ = 0;
    std::map<Exp, Rat> terms_;
};

inline Poly poly_mul_trunc(const Poly& a, const Poly& b, int K) {
    return (a * b).truncated(K);
}

/// Inverse of a power series with nonzero constant term, truncated at total
/// degree K.
inline Poly poly_inverse_unit(const Poly& p, int K) {
    Rat c0 = p.coefficient(Poly::Exp(p.nvars(), 0));
    if (c0 == 0) throw std::invalid_argument("series inverse requires a unit constant term");
    Poly inv = Poly::constant(Rat(1) / c0, p.nvars());
    Poly tail = p - Poly::constant(c0, p.nvars());  // degree >= 1 part
    // Newton-free recursion: inv_{k} built degree by degree
    Poly acc = inv;
    Poly power = Poly::constant(Rat(1), p.nvars());
    // (c0 + t)^{-1} = 1/c0 * sum (-t/c0)^k
    Poly ratio = tail.scaled(Rat(-1) / c0);
    for (int k = 1; k <= K; ++k) {
        power = poly_mul_trunc(power, ratio, K);
        if (power.is_zero()) break;
        acc = acc + power.scaled(Rat(1) / c0);
    }
    return acc.truncated(K);
}

/// exp(l) truncated at total degree K, for a linear form l.
inline Poly poly_exp_linear(const Poly& l, int K) {
    Poly acc = Poly::constant(Rat(1), l.nvars());
    Poly power = Poly::constant(Rat(1), l.nvars());
    for (int k = 1; k <= K; ++k) {
        power = poly_mul_trunc(power, l, K);
        if (power.is_zero()) break;
        acc = acc + power.scaled(Rat(1) / factorial_rat(k));
    }
    return acc;
}

/// (e^l - 1)/l truncated at total degree K: the unit series whose product
/// with -l is 1 - e^l.
inline Poly poly_expm1_over_linear(const Poly& l, int K) {
    Poly acc = Poly::constant(Rat(1), l.nvars());
    Poly power = Poly::constant(Rat(1), l.nvars());
    for (int k = 1; k <= K; ++k) {
        power = poly_mul_trunc(power, l, K);
        if (power.is_zero()) break;
        acc = acc + power.scaled(Rat(1) / factorial_rat(k + 1));
    }
    return acc;
}

/// Coefficients of the univariate series t/(1 - e^{-t}) up to t^K.
inline std::vector<Rat> todd_coefficients(int K) {
    // 1 - e^{-t} = t * g(t), g(t) = sum (-1)^k t^k / (k+1)!
    std::vector<Rat> g(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k)
        g[k] = (k % 2 ? Rat(-1) : Rat(1)) / factorial_rat(k + 1);
    std::vector<Rat> inv(static_cast<std::size_t>(K) + 1, Rat(0));
    inv[0] = 1;
    for (int k = 1; k <= K; ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j) s += g[j] * inv[k - j];
        inv[k] = -s;
    }
    return inv;
}

/// The Todd factor l/(1 - e^{-l}) of a linear form, truncated at degree K.
inline Poly poly_todd_linear(const Poly& l, int K) {
    std::vector<Rat> b = todd_coefficients(K);
    Poly acc = Poly::constant(b[0], l.nvars());
    Poly power = Poly::constant(Rat(1), l.nvars());
    for (int k = 1; k <= K; ++k) {
        power = poly_mul_trunc(power, l, K);
        if (power.is_zero()) break;
        acc = acc + power.scaled(b[k]);
    }
    return acc;
}

/// All exponent vectors of total degree exactly k in n variables, reverse-lex
/// stable order.
inline std::vector<Poly::Exp> monomials_of_degree(std::size_t n, int k) {
    std::vector<Poly::Exp> out;
    if (n == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    Poly::Exp cur(n, 0);
    // iterate compositions of k into n parts
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rest) {
        if (pos + 1 == n) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = rest; v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, rest - v);
        }
    };
    rec(0, k);
    return out;
}

}  // namespace toric
