#pragma once

#include <map>

#include "toric/numeric.hpp"

namespace toric {

/// Laurent polynomial over Q on the character lattice M: a finite map from
/// exponent vectors to nonzero rational coefficients.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(const Rat& c, std::size_t rank) {
        LaurentPoly p;
        if (c != 0) p.terms_[zero_vec(rank)] = c;
        return p;
    }

    static LaurentPoly monomial(const Rat& c, const Vec& exp) {
        LaurentPoly p;
        if (c != 0) p.terms_[exp] = c;
        return p;
    }

    const std::map<Vec, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Vec& exp, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_[exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(add(ea, eb), ca * cb);
        return r;
    }

    LaurentPoly scaled(const Rat& c) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = c * k;
        return r;
    }

    /// Multiply by the single monomial e^m.
    LaurentPoly shifted(const Vec& m) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[add(e, m)] = c;
        return r;
    }

    /// Substitute e^m -> e^{-m}.
    LaurentPoly exponent_negated() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[neg(e)] = c;
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<Vec, Rat> terms_;
};

/// 1 - e^w as a Laurent polynomial.
inline LaurentPoly one_minus_exp(const Vec& w) {
    LaurentPoly p = LaurentPoly::constant(Rat(1), w.size());
    p.add_term(w, Rat(-1));
    return p;
}

}  // namespace toric
