#pragma once

#include <stdexcept>
#include <vector>

#include "gspin/covertorus.hpp"
#include "gspin/laurent.hpp"
#include "gspin/localfield.hpp"
#include "gspin/rootdata.hpp"
#include "gspin/subgroups.hpp"

namespace gspin {

// A genuine character of the center of the covered torus in the standard
// family: chi_0 on T^2 with exponents (n-i+1), a square-class character eta
// through Upsilon, and a Weil-factor twist on the GL-center direction.
class ExceptionalCharacter {
public:
    ExceptionalCharacter(const LocalField& F, int n, SquareClassCharacter eta, int kappa_zeta4)
        : F_(F), n_(n), eta_(eta), gamma_(F, kappa_zeta4) {
        exponents_.resize(n);
        for (int i = 1; i <= n; ++i) exponents_[i - 1] = n - i + 1;
    }

    // Same data with the chi_0 exponents replaced (negative-control knob).
    ExceptionalCharacter with_exponents(std::vector<long long> exps) const {
        if ((int)exps.size() != n_) throw std::invalid_argument("with_exponents: need n exponents");
        ExceptionalCharacter e = *this;
        e.exponents_ = std::move(exps);
        return e;
    }

    const LocalField& field() const { return F_; }
    int rank() const { return n_; }
    const SquareClassCharacter& eta() const { return eta_; }
    const WeilFactor& gamma() const { return gamma_; }
    const std::vector<long long>& exponents() const { return exponents_; }

    // chi_0 on T^2: for t = prod eta_i^vee(a_i^2) beta_1^vee(t1),
    // chi_0(t) = prod |a_i|^{n-i+1} * eta(Upsilon(t)).
    CharacterValue chi0(const TorusElement& t) const {
        check_rank(t);
        if (!in_T2(t)) throw std::invalid_argument("chi0: element not in T^2");
        TorusElement s = to_convenient(t);
        Rational qe(0);
        for (int i = 1; i <= n_; ++i) qe += Rational(-(s.c[i - 1].v / 2) * exponents_[i - 1]);
        return CharacterValue::q_power(qe) * eta_(upsilon(s));
    }
    CharacterValue chi0(const CoverTorusElement& x) const {
        return x.phase == 1 ? chi0(x.t) : chi0(x.t) * CharacterValue::from_sign(-1);
    }

    // Extension to the full center of the covered torus:
    // chi(zeta s(t) s(z_d)) = zeta chi_0(t) |d|^{n(n+1)/4} eta(d)^n
    //                         gamma^{ceil(n/2)}(d),
    // where z_d = prod eta_i^vee(d) and d runs over (F^*)^{2/gcd(2,n+1)}.
    CharacterValue chi_center(const TorusElement& t, const FieldElement& d) const {
        check_rank(t);
        if (n_ % 2 == 0 && !d.is_square())
            throw std::invalid_argument("chi_center: d must be a square for even n");
        Rational de = Rational(-d.v) * Rational((long long)n_ * (n_ + 1), 4);
        return chi0(t) * CharacterValue::q_power(de) * eta_(d).pow(n_) * gamma_(d).pow((n_ + 1) / 2);
    }

    // Extension chi' to the maximal abelian subgroup T^m:
    // chi'(s(t)) = prod |a_i|^{(n-i+1)/2} eta(Upsilon(t))
    //              prod_{i=0}^{ceil(n/2)-1} gamma(a_{n-2i}).
    CharacterValue chi_prime(const TorusElement& t) const {
        check_rank(t);
        if (!in_Tm(t)) throw std::invalid_argument("chi_prime: element not in T^m");
        TorusElement s = to_convenient(t);
        Rational qe(0);
        for (int i = 1; i <= n_; ++i) qe += Rational(-s.c[i - 1].v * exponents_[i - 1], 2);
        CharacterValue v = CharacterValue::q_power(qe) * eta_(upsilon(s));
        for (int i = 0; i < (n_ + 1) / 2; ++i) v = v * gamma_(s.c[n_ - 2 * i - 1]);
        return v;
    }

    // chi(alpha^vee*(x^{l(alpha)})) = |x| for every simple root of G_n, over
    // all square classes and the given valuations.
    bool is_exceptional(const std::vector<long long>& valuations = {-1, 0, 1, 2}) const {
        if (n_ == 0) return true;
        std::vector<Root> simples;
        for (int k = 2; k <= n_; ++k) simples.push_back(Root::eminus(k, k + 1));
        simples.push_back(Root::eshort(n_ + 1));
        for (const Root& alpha : simples) {
            int l = length_tag(alpha, n_);
            for (const FieldElement& x : enumerate_field_elements(F_, valuations)) {
                TorusElement t = coroot_word(alpha, x.pow(l), n_);
                if (chi0(t) != abs_value(x)) return false;
            }
        }
        return true;
    }

private:
    void check_rank(const TorusElement& t) const {
        if (t.n != n_) throw std::invalid_argument("ExceptionalCharacter: rank mismatch");
    }

    LocalField F_;
    int n_;
    SquareClassCharacter eta_;
    WeilFactor gamma_;
    std::vector<long long> exponents_;
};

// q-exponent of chi(a_alpha) for the unramified exceptional character:
//   e_i - e_j     -> q^{i-j}
//   e_i + e_j     -> q^{i+j-2(n+2)}
//   e_i           -> q^{i-n-2}
inline long long chi_a_alpha_exponent(int n, const Root& alpha) {
    switch (alpha.kind) {
        case RootKind::EminusE: return alpha.i - alpha.j;
        case RootKind::EplusE:  return alpha.i + alpha.j - 2LL * (n + 2);
        default:                return alpha.i - (n + 2LL);
    }
}

inline LaurentRational chi_a_alpha(int n, const Root& alpha) {
    return LaurentRational::q_power(chi_a_alpha_exponent(n, alpha));
}

// One Gindikin-Karpelevich factor (1 - q^{-1} v)/(1 - v) for v = +-q^k.
inline LaurentRational gk_factor(long long k, int zeta = +1) {
    return LaurentRational::one_minus(k - 1, zeta) / LaurentRational::one_minus(k, zeta);
}

inline LaurentRational gk_factor_value(const CharacterValue& v) {
    if (v.z_exp != 0 || (v.zeta4 % 2) != 0 || !v.q_exp.is_integer())
        throw std::invalid_argument("gk_factor_value: value must be +-q^k");
    return gk_factor(v.q_exp.num, v.zeta4 == 0 ? +1 : -1);
}

// c(w, chi) = prod over {alpha > 0 : w alpha < 0} of
// (1 - q^{-1} chi(a_alpha)) / (1 - chi(a_alpha)).
inline LaurentRational gk_constant(int n, const WeylElement& w) {
    LaurentRational c = LaurentRational::one();
    for (const Root& alpha : positive_roots(n))
        if (w.apply(alpha).second < 0) c *= gk_factor(chi_a_alpha_exponent(n, alpha));
    return c;
}

// The closed form of c(w_0, chi).
inline LaurentRational gk_closed_form_w0(int n) {
    LaurentRational c = LaurentRational::one();
    for (int i = 2; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) {
            c *= LaurentRational::one_minus(-1LL - j + i) / LaurentRational::one_minus(0LL - j + i);
            c *= LaurentRational::one_minus(-1LL + j + i - 2LL * (n + 2)) /
                 LaurentRational::one_minus(0LL + j + i - 2LL * (n + 2));
        }
    for (int i = 2; i <= n + 1; ++i)
        c *= LaurentRational::one_minus(-1LL - n - 2 + i) / LaurentRational::one_minus(0LL - n - 2 + i);
    return c;
}

// Affine exponent L_alpha(s) of the zeta factor attached to a positive root
// in the deformed character chi_s: constant term plus integer coefficients
// of s_2..s_{n+1}.
struct AffineExponent {
    long long constant = 0;
    std::vector<long long> s_coeffs;  // index k-2 holds the coefficient of s_k

    long long at_zero() const { return constant; }
};

inline AffineExponent affine_exponent(int n, const Root& alpha) {
    AffineExponent L;
    L.s_coeffs.assign(n, 0);
    switch (alpha.kind) {
        case RootKind::EminusE:
            L.constant = alpha.j - alpha.i;
            L.s_coeffs[alpha.j - 2] += 1;
            L.s_coeffs[alpha.i - 2] -= 1;
            break;
        case RootKind::EplusE:
            L.constant = 2LL * (n + 2) - alpha.i - alpha.j;
            L.s_coeffs[alpha.i - 2] += 1;
            L.s_coeffs[alpha.j - 2] += 1;
            break;
        case RootKind::E:
            L.constant = n + 2LL - alpha.i;
            L.s_coeffs[alpha.i - 2] += 1;
            break;
    }
    return L;
}

struct PoleCount {
    int numerator = 0;    // roots with L(0) = 1: zeta(L) has a pole at s = 0
    int denominator = 0;  // roots with L(0) = 0: zeta(L+1) has a pole at s = 0
    int order() const { return numerator - denominator; }
};

inline PoleCount pole_count(int n, const WeylElement& w) {
    PoleCount pc;
    for (const Root& alpha : positive_roots(n))
        if (w.apply(alpha).second < 0) {
            long long L0 = affine_exponent(n, alpha).at_zero();
            if (L0 == 1) ++pc.numerator;
            if (L0 == 0) ++pc.denominator;
        }
    return pc;
}

inline int pole_order(int n, const WeylElement& w) { return pole_count(n, w).order(); }

}  // namespace gspin
