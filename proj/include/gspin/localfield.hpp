#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspin/rational.hpp"

namespace gspin {

// Multiplicative group element x of a local field, retained modulo squared
// units: x = pi^v * u * (unit square).  v is the valuation and cls indexes
// the unit square class (0 = trivial, 1 = the fixed non-residue; for the
// real field 0 = +1, 1 = -1 and v is always 0).  This resolution carries
// exactly the data the Hilbert symbol, |.| and square-class characters need.
struct FieldElement {
    long long v = 0;
    int cls = 0;

    FieldElement() = default;
    FieldElement(long long val, int c) : v(val), cls(c) {
        if (c != 0 && c != 1) throw std::invalid_argument("FieldElement: class index must be 0 or 1");
    }

    static FieldElement one() { return FieldElement(0, 0); }

    FieldElement operator*(const FieldElement& o) const { return FieldElement(v + o.v, cls ^ o.cls); }
    FieldElement inverse() const { return FieldElement(-v, cls); }
    FieldElement square() const { return FieldElement(2 * v, 0); }
    FieldElement pow(long long e) const {
        return FieldElement(v * e, (e % 2 == 0) ? 0 : cls);
    }

    bool is_square() const { return v % 2 == 0 && cls == 0; }
    bool is_one() const { return v == 0 && cls == 0; }

    bool operator==(const FieldElement& o) const { return v == o.v && cls == o.cls; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const { return v != o.v ? v < o.v : cls < o.cls; }
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    return os << x.v << ":" << (x.cls + 1);
}

inline int legendre_symbol(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    // Euler's criterion
    long long r = 1, b = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

inline bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Configuration of the base local field: an odd-residue p-adic field at
// square-class resolution, or the real field.
class LocalField {
public:
    static LocalField padic(long long p, long long nonresidue = 0) {
        if (!is_odd_prime(p)) throw std::invalid_argument("LocalField: p must be an odd prime");
        if (nonresidue == 0) {
            for (long long u = 2; ; ++u)
                if (legendre_symbol(u, p) == -1) { nonresidue = u; break; }
        }
        if (legendre_symbol(nonresidue, p) != -1)
            throw std::invalid_argument("LocalField: configured nonresidue is a quadratic residue");
        return LocalField(p, nonresidue);
    }
    static LocalField real() { return LocalField(); }

    bool is_real() const { return real_; }
    long long p() const { return p_; }
    long long q() const { return p_; }
    long long nonresidue() const { return u_; }

    // Number of unit square classes (always 2 here: odd p and R).
    int num_unit_classes() const { return 2; }
    // Full square-class representatives: for odd p the four classes
    // {1, u, pi, u*pi}; for R the two classes {1, -1}.
    std::vector<FieldElement> square_class_reps() const {
        if (real_) return {FieldElement(0, 0), FieldElement(0, 1)};
        return {FieldElement(0, 0), FieldElement(0, 1), FieldElement(1, 0), FieldElement(1, 1)};
    }

    FieldElement element(long long v, int cls) const {
        if (real_ && v != 0) throw std::invalid_argument("LocalField: real elements have valuation 0");
        return FieldElement(v, cls);
    }

    // Exact representative of a class as a rational integer (p-adic case),
    // e.g. pi^v * u^cls with pi = p.
    long long class_representative(const FieldElement& x) const {
        if (real_) return x.cls == 0 ? 1 : -1;
        if (x.v < 0) throw std::invalid_argument("class_representative: negative valuation");
        long long r = x.cls == 0 ? 1 : u_;
        for (long long i = 0; i < x.v; ++i) r *= p_;
        return r;
    }

    // Square class of an exact nonzero rational number.
    FieldElement class_of_rational(const Rational& r) const {
        if (r.is_zero()) throw std::invalid_argument("class_of_rational: zero has no class");
        if (real_) return FieldElement(0, r.num < 0 ? 1 : 0);
        long long v = 0;
        long long num = r.num, den = r.den;
        while (num % p_ == 0) { num /= p_; ++v; }
        while (den % p_ == 0) { den /= p_; --v; }
        // unit part num/den mod p
        long long unit = (num % p_) * modinv(den % p_) % p_;
        int cls = legendre_symbol(unit, p_) == 1 ? 0 : 1;
        return FieldElement(v, cls);
    }

    // Quadratic Hilbert symbol (x, y)_2 of the configured field, by the tame
    // closed form for odd p and by the sign rule for R.
    int hilbert(const FieldElement& x, const FieldElement& y) const {
        if (real_) return (x.cls == 1 && y.cls == 1) ? -1 : 1;
        // (pi^a u, pi^b w) = (-1|p)^{ab} (u|p)^b (w|p)^a
        long long e = 0;
        if (p_ % 4 == 3) e += x.v * y.v;
        e += (long long)x.cls * y.v;
        e += (long long)y.cls * x.v;
        return (e % 2 == 0) ? 1 : -1;
    }

    bool operator==(const LocalField& o) const {
        return real_ == o.real_ && p_ == o.p_ && u_ == o.u_;
    }

    std::string name() const {
        if (real_) return "R";
        return "Q_" + std::to_string(p_);
    }

private:
    LocalField() : real_(true), p_(0), u_(0) {}
    LocalField(long long p, long long u) : real_(false), p_(p), u_(u) {}

    long long modinv(long long a) const {
        a %= p_;
        if (a < 0) a += p_;
        long long r = 1, b = a, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }

    bool real_;
    long long p_;
    long long u_;
};

// Exact value of a character-type quantity: a rational power of q, a fourth
// root of unity, and an integer power of the formal symbol z (the unknown
// value of the base character at the uniformizer).  Forms an abelian group
// under componentwise multiplication.
struct CharacterValue {
    Rational q_exp;     // value contributes q^{q_exp}
    int zeta4 = 0;      // i^{zeta4}, 0 <= zeta4 < 4
    long long z_exp = 0;

    CharacterValue() = default;
    CharacterValue(Rational qe, int z4, long long ze) : q_exp(qe), zeta4(((z4 % 4) + 4) % 4), z_exp(ze) {}

    static CharacterValue one() { return CharacterValue(); }
    static CharacterValue from_sign(int s) {
        if (s != 1 && s != -1) throw std::invalid_argument("CharacterValue: sign must be +-1");
        return CharacterValue(Rational(0), s == 1 ? 0 : 2, 0);
    }
    static CharacterValue q_power(Rational e) { return CharacterValue(e, 0, 0); }
    static CharacterValue zeta(int e) { return CharacterValue(Rational(0), e, 0); }
    static CharacterValue z_power(long long e) { return CharacterValue(Rational(0), 0, e); }

    CharacterValue operator*(const CharacterValue& o) const {
        return CharacterValue(q_exp + o.q_exp, zeta4 + o.zeta4, z_exp + o.z_exp);
    }
    CharacterValue inverse() const { return CharacterValue(-q_exp, -zeta4, -z_exp); }
    CharacterValue pow(long long e) const {
        Rational qe = q_exp * Rational(e);
        return CharacterValue(qe, int((zeta4 * (e % 4) % 4 + 4) % 4), z_exp * e);
    }

    bool is_one() const { return q_exp.is_zero() && zeta4 == 0 && z_exp == 0; }
    bool operator==(const CharacterValue& o) const {
        return q_exp == o.q_exp && zeta4 == o.zeta4 && z_exp == o.z_exp;
    }
    bool operator!=(const CharacterValue& o) const { return !(*this == o); }

    std::string str() const {
        std::string s;
        auto append = [&s](const std::string& part) {
            if (!s.empty()) s += "*";
            s += part;
        };
        if (!q_exp.is_zero()) append("q^(" + q_exp.str() + ")");
        static const char* zs[4] = {"", "i", "-1", "-i"};
        if (zeta4 == 2) { s.insert(0, "-"); }
        else if (zeta4 != 0) append(zs[zeta4]);
        if (z_exp != 0) append("z^" + std::to_string(z_exp));
        if (s.empty() || s == "-") s += "1";
        return s;
    }
};

inline std::ostream& operator<<(std::ostream& os, const CharacterValue& v) { return os << v.str(); }

// |x| as an exact power of q: q^{-v(x)}.
inline CharacterValue abs_value(const FieldElement& x) {
    return CharacterValue::q_power(Rational(-x.v));
}

// A character of F^* trivial on squares: determined by a value on each unit
// square class (necessarily +-1) and a value on the uniformizer, by default
// the formal symbol z.
struct SquareClassCharacter {
    CharacterValue pi_value = CharacterValue::z_power(1);
    int unit_sign = 1;  // value on the non-residue class (class on 1 is 1)

    static SquareClassCharacter trivial() {
        SquareClassCharacter e;
        e.pi_value = CharacterValue::one();
        e.unit_sign = 1;
        return e;
    }
    static SquareClassCharacter unramified(CharacterValue on_pi = CharacterValue::z_power(1)) {
        SquareClassCharacter e;
        e.pi_value = on_pi;
        e.unit_sign = 1;
        return e;
    }
    static SquareClassCharacter with_unit_sign(int sign, CharacterValue on_pi = CharacterValue::z_power(1)) {
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("SquareClassCharacter: unit value must be +-1");
        SquareClassCharacter e;
        e.pi_value = on_pi;
        e.unit_sign = sign;
        return e;
    }

    CharacterValue operator()(const FieldElement& x) const {
        CharacterValue v = pi_value.pow(x.v);
        if (x.cls == 1 && unit_sign == -1) v = v * CharacterValue::from_sign(-1);
        return v;
    }
};

inline CharacterValue apply_character(const SquareClassCharacter& eta, const FieldElement& x) {
    return eta(x);
}

// Admissible values of gamma(pi) for a field: kappa^2 = (pi,pi)_2.
inline std::vector<int> valid_kappa_exponents(const LocalField& F) {
    int pipi = F.hilbert(FieldElement(1, 0), FieldElement(1, 0));
    if (pipi == 1) return {0, 2};  // kappa = +-1
    return {1, 3};                 // kappa = +-i
}

// The Weil factor gamma_psi at square-class resolution, for an unramified
// additive character over an odd-residue p-adic field: trivial on units,
// gamma(pi) = kappa with kappa^2 = (pi,pi)_2, extended multiplicatively via
// gamma(xy) = gamma(x) gamma(y) (x,y)_2.
class WeilFactor {
public:
    WeilFactor(const LocalField& F, int kappa_zeta4) : F_(F), kappa_(((kappa_zeta4 % 4) + 4) % 4) {
        if (F.is_real()) throw std::invalid_argument("WeilFactor: p-adic fields only");
        int pipi = F.hilbert(FieldElement(1, 0), FieldElement(1, 0));
        int kappa_sq = (2 * kappa_) % 4;  // exponent of kappa^2 in mu_4
        int pipi_exp = pipi == 1 ? 0 : 2;
        if (kappa_sq != pipi_exp)
            throw std::invalid_argument("WeilFactor: kappa^2 must equal (pi,pi)_2");
    }

    // "1" -> 0, "-1" -> 2, "i" -> 1, "-i" -> 3
    static int parse_kappa(const std::string& s) {
        if (s == "1") return 0;
        if (s == "i") return 1;
        if (s == "-1") return 2;
        if (s == "-i") return 3;
        throw std::invalid_argument("WeilFactor: gamma_pi must be one of 1, -1, i, -i");
    }

    int kappa_zeta4() const { return kappa_; }

    CharacterValue operator()(const FieldElement& x) const {
        if (x.v % 2 == 0) return CharacterValue::one();
        // gamma(pi^v u) = kappa * (pi,u)_2 for odd v
        int h = F_.hilbert(FieldElement(1, 0), FieldElement(0, x.cls));
        int e = (kappa_ + (h == 1 ? 0 : 2)) % 4;
        return CharacterValue::zeta(e);
    }

    CharacterValue pow(const FieldElement& x, long long e) const { return (*this)(x).pow(e); }

    const LocalField& field() const { return F_; }

private:
    LocalField F_;
    int kappa_;
};

}  // namespace gspin
