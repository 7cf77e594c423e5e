#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gspin {

// Dense integer polynomial in one variable q, coeffs[k] is the coefficient
// of q^k. Used as the building block of Laurent rational functions.
struct Poly {
    std::vector<long long> coeffs;  // trimmed: empty means 0

    Poly() = default;
    explicit Poly(std::vector<long long> c) : coeffs(std::move(c)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly({1}); }
    static Poly monomial(int deg, long long c = 1) {
        std::vector<long long> v(deg + 1, 0);
        v[deg] = c;
        return Poly(std::move(v));
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return coeffs.empty() ? -1 : int(coeffs.size()) - 1; }
    long long coeff(int k) const {
        return (k >= 0 && k < int(coeffs.size())) ? coeffs[k] : 0;
    }

    Poly operator+(const Poly& o) const {
        std::vector<long long> c(std::max(coeffs.size(), o.coeffs.size()), 0);
        for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
        for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] += o.coeffs[i];
        return Poly(std::move(c));
    }
    Poly operator-(const Poly& o) const {
        std::vector<long long> c(std::max(coeffs.size(), o.coeffs.size()), 0);
        for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
        for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] -= o.coeffs[i];
        return Poly(std::move(c));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<long long> c(coeffs.size() + o.coeffs.size() - 1, 0);
        for (size_t i = 0; i < coeffs.size(); ++i)
            for (size_t j = 0; j < o.coeffs.size(); ++j)
                c[i + j] += coeffs[i] * o.coeffs[j];
        return Poly(std::move(c));
    }
    bool operator==(const Poly& o) const { return coeffs == o.coeffs; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Exact division; throws if the division leaves a remainder.
    Poly divexact(const Poly& d) const {
        if (d.is_zero()) throw std::invalid_argument("Poly: division by zero");
        Poly r = *this;
        if (r.is_zero()) return Poly();
        if (r.degree() < d.degree()) throw std::invalid_argument("Poly: inexact division");
        std::vector<long long> qc(r.degree() - d.degree() + 1, 0);
        for (int k = r.degree() - d.degree(); r.degree() >= d.degree(); ) {
            long long lead = r.coeffs.back();
            if (lead % d.coeffs.back() != 0) throw std::invalid_argument("Poly: inexact division");
            long long f = lead / d.coeffs.back();
            k = r.degree() - d.degree();
            qc[k] = f;
            for (int i = 0; i <= d.degree(); ++i) r.coeffs[k + i] -= f * d.coeffs[i];
            r.trim();
            if (r.is_zero()) break;
        }
        if (!r.is_zero()) throw std::invalid_argument("Poly: inexact division");
        return Poly(std::move(qc));
    }
};

// Cyclotomic polynomial Phi_d(q), computed by exact division and cached.
inline const Poly& cyclotomic(int d) {
    static std::map<int, Poly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    Poly qd = Poly::monomial(d) - Poly::one();  // q^d - 1
    for (int e = 1; e < d; ++e)
        if (d % e == 0) qd = qd.divexact(cyclotomic(e));
    return cache.emplace(d, std::move(qd)).first->second;
}

// A Laurent polynomial term list: (coefficient, exponent) pairs, exponents
// strictly increasing. This is the expanded/serialized view.
using LaurentTerms = std::vector<std::pair<long long, long long>>;

// Rational function in q with integer coefficients, held in factored
// canonical form: sign * q^shift * prod_d Phi_d(q)^{e_d}. Every value this
// library produces is a product of binomials (1 - z q^m) with z = +-1, so
// the factored form is closed under the operations we need and cancellation
// is exact (cyclotomics are irreducible over Q).
class LaurentRational {
public:
    LaurentRational() : zero_(false), sign_(1), shift_(0) {}  // value 1

    static LaurentRational one() { return LaurentRational(); }
    static LaurentRational zero() {
        LaurentRational r;
        r.zero_ = true;
        return r;
    }
    // q^k
    static LaurentRational q_power(long long k) {
        LaurentRational r;
        r.shift_ = k;
        return r;
    }
    // 1 - zeta*q^m with zeta = +-1.  For m = 0 this is 0 (zeta=1) or 2 (unsupported).
    static LaurentRational one_minus(long long m, int zeta = +1) {
        if (zeta != 1 && zeta != -1) throw std::invalid_argument("one_minus: zeta must be +-1");
        if (m == 0) {
            if (zeta == 1) return zero();
            throw std::invalid_argument("one_minus: constant 2 not representable in factored form");
        }
        if (zeta == -1) {
            // 1 + q^m = (1 - q^{2m}) / (1 - q^m)
            return one_minus(2 * m) / one_minus(m);
        }
        LaurentRational r;
        long long k = m > 0 ? m : -m;
        for (long long d = 1; d <= k; ++d)
            if (k % d == 0) r.factors_[d] += 1;
        if (m > 0) {
            r.sign_ = -1;  // 1 - q^k = -(q^k - 1)
        } else {
            r.shift_ = m;  // 1 - q^{-k} = q^{-k} (q^k - 1)
        }
        return r;
    }

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && sign_ == 1 && shift_ == 0 && factors_.empty(); }

    LaurentRational operator*(const LaurentRational& o) const {
        if (zero_ || o.zero_) return zero();
        LaurentRational r = *this;
        r.sign_ *= o.sign_;
        r.shift_ += o.shift_;
        for (auto& [d, e] : o.factors_) {
            r.factors_[d] += e;
            if (r.factors_[d] == 0) r.factors_.erase(d);
        }
        return r;
    }
    LaurentRational operator/(const LaurentRational& o) const {
        if (o.zero_) throw std::invalid_argument("LaurentRational: division by zero");
        if (zero_) return zero();
        LaurentRational r = *this;
        r.sign_ *= o.sign_;
        r.shift_ -= o.shift_;
        for (auto& [d, e] : o.factors_) {
            r.factors_[d] -= e;
            if (r.factors_[d] == 0) r.factors_.erase(d);
        }
        return r;
    }
    LaurentRational& operator*=(const LaurentRational& o) { *this = *this * o; return *this; }
    LaurentRational& operator/=(const LaurentRational& o) { *this = *this / o; return *this; }

    // Canonical forms agree iff the values agree.
    bool operator==(const LaurentRational& o) const {
        if (zero_ != o.zero_) return false;
        if (zero_) return true;
        return sign_ == o.sign_ && shift_ == o.shift_ && factors_ == o.factors_;
    }
    bool operator!=(const LaurentRational& o) const { return !(*this == o); }

    // Independent equality route: cross-multiplication of the expanded
    // numerator and denominator polynomials.
    bool equals_cross(const LaurentRational& o) const {
        auto [an, ad, as] = expand_parts();
        auto [bn, bd, bs] = o.expand_parts();
        Poly lhs = an * bd;
        Poly rhs = bn * ad;
        long long sh = as - bs;
        if (sh >= 0) lhs = lhs * Poly::monomial(int(sh));
        else rhs = rhs * Poly::monomial(int(-sh));
        return lhs == rhs;
    }

    // Reduced numerator as Laurent terms (carries the q^shift and sign) and
    // denominator as a polynomial with nonzero constant term.
    LaurentTerms numerator_terms() const {
        auto [n, d, s] = expand_parts();
        (void)d;
        LaurentTerms t;
        for (int k = 0; k <= n.degree(); ++k)
            if (n.coeff(k) != 0) t.push_back({n.coeff(k), k + s});
        return t;
    }
    LaurentTerms denominator_terms() const {
        auto [n, d, s] = expand_parts();
        (void)n; (void)s;
        LaurentTerms t;
        for (int k = 0; k <= d.degree(); ++k)
            if (d.coeff(k) != 0) t.push_back({d.coeff(k), k});
        return t;
    }

    // Pure monomial test: value equals c*q^k for integer c.
    bool is_q_power(long long& k_out) const {
        if (zero_ || !factors_.empty() || sign_ != 1) return false;
        k_out = shift_;
        return true;
    }

    std::string str() const {
        if (zero_) return "0";
        std::ostringstream os;
        auto emit = [&os](const LaurentTerms& terms) {
            bool first = true;
            for (auto& [c, e] : terms) {
                if (!first) os << (c >= 0 ? " + " : " - ");
                else if (c < 0) os << "-";
                long long a = c < 0 ? -c : c;
                if (e == 0) os << a;
                else {
                    if (a != 1) os << a << "*";
                    os << "q^" << e;
                }
                first = false;
            }
            if (first) os << "0";
        };
        LaurentTerms den = denominator_terms();
        bool den_is_one = den.size() == 1 && den[0].first == 1 && den[0].second == 0;
        if (!den_is_one) os << "(";
        emit(numerator_terms());
        if (!den_is_one) {
            os << ")/(";
            emit(den);
            os << ")";
        }
        return os.str();
    }

private:
    // Returns (numerator poly, denominator poly, shift): the value is
    // q^shift * num / den with den(0) != 0 and gcd(num, den) = 1.
    std::tuple<Poly, Poly, long long> expand_parts() const {
        if (zero_) return {Poly::zero(), Poly::one(), 0};
        Poly num = Poly::one();
        if (sign_ < 0) num = Poly({-1});
        Poly den = Poly::one();
        for (auto& [d, e] : factors_) {
            const Poly& phi = cyclotomic(int(d));
            for (int i = 0; i < (e > 0 ? e : -e); ++i) {
                if (e > 0) num = num * phi;
                else den = den * phi;
            }
        }
        return {num, den, shift_};
    }

    bool zero_ = false;
    int sign_ = 1;
    long long shift_ = 0;
    std::map<long long, int> factors_;  // cyclotomic index -> exponent
};

}  // namespace gspin
