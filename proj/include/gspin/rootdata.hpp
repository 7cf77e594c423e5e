#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspin/localfield.hpp"

namespace gspin {

// Root datum of G_n = GSpin(2n+1) sitting inside the simply connected group
// of type B_{n+1}.  Roots of G_n live on the coordinates eps_2..eps_{n+1};
// the ambient index 1 belongs to the similitude direction only.  The torus
// T_{n+1} has n+1 simple-coroot coordinates alpha_1^vee..alpha_{n+1}^vee.

enum class RootKind { EminusE, EplusE, E };

struct Root {
    RootKind kind;
    int i = 0;  // ambient index, 2 <= i <= n+1
    int j = 0;  // second index for the +- kinds, i < j <= n+1

    Root() = default;
    Root(RootKind k, int i_, int j_ = 0) : kind(k), i(i_), j(j_) {
        if (k != RootKind::E && !(i < j)) throw std::invalid_argument("Root: need i < j");
    }
    static Root eminus(int i, int j) { return Root(RootKind::EminusE, i, j); }
    static Root eplus(int i, int j) { return Root(RootKind::EplusE, i, j); }
    static Root eshort(int i) { return Root(RootKind::E, i); }

    bool operator==(const Root& o) const { return kind == o.kind && i == o.i && j == o.j; }
    bool operator!=(const Root& o) const { return !(*this == o); }
    bool operator<(const Root& o) const {
        if (kind != o.kind) return int(kind) < int(o.kind);
        if (i != o.i) return i < o.i;
        return j < o.j;
    }

    bool is_long() const { return kind != RootKind::E; }
    bool involves(int idx) const { return i == idx || (kind != RootKind::E && j == idx); }

    std::string str() const {
        switch (kind) {
            case RootKind::EminusE: return "e" + std::to_string(i) + "-e" + std::to_string(j);
            case RootKind::EplusE:  return "e" + std::to_string(i) + "+e" + std::to_string(j);
            default:                return "e" + std::to_string(i);
        }
    }
};

inline std::ostream& operator<<(std::ostream& os, const Root& r) { return os << r.str(); }

// l(alpha): 2 for long roots when n > 1, else 1.
inline int length_tag(const Root& r, int n) {
    return (r.is_long() && n > 1) ? 2 : 1;
}

inline std::vector<Root> positive_roots(int n) {
    if (n < 0) throw std::invalid_argument("positive_roots: n >= 0 required");
    std::vector<Root> out;
    for (int i = 2; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) out.push_back(Root::eminus(i, j));
    for (int i = 2; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) out.push_back(Root::eplus(i, j));
    for (int i = 2; i <= n + 1; ++i) out.push_back(Root::eshort(i));
    return out;
}

// eps-coordinates of a root over the ambient indices 1..n+1 (entry 0 unused).
inline std::vector<int> eps_coeffs(const Root& r, int n) {
    std::vector<int> c(n + 2, 0);
    c[r.i] += 1;
    if (r.kind == RootKind::EminusE) c[r.j] -= 1;
    if (r.kind == RootKind::EplusE) c[r.j] += 1;
    return c;
}

// Cartan pairing <alpha, alpha_j^vee> for the ambient type-B rank n+1 datum:
// the coroot of a long simple root alpha_j (j <= n) pairs as c_j - c_{j+1},
// the short coroot alpha_{n+1}^vee as 2 c_{n+1}.
inline long long pairing(const Root& alpha, int j, int n) {
    const int N = n + 1;
    if (j < 1 || j > N) throw std::out_of_range("pairing: coroot index out of range");
    std::vector<int> c = eps_coeffs(alpha, n);
    if (j < N) return c[j] - c[j + 1];
    return 2LL * c[N];
}

// Ambient Cartan matrix entry <alpha_i, alpha_j^vee>.
inline long long cartan(int i, int j, int n) {
    const int N = n + 1;
    if (i < 1 || i > N || j < 1 || j > N) throw std::out_of_range("cartan: index out of range");
    if (i == j) return 2;
    if (i + 1 == j) return (j == N) ? -2 : -1;
    if (j + 1 == i) return -1;
    return 0;
}

// Expansion of a positive root in the ambient simple roots.
inline std::vector<int> simple_coefficients(const Root& r, int n) {
    const int N = n + 1;
    std::vector<int> m(N + 1, 0);
    switch (r.kind) {
        case RootKind::EminusE:
            for (int l = r.i; l < r.j; ++l) m[l] = 1;
            break;
        case RootKind::E:
            for (int l = r.i; l <= N; ++l) m[l] = 1;
            break;
        case RootKind::EplusE:
            for (int l = r.i; l < r.j; ++l) m[l] += 1;
            for (int l = r.j; l <= N; ++l) m[l] += 2;
            break;
    }
    return m;
}

// <alpha, beta^vee> for two roots, via the Euclidean form on eps-coordinates.
inline long long pairing_roots(const Root& alpha, const Root& beta, int n) {
    std::vector<int> a = eps_coeffs(alpha, n), b = eps_coeffs(beta, n);
    long long dot = 0, bb = 0;
    for (size_t k = 0; k < a.size(); ++k) {
        dot += (long long)a[k] * b[k];
        bb += (long long)b[k] * b[k];
    }
    return 2 * dot / bb;
}

enum class Basis { ALPHA, CONVENIENT };

// A point of T_{n+1}(F) at square-class resolution.  ALPHA coordinates are
// t_1..t_{n+1} along the simple coroots; CONVENIENT coordinates are
// a_1..a_n (along the GL_n cocharacters eta_i^vee) followed by t_1 (along
// beta_1^vee).  Both store n+1 field elements.
struct TorusElement {
    Basis basis = Basis::ALPHA;
    int n = 0;
    std::vector<FieldElement> c;

    TorusElement() = default;
    TorusElement(Basis b, int n_, std::vector<FieldElement> coords) : basis(b), n(n_), c(std::move(coords)) {
        if ((int)c.size() != n + 1) throw std::invalid_argument("TorusElement: expected n+1 coordinates");
    }

    static TorusElement identity(int n, Basis b = Basis::ALPHA) {
        return TorusElement(b, n, std::vector<FieldElement>(n + 1, FieldElement::one()));
    }
    // alpha_k^vee(x), 1 <= k <= n+1
    static TorusElement coroot(int n, int k, const FieldElement& x) {
        TorusElement t = identity(n, Basis::ALPHA);
        if (k < 1 || k > n + 1) throw std::out_of_range("TorusElement::coroot: bad index");
        t.c[k - 1] = x;
        return t;
    }
    // eta_k^vee(a), 1 <= k <= n
    static TorusElement eta(int n, int k, const FieldElement& a) {
        TorusElement t = identity(n, Basis::CONVENIENT);
        if (k < 1 || k > n) throw std::out_of_range("TorusElement::eta: bad index");
        t.c[k - 1] = a;
        return t;
    }
    // beta_1^vee(t1)
    static TorusElement beta1(int n, const FieldElement& t1) {
        TorusElement t = identity(n, Basis::CONVENIENT);
        t.c[n] = t1;
        return t;
    }
    static TorusElement convenient(int n, std::vector<FieldElement> a, const FieldElement& t1) {
        if ((int)a.size() != n) throw std::invalid_argument("TorusElement: expected n GL coordinates");
        a.push_back(t1);
        return TorusElement(Basis::CONVENIENT, n, std::move(a));
    }

    TorusElement operator*(const TorusElement& o) const {
        if (n != o.n) throw std::invalid_argument("TorusElement: rank mismatch");
        if (basis != o.basis) throw std::invalid_argument("TorusElement: convert to a common basis first");
        std::vector<FieldElement> r(c.size());
        for (size_t k = 0; k < c.size(); ++k) r[k] = c[k] * o.c[k];
        return TorusElement(basis, n, std::move(r));
    }
    TorusElement inverse() const {
        std::vector<FieldElement> r(c.size());
        for (size_t k = 0; k < c.size(); ++k) r[k] = c[k].inverse();
        return TorusElement(basis, n, std::move(r));
    }
    bool is_identity() const {
        for (auto& x : c)
            if (!x.is_one()) return false;
        return true;
    }
    bool operator==(const TorusElement& o) const { return basis == o.basis && n == o.n && c == o.c; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }
};

// Change of coordinates: the image of prod eta_i^vee(a_i) beta_1^vee(t1)
// has alpha-coordinates t_i = (prod_{j>=i} a_j^{-1}) t1^2 for i <= n and
// t_{n+1} = t1.
inline TorusElement to_alpha(const TorusElement& t) {
    if (t.basis == Basis::ALPHA) return t;
    const int n = t.n;
    std::vector<FieldElement> r(n + 1, FieldElement::one());
    const FieldElement t1 = t.c[n];
    FieldElement tail = FieldElement::one();  // prod_{j>=i} a_j^{-1}, built from the right
    for (int i = n; i >= 1; --i) {
        tail = tail * t.c[i - 1].inverse();
        r[i - 1] = tail * t1.square();
    }
    r[n] = t1;
    return TorusElement(Basis::ALPHA, n, std::move(r));
}

inline TorusElement to_convenient(const TorusElement& t) {
    if (t.basis == Basis::CONVENIENT) return t;
    const int n = t.n;
    std::vector<FieldElement> r(n + 1, FieldElement::one());
    for (int i = 1; i < n; ++i) r[i - 1] = t.c[i] * t.c[i - 1].inverse();  // a_i = t_{i+1}/t_i
    if (n >= 1) r[n - 1] = t.c[n].square() * t.c[n - 1].inverse();         // a_n = t_{n+1}^2/t_n
    r[n] = t.c[n];
    return TorusElement(Basis::CONVENIENT, n, std::move(r));
}

inline TorusElement convert_coords(const TorusElement& t) {
    return t.basis == Basis::ALPHA ? to_convenient(t) : to_alpha(t);
}

// Conjugation by the longest Weyl element, in convenient coordinates:
// a_i -> a_i^{-1} and t1 -> (prod a_i)^{-1} t1.
inline TorusElement w0_conjugate(const TorusElement& t) {
    TorusElement s = to_convenient(t);
    const int n = s.n;
    FieldElement prod = FieldElement::one();
    for (int i = 0; i < n; ++i) prod = prod * s.c[i];
    std::vector<FieldElement> r(n + 1);
    for (int i = 0; i < n; ++i) r[i] = s.c[i].inverse();
    r[n] = prod.inverse() * s.c[n];
    return TorusElement(Basis::CONVENIENT, n, std::move(r));
}

// The same conjugation read off in alpha coordinates:
// t_i -> t_i^{-1} t_1^2 (i <= n), t_{n+1} -> t_{n+1}^{-1} t_1.
inline TorusElement w0_conjugate_alpha(const TorusElement& t) {
    TorusElement s = to_alpha(t);
    const int n = s.n;
    if (n == 0) return s;  // W_0 is trivial
    std::vector<FieldElement> r(n + 1);
    const FieldElement t1 = s.c[0];
    for (int i = 0; i < n; ++i) r[i] = s.c[i].inverse() * t1.square();
    r[n] = s.c[n].inverse() * t1;
    return TorusElement(Basis::ALPHA, n, std::move(r));
}

// The canonical character Upsilon of G_n.  In convenient coordinates
// Upsilon(t) = t1^{-2} prod a_i; in alpha coordinates it is t_1^{-1} for
// n >= 1 and t_1^{-2} in the degenerate rank-0 case, where alpha_1 is the
// short root and its coroot hits eps_1 twice.
inline FieldElement upsilon(const TorusElement& t) {
    if (t.basis == Basis::ALPHA) return t.n == 0 ? t.c[0].square().inverse() : t.c[0].inverse();
    FieldElement r = t.c[t.n].square().inverse();
    for (int i = 0; i < t.n; ++i) r = r * t.c[i];
    return r;
}

// Modulus character of the Borel subgroup: prod |a_i|^{2(n-i)+1}.
inline CharacterValue delta_B(const TorusElement& t) {
    TorusElement s = to_convenient(t);
    Rational e(0);
    for (int i = 1; i <= s.n; ++i) e += Rational(-s.c[i - 1].v * (2LL * (s.n - i) + 1));
    return CharacterValue::q_power(e);
}

// The coroot of a positive root as a word in the simple coroots, evaluated
// at x:  (e_i - e_j)^vee(x) sets t_l = x for i <= l < j;  e_i^vee(x) sets
// t_l = x^2 for i <= l <= n and t_{n+1} = x;  (e_i + e_j)^vee(x) is the
// componentwise product of the two.
inline TorusElement coroot_word(const Root& alpha, const FieldElement& x, int n) {
    const int N = n + 1;
    std::vector<FieldElement> t(N, FieldElement::one());
    auto mul_range_minus = [&](int i, int j, const FieldElement& y) {
        for (int l = i; l < j; ++l) t[l - 1] = t[l - 1] * y;
    };
    auto mul_short = [&](int i, const FieldElement& y) {
        for (int l = i; l <= n; ++l) t[l - 1] = t[l - 1] * y.square();
        t[N - 1] = t[N - 1] * y;
    };
    switch (alpha.kind) {
        case RootKind::EminusE: mul_range_minus(alpha.i, alpha.j, x); break;
        case RootKind::E:       mul_short(alpha.i, x); break;
        case RootKind::EplusE:
            mul_range_minus(alpha.i, alpha.j, x);
            mul_short(alpha.j, x);
            break;
    }
    return TorusElement(Basis::ALPHA, n, std::move(t));
}

// Standard Levi embedding GL_k x G_{n-k} -> M_k < G_n on torus points.
// b has the k coordinates of T_{GL_k}, h the n-k+1 beta-coordinates of
// T_{n-k+1}; the result is in alpha coordinates.
inline TorusElement embed_levi(int n, int k, const std::vector<FieldElement>& b,
                               const std::vector<FieldElement>& h) {
    if (k < 0 || k > n) throw std::out_of_range("embed_levi: need 0 <= k <= n");
    if ((int)b.size() != k) throw std::invalid_argument("embed_levi: GL part needs k coordinates");
    if ((int)h.size() != n - k + 1) throw std::invalid_argument("embed_levi: G' part needs n-k+1 coordinates");
    std::vector<FieldElement> t(n + 1, FieldElement::one());
    // GL_k: prod eta_i^vee(b_i) -> prod_{i<=k} alpha_i^vee(prod_{j=i..k} b_j^{-1})
    FieldElement tail = FieldElement::one();
    for (int i = k; i >= 1; --i) {
        tail = tail * b[i - 1].inverse();
        t[i - 1] = t[i - 1] * tail;
    }
    if (k < n) {
        for (int i = 1; i <= k; ++i) t[i - 1] = t[i - 1] * h[0];
        for (int i = 1; i <= n - k + 1; ++i) t[k + i - 1] = t[k + i - 1] * h[i - 1];
    } else {
        for (int i = 1; i <= n; ++i) t[i - 1] = t[i - 1] * h[0].square();
        t[n] = t[n] * h[0];
    }
    return TorusElement(Basis::ALPHA, n, std::move(t));
}

constexpr int kWeylRankBound = 6;

// Signed permutation of {2,...,n+1}: w(eps_{2+i}) = sgn[i] * eps_{2+img[i]}.
struct WeylElement {
    int n = 0;
    std::vector<int> img;
    std::vector<int> sgn;

    static WeylElement identity(int n) {
        WeylElement w;
        w.n = n;
        w.img.resize(n);
        w.sgn.assign(n, 1);
        std::iota(w.img.begin(), w.img.end(), 0);
        return w;
    }
    // w_{alpha_k} for an ambient simple index 2 <= k <= n+1
    static WeylElement simple(int n, int k) {
        if (k < 2 || k > n + 1) throw std::out_of_range("WeylElement::simple: index 1 is ambient-only");
        WeylElement w = identity(n);
        if (k <= n) std::swap(w.img[k - 2], w.img[k - 1]);
        else w.sgn[n - 1] = -1;
        return w;
    }
    static WeylElement longest(int n) {
        WeylElement w = identity(n);
        w.sgn.assign(n, -1);
        return w;
    }

    // (w * o) acts as w after o.
    WeylElement operator*(const WeylElement& o) const {
        WeylElement r = identity(n);
        for (int i = 0; i < n; ++i) {
            r.img[i] = img[o.img[i]];
            r.sgn[i] = o.sgn[i] * sgn[o.img[i]];
        }
        return r;
    }
    WeylElement inverse() const {
        WeylElement r = identity(n);
        for (int i = 0; i < n; ++i) {
            r.img[img[i]] = i;
            r.sgn[img[i]] = sgn[i];
        }
        return r;
    }
    bool is_identity() const {
        for (int i = 0; i < n; ++i)
            if (img[i] != i || sgn[i] != 1) return false;
        return true;
    }
    bool operator==(const WeylElement& o) const { return n == o.n && img == o.img && sgn == o.sgn; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    // Image of a positive root: the positive root w(alpha) is proportional
    // to, together with the sign.
    std::pair<Root, int> apply(const Root& alpha) const {
        auto map_idx = [this](int a) { return std::pair<int, int>(2 + img[a - 2], sgn[a - 2]); };
        if (alpha.kind == RootKind::E) {
            auto [a, s] = map_idx(alpha.i);
            return {Root::eshort(a), s};
        }
        auto [a, sa] = map_idx(alpha.i);
        auto [b, sb] = map_idx(alpha.j);
        int s2 = (alpha.kind == RootKind::EminusE) ? -sb : sb;
        // image is sa*eps_a + s2*eps_b with a != b
        if (a > b) { std::swap(a, b); std::swap(sa, s2); }
        if (sa == s2) return {Root::eplus(a, b), sa};
        return {Root::eminus(a, b), sa};
    }

    long long length() const {
        long long l = 0;
        for (const Root& alpha : positive_roots(n))
            if (apply(alpha).second < 0) ++l;
        return l;
    }

    // Reduced word in ambient simple indices (greedy descent from the right).
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        WeylElement w = *this;
        while (!w.is_identity()) {
            bool found = false;
            for (int k = 2; k <= n + 1; ++k) {
                Root ak = (k <= n) ? Root::eminus(k, k + 1) : Root::eshort(n + 1);
                if (w.apply(ak).second < 0) {
                    word.push_back(k);
                    w = w * simple(n, k);
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("reduced_word: no descent found");
        }
        std::reverse(word.begin(), word.end());
        return word;
    }
};

inline std::vector<WeylElement> weyl_enumerate(int n, int rank_bound = kWeylRankBound) {
    if (n > rank_bound) throw std::out_of_range("weyl_enumerate: rank above bound");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<WeylElement> out;
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            WeylElement w;
            w.n = n;
            w.img = perm;
            w.sgn.resize(n);
            for (int i = 0; i < n; ++i) w.sgn[i] = (mask >> i) & 1 ? -1 : 1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline long long weyl_length(const WeylElement& w) { return w.length(); }

inline std::pair<Root, int> weyl_apply(const WeylElement& w, const Root& alpha) { return w.apply(alpha); }

}  // namespace gspin
