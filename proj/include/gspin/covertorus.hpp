#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gspin/localfield.hpp"
#include "gspin/rootdata.hpp"

namespace gspin {

// ---------------------------------------------------------------------------
// Closed-form cocycle values on the torus
// ---------------------------------------------------------------------------

struct SigmaFactor {
    std::string label;
    int value;
};

// sigma(t, t') on T_{n+1}(F) in alpha coordinates:
//   c(t_{n+1}^2, t'_{n+1}) c(t_n, t'_{n+1}^{-2})
//     prod_{i<=n} c(t_i, t'_i) prod_{i<=n-1} c(t_i, t'_{i+1}^{-1}).
inline int sigma_torus_factors(const LocalField& F, const TorusElement& ta, const TorusElement& tb,
                               std::vector<SigmaFactor>* breakdown = nullptr) {
    if (ta.n != tb.n) throw std::invalid_argument("sigma_torus: rank mismatch");
    const TorusElement t = to_alpha(ta), u = to_alpha(tb);
    const int n = t.n, N = n + 1;
    int s = 1;
    auto emit = [&](const std::string& label, int v) {
        s *= v;
        if (breakdown) breakdown->push_back({label, v});
    };
    emit("c(t" + std::to_string(N) + "^2, t'" + std::to_string(N) + ")",
         F.hilbert(t.c[N - 1].square(), u.c[N - 1]));
    if (n >= 1)
        emit("c(t" + std::to_string(n) + ", t'" + std::to_string(N) + "^-2)",
             F.hilbert(t.c[n - 1], u.c[N - 1].pow(-2)));
    for (int i = 1; i <= n; ++i)
        emit("c(t" + std::to_string(i) + ", t'" + std::to_string(i) + ")",
             F.hilbert(t.c[i - 1], u.c[i - 1]));
    for (int i = 1; i + 1 <= n; ++i)
        emit("c(t" + std::to_string(i) + ", t'" + std::to_string(i + 1) + "^-1)",
             F.hilbert(t.c[i - 1], u.c[i].inverse()));
    return s;
}

inline int sigma_torus(const LocalField& F, const TorusElement& t, const TorusElement& u) {
    return sigma_torus_factors(F, t, u, nullptr);
}

// GL_k torus cocycle: c(det b, det b') prod_{i<j} c(b_i, b'_j)^{-1}.
inline int sigma_gl(const LocalField& F, const std::vector<FieldElement>& b,
                    const std::vector<FieldElement>& b2) {
    if (b.size() != b2.size()) throw std::invalid_argument("sigma_gl: size mismatch");
    const int k = int(b.size());
    FieldElement det = FieldElement::one(), det2 = FieldElement::one();
    for (auto& x : b) det = det * x;
    for (auto& x : b2) det2 = det2 * x;
    int s = F.hilbert(det, det2);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) s *= F.hilbert(b[i], b2[j]);  // values +-1, inverse = itself
    return s;
}

// sigma in convenient coordinates (the value does not depend on the
// beta_1^vee parts).
inline int sigma_convenient(const LocalField& F, const TorusElement& xa, const TorusElement& xb) {
    if (xa.n != xb.n) throw std::invalid_argument("sigma_convenient: rank mismatch");
    const TorusElement x = to_convenient(xa), y = to_convenient(xb);
    std::vector<FieldElement> a(x.c.begin(), x.c.begin() + x.n);
    std::vector<FieldElement> b(y.c.begin(), y.c.begin() + y.n);
    return sigma_gl(F, a, b);
}

// Commutator of lifts of commuting torus elements:
// [b, b']_sigma = prod_i c(b_i, b'_i) * c(prod b_i, prod b'_i).
inline int commutator(const LocalField& F, const TorusElement& ba, const TorusElement& bb) {
    if (ba.n != bb.n) throw std::invalid_argument("commutator: rank mismatch");
    const TorusElement b = to_convenient(ba), b2 = to_convenient(bb);
    int s = 1;
    FieldElement p1 = FieldElement::one(), p2 = FieldElement::one();
    for (int i = 0; i < b.n; ++i) {
        s *= F.hilbert(b.c[i], b2.c[i]);
        p1 = p1 * b.c[i];
        p2 = p2 * b2.c[i];
    }
    return s * F.hilbert(p1, p2);
}

// sigma between the embedded GL_k and G_{n-k} torus parts of the Levi M_k:
// sigma(a, t) = 1 and sigma(t, a) = c(t_1, det a^{-1}) for k < n,
// c(t_1^2, det a^{-1}) for k = n.
inline std::pair<int, int> sigma_mixed(const LocalField& F, int n, int k,
                                       const std::vector<FieldElement>& a,
                                       const std::vector<FieldElement>& t) {
    if (k < 0 || k > n) throw std::out_of_range("sigma_mixed: need 0 <= k <= n");
    if ((int)a.size() != k || (int)t.size() != n - k + 1)
        throw std::invalid_argument("sigma_mixed: coordinate counts");
    FieldElement det = FieldElement::one();
    for (auto& x : a) det = det * x;
    FieldElement t1 = t[0];
    int st_a = (k == n) ? F.hilbert(t1.square(), det.inverse()) : F.hilbert(t1, det.inverse());
    return {1, st_a};
}

// Block compatibility on M_k torus points:
// sigma(bh, b'h') = sigma_GL(b, b') sigma_{G'_{n-k+1}}(h, h') c(Upsilon(h), det b').
inline int block_sigma(const LocalField& F, int n, int k, const std::vector<FieldElement>& b,
                       const std::vector<FieldElement>& h, const std::vector<FieldElement>& b2,
                       const std::vector<FieldElement>& h2) {
    if (k <= 0 || k > n) throw std::out_of_range("block_sigma: need 0 < k <= n");
    if ((int)b.size() != k || (int)b2.size() != k) throw std::invalid_argument("block_sigma: GL coordinates");
    const int m = n - k;
    if ((int)h.size() != m + 1 || (int)h2.size() != m + 1)
        throw std::invalid_argument("block_sigma: G' coordinates");
    TorusElement th(Basis::ALPHA, m, h), th2(Basis::ALPHA, m, h2);
    int s = sigma_gl(F, b, b2) * sigma_torus(F, th, th2);
    FieldElement det2 = FieldElement::one();
    for (auto& x : b2) det2 = det2 * x;
    return s * F.hilbert(upsilon(th), det2);
}

// ---------------------------------------------------------------------------
// The lifted torus
// ---------------------------------------------------------------------------

// zeta * s(t) for the chosen section s; elements multiply through the
// closed-form cocycle.
struct CoverTorusElement {
    TorusElement t;
    int phase = 1;

    CoverTorusElement() = default;
    CoverTorusElement(TorusElement t_, int phase_) : t(to_alpha(t_)), phase(phase_) {
        if (phase != 1 && phase != -1) throw std::invalid_argument("CoverTorusElement: phase must be +-1");
    }
    static CoverTorusElement section(const TorusElement& t) { return CoverTorusElement(t, 1); }

    bool operator==(const CoverTorusElement& o) const { return phase == o.phase && t == o.t; }
    bool operator!=(const CoverTorusElement& o) const { return !(*this == o); }
};

inline CoverTorusElement multiply(const LocalField& F, const CoverTorusElement& x, const CoverTorusElement& y) {
    return CoverTorusElement(x.t * y.t, x.phase * y.phase * sigma_torus(F, x.t, y.t));
}

inline CoverTorusElement inverse(const LocalField& F, const CoverTorusElement& x) {
    TorusElement ti = x.t.inverse();
    return CoverTorusElement(ti, x.phase * sigma_torus(F, x.t, ti));
}

// ---------------------------------------------------------------------------
// Word rewriting in the cover along the Steinberg generator relations
// ---------------------------------------------------------------------------

namespace section_words {

// c_alpha for an ambient simple index: the Steinberg symbol itself on long
// simple roots (i <= n, n > 0), the squared symbol (trivial for mu_2) on the
// short root alpha_{n+1} and in the degenerate rank-0 case.
inline int c_alpha(const LocalField& F, int n, int i, const FieldElement& x, const FieldElement& y) {
    if (n > 0 && i <= n) return F.hilbert(x, y);
    return F.hilbert(x.square(), y);
}

struct Factor {
    int idx;  // ambient simple index 1..n+1
    FieldElement x;
};

// A word prod_k alpha_{idx_k}^vee*(x_k) together with an accumulated mu_2
// phase in front.
struct Word {
    int n = 0;
    int phase = 1;
    std::vector<Factor> f;
};

// Rewrites the word into the canonical strictly descending index order,
// merging equal indices, using the torus relations
//   a*(x) a*(y)  = c_alpha(x,y) a*(xy)
//   a*(x) b*(y)  = c_alpha_a(x, y^{<a,b^vee>}) b*(y) a*(x).
inline void normalize(const LocalField& F, Word& w) {
    // drop trivial factors up front
    auto drop = [&]() {
        std::vector<Factor> kept;
        kept.reserve(w.f.size());
        for (auto& fac : w.f)
            if (!fac.x.is_one()) kept.push_back(fac);
        w.f.swap(kept);
    };
    drop();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k + 1 < w.f.size(); ++k) {
            Factor& a = w.f[k];
            Factor& b = w.f[k + 1];
            if (a.idx == b.idx) {
                w.phase *= c_alpha(F, w.n, a.idx, a.x, b.x);
                a.x = a.x * b.x;
                w.f.erase(w.f.begin() + k + 1);
                if (a.x.is_one()) w.f.erase(w.f.begin() + k);
                changed = true;
                break;
            }
            if (a.idx < b.idx) {
                long long m = cartan(a.idx, b.idx, w.n);
                w.phase *= c_alpha(F, w.n, a.idx, a.x, b.x.pow(m));
                std::swap(a, b);
                changed = true;
                break;
            }
        }
    }
}

// Canonical word of the section on the torus:
// s(prod alpha_i^vee(t_i)) = alpha_{n+1}^vee*(t_{n+1}) ... alpha_1^vee*(t_1)
//                            * prod_i c_alpha_i(t_i, t_i).
inline Word section_word(const LocalField& F, const TorusElement& ta) {
    TorusElement t = to_alpha(ta);
    Word w;
    w.n = t.n;
    for (int i = t.n + 1; i >= 1; --i)
        if (!t.c[i - 1].is_one()) w.f.push_back({i, t.c[i - 1]});
    for (int i = 1; i <= t.n + 1; ++i) w.phase *= c_alpha(F, t.n, i, t.c[i - 1], t.c[i - 1]);
    return w;
}

// Reads a normalized word as zeta * s(t).
inline CoverTorusElement read_off(const LocalField& F, const Word& w) {
    TorusElement t = TorusElement::identity(w.n, Basis::ALPHA);
    for (auto& fac : w.f) {
        if (!t.c[fac.idx - 1].is_one()) throw std::logic_error("read_off: word not normalized");
        t.c[fac.idx - 1] = fac.x;
    }
    int corr = 1;
    for (int i = 1; i <= w.n + 1; ++i) corr *= c_alpha(F, w.n, i, t.c[i - 1], t.c[i - 1]);
    return CoverTorusElement(t, w.phase * corr);
}

// sigma computed through the generator relations alone; an independent route
// to the closed form of sigma_torus.
inline int sigma_via_section(const LocalField& F, const TorusElement& t, const TorusElement& u) {
    Word w = section_word(F, t);
    Word w2 = section_word(F, u);
    w.f.insert(w.f.end(), w2.f.begin(), w2.f.end());
    w.phase *= w2.phase;
    normalize(F, w);
    CoverTorusElement r = read_off(F, w);
    if (r.t != to_alpha(t) * to_alpha(u)) throw std::logic_error("sigma_via_section: coordinate drift");
    return r.phase;
}

}  // namespace section_words

// s(w_alpha) x s(w_alpha)^{-1} for a simple root of G_n given by its ambient
// index 2 <= k <= n+1, computed by expanding the section word and rewriting:
// each torus generator conjugates by
//   w_a* b^vee*(x) w_a*^{-1} = a^vee*(x^{-<a,b^vee>}) b^vee*(x).
inline CoverTorusElement conjugate_by_simple(const LocalField& F, int k, const CoverTorusElement& x) {
    const int n = x.t.n;
    if (k < 2 || k > n + 1)
        throw std::invalid_argument("conjugate_by_simple: ambient index 1 is not a root of G_n");
    section_words::Word w;
    w.n = n;
    w.phase = x.phase;
    TorusElement t = to_alpha(x.t);
    for (int i = n + 1; i >= 1; --i) {
        if (t.c[i - 1].is_one()) continue;
        long long m = cartan(k, i, n);
        w.f.push_back({k, t.c[i - 1].pow(-m)});
        w.f.push_back({i, t.c[i - 1]});
    }
    for (int i = 1; i <= n + 1; ++i)
        w.phase *= section_words::c_alpha(F, n, i, t.c[i - 1], t.c[i - 1]);
    section_words::normalize(F, w);
    return section_words::read_off(F, w);
}

inline CoverTorusElement conjugate_by_simple(const LocalField& F, const Root& alpha, const CoverTorusElement& x) {
    const int n = x.t.n;
    bool is_simple = (alpha.kind == RootKind::EminusE && alpha.j == alpha.i + 1) ||
                     (alpha.kind == RootKind::E && alpha.i == n + 1);
    if (!is_simple) throw std::invalid_argument("conjugate_by_simple: root is not simple");
    return conjugate_by_simple(F, alpha.kind == RootKind::E ? n + 1 : alpha.i, x);
}

// Conjugation by s(w_alpha)^{-1} = s(w_alpha) alpha^vee*(-1) (double cover).
inline CoverTorusElement conjugate_by_simple_inverse(const LocalField& F, int k, const CoverTorusElement& x) {
    const int n = x.t.n;
    if (k < 2 || k > n + 1)
        throw std::invalid_argument("conjugate_by_simple_inverse: ambient index 1 is not a root of G_n");
    FieldElement minus_one = F.is_real() ? FieldElement(0, 1)
                                         : FieldElement(0, F.p() % 4 == 3 ? 1 : 0);
    TorusElement h = TorusElement::coroot(n, k, minus_one);
    // conjugation of a lifted torus element by a lifted torus element is the
    // sigma-commutator
    int comm = sigma_torus(F, h, x.t) * sigma_torus(F, x.t, h);
    CoverTorusElement y(x.t, x.phase * comm);
    return conjugate_by_simple(F, k, y);
}

// Conjugation by s(w) for a reduced word in ambient simple indices
// (rightmost letter acts first).
inline CoverTorusElement conjugate_by_word(const LocalField& F, const std::vector<int>& word,
                                           const CoverTorusElement& x) {
    CoverTorusElement y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = conjugate_by_simple(F, *it, y);
    return y;
}

// ---------------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------------

inline std::vector<FieldElement> enumerate_field_elements(const LocalField& F,
                                                          const std::vector<long long>& valuations) {
    std::vector<FieldElement> out;
    for (long long v : valuations) {
        if (F.is_real() && v != 0) continue;
        for (int cls = 0; cls < F.num_unit_classes(); ++cls) out.push_back(FieldElement(v, cls));
    }
    return out;
}

inline std::vector<TorusElement> enumerate_torus(const LocalField& F, int n, Basis basis,
                                                 const std::vector<long long>& valuations) {
    std::vector<FieldElement> coords = enumerate_field_elements(F, valuations);
    std::vector<TorusElement> out;
    std::vector<size_t> odo(n + 1, 0);
    while (true) {
        std::vector<FieldElement> c(n + 1);
        for (int i = 0; i <= n; ++i) c[i] = coords[odo[i]];
        out.push_back(TorusElement(basis, n, std::move(c)));
        int i = 0;
        for (; i <= n; ++i) {
            if (++odo[i] < coords.size()) break;
            odo[i] = 0;
        }
        if (i > n) break;
    }
    return out;
}

inline std::string coords_str(const TorusElement& t) {
    std::ostringstream os;
    os << (t.basis == Basis::ALPHA ? "alpha[" : "conv[");
    for (size_t i = 0; i < t.c.size(); ++i) {
        if (i) os << " ";
        os << t.c[i];
    }
    os << "]";
    return os.str();
}

struct CocycleReport {
    bool pass = true;
    long long checks = 0;
    std::string witness;
    double millis = 0;
};

// Checks sigma(t,t') sigma(tt',t'') = sigma(t,t't'') sigma(t',t'') over all
// torus triples with coordinates in the given valuation range, at
// square-class resolution.  An alternative sigma can be injected (used as a
// negative control).  Pairwise products leave the input valuation range, so
// sigma is tabulated once over the product-closed coordinate space and the
// triple loop runs on table lookups.
inline CocycleReport verify_cocycle(
    const LocalField& F, int n, const std::vector<long long>& valuations,
    const std::function<int(const TorusElement&, const TorusElement&)>& sigma = nullptr,
    long long max_table = 100000000LL) {
    auto sig = sigma ? sigma
                     : std::function<int(const TorusElement&, const TorusElement&)>(
                           [&F](const TorusElement& a, const TorusElement& b) { return sigma_torus(F, a, b); });

    // product-closed coordinate value list
    std::vector<long long> ext_vals = valuations;
    for (long long a : valuations)
        for (long long b : valuations) ext_vals.push_back(a + b);
    std::sort(ext_vals.begin(), ext_vals.end());
    ext_vals.erase(std::unique(ext_vals.begin(), ext_vals.end()), ext_vals.end());
    std::vector<FieldElement> cs = enumerate_field_elements(F, ext_vals);
    const long long C = (long long)cs.size();
    std::vector<long long> cidx_of;  // (v - vmin)*2 + cls -> index into cs
    long long vmin = cs.front().v, vmax = cs.back().v;
    cidx_of.assign((vmax - vmin + 1) * 2, -1);
    for (long long i = 0; i < C; ++i) cidx_of[(cs[i].v - vmin) * 2 + cs[i].cls] = i;

    long long M = 1;
    for (int i = 0; i <= n; ++i) {
        M *= C;
        if (M * M > max_table) throw std::out_of_range("verify_cocycle: search space too large");
    }
    auto element_of = [&](long long code) {
        std::vector<FieldElement> c(n + 1);
        for (int i = 0; i <= n; ++i) {
            c[i] = cs[code % C];
            code /= C;
        }
        return TorusElement(Basis::ALPHA, n, std::move(c));
    };
    std::vector<TorusElement> all(M);
    for (long long i = 0; i < M; ++i) all[i] = element_of(i);
    auto code_of = [&](const TorusElement& t) {
        long long code = 0;
        for (int i = n; i >= 0; --i) code = code * C + cidx_of[(t.c[i].v - vmin) * 2 + t.c[i].cls];
        return code;
    };
    std::vector<long long> base;  // codes whose coordinates stay in the input valuations
    for (long long i = 0; i < M; ++i) {
        bool ok = true;
        for (auto& x : all[i].c)
            if (std::find(valuations.begin(), valuations.end(), x.v) == valuations.end()) { ok = false; break; }
        if (ok) base.push_back(i);
    }

    std::vector<signed char> S((size_t)M * M);
    for (long long a = 0; a < M; ++a)
        for (long long b = 0; b < M; ++b) S[(size_t)a * M + b] = (signed char)sig(all[a], all[b]);
    std::vector<long long> P((size_t)base.size() * base.size());
    for (size_t a = 0; a < base.size(); ++a)
        for (size_t b = 0; b < base.size(); ++b)
            P[a * base.size() + b] = code_of(all[base[a]] * all[base[b]]);

    CocycleReport rep;
    auto start = std::chrono::steady_clock::now();
    const size_t B = base.size();
    for (size_t a = 0; a < B; ++a)
        for (size_t b = 0; b < B; ++b) {
            int s_ab = S[(size_t)base[a] * M + base[b]];
            long long ab = P[a * B + b];
            const signed char* S_ab = &S[(size_t)ab * M];
            const signed char* S_a = &S[(size_t)base[a] * M];
            const signed char* S_b = &S[(size_t)base[b] * M];
            for (size_t c = 0; c < B; ++c) {
                int lhs = s_ab * S_ab[base[c]];
                int rhs = S_a[P[b * B + c]] * S_b[base[c]];
                ++rep.checks;
                if (lhs != rhs) {
                    rep.pass = false;
                    std::ostringstream os;
                    os << "triple t=" << coords_str(all[base[a]]) << " t'=" << coords_str(all[base[b]])
                       << " t''=" << coords_str(all[base[c]]) << " lhs=" << lhs << " rhs=" << rhs;
                    rep.witness = os.str();
                    rep.millis = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - start).count();
                    return rep;
                }
            }
        }
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace gspin
