#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gspin/conic_oracle.hpp"
#include "gspin/covertorus.hpp"
#include "gspin/exceptional.hpp"
#include "gspin/orbits.hpp"
#include "gspin/subgroups.hpp"

namespace gspin {

struct SuiteReport {
    std::string id;
    std::string name;
    bool pass = true;
    long long checks = 0;
    std::string witness;
    double millis = 0;
};

enum class Fault { None, FlipSigma };

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline void fail(SuiteReport& rep, const std::string& witness) {
    if (rep.pass) {
        rep.pass = false;
        rep.witness = witness;
    }
}

}  // namespace detail

inline std::vector<std::vector<FieldElement>> tuples(const std::vector<FieldElement>& coords, int len) {
    std::vector<std::vector<FieldElement>> out;
    std::vector<size_t> odo(len, 0);
    while (true) {
        std::vector<FieldElement> t(len);
        for (int i = 0; i < len; ++i) t[i] = coords[odo[i]];
        out.push_back(std::move(t));
        int i = 0;
        for (; i < len; ++i) {
            if (++odo[i] < coords.size()) break;
            odo[i] = 0;
        }
        if (i >= len) break;
    }
    return out;
}

// sigma with an optional injected fault: the faulty version flips the sign
// on the single pair (P, P) where P has all coordinates pi.
inline std::function<int(const TorusElement&, const TorusElement&)> make_sigma(const LocalField& F,
                                                                               Fault fault) {
    if (fault == Fault::None)
        return [&F](const TorusElement& a, const TorusElement& b) { return sigma_torus(F, a, b); };
    return [&F](const TorusElement& a, const TorusElement& b) {
        int s = sigma_torus(F, a, b);
        bool poison = a == b;
        if (poison)
            for (auto& x : to_alpha(a).c)
                if (x.v != 1 || x.cls != 0) { poison = false; break; }
        return poison ? -s : s;
    };
}

// 1. 2-cocycle identity on torus triples.
inline SuiteReport suite_cocycle(const std::vector<LocalField>& fields, const std::vector<int>& ranks,
                                 const std::vector<long long>& vals, Fault fault = Fault::None) {
    SuiteReport rep{"cocycle", "2-cocycle identity on the torus", true, 0, "", 0};
    detail::Stopwatch sw;
    for (const LocalField& F : fields)
        for (int n : ranks) {
            CocycleReport r = verify_cocycle(F, n, vals, make_sigma(F, fault));
            rep.checks += r.checks;
            if (!r.pass) detail::fail(rep, F.name() + " n=" + std::to_string(n) + ": " + r.witness);
        }
    rep.millis = sw.ms();
    return rep;
}

// 1b. Sampled variant of the cocycle identity, for ranks where the
// exhaustive run is out of reach.
inline SuiteReport suite_cocycle_sampled(const std::vector<LocalField>& fields, const std::vector<int>& ranks,
                                         const std::vector<long long>& vals, long long samples,
                                         unsigned long long seed, Fault fault = Fault::None) {
    SuiteReport rep{"cocycle", "2-cocycle identity on the torus (sampled)", true, 0, "", 0};
    detail::Stopwatch sw;
    std::mt19937_64 rng(seed);
    for (const LocalField& F : fields) {
        auto sig = make_sigma(F, fault);
        for (int n : ranks) {
            std::vector<TorusElement> space = enumerate_torus(F, n, Basis::ALPHA, vals);
            std::uniform_int_distribution<size_t> pick(0, space.size() - 1);
            for (long long k = 0; k < samples; ++k) {
                const TorusElement &t = space[pick(rng)], &u = space[pick(rng)], &v = space[pick(rng)];
                ++rep.checks;
                if (sig(t, u) * sig(t * u, v) != sig(t, u * v) * sig(u, v)) {
                    detail::fail(rep, F.name() + " n=" + std::to_string(n) + ": triple " + coords_str(t) + " " +
                                          coords_str(u) + " " + coords_str(v));
                    rep.millis = sw.ms();
                    return rep;
                }
            }
        }
    }
    rep.millis = sw.ms();
    return rep;
}

// 2. Commutator formula against sigma two ways.
inline SuiteReport suite_commutator(const std::vector<LocalField>& fields, const std::vector<int>& ranks,
                                    const std::vector<long long>& vals) {
    SuiteReport rep{"commutator", "commutator formula vs sigma products", true, 0, "", 0};
    detail::Stopwatch sw;
    for (const LocalField& F : fields)
        for (int n : ranks) {
            std::vector<TorusElement> space = enumerate_torus(F, n, Basis::CONVENIENT, vals);
            for (auto& b : space)
                for (auto& b2 : space) {
                    int lhs = commutator(F, b, b2);
                    int via_alpha = sigma_torus(F, to_alpha(b), to_alpha(b2)) *
                                    sigma_torus(F, to_alpha(b2), to_alpha(b));
                    int via_conv = sigma_convenient(F, b, b2) * sigma_convenient(F, b2, b);
                    rep.checks += 2;
                    if (lhs != via_alpha || lhs != via_conv) {
                        detail::fail(rep, F.name() + " n=" + std::to_string(n) + " b=" + coords_str(b) +
                                              " b'=" + coords_str(b2));
                        rep.millis = sw.ms();
                        return rep;
                    }
                }
        }
    rep.millis = sw.ms();
    return rep;
}

// 3. Brute-force centralizer of the whole torus = the parametric center.
inline SuiteReport suite_center(const std::vector<LocalField>& fields, const std::vector<int>& ranks,
                                const std::vector<long long>& vals) {
    SuiteReport rep{"center", "center of the covered torus", true, 0, "", 0};
    detail::Stopwatch sw;
    for (const LocalField& F : fields)
        for (int n : ranks) {
            std::vector<TorusElement> space = enumerate_torus(F, n, Basis::CONVENIENT, vals);
            std::vector<TorusElement> brute = brute_centralizer(F, n, space, vals);
            std::set<std::string> brute_keys, claim_keys, t2_keys;
            for (auto& t : brute) brute_keys.insert(coords_str(t));
            for (auto& t : space) {
                if (center_torus_membership(t)) claim_keys.insert(coords_str(t));
                if (in_T2(t)) t2_keys.insert(coords_str(t));
            }
            rep.checks += (long long)space.size();
            if (brute_keys != claim_keys)
                detail::fail(rep, F.name() + " n=" + std::to_string(n) + ": centralizer != parametric set");
            if (n % 2 == 0 && claim_keys != t2_keys)
                detail::fail(rep, F.name() + " n=" + std::to_string(n) + ": even-rank center != T^2");
        }
    rep.millis = sw.ms();
    return rep;
}

// 4. Block compatibility and the mixed GL x G' cocycle values.
inline SuiteReport suite_block(const std::vector<LocalField>& fields, const std::vector<int>& ranks,
                               const std::vector<long long>& vals) {
    SuiteReport rep{"block", "block compatibility on Levi torus points", true, 0, "", 0};
    detail::Stopwatch sw;
    for (const LocalField& F : fields)
        for (int n : ranks) {
            std::vector<FieldElement> coords = enumerate_field_elements(F, vals);
            for (int k = 1; k <= n; ++k) {
                const int m = n - k;
                std::vector<std::vector<FieldElement>> gs = tuples(coords, k);
                std::vector<std::vector<FieldElement>> hs = tuples(coords, m + 1);
                // sigma(a, t) and sigma(t, a) through the embeddings
                for (auto& a : gs)
                    for (auto& t : hs) {
                        TorusElement ea = embed_levi(n, k, a, std::vector<FieldElement>(m + 1, FieldElement::one()));
                        TorusElement et = embed_levi(n, k, std::vector<FieldElement>(k, FieldElement::one()), t);
                        auto [s_at, s_ta] = sigma_mixed(F, n, k, a, t);
                        rep.checks += 2;
                        if (sigma_torus(F, ea, et) != s_at)
                            detail::fail(rep, F.name() + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                                  ": sigma(a,t) mismatch");
                        if (sigma_torus(F, et, ea) != s_ta)
                            detail::fail(rep, F.name() + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                                  ": sigma(t,a) mismatch");
                    }
                // full block formula
                for (auto& b : gs)
                    for (auto& h : hs)
                        for (auto& b2 : gs)
                            for (auto& h2 : hs) {
                                int lhs = block_sigma(F, n, k, b, h, b2, h2);
                                int rhs = sigma_torus(F, embed_levi(n, k, b, h), embed_levi(n, k, b2, h2));
                                ++rep.checks;
                                if (lhs != rhs) {
                                    detail::fail(rep, F.name() + " n=" + std::to_string(n) +
                                                          " k=" + std::to_string(k) + ": block formula mismatch");
                                    rep.millis = sw.ms();
                                    return rep;
                                }
                            }
            }
        }
    rep.millis = sw.ms();
    return rep;
}

// 5. T^m is maximal abelian, T^2 abelian, full torus non-abelian for n > 1.
inline SuiteReport suite_maximal_abelian(const std::vector<LocalField>& fields, const std::vector<int>& ranks,
                                         const std::vector<long long>& vals) {
    SuiteReport rep{"maximal-abelian", "T^m maximal abelian at square-class resolution", true, 0, "", 0};
    detail::Stopwatch sw;
    for (const LocalField& F : fields)
        for (int n : ranks) {
            ++rep.checks;
            if (!is_maximal_abelian(F, n, [](const TorusElement& t) { return in_Tm(t); }, vals))
                detail::fail(rep, F.name() + " n=" + std::to_string(n) + ": T^m not maximal abelian");
            std::vector<TorusElement> space = enumerate_torus(F, n, Basis::CONVENIENT, vals);
            bool t2_abelian = true, torus_abelian = true;
            for (auto& a : space)
                for (auto& b : space) {
                    if (in_T2(a) && in_T2(b) && commutator(F, a, b) != 1) t2_abelian = false;
                    if (commutator(F, a, b) != 1) torus_abelian = false;
                }
            ++rep.checks;
            if (!t2_abelian) detail::fail(rep, F.name() + " n=" + std::to_string(n) + ": T^2 not abelian");
            if (n > 1 && torus_abelian)
                detail::fail(rep, F.name() + " n=" + std::to_string(n) + ": full torus unexpectedly abelian");
        }
    rep.millis = sw.ms();
    return rep;
}

// 6. The explicit construction is exceptional for every (eta, kappa);
// perturbing the exponents breaks it.
inline SuiteReport suite_exceptional(const std::vector<LocalField>& fields, const std::vector<int>& ranks) {
    SuiteReport rep{"exceptional", "explicit characters are exceptional", true, 0, "", 0};
    detail::Stopwatch sw;
    for (const LocalField& F : fields)
        for (int n : ranks)
            for (int eta_sign : {1, -1})
                for (int kappa : valid_kappa_exponents(F)) {
                    ExceptionalCharacter chi(F, n, SquareClassCharacter::with_unit_sign(eta_sign), kappa);
                    ++rep.checks;
                    if (!chi.is_exceptional())
                        detail::fail(rep, F.name() + " n=" + std::to_string(n) + ": construction not exceptional");
                    if (n >= 1) {
                        std::vector<long long> bad(n);
                        for (int i = 1; i <= n; ++i) bad[i - 1] = n - i;  // off by one
                        ++rep.checks;
                        if (chi.with_exponents(bad).is_exceptional())
                            detail::fail(rep, F.name() + " n=" + std::to_string(n) +
                                                  ": perturbed exponents still pass");
                    }
                }
    rep.millis = sw.ms();
    return rep;
}

// 7. Gindikin-Karpelevich constant at w_0 equals the closed form.
inline SuiteReport suite_gk(const std::vector<int>& ranks) {
    SuiteReport rep{"gk", "GK constant matches the closed form", true, 0, "", 0};
    detail::Stopwatch sw;
    for (int n : ranks) {
        LaurentRational lhs = gk_constant(n, WeylElement::longest(n));
        LaurentRational rhs = gk_closed_form_w0(n);
        rep.checks += 2;
        if (lhs != rhs || !lhs.equals_cross(rhs))
            detail::fail(rep, "n=" + std::to_string(n) + ": " + lhs.str() + " != " + rhs.str());
    }
    rep.millis = sw.ms();
    return rep;
}

// 8. Residue pole counts over the whole Weyl group.
inline SuiteReport suite_pole(const std::vector<int>& ranks) {
    SuiteReport rep{"pole-order", "pole order n exactly at w_0", true, 0, "", 0};
    detail::Stopwatch sw;
    for (int n : ranks) {
        WeylElement w0 = WeylElement::longest(n);
        for (const WeylElement& w : weyl_enumerate(n)) {
            PoleCount pc = pole_count(n, w);
            ++rep.checks;
            if (pc.denominator != 0)
                detail::fail(rep, "n=" + std::to_string(n) + ": denominator zeta pole at s=0");
            if (w == w0 ? pc.order() != n : pc.order() >= n)
                detail::fail(rep, "n=" + std::to_string(n) + ": pole order " + std::to_string(pc.order()) +
                                      " at length-" + std::to_string(w.length()) + " element");
        }
    }
    rep.millis = sw.ms();
    return rep;
}

// 9. Orbit reduction: O gtorncw O_0 implies O >= O_1.
inline SuiteReport suite_orbit_reduction(const std::vector<int>& ranks) {
    SuiteReport rep{"orbit-reduction", "classes above O_0 dominate O_1", true, 0, "", 0};
    detail::Stopwatch sw;
    for (int n : ranks) {
        ++rep.checks;
        if (!check_reduction(n)) detail::fail(rep, "n=" + std::to_string(n) + ": reduction fails");
    }
    rep.millis = sw.ms();
    return rep;
}

// 10. V_{O_1} is the unipotent radical U_1.
inline SuiteReport suite_vorbit(const std::vector<int>& ranks) {
    SuiteReport rep{"vorbit-u1", "V_{O_1} equals the root set of U_1", true, 0, "", 0};
    detail::Stopwatch sw;
    for (int n : ranks) {
        std::vector<Root> v = v_orbit(O1(n), n);
        std::vector<Root> u1;
        for (const Root& alpha : positive_roots(n))
            if (alpha.involves(2)) u1.push_back(alpha);
        std::sort(v.begin(), v.end());
        std::sort(u1.begin(), u1.end());
        ++rep.checks;
        if (v != u1) detail::fail(rep, "n=" + std::to_string(n) + ": V_{O_1} != U_1");
    }
    rep.millis = sw.ms();
    return rep;
}

// 11. Closed-form Hilbert symbol against the conic solvability oracle.
inline SuiteReport suite_hilbert_oracle(const std::vector<LocalField>& fields) {
    SuiteReport rep{"hilbert-oracle", "Hilbert symbol vs conic solvability", true, 0, "", 0};
    detail::Stopwatch sw;
    for (const LocalField& F : fields)
        for (const FieldElement& x : F.square_class_reps())
            for (const FieldElement& y : F.square_class_reps()) {
                ++rep.checks;
                if (F.hilbert(x, y) != hilbert_by_conic_oracle(F, x, y)) {
                    std::ostringstream os;
                    os << F.name() << ": (" << x << ", " << y << ")";
                    detail::fail(rep, os.str());
                }
            }
    rep.millis = sw.ms();
    return rep;
}

// 12. Weil factor relations for every admissible kappa.
inline SuiteReport suite_weil(const std::vector<LocalField>& fields) {
    SuiteReport rep{"weil", "Weil factor relations", true, 0, "", 0};
    detail::Stopwatch sw;
    for (const LocalField& F : fields) {
        if (F.is_real()) continue;
        for (int kappa : valid_kappa_exponents(F)) {
            WeilFactor g(F, kappa);
            for (const FieldElement& x : enumerate_field_elements(F, {-1, 0, 1, 2})) {
                rep.checks += 2;
                if (!g(x.square()).is_one()) detail::fail(rep, F.name() + ": gamma(x^2) != 1");
                if (g(x.inverse()) != g(x)) detail::fail(rep, F.name() + ": gamma(x^-1) != gamma(x)");
                for (const FieldElement& y : enumerate_field_elements(F, {-1, 0, 1, 2})) {
                    ++rep.checks;
                    CharacterValue lhs = g(x * y);
                    CharacterValue rhs = g(x) * g(y) * CharacterValue::from_sign(F.hilbert(x, y));
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << F.name() << " kappa=i^" << kappa << ": gamma(xy) relation fails at x=" << x
                           << " y=" << y;
                        detail::fail(rep, os.str());
                    }
                }
            }
        }
    }
    rep.millis = sw.ms();
    return rep;
}

}  // namespace gspin
