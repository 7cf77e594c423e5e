#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspin/covertorus.hpp"
#include "gspin/localfield.hpp"
#include "gspin/rootdata.hpp"

namespace gspin {

// Distinguished subgroups of the covered torus, as membership predicates on
// base-torus points at square-class resolution.

enum class SubgroupTag { T2, TM, CENTER_TORUS, CENTER_GROUP, CENTRALIZER_K };

inline SubgroupTag parse_subgroup_tag(const std::string& s) {
    if (s == "T2" || s == "t2") return SubgroupTag::T2;
    if (s == "Tm" || s == "tm" || s == "TM") return SubgroupTag::TM;
    if (s == "center-torus") return SubgroupTag::CENTER_TORUS;
    if (s == "center-group") return SubgroupTag::CENTER_GROUP;
    if (s == "centralizer-K") return SubgroupTag::CENTRALIZER_K;
    throw std::invalid_argument("unknown subgroup tag: " + s);
}

// T_{n+1}(F)^2: alpha coordinates t_i square for i <= n, t_{n+1} free;
// equivalently all convenient a_i square.
inline bool in_T2(const TorusElement& t) {
    TorusElement s = to_alpha(t);
    for (int i = 0; i < s.n; ++i)
        if (!s.c[i].is_square()) return false;
    return true;
}

// The maximal abelian subgroup T_{n+1}(F)^m: consecutive pairs from the top,
// a_{n-2i}^{-1} a_{n-2i-1} square for 0 <= i < floor(n/2).
inline bool in_Tm(const TorusElement& t) {
    TorusElement s = to_convenient(t);
    for (int i = 0; 2 * i + 1 < s.n; ++i) {
        int hi = s.n - 2 * i;      // 1-based GL index
        int lo = hi - 1;
        if (!(s.c[hi - 1].inverse() * s.c[lo - 1]).is_square()) return false;
    }
    return true;
}

// Center of the covered torus: { prod eta_i^vee(a_i^2 d) beta_1^vee(t1) }
// with d in (F^*)^{2/gcd(2,n+1)}.  For even n this is T^2; for odd n the
// a-coordinates need only lie in one common square class.
inline bool center_torus_membership(const TorusElement& t) {
    TorusElement s = to_convenient(t);
    if (s.n % 2 == 0) return in_T2(s);
    for (int i = 1; i < s.n; ++i)
        if (!(s.c[i].inverse() * s.c[0]).is_square()) return false;
    return true;
}

// Center of G_n(F): the image of beta_1^vee, i.e. all convenient
// a-coordinates trivial.
inline bool center_group_membership(const TorusElement& t) {
    TorusElement s = to_convenient(t);
    for (int i = 0; i < s.n; ++i)
        if (!s.c[i].is_one()) return false;
    return true;
}

// Model of the centralizer of the unramified-splitting torus part
// (unit coordinates): valuations of the a_i all even for even n, of one
// common parity for odd n.
inline bool centralizer_unit_torus_membership(const TorusElement& t) {
    TorusElement s = to_convenient(t);
    if (s.n == 0) return true;
    if (s.n % 2 == 0) {
        for (int i = 0; i < s.n; ++i)
            if (s.c[i].v % 2 != 0) return false;
        return true;
    }
    long long parity = ((s.c[0].v % 2) + 2) % 2;
    for (int i = 1; i < s.n; ++i)
        if (((s.c[i].v % 2) + 2) % 2 != parity) return false;
    return true;
}

inline bool subgroup_membership(SubgroupTag tag, const TorusElement& t) {
    switch (tag) {
        case SubgroupTag::T2: return in_T2(t);
        case SubgroupTag::TM: return in_Tm(t);
        case SubgroupTag::CENTER_TORUS: return center_torus_membership(t);
        case SubgroupTag::CENTER_GROUP: return center_group_membership(t);
        case SubgroupTag::CENTRALIZER_K: return centralizer_unit_torus_membership(t);
    }
    throw std::logic_error("subgroup_membership: bad tag");
}

// Brute-force centralizer: all torus points (coordinates over the valuation
// range, at square-class resolution) whose lifts commute with the lifts of
// every element of S.  The base torus is commutative, so this is exactly the
// vanishing of the sigma-commutator.
inline std::vector<TorusElement> brute_centralizer(const LocalField& F, int n,
                                                   const std::vector<TorusElement>& S,
                                                   const std::vector<long long>& valuations,
                                                   long long max_space = 5000000LL) {
    std::vector<TorusElement> space = enumerate_torus(F, n, Basis::CONVENIENT, valuations);
    if ((long long)space.size() * (long long)S.size() > max_space)
        throw std::out_of_range("brute_centralizer: search space too large");
    std::vector<TorusElement> out;
    for (auto& t : space) {
        bool central = true;
        for (auto& s : S)
            if (commutator(F, t, s) != 1) { central = false; break; }
        if (central) out.push_back(t);
    }
    return out;
}

// Decides whether the member set of a predicate is abelian in the cover and
// admits no abelian extension inside the square-class torus.
inline bool is_maximal_abelian(const LocalField& F, int n,
                               const std::function<bool(const TorusElement&)>& member,
                               const std::vector<long long>& valuations) {
    std::vector<TorusElement> space = enumerate_torus(F, n, Basis::CONVENIENT, valuations);
    std::vector<TorusElement> members, rest;
    for (auto& t : space) (member(t) ? members : rest).push_back(t);
    for (auto& a : members)
        for (auto& b : members)
            if (commutator(F, a, b) != 1) return false;
    for (auto& t : rest) {
        bool commutes_with_all = true;
        for (auto& a : members)
            if (commutator(F, t, a) != 1) { commutes_with_all = false; break; }
        if (commutes_with_all) return false;  // proper abelian extension exists
    }
    return true;
}

// Parametric description of the center of G_n used by the CLI.
inline std::string center_group_description(int n) {
    return "{ prod_{i<=" + std::to_string(n) + "} alpha_i^vee(x^2) * alpha_" + std::to_string(n + 1) +
           "^vee(x) : x in F^* }  (the image of beta_1^vee)";
}

}  // namespace gspin
