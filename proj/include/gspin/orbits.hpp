#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspin/localfield.hpp"
#include "gspin/rational.hpp"
#include "gspin/rootdata.hpp"

namespace gspin {

// Unipotent classes of G_n: partitions of 2n+1 in which every even part has
// even multiplicity.
struct OrthogonalPartition {
    std::vector<long long> parts;  // weakly decreasing, positive

    OrthogonalPartition() = default;
    explicit OrthogonalPartition(std::vector<long long> p) : parts(std::move(p)) {
        for (size_t k = 0; k < parts.size(); ++k) {
            if (parts[k] <= 0) throw std::invalid_argument("OrthogonalPartition: parts must be positive");
            if (k && parts[k] > parts[k - 1])
                throw std::invalid_argument("OrthogonalPartition: parts must be weakly decreasing");
        }
    }

    long long total() const {
        long long s = 0;
        for (long long r : parts) s += r;
        return s;
    }
    bool admissible() const {
        std::map<long long, int> mult;
        for (long long r : parts) ++mult[r];
        for (auto& [r, m] : mult)
            if (r % 2 == 0 && m % 2 != 0) return false;
        return true;
    }
    bool operator==(const OrthogonalPartition& o) const { return parts == o.parts; }
    bool operator!=(const OrthogonalPartition& o) const { return !(*this == o); }
    bool operator<(const OrthogonalPartition& o) const { return parts < o.parts; }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (size_t k = 0; k < parts.size(); ++k) {
            if (k) os << ",";
            os << parts[k];
        }
        os << ")";
        return os.str();
    }
};

inline std::ostream& operator<<(std::ostream& os, const OrthogonalPartition& p) { return os << p.str(); }

constexpr int kOrbitRankBound = 12;

inline std::vector<OrthogonalPartition> enumerate_orbits(int n, int rank_bound = kOrbitRankBound) {
    if (n < 0) throw std::invalid_argument("enumerate_orbits: n >= 0");
    if (n > rank_bound) throw std::out_of_range("enumerate_orbits: bound exceeded");
    std::vector<OrthogonalPartition> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long rest, long long maxpart) -> void {
        if (rest == 0) {
            OrthogonalPartition p(cur);
            if (p.admissible()) out.push_back(p);
            return;
        }
        for (long long r = std::min(rest, maxpart); r >= 1; --r) {
            cur.push_back(r);
            self(self, rest - r, r);
            cur.pop_back();
        }
    };
    rec(rec, 2LL * n + 1, 2LL * n + 1);
    return out;
}

// Dominance by prefix sums.
inline bool dominates(const OrthogonalPartition& a, const OrthogonalPartition& b) {
    if (a.total() != b.total()) throw std::invalid_argument("dominates: totals differ");
    long long sa = 0, sb = 0;
    size_t l = std::min(a.parts.size(), b.parts.size());
    for (size_t k = 0; k < l; ++k) {
        sa += a.parts[k];
        sb += b.parts[k];
        if (sa < sb) return false;
    }
    return true;
}

// Greater than or non-comparable: not(a <= b).
inline bool gtorncw(const OrthogonalPartition& a, const OrthogonalPartition& b) {
    return !dominates(b, a);
}

inline OrthogonalPartition O0(int n) {
    if (n < 1) throw std::invalid_argument("O0: n >= 1");
    std::vector<long long> p;
    if (n % 2 == 0) {
        p.assign(n, 2);
        p.push_back(1);
    } else {
        p.assign(n - 1, 2);
        p.insert(p.end(), 3, 1);
    }
    return OrthogonalPartition(p);
}

inline OrthogonalPartition O1(int n) {
    if (n < 1) throw std::invalid_argument("O1: n >= 1");
    std::vector<long long> p{3};
    p.insert(p.end(), 2 * n - 2, 1);
    return OrthogonalPartition(p);
}

// Every admissible class strictly above or incomparable with O_0 dominates O_1.
inline bool check_reduction(int n) {
    OrthogonalPartition o0 = O0(n), o1 = O1(n);
    for (const OrthogonalPartition& o : enumerate_orbits(n))
        if (gtorncw(o, o0) && !dominates(o, o1)) return false;
    return true;
}

struct OrbitWeights {
    std::vector<long long> l;  // l_1 >= ... >= l_n >= 0
};

// The n largest entries of the multiset  U_i { r_i - 2j + 1 : 1 <= j <= r_i }.
inline OrbitWeights h_orbit(const OrthogonalPartition& o, int n) {
    if (o.total() != 2LL * n + 1) throw std::invalid_argument("h_orbit: partition of 2n+1 expected");
    if (!o.admissible()) throw std::invalid_argument("h_orbit: partition not admissible");
    std::vector<long long> ms;
    for (long long r : o.parts)
        for (long long j = 1; j <= r; ++j) ms.push_back(r - 2 * j + 1);
    std::sort(ms.begin(), ms.end(), std::greater<long long>());
    OrbitWeights w;
    w.l.assign(ms.begin(), ms.begin() + n);
    if (n > 0 && w.l.back() < 0) throw std::logic_error("h_orbit: kept weight came out negative");
    if ((long long)ms.size() > n && ms[n] > (n > 0 ? w.l.back() : 0))
        throw std::logic_error("h_orbit: discarded entry exceeds kept weights");
    return w;
}

// Weight of the conjugation action of h_O on the root subgroup of alpha:
// the GL index i carries eps_{i+1}, so
//   eps_{i+1} - eps_{j+1} -> l_i - l_j, etc.
inline long long j_alpha(const OrbitWeights& w, const Root& alpha) {
    long long li = w.l[alpha.i - 2];
    switch (alpha.kind) {
        case RootKind::EminusE: return li - w.l[alpha.j - 2];
        case RootKind::EplusE:  return li + w.l[alpha.j - 2];
        default:                return li;
    }
}

inline long long j_alpha(const OrthogonalPartition& o, const Root& alpha, int n) {
    return j_alpha(h_orbit(o, n), alpha);
}

// V_O: the positive roots of weight >= 2 under h_O.
inline std::vector<Root> v_orbit(const OrthogonalPartition& o, int n) {
    OrbitWeights w = h_orbit(o, n);
    std::vector<Root> out;
    for (const Root& alpha : positive_roots(n))
        if (j_alpha(w, alpha) >= 2) out.push_back(alpha);
    return out;
}

// Lie type of the connected stabilizer of a point in the open orbit, for a
// class of shape (3^o 2^e 1^{m-o-e}):
//   o odd:  B_{(o-1)/2} x C_{e/2} x D_{(m-o-e)/2}
//   o even: D_{o/2}     x C_{e/2} x D_{(m-o-e-1)/2}
// Rank <= 0 (or fractional, in degenerate inputs) factors are dropped; D_1
// is kept and marked as the torus GL_1.
inline std::string generic_stabilizer_type(long long o, long long e, long long m) {
    if (e % 2 != 0) throw std::invalid_argument("generic_stabilizer_type: e must be even");
    if (o < 0 || e < 0 || m < o + e) throw std::invalid_argument("generic_stabilizer_type: bad shape");
    struct Factor { char series; long long twice_rank; };
    std::vector<Factor> fs;
    if (o % 2 == 1) {
        fs.push_back({'B', o - 1});
        fs.push_back({'C', e});
        fs.push_back({'D', m - o - e});
    } else {
        fs.push_back({'D', o});
        fs.push_back({'C', e});
        fs.push_back({'D', m - o - e - 1});
    }
    std::string out;
    for (auto& f : fs) {
        if (f.twice_rank < 2 || f.twice_rank % 2 != 0) continue;  // rank-0 and degenerate factors vanish
        long long rank = f.twice_rank / 2;
        if (!out.empty()) out += " x ";
        out += f.series + std::to_string(rank);
        if (f.series == 'D' && rank == 1) out += " (torus GL1)";
    }
    return out.empty() ? "trivial" : out;
}

inline std::string generic_stabilizer_type(const OrthogonalPartition& o) {
    long long threes = 0, twos = 0;
    for (long long r : o.parts) {
        if (r > 3) throw std::invalid_argument("generic_stabilizer_type: parts must be <= 3");
        if (r == 3) ++threes;
        if (r == 2) ++twos;
    }
    return generic_stabilizer_type(threes, twos, (long long)o.parts.size());
}

// The quadratic length form ell(b) = b^T J_l b = sum_i b_i b_{l+1-i},
// computed on exact rationals; vanishing can come from cancellation, so the
// square-class model alone is not enough here.
struct LengthFormValue {
    bool is_zero = true;
    Rational value;
};

inline LengthFormValue length_form(const std::vector<Rational>& b) {
    LengthFormValue r;
    const size_t l = b.size();
    Rational s(0);
    for (size_t i = 1; i <= l; ++i) s += b[i - 1] * b[l - i];
    r.value = s;
    r.is_zero = s.is_zero();
    return r;
}

// Square class of a nonzero length value relative to a field.
inline FieldElement length_form_class(const LocalField& F, const LengthFormValue& v) {
    if (v.is_zero) throw std::invalid_argument("length_form_class: value is zero");
    return F.class_of_rational(v.value);
}

}  // namespace gspin
