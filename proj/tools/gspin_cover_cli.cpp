// gspin-cover: exact computations in the metaplectic double cover of
// GSpin(2n+1) over a p-adic field, at square-class resolution.

#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gspin/conic_oracle.hpp"
#include "gspin/covertorus.hpp"
#include "gspin/exceptional.hpp"
#include "gspin/orbits.hpp"
#include "gspin/subgroups.hpp"
#include "gspin/verify.hpp"

using nlohmann::json;
using namespace gspin;

namespace {

constexpr const char* kSchema = "gspin-cover-kit/1";

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceBound = 3;

struct GlobalOptions {
    std::string p = "3";
    long long n = 3;
    long long nonresidue = 0;
    std::string gamma_pi;
    std::string format = "text";
    unsigned long long seed = 0;
    std::vector<long long> valuations = {0, 1};
};

LocalField make_field(const GlobalOptions& g) {
    if (g.p == "real" || g.p == "R") return LocalField::real();
    return LocalField::padic(std::stoll(g.p), g.nonresidue);
}

int default_kappa(const LocalField& F) { return valid_kappa_exponents(F).front(); }

int kappa_of(const GlobalOptions& g, const LocalField& F) {
    if (g.gamma_pi.empty()) return default_kappa(F);
    return WeilFactor::parse_kappa(g.gamma_pi);
}

// "v:classIndex" with a 1-based class index (1 = trivial, 2 = non-residue;
// for the real field 1 = +1, 2 = -1).
FieldElement parse_token(const LocalField& F, const std::string& tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad coordinate token '" + tok + "', expected v:class");
    long long v = 0;
    int cls = 0;
    try {
        v = std::stoll(tok.substr(0, colon));
        cls = std::stoi(tok.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad coordinate token '" + tok + "', expected v:class");
    }
    if (cls < 1 || cls > F.num_unit_classes())
        throw std::invalid_argument("class index out of range in '" + tok + "'");
    return F.element(v, cls - 1);
}

std::vector<FieldElement> parse_tokens(const LocalField& F, const std::vector<std::string>& toks) {
    std::vector<FieldElement> out;
    for (auto& t : toks) out.push_back(parse_token(F, t));
    return out;
}

TorusElement parse_torus(const LocalField& F, int n, Basis basis, const std::vector<std::string>& toks) {
    if ((int)toks.size() != n + 1)
        throw std::invalid_argument("expected " + std::to_string(n + 1) + " coordinate tokens, got " +
                                    std::to_string(toks.size()));
    return TorusElement(basis, n, parse_tokens(F, toks));
}

std::string token_str(const FieldElement& x) {
    return std::to_string(x.v) + ":" + std::to_string(x.cls + 1);
}

json torus_json(const TorusElement& t) {
    json a = json::array();
    for (auto& x : t.c) a.push_back(token_str(x));
    return json{{"basis", t.basis == Basis::ALPHA ? "alpha" : "convenient"}, {"coords", a}};
}

json value_json(const CharacterValue& v) {
    return json{{"q_exp", v.q_exp.str()}, {"zeta4", v.zeta4}, {"z_exp", v.z_exp}, {"display", v.str()}};
}

json terms_json(const LaurentTerms& ts) {
    json a = json::array();
    for (auto& [c, e] : ts) a.push_back(json::array({c, e}));
    return a;
}

json rational_function_json(const LaurentRational& r) {
    return json{{"num", terms_json(r.numerator_terms())}, {"den", terms_json(r.denominator_terms())},
                {"display", r.str()}};
}

void emit(const GlobalOptions& g, const json& j, const std::string& text) {
    if (g.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

WeylElement parse_weyl(int n, const std::string& spec) {
    if (spec == "w0") return WeylElement::longest(n);
    if (spec == "id" || spec == "1") return WeylElement::identity(n);
    WeylElement w = WeylElement::identity(n);
    std::stringstream ss(spec);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        int k = std::stoi(piece);
        w = w * WeylElement::simple(n, k);
    }
    return w;
}

OrthogonalPartition parse_partition(const std::string& spec) {
    std::vector<long long> parts;
    std::stringstream ss(spec);
    std::string piece;
    while (std::getline(ss, piece, ',')) parts.push_back(std::stoll(piece));
    return OrthogonalPartition(parts);
}

std::string weyl_str(const WeylElement& w) {
    if (w.is_identity()) return "id";
    std::string s;
    for (int k : w.reduced_word()) {
        if (!s.empty()) s += ",";
        s += std::to_string(k);
    }
    return s;
}

// ---------------------------------------------------------------------------

int cmd_roots(const GlobalOptions& g) {
    std::vector<Root> roots = positive_roots((int)g.n);
    json jr = json::array();
    std::ostringstream text;
    text << "positive roots of G_" << g.n << " (" << roots.size() << "):\n";
    for (auto& r : roots) {
        jr.push_back(json{{"root", r.str()}, {"l", length_tag(r, (int)g.n)}});
        text << "  " << r.str() << "  l=" << length_tag(r, (int)g.n) << "\n";
    }
    emit(g, json{{"schema", kSchema}, {"command", "roots"}, {"n", g.n}, {"count", roots.size()}, {"roots", jr}},
         text.str());
    return 0;
}

int cmd_sigma(const GlobalOptions& g, const std::vector<std::string>& t_toks,
              const std::vector<std::string>& t2_toks) {
    LocalField F = make_field(g);
    TorusElement t = parse_torus(F, (int)g.n, Basis::ALPHA, t_toks);
    TorusElement u = parse_torus(F, (int)g.n, Basis::ALPHA, t2_toks);
    std::vector<SigmaFactor> factors;
    int s = sigma_torus_factors(F, t, u, &factors);
    int comm = commutator(F, t, u);
    json jf = json::array();
    std::ostringstream text;
    text << "sigma(t, t') = " << (s > 0 ? "+1" : "-1") << "\n";
    text << "[t, t']_sigma = " << (comm > 0 ? "+1" : "-1") << "\n";
    text << "factors:\n";
    for (auto& f : factors) {
        jf.push_back(json{{"factor", f.label}, {"value", f.value}});
        text << "  " << f.label << " = " << (f.value > 0 ? "+1" : "-1") << "\n";
    }
    emit(g,
         json{{"schema", kSchema}, {"command", "sigma"}, {"n", g.n}, {"field", F.name()},
              {"t", torus_json(t)}, {"t2", torus_json(u)}, {"sigma", s}, {"commutator", comm},
              {"factors", jf}},
         text.str());
    return 0;
}

int cmd_commutator(const GlobalOptions& g, const std::vector<std::string>& b_toks,
                   const std::vector<std::string>& b2_toks) {
    LocalField F = make_field(g);
    TorusElement b = parse_torus(F, (int)g.n, Basis::CONVENIENT, b_toks);
    TorusElement b2 = parse_torus(F, (int)g.n, Basis::CONVENIENT, b2_toks);
    int comm = commutator(F, b, b2);
    int s12 = sigma_convenient(F, b, b2), s21 = sigma_convenient(F, b2, b);
    std::ostringstream text;
    text << "[b, b']_sigma = " << (comm > 0 ? "+1" : "-1") << "\n"
         << "sigma(b, b') = " << (s12 > 0 ? "+1" : "-1") << ", sigma(b', b) = " << (s21 > 0 ? "+1" : "-1")
         << "\n";
    emit(g,
         json{{"schema", kSchema}, {"command", "commutator"}, {"n", g.n}, {"field", F.name()},
              {"b", torus_json(b)}, {"b2", torus_json(b2)}, {"commutator", comm}, {"sigma_bb2", s12},
              {"sigma_b2b", s21}},
         text.str());
    return 0;
}

int cmd_subgroup_member(const GlobalOptions& g, const std::string& which, const std::string& basis_name,
                        const std::vector<std::string>& toks) {
    LocalField F = make_field(g);
    Basis basis = basis_name == "alpha" ? Basis::ALPHA : Basis::CONVENIENT;
    TorusElement t = parse_torus(F, (int)g.n, basis, toks);
    SubgroupTag tag = parse_subgroup_tag(which);
    bool member = subgroup_membership(tag, t);
    std::ostringstream text;
    text << which << " membership: " << (member ? "yes" : "no") << "\n";
    json j{{"schema", kSchema}, {"command", "subgroup member"}, {"n", g.n}, {"field", F.name()},
           {"which", which}, {"t", torus_json(t)}, {"member", member}};
    if (tag == SubgroupTag::CENTER_GROUP) {
        j["description"] = center_group_description((int)g.n);
        text << center_group_description((int)g.n) << "\n";
    }
    emit(g, j, text.str());
    return 0;
}

int cmd_subgroup_centralizer(const GlobalOptions& g, const std::string& of) {
    LocalField F = make_field(g);
    const int n = (int)g.n;
    if (n > kWeylRankBound) throw std::out_of_range("subgroup centralizer: bound exceeded");
    std::vector<TorusElement> S;
    if (of == "all") S = enumerate_torus(F, n, Basis::CONVENIENT, g.valuations);
    else if (of == "units") S = enumerate_torus(F, n, Basis::CONVENIENT, {0});
    else throw std::invalid_argument("subgroup centralizer: --of must be all or units");
    std::vector<TorusElement> members = brute_centralizer(F, n, S, g.valuations);
    bool matches_claim = true;
    for (auto& t : enumerate_torus(F, n, Basis::CONVENIENT, g.valuations)) {
        bool in_brute = false;
        for (auto& m : members)
            if (m == t) { in_brute = true; break; }
        bool in_claim = of == "all" ? center_torus_membership(t) : centralizer_unit_torus_membership(t);
        if (in_brute != in_claim) { matches_claim = false; break; }
    }
    json jm = json::array();
    for (auto& m : members) jm.push_back(torus_json(m));
    std::ostringstream text;
    text << "centralizer of " << of << ": " << members.size() << " elements"
         << (matches_claim ? " (matches the parametric description)" : " (DIFFERS from the parametric description)")
         << "\n";
    json j{{"schema", kSchema}, {"command", "subgroup centralizer"}, {"n", g.n}, {"field", F.name()},
           {"of", of}, {"count", members.size()}, {"matches_parametric", matches_claim}, {"members", jm}};
    if (of == "all") {
        // index of the split part: how many classes of genuine characters of
        // the center restrict to a given character of T^2 (1 for even n,
        // [F^*:F^{*2}] for odd n)
        long long t2_count = 0;
        for (auto& t : enumerate_torus(F, n, Basis::CONVENIENT, g.valuations))
            if (in_T2(t)) ++t2_count;
        long long index = t2_count > 0 ? (long long)members.size() / t2_count : 0;
        j["index_over_T2"] = index;
        text << "index over T^2: " << index << "\n";
    }
    emit(g, j, text.str());
    return matches_claim ? 0 : kExitVerifyFailure;
}

int cmd_subgroup_maximal(const GlobalOptions& g, const std::string& which) {
    LocalField F = make_field(g);
    const int n = (int)g.n;
    if (n > kWeylRankBound) throw std::out_of_range("subgroup maximal-abelian: bound exceeded");
    SubgroupTag tag = parse_subgroup_tag(which);
    auto pred = [tag](const TorusElement& t) { return subgroup_membership(tag, t); };
    std::vector<TorusElement> space = enumerate_torus(F, n, Basis::CONVENIENT, g.valuations);
    bool abelian = true;
    for (auto& a : space) {
        if (!pred(a)) continue;
        for (auto& b : space)
            if (pred(b) && commutator(F, a, b) != 1) { abelian = false; break; }
        if (!abelian) break;
    }
    bool maximal = abelian && is_maximal_abelian(F, n, pred, g.valuations);
    std::ostringstream text;
    text << which << ": abelian=" << (abelian ? "yes" : "no") << " maximal-abelian=" << (maximal ? "yes" : "no")
         << "\n";
    emit(g,
         json{{"schema", kSchema}, {"command", "subgroup maximal-abelian"}, {"n", g.n}, {"field", F.name()},
              {"which", which}, {"abelian", abelian}, {"maximal", maximal}},
         text.str());
    return 0;
}

int cmd_chi(const GlobalOptions& g, const std::string& variant, int eta_unit, const std::string& eta_pi,
            const std::vector<std::string>& a_toks, const std::string& t1_tok, const std::string& d_tok) {
    LocalField F = make_field(g);
    if (F.is_real()) throw std::invalid_argument("chi eval: p-adic fields only");
    const int n = (int)g.n;
    CharacterValue on_pi = CharacterValue::z_power(1);
    if (eta_pi == "1") on_pi = CharacterValue::one();
    else if (eta_pi == "-1") on_pi = CharacterValue::from_sign(-1);
    else if (eta_pi == "i") on_pi = CharacterValue::zeta(1);
    else if (eta_pi == "-i") on_pi = CharacterValue::zeta(3);
    else if (eta_pi != "z") throw std::invalid_argument("chi eval: --eta-pi must be z, 1, -1, i or -i");
    ExceptionalCharacter chi(F, n, SquareClassCharacter::with_unit_sign(eta_unit, on_pi), kappa_of(g, F));
    if ((int)a_toks.size() != n) throw std::invalid_argument("chi eval: expected n GL coordinates via --a");
    std::vector<FieldElement> a = parse_tokens(F, a_toks);
    FieldElement t1 = parse_token(F, t1_tok);
    TorusElement t = TorusElement::convenient(n, a, t1);
    CharacterValue v;
    if (variant == "chi0") v = chi.chi0(t);
    else if (variant == "chi-prime") v = chi.chi_prime(t);
    else if (variant == "chi-center") {
        if (d_tok.empty()) throw std::invalid_argument("chi eval: chi-center needs --d");
        v = chi.chi_center(t, parse_token(F, d_tok));
    } else {
        throw std::invalid_argument("chi eval: --variant must be chi0, chi-prime or chi-center");
    }
    std::ostringstream text;
    text << variant << "(t) = " << v.str() << "\n";
    json j{{"schema", kSchema}, {"command", "chi eval"},     {"n", g.n},   {"field", F.name()},
           {"variant", variant}, {"t", torus_json(t)},        {"value", value_json(v)}};
    if (!d_tok.empty()) j["d"] = d_tok;
    emit(g, j, text.str());
    return 0;
}

int cmd_gk(const GlobalOptions& g, const std::string& wspec) {
    const int n = (int)g.n;
    if (n > kWeylRankBound) throw std::out_of_range("gk: bound exceeded");
    WeylElement w = parse_weyl(n, wspec);
    LaurentRational c = gk_constant(n, w);
    PoleCount pc = pole_count(n, w);
    // literal product over the inverted roots
    std::ostringstream prod;
    json jroots = json::array();
    bool first = true;
    for (const Root& alpha : positive_roots(n))
        if (w.apply(alpha).second < 0) {
            long long e = chi_a_alpha_exponent(n, alpha);
            if (!first) prod << " * ";
            prod << "(1-q^" << (e - 1) << ")/(1-q^" << e << ")";
            jroots.push_back(json{{"root", alpha.str()}, {"chi_a_alpha_exp", e}});
            first = false;
        }
    if (first) prod << "1";
    std::ostringstream text;
    text << "c(w, chi) = " << prod.str() << "\n"
         << "reduced = " << c.str() << "\n"
         << "pole order = " << pc.order() << "\n";
    json j{{"schema", kSchema}, {"command", "gk"},           {"n", g.n},
           {"w", weyl_str(w)},   {"length", w.length()},      {"roots", jroots},
           {"product_form", prod.str()},                      {"value", rational_function_json(c)},
           {"pole_order", pc.order()}};
    emit(g, j, text.str());
    return 0;
}

int cmd_pole_order(const GlobalOptions& g, const std::string& wspec) {
    const int n = (int)g.n;
    if (n > kWeylRankBound) throw std::out_of_range("pole-order: bound exceeded");
    WeylElement w = parse_weyl(n, wspec);
    PoleCount pc = pole_count(n, w);
    json jroots = json::array();
    std::ostringstream text;
    for (const Root& alpha : positive_roots(n))
        if (w.apply(alpha).second < 0) {
            AffineExponent L = affine_exponent(n, alpha);
            jroots.push_back(json{{"root", alpha.str()}, {"L_at_0", L.at_zero()}});
        }
    text << "pole order at w = " << pc.order() << " (numerator poles " << pc.numerator
         << ", denominator poles " << pc.denominator << ")\n";
    emit(g,
         json{{"schema", kSchema}, {"command", "pole-order"}, {"n", g.n}, {"w", weyl_str(w)},
              {"numerator", pc.numerator}, {"denominator", pc.denominator}, {"order", pc.order()},
              {"roots", jroots}},
         text.str());
    return 0;
}

int cmd_orbits_list(const GlobalOptions& g) {
    const int n = (int)g.n;
    std::vector<OrthogonalPartition> orbits = enumerate_orbits(n);
    json jo = json::array();
    std::ostringstream text;
    text << orbits.size() << " unipotent classes of G_" << n << ":\n";
    for (auto& o : orbits) {
        OrbitWeights w = h_orbit(o, n);
        json jw = json::array();
        for (long long l : w.l) jw.push_back(l);
        jo.push_back(json{{"partition", o.parts}, {"h_weights", jw}, {"v_orbit_size", v_orbit(o, n).size()}});
        text << "  " << o.str() << "  h=(";
        for (size_t i = 0; i < w.l.size(); ++i) text << (i ? "," : "") << w.l[i];
        text << ")  |V_O|=" << v_orbit(o, n).size() << "\n";
    }
    text << "O_0 = " << O0(n).str() << ", O_1 = " << O1(n).str() << "\n";
    emit(g,
         json{{"schema", kSchema}, {"command", "orbits list"}, {"n", g.n}, {"count", orbits.size()},
              {"O0", O0(n).parts}, {"O1", O1(n).parts}, {"orbits", jo}},
         text.str());
    return 0;
}

int cmd_orbits_hasse(const GlobalOptions& g) {
    const int n = (int)g.n;
    std::vector<OrthogonalPartition> orbits = enumerate_orbits(n);
    json edges = json::array();
    std::ostringstream text;
    text << "covering relations of the dominance order:\n";
    for (auto& a : orbits)
        for (auto& b : orbits) {
            if (a == b || !dominates(a, b)) continue;
            bool covering = true;
            for (auto& c : orbits) {
                if (c == a || c == b) continue;
                if (dominates(a, c) && dominates(c, b)) { covering = false; break; }
            }
            if (covering) {
                edges.push_back(json{{"from", a.parts}, {"to", b.parts}});
                text << "  " << a.str() << " > " << b.str() << "\n";
            }
        }
    emit(g, json{{"schema", kSchema}, {"command", "orbits hasse"}, {"n", g.n}, {"edges", edges}}, text.str());
    return 0;
}

int cmd_orbits_vorbit(const GlobalOptions& g, const std::string& orbit_spec) {
    const int n = (int)g.n;
    OrthogonalPartition o = parse_partition(orbit_spec);
    OrbitWeights w = h_orbit(o, n);
    std::vector<Root> v = v_orbit(o, n);
    json jv = json::array(), jj = json::array(), jw = json::array();
    for (long long l : w.l) jw.push_back(l);
    std::ostringstream text;
    text << "h_O weights = (";
    for (size_t i = 0; i < w.l.size(); ++i) text << (i ? "," : "") << w.l[i];
    text << ")\n";
    for (const Root& alpha : positive_roots(n)) {
        jj.push_back(json{{"root", alpha.str()}, {"j_alpha", j_alpha(w, alpha)}});
        text << "  j(" << alpha.str() << ") = " << j_alpha(w, alpha) << "\n";
    }
    text << "V_O = {";
    for (size_t i = 0; i < v.size(); ++i) {
        jv.push_back(v[i].str());
        text << (i ? ", " : "") << v[i].str();
    }
    text << "}\n";
    emit(g,
         json{{"schema", kSchema}, {"command", "orbits vorbit"}, {"n", g.n}, {"orbit", o.parts},
              {"h_weights", jw}, {"j_alpha", jj}, {"v_orbit", jv}},
         text.str());
    return 0;
}

int cmd_orbits_stab(const GlobalOptions& g, const std::string& orbit_spec) {
    OrthogonalPartition o = parse_partition(orbit_spec);
    std::string type = generic_stabilizer_type(o);
    std::ostringstream text;
    text << "generic stabilizer type of " << o.str() << ": " << type << "\n";
    emit(g,
         json{{"schema", kSchema}, {"command", "orbits stab-type"}, {"orbit", o.parts}, {"type", type}},
         text.str());
    return 0;
}

int cmd_verify(const GlobalOptions& g, const std::vector<std::string>& only, const std::string& fault_name,
               long long sample) {
    if (g.n > kWeylRankBound) throw std::out_of_range("verify: bound exceeded (n <= 6 for exhaustive suites)");
    Fault fault = Fault::None;
    if (fault_name == "flip-sigma") fault = Fault::FlipSigma;
    else if (!fault_name.empty() && fault_name != "none")
        throw std::invalid_argument("verify: unknown fault '" + fault_name + "'");
    LocalField F = make_field(g);
    std::vector<LocalField> fields{F};
    const int n = (int)g.n;
    auto ranks_to = [n](int cap) {
        std::vector<int> r;
        for (int i = 1; i <= std::min(n, cap); ++i) r.push_back(i);
        return r;
    };
    auto wanted = [&only](const std::string& id) {
        if (only.empty()) return true;
        for (auto& s : only)
            if (s == id) return true;
        return false;
    };

    std::vector<SuiteReport> reports;
    if (wanted("cocycle")) {
        if (sample > 0) reports.push_back(suite_cocycle_sampled(fields, ranks_to(6), g.valuations, sample,
                                                                g.seed, fault));
        else reports.push_back(suite_cocycle(fields, ranks_to(3), g.valuations, fault));
    }
    if (wanted("commutator")) reports.push_back(suite_commutator(fields, ranks_to(3), g.valuations));
    if (wanted("center")) reports.push_back(suite_center(fields, ranks_to(4), g.valuations));
    if (wanted("block")) reports.push_back(suite_block(fields, ranks_to(3), g.valuations));
    if (wanted("maximal-abelian")) reports.push_back(suite_maximal_abelian(fields, ranks_to(3), g.valuations));
    if (!F.is_real()) {
        if (wanted("exceptional")) reports.push_back(suite_exceptional(fields, ranks_to(4)));
        if (wanted("weil")) reports.push_back(suite_weil(fields));
    }
    if (wanted("gk")) reports.push_back(suite_gk(ranks_to(3)));
    if (wanted("pole-order")) reports.push_back(suite_pole(ranks_to(3)));
    if (wanted("orbit-reduction")) reports.push_back(suite_orbit_reduction(ranks_to(6)));
    if (wanted("vorbit-u1")) {
        std::vector<int> r;
        for (int i = 2; i <= std::min(n, 6); ++i) r.push_back(i);
        if (!r.empty()) reports.push_back(suite_vorbit(r));
    }
    if (wanted("hilbert-oracle")) reports.push_back(suite_hilbert_oracle(fields));

    bool pass = true;
    json js = json::array();
    std::ostringstream text;
    for (auto& r : reports) {
        pass = pass && r.pass;
        js.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"checks", r.checks},
                          {"witness", r.witness}, {"ms", r.millis}});
        char line[160];
        std::snprintf(line, sizeof(line), "%-16s %s  checks=%-10lld %.1f ms\n", r.id.c_str(),
                      r.pass ? "pass" : "FAIL", r.checks, r.millis);
        text << line;
        if (!r.pass) text << "    witness: " << r.witness << "\n";
    }
    text << (pass ? "all suites passed\n" : "verification FAILED\n");
    emit(g,
         json{{"schema", kSchema}, {"command", "verify"}, {"n", g.n}, {"field", F.name()},
              {"fault", fault_name.empty() ? "none" : fault_name}, {"pass", pass}, {"suites", js}},
         text.str());
    return pass ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure computations in the metaplectic double cover of GSpin(2n+1)"};
    app.set_config("--config", "", "key=value config file mirroring the global flags");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    GlobalOptions g;
    app.add_option("--p", g.p, "residue prime (odd), or 'real'")->capture_default_str();
    app.add_option("--n", g.n, "rank n of G_n")->capture_default_str();
    app.add_option("--nonresidue", g.nonresidue, "unit non-residue representative (default: least)");
    app.add_option("--gamma-pi", g.gamma_pi, "gamma(pi): one of 1, -1, i, -i (default: first admissible)");
    app.add_option("--format", g.format, "output format: text or json")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for sampled modes");
    app.add_option("--valuations", g.valuations, "valuation range for exhaustive searches")
        ->capture_default_str();

    auto* roots = app.add_subcommand("roots", "list the positive roots of G_n");

    auto* sigma = app.add_subcommand("sigma", "cocycle value sigma(t,t') on torus points (alpha coordinates)");
    std::vector<std::string> t_toks, t2_toks;
    sigma->add_option("--t", t_toks, "n+1 coordinates of t as v:class tokens")->required()->expected(-1);
    sigma->add_option("--t2", t2_toks, "n+1 coordinates of t'")->required()->expected(-1);

    auto* comm = app.add_subcommand("commutator", "commutator [b,b']_sigma (convenient coordinates)");
    std::vector<std::string> b_toks, b2_toks;
    comm->add_option("--b", b_toks, "a_1..a_n and t1 of b")->required()->expected(-1);
    comm->add_option("--b2", b2_toks, "a_1..a_n and t1 of b'")->required()->expected(-1);

    auto* subgroup = app.add_subcommand("subgroup", "distinguished subgroups of the covered torus");
    auto* member = subgroup->add_subcommand("member", "membership predicate");
    std::string which = "T2", basis_name = "convenient";
    std::vector<std::string> m_toks;
    member->add_option("--which", which, "T2 | Tm | center-torus | center-group | centralizer-K")->required();
    member->add_option("--basis", basis_name, "alpha or convenient")->capture_default_str();
    member->add_option("--t", m_toks, "n+1 coordinates")->required()->expected(-1);
    auto* centralizer = subgroup->add_subcommand("centralizer", "brute-force centralizer");
    std::string of = "all";
    centralizer->add_option("--of", of, "all | units")->capture_default_str();
    auto* maximal = subgroup->add_subcommand("maximal-abelian", "abelian/maximal-abelian test");
    std::string max_which = "Tm";
    maximal->add_option("--which", max_which, "subgroup tag")->capture_default_str();

    auto* chi = app.add_subcommand("chi", "exceptional character evaluation");
    auto* chi_eval = chi->add_subcommand("eval", "evaluate chi0 / chi-prime / chi-center");
    std::string variant = "chi0", eta_pi = "z", t1_tok, d_tok;
    int eta_unit = 1;
    std::vector<std::string> a_toks;
    chi_eval->add_option("--variant", variant, "chi0 | chi-prime | chi-center")->capture_default_str();
    chi_eval->add_option("--eta-unit", eta_unit, "eta on the non-residue class: 1 or -1")->capture_default_str();
    chi_eval->add_option("--eta-pi", eta_pi, "eta(pi): z, 1, -1, i, -i")->capture_default_str();
    chi_eval->add_option("--a", a_toks, "GL coordinates a_1..a_n")->expected(-1);
    chi_eval->add_option("--t1", t1_tok, "beta_1 coordinate")->required();
    chi_eval->add_option("--d", d_tok, "GL-center parameter d (chi-center only)");

    auto* gk = app.add_subcommand("gk", "Gindikin-Karpelevich constant c(w, chi)");
    std::string gk_w = "w0";
    gk->add_option("w", gk_w, "w0 | id | comma-separated simple indices")->capture_default_str();

    auto* pole = app.add_subcommand("pole-order", "zeta-pole count of c(w, chi_s) at s=0");
    std::string pole_w = "w0";
    pole->add_option("w", pole_w, "w0 | id | comma-separated simple indices")->capture_default_str();

    auto* orbits = app.add_subcommand("orbits", "unipotent class combinatorics");
    auto* olist = orbits->add_subcommand("list", "admissible partitions of 2n+1");
    auto* ohasse = orbits->add_subcommand("hasse", "covering relations of the dominance order");
    auto* ovorbit = orbits->add_subcommand("vorbit", "h_O weights, j_alpha and V_O");
    std::string orbit_spec;
    ovorbit->add_option("--orbit", orbit_spec, "partition, e.g. 3,1,1")->required();
    auto* ostab = orbits->add_subcommand("stab-type", "generic stabilizer Lie type for (3^o 2^e 1^*)");
    std::string stab_spec;
    ostab->add_option("--orbit", stab_spec, "partition with parts <= 3")->required();

    auto* verify = app.add_subcommand("verify", "run the exhaustive verification suites");
    std::vector<std::string> only;
    std::string fault_name;
    long long sample = 0;
    verify->add_option("--suite", only, "run only the named suites");
    verify->add_option("--fault", fault_name, "inject a fault (flip-sigma) as a negative control");
    verify->add_option("--sample", sample, "sample this many random cocycle triples instead of all");

    auto* verify_cocycle_cmd = app.add_subcommand("verify-cocycle", "run only the 2-cocycle identity suite");
    std::string vc_fault;
    long long vc_sample = 0;
    verify_cocycle_cmd->add_option("--fault", vc_fault, "inject a fault (flip-sigma)");
    verify_cocycle_cmd->add_option("--sample", vc_sample, "sample random triples instead of all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*roots) return cmd_roots(g);
        if (*sigma) return cmd_sigma(g, t_toks, t2_toks);
        if (*comm) return cmd_commutator(g, b_toks, b2_toks);
        if (*subgroup) {
            if (*member) return cmd_subgroup_member(g, which, basis_name, m_toks);
            if (*centralizer) return cmd_subgroup_centralizer(g, of);
            if (*maximal) return cmd_subgroup_maximal(g, max_which);
            std::cerr << "subgroup: need one of member, centralizer, maximal-abelian\n";
            return kExitUsage;
        }
        if (*chi) {
            if (*chi_eval) return cmd_chi(g, variant, eta_unit, eta_pi, a_toks, t1_tok, d_tok);
            std::cerr << "chi: need the eval subcommand\n";
            return kExitUsage;
        }
        if (*gk) return cmd_gk(g, gk_w);
        if (*pole) return cmd_pole_order(g, pole_w);
        if (*orbits) {
            if (*olist) return cmd_orbits_list(g);
            if (*ohasse) return cmd_orbits_hasse(g);
            if (*ovorbit) return cmd_orbits_vorbit(g, orbit_spec);
            if (*ostab) return cmd_orbits_stab(g, stab_spec);
            std::cerr << "orbits: need one of list, hasse, vorbit, stab-type\n";
            return kExitUsage;
        }
        if (*verify) return cmd_verify(g, only, fault_name, sample);
        if (*verify_cocycle_cmd) return cmd_verify(g, {"cocycle"}, vc_fault, vc_sample);
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceBound;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
