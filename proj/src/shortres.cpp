#include "noetherres/shortres.hpp"

#include <algorithm>
#include <map>

namespace nres {

namespace {

// descending lex reading x_{n-d}, x_{n-d-1}, ..., x_1 (the paper-facing
// labeling of standard monomials)
bool label_greater(const Monomial& a, const Monomial& b, std::size_t front) {
    for (std::size_t i = front; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

// descending lex on A-monomials reading x_{n-d+1} first
bool amon_greater(const Monomial& a, const Monomial& b, std::size_t front) {
    for (std::size_t i = front; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

std::vector<std::uint64_t> shifts_of(const std::vector<Monomial>& labels, const WeightVector& w) {
    std::vector<std::uint64_t> s;
    s.reserve(labels.size());
    for (const auto& m : labels) s.push_back(omega_degree(m, w));
    return s;
}

std::vector<std::vector<std::uint64_t>> multidegrees_of(const std::vector<Monomial>& labels,
                                                        const ToricPresentation& P) {
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(labels.size());
    for (const auto& m : labels) out.push_back(multidegree(m, P));
    return out;
}

PolyMatrix matrix_of(const std::vector<ModuleElement>& H, std::size_t rows, std::size_t nvars,
                     const FieldSpec& F, const MonomialOrder& ord) {
    PolyMatrix m(rows, H.size(), nvars, F);
    for (std::size_t c = 0; c < H.size(); ++c) {
        std::map<std::uint32_t, std::vector<Term>> per_row;
        for (const auto& t : H[c].terms())
            per_row[t.pos].push_back({t.c, t.m});
        for (auto& [r, ts] : per_row)
            m.at(r, c) = Polynomial::from_terms(std::move(ts), nvars, F, ord);
    }
    return m;
}

} // namespace

ShortResInput make_toric_input(const ToricPresentation& P, const FieldSpec& F) {
    ShortResInput in;
    in.generators = toric_ideal(P, F);
    in.weights = P.weights();
    in.dim = P.dim();
    in.field = F;
    in.toric = P;
    return in;
}

std::vector<Monomial> standard_monomials_B0(const std::vector<Monomial>& in_I,
                                            std::size_t nvars, std::size_t d) {
    if (d > nvars) fail("NotNoetherPosition", "d exceeds the variable count");
    const std::size_t front = nvars - d;

    for (const auto& g : in_I) {
        if (g.is_one()) return {}; // unit ideal, R/I = 0
        if (supported_in(g, front, nvars))
            fail("NotNoetherPosition",
                 "a leading term lies in the last " + std::to_string(d) + " variables");
    }

    std::vector<Monomial> free_gens;
    for (const auto& g : in_I)
        if (supported_in(g, 0, front)) free_gens.push_back(g);

    // finiteness: each front variable needs a pure power among the free
    // generators
    std::vector<Exp> bound(front, 0);
    for (std::size_t i = 0; i < front; ++i) {
        for (const auto& g : free_gens) {
            bool pure = true;
            for (std::size_t k = 0; k < front; ++k)
                if (k != i && g[k] != 0) { pure = false; break; }
            if (pure && g[i] > 0) {
                if (bound[i] == 0 || g[i] < bound[i]) bound[i] = g[i];
            }
        }
        if (bound[i] == 0)
            fail("NotNoetherPosition",
                 "no pure power of x" + std::to_string(i + 1) +
                     " in the leading-term ideal; the standard monomial set is infinite");
    }

    std::vector<Monomial> out;
    Monomial cur(nvars);
    auto emit = [&](auto&& self, std::size_t i) -> void {
        if (i == front) {
            for (const auto& g : free_gens)
                if (divides(g, cur)) return;
            out.push_back(cur);
            return;
        }
        for (Exp e = 0; e < bound[i]; ++e) {
            cur[i] = e;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    emit(emit, 0);

    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return label_greater(a, b, front); });
    return out;
}

std::vector<Monomial> colon_into_A(const std::vector<Monomial>& in_I, const Monomial& u,
                                   std::size_t d) {
    const std::size_t nvars = u.nvars();
    const std::size_t front = nvars - d;
    std::vector<Monomial> gens;
    for (const auto& g : in_I) {
        Monomial h = quotient(g, gcd(g, u));
        if (supported_in(h, front, nvars)) gens.push_back(std::move(h));
    }
    // minimal generating set of the monomial ideal
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            if (divides(gens[j], gens[i]) && (gens[j] != gens[i] || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return amon_greater(a, b, front); });
    return out;
}

SyzygyGenerators syzygy_generators(const GroebnerBasis& G, const std::vector<Monomial>& B0,
                                   const WeightVector& w, std::size_t d) {
    const std::size_t nvars = w.size();
    const std::size_t front = nvars - d;
    const FieldSpec F = G.elements.empty() ? FieldSpec() :
        FieldSpec(G.elements.front().leading_coefficient().characteristic());

    std::vector<Monomial> in_I;
    in_I.reserve(G.elements.size());
    for (const auto& g : G.elements) in_I.push_back(g.leading_monomial());

    std::map<Monomial, std::uint32_t> index;
    for (std::size_t i = 0; i < B0.size(); ++i) index.emplace(B0[i], static_cast<std::uint32_t>(i));

    ModuleOrder sl(G.order, B0);

    SyzygyGenerators out{{}, {}, B0};
    for (std::size_t ui = 0; ui < B0.size(); ++ui) {
        const Monomial& u = B0[ui];
        // u belongs to J iff some chi(g) divides u
        bool in_J = false;
        for (const auto& g : in_I)
            if (divides(restrict_to(g, 0, front), u)) { in_J = true; break; }
        if (!in_J) continue;

        for (const Monomial& M : colon_into_A(in_I, u, d)) {
            Monomial alpha = mul(u, M);
            Polynomial r = normal_form(
                Polynomial::monomial(FieldElement::one(F), alpha, F), G);
            std::vector<ModuleTerm> terms;
            terms.push_back({FieldElement::one(F), M, static_cast<std::uint32_t>(ui)});
            for (const auto& t : r.terms()) {
                Monomial vpart = restrict_to(t.m, 0, front);
                Monomial apart = restrict_to(t.m, front, nvars);
                auto it = index.find(vpart);
                if (it == index.end())
                    fail("InternalError", "normal form contains a monomial outside the basis");
                terms.push_back({-t.c, apart, it->second});
            }
            ModuleElement h = ModuleElement::from_terms(std::move(terms), sl);
            if (h.leading_term().pos != ui || h.leading_term().m != M)
                fail("InternalError", "kernel generator has an unexpected initial term");
            out.B1prime.push_back(std::move(alpha));
            out.H.push_back(std::move(h));
        }
    }
    return out;
}

ShortResResult short_resolution(const ShortResInput& input) {
    const std::size_t n = input.weights.size();
    const std::size_t d = input.dim;
    if (d == 0 || d > n) fail("NotNoetherPosition", "invalid dimension d");
    for (const auto& g : input.generators) {
        if (g.nvars() != n) fail("LengthMismatch", "generator in a different ring");
        if (!g.is_homogeneous(input.weights))
            fail("NotHomogeneous", "a generator is not homogeneous for the weight vector");
    }
    const FieldSpec F = input.field;
    for (const auto& g : input.generators)
        if (!g.is_zero() && g.leading_coefficient().characteristic() != F.characteristic())
            fail("FieldMismatch", "generator coefficients do not match the declared field");

    MonomialOrder ord = MonomialOrder::weighted_degrevlex(input.weights);
    ShortResResult res;
    res.gb = reduced_groebner_basis(input.generators, ord);

    std::vector<Monomial> in_I;
    for (const auto& g : res.gb.elements) in_I.push_back(g.leading_monomial());
    res.B0 = standard_monomials_B0(in_I, n, d);

    GradedFreeResolution schenk;
    schenk.nvars = n;
    schenk.dim = d;
    schenk.weights = input.weights;
    schenk.field = F;
    schenk.steps.push_back({res.B0, shifts_of(res.B0, input.weights), {}});
    if (input.toric)
        schenk.steps.back().multidegrees = multidegrees_of(res.B0, *input.toric);

    SyzygyGenerators syz = syzygy_generators(res.gb, res.B0, input.weights, d);
    if (!syz.H.empty()) {
        ModuleOrder sl(ord, res.B0);
        schenk.steps.push_back({syz.B1prime, shifts_of(syz.B1prime, input.weights), {}});
        if (input.toric)
            schenk.steps.back().multidegrees = multidegrees_of(syz.B1prime, *input.toric);
        schenk.diffs.push_back(matrix_of(syz.H, res.B0.size(), n, F, ord));

        std::vector<ModuleElement> H = syz.H;
        ModuleOrder cur = sl;
        for (std::size_t iter = 0;; ++iter) {
            if (iter > d)
                fail("InternalError", "Schreyer iteration did not stop within d steps");
            SyzygyStep step = schreyer_syzygies(H, cur, SyzygyPairMode::Minimal);
            if (step.syzygies.empty()) break;
            schenk.steps.push_back({step.labels, shifts_of(step.labels, input.weights), {}});
            if (input.toric)
                schenk.steps.back().multidegrees = multidegrees_of(step.labels, *input.toric);
            schenk.diffs.push_back(matrix_of(step.syzygies, H.size(), n, F, ord));
            H = step.syzygies;
            cur = step.order;
        }
    }
    schenk.minimal = false;
    res.schreyer = std::move(schenk);
    res.minimal = minimalize(res.schreyer);
    res.pd_A = res.minimal.length();
    res.depth = d - res.pd_A;
    res.pd_R = res.pd_A + (n - d);
    res.multiplicity = multiplicity(res.schreyer);
    return res;
}

IntPoly hilbert_series_numerator(const GradedFreeResolution& res) {
    IntPoly h;
    for (std::size_t i = 0; i < res.steps.size(); ++i) {
        long long sign = (i % 2 == 0) ? 1 : -1;
        for (std::uint64_t s : res.steps[i].shifts) h.add(s, sign);
    }
    return h;
}

std::int64_t multiplicity(const GradedFreeResolution& res) {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < res.steps.size(); ++i) {
        std::int64_t r = static_cast<std::int64_t>(res.steps[i].shifts.size());
        e += (i % 2 == 0) ? r : -r;
    }
    return e;
}

std::int64_t regularity_from_resolution(const GradedFreeResolution& res) {
    std::uint32_t W = res.weights.size() ? res.weights[0] : 1;
    for (std::size_t i = 0; i < res.weights.size(); ++i)
        if (res.weights[i] != W)
            fail("NotStandardGraded",
                 "regularity needs a standard (or uniformly scaled) grading");
    std::int64_t reg = 0;
    for (std::size_t i = 0; i < res.steps.size(); ++i)
        for (std::uint64_t s : res.steps[i].shifts) {
            if (s % W != 0) fail("NotStandardGraded", "shift not divisible by the weight");
            reg = std::max(reg, static_cast<std::int64_t>(s / W) - static_cast<std::int64_t>(i));
        }
    return reg;
}

} // namespace nres
