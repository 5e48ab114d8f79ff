#include "dioph/carry_monoid.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

#include "dioph/error.hpp"
#include "dioph/matrix.hpp"
#include "dioph/smith.hpp"

namespace dioph {

std::vector<i64> CarryMonoidSpec::element_at(i64 index) const {
    const auto& d = group.invariant_factors;
    if (index < 0 || index >= order()) fail(ErrorCode::SpecMismatch, "element index out of range");
    std::vector<i64> g(d.size());
    for (size_t i = d.size(); i-- > 0;) {
        g[i] = index % d[i];
        index /= d[i];
    }
    return g;
}

i64 CarryMonoidSpec::index_of(const std::vector<i64>& g) const {
    const auto& d = group.invariant_factors;
    if (g.size() != d.size())
        fail(ErrorCode::SpecMismatch, "group tuple has wrong length");
    i64 idx = 0;
    for (size_t i = 0; i < d.size(); ++i) {
        if (g[i] < 0 || g[i] >= d[i])
            fail(ErrorCode::SpecMismatch, "tuple entry out of range for its factor");
        idx = idx * d[i] + g[i];
    }
    return idx;
}

std::vector<i64> CarryMonoidSpec::group_add(const std::vector<i64>& g,
                                            const std::vector<i64>& h) const {
    const auto& d = group.invariant_factors;
    index_of(g);
    index_of(h);
    std::vector<i64> out(d.size());
    for (size_t i = 0; i < d.size(); ++i) out[i] = (g[i] + h[i]) % d[i];
    return out;
}

std::vector<i64> CarryMonoidSpec::group_negate(const std::vector<i64>& g) const {
    const auto& d = group.invariant_factors;
    index_of(g);
    std::vector<i64> out(d.size());
    for (size_t i = 0; i < d.size(); ++i) out[i] = (d[i] - g[i]) % d[i];
    return out;
}

namespace {

void validate_spec(const CarryMonoidSpec& spec) {
    if (spec.ray_count < 0) fail(ErrorCode::SpecMismatch, "negative ray count");
    const i64 n = spec.order();
    if (static_cast<i64>(spec.table.size()) != checked_mul(n, n))
        fail(ErrorCode::SpecMismatch, "carry table must have |G|^2 entries");
    for (const auto& v : spec.table) {
        if (static_cast<int>(v.size()) != spec.ray_count)
            fail(ErrorCode::SpecMismatch, "carry vector length does not match ray count");
        for (i64 e : v)
            if (e < 0) fail(ErrorCode::SpecMismatch, "carry multiplicities must be nonnegative");
    }
}

std::string tuple_str(const std::vector<i64>& t) { return point_to_string(t); }

} // namespace

CarryElement carry_add(const CarryMonoidSpec& spec, const CarryElement& x,
                       const CarryElement& y) {
    validate_spec(spec);
    if (static_cast<int>(x.f.size()) != spec.ray_count ||
        static_cast<int>(y.f.size()) != spec.ray_count)
        fail(ErrorCode::SpecMismatch, "free part length does not match ray count");
    const i64 xi = spec.index_of(x.g);
    const i64 yi = spec.index_of(y.g);
    CarryElement out;
    out.g = spec.group_add(x.g, y.g);
    out.f.resize(x.f.size());
    const CarryVector& cv = spec.carry_at(xi, yi);
    for (size_t i = 0; i < out.f.size(); ++i)
        out.f[i] = checked_add(checked_add(x.f[i], y.f[i]), cv[i]);
    return out;
}

bool AxiomReport::all_passed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const Entry& e) { return e.passed; });
}

AxiomReport check_axioms(const CarryMonoidSpec& spec, i64 depth_bound, i64 coord_bound) {
    validate_spec(spec);
    if (depth_bound < 1) fail(ErrorCode::BadInput, "depth bound must be positive");
    if (coord_bound < 1) fail(ErrorCode::BadInput, "coordinate bound must be positive");

    const i64 n = spec.order();
    const int q = spec.ray_count;
    AxiomReport report;
    report.entries.resize(5);
    for (int i = 0; i < 5; ++i) {
        report.entries[static_cast<size_t>(i)].axiom = i + 1;
        report.entries[static_cast<size_t>(i)].passed = true;
    }

    // index-level group addition table, shared by the exhaustive scans
    std::vector<i64> add(static_cast<size_t>(n) * n);
    for (i64 a = 0; a < n; ++a) {
        const auto ea = spec.element_at(a);
        for (i64 b = 0; b < n; ++b)
            add[static_cast<size_t>(a) * n + b] = spec.index_of(spec.group_add(ea, spec.element_at(b)));
    }

    // axiom 1: symmetry
    for (i64 a = 0; a < n && report.entries[0].passed; ++a)
        for (i64 b = a + 1; b < n; ++b)
            if (spec.carry_at(a, b) != spec.carry_at(b, a)) {
                report.entries[0].passed = false;
                report.entries[0].counterexample =
                    "I(a,b) != I(b,a) at a=" + tuple_str(spec.element_at(a)) +
                    ", b=" + tuple_str(spec.element_at(b));
                break;
            }

    // axiom 2: I(a, 0) = 0
    const CarryVector zero(static_cast<size_t>(q), 0);
    for (i64 a = 0; a < n; ++a)
        if (spec.carry_at(a, 0) != zero) {
            report.entries[1].passed = false;
            report.entries[1].counterexample =
                "I(a,0) = " + tuple_str(spec.carry_at(a, 0)) +
                " at a=" + tuple_str(spec.element_at(a));
            break;
        }

    // axiom 3: cocycle identity
    for (i64 a = 0; a < n && report.entries[2].passed; ++a)
        for (i64 b = 0; b < n && report.entries[2].passed; ++b)
            for (i64 c = 0; c < n; ++c) {
                const auto& iab = spec.carry_at(a, b);
                const auto& iabc = spec.carry_at(add[static_cast<size_t>(a) * n + b], c);
                const auto& ibc = spec.carry_at(b, c);
                const auto& ibca = spec.carry_at(a, add[static_cast<size_t>(b) * n + c]);
                bool ok = true;
                for (int i = 0; i < q && ok; ++i)
                    ok = iab[static_cast<size_t>(i)] + iabc[static_cast<size_t>(i)] ==
                         ibc[static_cast<size_t>(i)] + ibca[static_cast<size_t>(i)];
                if (!ok) {
                    report.entries[2].passed = false;
                    report.entries[2].counterexample =
                        "cocycle fails at a=" + tuple_str(spec.element_at(a)) +
                        ", b=" + tuple_str(spec.element_at(b)) +
                        ", c=" + tuple_str(spec.element_at(c));
                    break;
                }
            }

    // axiom 4: the carry of a + (-a) is neither empty nor a single ray
    for (i64 a = 1; a < n; ++a) {
        const auto& v = spec.carry_at(a, spec.index_of(spec.group_negate(spec.element_at(a))));
        i64 total = 0;
        for (i64 e : v) total += e;
        if (total <= 1) { // zero carry or a single ray
            report.entries[3].passed = false;
            report.entries[3].counterexample =
                "I(a,-a) = " + tuple_str(v) + " at a=" + tuple_str(spec.element_at(a));
            break;
        }
    }

    // axiom 5 (bounded): prefix sums S_n = sum_{i=1}^{n-1} I(a, i*a) must not
    // absorb any f with a negative entry: S_n + n*f >= 0 forces f >= 0.
    {
        // all f in [-B, B]^q with at least one negative entry, lex order
        std::vector<std::vector<i64>> probes;
        std::vector<i64> f(static_cast<size_t>(q), -coord_bound);
        for (;;) {
            if (std::any_of(f.begin(), f.end(), [](i64 e) { return e < 0; }))
                probes.push_back(f);
            int pos = q - 1;
            while (pos >= 0 && ++f[static_cast<size_t>(pos)] > coord_bound)
                f[static_cast<size_t>(pos--)] = -coord_bound;
            if (pos < 0) break;
        }

        bool done = false;
        for (i64 a = 0; a < n && !done; ++a) {
            CarryVector s(static_cast<size_t>(q), 0); // S_1 = empty sum
            i64 ia = a;                               // i*a for the running i
            for (i64 nn = 1; nn <= depth_bound && !done; ++nn) {
                for (const auto& fr : probes) {
                    bool absorbed = true;
                    for (int i = 0; i < q && absorbed; ++i)
                        absorbed = s[static_cast<size_t>(i)] +
                                       checked_mul(nn, fr[static_cast<size_t>(i)]) >=
                                   0;
                    if (absorbed) {
                        report.entries[4].passed = false;
                        report.entries[4].counterexample =
                            "S_" + std::to_string(nn) + " + " + std::to_string(nn) + "*f >= 0 at a=" +
                            tuple_str(spec.element_at(a)) + ", f=" + tuple_str(fr);
                        done = true;
                        break;
                    }
                }
                // S_{n+1} = S_n + I(a, n*a)
                const auto& inc = spec.carry_at(a, ia);
                for (int i = 0; i < q; ++i)
                    s[static_cast<size_t>(i)] = checked_add(s[static_cast<size_t>(i)],
                                                            inc[static_cast<size_t>(i)]);
                ia = add[static_cast<size_t>(ia) * n + a];
            }
        }
    }

    return report;
}

namespace {

// Greedy generating set of (Ap, (+)) with an expression vector over the
// generators for every element, found by repeated closure passes.
struct GeneratedGroup {
    std::vector<size_t> gens;             // indices into the Apery table
    std::vector<std::vector<i64>> expr;   // element index -> coefficients over gens
};

GeneratedGroup discover_generators(const std::vector<size_t>& add, size_t n) {
    GeneratedGroup g;
    g.expr.resize(n);
    std::vector<char> known(n, 0);
    known[0] = 1;
    for (;;) {
        size_t next = n;
        for (size_t i = 0; i < n; ++i)
            if (!known[i]) {
                next = i;
                break;
            }
        if (next == n) break;
        for (size_t i = 0; i < n; ++i)
            if (known[i]) g.expr[i].push_back(0);
        g.gens.push_back(next);
        known[next] = 1;
        g.expr[next] = std::vector<i64>(g.gens.size(), 0);
        g.expr[next].back() = 1;
        for (bool changed = true; changed;) {
            changed = false;
            for (size_t i = 0; i < n; ++i) {
                if (!known[i]) continue;
                for (size_t j = 0; j < g.gens.size(); ++j) {
                    const size_t t = add[i * n + g.gens[j]];
                    if (known[t]) continue;
                    known[t] = 1;
                    g.expr[t] = g.expr[i];
                    ++g.expr[t][j];
                    changed = true;
                }
            }
        }
    }
    return g;
}

} // namespace

CanonicalCarrySpec canonical_spec(const EquationSpec& eq, i64 guard) {
    const AperyTable ap = apery_box(eq, guard);
    const size_t n = ap.size();
    const auto& w = eq.widths;
    const int dim = eq.dim();

    // (+) as an index table; the apery part of a sum of two box elements
    // is the coordinatewise remainder
    std::vector<size_t> add(n * n);
    {
        LatticePoint sum(static_cast<size_t>(dim));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                for (int k = 0; k < dim; ++k)
                    sum[static_cast<size_t>(k)] =
                        (ap.elements[i][static_cast<size_t>(k)] +
                         ap.elements[j][static_cast<size_t>(k)]) %
                        w[static_cast<size_t>(k)];
                const auto idx = ap.index_of(sum);
                if (!idx) fail(ErrorCode::Internal, "Apery set is not closed under (+)");
                add[i * n + j] = *idx;
            }
    }

    CanonicalCarrySpec out;
    out.spec.ray_count = dim;

    const GeneratedGroup gg = discover_generators(add, n);
    const size_t m = gg.gens.size();

    if (m == 0) {
        out.spec.group = FiniteAbelianGroup::trivial();
        out.apery_by_index = {ap.elements[0]};
    } else {
        // orders and power tables of the generators
        std::vector<i64> ord(m);
        std::vector<std::vector<size_t>> pow(m);
        for (size_t j = 0; j < m; ++j) {
            pow[j].push_back(0);
            size_t cur = gg.gens[j];
            while (cur != 0) {
                pow[j].push_back(cur);
                cur = add[cur * n + gg.gens[j]];
            }
            ord[j] = static_cast<i64>(pow[j].size());
        }

        // relation lattice of the presentation Z^m -> (Ap, (+)):
        // the order relations plus every kernel tuple inside the order box
        std::vector<std::vector<i64>> rel;
        for (size_t j = 0; j < m; ++j) {
            std::vector<i64> row(m, 0);
            row[j] = ord[j];
            rel.push_back(std::move(row));
        }
        i64 vol = 1;
        for (size_t j = 0; j < m; ++j) vol = checked_mul(vol, ord[j]);
        if (vol > guard)
            fail(ErrorCode::BoxTooLarge, "relation search space exceeds the guard");
        std::vector<i64> z(m, 0);
        for (;;) {
            size_t e = 0;
            for (size_t j = 0; j < m; ++j)
                e = add[e * n + pow[j][static_cast<size_t>(z[j])]];
            if (e == 0 && std::any_of(z.begin(), z.end(), [](i64 v) { return v != 0; }))
                rel.push_back(z);
            int pos = static_cast<int>(m) - 1;
            while (pos >= 0 && ++z[static_cast<size_t>(pos)] >= ord[static_cast<size_t>(pos)])
                z[static_cast<size_t>(pos--)] = 0;
            if (pos < 0) break;
        }

        const SmithDecomposition sd = smith_decompose(IntMatrix::from_rows(rel));
        for (i64 d : sd.diagonal)
            if (d == 0) fail(ErrorCode::Internal, "relation lattice is not of full rank");

        std::vector<i64> factors;
        std::vector<size_t> keep; // diagonal positions with d > 1
        for (size_t i = 0; i < sd.diagonal.size(); ++i)
            if (sd.diagonal[i] > 1) {
                factors.push_back(sd.diagonal[i]);
                keep.push_back(i);
            }
        out.spec.group = FiniteAbelianGroup::from_factors(factors);

        // transport each element through x -> (x * V) mod d, keeping the
        // coordinates of the nontrivial factors
        out.apery_by_index.assign(n, {});
        std::vector<char> seen(n, 0);
        for (size_t i = 0; i < n; ++i) {
            std::vector<i64> t(keep.size());
            for (size_t kk = 0; kk < keep.size(); ++kk) {
                const size_t col = keep[kk];
                i64 acc = 0;
                for (size_t j = 0; j < m; ++j)
                    acc = checked_add(acc, checked_mul(gg.expr[i][j],
                                                       sd.right.at(static_cast<int>(j),
                                                                   static_cast<int>(col))));
                const i64 d = sd.diagonal[col];
                acc %= d;
                if (acc < 0) acc += d;
                t[kk] = acc;
            }
            const i64 tidx = out.spec.index_of(t);
            if (seen[static_cast<size_t>(tidx)])
                fail(ErrorCode::Internal, "group coordinates are not injective");
            seen[static_cast<size_t>(tidx)] = 1;
            out.apery_by_index[static_cast<size_t>(tidx)] = ap.elements[i];
        }
    }

    // carry table in the transported coordinates
    const i64 order = out.spec.order();
    out.spec.table.assign(static_cast<size_t>(order) * order,
                          CarryVector(static_cast<size_t>(dim), 0));
    for (i64 gi = 0; gi < order; ++gi)
        for (i64 hi = 0; hi < order; ++hi) {
            const auto& a = out.apery_by_index[static_cast<size_t>(gi)];
            const auto& b = out.apery_by_index[static_cast<size_t>(hi)];
            CarryVector& cv = out.spec.table[static_cast<size_t>(gi) * order + hi];
            for (int k = 0; k < dim; ++k)
                cv[static_cast<size_t>(k)] = (a[static_cast<size_t>(k)] +
                                              b[static_cast<size_t>(k)]) /
                                             w[static_cast<size_t>(k)];
        }

    return out;
}

bool verify_isomorphism(const EquationSpec& eq, const CanonicalCarrySpec& canonical,
                        i64 coord_bound, i64 guard) {
    if (coord_bound < 0) fail(ErrorCode::BadInput, "coordinate bound must be nonnegative");
    const CarryMonoidSpec& spec = canonical.spec;
    validate_spec(spec);
    const i64 n = spec.order();
    const int dim = eq.dim();
    if (spec.ray_count != dim)
        fail(ErrorCode::SpecMismatch, "spec ray count does not match the equation");
    if (static_cast<i64>(canonical.apery_by_index.size()) != n)
        fail(ErrorCode::SpecMismatch, "isomorphism table does not cover the group");

    // window of elements (g, f), f in [0, B]^dim
    i64 window = n;
    for (int i = 0; i < dim; ++i) window = checked_mul(window, coord_bound + 1);
    if (window > guard || (window > 0 && window > guard / window))
        fail(ErrorCode::BoxTooLarge, "isomorphism pair scan exceeds the guard");

    std::vector<std::vector<i64>> fs; // all free parts, lex order
    {
        std::vector<i64> f(static_cast<size_t>(dim), 0);
        for (;;) {
            fs.push_back(f);
            int pos = dim - 1;
            while (pos >= 0 && ++f[static_cast<size_t>(pos)] > coord_bound)
                f[static_cast<size_t>(pos--)] = 0;
            if (pos < 0) break;
        }
    }
    const size_t fcount = fs.size();

    // psi images and the group-index addition table
    const auto& w = eq.widths;
    std::vector<LatticePoint> psi(static_cast<size_t>(n) * fcount);
    for (i64 g = 0; g < n; ++g)
        for (size_t fi = 0; fi < fcount; ++fi) {
            LatticePoint p(static_cast<size_t>(dim));
            for (int k = 0; k < dim; ++k)
                p[static_cast<size_t>(k)] =
                    canonical.apery_by_index[static_cast<size_t>(g)][static_cast<size_t>(k)] +
                    fs[fi][static_cast<size_t>(k)] * w[static_cast<size_t>(k)];
            psi[static_cast<size_t>(g) * fcount + fi] = std::move(p);
        }

    std::vector<i64> addg(static_cast<size_t>(n) * n);
    for (i64 a = 0; a < n; ++a) {
        const auto ea = spec.element_at(a);
        for (i64 b = 0; b < n; ++b)
            addg[static_cast<size_t>(a) * n + b] = spec.index_of(spec.group_add(ea, spec.element_at(b)));
    }

    // additivity: psi(x + y) = psi(x) + psi(y) for all pairs in the window
    for (i64 g1 = 0; g1 < n; ++g1)
        for (size_t f1 = 0; f1 < fcount; ++f1)
            for (i64 g2 = 0; g2 < n; ++g2)
                for (size_t f2 = 0; f2 < fcount; ++f2) {
                    const i64 gs = addg[static_cast<size_t>(g1) * n + g2];
                    const auto& cv = spec.carry_at(g1, g2);
                    const auto& p1 = psi[static_cast<size_t>(g1) * fcount + f1];
                    const auto& p2 = psi[static_cast<size_t>(g2) * fcount + f2];
                    const auto& aps = canonical.apery_by_index[static_cast<size_t>(gs)];
                    for (int k = 0; k < dim; ++k) {
                        const i64 fsum = fs[f1][static_cast<size_t>(k)] +
                                         fs[f2][static_cast<size_t>(k)] +
                                         cv[static_cast<size_t>(k)];
                        if (aps[static_cast<size_t>(k)] + fsum * w[static_cast<size_t>(k)] !=
                            p1[static_cast<size_t>(k)] + p2[static_cast<size_t>(k)])
                            return false;
                    }
                }

    // bijectivity onto M cut to the box prod [0, (B+1) * w_i)
    std::vector<LatticePoint> images = psi;
    std::sort(images.begin(), images.end());
    for (size_t i = 1; i < images.size(); ++i)
        if (images[i] == images[i - 1]) return false;

    std::vector<i64> upper(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i)
        upper[static_cast<size_t>(i)] = checked_mul(coord_bound + 1, w[static_cast<size_t>(i)]);
    i64 vol = 1;
    for (i64 u : upper) vol = checked_mul(vol, u);
    if (vol > guard) fail(ErrorCode::BoxTooLarge, "membership box exceeds the guard");

    std::vector<LatticePoint> sols;
    LatticePoint x(static_cast<size_t>(dim), 0);
    for (;;) {
        if (contains(eq, x)) sols.push_back(x);
        int pos = dim - 1;
        while (pos >= 0 && ++x[static_cast<size_t>(pos)] >= upper[static_cast<size_t>(pos)])
            x[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return images == sols;
}

std::string carry_spec_to_json(const CarryMonoidSpec& spec, int indent) {
    validate_spec(spec);
    nlohmann::json doc;
    doc["invariant_factors"] = spec.group.invariant_factors;
    doc["ray_count"] = spec.ray_count;
    nlohmann::json table = nlohmann::json::array();
    const i64 n = spec.order();
    for (i64 g = 0; g < n; ++g)
        for (i64 h = 0; h < n; ++h)
            table.push_back({{"g", spec.element_at(g)},
                             {"h", spec.element_at(h)},
                             {"carry", spec.carry_at(g, h)}});
    doc["table"] = std::move(table);
    return doc.dump(indent);
}

CarryMonoidSpec carry_spec_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::BadInput, std::string("malformed JSON: ") + e.what());
    }
    try {
        CarryMonoidSpec spec;
        spec.group = FiniteAbelianGroup::from_factors(
            doc.at("invariant_factors").get<std::vector<i64>>());
        spec.ray_count = doc.at("ray_count").get<int>();
        if (spec.ray_count < 0) fail(ErrorCode::BadInput, "negative ray count");
        const i64 n = spec.order();
        const auto& table = doc.at("table");
        if (static_cast<i64>(table.size()) != checked_mul(n, n))
            fail(ErrorCode::BadInput, "carry table must have |G|^2 entries");
        spec.table.assign(table.size(), {});
        std::vector<char> seen(table.size(), 0);
        for (const auto& entry : table) {
            const i64 g = spec.index_of(entry.at("g").get<std::vector<i64>>());
            const i64 h = spec.index_of(entry.at("h").get<std::vector<i64>>());
            auto cv = entry.at("carry").get<CarryVector>();
            if (static_cast<int>(cv.size()) != spec.ray_count)
                fail(ErrorCode::BadInput, "carry vector length does not match ray count");
            for (i64 e : cv)
                if (e < 0) fail(ErrorCode::BadInput, "carry multiplicities must be nonnegative");
            const size_t pos = static_cast<size_t>(g) * n + h;
            if (seen[pos]) fail(ErrorCode::BadInput, "duplicate (g, h) table entry");
            seen[pos] = 1;
            spec.table[pos] = std::move(cv);
        }
        for (char s : seen)
            if (!s) fail(ErrorCode::BadInput, "missing (g, h) table entry");
        return spec;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::BadInput, std::string("bad carry spec document: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SpecMismatch)
            fail(ErrorCode::BadInput, std::string("bad carry spec document: ") + e.what());
        throw;
    }
}

} // namespace dioph
