#include "gradus/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gradus {

Rat RootSystem::pair(const QVec& y, const QVec& x) const {
    Rat acc(0);
    for (size_t i = 0; i < dim_y; ++i) {
        if (y[i] == 0) continue;
        for (size_t j = 0; j < dim_x; ++j)
            if (pairing[i][j] != 0 && x[j] != 0) acc += y[i] * pairing[i][j] * x[j];
    }
    return acc;
}

std::optional<size_t> RootSystem::root_index(const QVec& x) const {
    for (size_t a = 0; a < roots.size(); ++a)
        if (roots[a] == x) return a;
    return std::nullopt;
}

QVec RootSystem::reflect_y(size_t a, const QVec& y) const {
    Rat c = pair(y, roots[a]);
    QVec r = y;
    for (size_t i = 0; i < dim_y; ++i) r[i] -= c * coroots[a][i];
    return r;
}

QVec RootSystem::reflect_x(size_t a, const QVec& x) const {
    Rat c = pair(coroots[a], x);
    QVec r = x;
    for (size_t j = 0; j < dim_x; ++j) r[j] -= c * roots[a][j];
    return r;
}

size_t RootSystem::rank() const {
    if (roots.empty()) return 0;
    QMat m = roots;
    return q_rank(m);
}

std::vector<QVec> RootSystem::coroot_span_basis() const {
    QMat m = coroots;
    if (m.empty()) return {};
    auto copy = m;
    auto pivots = q_rref(copy);
    // Keep the original coroots whose indices realize the rank greedily.
    std::vector<QVec> basis;
    QMat acc;
    for (const auto& v : m) {
        acc.push_back(v);
        if (q_rank(acc) == basis.size() + 1)
            basis.push_back(v);
        else
            acc.pop_back();
        if (basis.size() == pivots.size()) break;
    }
    return basis;
}

void RootSystem::validate() const {
    if (pairing.size() != dim_y)
        throw InputError("pairing row count mismatch");
    for (const auto& row : pairing)
        if (row.size() != dim_x) throw InputError("pairing column count mismatch");
    if (dim_y != dim_x || (dim_y > 0 && q_rank(pairing) != dim_y))
        throw InputError("pairing is not perfect");
    if (roots.size() != coroots.size() || roots.size() != neg.size())
        throw InputError("root/coroot misalignment");
    std::set<QVec> seen;
    for (size_t a = 0; a < roots.size(); ++a) {
        if (!seen.insert(roots[a]).second) throw InputError("duplicate root");
        if (pair(coroots[a], roots[a]) != 2)
            throw InputError("(coroot, root) != 2 at index " + std::to_string(a));
        QVec m = roots[a];
        for (auto& c : m) c = -c;
        if (roots[neg[a]] != m) throw InputError("negation table broken");
    }
    for (size_t a = 0; a < roots.size(); ++a)
        for (size_t b = 0; b < roots.size(); ++b)
            if (!root_index(reflect_x(a, roots[b])))
                throw InputError("reflection does not permute R");
}

std::string RootSystem::subset_key(const std::vector<size_t>& subset) const {
    std::vector<std::string> parts;
    for (size_t a : subset) {
        std::ostringstream os;
        for (const auto& c : roots[a]) os << c << ",";
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (auto& p : parts) key += p + ";";
    return key;
}

namespace {

void push_root(RootSystem& rs, const QVec& root, const QVec& coroot) {
    rs.roots.push_back(root);
    rs.coroots.push_back(coroot);
}

void finish_negation_table(RootSystem& rs) {
    rs.neg.assign(rs.roots.size(), 0);
    for (size_t a = 0; a < rs.roots.size(); ++a) {
        QVec m = rs.roots[a];
        for (auto& c : m) c = -c;
        auto idx = rs.root_index(m);
        if (!idx) throw InputError("root set not closed under negation");
        rs.neg[a] = *idx;
    }
}

QVec unit(size_t n, size_t i, const Rat& c = Rat(1)) {
    QVec v(n, Rat(0));
    v[i] = c;
    return v;
}

// Classical families in standard coordinates with the dot-product pairing.
RootSystem standard_classical(char family, size_t n) {
    size_t dim = family == 'A' ? n + 1 : n;
    RootSystem rs;
    rs.dim_y = rs.dim_x = dim;
    rs.pairing = q_identity(dim);
    auto e = [&](size_t i) { return unit(dim, i); };
    auto add_pm = [&](const QVec& r, const QVec& cr) {
        push_root(rs, r, cr);
        QVec mr = r, mcr = cr;
        for (auto& c : mr) c = -c;
        for (auto& c : mcr) c = -c;
        push_root(rs, mr, mcr);
    };
    auto diff = [&](size_t i, size_t j) {
        QVec v(dim, Rat(0));
        v[i] = 1;
        v[j] = -1;
        return v;
    };
    auto sum2 = [&](size_t i, size_t j) {
        QVec v(dim, Rat(0));
        v[i] = 1;
        v[j] = 1;
        return v;
    };
    switch (family) {
        case 'A':
            if (n == 1) {  // the 1.8 realization: R = {±1}, coroots {±2}
                rs.dim_y = rs.dim_x = 1;
                rs.pairing = q_identity(1);
                add_pm(unit(1, 0), unit(1, 0, Rat(2)));
                return rs;
            }
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = i + 1; j < dim; ++j) add_pm(diff(i, j), diff(i, j));
            return rs;
        case 'B':
            for (size_t i = 0; i < n; ++i) add_pm(e(i), unit(dim, i, Rat(2)));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    add_pm(diff(i, j), diff(i, j));
                    add_pm(sum2(i, j), sum2(i, j));
                }
            return rs;
        case 'C':
            for (size_t i = 0; i < n; ++i) add_pm(unit(dim, i, Rat(2)), e(i));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    add_pm(diff(i, j), diff(i, j));
                    add_pm(sum2(i, j), sum2(i, j));
                }
            return rs;
        case 'D':
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    add_pm(diff(i, j), diff(i, j));
                    add_pm(sum2(i, j), sum2(i, j));
                }
            return rs;
        default:
            throw InputError("unknown classical family");
    }
}

// Exceptional types from the Cartan matrix, in simple-root coordinates:
// Y has the simple coroots as basis, X the fundamental weights, so the
// pairing is the identity and simple root j has coordinates = column j of
// the Cartan matrix.
RootSystem from_cartan_matrix(const std::vector<std::vector<int>>& cartan) {
    size_t n = cartan.size();
    RootSystem rs;
    rs.dim_y = rs.dim_x = n;
    rs.pairing = q_identity(n);
    std::vector<QVec> simple_roots(n, QVec(n)), simple_coroots(n, QVec(n));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            simple_roots[j][i] = cartan[i][j];
            simple_coroots[j][i] = (i == j) ? 1 : 0;
        }
    // Closure of (root, coroot) pairs under the simple reflections.
    std::vector<std::pair<QVec, QVec>> pool;
    std::set<QVec> seen;
    for (size_t j = 0; j < n; ++j) {
        pool.emplace_back(simple_roots[j], simple_coroots[j]);
        seen.insert(simple_roots[j]);
    }
    auto refl_x = [&](size_t s, const QVec& x) {
        Rat c(0);
        for (size_t i = 0; i < n; ++i) c += simple_coroots[s][i] * x[i];
        QVec r = x;
        for (size_t i = 0; i < n; ++i) r[i] -= c * simple_roots[s][i];
        return r;
    };
    auto refl_y = [&](size_t s, const QVec& y) {
        Rat c(0);
        for (size_t i = 0; i < n; ++i) c += y[i] * simple_roots[s][i];
        QVec r = y;
        for (size_t i = 0; i < n; ++i) r[i] -= c * simple_coroots[s][i];
        return r;
    };
    for (size_t k = 0; k < pool.size(); ++k) {
        for (size_t s = 0; s < n; ++s) {
            QVec nx = refl_x(s, pool[k].first);
            if (seen.insert(nx).second) pool.emplace_back(nx, refl_y(s, pool[k].second));
        }
        if (pool.size() > 300) throw InputError("root closure too large");
    }
    std::sort(pool.begin(), pool.end());
    for (auto& [r, cr] : pool) push_root(rs, r, cr);
    return rs;
}

RootSystem irreducible(const std::string& t) {
    if (t.size() < 2) throw InputError("unknown Cartan type '" + t + "'");
    char fam = t[0];
    size_t n = 0;
    try {
        n = std::stoul(t.substr(1));
    } catch (const std::exception&) {
        throw InputError("unknown Cartan type '" + t + "'");
    }
    if (n == 0) throw InputError("rank 0 in Cartan type '" + t + "'");
    switch (fam) {
        case 'A':
            return standard_classical('A', n);
        case 'B':
            if (n < 2) throw InputError("B requires rank >= 2");
            return standard_classical('B', n);
        case 'C':
            if (n < 2) throw InputError("C requires rank >= 2");
            return standard_classical('C', n);
        case 'D':
            if (n < 2) throw InputError("D requires rank >= 2");
            return standard_classical('D', n);
        case 'G':
            if (n != 2) throw InputError("G type has rank 2");
            return from_cartan_matrix({{2, -1}, {-3, 2}});
        case 'F':
            if (n != 4) throw InputError("F type has rank 4");
            return from_cartan_matrix(
                {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
        case 'E': {
            if (n < 6 || n > 8) throw InputError("E type has rank 6..8");
            std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
            // Bourbaki numbering: node 2 hangs off node 4.
            auto link = [&](size_t i, size_t j) { c[i - 1][j - 1] = c[j - 1][i - 1] = -1; };
            for (size_t i = 0; i < n; ++i) c[i][i] = 2;
            link(1, 3);
            link(3, 4);
            link(2, 4);
            link(4, 5);
            link(5, 6);
            if (n >= 7) link(6, 7);
            if (n >= 8) link(7, 8);
            return from_cartan_matrix(c);
        }
        default:
            throw InputError("unknown Cartan type '" + t + "'");
    }
}

RootSystem product(const RootSystem& a, const RootSystem& b) {
    RootSystem rs;
    rs.dim_y = a.dim_y + b.dim_y;
    rs.dim_x = a.dim_x + b.dim_x;
    rs.pairing = QMat(rs.dim_y, QVec(rs.dim_x, Rat(0)));
    for (size_t i = 0; i < a.dim_y; ++i)
        for (size_t j = 0; j < a.dim_x; ++j) rs.pairing[i][j] = a.pairing[i][j];
    for (size_t i = 0; i < b.dim_y; ++i)
        for (size_t j = 0; j < b.dim_x; ++j)
            rs.pairing[a.dim_y + i][a.dim_x + j] = b.pairing[i][j];
    auto embed = [](const QVec& v, size_t before, size_t after) {
        QVec r(before, Rat(0));
        r.insert(r.end(), v.begin(), v.end());
        r.insert(r.end(), after, Rat(0));
        return r;
    };
    for (size_t k = 0; k < a.roots.size(); ++k)
        push_root(rs, embed(a.roots[k], 0, b.dim_x), embed(a.coroots[k], 0, b.dim_y));
    for (size_t k = 0; k < b.roots.size(); ++k)
        push_root(rs, embed(b.roots[k], a.dim_x, 0), embed(b.coroots[k], a.dim_y, 0));
    return rs;
}

}  // namespace

RootSystem from_cartan_type(const std::string& type_spec) {
    RootSystem rs;
    if (type_spec.empty() || type_spec == "empty") {
        rs.dim_y = rs.dim_x = 0;
        rs.label = "empty";
        finish_negation_table(rs);
        return rs;
    }
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : type_spec) {
        if (ch == 'x' || ch == '*') {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    rs = irreducible(parts[0]);
    for (size_t k = 1; k < parts.size(); ++k) rs = product(rs, irreducible(parts[k]));
    rs.label = type_spec;
    finish_negation_table(rs);
    rs.validate();
    return rs;
}

WeylGroup weyl_group(const RootSystem& rs, std::vector<size_t> subset, size_t size_bound) {
    WeylGroup wg;
    if (subset.empty() && !rs.roots.empty()) {
        subset.resize(rs.roots.size());
        for (size_t a = 0; a < subset.size(); ++a) subset[a] = a;
    }
    std::sort(subset.begin(), subset.end());
    for (size_t a : subset)
        if (std::find(subset.begin(), subset.end(), rs.neg[a]) == subset.end())
            throw InputError("generating subset not closed under negation");
    wg.subset = subset;

    // Positivity from a generic functional on Y-coordinates of coroots:
    // weights 1, t, t^2, ... with t large enough to be injective.
    auto generic_value = [&](const QVec& coroot) {
        Rat acc(0), w(1);
        const Rat t(1009);
        for (const auto& c : coroot) {
            acc += w * c;
            w *= t;
        }
        return acc;
    };
    for (size_t a : subset) {
        Rat g = generic_value(rs.coroots[a]);
        if (g == 0) throw InputError("generic functional degenerate");
        if (g > 0) wg.positive.push_back(a);
    }
    // Indecomposable positives = simple system.
    for (size_t a : wg.positive) {
        bool decomposable = false;
        for (size_t b : wg.positive) {
            for (size_t c : wg.positive) {
                if (b == c) continue;
                QVec s(rs.dim_x, Rat(0));
                for (size_t j = 0; j < rs.dim_x; ++j) s[j] = rs.roots[b][j] + rs.roots[c][j];
                if (s == rs.roots[a]) {
                    decomposable = true;
                    break;
                }
            }
            if (decomposable) break;
        }
        if (!decomposable) wg.simples.push_back(a);
    }

    // Closure under right multiplication by simple reflections; elements are
    // identified by their root permutation.
    auto length_of = [&](const std::vector<size_t>& perm) {
        int len = 0;
        std::set<size_t> pos(wg.positive.begin(), wg.positive.end());
        for (size_t a : wg.positive)
            if (!pos.count(perm[a])) ++len;
        return len;
    };
    WeylElement id;
    id.on_y = q_identity(rs.dim_y);
    id.root_perm.resize(rs.roots.size());
    for (size_t a = 0; a < rs.roots.size(); ++a) id.root_perm[a] = a;
    id.length = 0;
    std::map<std::vector<size_t>, size_t> index;
    wg.elements.push_back(id);
    index[id.root_perm] = 0;

    std::vector<WeylElement> gens;
    for (size_t s : wg.simples) {
        WeylElement g;
        g.on_y = QMat(rs.dim_y, QVec(rs.dim_y, Rat(0)));
        for (size_t i = 0; i < rs.dim_y; ++i) {
            QVec img = rs.reflect_y(s, unit(rs.dim_y, i));
            for (size_t r = 0; r < rs.dim_y; ++r) g.on_y[r][i] = img[r];
        }
        g.root_perm.resize(rs.roots.size());
        for (size_t a = 0; a < rs.roots.size(); ++a) {
            auto idx = rs.root_index(rs.reflect_x(s, rs.roots[a]));
            if (!idx) throw InputError("reflection does not permute R");
            g.root_perm[a] = *idx;
        }
        gens.push_back(g);
    }
    for (size_t k = 0; k < wg.elements.size(); ++k) {
        for (const auto& g : gens) {
            WeylElement prod;
            prod.root_perm.resize(rs.roots.size());
            for (size_t a = 0; a < rs.roots.size(); ++a)
                prod.root_perm[a] = wg.elements[k].root_perm[g.root_perm[a]];
            auto it = index.find(prod.root_perm);
            if (it != index.end()) continue;
            prod.on_y = q_mul(wg.elements[k].on_y, g.on_y);
            prod.length = length_of(prod.root_perm);
            index[prod.root_perm] = wg.elements.size();
            wg.elements.push_back(std::move(prod));
            if (wg.elements.size() > size_bound)
                throw InvariantViolation("NonTerminating",
                                         "Weyl closure exceeded bound " +
                                             std::to_string(size_bound));
        }
    }
    // A subsystem root permutation determines the element only on the span of
    // the subsystem; on_y matrices act as the identity on the complement by
    // construction, so the identification is faithful.
    for (const auto& el : wg.elements) wg.poincare += Laurent(Rat(1), 2 * el.length);
    return wg;
}

namespace {

long normalize_mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Grading grading_from_cocharacter(const RootSystem& rs, const QVec& y_gr, Modulus m) {
    if (y_gr.size() != rs.dim_y) throw InputError("cocharacter has wrong dimension");
    Grading g;
    g.modulus = m;
    g.degree.resize(rs.roots.size());
    for (size_t a = 0; a < rs.roots.size(); ++a) {
        Rat p = rs.pair_root(y_gr, a);
        if (denominator(p) != 1)
            throw InvariantViolation("NonIntegralPairing",
                                     "(y_gr, alpha) = " + rat_to_string(p));
        long v = static_cast<long>(numerator(p));
        g.degree[a] = m.infinite ? v : normalize_mod(v, m.m);
    }
    validate_grading(rs, g);
    return g;
}

Grading grading_from_degrees(const RootSystem& rs, std::vector<long> degrees, Modulus m) {
    if (degrees.size() != rs.roots.size()) throw InputError("degree list has wrong length");
    Grading g;
    g.modulus = m;
    if (!m.infinite)
        for (auto& d : degrees) d = normalize_mod(d, m.m);
    g.degree = std::move(degrees);
    validate_grading(rs, g);
    return g;
}

void validate_grading(const RootSystem& rs, const Grading& g) {
    const bool inf = g.modulus.infinite;
    const long m = g.modulus.m;
    if (!inf && m <= 0) throw InputError("modulus must be positive");
    auto add = [&](long a, long b) { return inf ? a + b : normalize_mod(a + b, m); };
    for (size_t a = 0; a < rs.roots.size(); ++a) {
        // alpha + (-alpha) = 0 forces deg(-alpha) = -deg(alpha).
        long zero_sum = add(g.degree[a], g.degree[rs.neg[a]]);
        if (zero_sum != 0)
            throw InvariantViolation("InvalidGrading", "deg(a) + deg(-a) != 0");
        for (size_t b = 0; b < rs.roots.size(); ++b) {
            QVec s(rs.dim_x, Rat(0));
            for (size_t j = 0; j < rs.dim_x; ++j) s[j] = rs.roots[a][j] + rs.roots[b][j];
            auto idx = rs.root_index(s);
            if (idx && add(g.degree[a], g.degree[b]) != g.degree[*idx])
                throw InvariantViolation("InvalidGrading", "degree not additive on R");
        }
    }
    if (inf) {
        // B.2: a Z-grading must be realized by some y in Y.
        QMat a;
        QVec b;
        for (size_t r = 0; r < rs.roots.size(); ++r) {
            QVec row(rs.dim_y);
            for (size_t i = 0; i < rs.dim_y; ++i) {
                row[i] = Rat(0);
                for (size_t j = 0; j < rs.dim_x; ++j)
                    row[i] += rs.pairing[i][j] * rs.roots[r][j];
            }
            a.push_back(row);
            b.push_back(Rat(g.degree[r]));
        }
        if (!rs.roots.empty() && !q_solve(a, b))
            throw InvariantViolation("InvalidGrading",
                                     "Z-grading admits no cocharacter realization");
    }
}

QVec y_star(const RootSystem& rs, const Grading& g) {
    if (!g.modulus.infinite)
        throw InputError("y_star requires a Z-grading");
    auto basis = rs.coroot_span_basis();
    QVec zero(rs.dim_y, Rat(0));
    if (basis.empty()) return zero;
    // Solve for coefficients of y over the coroot-span basis.
    QMat a;
    QVec b;
    for (size_t r = 0; r < rs.roots.size(); ++r) {
        QVec row(basis.size());
        for (size_t k = 0; k < basis.size(); ++k) row[k] = rs.pair_root(basis[k], r);
        a.push_back(row);
        b.push_back(Rat(g.degree[r]));
    }
    auto sol = q_solve(a, b);
    if (!sol)
        throw InvariantViolation("Inconsistent", "no y realizes the grading in <coroots>");
    QVec y = zero;
    for (size_t k = 0; k < basis.size(); ++k)
        for (size_t i = 0; i < rs.dim_y; ++i) y[i] += (*sol)[k] * basis[k][i];
    // Uniqueness check: every root equation must hold exactly.
    for (size_t r = 0; r < rs.roots.size(); ++r)
        if (rs.pair_root(y, r) != Rat(g.degree[r]))
            throw InvariantViolation("Inconsistent", "y_star verification failed");
    return y;
}

std::string GradedSubsystem::key() const {
    std::ostringstream os;
    std::vector<std::string> parts;
    for (size_t a = 0; a < sys.roots.size(); ++a) {
        std::ostringstream p;
        for (const auto& c : sys.roots[a]) p << c << ",";
        p << "@" << grading.degree[a];
        parts.push_back(p.str());
    }
    std::sort(parts.begin(), parts.end());
    for (auto& p : parts) os << p << ";";
    return os.str();
}

GradedSubsystem make_subsystem(const RootSystem& parent, const std::vector<size_t>& roots,
                               const std::vector<long>& levels) {
    GradedSubsystem sub;
    sub.sys.dim_y = parent.dim_y;
    sub.sys.dim_x = parent.dim_x;
    sub.sys.pairing = parent.pairing;
    sub.sys.label = parent.label + "|sub";
    std::vector<long> degs;
    for (size_t k = 0; k < roots.size(); ++k) {
        sub.sys.roots.push_back(parent.roots[roots[k]]);
        sub.sys.coroots.push_back(parent.coroots[roots[k]]);
        sub.parent_roots.push_back(roots[k]);
        degs.push_back(levels[k]);
    }
    sub.sys.neg.assign(sub.sys.roots.size(), 0);
    for (size_t a = 0; a < sub.sys.roots.size(); ++a) {
        QVec m = sub.sys.roots[a];
        for (auto& c : m) c = -c;
        auto idx = sub.sys.root_index(m);
        if (!idx) throw InvariantViolation("Internal", "subsystem not closed under negation");
        sub.sys.neg[a] = *idx;
    }
    sub.grading = grading_from_degrees(sub.sys, degs, Modulus::inf());
    return sub;
}

}  // namespace gradus
