#include "flatcover/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace flatcover {

// ---- d-Constraint-Cover -------------------------------------------------

void CCInstance::check() const {
    if (d < 1 || k < 0) throw std::invalid_argument("cc: d must be >= 1 and k >= 0");
    if (static_cast<long long>(num_vars) != static_cast<long long>(d) * d * k)
        throw std::invalid_argument("cc: |X| must equal d^2 k");
    for (const Constraint1& c : c1) {
        if (c.empty() || static_cast<int>(c.size()) > d)
            throw std::invalid_argument("cc: 1-constraint arity must be in [1,d]");
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i].var < 1 || c[i].var > num_vars || (c[i].bit != 0 && c[i].bit != 1))
                throw std::invalid_argument("cc: bad literal");
            if (i > 0 && c[i].var <= c[i - 1].var)
                throw std::invalid_argument("cc: 1-constraint variables must be distinct ascending");
        }
    }
    for (const Constraint2& c : c2) {
        if (static_cast<int>(c.size()) != d)
            throw std::invalid_argument("cc: 2-constraint arity must be exactly d");
        std::set<int> vars;
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 0 || c[i] >= static_cast<int>(c1.size()))
                throw std::invalid_argument("cc: 2-constraint index out of range");
            if (i > 0 && c[i] <= c[i - 1])
                throw std::invalid_argument("cc: 2-constraint indices must be distinct ascending");
            for (const Literal& lit : c1[static_cast<size_t>(c[i])])
                if (!vars.insert(lit.var).second)
                    throw std::invalid_argument("cc: 2-constraint members must be variable-disjoint");
        }
    }
}

CCVerifyResult cc_verify(const CCInstance& inst, const CCSolution& sol) {
    CCVerifyResult res;
    if (static_cast<int>(sol.assignment.size()) != inst.num_vars) {
        res.violation = "assignment: wrong size";
        return res;
    }
    for (int b : sol.assignment)
        if (b != 0 && b != 1) {
            res.violation = "assignment: bit out of range";
            return res;
        }
    auto in_k0 = [&](const Literal& lit) {
        return sol.assignment[static_cast<size_t>(lit.var) - 1] == lit.bit;
    };

    for (int idx : sol.k1)
        if (idx < 0 || idx >= static_cast<int>(inst.c1.size())) {
            res.violation = "point (i): bad c1 index";
            return res;
        }
    for (int idx : sol.k2)
        if (idx < 0 || idx >= static_cast<int>(inst.c2.size())) {
            res.violation = "point (ii): bad c2 index";
            return res;
        }
    if (static_cast<long long>(sol.k1.size()) != static_cast<long long>(inst.d) * inst.k) {
        res.violation = "point (i): cardinality |K1| != d k";
        return res;
    }
    if (static_cast<long long>(sol.k2.size()) != inst.k) {
        res.violation = "point (ii): cardinality |K2| != k";
        return res;
    }

    // Point (i): union of K1 literals equals the assignment set.
    std::vector<bool> var_hit(static_cast<size_t>(inst.num_vars), false);
    for (int idx : sol.k1) {
        for (const Literal& lit : inst.c1[static_cast<size_t>(idx)]) {
            if (!in_k0(lit)) {
                res.violation = "point (i): K1 literal outside K0";
                return res;
            }
            var_hit[static_cast<size_t>(lit.var) - 1] = true;
        }
    }
    for (int x = 0; x < inst.num_vars; ++x)
        if (!var_hit[static_cast<size_t>(x)]) {
            res.violation = "point (i): K0 literal not covered by K1";
            return res;
        }

    // Point (ii): union of K2 members equals K1.
    std::set<int> k1_set(sol.k1.begin(), sol.k1.end());
    std::set<int> covered;
    for (int idx : sol.k2) {
        for (int member : inst.c2[static_cast<size_t>(idx)]) {
            if (!k1_set.count(member)) {
                res.violation = "point (ii): K2 member outside K1";
                return res;
            }
            covered.insert(member);
        }
    }
    if (covered.size() != k1_set.size()) {
        res.violation = "point (ii): K1 element not covered by K2";
        return res;
    }

    // Point (iii): every satisfied 1-constraint is selected.
    for (size_t c = 0; c < inst.c1.size(); ++c) {
        bool satisfied = true;
        for (const Literal& lit : inst.c1[c])
            if (!in_k0(lit)) satisfied = false;
        if (satisfied && !k1_set.count(static_cast<int>(c))) {
            res.violation = "point (iii): satisfied constraint not in K1";
            return res;
        }
    }
    res.ok = true;
    return res;
}

SetCoverReduction cc_to_setcover(const CCInstance& inst) {
    inst.check();
    SetCoverReduction red;
    red.num_vars = inst.num_vars;
    red.num_c1 = static_cast<int>(inst.c1.size());
    red.k_prime = (static_cast<long long>(inst.d) * inst.d + inst.d + 1) * inst.k;

    Hypergraph& h = red.hypergraph;
    h.n = 3 * inst.num_vars + static_cast<int>(inst.c1.size());

    for (int x = 1; x <= inst.num_vars; ++x) {
        for (int a = 0; a <= 1; ++a) {
            Edge e = {red.v1(x), red.v2(x, a)};
            for (size_t c = 0; c < inst.c1.size(); ++c) {
                for (const Literal& lit : inst.c1[c])
                    if (lit.var == x && lit.bit == a) e.push_back(red.v3(static_cast<int>(c)));
            }
            h.edges.push_back(std::move(e));
        }
    }
    for (const Constraint1& c : inst.c1) {
        Edge e;
        for (const Literal& lit : c) e.push_back(red.v2(lit.var, lit.bit));
        std::sort(e.begin(), e.end());
        h.edges.push_back(std::move(e));
    }
    for (const Constraint2& c : inst.c2) {
        Edge e;
        for (int member : c) e.push_back(red.v3(member));
        h.edges.push_back(std::move(e));
    }
    return red;
}

Cover cc_solution_to_cover(const CCInstance& inst, const CCSolution& sol) {
    CCVerifyResult v = cc_verify(inst, sol);
    if (!v.ok) throw std::invalid_argument("cc_solution_to_cover: invalid solution: " + v.violation);
    SetCoverReduction red;  // index arithmetic only
    red.num_vars = inst.num_vars;
    red.num_c1 = static_cast<int>(inst.c1.size());
    Cover cover;
    for (int x = 1; x <= inst.num_vars; ++x)
        cover.edge_indices.push_back(red.e1(x, 1 - sol.assignment[static_cast<size_t>(x) - 1]));
    for (int idx : sol.k1) cover.edge_indices.push_back(red.e2(idx));
    for (int idx : sol.k2) cover.edge_indices.push_back(red.e3(idx));
    std::sort(cover.edge_indices.begin(), cover.edge_indices.end());
    return cover;
}

CCSolution cover_to_cc_solution(const CCInstance& inst, const Cover& cover) {
    SetCoverReduction red = cc_to_setcover(inst);
    if (static_cast<long long>(cover.edge_indices.size()) > red.k_prime)
        throw std::invalid_argument("cover_to_cc_solution: cover larger than k'");
    if (!verify_cover(red.hypergraph, cover))
        throw std::invalid_argument("cover_to_cc_solution: not a cover of the reduction output");

    const int e1_count = 2 * inst.num_vars;
    std::vector<bool> e1_present(static_cast<size_t>(e1_count), false);
    CCSolution sol;
    for (int idx : cover.edge_indices) {
        if (idx <= e1_count) {
            e1_present[static_cast<size_t>(idx) - 1] = true;
        } else if (idx <= e1_count + red.num_c1) {
            sol.k1.push_back(idx - e1_count - 1);
        } else {
            sol.k2.push_back(idx - e1_count - red.num_c1 - 1);
        }
    }
    sol.assignment.resize(static_cast<size_t>(inst.num_vars));
    for (int x = 1; x <= inst.num_vars; ++x) {
        const bool has0 = e1_present[static_cast<size_t>(2 * (x - 1))];
        const bool has1 = e1_present[static_cast<size_t>(2 * (x - 1) + 1)];
        if (has0 == has1)
            throw Lemma8Counterexample("variable " + std::to_string(x) +
                                       " has " + std::to_string(has0 + has1) + " e1 edges in cover");
        sol.assignment[static_cast<size_t>(x) - 1] = has0 ? 1 : 0;
    }
    CCVerifyResult v = cc_verify(inst, sol);
    if (!v.ok) throw Lemma8Counterexample(v.violation);
    return sol;
}

// ---- s-Dimensional Matching ---------------------------------------------

void MDMInstance::check() const {
    if (n < 0 || s < 1 || l < 0) throw std::invalid_argument("mdm: bad parameters");
    for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != s) throw std::invalid_argument("mdm: tuple arity mismatch");
        for (int v : t)
            if (v < 1 || v > n) throw std::invalid_argument("mdm: tuple element out of range");
    }
}

bool tuples_orthogonal(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) return false;
    return true;
}

namespace {

long long pow_checked(long long base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base)
            throw std::invalid_argument("mdm_to_cc: instance too large");
        r *= base;
    }
    return r;
}

}  // namespace

int MDMReductionLayout::var(int p, int q, int r, long long i, int j) const {
    long long idx = (((static_cast<long long>(p - 1) * d + (q - 1)) * d + (r - 1)) * m + i) * d +
                    (j - 1);
    return static_cast<int>(idx) + 1;
}

std::vector<int> MDMReductionLayout::phi(long long i) const {
    std::vector<int> t(static_cast<size_t>(c));
    for (int pos = c - 1; pos >= 0; --pos) {
        t[static_cast<size_t>(pos)] = static_cast<int>(i % n_padded) + 1;
        i /= n_padded;
    }
    return t;
}

long long MDMReductionLayout::phi_inv(const std::vector<int>& t) const {
    long long i = 0;
    for (int v : t) i = i * n_padded + (v - 1);
    return i;
}

int MDMReductionLayout::c3(int p, int q, int r, long long i) const {
    return c3_table[static_cast<size_t>(
        ((static_cast<long long>(p - 1) * d + (q - 1)) * d + (r - 1)) * m + i)];
}

int MDMReductionLayout::c4(int p, int q, int r, long long i) const {
    return c4_table[static_cast<size_t>(
        ((static_cast<long long>(p - 1) * d + (q - 1)) * d + (r - 1)) * m + i)];
}

int MDMReductionLayout::c5(int p, int q, long long t_index, int j) const {
    const long long md = c5_table.size() / (static_cast<long long>(l) * d * d);
    return c5_table[static_cast<size_t>(
        ((static_cast<long long>(p - 1) * d + (q - 1)) * md + t_index) * d + (j - 1))];
}

int MDMReductionLayout::c6(int p, long long t_index, int j) const {
    const long long ms = c6_table.size() / (static_cast<long long>(l) * d);
    return c6_table[static_cast<size_t>(
        (static_cast<long long>(p - 1) * ms + t_index) * d + (j - 1))];
}

MDMReduction mdm_to_cc(const MDMInstance& inst, int d, int c) {
    inst.check();
    if (d < 2 || c < 1) throw std::invalid_argument("mdm_to_cc: require d >= 2 and c >= 1");
    if (inst.s != c * d * d)
        throw std::invalid_argument("mdm_to_cc: arity mismatch, s must equal c d^2");
    if (inst.l < 1) throw std::invalid_argument("mdm_to_cc: require l >= 1");

    MDMReduction out;
    MDMReductionLayout& lay = out.layout;
    lay.d = d;
    lay.c = c;
    lay.s = inst.s;
    lay.l = inst.l;
    lay.n_padded = std::max(inst.n, 1);
    while (lay.n_padded % d != 1) ++lay.n_padded;
    lay.padding = lay.n_padded - inst.n;
    lay.m = pow_checked(lay.n_padded, c, 1000000);
    if (lay.m % d != 1) throw std::logic_error("mdm_to_cc: m != 1 (mod d)");
    if (lay.m <= d) throw std::invalid_argument("mdm_to_cc: ground set too small (need m > d)");
    lay.k = static_cast<long long>(d) * inst.l * lay.m;

    const long long md = pow_checked(lay.m, d, 50000000);        // |V^{cd}|
    const long long ms = pow_checked(md, d, 50000000);           // |V^s|
    const long long num_vars = static_cast<long long>(d) * d * lay.k;
    if (num_vars > 10000000) throw std::invalid_argument("mdm_to_cc: instance too large");

    CCInstance& cc = out.instance;
    cc.d = d;
    cc.k = lay.k;
    cc.num_vars = static_cast<int>(num_vars);

    std::map<Constraint1, int> c1_index;
    auto add_c1 = [&](Constraint1 cons) {
        std::sort(cons.begin(), cons.end());
        auto [it, inserted] = c1_index.emplace(std::move(cons), static_cast<int>(cc.c1.size()));
        if (inserted) cc.c1.push_back(it->first);
        return it->second;
    };

    // Incompatibility constraints: within a block, two 1-literals at distinct
    // row indices; across rows of the same column, 1-literals decoding to
    // non-orthogonal factors.
    for (int p = 1; p <= inst.l; ++p)
        for (int q = 1; q <= d; ++q)
            for (int r = 1; r <= d; ++r)
                for (long long i = 0; i < lay.m; ++i)
                    for (long long i2 = i + 1; i2 < lay.m; ++i2)
                        for (int j = 1; j <= d; ++j)
                            for (int j2 = 1; j2 <= d; ++j2)
                                add_c1({{lay.var(p, q, r, i, j), 1}, {lay.var(p, q, r, i2, j2), 1}});
    for (int p = 1; p <= inst.l; ++p)
        for (int p2 = p + 1; p2 <= inst.l; ++p2)
            for (int q = 1; q <= d; ++q)
                for (int r = 1; r <= d; ++r)
                    for (long long i = 0; i < lay.m; ++i)
                        for (long long i2 = 0; i2 < lay.m; ++i2) {
                            if (tuples_orthogonal(lay.phi(i), lay.phi(i2))) continue;
                            for (int j = 1; j <= d; ++j)
                                for (int j2 = 1; j2 <= d; ++j2)
                                    add_c1({{lay.var(p, q, r, i, j), 1},
                                            {lay.var(p2, q, r, i2, j2), 1}});
                        }

    // Local constraints: one all-zero row per block index.
    lay.c3_table.resize(static_cast<size_t>(static_cast<long long>(inst.l) * d * d * lay.m));
    for (int p = 1; p <= inst.l; ++p)
        for (int q = 1; q <= d; ++q)
            for (int r = 1; r <= d; ++r)
                for (long long i = 0; i < lay.m; ++i) {
                    Constraint1 cons;
                    for (int j = 1; j <= d; ++j) cons.push_back({lay.var(p, q, r, i, j), 0});
                    lay.c3_table[static_cast<size_t>(
                        ((static_cast<long long>(p - 1) * d + (q - 1)) * d + (r - 1)) * lay.m + i)] =
                        add_c1(std::move(cons));
                }

    // Global constraints: one row of 1-literals across the blocks of a column
    // group, per candidate factor tuple.
    lay.c5_table.resize(static_cast<size_t>(static_cast<long long>(inst.l) * d * md * d));
    for (int p = 1; p <= inst.l; ++p)
        for (int q = 1; q <= d; ++q)
            for (long long t = 0; t < md; ++t) {
                // digits of t, base m, MSB first: the factor index per r
                std::vector<long long> ir(static_cast<size_t>(d));
                long long rem = t;
                for (int r = d; r >= 1; --r) {
                    ir[static_cast<size_t>(r - 1)] = rem % lay.m;
                    rem /= lay.m;
                }
                for (int j = 1; j <= d; ++j) {
                    Constraint1 cons;
                    for (int r = 1; r <= d; ++r)
                        cons.push_back({lay.var(p, q, r, ir[static_cast<size_t>(r - 1)], j), 1});
                    lay.c5_table[static_cast<size_t>(
                        ((static_cast<long long>(p - 1) * d + (q - 1)) * md + t) * d + (j - 1))] =
                        add_c1(std::move(cons));
                }
            }

    std::map<Constraint2, int> c2_index;
    auto add_c2 = [&](Constraint2 cons) {
        std::sort(cons.begin(), cons.end());
        auto [it, inserted] = c2_index.emplace(std::move(cons), static_cast<int>(cc.c2.size()));
        if (inserted) cc.c2.push_back(it->first);
        return it->second;
    };

    lay.c4_table.resize(lay.c3_table.size());
    for (int p = 1; p <= inst.l; ++p)
        for (int q = 1; q <= d; ++q)
            for (int r = 1; r <= d; ++r)
                for (long long i = 0; i < lay.m; ++i) {
                    Constraint2 cons;
                    for (int z = 0; z < d; ++z) cons.push_back(lay.c3(p, q, r, (i + z) % lay.m));
                    lay.c4_table[static_cast<size_t>(
                        ((static_cast<long long>(p - 1) * d + (q - 1)) * d + (r - 1)) * lay.m + i)] =
                        add_c2(std::move(cons));
                }

    lay.c6_table.resize(static_cast<size_t>(static_cast<long long>(inst.l) * ms * d));
    for (int p = 1; p <= inst.l; ++p)
        for (long long t = 0; t < ms; ++t) {
            std::vector<long long> tq(static_cast<size_t>(d));
            long long rem = t;
            for (int q = d; q >= 1; --q) {
                tq[static_cast<size_t>(q - 1)] = rem % md;
                rem /= md;
            }
            for (int j = 1; j <= d; ++j) {
                Constraint2 cons;
                for (int q = 1; q <= d; ++q)
                    cons.push_back(lay.c5(p, q, tq[static_cast<size_t>(q - 1)], j));
                lay.c6_table[static_cast<size_t>(
                    (static_cast<long long>(p - 1) * ms + t) * d + (j - 1))] =
                    add_c2(std::move(cons));
            }
        }

    cc.check();
    return out;
}

namespace {

// Factor index of t_{p,q,r} within a matching tuple: c consecutive elements
// starting at ((q-1) d + (r-1)) c.
long long factor_index(const MDMReductionLayout& lay, const std::vector<int>& tuple, int q, int r) {
    std::vector<int> factor;
    const int offset = ((q - 1) * lay.d + (r - 1)) * lay.c;
    for (int z = 0; z < lay.c; ++z) factor.push_back(tuple[static_cast<size_t>(offset + z)]);
    return lay.phi_inv(factor);
}

long long group_index(const MDMReductionLayout& lay, const std::vector<int>& tuple, int q) {
    long long t = 0;
    for (int r = 1; r <= lay.d; ++r) t = t * lay.m + factor_index(lay, tuple, q, r);
    return t;
}

long long tuple_index(const MDMReductionLayout& lay, const std::vector<int>& tuple) {
    const long long md = lay.c5_table.size() / (static_cast<long long>(lay.l) * lay.d * lay.d);
    long long t = 0;
    for (int q = 1; q <= lay.d; ++q) t = t * md + group_index(lay, tuple, q);
    return t;
}

}  // namespace

CCSolution matching_to_cc_solution(const MDMInstance& inst, const MDMReductionLayout& layout,
                                   const std::vector<std::vector<int>>& matching) {
    if (static_cast<int>(matching.size()) != layout.l)
        throw std::invalid_argument("matching_to_cc_solution: need exactly l tuples");
    for (size_t a = 0; a < matching.size(); ++a) {
        if (std::find(inst.tuples.begin(), inst.tuples.end(), matching[a]) == inst.tuples.end())
            throw std::invalid_argument("matching_to_cc_solution: tuple not in S");
        for (size_t b = a + 1; b < matching.size(); ++b)
            if (!tuples_orthogonal(matching[a], matching[b]))
                throw std::invalid_argument("matching_to_cc_solution: tuples not orthogonal");
    }

    const int d = layout.d;
    CCSolution sol;
    sol.assignment.assign(static_cast<size_t>(d) * d * static_cast<size_t>(layout.k), 0);
    for (int p = 1; p <= layout.l; ++p) {
        const std::vector<int>& t = matching[static_cast<size_t>(p - 1)];
        for (int q = 1; q <= d; ++q) {
            for (int r = 1; r <= d; ++r) {
                const long long istar = factor_index(layout, t, q, r);
                for (int j = 1; j <= d; ++j)
                    sol.assignment[static_cast<size_t>(layout.var(p, q, r, istar, j)) - 1] = 1;
                for (long long i = 0; i < layout.m; ++i) {
                    if (i == istar) continue;
                    sol.k1.push_back(layout.c3(p, q, r, i));
                    // residue rule selecting disjoint windows of local
                    // 2-constraints around the chosen row
                    const bool take = (i > istar && (i - istar) % d == 1) ||
                                      (i < istar && (istar - i) % d == 0);
                    if (take) sol.k2.push_back(layout.c4(p, q, r, i));
                }
            }
            for (int j = 1; j <= d; ++j) sol.k1.push_back(layout.c5(p, q, group_index(layout, t, q), j));
        }
        for (int j = 1; j <= d; ++j) sol.k2.push_back(layout.c6(p, tuple_index(layout, t), j));
    }
    std::sort(sol.k1.begin(), sol.k1.end());
    sol.k1.erase(std::unique(sol.k1.begin(), sol.k1.end()), sol.k1.end());
    std::sort(sol.k2.begin(), sol.k2.end());
    sol.k2.erase(std::unique(sol.k2.begin(), sol.k2.end()), sol.k2.end());
    return sol;
}

std::vector<std::vector<int>> cc_solution_to_matching(const MDMInstance& inst,
                                                      const MDMReductionLayout& layout,
                                                      const CCSolution& sol) {
    const int d = layout.d;
    std::vector<std::vector<int>> matching;

    std::vector<long long> istar(static_cast<size_t>(layout.l) * d * d);
    for (int p = 1; p <= layout.l; ++p) {
        std::vector<int> tuple;
        for (int q = 1; q <= d; ++q) {
            for (int r = 1; r <= d; ++r) {
                // Z_{p,q,r} must be a single full row {i} x [d]
                long long row = -1;
                std::vector<bool> j_seen(static_cast<size_t>(d), false);
                for (long long i = 0; i < layout.m; ++i)
                    for (int j = 1; j <= d; ++j) {
                        if (sol.assignment[static_cast<size_t>(layout.var(p, q, r, i, j)) - 1] != 1)
                            continue;
                        if (row == -1) row = i;
                        if (row != i)
                            throw Lemma10Counterexample(
                                "claim-1", "block has 1-literals at two distinct rows");
                        j_seen[static_cast<size_t>(j - 1)] = true;
                    }
                if (row == -1)
                    throw Lemma10Counterexample("claim-1", "block has no 1-literal");
                for (bool seen : j_seen)
                    if (!seen)
                        throw Lemma10Counterexample("claim-1", "block row is not full");
                istar[static_cast<size_t>(
                    (static_cast<long long>(p - 1) * d + (q - 1)) * d + (r - 1))] = row;
                for (int v : layout.phi(row)) tuple.push_back(v);
            }
        }
        matching.push_back(std::move(tuple));
    }

    // K1 must consist of exactly the unchosen local rows plus the global row
    // constraints of the decoded tuples.
    std::vector<int> expected_k1;
    for (int p = 1; p <= layout.l; ++p) {
        for (int q = 1; q <= d; ++q) {
            for (int r = 1; r <= d; ++r) {
                const long long star = istar[static_cast<size_t>(
                    (static_cast<long long>(p - 1) * d + (q - 1)) * d + (r - 1))];
                for (long long i = 0; i < layout.m; ++i)
                    if (i != star) expected_k1.push_back(layout.c3(p, q, r, i));
            }
            const long long gq = group_index(layout, matching[static_cast<size_t>(p - 1)], q);
            for (int j = 1; j <= d; ++j) expected_k1.push_back(layout.c5(p, q, gq, j));
        }
    }
    std::sort(expected_k1.begin(), expected_k1.end());
    std::vector<int> got_k1 = sol.k1;
    std::sort(got_k1.begin(), got_k1.end());
    if (expected_k1 != got_k1)
        throw Lemma10Counterexample("claim-2", "K1 differs from the decoded local+global rows");

    for (size_t a = 0; a < matching.size(); ++a) {
        if (std::find(inst.tuples.begin(), inst.tuples.end(), matching[a]) == inst.tuples.end())
            throw Lemma10Counterexample("claim-3", "decoded tuple not in S");
        for (size_t b = a + 1; b < matching.size(); ++b)
            if (!tuples_orthogonal(matching[a], matching[b]))
                throw Lemma10Counterexample("claim-3", "decoded tuples not orthogonal");
    }
    return matching;
}

namespace {

int mdm_search(const MDMInstance& inst, size_t from, std::vector<const std::vector<int>*>& chosen) {
    int best = static_cast<int>(chosen.size());
    for (size_t i = from; i < inst.tuples.size(); ++i) {
        bool ok = true;
        for (const auto* t : chosen)
            if (!tuples_orthogonal(*t, inst.tuples[i])) ok = false;
        if (!ok) continue;
        chosen.push_back(&inst.tuples[i]);
        best = std::max(best, mdm_search(inst, i + 1, chosen));
        chosen.pop_back();
    }
    return best;
}

}  // namespace

int mdm_brute_force(const MDMInstance& inst) {
    inst.check();
    if (inst.tuples.size() > 20) throw std::invalid_argument("mdm_brute_force: too many tuples");
    std::vector<const std::vector<int>*> chosen;
    return mdm_search(inst, 0, chosen);
}

}  // namespace flatcover
