#include "vhodge/wgb.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vhodge {

int WeylOrder::cmp(const WeylMono& a, const WeylMono& b) const {
    for (const auto& w : keys) {
        long wa = 0, wb = 0;
        for (int i = 0; i < ring.slots(); ++i) {
            wa += w[i] * a.e[i];
            wb += w[i] * b.e[i];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
    }
    int da = a.deg(ring), db = b.deg(ring);
    if (da != db) return da < db ? -1 : 1;
    for (int i = ring.slots() - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

std::string WeylOrder::str() const {
    std::ostringstream os;
    os << "order[";
    for (const auto& w : keys) {
        os << "(";
        for (int i = 0; i < ring.slots(); ++i) os << w[i] << (i + 1 < ring.slots() ? "," : "");
        os << ")";
    }
    os << "degrevlex]";
    return os.str();
}

WeylOrder degrevlex_order(const WeylRing& r) {
    WeylOrder o;
    o.ring = r;
    return o;
}

WeylOrder slot_weight_order(const WeylRing& r, const std::vector<long>& w) {
    if (static_cast<int>(w.size()) != r.slots()) throw PreconditionError("weight size mismatch");
    WeylOrder o;
    o.ring = r;
    o.keys.push_back(w);
    for (long x : w)
        if (x < 0) o.need_homog = true;
    return o;
}

WeylOrder elim_order(const WeylRing& r, const std::vector<int>& elim_slots) {
    WeylOrder o;
    o.ring = r;
    std::vector<long> ind(r.slots(), 0);
    for (int s : elim_slots) ind.at(s) = 1;
    o.keys.push_back(ind);
    return o;
}

WeylOrder WeightOrder::to_internal(const WeylRing& r) const {
    std::vector<long> w(r.slots(), 0);
    for (int i = 0; i < r.n; ++i) {
        long wx = i < static_cast<int>(x_weights.size()) ? x_weights[i] : 0;
        long wd = i < static_cast<int>(dx_weights.size()) ? dx_weights[i] : 0;
        if (wx + wd < 0) throw PreconditionError("inadmissible weights: wt(x)+wt(dx) < 0");
        w[r.x_slot(i)] = wx;
        w[r.dx_slot(i)] = wd;
    }
    if (r.has_t) {
        if (t_weight + dt_weight < 0)
            throw PreconditionError("inadmissible weights: wt(t)+wt(dt) < 0");
        w[r.t_slot()] = t_weight;
        w[r.dt_slot()] = dt_weight;
    }
    if (tie_break != "degrevlex")
        throw PreconditionError("unknown tie-break order: " + tie_break);

    WeylOrder o;
    o.ring = r;
    if (!eliminate.empty()) {
        std::vector<long> ind(r.slots(), 0);
        for (const auto& name : eliminate) {
            WeylOp g = WeylOp::parse(name, r);
            if (g.terms().size() != 1 || !g.terms().begin()->second.is_one())
                throw PreconditionError("bad elimination generator: " + name);
            const WeylMono& m = g.terms().begin()->first;
            int nz = -1;
            for (int i = 0; i < r.slots(); ++i)
                if (m.e[i]) {
                    if (m.e[i] != 1 || nz >= 0)
                        throw PreconditionError("bad elimination generator: " + name);
                    nz = i;
                }
            if (nz < 0) throw PreconditionError("bad elimination generator: " + name);
            ind.at(nz) = 1;
        }
        o.keys.push_back(ind);
    }
    bool anyw = false;
    for (long x : w)
        if (x) anyw = true;
    if (anyw) {
        o.keys.push_back(w);
        for (long x : w)
            if (x < 0) o.need_homog = true;
    }
    return o;
}

std::string WeightOrder::str() const {
    std::ostringstream os;
    os << "weights[x:";
    for (auto w : x_weights) os << w << " ";
    os << "dx:";
    for (auto w : dx_weights) os << w << " ";
    os << "t:" << t_weight << " dt:" << dt_weight << "]";
    if (!eliminate.empty()) {
        os << " elim[";
        for (const auto& e : eliminate) os << e << " ";
        os << "]";
    }
    return os.str();
}

// ---------- homogenization ----------

WeylRing homogenized(const WeylRing& r) {
    WeylRing h = r;
    h.homog = true;
    return h;
}

WeylOp homogenize(const WeylOp& p) {
    const WeylRing& r = p.ring();
    if (r.homog) throw PreconditionError("already homogenized");
    WeylRing hr = homogenized(r);
    int d = p.total_degree();
    WeylOp out(hr);
    for (const auto& [m, c] : p.terms()) {
        WeylMono mm = m;
        mm.e[hr.h_slot()] = static_cast<uint16_t>(d - m.deg(r));
        out.add_term(mm, c);
    }
    return out;
}

WeylOp dehomogenize(const WeylOp& p, const WeylRing& target) {
    const WeylRing& r = p.ring();
    if (!r.homog) throw PreconditionError("not homogenized");
    WeylOp out(target);
    for (const auto& [m, c] : p.terms()) {
        WeylMono mm = m;
        mm.e[r.h_slot()] = 0;
        out.add_term(mm, c);
    }
    return out;
}

int v_degree(const WeylRing& r, const WeylMono& m) {
    if (!r.has_t) return 0;
    return static_cast<int>(m.e[r.dt_slot()]) - static_cast<int>(m.e[r.t_slot()]);
}

std::vector<std::pair<int, WeylOp>> v_components(const WeylOp& p) {
    std::map<int, WeylOp> comps;
    for (const auto& [m, c] : p.terms()) {
        int d = v_degree(p.ring(), m);
        auto it = comps.find(d);
        if (it == comps.end()) it = comps.emplace(d, WeylOp(p.ring())).first;
        it->second.add_term(m, c);
    }
    std::vector<std::pair<int, WeylOp>> out;
    for (auto& [d, op] : comps) out.push_back({d, std::move(op)});
    return out;
}

WeylOp initial_v(const WeylOp& p) {
    auto comps = v_components(p);
    if (comps.empty()) return p;
    return comps.back().second;
}

WeylOp v_normalize(const WeylOp& h, int d) {
    const WeylRing& r = h.ring();
    if (d == 0) return h;
    int slot = d > 0 ? r.t_slot() : r.dt_slot();
    WeylMono m;
    m.e[slot] = static_cast<uint16_t>(d > 0 ? d : -d);
    return weyl_mono_mul(r, m, Rat(1), h);
}

WeylOp theta_to_s_ring(const WeylOp& p, const WeylRing& target) {
    const WeylRing& r = p.ring();
    if (!r.has_t || !target.has_s) throw PreconditionError("theta_to_s_ring: wrong rings");
    WeylOp out(target);
    UniPoly s = UniPoly::variable();
    for (const auto& [m, c] : p.terms()) {
        int i = m.e[r.t_slot()];
        if (i != m.e[r.dt_slot()])
            throw PreconditionError("theta_to_s_ring: operator not of v-degree 0");
        // t^i dt^i = prod_{l=0}^{i-1} (t*dt - l), with t*dt = -s-1
        UniPoly theta_part(Rat(1));
        for (int l = 0; l < i; ++l)
            theta_part = theta_part * (-s - UniPoly(Rat(l + 1)));
        WeylMono base;
        for (int k = 0; k < r.n; ++k) {
            base.e[target.x_slot(k)] = m.e[r.x_slot(k)];
            base.e[target.dx_slot(k)] = m.e[r.dx_slot(k)];
        }
        for (int deg = 0; deg <= theta_part.degree(); ++deg) {
            Rat coeff = theta_part.coeff(deg);
            if (coeff.is_zero()) continue;
            WeylMono mm = base;
            mm.e[target.s_slot()] = static_cast<uint16_t>(deg);
            out.add_term(mm, c * coeff);
        }
    }
    return out;
}

// ---------- reduction and Buchberger ----------

const WeylMono& leading_mono(const WeylOp& p, const WeylOrder& ord) {
    if (p.is_zero()) throw PreconditionError("leading monomial of zero operator");
    const WeylMono* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || ord.less(*best, m)) best = &m;
    return *best;
}

Rat leading_coeff(const WeylOp& p, const WeylOrder& ord) {
    return p.terms().at(leading_mono(p, ord));
}

namespace {

[[noreturn]] void budget_fail(const GBStats& st, const std::string& what) {
    std::ostringstream os;
    os << "resource limit in " << what << " (pairs=" << st.pairs_processed
       << ", max_degree=" << st.max_degree_seen << ", basis=" << st.basis_size << ")";
    throw ResourceLimitError(os.str());
}

struct Reducer {
    const WeylOrder& ord;
    const GBBudget& budget;
    GBStats* stats;

    bool top_reduce(WeylOp& p, const std::vector<WeylOp>& basis,
                    const std::vector<WeylMono>& lms, const std::vector<Rat>& lcs,
                    std::vector<WeylOp>* cof,
                    const std::vector<std::vector<WeylOp>>& basis_cof) {
        const WeylMono& lm = leading_mono(p, ord);
        for (size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            if (!lms[k].divides(lm, ord.ring)) continue;
            WeylMono q = lm.quotient(lms[k]);
            Rat c = p.terms().at(lm) / lcs[k];
            p -= weyl_mono_mul(ord.ring, q, c, basis[k]);
            if (cof)
                for (size_t i = 0; i < cof->size(); ++i)
                    if (!basis_cof[k][i].is_zero())
                        (*cof)[i] -= weyl_mono_mul(ord.ring, q, c, basis_cof[k][i]);
            return true;
        }
        return false;
    }

    WeylOp normal_form(WeylOp p, const std::vector<WeylOp>& basis,
                       const std::vector<WeylMono>& lms, const std::vector<Rat>& lcs,
                       std::vector<WeylOp>* cof,
                       const std::vector<std::vector<WeylOp>>& basis_cof) {
        WeylOp rem(ord.ring);
        long steps = 0;
        while (!p.is_zero()) {
            if (++steps > budget.max_pair_reductions) budget_fail(*stats, "reduction");
            const WeylMono& lm = leading_mono(p, ord);
            int d = lm.deg(ord.ring);
            stats->max_degree_seen = std::max(stats->max_degree_seen, d);
            if (d > budget.max_degree) budget_fail(*stats, "reduction (degree)");
            if (!top_reduce(p, basis, lms, lcs, cof, basis_cof)) {
                Rat c = p.terms().at(lm);
                rem.add_term(lm, c);
                p.add_term(lm, -c);
            }
        }
        return rem;
    }
};

struct PairEntry {
    size_t i, j;
    WeylMono lcm;
    int deg;
};

LeftGB buchberger_run(const std::vector<WeylOp>& gens, const WeylOrder& ord,
                      const GBBudget& budget, bool track_cof) {
    LeftGB out;
    out.order = ord;
    GBStats& st = out.stats;
    Reducer red{ord, budget, &st};

    std::vector<WeylOp> basis;
    std::vector<std::vector<WeylOp>> cof;
    std::vector<WeylMono> lms;
    std::vector<Rat> lcs;

    auto add_basis = [&](const WeylOp& g, const std::vector<WeylOp>& gc) {
        basis.push_back(g);
        lms.push_back(leading_mono(g, ord));
        lcs.push_back(leading_coeff(g, ord));
        if (track_cof) cof.push_back(gc);
    };

    size_t ngens = gens.size();
    for (size_t i = 0; i < ngens; ++i) {
        if (gens[i].is_zero()) continue;
        std::vector<WeylOp> c;
        if (track_cof) {
            c.assign(ngens, WeylOp(ord.ring));
            c[i] = WeylOp::constant(ord.ring, Rat(1));
        }
        add_basis(gens[i], c);
    }

    std::vector<PairEntry> queue;
    std::set<std::pair<size_t, size_t>> treated;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            WeylMono l = WeylMono::lcm(lms[i], lms[j]);
            queue.push_back({i, j, l, l.deg(ord.ring)});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    auto chain_skip = [&](const PairEntry& pr) {
        auto key = [](size_t a, size_t b) {
            return std::make_pair(std::min(a, b), std::max(a, b));
        };
        for (size_t k = 0; k < basis.size(); ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lms[k].divides(pr.lcm, ord.ring)) continue;
            if (treated.count(key(pr.i, k)) && treated.count(key(pr.j, k))) return true;
        }
        return false;
    };

    while (!queue.empty()) {
        auto best = std::min_element(
            queue.begin(), queue.end(),
            [](const PairEntry& a, const PairEntry& b) { return a.deg < b.deg; });
        PairEntry pr = *best;
        queue.erase(best);
        treated.insert({pr.i, pr.j});
        if (chain_skip(pr)) continue;

        if (++st.pairs_processed > budget.max_pair_reductions) budget_fail(st, "buchberger");

        WeylOp a = weyl_mono_mul(ord.ring, pr.lcm.quotient(lms[pr.i]), lcs[pr.i].inv(), basis[pr.i]);
        WeylOp b = weyl_mono_mul(ord.ring, pr.lcm.quotient(lms[pr.j]), lcs[pr.j].inv(), basis[pr.j]);
        WeylOp s = a - b;

        std::vector<WeylOp> sc;
        if (track_cof) {
            sc.assign(ngens, WeylOp(ord.ring));
            for (size_t t = 0; t < ngens; ++t) {
                if (!cof[pr.i][t].is_zero())
                    sc[t] += weyl_mono_mul(ord.ring, pr.lcm.quotient(lms[pr.i]),
                                           lcs[pr.i].inv(), cof[pr.i][t]);
                if (!cof[pr.j][t].is_zero())
                    sc[t] -= weyl_mono_mul(ord.ring, pr.lcm.quotient(lms[pr.j]),
                                           lcs[pr.j].inv(), cof[pr.j][t]);
            }
        }

        WeylOp r = red.normal_form(std::move(s), basis, lms, lcs, track_cof ? &sc : nullptr, cof);
        if (!r.is_zero()) {
            add_basis(r, sc);
            push_pairs(basis.size() - 1);
        }
    }

    // inter-reduce: minimal leads, reduced tails, monic leading coefficients
    std::vector<size_t> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool red_lead = false;
        for (size_t j = 0; j < basis.size() && !red_lead; ++j) {
            if (i == j) continue;
            if (lms[j].divides(lms[i], ord.ring) && (!(lms[j] == lms[i]) || j < i))
                red_lead = true;
        }
        if (!red_lead) keep.push_back(i);
    }
    std::vector<WeylOp> final_basis;
    std::vector<std::vector<WeylOp>> final_cof;
    for (size_t idx : keep) {
        std::vector<WeylOp> others;
        std::vector<WeylMono> olms;
        std::vector<Rat> olcs;
        std::vector<std::vector<WeylOp>> ocof;
        for (size_t j : keep)
            if (j != idx) {
                others.push_back(basis[j]);
                olms.push_back(lms[j]);
                olcs.push_back(lcs[j]);
                if (track_cof) ocof.push_back(cof[j]);
            }
        std::vector<WeylOp> c = track_cof ? cof[idx] : std::vector<WeylOp>{};
        WeylOp r = red.normal_form(basis[idx], others, olms, olcs, track_cof ? &c : nullptr, ocof);
        if (r.is_zero()) continue;
        Rat inv = leading_coeff(r, ord).inv();
        r = r * inv;
        if (track_cof)
            for (auto& cc : c) cc = cc * inv;
        final_basis.push_back(std::move(r));
        final_cof.push_back(std::move(c));
    }
    std::vector<size_t> perm(final_basis.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        return ord.less(leading_mono(final_basis[a], ord), leading_mono(final_basis[b], ord));
    });
    for (size_t i : perm) {
        out.basis.push_back(final_basis[i]);
        if (track_cof) out.cofactors.push_back(final_cof[i]);
    }
    out.stats.basis_size = out.basis.size();
    out.complete = true;
    return out;
}

}  // namespace

WeylOp reduce_full(const WeylOp& p, const std::vector<WeylOp>& basis, const WeylOrder& ord,
                   const GBBudget& budget) {
    GBStats st;
    Reducer red{ord, budget, &st};
    std::vector<WeylOp> nonzero;
    std::vector<WeylMono> lms;
    std::vector<Rat> lcs;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        nonzero.push_back(g);
        lms.push_back(leading_mono(g, ord));
        lcs.push_back(leading_coeff(g, ord));
    }
    return red.normal_form(p, nonzero, lms, lcs, nullptr, {});
}

LeftGB left_groebner(const std::vector<WeylOp>& gens, const WeylOrder& ord,
                     const GBBudget& budget, bool track_cofactors) {
    std::vector<WeylOp> nz;
    for (const auto& g : gens) {
        if (!(g.ring() == ord.ring)) throw PreconditionError("generator/order ring mismatch");
        if (!g.is_zero()) nz.push_back(g);
    }
    if (nz.empty()) {
        LeftGB e;
        e.order = ord;
        e.complete = true;
        return e;
    }

    if (!ord.need_homog) return buchberger_run(gens, ord, budget, track_cofactors);

    WeylRing hr = homogenized(ord.ring);
    WeylOrder hord;
    hord.ring = hr;
    for (const auto& k : ord.keys) {
        std::vector<long> kk = k;
        kk.push_back(0);
        hord.keys.push_back(kk);
    }
    std::vector<WeylOp> hgens;
    for (const auto& g : gens)
        if (!g.is_zero()) hgens.push_back(homogenize(g));
    LeftGB hgb = buchberger_run(hgens, hord, budget, track_cofactors);

    LeftGB out;
    out.order = ord;
    out.stats = hgb.stats;
    out.complete = hgb.complete;
    for (size_t i = 0; i < hgb.basis.size(); ++i) {
        out.basis.push_back(dehomogenize(hgb.basis[i], ord.ring));
        if (track_cofactors) {
            std::vector<WeylOp> c;
            for (const auto& cc : hgb.cofactors[i]) c.push_back(dehomogenize(cc, ord.ring));
            out.cofactors.push_back(std::move(c));
        }
    }
    return out;
}

UniPoly intersect_with_s(const LeftGB& gb) {
    const WeylRing& r = gb.order.ring;
    if (!r.has_s) throw PreconditionError("intersect_with_s: ring has no s");
    UniPoly result;
    for (const auto& g : gb.basis) {
        if (g.is_zero()) continue;
        bool pure = true;
        for (const auto& [m, c] : g.terms())
            for (int i = 0; i < r.slots(); ++i)
                if (m.e[i] && i != r.s_slot()) pure = false;
        if (!pure) continue;
        std::vector<Rat> coeffs;
        for (const auto& [m, c] : g.terms()) {
            int k = m.e[r.s_slot()];
            if (k >= static_cast<int>(coeffs.size())) coeffs.resize(k + 1, Rat(0));
            coeffs[k] = c;
        }
        UniPoly u{std::vector<Rat>(coeffs)};
        result = result.is_zero() ? u : unipoly_gcd(result, u);
    }
    return result.is_zero() ? result : result.monic();
}

// ---------- rank-2 module Buchberger (POT, component 0 dominant) ----------

namespace {

struct ModOp {
    WeylOp a, b;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

struct ModLM {
    int comp;
    WeylMono m;
};

ModLM mod_lm(const ModOp& p, const WeylOrder& ord) {
    if (!p.a.is_zero()) return {0, leading_mono(p.a, ord)};
    return {1, leading_mono(p.b, ord)};
}

Rat mod_lc(const ModOp& p, const WeylOrder& ord) {
    if (!p.a.is_zero()) return leading_coeff(p.a, ord);
    return leading_coeff(p.b, ord);
}

void mod_sub(ModOp& p, const WeylRing& r, const WeylMono& q, const Rat& c, const ModOp& g) {
    if (!g.a.is_zero()) p.a -= weyl_mono_mul(r, q, c, g.a);
    if (!g.b.is_zero()) p.b -= weyl_mono_mul(r, q, c, g.b);
}

}  // namespace

std::vector<WeylOp> ann_quotient(const std::vector<WeylOp>& gens, const WeylOp& p,
                                 const WeylOrder& ord, const GBBudget& budget) {
    const WeylRing& r = ord.ring;
    if (ord.need_homog) throw PreconditionError("ann_quotient needs a well-order");
    GBStats st;

    std::vector<ModOp> basis;
    auto add = [&](ModOp m) {
        if (!m.is_zero()) basis.push_back(std::move(m));
    };
    for (const auto& g : gens) add({g, WeylOp(r)});
    add({p, WeylOp::constant(r, Rat(1))});

    struct MPairEntry {
        size_t i, j;
        WeylMono lcm;
        int deg;
    };
    std::vector<MPairEntry> queue;
    std::set<std::pair<size_t, size_t>> treated;
    auto push_pairs = [&](size_t j) {
        ModLM lj = mod_lm(basis[j], ord);
        for (size_t i = 0; i < j; ++i) {
            ModLM li = mod_lm(basis[i], ord);
            if (li.comp != lj.comp) continue;
            WeylMono l = WeylMono::lcm(li.m, lj.m);
            queue.push_back({i, j, l, l.deg(r)});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    auto normal_form = [&](ModOp q) {
        long steps = 0;
        ModOp rem{WeylOp(r), WeylOp(r)};
        while (!q.is_zero()) {
            if (++steps > budget.max_pair_reductions) budget_fail(st, "module reduction");
            ModLM lm = mod_lm(q, ord);
            int d = lm.m.deg(r);
            st.max_degree_seen = std::max(st.max_degree_seen, d);
            if (d > budget.max_degree) budget_fail(st, "module reduction (degree)");
            bool hit = false;
            for (const auto& g : basis) {
                ModLM gl = mod_lm(g, ord);
                if (gl.comp != lm.comp || !gl.m.divides(lm.m, r)) continue;
                const WeylOp& head = lm.comp == 0 ? q.a : q.b;
                Rat c = head.terms().at(lm.m) / mod_lc(g, ord);
                mod_sub(q, r, lm.m.quotient(gl.m), c, g);
                hit = true;
                break;
            }
            if (!hit) {
                WeylOp& head = lm.comp == 0 ? q.a : q.b;
                WeylOp& rhead = lm.comp == 0 ? rem.a : rem.b;
                Rat c = head.terms().at(lm.m);
                rhead.add_term(lm.m, c);
                head.add_term(lm.m, -c);
            }
        }
        return rem;
    };

    while (!queue.empty()) {
        auto best = std::min_element(
            queue.begin(), queue.end(),
            [](const MPairEntry& a, const MPairEntry& b) { return a.deg < b.deg; });
        MPairEntry pr = *best;
        queue.erase(best);
        treated.insert({pr.i, pr.j});

        {
            bool skip = false;
            auto key = [](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            ModLM li = mod_lm(basis[pr.i], ord);
            for (size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == pr.i || k == pr.j) continue;
                ModLM lk = mod_lm(basis[k], ord);
                if (lk.comp != li.comp || !lk.m.divides(pr.lcm, r)) continue;
                if (treated.count(key(pr.i, k)) && treated.count(key(pr.j, k))) skip = true;
            }
            if (skip) continue;
        }

        if (++st.pairs_processed > budget.max_pair_reductions) budget_fail(st, "module buchberger");

        ModLM li = mod_lm(basis[pr.i], ord), lj = mod_lm(basis[pr.j], ord);
        ModOp s{WeylOp(r), WeylOp(r)};
        mod_sub(s, r, pr.lcm.quotient(li.m), -mod_lc(basis[pr.i], ord).inv(), basis[pr.i]);
        mod_sub(s, r, pr.lcm.quotient(lj.m), mod_lc(basis[pr.j], ord).inv(), basis[pr.j]);
        ModOp red = normal_form(std::move(s));
        if (!red.is_zero()) {
            basis.push_back(std::move(red));
            push_pairs(basis.size() - 1);
        }
    }

    std::vector<WeylOp> out;
    for (const auto& g : basis)
        if (g.a.is_zero() && !g.b.is_zero()) out.push_back(g.b);
    return out;
}

// ---------- serialization ----------

std::string serialize_ops(const WeylRing& r, const std::vector<WeylOp>& ops) {
    std::ostringstream os;
    os << r.str() << "\n" << ops.size() << "\n";
    for (const auto& op : ops) {
        os << op.terms().size() << "\n";
        for (const auto& [m, c] : op.terms()) {
            for (int i = 0; i < r.slots(); ++i) os << m.e[i] << " ";
            os << c.str() << "\n";
        }
    }
    return os.str();
}

std::vector<WeylOp> deserialize_ops(const WeylRing& r, const std::string& text) {
    std::istringstream is(text);
    std::string ringtag;
    std::getline(is, ringtag);
    if (ringtag != r.str()) throw PreconditionError("serialized ring mismatch");
    size_t count = 0;
    is >> count;
    std::vector<WeylOp> out;
    for (size_t k = 0; k < count; ++k) {
        size_t nterms = 0;
        is >> nterms;
        WeylOp op(r);
        for (size_t t = 0; t < nterms; ++t) {
            WeylMono m;
            for (int i = 0; i < r.slots(); ++i) {
                int e = 0;
                is >> e;
                m.e[i] = static_cast<uint16_t>(e);
            }
            std::string coeff;
            is >> coeff;
            op.add_term(m, Rat::parse(coeff));
        }
        out.push_back(std::move(op));
    }
    if (!is) throw PreconditionError("truncated serialized basis");
    return out;
}

}  // namespace vhodge
