#include "vhodge/ideal.hpp"

#include <algorithm>
#include <set>

namespace vhodge {

MPoly normal_form(const MPoly& p, const std::vector<MPoly>& gb) {
    MPoly rem(p.nvars());
    MPoly work = p;
    while (!work.is_zero()) {
        const Monomial& lm = work.lead_mono();
        bool reduced = false;
        for (const auto& g : gb) {
            if (g.is_zero()) continue;
            if (g.lead_mono().divides(lm)) {
                Monomial q = lm / g.lead_mono();
                Rat c = work.lead_coeff() / g.lead_coeff();
                work -= g.mul_mono(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lm, work.lead_coeff());
            work.add_term(lm, -work.lead_coeff());
        }
    }
    return rem;
}

namespace {

struct Pair {
    size_t i, j;
    Monomial lcm;
    int deg;
};

bool chain_criterion(const std::vector<MPoly>& basis, const std::set<std::pair<size_t, size_t>>& done,
                     size_t i, size_t j, const Monomial& lcm_ij) {
    for (size_t k = 0; k < basis.size(); ++k) {
        if (k == i || k == j || basis[k].is_zero()) continue;
        if (!basis[k].lead_mono().divides(lcm_ij)) continue;
        auto key = [](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        if (done.count(key(i, k)) && done.count(key(j, k))) return true;
    }
    return false;
}

}  // namespace

std::vector<MPoly> groebner_commutative(const std::vector<MPoly>& gens) {
    std::vector<MPoly> basis;
    int nvars = gens.empty() ? 1 : gens.front().nvars();
    for (const auto& g : gens) {
        if (g.nvars() != nvars) throw PreconditionError("generators in different rings");
        if (!g.is_zero()) basis.push_back(g);
    }

    std::vector<Pair> queue;
    std::set<std::pair<size_t, size_t>> done;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].lead_mono(), basis[j].lead_mono());
            queue.push_back({i, j, l, l.deg()});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto best = std::min_element(queue.begin(), queue.end(),
                                     [](const Pair& a, const Pair& b) { return a.deg < b.deg; });
        Pair pr = *best;
        queue.erase(best);
        done.insert({pr.i, pr.j});

        // product criterion
        if (basis[pr.i].lead_mono().coprime(basis[pr.j].lead_mono())) continue;
        if (chain_criterion(basis, done, pr.i, pr.j, pr.lcm)) continue;

        const MPoly &f = basis[pr.i], &g = basis[pr.j];
        MPoly s = f.mul_mono(pr.lcm / f.lead_mono(), f.lead_coeff().inv()) -
                  g.mul_mono(pr.lcm / g.lead_mono(), g.lead_coeff().inv());
        MPoly r = normal_form(s, basis);
        if (!r.is_zero()) {
            basis.push_back(r);
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize: drop generators whose lead is divisible by another lead
    std::vector<MPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].lead_mono().divides(basis[i].lead_mono())) {
                if (basis[j].lead_mono() != basis[i].lead_mono() || j < i) {
                    redundant = true;
                    break;
                }
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // reduce tails and make monic
    std::vector<MPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MPoly r = normal_form(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r * r.lead_coeff().inv());
    }
    std::sort(reduced.begin(), reduced.end(), [](const MPoly& a, const MPoly& b) {
        return DegRevLexLess{}(a.lead_mono(), b.lead_mono());
    });
    return reduced;
}

IdealGens::IdealGens(std::vector<MPoly> gens) : n_(1), gens_(std::move(gens)) {
    if (!gens_.empty()) n_ = gens_.front().nvars();
    for (const auto& g : gens_)
        if (g.nvars() != n_) throw PreconditionError("ideal generators in different rings");
}

IdealGens IdealGens::zero(int nvars) {
    IdealGens i;
    i.n_ = nvars;
    return i;
}

IdealGens IdealGens::unit(int nvars) { return IdealGens({MPoly::constant(nvars, Rat(1))}); }

const std::vector<MPoly>& IdealGens::reduced_basis() const {
    if (!gb_) gb_ = groebner_commutative(gens_);
    return *gb_;
}

bool IdealGens::is_unit() const {
    const auto& gb = reduced_basis();
    return gb.size() == 1 && gb.front().is_constant();
}

bool IdealGens::contains(const MPoly& p) const {
    if (p.nvars() != n_) throw PreconditionError("mismatched variable counts");
    return normal_form(p, reduced_basis()).is_zero();
}

bool IdealGens::contains(const IdealGens& other) const {
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool ideal_equal(const IdealGens& a, const IdealGens& b) {
    if (a.n_ != b.n_) throw PreconditionError("mismatched variable counts");
    return a.reduced_basis() == b.reduced_basis();
}

IdealGens IdealGens::sum_with_principal(const MPoly& f) const {
    if (f.nvars() != n_) throw PreconditionError("mismatched variable counts");
    std::vector<MPoly> g = gens_;
    g.push_back(f);
    IdealGens r(std::move(g));
    r.n_ = n_;
    return r;
}

IdealGens IdealGens::sum(const IdealGens& other) const {
    if (other.n_ != n_) throw PreconditionError("mismatched variable counts");
    std::vector<MPoly> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    IdealGens r(std::move(g));
    r.n_ = n_;
    return r;
}

IdealGens IdealGens::multiply_principal(const MPoly& f) const {
    if (f.nvars() != n_) throw PreconditionError("mismatched variable counts");
    std::vector<MPoly> g;
    for (const auto& h : gens_) g.push_back(h * f);
    IdealGens r(std::move(g));
    r.n_ = n_;
    return r;
}

int IdealGens::dimension() const {
    const auto& gb = reduced_basis();
    if (gb.empty()) throw PreconditionError("dimension of whole ring requested");
    if (is_unit()) return -1;  // empty variety
    std::vector<Monomial> leads;
    for (const auto& g : gb) leads.push_back(g.lead_mono());
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n_); ++mask) {
        bool independent = true;
        for (const auto& lm : leads) {
            bool supported_in_s = true;
            for (int i = 0; i < n_; ++i)
                if (lm.e[i] && !(mask & (1u << i))) {
                    supported_in_s = false;
                    break;
                }
            if (supported_in_s) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

std::vector<std::string> IdealGens::str_generators() const {
    std::vector<std::string> out;
    for (const auto& g : reduced_basis()) out.push_back(g.str());
    return out;
}

}  // namespace vhodge
