#ifndef VHODGE_WGB_HPP
#define VHODGE_WGB_HPP

#include <optional>
#include <string>
#include <vector>

#include "vhodge/unipoly.hpp"
#include "vhodge/weyl.hpp"

namespace vhodge {

/// Internal total order on Weyl monomials: a lexicographic sequence of
/// integer weight keys, then total degree, then degree-reverse-lex with the
/// homogenization slot least significant.
struct WeylOrder {
    WeylRing ring;
    std::vector<std::vector<long>> keys;
    bool need_homog = false;  // set when the key sequence is not a well-order

    int cmp(const WeylMono& a, const WeylMono& b) const;
    bool less(const WeylMono& a, const WeylMono& b) const { return cmp(a, b) < 0; }
    std::string str() const;
};

WeylOrder degrevlex_order(const WeylRing& r);
/// weight key (one row over slots) then degrevlex.
WeylOrder slot_weight_order(const WeylRing& r, const std::vector<long>& slot_weights);
/// elimination of the given slots (block degree first) then degrevlex.
WeylOrder elim_order(const WeylRing& r, const std::vector<int>& elim_slots);

/// User-facing weight/elimination order on the Weyl generators (spec type).
struct WeightOrder {
    std::vector<long> x_weights;   // size n (defaults to 0)
    std::vector<long> dx_weights;  // size n
    long t_weight = 0;
    long dt_weight = 0;
    std::string tie_break = "degrevlex";
    std::vector<std::string> eliminate;  // generator names to eliminate first

    /// Checks wt(x_i)+wt(dx_i) >= 0 and wt(t)+wt(dt) >= 0; throws otherwise.
    WeylOrder to_internal(const WeylRing& r) const;
    std::string str() const;
};

struct GBBudget {
    long max_pair_reductions = 1'000'000;
    int max_degree = 40;
};

struct GBStats {
    long pairs_processed = 0;
    int max_degree_seen = 0;
    size_t basis_size = 0;
};

/// Left Groebner basis value (dehomogenized when a weight order forced the
/// homogenized run).
struct LeftGB {
    std::vector<WeylOp> basis;
    WeylOrder order;
    bool complete = false;
    GBStats stats;
    /// present when cofactor tracking was requested: basis[k] = sum_i cof[k][i] * input[i]
    std::vector<std::vector<WeylOp>> cofactors;
};

const WeylMono& leading_mono(const WeylOp& p, const WeylOrder& ord);
Rat leading_coeff(const WeylOp& p, const WeylOrder& ord);

/// Full normal form against a basis (top and tail reduction).
WeylOp reduce_full(const WeylOp& p, const std::vector<WeylOp>& basis, const WeylOrder& ord,
                   const GBBudget& budget = {});

/// Left Buchberger. Homogenizes automatically when the order requires it.
LeftGB left_groebner(const std::vector<WeylOp>& gens, const WeylOrder& ord,
                     const GBBudget& budget = {}, bool track_cofactors = false);

/// Monic generator of (ideal of gb) ∩ Q[s]; gb must be over a ring with s and
/// computed under an order eliminating everything except s. Zero polynomial
/// when no pure-s element is present.
UniPoly intersect_with_s(const LeftGB& gb);

/// Rank-2 left module Groebner basis, POT order (component 0 dominant).
/// Returns the second components of the basis elements whose first component
/// vanishes: generators of the quotient {B : B*p in <gens>}.
std::vector<WeylOp> ann_quotient(const std::vector<WeylOp>& gens, const WeylOp& p,
                                 const WeylOrder& ord, const GBBudget& budget = {});

/// Homogenization helpers.
WeylRing homogenized(const WeylRing& r);
WeylOp homogenize(const WeylOp& p);
WeylOp dehomogenize(const WeylOp& p, const WeylRing& target);

/// v-degree (dt-count minus t-count) of a monomial; the V-grading of D_{n+1}.
int v_degree(const WeylRing& r, const WeylMono& m);
/// Top v-degree component.
WeylOp initial_v(const WeylOp& p);
/// Splits into v-homogeneous components (v-degree ascending).
std::vector<std::pair<int, WeylOp>> v_components(const WeylOp& p);
/// For a v-homogeneous H of v-degree d, the v-degree-0 left-normalizer
/// t^d * H (d > 0) or dt^{-d} * H (d < 0).
WeylOp v_normalize(const WeylOp& h, int d);
/// Rewrites a v-degree-0 operator (monomials x^a d^b t^i dt^i) into the
/// D_X[s] ring via t*dt = -s-1 (i.e. s = -dt*t).
WeylOp theta_to_s_ring(const WeylOp& p, const WeylRing& target);

/// Canonical text serialization (structural term order) for caching.
std::string serialize_ops(const WeylRing& r, const std::vector<WeylOp>& ops);
std::vector<WeylOp> deserialize_ops(const WeylRing& r, const std::string& text);

}  // namespace vhodge

#endif
