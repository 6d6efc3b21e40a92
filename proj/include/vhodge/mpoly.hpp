#ifndef VHODGE_MPOLY_HPP
#define VHODGE_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vhodge/rat.hpp"

namespace vhodge {

inline constexpr int kMaxVars = 8;

/// Exponent vector for up to kMaxVars commutative variables.
/// Unused slots stay zero, so comparisons are ring-size agnostic.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};

    int deg() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (auto x : e) if (x) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] + o.e[i]);
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i) if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i) if (e[i] && o.e[i]) return false;
        return true;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

/// Degree-reverse-lexicographic "less" — the single global order of the artifact.
struct DegRevLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.deg(), db = b.deg();
        if (da != db) return da < db;
        for (int i = kMaxVars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
        return false;
    }
};

/// Sparse multivariate polynomial over Q.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rat, DegRevLexLess>;

    MPoly() : n_(1) {}
    explicit MPoly(int nvars);
    static MPoly constant(int nvars, const Rat& c);
    static MPoly variable(int nvars, int i);
    static MPoly monomial(int nvars, const Monomial& m, const Rat& c);

    /// Parses the artifact's polynomial grammar: variables x1..xn
    /// (aliases x,y,z,w for n<=4), rational coefficients, ^, implicit products.
    /// nvars_hint = 0 infers the ring from the variables used.
    static MPoly parse(const std::string& text, int nvars_hint = 0);

    int nvars() const { return n_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
    int total_degree() const { return t_.empty() ? -1 : t_.rbegin()->first.deg(); }
    /// Degree of the lowest-degree term; -1 for the zero polynomial.
    int low_degree() const;
    Rat coeff(const Monomial& m) const;
    Rat constant_term() const { return coeff(Monomial{}); }

    const Monomial& lead_mono() const;
    const Rat& lead_coeff() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    MPoly operator*(const Rat& c) const;
    friend MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }
    MPoly mul_mono(const Monomial& m, const Rat& c) const;
    MPoly pow(int k) const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly derivative(int var) const;
    /// Substitutes 0 for variable var (same ring).
    MPoly subst_zero(int var) const;
    /// Re-embeds into a ring with more variables, shifting indices by offset.
    MPoly embed(int nvars, int offset) const;
    /// Sum of the terms of minimal total degree (the tangent cone part at 0).
    MPoly lowest_part() const;
    bool depends_on(int var) const;

    /// Exact division; throws PreconditionError when not divisible.
    MPoly divexact(const MPoly& d) const;
    bool divisible_by(const MPoly& d) const;

    void add_term(const Monomial& m, const Rat& c);

    std::string str() const;

private:
    void check_ring(const MPoly& o) const;
    int n_;
    TermMap t_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// GCD over Q[x1..xn] (primitive PRS; result has no rational-content meaning —
/// normalized with positive integer-primitive content and positive leading sign).
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

/// Square-free factorization over Q: f = c * prod_i factors[i].base ^ factors[i].mult
/// with pairwise coprime square-free bases, mult strictly increasing.
struct SquareFreeFactor {
    MPoly base;
    int mult;
};
struct SquareFreeDecomp {
    Rat content;
    std::vector<SquareFreeFactor> factors;
    bool reduced() const {
        for (const auto& f : factors) if (f.mult != 1) return false;
        return true;
    }
    /// The reduced equation prod_i base_i of the support.
    MPoly radical(int nvars) const;
};
SquareFreeDecomp squarefree_decompose(const MPoly& f);

/// Names used by parser and printer (x,y,z,w for nvars<=4, else x1..xn).
std::string var_name(int nvars, int i);

}  // namespace vhodge

#endif
