#ifndef VHODGE_WEYL_HPP
#define VHODGE_WEYL_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vhodge/mpoly.hpp"

namespace vhodge {

/// Ring signature for the Weyl algebra in x_1..x_n (optionally t, dt),
/// an optional central variable s, extra central commutative variables,
/// and an optional homogenization variable h with [d_i, x_i] = h^2.
struct WeylRing {
    int n = 1;
    bool has_t = false;
    bool has_s = false;
    int n_extra = 0;
    bool homog = false;

    // slot layout: x[0..n) | t | dx[0..n) | dt | s | extra[0..n_extra) | h
    int x_slot(int i) const { return i; }
    int t_slot() const { return n; }
    int dx_slot(int i) const { return n + (has_t ? 1 : 0) + i; }
    int dt_slot() const { return 2 * n + 1; }
    int s_slot() const { return 2 * n + (has_t ? 2 : 0); }
    int extra_slot(int k) const { return 2 * n + (has_t ? 2 : 0) + (has_s ? 1 : 0) + k; }
    int h_slot() const { return 2 * n + (has_t ? 2 : 0) + (has_s ? 1 : 0) + n_extra; }
    int slots() const { return h_slot() + (homog ? 1 : 0); }

    bool operator==(const WeylRing& o) const {
        return n == o.n && has_t == o.has_t && has_s == o.has_s && n_extra == o.n_extra &&
               homog == o.homog;
    }
    std::string str() const;
};

inline constexpr int kMaxSlots = 2 * kMaxVars + 2 + 1 + 4 + 1;

struct WeylMono {
    std::array<uint16_t, kMaxSlots> e{};

    int deg(const WeylRing& r) const {
        int d = 0;
        for (int i = 0; i < r.slots(); ++i) d += e[i];
        return d;
    }
    bool is_one(const WeylRing& r) const {
        for (int i = 0; i < r.slots(); ++i)
            if (e[i]) return false;
        return true;
    }
    WeylMono times(const WeylMono& o) const {  // commutative exponent sum
        WeylMono m;
        for (int i = 0; i < kMaxSlots; ++i) m.e[i] = static_cast<uint16_t>(e[i] + o.e[i]);
        return m;
    }
    bool divides(const WeylMono& o, const WeylRing& r) const {
        for (int i = 0; i < r.slots(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    WeylMono quotient(const WeylMono& o) const {
        WeylMono m;
        for (int i = 0; i < kMaxSlots; ++i) m.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
        return m;
    }
    static WeylMono lcm(const WeylMono& a, const WeylMono& b) {
        WeylMono m;
        for (int i = 0; i < kMaxSlots; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
        return m;
    }
    friend bool operator==(const WeylMono& a, const WeylMono& b) { return a.e == b.e; }
    friend bool operator<(const WeylMono& a, const WeylMono& b) { return a.e < b.e; }  // structural
};

/// Normally ordered element of the (optionally homogenized) Weyl algebra.
class WeylOp {
public:
    using TermMap = std::map<WeylMono, Rat>;

    WeylOp() {}
    explicit WeylOp(const WeylRing& r) : ring_(r) {}
    static WeylOp zero(const WeylRing& r) { return WeylOp(r); }
    static WeylOp constant(const WeylRing& r, const Rat& c);
    static WeylOp monomial(const WeylRing& r, const WeylMono& m, const Rat& c);
    static WeylOp generator(const WeylRing& r, int slot);  // x_i, t, dx_i, dt, s, extra
    /// Embeds a commutative polynomial (in the x variables) as an operator.
    static WeylOp from_poly(const WeylRing& r, const MPoly& p);
    /// Operator text: dx/dy/dz/dw or dx1.., x.., t, dt, s, ^, *, +, -, parentheses.
    static WeylOp parse(const std::string& text, const WeylRing& r);

    const WeylRing& ring() const { return ring_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const WeylMono& m, const Rat& c);

    WeylOp operator-() const;
    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    WeylOp operator*(const Rat& c) const;
    friend bool operator==(const WeylOp& a, const WeylOp& b) {
        return a.ring_ == b.ring_ && a.t_ == b.t_;
    }
    friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

    int total_degree() const;
    bool has_t_part() const;  // any t or dt exponent
    std::string str() const;

private:
    WeylRing ring_;
    TermMap t_;
};

/// Normally ordered product (the commutation calculus).
WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);
/// Left multiplication by a single term, c * m ∘ b.
WeylOp weyl_mono_mul(const WeylRing& r, const WeylMono& m, const Rat& c, const WeylOp& b);

/// Natural action on a polynomial; P must have no t/dt (s allowed nowhere).
MPoly weyl_apply(const WeylOp& p, const MPoly& g);

/// Element of O[1/f][s] f^s: sum_j (N_j / f^K) s^j f^s over a common f-power.
class FsElem {
public:
    FsElem(const MPoly& f, const MPoly& numerator, int fpow, int spow);
    static FsElem fs(const MPoly& f) { return FsElem(f, MPoly::constant(f.nvars(), Rat(1)), 0, 0); }
    static FsElem fs_plus_one(const MPoly& f) { return FsElem(f, f, 0, 0); }
    static FsElem zero(const MPoly& f) { return FsElem(f, MPoly(f.nvars()), 0, 0); }

    const MPoly& base() const { return f_; }
    int fpow() const { return k_; }
    const std::vector<MPoly>& numerators() const { return num_; }
    bool is_zero() const { return num_.empty(); }

    FsElem& operator+=(const FsElem& o);
    friend FsElem operator+(FsElem a, const FsElem& b) { return a += b; }
    FsElem operator*(const Rat& c) const;
    FsElem mul_poly(const MPoly& g) const;
    FsElem mul_s() const;
    FsElem div_f() const;  // multiply by 1/f
    FsElem d(int var) const;  // twisted derivative action

    friend bool operator==(const FsElem& a, const FsElem& b);
    std::string str() const;

private:
    void normalize();
    MPoly f_;
    int k_ = 0;                  // common denominator power f^k
    std::vector<MPoly> num_;     // index = s-power; trailing zeros trimmed
};

/// Twisted action of a D_X[s] operator (no t/dt; s central) on an FsElem.
FsElem apply_to_fs(const WeylOp& p, const FsElem& e);

/// b(s) * e for a univariate b.
FsElem scale_by_unipoly(const class UniPoly& b, const FsElem& e);

}  // namespace vhodge

#endif
