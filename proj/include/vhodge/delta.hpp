#ifndef VHODGE_DELTA_HPP
#define VHODGE_DELTA_HPP

#include <string>
#include <vector>

#include "vhodge/weyl.hpp"

namespace vhodge {

/// Element sum_{j<=p} v_j dt^j delta of the graph embedding of O_X,
/// with polynomial coefficients. The representation is unique.
class DeltaElem {
public:
    DeltaElem(const MPoly& f, std::vector<MPoly> coeffs);
    static DeltaElem delta(const MPoly& f);  // v_0 = 1
    static DeltaElem dt_power_delta(const MPoly& f, int p);

    const MPoly& base() const { return f_; }
    const std::vector<MPoly>& coeffs() const { return v_; }
    int dt_degree() const { return static_cast<int>(v_.size()) - 1; }  // -1 when zero
    bool is_zero() const { return v_.empty(); }
    MPoly coeff(int j) const;

    DeltaElem& operator+=(const DeltaElem& o);
    friend DeltaElem operator+(DeltaElem a, const DeltaElem& b) { return a += b; }
    DeltaElem operator*(const Rat& c) const;
    DeltaElem mul_poly(const MPoly& g) const;
    friend bool operator==(const DeltaElem& a, const DeltaElem& b) {
        return a.f_ == b.f_ && a.v_ == b.v_;
    }

    std::string str() const;  // "v0 + v1*dt + v2*dt^2 |delta"

private:
    void trim();
    MPoly f_;
    std::vector<MPoly> v_;
};

/// Element sum_j (num_j / f^k) f^beta dt^j delta of the graph embedding of
/// the twisted module M(f^beta); beta = 0 gives iota_+ O(*H).
class FracDeltaElem {
public:
    FracDeltaElem(const MPoly& f, const Rat& beta, int fpow, std::vector<MPoly> nums);
    static FracDeltaElem from_delta(const DeltaElem& u, const Rat& beta = Rat(0));

    const MPoly& base() const { return f_; }
    const Rat& beta() const { return beta_; }
    int fpow() const { return k_; }
    const std::vector<MPoly>& numerators() const { return num_; }
    int dt_degree() const { return static_cast<int>(num_.size()) - 1; }
    bool is_zero() const { return num_.empty(); }

    FracDeltaElem& operator+=(const FracDeltaElem& o);
    friend FracDeltaElem operator+(FracDeltaElem a, const FracDeltaElem& b) { return a += b; }
    FracDeltaElem operator*(const Rat& c) const;
    FracDeltaElem mul_poly(const MPoly& g) const;
    friend bool operator==(const FracDeltaElem& a, const FracDeltaElem& b);

    /// Integral part check and conversion (k = 0 after normalization).
    bool is_integral() const { return k_ == 0; }
    DeltaElem to_delta() const;

    std::string str() const;

private:
    void normalize();
    friend FracDeltaElem t_inverse(const FracDeltaElem& u);
    MPoly f_;
    Rat beta_;
    int k_ = 0;
    std::vector<MPoly> num_;
};

/// Action of a Weyl operator (ring (n, t)) on a delta element.
DeltaElem act(const WeylOp& p, const DeltaElem& u);
FracDeltaElem act(const WeylOp& p, const FracDeltaElem& u);

/// s = -dt*t applied once.
DeltaElem act_s(const DeltaElem& u);
FracDeltaElem act_s(const FracDeltaElem& u);

/// Solves t*w = u (multiplication by t is bijective on the twisted module).
FracDeltaElem t_inverse(const FracDeltaElem& u);

/// Q_j(dt*t) delta, asserted equal to f^j dt^j delta.
DeltaElem q_of_s_times_delta(int j, const MPoly& f);

/// Coefficientwise Phi^{-1}: from g (beta = 0 side) to the twisted side.
FracDeltaElem phi_inverse(const FracDeltaElem& g, const Rat& beta);
/// Phi: from the twisted side back to beta = 0 coefficients.
FracDeltaElem phi_forward(const FracDeltaElem& u);

/// The unique w with t*w = Phi^{-1}(v), beta = 1 - alpha (verified internally).
FracDeltaElem w_from_v(const DeltaElem& v, const Rat& alpha);

/// sum_{j=0}^{p} Q_j(alpha) f^{p-j} v_j, cross-checked against f^{p+1} w_0.
MPoly theorem_a_combination(const DeltaElem& v, const Rat& alpha, int p);

/// The ambient operator ring for a base polynomial.
WeylRing delta_ring(const MPoly& f);

}  // namespace vhodge

#endif
