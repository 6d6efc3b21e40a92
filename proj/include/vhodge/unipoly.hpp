#ifndef VHODGE_UNIPOLY_HPP
#define VHODGE_UNIPOLY_HPP

#include <string>
#include <vector>

#include "vhodge/rat.hpp"

namespace vhodge {

/// Dense univariate polynomial over Q (variable printed as "s" by default).
class UniPoly {
public:
    UniPoly() {}
    explicit UniPoly(const Rat& c) {
        if (!c.is_zero()) c_ = {c};
    }
    static UniPoly variable() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
    Rat lead() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rat& c) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return a.c_ != b.c_; }

    Rat eval(const Rat& x) const;
    /// Composition p(x + shift).
    UniPoly shift_arg(const Rat& shift) const;
    /// Composition p(c*x + shift) for the sign flips used around s = -dt*t.
    UniPoly compose_affine(const Rat& scale, const Rat& shift) const;

    UniPoly monic() const;
    /// Division with remainder; divisor nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    bool divides(const UniPoly& other) const;

    std::string str(const std::string& var = "s") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

UniPoly unipoly_gcd(UniPoly a, UniPoly b);

}  // namespace vhodge

#endif
