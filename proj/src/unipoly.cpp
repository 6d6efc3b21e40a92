#include "vhodge/unipoly.hpp"

#include <sstream>

namespace vhodge {

Rat UniPoly::lead() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rat& k) const {
    if (k.is_zero()) return UniPoly();
    UniPoly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

UniPoly UniPoly::shift_arg(const Rat& shift) const { return compose_affine(Rat(1), shift); }

UniPoly UniPoly::compose_affine(const Rat& scale, const Rat& shift) const {
    UniPoly arg(std::vector<Rat>{shift, scale});
    UniPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * arg + UniPoly(*it);
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw PreconditionError("univariate division by zero");
    UniPoly r = *this;
    std::vector<Rat> q(std::max(0, degree() - d.degree() + 1), Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rat c = r.lead() / d.lead();
        q[k] += c;
        std::vector<Rat> sub(k + d.c_.size(), Rat(0));
        for (size_t i = 0; i < d.c_.size(); ++i) sub[k + i] = d.c_[i] * c;
        r = r - UniPoly(std::move(sub));
    }
    return {UniPoly(std::move(q)), r};
}

bool UniPoly::divides(const UniPoly& other) const {
    if (is_zero()) return other.is_zero();
    return other.divmod(*this).second.is_zero();
}

UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat c = coeff(k);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sgn() < 0) os << "-";
            first = false;
        } else {
            os << (c.sgn() < 0 ? " - " : " + ");
        }
        Rat a = c.abs();
        if (k == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace vhodge
