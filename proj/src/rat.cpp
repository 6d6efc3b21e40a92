#include "vhodge/rat.hpp"

#include <ostream>

namespace vhodge {

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw PreconditionError("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw PreconditionError("bad rational literal: " + s);
    try {
        mpq_class q(s, 10);
        q.canonicalize();
        if (q.get_den() == 0) throw PreconditionError("zero denominator: " + s);
        return Rat(q);
    } catch (const std::invalid_argument&) {
        throw PreconditionError("bad rational literal: " + s);
    }
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw PreconditionError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inv() const {
    if (is_zero()) throw PreconditionError("inverse of zero rational");
    return Rat(mpq_class(1) / v_);
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rat::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat binomial(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

Rat factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

}  // namespace vhodge
