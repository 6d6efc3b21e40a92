#ifndef VHODGE_RAT_HPP
#define VHODGE_RAT_HPP

#include <gmpxx.h>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace vhodge {

/// Error classes mapped to CLI exit codes.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Internal-inconsistency (theorem-violation) class; a test-suite tripwire.
struct EngineBugError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact rational scalar. Always stored reduced, denominator > 0.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) { canon(); }
    explicit Rat(const mpq_class& q) : v_(q) { canon(); }
    explicit Rat(const mpz_class& z) : v_(z) {}

    /// Parses "a", "-a", or "a/b". Throws PreconditionError on malformed input.
    static Rat parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sgn() const { return ::sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inv() const;
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    /// Floor as exact integer rational.
    mpz_class floor() const;
    mpz_class ceil() const;

    /// "a" or "a/b".
    std::string str() const;

private:
    void canon() { v_.canonicalize(); }
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat binomial(long n, long k);  // C(n,k) for n >= 0
Rat factorial(long n);

}  // namespace vhodge

#endif
