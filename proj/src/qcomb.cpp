#include "vhodge/qcomb.hpp"

#include "vhodge/mpoly.hpp"

namespace vhodge {

UniPoly q_poly(int i) {
    if (i < 0) throw PreconditionError("q_poly index must be nonnegative");
    UniPoly r(Rat(1));
    UniPoly x = UniPoly::variable();
    for (int j = 0; j < i; ++j) r = r * (x + UniPoly(Rat(j)));
    return r;
}

Rat q_value(int i, const Rat& x) {
    Rat r(1);
    for (int j = 0; j < i; ++j) r *= x + Rat(j);
    return r;
}

namespace {

// Q_i(arg) expanded as a bivariate polynomial, arg linear in vars {0,1}.
MPoly q_of(int i, const MPoly& arg) {
    MPoly r = MPoly::constant(arg.nvars(), Rat(1));
    for (int j = 0; j < i; ++j) r *= arg + MPoly::constant(arg.nvars(), Rat(j));
    return r;
}

}  // namespace

bool verify_convolution_identity(int j) {
    if (j < 0 || j > kQIdentityBound) throw PreconditionError("identity index out of bound");
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    MPoly lhs = q_of(j, x);
    MPoly rhs(2);
    for (int i = 0; i <= j; ++i) rhs += binomial(j, i) * (q_of(j - i, y) * q_of(i, x - y));
    return lhs == rhs;
}

bool verify_shift_identity(int j) {
    if (j < 0 || j > kQIdentityBound) throw PreconditionError("identity index out of bound");
    UniPoly lhs = q_poly(j).shift_arg(Rat(1));
    UniPoly rhs;
    for (int i = 0; i <= j; ++i) rhs = rhs + q_poly(j - i) * (factorial(i) * binomial(j, i));
    return lhs == rhs;
}

}  // namespace vhodge
