#include "vhodge/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace vhodge {

MPoly::MPoly(int nvars) : n_(nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        throw PreconditionError("variable count out of range (1.." + std::to_string(kMaxVars) + ")");
}

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.t_[Monomial{}] = c;
    return p;
}

MPoly MPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw PreconditionError("variable index out of range");
    MPoly p(nvars);
    Monomial m;
    m.e[i] = 1;
    p.t_[m] = Rat(1);
    return p;
}

MPoly MPoly::monomial(int nvars, const Monomial& m, const Rat& c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.t_[m] = c;
    return p;
}

int MPoly::low_degree() const {
    return t_.empty() ? -1 : t_.begin()->first.deg();
}

Rat MPoly::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rat(0) : it->second;
}

const Monomial& MPoly::lead_mono() const {
    if (t_.empty()) throw PreconditionError("leading monomial of zero polynomial");
    return t_.rbegin()->first;
}

const Rat& MPoly::lead_coeff() const {
    if (t_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return t_.rbegin()->second;
}

void MPoly::check_ring(const MPoly& o) const {
    if (n_ != o.n_) throw PreconditionError("mismatched variable counts");
}

MPoly MPoly::operator-() const {
    MPoly r(n_);
    for (const auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_ring(b);
    MPoly r(a.n_);
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : t_) r.t_[m] = k * c;
    return r;
}

MPoly MPoly::mul_mono(const Monomial& m, const Rat& c) const {
    MPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [mm, k] : t_) r.t_[mm * m] = k * c;
    return r;
}

MPoly MPoly::pow(int k) const {
    if (k < 0) throw PreconditionError("negative polynomial power");
    MPoly r = MPoly::constant(n_, Rat(1));
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
}

MPoly MPoly::derivative(int var) const {
    if (var < 0 || var >= n_) throw PreconditionError("derivative variable out of range");
    MPoly r(n_);
    for (const auto& [m, c] : t_) {
        if (m.e[var] == 0) continue;
        Monomial mm = m;
        mm.e[var] -= 1;
        r.add_term(mm, c * Rat(m.e[var]));
    }
    return r;
}

MPoly MPoly::subst_zero(int var) const {
    MPoly r(n_);
    for (const auto& [m, c] : t_)
        if (m.e[var] == 0) r.t_[m] = c;
    return r;
}

MPoly MPoly::embed(int nvars, int offset) const {
    MPoly r(nvars);
    for (const auto& [m, c] : t_) {
        Monomial mm;
        for (int i = 0; i < n_; ++i) {
            if (m.e[i] && i + offset >= nvars) throw PreconditionError("embed out of range");
            if (m.e[i]) mm.e[i + offset] = m.e[i];
        }
        r.t_[mm] = c;
    }
    return r;
}

MPoly MPoly::lowest_part() const {
    MPoly r(n_);
    if (t_.empty()) return r;
    int d = low_degree();
    for (const auto& [m, c] : t_)
        if (m.deg() == d) r.t_[m] = c;
    return r;
}

bool MPoly::depends_on(int var) const {
    for (const auto& [m, c] : t_)
        if (m.e[var]) return true;
    return false;
}

MPoly MPoly::divexact(const MPoly& d) const {
    check_ring(d);
    if (d.is_zero()) throw PreconditionError("division by zero polynomial");
    MPoly rem = *this;
    MPoly q(n_);
    while (!rem.is_zero()) {
        const Monomial& lm = rem.lead_mono();
        if (!d.lead_mono().divides(lm))
            throw PreconditionError("inexact polynomial division");
        Monomial qm = lm / d.lead_mono();
        Rat qc = rem.lead_coeff() / d.lead_coeff();
        q.add_term(qm, qc);
        rem -= d.mul_mono(qm, qc);
    }
    return q;
}

bool MPoly::divisible_by(const MPoly& d) const {
    try {
        divexact(d);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

// ---------- parsing ----------

namespace {

struct Lexer {
    std::string s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
};

int var_index(const std::string& name) {
    if (name == "x") return 0;
    if (name == "y") return 1;
    if (name == "z") return 2;
    if (name == "w") return 3;
    if (name.size() >= 2 && name[0] == 'x') {
        int k = 0;
        for (size_t j = 1; j < name.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(name[j]))) return -1;
            k = k * 10 + (name[j] - '0');
        }
        if (k >= 1 && k <= kMaxVars) return k - 1;
    }
    return -1;
}

struct Parser {
    Lexer lx;
    int max_var = -1;

    [[noreturn]] void fail(const std::string& msg) {
        throw PreconditionError("parse error at position " + std::to_string(lx.i) + ": " + msg);
    }

    mpz_class integer() {
        lx.skip();
        size_t start = lx.i;
        while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
        if (lx.i == start) fail("expected integer");
        return mpz_class(lx.s.substr(start, lx.i - start), 10);
    }

    Rat number() {
        mpz_class n = integer();
        lx.skip();
        if (lx.peek() == '/') {
            size_t save = lx.i;
            ++lx.i;
            lx.skip();
            if (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
                mpz_class d = integer();
                if (d == 0) fail("zero denominator");
                return Rat(mpq_class(n) / mpq_class(d));
            }
            lx.i = save;  // '/' not part of a rational literal
        }
        return Rat(mpq_class(n));
    }

    // expr := term (('+'|'-') term)*
    MPoly expr() {
        bool neg = false;
        while (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.peek() == '-') neg = !neg;
            ++lx.i;
        }
        MPoly acc = term();
        if (neg) acc = -acc;
        while (!lx.eof()) {
            char c = lx.peek();
            if (c == '+' || c == '-') {
                ++lx.i;
                bool tneg = (c == '-');
                while (lx.peek() == '+' || lx.peek() == '-') {
                    if (lx.peek() == '-') tneg = !tneg;
                    ++lx.i;
                }
                MPoly t = term();
                acc += tneg ? -t : t;
            } else {
                break;
            }
        }
        return acc;
    }

    // term := factor (('*')? factor)*
    MPoly term() {
        MPoly acc = factor();
        while (!lx.eof()) {
            char c = lx.peek();
            if (c == '*') {
                ++lx.i;
                acc *= factor();
            } else if (std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
                acc *= factor();
            } else {
                break;
            }
        }
        return acc;
    }

    // factor := atom ('^' integer)?
    MPoly factor() {
        MPoly a = atom();
        if (lx.peek() == '^') {
            ++lx.i;
            mpz_class e = integer();
            if (e < 0 || e > 512) fail("exponent out of range");
            a = a.pow(static_cast<int>(e.get_si()));
        }
        return a;
    }

    MPoly atom() {
        char c = lx.peek();
        if (c == '(') {
            ++lx.i;
            MPoly e = expr();
            if (lx.peek() != ')') fail("expected ')'");
            ++lx.i;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return MPoly::constant(kMaxVars, number());
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = lx.i;
            while (lx.i < lx.s.size() &&
                   (std::isalnum(static_cast<unsigned char>(lx.s[lx.i]))))
                ++lx.i;
            std::string name = lx.s.substr(start, lx.i - start);
            int v = var_index(name);
            if (v < 0) fail("unknown variable '" + name + "'");
            max_var = std::max(max_var, v);
            return MPoly::variable(kMaxVars, v);
        }
        fail("unexpected character");
    }
};

}  // namespace

MPoly MPoly::parse(const std::string& text, int nvars_hint) {
    Parser p;
    p.lx.s = text;
    MPoly wide = p.expr();
    if (!p.lx.eof()) p.fail("trailing input");
    int n = std::max(p.max_var + 1, std::max(nvars_hint, 1));
    if (n > kMaxVars) throw PreconditionError("too many variables");
    MPoly r(n);
    for (const auto& [m, c] : wide.t_) {
        for (int i = n; i < kMaxVars; ++i)
            if (m.e[i]) throw PreconditionError("variable beyond requested ring");
        r.t_[m] = c;
    }
    return r;
}

// ---------- printing ----------

std::string var_name(int nvars, int i) {
    static const char* xyzw[4] = {"x", "y", "z", "w"};
    if (nvars <= 4) return xyzw[i];
    return "x" + std::to_string(i + 1);
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Monomial& m = it->first;
        Rat c = it->second;
        if (first) {
            if (c.sgn() < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c.sgn() < 0 ? " - " : " + ");
            c = c.abs();
        }
        bool unit = c.is_one() && !m.is_one();
        if (!unit) os << c.str();
        bool printed = !unit;
        for (int i = 0; i < n_; ++i) {
            if (!m.e[i]) continue;
            if (printed) os << "*";
            os << var_name(n_, i);
            if (m.e[i] > 1) os << "^" << m.e[i];
            printed = true;
        }
        if (!printed) os << c.str();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

// ---------- gcd and square-free machinery ----------

namespace {

// Integer-primitive normalization: clears rational content, makes the leading
// (degrevlex) coefficient positive.
MPoly primitive_normalize(const MPoly& p) {
    if (p.is_zero()) return p;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    Rat scale(mpq_class(den_lcm) / mpq_class(num_gcd));
    MPoly r = p * scale;
    if (r.lead_coeff().sgn() < 0) r = -r;
    return r;
}

int deg_in(const MPoly& p, int v) {
    int d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max<int>(d, m.e[v]);
    return d;
}

// Coefficient of v^k, as a polynomial in the same ring with v-exponent zeroed.
MPoly coeff_in(const MPoly& p, int v, int k) {
    MPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m.e[v] != static_cast<uint16_t>(k)) continue;
        Monomial mm = m;
        mm.e[v] = 0;
        r.add_term(mm, c);
    }
    return r;
}

MPoly shift_in(const MPoly& p, int v, int k) {  // multiply by v^k
    Monomial m;
    m.e[v] = static_cast<uint16_t>(k);
    return p.mul_mono(m, Rat(1));
}

// Pseudo-remainder of a by b with respect to variable v (deg_v(a) >= deg_v(b) > 0).
MPoly prem(MPoly a, const MPoly& b, int v) {
    int db = deg_in(b, v);
    MPoly lcb = coeff_in(b, v, db);
    int da = deg_in(a, v);
    while (!a.is_zero() && (da = deg_in(a, v)) >= db) {
        MPoly lca = coeff_in(a, v, da);
        a = a * lcb - shift_in(lca, v, da - db) * b;
    }
    return a;
}

int top_var(const MPoly& p) {
    for (int v = kMaxVars - 1; v >= 0; --v)
        if (deg_in(p, v) > 0) return v;
    return -1;
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.is_zero() ? a : primitive_normalize(b);
    if (b.is_zero()) return primitive_normalize(a);
    int v = std::max(top_var(a), top_var(b));
    if (v < 0) return MPoly::constant(a.nvars(), Rat(1));

    // content/primitive split along v
    auto content_in = [&](const MPoly& p) {
        MPoly c(p.nvars());
        bool started = false;
        for (int k = 0; k <= deg_in(p, v); ++k) {
            MPoly ck = coeff_in(p, v, k);
            if (ck.is_zero()) continue;
            c = started ? mpoly_gcd(c, ck) : primitive_normalize(ck);
            started = true;
            if (c.is_constant()) break;
        }
        return c.is_constant() ? MPoly::constant(p.nvars(), Rat(1)) : c;
    };

    MPoly ca = content_in(a), cb = content_in(b);
    MPoly pa = primitive_normalize(a.divexact(ca));
    MPoly pb = primitive_normalize(b.divexact(cb));
    MPoly cg = mpoly_gcd(ca, cb);

    if (deg_in(pa, v) < deg_in(pb, v)) std::swap(pa, pb);
    while (true) {
        int db = deg_in(pb, v);
        if (db == 0) {
            // pb is free of v; gcd divides both contents along v
            MPoly g = mpoly_gcd(content_in(pa), pb);
            return primitive_normalize(cg * g);
        }
        MPoly r = prem(pa, pb, v);
        if (r.is_zero()) return primitive_normalize(cg * pb.divexact(content_in(pb)));
        pa = pb;
        pb = primitive_normalize(r);
    }
}

MPoly SquareFreeDecomp::radical(int nvars) const {
    MPoly r = MPoly::constant(nvars, Rat(1));
    for (const auto& f : factors) r *= f.base;
    return r;
}

SquareFreeDecomp squarefree_decompose(const MPoly& f) {
    SquareFreeDecomp out;
    if (f.is_zero()) throw PreconditionError("square-free decomposition of zero");
    if (f.is_constant()) {
        out.content = f.constant_term();
        return out;
    }
    // c_1 = gcd(f, df/dx1, ..., df/dxn) = prod base_i^(mult_i - 1)
    auto all_partial_gcd = [](const MPoly& p) {
        MPoly g = p;
        for (int v = 0; v < p.nvars(); ++v) g = mpoly_gcd(g, p.derivative(v));
        return g;
    };
    std::vector<MPoly> sqfree_parts;  // s_k = prod_{mult_i >= k} base_i
    MPoly w = primitive_normalize(f);
    Rat lead_ratio = f.lead_coeff() / w.lead_coeff();
    while (!w.is_constant()) {
        MPoly c = all_partial_gcd(w);
        sqfree_parts.push_back(w.divexact(c));
        Rat fix = sqfree_parts.back().lead_coeff();
        sqfree_parts.back() = sqfree_parts.back() * fix.inv();
        w = c;
    }
    // base with multiplicity exactly k is s_k / s_{k+1}
    for (size_t k = 0; k < sqfree_parts.size(); ++k) {
        MPoly base = (k + 1 < sqfree_parts.size())
                         ? sqfree_parts[k].divexact(sqfree_parts[k + 1])
                         : sqfree_parts[k];
        if (!base.is_constant())
            out.factors.push_back({base, static_cast<int>(k + 1)});
    }
    // content so that f = content * prod base^mult exactly
    MPoly prod = MPoly::constant(f.nvars(), Rat(1));
    for (const auto& fac : out.factors) prod *= fac.base.pow(fac.mult);
    out.content = f.lead_coeff() / prod.lead_coeff();
    if (!(prod * out.content == f))
        throw EngineBugError("square-free decomposition inconsistency");
    (void)lead_ratio;
    return out;
}

}  // namespace vhodge
