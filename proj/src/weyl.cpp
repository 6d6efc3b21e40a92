#include "vhodge/weyl.hpp"

#include <cctype>
#include <sstream>

#include "vhodge/unipoly.hpp"

namespace vhodge {

std::string WeylRing::str() const {
    std::ostringstream os;
    os << "W(n=" << n << (has_t ? ",t" : "") << (has_s ? ",s" : "");
    if (n_extra) os << ",extra=" << n_extra;
    if (homog) os << ",h";
    os << ")";
    return os.str();
}

WeylOp WeylOp::constant(const WeylRing& r, const Rat& c) {
    WeylOp p(r);
    if (!c.is_zero()) p.t_[WeylMono{}] = c;
    return p;
}

WeylOp WeylOp::monomial(const WeylRing& r, const WeylMono& m, const Rat& c) {
    WeylOp p(r);
    if (!c.is_zero()) p.t_[m] = c;
    return p;
}

WeylOp WeylOp::generator(const WeylRing& r, int slot) {
    WeylMono m;
    m.e[slot] = 1;
    return monomial(r, m, Rat(1));
}

WeylOp WeylOp::from_poly(const WeylRing& r, const MPoly& p) {
    if (p.nvars() > r.n) throw PreconditionError("polynomial does not fit in operator ring");
    WeylOp out(r);
    for (const auto& [m, c] : p.terms()) {
        WeylMono w;
        for (int i = 0; i < p.nvars(); ++i) w.e[r.x_slot(i)] = m.e[i];
        out.t_[w] = c;
    }
    return out;
}

void WeylOp::add_term(const WeylMono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

WeylOp WeylOp::operator-() const {
    WeylOp r(ring_);
    for (const auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    if (!(ring_ == o.ring_)) throw PreconditionError("operator ring mismatch");
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    if (!(ring_ == o.ring_)) throw PreconditionError("operator ring mismatch");
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

WeylOp WeylOp::operator*(const Rat& c) const {
    WeylOp r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : t_) r.t_[m] = k * c;
    return r;
}

int WeylOp::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.deg(ring_));
    return d;
}

bool WeylOp::has_t_part() const {
    if (!ring_.has_t) return false;
    for (const auto& [m, c] : t_)
        if (m.e[ring_.t_slot()] || m.e[ring_.dt_slot()]) return true;
    return false;
}

namespace {

// d^b x^a = sum_k k! C(b,k) C(a,k) x^(a-k) d^(b-k) h^(2k)
void pair_expand(int a, int b, std::vector<std::pair<int, Rat>>& out) {
    out.clear();
    int kmax = std::min(a, b);
    for (int k = 0; k <= kmax; ++k)
        out.push_back({k, factorial(k) * binomial(b, k) * binomial(a, k)});
}

}  // namespace

WeylOp weyl_mono_mul(const WeylRing& r, const WeylMono& m1, const Rat& c1, const WeylOp& b) {
    WeylOp out(r);
    std::vector<std::pair<int, Rat>> choices[kMaxVars + 1];
    for (const auto& [m2, c2] : b.terms()) {
        // cross terms: m1's derivative parts against m2's coordinate parts
        int npairs = r.n + (r.has_t ? 1 : 0);
        for (int i = 0; i < r.n; ++i)
            pair_expand(m2.e[r.x_slot(i)], m1.e[r.dx_slot(i)], choices[i]);
        if (r.has_t) pair_expand(m2.e[r.t_slot()], m1.e[r.dt_slot()], choices[r.n]);

        std::vector<size_t> idx(npairs, 0);
        while (true) {
            Rat coeff = c1 * c2;
            WeylMono m = m1.times(m2);
            int hshift = 0;
            for (int i = 0; i < npairs; ++i) {
                const auto& [k, kc] = choices[i][idx[i]];
                coeff *= kc;
                if (i < r.n) {
                    m.e[r.x_slot(i)] = static_cast<uint16_t>(m.e[r.x_slot(i)] - k);
                    m.e[r.dx_slot(i)] = static_cast<uint16_t>(m.e[r.dx_slot(i)] - k);
                } else {
                    m.e[r.t_slot()] = static_cast<uint16_t>(m.e[r.t_slot()] - k);
                    m.e[r.dt_slot()] = static_cast<uint16_t>(m.e[r.dt_slot()] - k);
                }
                hshift += 2 * k;
            }
            if (r.homog) m.e[r.h_slot()] = static_cast<uint16_t>(m.e[r.h_slot()] + hshift);
            out.add_term(m, coeff);
            // advance multi-index
            int pos = 0;
            while (pos < npairs) {
                if (++idx[pos] < choices[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == npairs) break;
        }
    }
    return out;
}

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) {
    if (!(a.ring() == b.ring())) throw PreconditionError("operator ring mismatch");
    WeylOp out(a.ring());
    for (const auto& [m, c] : a.terms()) out += weyl_mono_mul(a.ring(), m, c, b);
    return out;
}

MPoly weyl_apply(const WeylOp& p, const MPoly& g) {
    const WeylRing& r = p.ring();
    if (p.has_t_part()) throw PreconditionError("weyl_apply: operator has t-part");
    if (r.has_s)
        for (const auto& [m, c] : p.terms())
            if (m.e[r.s_slot()]) throw PreconditionError("weyl_apply: operator has s-part");
    if (g.nvars() > r.n) throw PreconditionError("weyl_apply: polynomial ring too large");
    MPoly out(g.nvars());
    for (const auto& [m, c] : p.terms()) {
        MPoly cur = g;
        for (int i = 0; i < r.n && !cur.is_zero(); ++i)
            for (int k = 0; k < m.e[r.dx_slot(i)]; ++k) cur = cur.derivative(i);
        if (cur.is_zero()) continue;
        Monomial xm;
        for (int i = 0; i < g.nvars(); ++i) xm.e[i] = m.e[r.x_slot(i)];
        for (int i = g.nvars(); i < r.n; ++i)
            if (m.e[r.x_slot(i)]) throw PreconditionError("weyl_apply: variable beyond ring");
        out += cur.mul_mono(xm, c);
    }
    return out;
}

// ---------- FsElem ----------

FsElem::FsElem(const MPoly& f, const MPoly& numerator, int fpow, int spow)
    : f_(f), k_(fpow) {
    if (f.is_zero()) throw PreconditionError("FsElem base must be nonzero");
    if (!numerator.is_zero()) {
        num_.assign(spow + 1, MPoly(f.nvars()));
        num_[spow] = numerator;
    }
    normalize();
}

void FsElem::normalize() {
    while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
    if (num_.empty()) {
        k_ = 0;
        return;
    }
    // cancel common f factors
    while (k_ > 0) {
        bool all = true;
        for (const auto& n : num_)
            if (!n.is_zero() && !n.divisible_by(f_)) {
                all = false;
                break;
            }
        if (!all) break;
        for (auto& n : num_)
            if (!n.is_zero()) n = n.divexact(f_);
        --k_;
    }
}

FsElem& FsElem::operator+=(const FsElem& o) {
    if (f_ != o.f_) throw PreconditionError("FsElem base mismatch");
    int k = std::max(k_, o.k_);
    MPoly fa = f_.pow(k - k_), fb = f_.pow(k - o.k_);
    std::vector<MPoly> out(std::max(num_.size(), o.num_.size()), MPoly(f_.nvars()));
    for (size_t j = 0; j < out.size(); ++j) {
        MPoly v(f_.nvars());
        if (j < num_.size()) v += num_[j] * fa;
        if (j < o.num_.size()) v += o.num_[j] * fb;
        out[j] = v;
    }
    k_ = k;
    num_ = std::move(out);
    normalize();
    return *this;
}

FsElem FsElem::operator*(const Rat& c) const {
    FsElem r = *this;
    if (c.is_zero()) {
        r.num_.clear();
        r.k_ = 0;
        return r;
    }
    for (auto& n : r.num_) n = n * c;
    return r;
}

FsElem FsElem::mul_poly(const MPoly& g) const {
    FsElem r = *this;
    for (auto& n : r.num_) n = n * g;
    r.normalize();
    return r;
}

FsElem FsElem::mul_s() const {
    FsElem r = *this;
    if (r.num_.empty()) return r;
    r.num_.insert(r.num_.begin(), MPoly(f_.nvars()));
    return r;
}

FsElem FsElem::div_f() const {
    FsElem r = *this;
    if (!r.num_.empty()) r.k_ += 1;
    r.normalize();
    return r;
}

FsElem FsElem::d(int var) const {
    // D((N/f^k) s^j f^s) = ((D(N)f - k N D(f))/f^(k+1)) s^j f^s + (N D(f)/f^(k+1)) s^(j+1) f^s
    FsElem r = zero(f_);
    MPoly df = f_.derivative(var);
    for (size_t j = 0; j < num_.size(); ++j) {
        if (num_[j].is_zero()) continue;
        MPoly a = num_[j].derivative(var) * f_ - num_[j] * df * Rat(k_);
        MPoly b = num_[j] * df;
        FsElem ta(f_, a, k_ + 1, static_cast<int>(j));
        FsElem tb(f_, b, k_ + 1, static_cast<int>(j) + 1);
        r += ta;
        r += tb;
    }
    return r;
}

bool operator==(const FsElem& a, const FsElem& b) {
    if (a.f_ != b.f_) return false;
    FsElem d = a + (b * Rat(-1));
    return d.is_zero();
}

std::string FsElem::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "(";
    for (size_t j = 0; j < num_.size(); ++j) {
        if (num_[j].is_zero()) continue;
        os << "(" << num_[j].str() << ")";
        if (j == 1) os << "*s";
        if (j > 1) os << "*s^" << j;
        os << " + ";
    }
    os << "0)";
    if (k_ > 0) os << "/f^" << k_;
    os << " f^s";
    return os.str();
}

FsElem apply_to_fs(const WeylOp& p, const FsElem& e) {
    const WeylRing& r = p.ring();
    if (p.has_t_part()) throw PreconditionError("apply_to_fs: operator has t-part");
    FsElem out = FsElem::zero(e.base());
    for (const auto& [m, c] : p.terms()) {
        FsElem cur = e;
        if (r.has_s)
            for (int k = 0; k < m.e[r.s_slot()]; ++k) cur = cur.mul_s();
        for (int i = r.n - 1; i >= 0; --i)
            for (int k = 0; k < m.e[r.dx_slot(i)]; ++k) cur = cur.d(i);
        Monomial xm;
        for (int i = 0; i < e.base().nvars(); ++i) xm.e[i] = m.e[r.x_slot(i)];
        for (int i = e.base().nvars(); i < r.n; ++i)
            if (m.e[r.x_slot(i)]) throw PreconditionError("apply_to_fs: variable beyond ring");
        cur = cur.mul_poly(MPoly::monomial(e.base().nvars(), xm, Rat(1)));
        out += cur * c;
    }
    return out;
}

FsElem scale_by_unipoly(const UniPoly& b, const FsElem& e) {
    FsElem out = FsElem::zero(e.base());
    FsElem spow = e;
    for (int k = 0; k <= b.degree(); ++k) {
        out += spow * b.coeff(k);
        if (k < b.degree()) spow = spow.mul_s();
    }
    return out;
}

// ---------- operator parsing ----------

namespace {

struct OpLexer {
    std::string s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
};

struct OpParser {
    OpLexer lx;
    WeylRing ring;

    [[noreturn]] void fail(const std::string& m) {
        throw PreconditionError("operator parse error at " + std::to_string(lx.i) + ": " + m);
    }

    long integer() {
        lx.skip();
        size_t start = lx.i;
        while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
        if (lx.i == start) fail("expected integer");
        return std::stol(lx.s.substr(start, lx.i - start));
    }

    WeylOp expr() {
        bool neg = false;
        while (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.peek() == '-') neg = !neg;
            ++lx.i;
        }
        WeylOp acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = lx.peek();
            if (c != '+' && c != '-') break;
            ++lx.i;
            bool tneg = (c == '-');
            while (lx.peek() == '+' || lx.peek() == '-') {
                if (lx.peek() == '-') tneg = !tneg;
                ++lx.i;
            }
            WeylOp t = term();
            acc += tneg ? -t : t;
        }
        return acc;
    }

    WeylOp term() {
        WeylOp acc = factor();
        while (true) {
            char c = lx.peek();
            if (c == '*') {
                ++lx.i;
                acc = weyl_mul(acc, factor());
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
                acc = weyl_mul(acc, factor());
            } else {
                break;
            }
        }
        return acc;
    }

    WeylOp factor() {
        WeylOp a = atom();
        if (lx.peek() == '^') {
            ++lx.i;
            long e = integer();
            if (e < 0 || e > 64) fail("exponent out of range");
            WeylOp r = WeylOp::constant(ring, Rat(1));
            for (long k = 0; k < e; ++k) r = weyl_mul(r, a);
            return r;
        }
        return a;
    }

    int gen_slot(const std::string& name) {
        static const char* xyzw[4] = {"x", "y", "z", "w"};
        static const char* dxyzw[4] = {"dx", "dy", "dz", "dw"};
        for (int i = 0; i < std::min(ring.n, 4); ++i) {
            if (name == xyzw[i]) return ring.x_slot(i);
            if (name == dxyzw[i] && !(name == "dt" && ring.has_t)) return ring.dx_slot(i);
        }
        if (name == "t" && ring.has_t) return ring.t_slot();
        if (name == "dt" && ring.has_t) return ring.dt_slot();
        if (name.size() >= 2 && name[0] == 'x') {
            int k = std::atoi(name.c_str() + 1);
            if (k >= 1 && k <= ring.n) return ring.x_slot(k - 1);
        }
        if (name.size() >= 3 && name[0] == 'd' && name[1] == 'x') {
            int k = std::atoi(name.c_str() + 2);
            if (k >= 1 && k <= ring.n) return ring.dx_slot(k - 1);
        }
        return -1;
    }

    WeylOp atom() {
        char c = lx.peek();
        if (c == '(') {
            ++lx.i;
            WeylOp e = expr();
            if (lx.peek() != ')') fail("expected ')'");
            ++lx.i;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long n = integer();
            if (lx.peek() == '/') {
                ++lx.i;
                long d = integer();
                if (d == 0) fail("zero denominator");
                return WeylOp::constant(ring, Rat(n, d));
            }
            return WeylOp::constant(ring, Rat(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = lx.i;
            while (lx.i < lx.s.size() && std::isalnum(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
            std::string name = lx.s.substr(start, lx.i - start);
            if (name == "s") {
                if (!ring.has_s && !ring.has_t) fail("s not available in this ring");
                if (ring.has_s) return WeylOp::generator(ring, ring.s_slot());
                // s = -dt*t expanded on entry
                WeylOp dt = WeylOp::generator(ring, ring.dt_slot());
                WeylOp t = WeylOp::generator(ring, ring.t_slot());
                return -weyl_mul(dt, t);
            }
            int slot = gen_slot(name);
            if (slot < 0) fail("unknown generator '" + name + "'");
            return WeylOp::generator(ring, slot);
        }
        fail("unexpected character");
    }
};

}  // namespace

WeylOp WeylOp::parse(const std::string& text, const WeylRing& r) {
    OpParser p;
    p.lx.s = text;
    p.ring = r;
    WeylOp out = p.expr();
    p.lx.skip();
    if (p.lx.i != p.lx.s.size()) p.fail("trailing input");
    return out;
}

std::string WeylOp::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Rat a = c;
        if (first) {
            if (a.sgn() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a.sgn() < 0 ? " - " : " + ");
            a = a.abs();
        }
        std::vector<std::string> parts;
        auto emit = [&](const std::string& name, int e) {
            if (!e) return;
            parts.push_back(e == 1 ? name : name + "^" + std::to_string(e));
        };
        for (int i = 0; i < ring_.n; ++i) emit(var_name(std::min(ring_.n, 4) == ring_.n ? ring_.n : 8, i), m.e[ring_.x_slot(i)]);
        if (ring_.has_t) emit("t", m.e[ring_.t_slot()]);
        for (int i = 0; i < ring_.n; ++i)
            emit("d" + var_name(std::min(ring_.n, 4) == ring_.n ? ring_.n : 8, i), m.e[ring_.dx_slot(i)]);
        if (ring_.has_t) emit("dt", m.e[ring_.dt_slot()]);
        if (ring_.has_s) emit("s", m.e[ring_.s_slot()]);
        for (int k = 0; k < ring_.n_extra; ++k) emit("u" + std::to_string(k), m.e[ring_.extra_slot(k)]);
        if (ring_.homog) emit("h", m.e[ring_.h_slot()]);
        if (parts.empty()) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) os << "*";
                os << parts[i];
            }
        }
    }
    return os.str();
}

}  // namespace vhodge
