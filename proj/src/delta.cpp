#include "vhodge/delta.hpp"

#include <sstream>

#include "vhodge/qcomb.hpp"

namespace vhodge {

WeylRing delta_ring(const MPoly& f) {
    WeylRing r;
    r.n = f.nvars();
    r.has_t = true;
    return r;
}

// ---------- DeltaElem ----------

DeltaElem::DeltaElem(const MPoly& f, std::vector<MPoly> coeffs) : f_(f), v_(std::move(coeffs)) {
    if (f.is_zero() || f.is_constant())
        throw PreconditionError("delta element base must be nonconstant");
    for (const auto& c : v_)
        if (c.nvars() != f.nvars()) throw PreconditionError("delta coefficient ring mismatch");
    trim();
}

DeltaElem DeltaElem::delta(const MPoly& f) {
    return DeltaElem(f, {MPoly::constant(f.nvars(), Rat(1))});
}

DeltaElem DeltaElem::dt_power_delta(const MPoly& f, int p) {
    std::vector<MPoly> v(p + 1, MPoly(f.nvars()));
    v[p] = MPoly::constant(f.nvars(), Rat(1));
    return DeltaElem(f, std::move(v));
}

void DeltaElem::trim() {
    while (!v_.empty() && v_.back().is_zero()) v_.pop_back();
}

MPoly DeltaElem::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(v_.size())) return MPoly(f_.nvars());
    return v_[j];
}

DeltaElem& DeltaElem::operator+=(const DeltaElem& o) {
    if (f_ != o.f_) throw PreconditionError("delta element base mismatch");
    if (o.v_.size() > v_.size()) v_.resize(o.v_.size(), MPoly(f_.nvars()));
    for (size_t j = 0; j < o.v_.size(); ++j) v_[j] += o.v_[j];
    trim();
    return *this;
}

DeltaElem DeltaElem::operator*(const Rat& c) const {
    DeltaElem r = *this;
    if (c.is_zero()) {
        r.v_.clear();
        return r;
    }
    for (auto& x : r.v_) x = x * c;
    return r;
}

DeltaElem DeltaElem::mul_poly(const MPoly& g) const {
    DeltaElem r = *this;
    for (auto& x : r.v_) x = x * g;
    r.trim();
    return r;
}

std::string DeltaElem::str() const {
    if (v_.empty()) return "0 |delta";
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < v_.size(); ++j) {
        if (v_[j].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << v_[j].str() << ")";
        if (j == 1) os << "*dt";
        if (j > 1) os << "*dt^" << j;
        first = false;
    }
    os << " |delta";
    return os.str();
}

// ---------- FracDeltaElem ----------

FracDeltaElem::FracDeltaElem(const MPoly& f, const Rat& beta, int fpow, std::vector<MPoly> nums)
    : f_(f), beta_(beta), k_(fpow), num_(std::move(nums)) {
    if (f.is_zero() || f.is_constant())
        throw PreconditionError("delta element base must be nonconstant");
    normalize();
}

FracDeltaElem FracDeltaElem::from_delta(const DeltaElem& u, const Rat& beta) {
    return FracDeltaElem(u.base(), beta, 0, u.coeffs());
}

void FracDeltaElem::normalize() {
    while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
    if (num_.empty()) {
        k_ = 0;
        return;
    }
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

FracDeltaElem& FracDeltaElem::operator+=(const FracDeltaElem& o) {
    if (f_ != o.f_ || beta_ != o.beta_)
        throw PreconditionError("twisted delta element base/twist mismatch");
    int k = std::max(k_, o.k_);
    MPoly fa = f_.pow(k - k_), fb = f_.pow(k - o.k_);
    std::vector<MPoly> out(std::max(num_.size(), o.num_.size()), MPoly(f_.nvars()));
    for (size_t j = 0; j < out.size(); ++j) {
        if (j < num_.size()) out[j] += num_[j] * fa;
        if (j < o.num_.size()) out[j] += o.num_[j] * fb;
    }
    k_ = k;
    num_ = std::move(out);
    normalize();
    return *this;
}

FracDeltaElem FracDeltaElem::operator*(const Rat& c) const {
    FracDeltaElem r = *this;
    if (c.is_zero()) {
        r.num_.clear();
        r.k_ = 0;
        return r;
    }
    for (auto& n : r.num_) n = n * c;
    return r;
}

FracDeltaElem FracDeltaElem::mul_poly(const MPoly& g) const {
    FracDeltaElem r = *this;
    for (auto& n : r.num_) n = n * g;
    r.normalize();
    return r;
}

bool operator==(const FracDeltaElem& a, const FracDeltaElem& b) {
    if (a.f_ != b.f_ || a.beta_ != b.beta_) return false;
    FracDeltaElem d = a + (b * Rat(-1));
    return d.is_zero();
}

DeltaElem FracDeltaElem::to_delta() const {
    if (k_ != 0) throw PreconditionError("fractional delta element is not integral");
    return DeltaElem(f_, num_);
}

std::string FracDeltaElem::str() const {
    std::ostringstream os;
    if (num_.empty()) return "0 |f^beta delta";
    bool first = true;
    for (size_t j = 0; j < num_.size(); ++j) {
        if (num_[j].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << num_[j].str() << ")";
        if (k_ > 0) os << "/f^" << k_;
        if (j == 1) os << "*dt";
        if (j > 1) os << "*dt^" << j;
        first = false;
    }
    os << " |f^(" << beta_.str() << ") delta";
    return os.str();
}

// ---------- actions ----------

namespace {

// shared single-generator actions, parameterized over the coefficient model
template <class Elem>
Elem act_dt(const Elem& u);
template <class Elem>
Elem act_t(const Elem& u);
template <class Elem>
Elem act_dx(const Elem& u, int var);

template <>
DeltaElem act_dt<DeltaElem>(const DeltaElem& u) {
    std::vector<MPoly> v(u.coeffs().size() + 1, MPoly(u.base().nvars()));
    for (size_t j = 0; j < u.coeffs().size(); ++j) v[j + 1] = u.coeffs()[j];
    return DeltaElem(u.base(), std::move(v));
}

template <>
DeltaElem act_t<DeltaElem>(const DeltaElem& u) {
    // t(v_j dt^j) = f v_j dt^j - j v_j dt^(j-1)
    const auto& v = u.coeffs();
    std::vector<MPoly> w(v.size(), MPoly(u.base().nvars()));
    for (size_t j = 0; j < v.size(); ++j) {
        w[j] += v[j] * u.base();
        if (j >= 1) w[j - 1] += v[j] * Rat(-static_cast<long>(j));
    }
    return DeltaElem(u.base(), std::move(w));
}

template <>
DeltaElem act_dx<DeltaElem>(const DeltaElem& u, int var) {
    // D(v_j dt^j) = D(v_j) dt^j - D(f) v_j dt^(j+1)
    const auto& v = u.coeffs();
    MPoly df = u.base().derivative(var);
    std::vector<MPoly> w(v.size() + 1, MPoly(u.base().nvars()));
    for (size_t j = 0; j < v.size(); ++j) {
        w[j] += v[j].derivative(var);
        w[j + 1] -= v[j] * df;
    }
    return DeltaElem(u.base(), std::move(w));
}

template <>
FracDeltaElem act_dt<FracDeltaElem>(const FracDeltaElem& u) {
    std::vector<MPoly> v(u.numerators().size() + 1, MPoly(u.base().nvars()));
    for (size_t j = 0; j < u.numerators().size(); ++j) v[j + 1] = u.numerators()[j];
    return FracDeltaElem(u.base(), u.beta(), u.fpow(), std::move(v));
}

template <>
FracDeltaElem act_t<FracDeltaElem>(const FracDeltaElem& u) {
    const auto& v = u.numerators();
    std::vector<MPoly> w(v.size(), MPoly(u.base().nvars()));
    for (size_t j = 0; j < v.size(); ++j) {
        w[j] += v[j] * u.base();
        if (j >= 1) w[j - 1] += v[j] * Rat(-static_cast<long>(j));
    }
    return FracDeltaElem(u.base(), u.beta(), u.fpow(), std::move(w));
}

template <>
FracDeltaElem act_dx<FracDeltaElem>(const FracDeltaElem& u, int var) {
    // D((N/f^k) f^beta dt^j) = [ (D(N)f - kND(f) + beta N D(f)) / f^(k+1) ] f^beta dt^j
    //                          - [ N D(f) f / f^(k+1) ] f^beta dt^(j+1)
    const auto& v = u.numerators();
    const MPoly& f = u.base();
    MPoly df = f.derivative(var);
    std::vector<MPoly> w(v.size() + 1, MPoly(f.nvars()));
    Rat kk(u.fpow());
    for (size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        w[j] += v[j].derivative(var) * f + v[j] * df * (u.beta() - kk);
        w[j + 1] -= v[j] * df * f;
    }
    return FracDeltaElem(f, u.beta(), u.fpow() + 1, std::move(w));
}

template <class Elem>
Elem act_generic(const WeylOp& p, const Elem& u) {
    const WeylRing& r = p.ring();
    if (!r.has_t || r.n < u.base().nvars())
        throw PreconditionError("act: operator ring does not match delta module");
    if (r.has_s || r.homog) throw PreconditionError("act: unexpected s/h in operator");
    Elem out = u * Rat(0);
    for (const auto& [m, c] : p.terms()) {
        Elem cur = u;
        for (int k = 0; k < m.e[r.dt_slot()]; ++k) cur = act_dt<Elem>(cur);
        for (int i = r.n - 1; i >= 0; --i)
            for (int k = 0; k < m.e[r.dx_slot(i)]; ++k) cur = act_dx<Elem>(cur, i);
        for (int k = 0; k < m.e[r.t_slot()]; ++k) cur = act_t<Elem>(cur);
        Monomial xm;
        for (int i = 0; i < u.base().nvars(); ++i) xm.e[i] = m.e[r.x_slot(i)];
        for (int i = u.base().nvars(); i < r.n; ++i)
            if (m.e[r.x_slot(i)]) throw PreconditionError("act: variable beyond ring");
        cur = cur.mul_poly(MPoly::monomial(u.base().nvars(), xm, Rat(1)));
        out += cur * c;
    }
    return out;
}

}  // namespace

DeltaElem act(const WeylOp& p, const DeltaElem& u) { return act_generic<DeltaElem>(p, u); }
FracDeltaElem act(const WeylOp& p, const FracDeltaElem& u) {
    return act_generic<FracDeltaElem>(p, u);
}

DeltaElem act_s(const DeltaElem& u) { return act_dt<DeltaElem>(act_t<DeltaElem>(u)) * Rat(-1); }
FracDeltaElem act_s(const FracDeltaElem& u) {
    return act_dt<FracDeltaElem>(act_t<FracDeltaElem>(u)) * Rat(-1);
}

FracDeltaElem t_inverse(const FracDeltaElem& u) {
    // solve t*w = u: u_j = f*w_j - (j+1)*w_{j+1}, downward from the top;
    // all w_j share the denominator f^(k+p+1)
    const MPoly& f = u.base();
    if (u.is_zero()) return u;
    int p = u.dt_degree();
    int k = u.fpow();
    std::vector<MPoly> fpow(p + 1, MPoly::constant(f.nvars(), Rat(1)));
    for (int i = 1; i <= p; ++i) fpow[i] = fpow[i - 1] * f;
    std::vector<MPoly> nums(p + 1, MPoly(f.nvars()));
    nums[p] = u.numerators()[p] * fpow[p];
    for (int j = p - 1; j >= 0; --j)
        nums[j] = u.numerators()[j] * fpow[j] + nums[j + 1] * Rat(j + 1);
    FracDeltaElem w_out(f, u.beta(), k + p + 1, std::move(nums));
    WeylRing r = delta_ring(f);
    if (!(act(WeylOp::generator(r, r.t_slot()), w_out) == u))
        throw EngineBugError("t_inverse verification failed");
    return w_out;
}

DeltaElem q_of_s_times_delta(int j, const MPoly& f) {
    if (j < 0) throw PreconditionError("q_of_s_times_delta: negative index");
    WeylRing r = delta_ring(f);
    DeltaElem u = DeltaElem::delta(f);
    // Q_j(dt t) = prod_{l=0}^{j-1} (dt t + l)
    for (int l = 0; l < j; ++l) {
        DeltaElem shifted = act_dt<DeltaElem>(act_t<DeltaElem>(u)) + u * Rat(l);
        u = shifted;
    }
    DeltaElem expect = DeltaElem::dt_power_delta(f, j).mul_poly(f.pow(j));
    if (j == 0) expect = DeltaElem::delta(f);
    if (!(u == expect))
        throw EngineBugError("Q_j(dt t) delta != f^j dt^j delta: delta-module action bug");
    return u;
}

FracDeltaElem phi_inverse(const FracDeltaElem& g, const Rat& beta) {
    if (!g.beta().is_zero()) throw PreconditionError("phi_inverse expects the beta = 0 side");
    if (g.is_zero()) return FracDeltaElem(g.base(), beta, 0, {});
    const MPoly& f = g.base();
    int p = g.dt_degree();
    int k = g.fpow();
    // h_i = sum_{j>=i} C(j,i) Q_{j-i}(-beta) g_j f^{i-j}; over f^(k+p)
    std::vector<MPoly> fpow(p + 1, MPoly::constant(f.nvars(), Rat(1)));
    for (int i = 1; i <= p; ++i) fpow[i] = fpow[i - 1] * f;
    std::vector<MPoly> nums(p + 1, MPoly(f.nvars()));
    for (int i = 0; i <= p; ++i)
        for (int j = i; j <= p; ++j) {
            Rat c = binomial(j, i) * q_value(j - i, -beta);
            if (c.is_zero()) continue;
            nums[i] += g.numerators()[j] * fpow[p - j + i] * c;
        }
    return FracDeltaElem(f, beta, k + p, std::move(nums));
}

FracDeltaElem phi_forward(const FracDeltaElem& u) {
    if (u.is_zero()) return FracDeltaElem(u.base(), Rat(0), 0, {});
    const MPoly& f = u.base();
    const Rat& beta = u.beta();
    int p = u.dt_degree();
    int k = u.fpow();
    // solve the triangular system h_i/f^i = sum_{j>=i} C(j,i)Q_{j-i}(-beta) g_j/f^j
    // over the common denominator f^(k+p): H_i = u.num[i] * f^(p-0...)...
    // Let G_j be numerators of g over f^(k+p):
    //   u.num[i] * f^(p... ) careful: h_i = num[i]/f^k; equation scaled by f^(k+p-?):
    //   num[i] * f^(p-i)??  Use: h_i f^{p-i} = sum_j C Q g_j f^{p-j}:
    //   LHS_i := num[i] * f^(p-i) / f^(k+p-i)... clean scaling:
    //   define A_i := num[i] * f^(p-i)  (numerator of h_i/f^i over f^(k+p))
    //   define B_j := numerator of g_j/f^j over f^(k+p)
    //   A_i = sum_{j>=i} C(j,i) Q_{j-i}(-beta) B_j, triangular with unit diagonal.
    std::vector<MPoly> fpow(p + 1, MPoly::constant(f.nvars(), Rat(1)));
    for (int i = 1; i <= p; ++i) fpow[i] = fpow[i - 1] * f;
    std::vector<MPoly> A(p + 1, MPoly(f.nvars()));
    for (int i = 0; i <= p; ++i) A[i] = u.numerators()[i] * fpow[p - i];
    std::vector<MPoly> B(p + 1, MPoly(f.nvars()));
    for (int i = p; i >= 0; --i) {
        MPoly rhs = A[i];
        for (int j = i + 1; j <= p; ++j) {
            Rat c = binomial(j, i) * q_value(j - i, -beta);
            if (!c.is_zero()) rhs -= B[j] * c;
        }
        B[i] = rhs;
    }
    // B_i is the numerator of g_i/f^i over f^(k+p), so g_i sits over f^(k+p)
    // with numerator B_i * f^i
    std::vector<MPoly> nums(p + 1, MPoly(f.nvars()));
    for (int j = 0; j <= p; ++j) nums[j] = B[j] * fpow[j];
    FracDeltaElem g(f, Rat(0), k + p, std::move(nums));
    if (!(phi_inverse(g, beta) == u)) throw EngineBugError("phi round-trip failed");
    return g;
}

FracDeltaElem w_from_v(const DeltaElem& v, const Rat& alpha) {
    if (alpha <= Rat(0)) throw PreconditionError("w_from_v requires alpha > 0");
    Rat beta = Rat(1) - alpha;
    const MPoly& f = v.base();
    if (v.is_zero()) return FracDeltaElem(f, beta, 0, {});
    int p = v.dt_degree();
    // w_i = sum_{j>=i} C(j,i) Q_{j-i}(alpha) v_j / f^(j-i+1); common denom f^(p+1)
    std::vector<MPoly> fpow(p + 1, MPoly::constant(f.nvars(), Rat(1)));
    for (int i = 1; i <= p; ++i) fpow[i] = fpow[i - 1] * f;
    std::vector<MPoly> nums(p + 1, MPoly(f.nvars()));
    for (int i = 0; i <= p; ++i)
        for (int j = i; j <= p; ++j) {
            Rat c = binomial(j, i) * q_value(j - i, alpha);
            if (c.is_zero()) continue;
            nums[i] += v.coeffs()[j] * fpow[p - j + i] * c;
        }
    FracDeltaElem w(f, beta, p + 1, std::move(nums));
    // verification: t*w = Phi^{-1}(v)
    WeylRing r = delta_ring(f);
    FracDeltaElem tw = act(WeylOp::generator(r, r.t_slot()), w);
    FracDeltaElem u = phi_inverse(FracDeltaElem::from_delta(v), beta);
    if (!(tw == u)) throw EngineBugError("w_from_v: t*w != Phi^{-1}(v)");
    return w;
}

MPoly theorem_a_combination(const DeltaElem& v, const Rat& alpha, int p) {
    if (v.dt_degree() > p)
        throw PreconditionError("theorem_a_combination: dt-degree exceeds p");
    const MPoly& f = v.base();
    MPoly out(f.nvars());
    for (int j = 0; j <= p; ++j) {
        MPoly vj = v.coeff(j);
        if (vj.is_zero()) continue;
        out += vj * f.pow(p - j) * q_value(j, alpha);
    }
    if (!v.is_zero()) {
        // cross-check against f^(p+1) w_0 (proof of the second inclusion)
        FracDeltaElem w = w_from_v(v, alpha);
        MPoly w0 = w.numerators().empty() ? MPoly(f.nvars()) : w.numerators()[0];
        if (p + 1 < w.fpow()) throw EngineBugError("theorem A: unexpected denominator depth");
        MPoly check = w0 * f.pow(p + 1 - w.fpow());
        if (!(check == out)) throw EngineBugError("theorem A combination mismatch with w_0");
    }
    return out;
}

}  // namespace vhodge
