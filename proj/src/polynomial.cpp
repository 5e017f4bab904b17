#include "syzdist/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace syzdist {

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, const Rat& constant) : Polynomial(std::move(ring)) {
    if (constant != 0) terms_.push_back({Monomial::one(ring_->nmain()), Coeff(constant)});
}

Polynomial Polynomial::variable(RingPtr ring, int main_index, int power) {
    if (main_index < 0 || main_index >= ring->nmain())
        throw std::out_of_range("variable index out of range");
    Polynomial p(ring);
    if (power == 0) return constant(std::move(ring), Rat(1));
    p.terms_.push_back({Monomial::var(main_index, ring->nmain(), power), Coeff(Rat(1))});
    return p;
}

Polynomial Polynomial::parameter(RingPtr ring, int param_index) {
    if (param_index < 0 || param_index >= ring->nparam())
        throw std::out_of_range("parameter index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::one(ring->nmain()), Coeff::param(param_index)});
    return p;
}

Polynomial Polynomial::monomial_term(RingPtr ring, Monomial m, Coeff c) {
    Polynomial p(std::move(ring));
    if (static_cast<int>(m.e.size()) != p.ring_->nmain())
        throw std::invalid_argument("monomial has wrong arity");
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    auto cmp = [&](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, *p.ring_) > 0;
    };
    std::map<Monomial, Coeff, decltype(cmp)> acc(cmp);
    for (auto& t : terms) {
        auto [it, inserted] = acc.try_emplace(std::move(t.m), t.c);
        if (!inserted) it->second += t.c;
    }
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.deg);
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().m.deg;
    for (const auto& t : terms_)
        if (t.m.deg != d) return false;
    return true;
}

bool Polynomial::is_parameter_free() const {
    for (const auto& t : terms_)
        if (!t.c.is_constant()) return false;
    return true;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().m.is_one());
}

Coeff Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.m == m) return t.c;
    return Coeff(Rat(0));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        int c;
        if (ia == a.terms_.end()) c = -1;
        else if (ib == b.terms_.end()) c = 1;
        else c = mono_cmp(ia->m, ib->m, *a.ring_);
        if (c > 0) {
            r.terms_.push_back(*ia++);
        } else if (c < 0) {
            r.terms_.push_back(*ib++);
        } else {
            Coeff s = ia->c + ib->c;
            if (!s.is_zero()) r.terms_.push_back({ia->m, std::move(s)});
            ++ia;
            ++ib;
        }
    }
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::times_term(const Monomial& m, const Coeff& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Coeff p = t.c * c;
        if (!p.is_zero()) r.terms_.push_back({mono_mul(t.m, m), std::move(p)});
    }
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (!a.is_parameter_free() && !b.is_parameter_free())
        throw std::domain_error("product of two parameter-dependent polynomials");
    Polynomial r(a.ring_);
    for (const auto& t : b.terms_) r += a.times_term(t.m, t.c);
    return r;
}

Polynomial operator*(const Rat& s, const Polynomial& p) {
    return p.times_term(Monomial::one(p.ring_->nmain()), Coeff(s));
}

Polynomial operator*(const Coeff& s, const Polynomial& p) {
    if (!s.is_constant() && !p.is_parameter_free())
        throw std::domain_error("product of two parameter-dependent factors");
    return p.times_term(Monomial::one(p.ring_->nmain()), s);
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_ring(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::domain_error("negative power");
    Polynomial r = constant(ring_, Rat(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

Polynomial Polynomial::derivative(int main_index) const {
    if (main_index < 0 || main_index >= ring_->nmain())
        throw std::out_of_range("derivative: bad variable index");
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        int e = t.m.e[main_index];
        if (e == 0) continue;
        Monomial m = t.m;
        m.e[main_index] -= 1;
        m.deg -= 1;
        r.terms_.push_back({std::move(m), Coeff(Rat(e)) * t.c});
    }
    // one variable's exponent drops uniformly, so descending order survives;
    // zero coefficients cannot appear (e != 0, exact arithmetic)
    return r;
}

Polynomial Polynomial::specialize(const std::vector<Rat>& values) const {
    if (static_cast<int>(values.size()) != ring_->nparam())
        throw std::invalid_argument("specialize: expected " + std::to_string(ring_->nparam()) +
                                    " parameter values");
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        Rat v = t.c.specialize(values);
        if (v != 0) r.terms_.push_back({t.m, Coeff(std::move(v))});
    }
    return r;
}

Polynomial Polynomial::param_component(int index) const {
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        Rat v = index < 0 ? t.c.constant_part() : t.c.param_coeff(index);
        if (v != 0) r.terms_.push_back({t.m, Coeff(std::move(v))});
    }
    return r;
}

Polynomial Polynomial::substitute_main(int main_index, const Polynomial& value) const {
    std::vector<Polynomial> images;
    images.reserve(ring_->nmain());
    for (int i = 0; i < ring_->nmain(); ++i)
        images.push_back(i == main_index ? value : variable(ring_, i));
    return substitute_all(images);
}

Polynomial Polynomial::substitute_all(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nmain())
        throw std::invalid_argument("substitute_all: one image per main variable required");
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        Polynomial term = constant(ring_, Rat(1));
        for (int i = 0; i < ring_->nmain(); ++i)
            if (t.m.e[i] > 0) term *= images[i].pow(t.m.e[i]);
        r += t.c * term;
    }
    return r;
}

Polynomial Polynomial::map_to_ring(const RingPtr& target) const {
    Polynomial r(target);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        // main-variable part
        Monomial m = Monomial::one(target->nmain());
        for (int i = 0; i < ring_->nmain(); ++i) {
            if (t.m.e[i] == 0) continue;
            int j = target->main_index(ring_->main_vars()[i]);
            if (j < 0) throw std::invalid_argument("map_to_ring: variable '" +
                                                   ring_->main_vars()[i] + "' missing in target");
            m.e[j] += t.m.e[i];
            m.deg += t.m.e[i];
        }
        // constant slot of the coefficient
        if (t.c.constant_part() != 0) out.push_back({m, Coeff(t.c.constant_part())});
        // parameter slots: remap by name, possibly onto target main variables
        for (const auto& [pi, v] : t.c.linear_part()) {
            const std::string& name = ring_->param_vars()[pi];
            int tp = target->param_index(name);
            if (tp >= 0) {
                out.push_back({m, Coeff::param(tp, v)});
                continue;
            }
            int tm = target->main_index(name);
            if (tm < 0) throw std::invalid_argument("map_to_ring: parameter '" + name +
                                                    "' missing in target");
            Monomial m2 = m;
            m2.e[tm] += 1;
            m2.deg += 1;
            out.push_back({std::move(m2), Coeff(v)});
        }
    }
    return from_terms(target, std::move(out));
}

Polynomial euler_contraction(const Polynomial& f) {
    Polynomial r(f.ring());
    for (int i = 0; i < f.ring()->nmain(); ++i)
        r += Polynomial::variable(f.ring(), i) * f.derivative(i);
    return r;
}

} // namespace syzdist
