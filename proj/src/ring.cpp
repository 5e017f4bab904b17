#include "syzdist/ring.hpp"

#include <algorithm>
#include <set>

namespace syzdist {

RingSpec::RingSpec(std::vector<std::string> main_vars,
                   std::vector<std::string> param_vars,
                   OrderKind order, int elim_block)
    : main_vars_(std::move(main_vars)),
      param_vars_(std::move(param_vars)),
      order_(order),
      elim_block_(elim_block) {
    if (main_vars_.empty()) throw std::invalid_argument("ring needs at least one main variable");
    std::set<std::string> seen;
    for (const auto& v : main_vars_)
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
    for (const auto& v : param_vars_)
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
    if (order_ == OrderKind::Elim && (elim_block_ <= 0 || elim_block_ >= nmain()))
        throw std::invalid_argument("elimination block must split the main variables");
    if (order_ != OrderKind::Elim) elim_block_ = 0;
}

int RingSpec::main_index(const std::string& name) const {
    auto it = std::find(main_vars_.begin(), main_vars_.end(), name);
    return it == main_vars_.end() ? -1 : static_cast<int>(it - main_vars_.begin());
}

int RingSpec::param_index(const std::string& name) const {
    auto it = std::find(param_vars_.begin(), param_vars_.end(), name);
    return it == param_vars_.end() ? -1 : static_cast<int>(it - param_vars_.begin());
}

bool RingSpec::operator==(const RingSpec& o) const {
    return main_vars_ == o.main_vars_ && param_vars_ == o.param_vars_ &&
           order_ == o.order_ && elim_block_ == o.elim_block_;
}

std::string RingSpec::decl_string() const {
    std::string s = "ring ";
    for (size_t i = 0; i < main_vars_.size(); ++i) {
        if (i) s += ",";
        s += main_vars_[i];
    }
    if (!param_vars_.empty()) {
        s += " params ";
        for (size_t i = 0; i < param_vars_.size(); ++i) {
            if (i) s += ",";
            s += param_vars_[i];
        }
    }
    switch (order_) {
        case OrderKind::Grevlex: s += " order grevlex"; break;
        case OrderKind::Lex: s += " order lex"; break;
        case OrderKind::Elim: s += " order elim" + std::to_string(elim_block_); break;
    }
    return s;
}

RingPtr make_ring(std::vector<std::string> main_vars, std::vector<std::string> param_vars,
                  OrderKind order, int elim_block) {
    return std::make_shared<const RingSpec>(std::move(main_vars), std::move(param_vars),
                                            order, elim_block);
}

Monomial::Monomial(std::vector<int> exps) : e(std::move(exps)) {
    deg = 0;
    for (int x : e) {
        if (x < 0) throw std::invalid_argument("negative exponent");
        deg += x;
    }
}

Monomial Monomial::one(int nvars) {
    Monomial m;
    m.e.assign(nvars, 0);
    m.deg = 0;
    return m;
}

Monomial Monomial::var(int i, int nvars, int power) {
    Monomial m = one(nvars);
    m.e[i] = power;
    m.deg = power;
    return m;
}

bool Monomial::divides(const Monomial& m) const {
    if (deg > m.deg) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    r.deg = a.deg + b.deg;
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] -= b.e[i];
        if (r.e[i] < 0) throw std::logic_error("mono_div: not divisible");
    }
    r.deg = a.deg - b.deg;
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg = 0;
    for (size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

namespace {

// grevlex on the index window [lo, hi): higher degree wins, ties broken by
// the smaller exponent on the last variable where they differ
int cmp_grevlex_window(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        int d = a.e[i] - b.e[i];
        if (d) return d > 0 ? -1 : 1;
    }
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i) {
        int d = a.e[i] - b.e[i];
        if (d) return d > 0 ? 1 : -1;
    }
    return 0;
}

} // namespace

int mono_cmp(const Monomial& a, const Monomial& b, const RingSpec& ring) {
    const int n = ring.nmain();
    switch (ring.order()) {
        case OrderKind::Grevlex:
            return cmp_grevlex_window(a, b, 0, n);
        case OrderKind::Lex:
            return cmp_lex(a, b);
        case OrderKind::Elim: {
            int c = cmp_grevlex_window(a, b, 0, ring.elim_block());
            if (c) return c;
            return cmp_grevlex_window(a, b, ring.elim_block(), n);
        }
    }
    return 0;
}

namespace {

void enumerate_rec(int nvars, int pos, int remaining, std::vector<int>& cur,
                   std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur[pos] = k;
        enumerate_rec(nvars, pos + 1, remaining - k, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> cur(ring.nmain(), 0);
    enumerate_rec(ring.nmain(), 0, degree, cur, out);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, ring) > 0;
    });
    return out;
}

long monomial_count(int nvars, int degree) {
    if (degree < 0) return 0;
    long num = 1, den = 1;
    for (int i = 1; i < nvars; ++i) {
        num *= degree + i;
        den *= i;
    }
    return num / den;
}

} // namespace syzdist
