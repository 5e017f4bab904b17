#ifndef SYZDIST_RING_HPP
#define SYZDIST_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "syzdist/rational.hpp"

namespace syzdist {

struct RingMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OrderKind { Grevlex, Lex, Elim };

// Polynomial ring Q[main_vars] with an optional affine parameter block.
// Elim orders put the first `elim_block` main variables in a dominating
// grevlex block; a Gröbner basis then eliminates them.
class RingSpec {
public:
    RingSpec(std::vector<std::string> main_vars,
             std::vector<std::string> param_vars = {},
             OrderKind order = OrderKind::Grevlex,
             int elim_block = 0);

    const std::vector<std::string>& main_vars() const { return main_vars_; }
    const std::vector<std::string>& param_vars() const { return param_vars_; }
    OrderKind order() const { return order_; }
    int elim_block() const { return elim_block_; }
    int nmain() const { return static_cast<int>(main_vars_.size()); }
    int nparam() const { return static_cast<int>(param_vars_.size()); }

    // -1 when absent
    int main_index(const std::string& name) const;
    int param_index(const std::string& name) const;

    bool operator==(const RingSpec& o) const;
    bool operator!=(const RingSpec& o) const { return !(*this == o); }

    std::string decl_string() const;

private:
    std::vector<std::string> main_vars_;
    std::vector<std::string> param_vars_;
    OrderKind order_;
    int elim_block_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> main_vars,
                  std::vector<std::string> param_vars = {},
                  OrderKind order = OrderKind::Grevlex,
                  int elim_block = 0);

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || *a != *b) throw RingMismatch("operands live in different rings");
}

struct Monomial {
    std::vector<int> e;
    int deg = 0;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(int nvars);
    static Monomial var(int i, int nvars, int power = 1);

    bool is_one() const { return deg == 0; }
    bool divides(const Monomial& m) const;
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b); // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// three-way compare under the ring order: <0, 0, >0 for a<b, a==b, a>b
int mono_cmp(const Monomial& a, const Monomial& b, const RingSpec& ring);
inline bool mono_less(const Monomial& a, const Monomial& b, const RingSpec& ring) {
    return mono_cmp(a, b, ring) < 0;
}

// all monomials of the given total degree, descending under the ring order
std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int degree);

// C(deg + nvars - 1, nvars - 1), the count of monomials of that degree
long monomial_count(int nvars, int degree);

} // namespace syzdist

#endif
