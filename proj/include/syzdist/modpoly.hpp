#ifndef SYZDIST_MODPOLY_HPP
#define SYZDIST_MODPOLY_HPP

#include <memory>
#include <vector>

#include "syzdist/polynomial.hpp"
#include "syzdist/ring.hpp"

namespace syzdist {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// term of a free module S^r: monomial times basis element e_comp
struct ModTerm {
    Monomial m;
    int comp = 0;
    bool operator==(const ModTerm& o) const { return comp == o.comp && m == o.m; }
};

// element of S^r, terms sorted descending under a module order, exact
// rational coefficients (the module layer is always parameter-free)
struct ModPoly {
    std::vector<std::pair<ModTerm, Rat>> terms;

    bool is_zero() const { return terms.empty(); }
    const ModTerm& lead_term() const { return terms.front().first; }
    const Rat& lead_coeff() const { return terms.front().second; }
};

class ModOrder {
public:
    virtual ~ModOrder() = default;
    // <0, 0, >0; zero only for identical terms
    virtual int cmp(const ModTerm& a, const ModTerm& b) const = 0;
    bool less(const ModTerm& a, const ModTerm& b) const { return cmp(a, b) < 0; }
};

// position-over-term: lower component dominates, ring order inside
class PotOrder : public ModOrder {
public:
    explicit PotOrder(RingPtr ring) : ring_(std::move(ring)) {}
    int cmp(const ModTerm& a, const ModTerm& b) const override {
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return mono_cmp(a.m, b.m, *ring_);
    }

private:
    RingPtr ring_;
};

// Order on F + S^s used for syzygy computation: every term in the F block
// (components < split) beats every term in the new block; the F block keeps
// its own order; the new block carries the Schreyer order induced by the
// presented generators (compare m*lead(gen_j), ties by generator position).
class SyzygyOrder : public ModOrder {
public:
    SyzygyOrder(std::shared_ptr<const ModOrder> f_order, int split,
                std::vector<ModTerm> gen_leads)
        : f_order_(std::move(f_order)), split_(split), gen_leads_(std::move(gen_leads)) {}

    int cmp(const ModTerm& a, const ModTerm& b) const override {
        bool fa = a.comp < split_, fb = b.comp < split_;
        if (fa != fb) return fa ? 1 : -1;
        if (fa) return f_order_->cmp(a, b);
        const ModTerm& la = gen_leads_[a.comp - split_];
        const ModTerm& lb = gen_leads_[b.comp - split_];
        ModTerm ia{mono_mul(a.m, la.m), la.comp};
        ModTerm ib{mono_mul(b.m, lb.m), lb.comp};
        int c = f_order_->cmp(ia, ib);
        if (c) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }

private:
    std::shared_ptr<const ModOrder> f_order_;
    int split_;
    std::vector<ModTerm> gen_leads_;
};

ModPoly mod_normalize(std::vector<std::pair<ModTerm, Rat>> terms, const ModOrder& ord);
ModPoly mod_scale(const ModPoly& a, const Rat& c);
// a + c * x^m * b
ModPoly mod_axpy(const ModPoly& a, const Rat& c, const Monomial& m, const ModPoly& b,
                 const ModOrder& ord);
ModPoly mod_monic(ModPoly a);
bool mod_equal(const ModPoly& a, const ModPoly& b);

// graded degree of a homogeneous element; throws on inhomogeneous input
int mod_degree(const ModPoly& a, const std::vector<int>& twists);
bool mod_is_homogeneous(const ModPoly& a, const std::vector<int>& twists);

struct GbOptions {
    long step_budget = 0; // 0: use env SYZDIST_STEP_BUDGET or the default
    bool product_criterion = false; // valid for ideals (rank 1) only
};

long effective_step_budget(long requested);

// full remainder: no term divisible by any lead of G; optionally records
// quotients so that f = sum q_i G_i + remainder
ModPoly mod_normal_form(const ModPoly& f, const std::vector<ModPoly>& G, const ModOrder& ord,
                        std::vector<ModPoly>* quotients = nullptr, long* steps = nullptr,
                        long budget = 0);

// reduced Gröbner basis: monic, interreduced, sorted by descending lead
std::vector<ModPoly> module_groebner(std::vector<ModPoly> gens, const ModOrder& ord,
                                     const GbOptions& opts = {});

// Generators of the first syzygy module of `gens` (elements of F with order
// f_order, components < rank_f). Also returns, via the augmented module, a
// Gröbner basis of the submodule generated by `gens` together with
// certificates: basis[i].first is the basis element, basis[i].second its
// expression in the input generators.
struct SyzygyComputation {
    std::vector<ModPoly> syzygies;                          // in S^{gens.size()}
    std::vector<std::pair<ModPoly, ModPoly>> basis_with_certificates; // in F x S^{gens.size()}
};
SyzygyComputation module_syzygies(const std::vector<ModPoly>& gens,
                                  std::shared_ptr<const ModOrder> f_order, int rank_f,
                                  const GbOptions& opts = {});

} // namespace syzdist

#endif
