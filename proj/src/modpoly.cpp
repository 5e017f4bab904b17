#include "syzdist/modpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace syzdist {

ModPoly mod_normalize(std::vector<std::pair<ModTerm, Rat>> terms, const ModOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return ord.cmp(a.first, b.first) > 0; });
    ModPoly r;
    r.terms.reserve(terms.size());
    for (auto& t : terms) {
        if (!r.terms.empty() && r.terms.back().first == t.first) {
            r.terms.back().second += t.second;
            if (r.terms.back().second == 0) r.terms.pop_back();
        } else if (t.second != 0) {
            r.terms.push_back(std::move(t));
        }
    }
    return r;
}

ModPoly mod_scale(const ModPoly& a, const Rat& c) {
    ModPoly r;
    if (c == 0) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& [t, v] : a.terms) r.terms.emplace_back(t, c * v);
    return r;
}

ModPoly mod_axpy(const ModPoly& a, const Rat& c, const Monomial& m, const ModPoly& b,
                 const ModOrder& ord) {
    ModPoly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    while (ia != a.terms.end() || ib != b.terms.end()) {
        if (ib == b.terms.end()) {
            r.terms.push_back(*ia++);
            continue;
        }
        ModTerm tb{mono_mul(ib->first.m, m), ib->first.comp};
        int cmp = ia == a.terms.end() ? -1 : ord.cmp(ia->first, tb);
        if (cmp > 0) {
            r.terms.push_back(*ia++);
        } else if (cmp < 0) {
            Rat v = c * ib->second;
            if (v != 0) r.terms.emplace_back(std::move(tb), std::move(v));
            ++ib;
        } else {
            Rat v = ia->second + c * ib->second;
            if (v != 0) r.terms.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return r;
}

ModPoly mod_monic(ModPoly a) {
    if (a.is_zero() || a.lead_coeff() == 1) return a;
    Rat inv = 1 / a.lead_coeff();
    for (auto& [t, v] : a.terms) v *= inv;
    return a;
}

bool mod_equal(const ModPoly& a, const ModPoly& b) { return a.terms == b.terms; }

int mod_degree(const ModPoly& a, const std::vector<int>& twists) {
    if (a.is_zero()) throw std::logic_error("degree of zero module element");
    int d = a.terms.front().first.m.deg + twists.at(a.terms.front().first.comp);
    for (const auto& [t, v] : a.terms)
        if (t.m.deg + twists.at(t.comp) != d)
            throw std::logic_error("inhomogeneous module element");
    return d;
}

bool mod_is_homogeneous(const ModPoly& a, const std::vector<int>& twists) {
    if (a.is_zero()) return true;
    int d = a.terms.front().first.m.deg + twists.at(a.terms.front().first.comp);
    for (const auto& [t, v] : a.terms)
        if (t.m.deg + twists.at(t.comp) != d) return false;
    return true;
}

long effective_step_budget(long requested) {
    if (requested > 0) return requested;
    if (const char* e = std::getenv("SYZDIST_STEP_BUDGET")) {
        long v = std::atol(e);
        if (v > 0) return v;
    }
    return 5000000L;
}

ModPoly mod_normal_form(const ModPoly& f, const std::vector<ModPoly>& G, const ModOrder& ord,
                        std::vector<ModPoly>* quotients, long* steps, long budget) {
    if (quotients) quotients->assign(G.size(), ModPoly{});
    ModPoly p = f;
    ModPoly rem;
    long local_steps = 0;
    budget = effective_step_budget(budget);
    while (!p.is_zero()) {
        const ModTerm& lt = p.lead_term();
        int hit = -1;
        for (size_t i = 0; i < G.size(); ++i) {
            if (G[i].is_zero()) continue;
            const ModTerm& gt = G[i].lead_term();
            if (gt.comp == lt.comp && gt.m.divides(lt.m)) {
                hit = static_cast<int>(i);
                break;
            }
        }
        if (++local_steps > budget)
            throw BudgetExceeded("normal form exceeded the reduction step budget");
        if (hit < 0) {
            rem.terms.push_back(p.terms.front());
            p.terms.erase(p.terms.begin());
            continue;
        }
        const ModPoly& g = G[hit];
        Rat c = -p.lead_coeff() / g.lead_coeff();
        Monomial q = mono_div(lt.m, g.lead_term().m);
        if (quotients) {
            ModPoly t;
            t.terms.emplace_back(ModTerm{q, hit}, -c);
            // quotient bookkeeping only; final order is irrelevant
            (*quotients)[hit].terms.insert((*quotients)[hit].terms.end(), t.terms.begin(),
                                           t.terms.end());
        }
        p = mod_axpy(p, c, q, g, ord);
    }
    if (steps) *steps += local_steps;
    if (quotients)
        for (auto& q : *quotients) q = mod_normalize(std::move(q.terms), ord);
    return rem;
}

namespace {

struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
};

ModPoly s_poly(const ModPoly& f, const ModPoly& g, const Monomial& lcm, const ModOrder& ord) {
    Monomial mf = mono_div(lcm, f.lead_term().m);
    Monomial mg = mono_div(lcm, g.lead_term().m);
    ModPoly left;
    for (const auto& [t, v] : f.terms)
        left.terms.emplace_back(ModTerm{mono_mul(t.m, mf), t.comp}, v / f.lead_coeff());
    return mod_axpy(left, -1 / g.lead_coeff(), mg, g, ord);
}

std::vector<ModPoly> interreduce(std::vector<ModPoly> G, const ModOrder& ord, long budget) {
    // drop elements whose lead is divisible by another surviving lead
    std::vector<bool> removed(G.size(), false);
    for (size_t i = 0; i < G.size(); ++i) {
        if (removed[i] || G[i].is_zero()) {
            removed[i] = true;
            continue;
        }
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j || removed[j] || G[j].is_zero()) continue;
            const ModTerm& a = G[j].lead_term();
            const ModTerm& b = G[i].lead_term();
            if (a.comp == b.comp && a.m.divides(b.m) && !(j > i && a.m == b.m)) {
                removed[i] = true;
                break;
            }
        }
    }
    std::vector<ModPoly> kept;
    for (size_t i = 0; i < G.size(); ++i)
        if (!removed[i]) kept.push_back(mod_monic(std::move(G[i])));
    // tail reduction to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<ModPoly> others;
            others.reserve(kept.size() - 1);
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            ModPoly red = mod_monic(mod_normal_form(kept[i], others, ord, nullptr, nullptr, budget));
            if (!mod_equal(red, kept[i])) {
                kept[i] = std::move(red);
                changed = true;
            }
        }
    }
    std::sort(kept.begin(), kept.end(), [&](const ModPoly& a, const ModPoly& b) {
        return ord.cmp(a.lead_term(), b.lead_term()) > 0;
    });
    return kept;
}

} // namespace

std::vector<ModPoly> module_groebner(std::vector<ModPoly> gens, const ModOrder& ord,
                                     const GbOptions& opts) {
    long budget = effective_step_budget(opts.step_budget);
    long steps = 0;
    std::vector<ModPoly> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(mod_monic(std::move(g)));

    auto key = [](int i, int j) { return std::pair<int, int>(std::min(i, j), std::max(i, j)); };
    std::set<std::pair<int, int>> pending;
    std::vector<Pair> queue;
    auto push_pairs = [&](int n) {
        for (int i = 0; i < n; ++i) {
            if (G[i].lead_term().comp != G[n].lead_term().comp) continue;
            Monomial l = mono_lcm(G[i].lead_term().m, G[n].lead_term().m);
            int d = l.deg;
            queue.push_back(Pair{i, n, std::move(l), d});
            pending.insert(key(i, n));
        }
    };
    for (int n = 1; n < static_cast<int>(G.size()); ++n) push_pairs(n);

    while (!queue.empty()) {
        // normal strategy: minimal lcm degree, ties by index pair
        size_t best = 0;
        for (size_t k = 1; k < queue.size(); ++k) {
            const Pair& a = queue[k];
            const Pair& b = queue[best];
            if (a.deg < b.deg || (a.deg == b.deg && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                best = k;
        }
        Pair pr = std::move(queue[best]);
        queue.erase(queue.begin() + static_cast<long>(best));
        pending.erase(key(pr.i, pr.j));

        const ModPoly& f = G[pr.i];
        const ModPoly& g = G[pr.j];
        if (opts.product_criterion && mono_coprime(f.lead_term().m, g.lead_term().m)) continue;
        // chain criterion: some other lead divides the lcm and both side
        // pairs are no longer pending
        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()); ++k) {
            if (k == pr.i || k == pr.j) continue;
            const ModTerm& lk = G[k].lead_term();
            if (lk.comp != f.lead_term().comp || !lk.m.divides(pr.lcm)) continue;
            if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) {
                skip = true;
                break;
            }
        }
        if (skip) continue;

        ModPoly s = s_poly(f, g, pr.lcm, ord);
        ModPoly rem = mod_normal_form(s, G, ord, nullptr, &steps, budget);
        if (steps > budget) throw BudgetExceeded("Gröbner computation exceeded the step budget");
        if (!rem.is_zero()) {
            G.push_back(mod_monic(std::move(rem)));
            push_pairs(static_cast<int>(G.size()) - 1);
        }
    }
    return interreduce(std::move(G), ord, budget);
}

SyzygyComputation module_syzygies(const std::vector<ModPoly>& gens,
                                  std::shared_ptr<const ModOrder> f_order, int rank_f,
                                  const GbOptions& opts) {
    const int s = static_cast<int>(gens.size());
    std::vector<ModTerm> leads;
    leads.reserve(s);
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("module_syzygies: zero generator");
        leads.push_back(g.lead_term());
    }
    SyzygyOrder aug(f_order, rank_f, std::move(leads));

    std::vector<ModPoly> work;
    work.reserve(gens.size());
    int nv = 0;
    for (int j = 0; j < s; ++j) {
        ModPoly w = gens[j];
        nv = static_cast<int>(w.terms.front().first.m.e.size());
        w.terms.emplace_back(ModTerm{Monomial::one(nv), rank_f + j}, Rat(1));
        work.push_back(mod_normalize(std::move(w.terms), aug));
    }
    std::vector<ModPoly> gb = module_groebner(std::move(work), aug, opts);

    SyzygyComputation out;
    for (auto& h : gb) {
        if (h.lead_term().comp >= rank_f) {
            // no F-block terms at all: a syzygy
            ModPoly syz;
            for (auto& [t, v] : h.terms) syz.terms.emplace_back(ModTerm{t.m, t.comp - rank_f}, v);
            out.syzygies.push_back(std::move(syz));
        } else {
            ModPoly val, cert;
            for (auto& [t, v] : h.terms) {
                if (t.comp < rank_f) val.terms.emplace_back(t, v);
                else cert.terms.emplace_back(ModTerm{t.m, t.comp - rank_f}, v);
            }
            out.basis_with_certificates.emplace_back(std::move(val), std::move(cert));
        }
    }
    return out;
}

} // namespace syzdist
