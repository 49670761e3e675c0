// identities.cpp - the catalogue of convolution identities.
//
// Closed forms are written with plain Poly arithmetic on the prime-power
// values below, never through multfun, so a bug in a rule or in the
// convolution machinery cannot cancel itself out. Integer multipliers that
// show up when these identities are derived by hand, such as (m-1) P^m, are
// taken mod 2; that is where all the parity splits come from.

#include "f2x/identities.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "f2x/divisors.hpp"
#include "f2x/error.hpp"
#include "f2x/multfun.hpp"
#include "f2x/parallel.hpp"

namespace f2x {

namespace {

// Prime-power values of the builtins, straight from their definitions.
Poly p_pow(const Poly& p, unsigned r) { return pow(p, r); }

Poly sigma_pp(const Poly& p, unsigned r) {
    Poly acc;
    for (unsigned i = 0; i <= r; ++i) acc += pow(p, i);
    return acc;
}

Poly phi_pp(const Poly& p, unsigned r) { return r == 0 ? Poly::one() : pow(p, r) + pow(p, r - 1); }
Poly sigma_star_pp(const Poly& p, unsigned r) { return r == 0 ? Poly::one() : Poly::one() + pow(p, r); }
Poly mu_pp(unsigned r) { return r <= 1 ? Poly::one() : Poly{}; }
Poly delta_pp(unsigned r) { return r == 0 ? Poly::one() : Poly{}; }
Poly one_plus(const Poly& p) { return Poly::one() + p; }
Poly unit_or(unsigned r, Poly other) { return r == 0 ? Poly::one() : std::move(other); }
bool even(unsigned m) { return m % 2 == 0; }

Poly reference_value(std::string_view name, const Poly& p, unsigned r) {
    if (name == "delta") return delta_pp(r);
    if (name == "z") return Poly::one();
    if (name == "id") return p_pow(p, r);
    if (name == "mu") return mu_pp(r);
    if (name == "phi") return phi_pp(p, r);
    if (name == "sigma") return sigma_pp(p, r);
    if (name == "sigma_star") return sigma_star_pp(p, r);
    throw DomainError("no reference values for '" + std::string(name) + "'");
}

using Closed = std::function<Poly(const Poly&, unsigned)>;

// Id^inv
Poly id_inv_cf(const Poly& p, unsigned m) {
    if (m == 0) return Poly::one();
    return m == 1 ? p : Poly{};
}

Poly sigma_inv_cf(const Poly& p, unsigned m) {
    switch (m) {
        case 0: return Poly::one();
        case 1: return one_plus(p);
        case 2: return p;
        default: return {};
    }
}

Poly sigmainv_mu_cf(const Poly& p, unsigned m) {
    switch (m) {
        case 0: return Poly::one();
        case 1: return p;
        case 2: return Poly::one();
        case 3: return p;
        default: return {};
    }
}

Poly sigmastarinv_z_cf(const Poly& p, unsigned m) { return even(m) ? pow(p, m / 2) : pow(p, m / 2 + 1); }

Poly sigmastarinv_mu_cf(const Poly& p, unsigned m) {
    if (m == 0) return Poly::one();
    if (m == 1) return p;
    const unsigned r = m / 2;
    return even(m) ? pow(p, r - 1) * one_plus(p) : pow(p, r) * one_plus(p);
}

Poly sigma_sigmastarinv_cf(const Poly& p, unsigned m) { return even(m) ? pow(p, m / 2) : Poly{}; }

std::vector<LemmaSpec> build_registry() {
    std::vector<LemmaSpec> r;
    auto add = [&](std::string id, std::string lhs, Closed cf, std::function<bool(unsigned)> applies = {}) {
        r.push_back(LemmaSpec{std::move(id), std::move(lhs), std::move(cf), std::move(applies)});
    };

    // Square convolution: f*f vanishes on odd prime powers and squares f(P^r)
    // on even ones, for every f.
    for (std::string_view name : builtin_names()) {
        const std::string n(name);
        add("squareconv_" + n, "sq(" + n + ")", [n](const Poly& p, unsigned m) {
            if (!even(m)) return Poly{};
            return square(reference_value(n, p, m / 2));
        });
    }

    add("z_mu", "z*mu", [](const Poly&, unsigned m) { return delta_pp(m); });
    add("phi_z", "phi*z", p_pow);
    add("id_z", "id*z", sigma_pp);

    add("sigma_mu", "sigma*mu", p_pow);
    add("sigma_z", "sigma*z", [](const Poly& p, unsigned m) {
        const Poly s = square(sigma_pp(p, m / 2));
        return even(m) ? s : p * s;
    });
    add("sigma_id", "sigma*id", [](const Poly& p, unsigned m) { return square(sigma_pp(p, m / 2)); });
    add("sigma_phi", "sigma*phi", [](const Poly& p, unsigned m) { return even(m) ? pow(p, m) : Poly{}; });

    add("sigmastar_mu", "sigma_star*mu", [](const Poly& p, unsigned m) {
        if (m == 0) return Poly::one();
        if (m == 1) return p;
        return pow(p, m) + pow(p, m - 1);
    });
    add("sigmastar_z", "sigma_star*z", [](const Poly& p, unsigned m) {
        return even(m) ? sigma_pp(p, m) : p * sigma_pp(p, m - 1);
    });
    add("sigmastar_id", "sigma_star*id", [](const Poly& p, unsigned m) { return sigma_pp(p, even(m) ? m : m - 1); });
    add("sigmastar_phi", "sigma_star*phi", [](const Poly& p, unsigned m) { return even(m) ? phi_pp(p, m) : Poly{}; });
    add("sigmastar_sigma", "sigma_star*sigma",
        [](const Poly& p, unsigned m) { return even(m) ? sigma_pp(p, m) : Poly{}; });

    add("mu_inv", "inv(mu)", [](const Poly&, unsigned) { return Poly::one(); });
    add("z_inv", "inv(z)", [](const Poly&, unsigned m) { return mu_pp(m); });
    add("phiinv_id", "inv(phi)*id", [](const Poly&, unsigned) { return Poly::one(); });
    add("phiinv_mu", "inv(phi)*mu", id_inv_cf);
    add("id_mu", "id*mu", phi_pp);

    add("id_inv", "inv(id)", id_inv_cf);
    add("idinv_z", "inv(id)*z", [](const Poly& p, unsigned m) { return unit_or(m, one_plus(p)); });
    add("sigma_idinv", "sigma*inv(id)", [](const Poly&, unsigned) { return Poly::one(); });

    add("phi_inv", "inv(phi)", [](const Poly& p, unsigned m) { return unit_or(m, one_plus(p)); });
    add("sigma_phiinv", "sigma*inv(phi)", [](const Poly&, unsigned m) { return even(m) ? Poly::one() : Poly{}; });

    add("sigma_inv", "inv(sigma)", sigma_inv_cf);
    add("sigmainv_sigma", "inv(sigma)*sigma", [](const Poly&, unsigned m) { return delta_pp(m); });
    add("sigmainv_z", "inv(sigma)*z", id_inv_cf);
    add("sigmainv_z_as_inverse", "inv(sigma*mu)", id_inv_cf);
    add("sigmainv_id", "inv(sigma)*id", [](const Poly&, unsigned m) { return mu_pp(m); });
    add("sigmainv_mu", "inv(sigma)*mu", sigmainv_mu_cf);
    add("sigmainv_mu_as_inverse", "inv(sigma*z)", sigmainv_mu_cf);
    add("sigmastar_sigmainv", "sigma_star*inv(sigma)",
        [](const Poly& p, unsigned m) { return m == 2 ? p : delta_pp(m); });

    add("sigmastar_inv", "inv(sigma_star)", [](const Poly& p, unsigned m) {
        if (m == 0) return Poly::one();
        return even(m) ? Poly{} : pow(p, m / 2) * one_plus(p);
    });
    add("sigmastarinv_z", "inv(sigma_star)*z", sigmastarinv_z_cf);
    add("sigmastarinv_z_as_inverse", "inv(sigma_star*mu)", sigmastarinv_z_cf);
    add("sigmastarinv_id", "inv(sigma_star)*id", [](const Poly& p, unsigned m) { return pow(p, m / 2); });
    add("sigmastarinv_mu", "inv(sigma_star)*mu", sigmastarinv_mu_cf);
    add("sigmastarinv_mu_as_inverse", "inv(sigma_star*z)", sigmastarinv_mu_cf);
    add("sigma_sigmastarinv", "sigma*inv(sigma_star)", sigma_sigmastarinv_cf);
    add("sigma_sigmastarinv_as_inverse", "inv(sigma_star*inv(sigma))", sigma_sigmastarinv_cf);

    add("sigmainv_phi", "inv(sigma)*phi", [](const Poly&, unsigned m) { return m == 2 ? Poly::one() : delta_pp(m); });
    add("sigmastarinv_phi", "inv(sigma_star)*phi", [](const Poly& p, unsigned m) { return even(m) ? phi_pp(p, m / 2) : Poly{}; });
    // The odd-exponent half of the same statement read with sigma^inv.
    add("sigmainv_phi_odd", "inv(sigma)*phi", [](const Poly&, unsigned) { return Poly{}; },
        [](unsigned m) { return !even(m); });
    add("phi_id", "phi*id", [](const Poly& p, unsigned m) {
        if (m <= 1) return Poly::one();
        return pow(p, even(m) ? m : m - 1);
    });
    return r;
}

Factorization prime_power(const Poly& p, unsigned m) {
    if (m == 0) return {};
    return Factorization({PrimePower{p, m}});
}

IdentityReport check_point(const LemmaSpec& spec, const FunctionExpr& lhs, const Poly& p, unsigned m,
                           const FunctionTable& table) {
    IdentityReport rep;
    rep.spec_id = spec.id;
    rep.point = PrimePowerPoint{p, m};
    rep.expected = spec.closed_form(p, m);
    rep.got = oracle_evaluate(lhs, prime_power(p, m), table);
    rep.pass = rep.expected == rep.got;
    return rep;
}

}  // namespace

const std::vector<LemmaSpec>& registry() {
    static const std::vector<LemmaSpec> specs = build_registry();
    return specs;
}

const LemmaSpec& find_lemma(std::string_view id) {
    for (const auto& s : registry()) {
        if (s.id == id) return s;
    }
    throw DomainError("unknown lemma '" + std::string(id) + "'");
}

IdentityReport check_lemma(const LemmaSpec& spec, const Poly& prime, unsigned exponent, const FunctionTable& table) {
    if (prime.is_zero() || prime.degree() == 0 || !is_irreducible(prime)) {
        throw DomainError("check_lemma needs an irreducible prime, got " + to_string(prime));
    }
    return check_point(spec, parse_function_expr(spec.lhs), prime, exponent, table);
}

std::vector<IdentityReport> CheckSummary::failures() const {
    std::vector<IdentityReport> out;
    std::copy_if(reports.begin(), reports.end(), std::back_inserter(out),
                 [](const IdentityReport& r) { return r.applicable && !r.pass; });
    return out;
}

CheckSummary check_all(unsigned max_prime_deg, unsigned max_exp, const CheckOptions& options) {
    struct Task {
        const LemmaSpec* spec;
        std::size_t expr_index;
        const Poly* prime;
        unsigned exponent;
    };
    std::vector<const LemmaSpec*> specs;
    if (options.lemma) {
        specs.push_back(&find_lemma(*options.lemma));
    } else {
        for (const auto& s : registry()) specs.push_back(&s);
    }
    std::vector<FunctionExpr> exprs;
    for (const auto* s : specs) exprs.push_back(parse_function_expr(s->lhs));

    const auto primes = irreducibles_up_to(max_prime_deg);
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        for (const Poly& p : primes) {
            for (unsigned m = 0; m <= max_exp; ++m) {
                if (specs[i]->applies && !specs[i]->applies(m)) continue;
                tasks.push_back({specs[i], i, &p, m});
            }
        }
    }

    CheckSummary summary;
    summary.reports.resize(tasks.size());
    parallel_chunks(tasks.size(), options.jobs, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const Task& t = tasks[k];
            summary.reports[k] = check_point(*t.spec, exprs[t.expr_index], *t.prime, t.exponent, options.table);
        }
    });
    summary.total = summary.reports.size();
    summary.passed = static_cast<std::size_t>(
        std::count_if(summary.reports.begin(), summary.reports.end(), [](const IdentityReport& r) { return r.pass; }));
    return summary;
}

// ---------------------------------------------------------------------------
// Corollaries
// ---------------------------------------------------------------------------

struct CorollaryContext {
    struct Term {
        Poly divisor;
        Factorization divisor_factors;
        Poly cofactor;
        Factorization cofactor_factors;
        bool is_one = false;
        bool is_all = false;
    };

    Poly a;
    Factorization factors;
    std::vector<Term> terms;
};

namespace {

struct Functions {
    MultiplicativeFunction sigma = builtin("sigma");
    MultiplicativeFunction sigma_star = builtin("sigma_star");
    MultiplicativeFunction phi = builtin("phi");
    MultiplicativeFunction mu = builtin("mu");
    MultiplicativeFunction id = builtin("id");
    MultiplicativeFunction sigma_inv = inverse(builtin("sigma"));
    MultiplicativeFunction sigma_star_inv = inverse(builtin("sigma_star"));
    MultiplicativeFunction phi_inv = inverse(builtin("phi"));
};

const Functions& fns() {
    static const Functions f;
    return f;
}

enum class Range { all, proper, interior, below_top };

// sum over divisor terms of value(term), restricted to a range and filter.
template <class Filter, class Value>
Poly divisor_sum_where(const CorollaryContext& c, Range range, Filter keep, Value value) {
    Poly acc;
    for (const auto& t : c.terms) {
        if (range == Range::interior && (t.is_one || t.is_all)) continue;
        if (range == Range::below_top && t.is_all) continue;
        if (!keep(t)) continue;
        acc += value(t);
    }
    return acc;
}

using Term = CorollaryContext::Term;
bool any_term(const Term&) { return true; }
bool cofactor_squarefree(const Term& t) { return is_squarefree(t.cofactor_factors); }
bool divisor_squarefree(const Term& t) { return is_squarefree(t.divisor_factors); }

Poly sigma_of(const CorollaryContext& c) { return fns().sigma(c.factors); }
Poly sigma_star_of(const CorollaryContext& c) { return fns().sigma_star(c.factors); }

Poly bool_poly(bool b) { return b ? Poly::one() : Poly{}; }

std::vector<CorollarySpec> build_corollaries() {
    const auto& F = fns();
    std::vector<CorollarySpec> v;
    auto add = [&](std::string id, InputClass cls, std::function<Poly(const CorollaryContext&)> lhs,
                   std::function<Poly(const CorollaryContext&)> rhs) {
        v.push_back(CorollarySpec{std::move(id), cls, std::move(lhs), std::move(rhs)});
    };

    add("corol_sigma_mu", InputClass::square,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, cofactor_squarefree,
                                     [&](const Term& t) { return F.sigma(t.divisor_factors); });
        },
        [](const CorollaryContext& c) { return c.a + sigma_of(c); });

    add("corol_sigma_z", InputClass::special,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, any_term,
                                     [&](const Term& t) { return F.sigma(t.divisor_factors); });
        },
        [](const CorollaryContext& c) { return sigma_of(c) + Poly::one() + sigma_star_of(c); });

    add("corol_sigma_id", InputClass::square,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, any_term,
                                     [&](const Term& t) { return F.sigma(t.divisor_factors) * t.cofactor; });
        },
        [](const CorollaryContext& c) {
            const Poly s = *sqrt_if_square(c.a);
            return square(fns().sigma(s)) + sigma_of(c) + c.a;
        });

    add("corol_sigma_phi", InputClass::square,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::below_top, any_term, [&](const Term& t) {
                return F.sigma(t.divisor_factors) * F.phi(t.cofactor_factors);
            });
        },
        [](const CorollaryContext& c) { return c.a + sigma_of(c); });

    add("corol_sigmastar_mu", InputClass::square,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::all, cofactor_squarefree,
                                     [&](const Term& t) { return F.sigma_star(t.divisor_factors); });
        },
        [&F](const CorollaryContext& c) { return F.phi(c.factors); });

    add("corol_sigmastar_z", InputClass::special,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::all, any_term,
                                     [&](const Term& t) { return F.sigma_star(t.divisor_factors); });
        },
        sigma_of);

    add("corol_sigmastar_id", InputClass::square,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, any_term,
                                     [&](const Term& t) { return F.sigma_star(t.divisor_factors) * t.cofactor; });
        },
        [](const CorollaryContext& c) { return sigma_of(c) + sigma_star_of(c) + c.a; });

    add("corol_sigmastar_phi", InputClass::square,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, any_term, [&](const Term& t) {
                return F.sigma_star(t.divisor_factors) * F.phi(t.cofactor_factors);
            });
        },
        sigma_star_of);

    add("corol_sigmastar_sigma", InputClass::square,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, any_term, [&](const Term& t) {
                return F.sigma_star(t.divisor_factors) * F.sigma(t.cofactor_factors);
            });
        },
        sigma_star_of);

    // f*f fixes A exactly when A = S^2 with f(S) = S. Both sides are truth
    // values encoded as 1 / 0.
    for (const char* name : {"sigma", "sigma_star", "id"}) {
        const MultiplicativeFunction f = builtin(name);
        add(std::string("corol_squareconv_") + name, InputClass::any,
            [f](const CorollaryContext& c) {
                const Poly sq = divisor_sum_where(c, Range::all, any_term, [&](const Term& t) {
                    return f(t.divisor_factors) * f(t.cofactor_factors);
                });
                return bool_poly(sq == c.a);
            },
            [f](const CorollaryContext& c) {
                if (!is_square(c.factors)) return bool_poly(false);
                const Poly s = *sqrt_if_square(c.a);
                return bool_poly(f(s) == s);
            });
    }

    add("corol_sigma_idinv", InputClass::any,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::below_top, cofactor_squarefree,
                                     [&](const Term& t) { return F.sigma(t.divisor_factors) * t.cofactor; });
        },
        [](const CorollaryContext& c) { return Poly::one() + sigma_of(c); });

    add("corol_sigma_phiinv", InputClass::square,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, any_term, [&](const Term& t) {
                return F.sigma(t.divisor_factors) * F.phi_inv(t.cofactor_factors);
            });
        },
        [&F](const CorollaryContext& c) { return Poly::one() + F.sigma(radical(c.factors)) + sigma_of(c); });

    add("corol_sigmainv_sigma", InputClass::any,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, any_term, [&](const Term& t) {
                return F.sigma_inv(t.divisor_factors) * F.sigma(t.cofactor_factors);
            });
        },
        [&F](const CorollaryContext& c) { return F.sigma_inv(c.factors) + sigma_of(c); });

    add("corol_sigmainv_id", InputClass::special,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, any_term,
                                     [&](const Term& t) { return F.sigma_inv(t.divisor_factors) * t.cofactor; });
        },
        [](const CorollaryContext& c) { return c.a + radical(c.factors); });

    add("corol_sigmainv_mu", InputClass::special,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, cofactor_squarefree,
                                     [&](const Term& t) { return F.sigma_inv(t.divisor_factors); });
        },
        [](const CorollaryContext& c) { return Poly::one() + radical(c.factors); });

    add("corol_sigmastarinv_id", InputClass::special,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, divisor_squarefree,
                                     [&](const Term& t) { return F.sigma_star_inv(t.divisor_factors) * t.cofactor; });
        },
        [](const CorollaryContext& c) { return c.a + radical(c.factors); });

    add("corol_sigmastarinv_mu", InputClass::special,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, cofactor_squarefree,
                                     [&](const Term& t) { return F.sigma_star_inv(t.divisor_factors); });
        },
        [&F](const CorollaryContext& c) { return F.sigma(radical(c.factors)); });

    add("corol_sigma_sigmastarinv", InputClass::special,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::interior, divisor_squarefree, [&](const Term& t) {
                return F.sigma_star_inv(t.divisor_factors) * F.sigma(t.cofactor_factors);
            });
        },
        [](const CorollaryContext& c) { return radical(c.factors) + sigma_of(c); });

    // Prime-power identities lifted to arbitrary A.
    add("lift_sigmainv_id", InputClass::any,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::all, any_term,
                                     [&](const Term& t) { return F.sigma_inv(t.divisor_factors) * t.cofactor; });
        },
        [&F](const CorollaryContext& c) { return F.mu(c.factors); });

    add("lift_sigmastarinv_id", InputClass::any,
        [&F](const CorollaryContext& c) {
            return divisor_sum_where(c, Range::all, any_term,
                                     [&](const Term& t) { return F.sigma_star_inv(t.divisor_factors) * t.cofactor; });
        },
        [](const CorollaryContext& c) {
            Poly acc = Poly::one();
            for (const auto& [p, e] : c.factors.factors()) acc = acc * pow(p, e / 2);
            return acc;
        });

    return v;
}

bool input_holds(InputClass cls, const Factorization& f) {
    switch (cls) {
        case InputClass::any: return true;
        case InputClass::square: return is_square(f);
        case InputClass::special: return is_special(f);
    }
    return false;
}

}  // namespace

const std::vector<CorollarySpec>& corollaries() {
    static const std::vector<CorollarySpec> specs = build_corollaries();
    return specs;
}

std::vector<IdentityReport> check_corollaries(const Poly& a) {
    if (a.is_zero()) throw DomainError("corollaries are stated for nonzero polynomials");
    CorollaryContext ctx;
    ctx.a = a;
    ctx.factors = factor(a);
    const bool trivial = a.is_one();
    if (!trivial) {
        const std::size_t n = divisor_count(ctx.factors);
        std::size_t k = 0;
        for_each_divisor_exponents(ctx.factors, [&](const ExponentVector& t) {
            CorollaryContext::Term term;
            term.divisor_factors = sub_factorization(ctx.factors, t);
            term.cofactor_factors = sub_factorization(ctx.factors, complement(ctx.factors, t));
            term.divisor = term.divisor_factors.product();
            term.cofactor = term.cofactor_factors.product();
            term.is_one = k == 0;
            term.is_all = k == n - 1;
            ctx.terms.push_back(std::move(term));
            ++k;
        });
    }

    std::vector<IdentityReport> out;
    for (const auto& spec : corollaries()) {
        IdentityReport rep;
        rep.spec_id = spec.id;
        rep.point = a;
        rep.applicable = !trivial && input_holds(spec.input, ctx.factors);
        if (rep.applicable) {
            rep.got = spec.lhs(ctx);
            rep.expected = spec.rhs(ctx);
            rep.pass = rep.got == rep.expected;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::string format_report(const IdentityReport& r) {
    std::ostringstream os;
    if (const auto* pp = std::get_if<PrimePowerPoint>(&r.point)) {
        os << "LEMMA " << r.spec_id << " P=" << to_string(pp->prime) << " m=" << pp->exponent;
    } else {
        os << "COROLLARY " << r.spec_id << " A=" << to_string(std::get<Poly>(r.point));
    }
    if (!r.applicable) {
        os << " N/A";
    } else if (r.pass) {
        os << " OK";
    } else {
        os << " FAIL expected=" << to_string(r.expected) << " got=" << to_string(r.got);
    }
    return os.str();
}

std::string format_summary(std::size_t passed, std::size_t total) {
    return "PASS " + std::to_string(passed) + "/" + std::to_string(total);
}

std::vector<MutationOutcome> mutation_test(unsigned max_prime_deg, unsigned max_exp, unsigned jobs) {
    std::vector<MutationOutcome> out;
    const auto primes = irreducibles_up_to(max_prime_deg);
    for (const char* name : {"z", "id", "mu", "phi", "sigma", "sigma_star"}) {
        for (const Poly& p : {primes.front(), primes.back()}) {
            for (unsigned m = 1; m <= std::min(max_exp, 3u); ++m) {
                CheckOptions opts;
                opts.jobs = jobs;
                opts.table.set(name, with_perturbed_value(builtin(name), p, m, Poly::one()));
                const CheckSummary s = check_all(max_prime_deg, max_exp, opts);
                out.push_back({name, p, m, s.total - s.passed});
            }
        }
    }
    return out;
}

}  // namespace f2x
