#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mrb/hopf.hpp"
#include "mrb/operators.hpp"
#include "mrb/random_gen.hpp"
#include "mrb/stuffle.hpp"

namespace mrb {

// Sampling report for the bialgebra obligations: the coproduct and counit
// are algebra maps, the coproduct is coassociative, the counit property
// holds. Stops detail collection at the first counterexample but keeps
// counting.
struct BialgebraReport {
    int samples = 0;
    int failures = 0;
    std::string first_failure; // law, inputs and term diff
    bool passed() const { return failures == 0; }
};

inline BialgebraReport verify_bialgebra(const HopfContext& ctx, int samples, uint64_t seed,
                                        int max_words = 2, int degree_bound = 4) {
    BialgebraReport report;
    report.samples = samples;
    Rng rng(seed);
    auto record = [&](const std::string& law, const MrbElement& a, const std::string& diff) {
        ++report.failures;
        if (report.first_failure.empty())
            report.first_failure = law + " fails on " + a.str() + "; diff = " + diff;
    };

    for (int i = 0; i < samples; ++i) {
        MrbElement a = rng.element_of_degree_at_most(ctx.instance(), max_words, degree_bound);
        MrbElement b = rng.element_of_degree_at_most(ctx.instance(), max_words, degree_bound);

        // coproduct is multiplicative
        TensorSquareElement lhs = coproduct(diamond(a, b, ctx.algebra()), ctx);
        TensorSquareElement rhs = square_diamond(coproduct(a, ctx), coproduct(b, ctx), ctx);
        if (!(lhs == rhs)) record("coproduct multiplicativity", a, (lhs - rhs).str());

        // counit is multiplicative
        if (!(counit(diamond(a, b, ctx.algebra()), ctx) == counit(a, ctx) * counit(b, ctx)))
            record("counit multiplicativity", a, "scalar mismatch");

        // coassociativity
        TensorSquareElement cp = coproduct(a, ctx);
        TensorTripleElement l3 = coproduct_left(cp, ctx);
        TensorTripleElement r3 = coproduct_right(cp, ctx);
        if (!(l3 == r3)) record("coassociativity", a, (l3 - r3).str());

        // counit property on both legs
        if (!(collapse_right_counit(cp, ctx) == a) || !(collapse_left_counit(cp, ctx) == a))
            record("counit property", a, (collapse_right_counit(cp, ctx) - a).str());

        // defining cocycle: Delta(P(a)) = P(a) (x) 1 + (id (x) P)Delta(a) + lambda a (x) 1
        TensorSquareElement cocycle_lhs = coproduct(operator_P(a), ctx);
        TensorSquareElement cocycle_rhs = TensorSquareElement::pure(operator_P(a), MrbElement::unit(ctx.instance()));
        cocycle_rhs += apply_P_right(cp);
        cocycle_rhs += ctx.lambda() * TensorSquareElement::pure(a, MrbElement::unit(ctx.instance()));
        if (!(cocycle_lhs == cocycle_rhs)) record("cocycle identity", a, (cocycle_lhs - cocycle_rhs).str());
    }
    return report;
}

// One named check inside a suite.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline void add_check(SuiteResult& r, std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
}

// All words over a one-generator polynomial base with filtration degree
// at most `bound`: every length, every exponent split.
inline std::vector<TensorWord> poly_words_up_to_degree(const BaseInstance& inst, int bound) {
    std::vector<TensorWord> out;
    const std::string gen = inst.alphabet().front();
    std::vector<Monomial> slots;
    std::function<void(int, int)> extend = [&](int remaining_len, int budget) {
        if (!slots.empty()) out.push_back(TensorWord(slots));
        if (remaining_len == 0) return;
        for (int e = 0; e <= budget; ++e) {
            slots.push_back(Monomial::generator(gen, e));
            if (static_cast<int>(slots.size()) > 1 || true) {
                // a new slot past the first costs 1 in degree in addition to e
                int cost = e + (slots.size() > 1 ? 1 : 0);
                if (cost <= budget) extend(remaining_len - 1, budget - cost);
            }
            slots.pop_back();
        }
    };
    extend(bound + 1, bound);
    return out;
}

} // namespace detail

// Product-layer suite: golden products, closed form, recursive/explicit
// equivalence, algebra laws, operator identity of P, enumeration counts.
inline SuiteResult verify_product_suite(uint64_t seed) {
    SuiteResult r{"product", {}};
    const BaseInstance trivial = BaseInstance::trivial();

    // golden table over several weights
    {
        bool ok = true;
        std::string detail;
        for (int k : {-1, 0, 2, -4}) {
            MrbAlgebraContext ctx(trivial, Rational(k));
            const Rational kap(k);
            auto check_eq = [&](const MrbElement& got, const MrbElement& want, const char* what) {
                if (!(got == want)) {
                    ok = false;
                    if (detail.empty())
                        detail = std::string(what) + " at kappa=" + kap.str() + ": got " + got.str();
                }
            };
            for (int n = 0; n <= 4; ++n)
                check_eq(diamond(MrbElement::u(0), MrbElement::u(n), ctx), MrbElement::u(n),
                         "u_0*u_n");
            check_eq(diamond(MrbElement::u(1), MrbElement::u(1), ctx),
                     MrbElement::u(2, Rational(2)) + MrbElement::u(0, kap), "u_1*u_1");
            check_eq(diamond(MrbElement::u(1), MrbElement::u(2), ctx),
                     MrbElement::u(3, Rational(3)) + MrbElement::u(1, Rational(2) * kap),
                     "u_1*u_2");
            check_eq(diamond(MrbElement::u(2), MrbElement::u(2), ctx),
                     MrbElement::u(4, Rational(6)) + MrbElement::u(2, Rational(6) * kap) +
                         MrbElement::u(0, kap * kap),
                     "u_2*u_2");
        }
        detail::add_check(r, "trivial-base golden products, kappa in {-1,0,2,-4}", ok, detail);
    }

    // closed form equals the recursion for all 0 <= m, n <= 6
    {
        MrbAlgebraContext ctx(trivial, Rational(-1));
        MrbAlgebraContext ctx2(trivial, Rational(3));
        bool ok = true;
        std::string detail;
        for (int m = 0; m <= 6 && ok; ++m)
            for (int n = 0; n <= 6 && ok; ++n)
                for (auto* c : {&ctx, &ctx2})
                    if (!(closed_form_trivial(m, n, *c) ==
                          diamond(MrbElement::u(m), MrbElement::u(n), *c))) {
                        ok = false;
                        detail = "m=" + std::to_string(m) + ", n=" + std::to_string(n);
                    }
        detail::add_check(r, "closed form matches recursion, 0 <= m,n <= 6", ok, detail);
    }

    // recursive product = explicit stuffle expansion
    {
        bool ok = true;
        std::string detail;
        Rng rng(seed);
        const BaseInstance poly = BaseInstance::polynomial({"x", "y"});
        for (const BaseInstance& inst : {trivial, poly}) {
            for (int k : {-1, 0, 2}) {
                MrbAlgebraContext ctx(inst, Rational(k));
                for (int i = 0; i < 200; ++i) {
                    MrbElement a = rng.element(inst, 2, 4, 2);
                    MrbElement b = rng.element(inst, 2, 4, 2);
                    MrbElement d = diamond(a, b, ctx);
                    MrbElement s = stuffle_product(a, b, ctx);
                    if (!(d == s)) {
                        ok = false;
                        if (detail.empty())
                            detail = "base " + inst.describe() + ", kappa=" + std::to_string(k) +
                                     ", a=" + a.str() + ", b=" + b.str();
                    }
                }
            }
        }
        detail::add_check(r, "recursive = stuffle on 200 random pairs per base and weight", ok, detail);
    }

    // commutativity, associativity, unit
    {
        bool ok = true;
        std::string detail;
        Rng rng(seed + 1);
        const BaseInstance poly = BaseInstance::polynomial({"x", "y"});
        for (const BaseInstance& inst : {trivial, poly}) {
            for (int k : {-1, 0, 2, -4}) {
                MrbAlgebraContext ctx(inst, Rational(k));
                for (int i = 0; i < 200; ++i) {
                    MrbElement a = rng.element(inst, 2, 4, 2);
                    MrbElement b = rng.element(inst, 2, 4, 2);
                    if (!(diamond(a, b, ctx) == diamond(b, a, ctx))) {
                        ok = false;
                        if (detail.empty()) detail = "commutativity: a=" + a.str() + ", b=" + b.str();
                    }
                    if (!(diamond(MrbElement::unit(inst), a, ctx) == a)) {
                        ok = false;
                        if (detail.empty()) detail = "unit law: a=" + a.str();
                    }
                }
                for (int i = 0; i < 200; ++i) {
                    MrbElement a = rng.element(inst, 2, 3, 2);
                    MrbElement b = rng.element(inst, 2, 3, 2);
                    MrbElement c = rng.element(inst, 2, 3, 2);
                    if (!(diamond(diamond(a, b, ctx), c, ctx) == diamond(a, diamond(b, c, ctx), ctx))) {
                        ok = false;
                        if (detail.empty())
                            detail = "associativity: a=" + a.str() + ", b=" + b.str() + ", c=" + c.str();
                    }
                }
            }
        }
        detail::add_check(r, "commutativity, associativity and unit on 200 random samples", ok, detail);
    }

    // the canonical operator satisfies the operator identity
    {
        Rng rng(seed + 2);
        const BaseInstance poly = BaseInstance::polynomial({"x", "y"});
        bool ok = true;
        std::string detail;
        for (const BaseInstance& inst : {trivial, poly}) {
            for (int k : {-1, 0, 2}) {
                MrbAlgebraContext ctx(inst, Rational(k));
                auto gen = [&] { return rng.element(inst, 2, 3, 2); };
                auto mul = [&](const MrbElement& x, const MrbElement& y) { return diamond(x, y, ctx); };
                auto op = [](const MrbElement& x) { return operator_P(x); };
                auto report = check_mrb_identity<MrbElement>(mul, op, ctx.kappa(), gen, 67);
                if (!report.pass()) {
                    ok = false;
                    if (detail.empty())
                        detail = "P fails at kappa=" + std::to_string(k) + " over " + inst.describe();
                }
            }
        }
        detail::add_check(r, "operator identity of P on 200+ random pairs", ok, detail);
    }

    // |J_{m,n,r}| = C(m+n-r, m) C(m, r)
    {
        bool ok = true;
        std::string detail;
        for (int m = 1; m <= 5; ++m)
            for (int n = 1; n <= 5; ++n)
                for (int rr = 0; rr <= std::min(m, n); ++rr) {
                    BigInt want = binomial(m + n - rr, m) * binomial(m, rr);
                    if (BigInt(enumerate_J(m, n, rr).size()) != want) {
                        ok = false;
                        if (detail.empty())
                            detail = "m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                                     ", r=" + std::to_string(rr);
                    }
                }
        detail::add_check(r, "|J_{m,n,r}| matches the binomial count, m,n <= 5", ok, detail);
    }

    return r;
}

// Bialgebra suite: the four obligations plus the square-operator identity,
// the cube cocycle, filtration compatibility and connectedness.
inline SuiteResult verify_bialgebra_suite(uint64_t seed) {
    SuiteResult r{"bialgebra", {}};
    const BaseInstance trivial = BaseInstance::trivial();
    const BaseInstance poly = BaseInstance::polynomial({"x"});

    {
        HopfContext ctx(trivial, Rational(1));
        auto report = verify_bialgebra(ctx, 100, seed, 2, 5);
        detail::add_check(r, "bialgebra obligations over the trivial base, degree <= 5",
                          report.passed(), report.first_failure);
    }
    {
        HopfContext ctx(poly, Rational(1));
        auto report = verify_bialgebra(ctx, 100, seed + 1, 2, 4);
        detail::add_check(r, "bialgebra obligations over k[x], degree <= 4",
                          report.passed(), report.first_failure);
    }

    // cube cocycle: (id (x) Delta)(id (x) P)(alpha) =
    //   ((id (x) P)(alpha)) (x) 1 + (id (x) id (x) P)(id (x) Delta)(alpha) + lambda alpha (x) 1
    {
        bool ok = true;
        std::string detail;
        for (const BaseInstance& inst : {trivial, poly}) {
            HopfContext ctx(inst, Rational(2));
            Rng rng(seed + 2);
            for (int i = 0; i < 50; ++i) {
                TensorSquareElement alpha = TensorSquareElement::pure(
                    rng.element_of_degree_at_most(inst, 2, 3),
                    rng.element_of_degree_at_most(inst, 2, 3));
                TensorTripleElement lhs = coproduct_right(apply_P_right(alpha), ctx);
                TensorTripleElement rhs = append_unit(apply_P_right(alpha));
                rhs += apply_P_third(coproduct_right(alpha, ctx));
                TensorTripleElement scaled = append_unit(alpha);
                scaled.scale(ctx.lambda());
                rhs += scaled;
                if (!(lhs == rhs)) {
                    ok = false;
                    if (detail.empty()) detail = "over " + inst.describe();
                }
            }
        }
        detail::add_check(r, "cocycle extends to the square (cube identity)", ok, detail);
    }

    // id (x) P satisfies the operator identity on the square algebra
    {
        bool ok = true;
        std::string detail;
        for (const BaseInstance& inst : {trivial, poly}) {
            HopfContext ctx(inst, Rational(1));
            Rng rng(seed + 3);
            auto gen = [&] {
                return TensorSquareElement::pure(rng.element_of_degree_at_most(inst, 2, 2),
                                                 rng.element_of_degree_at_most(inst, 2, 2));
            };
            auto mul = [&](const TensorSquareElement& a, const TensorSquareElement& b) {
                return square_diamond(a, b, ctx);
            };
            auto op = [](const TensorSquareElement& s) { return apply_P_right(s); };
            auto report = check_mrb_identity<TensorSquareElement>(mul, op, ctx.kappa(), gen, 100);
            if (!report.pass()) {
                ok = false;
                if (detail.empty()) detail = "over " + inst.describe();
            }
        }
        detail::add_check(r, "id (x) P satisfies the operator identity on the square", ok, detail);
    }

    // filtration: deg(a*b) <= deg a + deg b; Delta(A_k) within sum A_m (x) A_n
    {
        bool ok = true;
        std::string detail;
        for (const BaseInstance& inst : {trivial, poly}) {
            HopfContext ctx(inst, Rational(1));
            Rng rng(seed + 4);
            for (int i = 0; i < 100; ++i) {
                MrbElement a = rng.element_of_degree_at_most(inst, 2, 3);
                MrbElement b = rng.element_of_degree_at_most(inst, 2, 3);
                MrbElement prod = diamond(a, b, ctx.algebra());
                if (!prod.is_zero() && degree(prod) > degree(a) + degree(b)) {
                    ok = false;
                    if (detail.empty()) detail = "product degree: a=" + a.str() + ", b=" + b.str();
                }
                MrbElement c = rng.element_of_degree_at_most(inst, 2, 6);
                int k = c.is_zero() ? 0 : degree(c);
                for (const auto& [p, coeff] : coproduct(c, ctx).terms()) {
                    if (degree(inst, p.first) + degree(inst, p.second) > k) {
                        ok = false;
                        if (detail.empty()) detail = "coproduct degree: c=" + c.str();
                    }
                }
            }
        }
        detail::add_check(r, "filtration compatibility of product and coproduct", ok, detail);
    }

    // connectedness: degree-0 words are exactly the unit word
    {
        bool ok = degree(trivial, TensorWord::unit()) == 0 &&
                  degree(poly, TensorWord::unit()) == 0 &&
                  degree(trivial, TensorWord::u(1)) == 1 &&
                  degree(poly, TensorWord({Monomial::generator("x")})) == 1;
        detail::add_check(r, "connectedness: the degree-0 level is spanned by the unit", ok);
    }

    return r;
}

// Hopf suite: closed-form coproduct and counit on the trivial base, the
// antipode axioms on all low-degree basis words, and multiplicativity of
// the antipode.
inline SuiteResult verify_hopf_suite(uint64_t seed) {
    SuiteResult r{"hopf", {}};
    const BaseInstance trivial = BaseInstance::trivial();
    const BaseInstance poly = BaseInstance::polynomial({"x"});

    // Delta(u_n) = sum_{i=0}^n u_i (x) u_{n-i} + lambda sum_{i=0}^{n-1} u_i (x) u_{n-1-i}
    {
        HopfContext ctx(trivial, Rational(1));
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= 8; ++n) {
            TensorSquareElement want(trivial);
            for (int i = 0; i <= n; ++i)
                want.add_term({TensorWord::u(i), TensorWord::u(n - i)}, Rational(1));
            for (int i = 0; i < n; ++i)
                want.add_term({TensorWord::u(i), TensorWord::u(n - 1 - i)}, ctx.lambda());
            if (n == 0) {
                want = TensorSquareElement(trivial);
                want.add_term({TensorWord::u(0), TensorWord::u(0)}, Rational(1));
            }
            if (!(coproduct(MrbElement::u(n), ctx) == want)) {
                ok = false;
                if (detail.empty()) detail = "n=" + std::to_string(n);
            }
        }
        detail::add_check(r, "closed-form coproduct of u_n, n <= 8", ok, detail);
    }

    // eps(u_n) = (-lambda)^n
    {
        bool ok = true;
        std::string detail;
        for (const Rational& lambda : {Rational(1), Rational(2), Rational(-3, 2)}) {
            HopfContext ctx(trivial, lambda);
            for (int n = 0; n <= 8; ++n)
                if (!(counit(MrbElement::u(n), ctx) == (-lambda).pow(n))) {
                    ok = false;
                    if (detail.empty()) detail = "lambda=" + lambda.str() + ", n=" + std::to_string(n);
                }
        }
        detail::add_check(r, "counit of u_n is (-lambda)^n", ok, detail);
    }

    // antipode axioms on every basis word of low degree
    {
        HopfContext ctx(trivial, Rational(1));
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= 5; ++n)
            if (!antipode_axiom_holds(MrbElement::u(n), ctx)) {
                ok = false;
                if (detail.empty()) detail = "u_" + std::to_string(n);
            }
        HopfContext pctx(poly, Rational(1));
        for (const auto& w : detail::poly_words_up_to_degree(poly, 4))
            if (!antipode_axiom_holds(MrbElement::from_word(poly, w), pctx)) {
                ok = false;
                if (detail.empty()) detail = w.str(poly);
            }
        detail::add_check(r, "antipode axioms on basis words (degree <= 5 trivial, <= 4 poly)",
                          ok, detail);
    }

    // S(u_1) = -u_1 - 2 lambda u_0
    {
        bool ok = true;
        std::string detail;
        for (const Rational& lambda : {Rational(1), Rational(3), Rational(-1, 2)}) {
            HopfContext ctx(trivial, lambda);
            MrbElement want = MrbElement::u(1, Rational(-1)) + MrbElement::u(0, Rational(-2) * lambda);
            if (!(antipode(MrbElement::u(1), ctx) == want)) {
                ok = false;
                if (detail.empty()) detail = "lambda=" + lambda.str();
            }
        }
        detail::add_check(r, "antipode of u_1", ok, detail);
    }

    // S(a*b) = S(a)*S(b) (commutative case) and S(u_0) = u_0
    {
        bool ok = antipode(MrbElement::u(0), HopfContext(trivial, Rational(1))) == MrbElement::u(0);
        std::string detail;
        for (const BaseInstance& inst : {trivial, poly}) {
            HopfContext ctx(inst, Rational(1));
            Rng rng(seed + 5);
            for (int i = 0; i < 40; ++i) {
                MrbElement a = rng.element_of_degree_at_most(inst, 2, 3);
                MrbElement b = rng.element_of_degree_at_most(inst, 2, 3);
                MrbElement lhs = antipode(diamond(a, b, ctx.algebra()), ctx);
                MrbElement rhs = diamond(antipode(a, ctx), antipode(b, ctx), ctx.algebra());
                if (!(lhs == rhs)) {
                    ok = false;
                    if (detail.empty()) detail = "a=" + a.str() + ", b=" + b.str();
                }
            }
        }
        detail::add_check(r, "antipode is multiplicative", ok, detail);
    }

    return r;
}

inline SuiteResult verify_suite(const std::string& name, uint64_t seed) {
    if (name == "product") return verify_product_suite(seed);
    if (name == "bialgebra") return verify_bialgebra_suite(seed);
    if (name == "hopf") return verify_hopf_suite(seed);
    throw invalid_input_error("unknown suite '" + name + "' (expected product|bialgebra|hopf)");
}

} // namespace mrb
