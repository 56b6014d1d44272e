#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mrb/mrb_product.hpp"

namespace mrb {

// Hopf-layer context: fixes lambda and derives kappa = -lambda^2, the only
// weights for which the coalgebra structure below exists. Requires a
// bialgebra-enabled base. Owns the per-word coproduct and antipode caches.
class HopfContext {
public:
    HopfContext(BaseInstance inst, Rational lambda)
        : lambda_(std::move(lambda)),
          algebra_(std::move(inst), -(lambda_ * lambda_)) {
        if (!algebra_.instance().bialgebra_enabled())
            throw unsupported_coalgebra_error("Hopf structure needs a bialgebra-enabled base, got " +
                                              algebra_.instance().describe());
    }

    const Rational& lambda() const { return lambda_; }
    const Rational& kappa() const { return algebra_.kappa(); }
    const BaseInstance& instance() const { return algebra_.instance(); }
    const MrbAlgebraContext& algebra() const { return algebra_; }

    const TensorSquareElement& coproduct_word(const TensorWord& w) const;
    const MrbElement& antipode_word(const TensorWord& w) const;

private:
    Rational lambda_;
    MrbAlgebraContext algebra_;
    mutable std::map<TensorWord, TensorSquareElement> coproduct_memo_;
    mutable std::map<TensorWord, MrbElement> antipode_memo_;
};

// Componentwise product on the square, bilinear in both arguments.
inline TensorSquareElement square_diamond(const TensorSquareElement& s,
                                          const TensorSquareElement& t,
                                          const MrbAlgebraContext& ctx) {
    require_same_instance(s.instance(), ctx.instance());
    require_same_instance(t.instance(), ctx.instance());
    TensorSquareElement out(ctx.instance());
    for (const auto& [ps, cs] : s.terms()) {
        for (const auto& [pt, ct] : t.terms()) {
            const Rational c = cs * ct;
            const MrbElement& left = ctx.diamond_words(ps.first, pt.first);
            const MrbElement& right = ctx.diamond_words(ps.second, pt.second);
            for (const auto& [wl, cl] : left.terms())
                for (const auto& [wr, cr] : right.terms())
                    out.add_term({wl, wr}, c * cl * cr);
        }
    }
    return out;
}

inline TensorSquareElement square_diamond(const TensorSquareElement& s,
                                          const TensorSquareElement& t,
                                          const HopfContext& ctx) {
    return square_diamond(s, t, ctx.algebra());
}

// id (x) P on the square.
inline TensorSquareElement apply_P_right(const TensorSquareElement& s) {
    TensorSquareElement out(s.instance());
    for (const auto& [p, c] : s.terms())
        out.add_term({p.first, p.second.prepend(Monomial())}, c);
    return out;
}

// s (x) 1: append the unit word as a third leg.
inline TensorTripleElement append_unit(const TensorSquareElement& s) {
    TensorTripleElement out(s.instance());
    for (const auto& [p, c] : s.terms())
        out.add_term({p.first, p.second, TensorWord::unit()}, c);
    return out;
}

// id (x) id (x) P on the cube.
inline TensorTripleElement apply_P_third(const TensorTripleElement& t) {
    TensorTripleElement out(t.instance());
    for (const auto& [k, c] : t.terms())
        out.add_term({std::get<0>(k), std::get<1>(k), std::get<2>(k).prepend(Monomial())}, c);
    return out;
}

namespace detail {

// Embed Delta(a0) of a single monomial into the square as length-1 words.
inline TensorSquareElement embed_base_coproduct(const BaseInstance& inst, const Monomial& m) {
    BaseTensorSquare base = coproduct(BaseElement::from_monomial(inst, m));
    TensorSquareElement out(inst);
    for (const auto& [p, c] : base.terms())
        out.add_term({TensorWord({p.first}), TensorWord({p.second})}, c);
    return out;
}

} // namespace detail

// Coproduct of one pure word, by the defining recursion. On a length-1
// word it is the base coproduct. For w = a0 (x) w' it is
//   Delta(a0) * Delta(P(w'))
// with the Hochschild-cocycle value
//   Delta(P(w')) = P(w') (x) 1 + (id (x) P) Delta(w') + lambda w' (x) 1.
inline const TensorSquareElement& HopfContext::coproduct_word(const TensorWord& w) const {
    if (auto it = coproduct_memo_.find(w); it != coproduct_memo_.end()) return it->second;

    TensorSquareElement out(instance());
    if (w.length() == 1) {
        out = detail::embed_base_coproduct(instance(), w.head());
    } else {
        const TensorWord tail = w.tail();
        const TensorSquareElement& inner = coproduct_word(tail);

        TensorSquareElement cocycle(instance());
        cocycle.add_term({tail.prepend(Monomial()), TensorWord::unit()}, Rational(1));
        cocycle += apply_P_right(inner);
        cocycle.add_term({tail, TensorWord::unit()}, lambda_);

        out = square_diamond(detail::embed_base_coproduct(instance(), w.head()), cocycle, algebra_);
    }
    return coproduct_memo_.emplace(w, std::move(out)).first->second;
}

inline TensorSquareElement coproduct(const MrbElement& a, const HopfContext& ctx) {
    require_same_instance(a.instance(), ctx.instance());
    TensorSquareElement out(ctx.instance());
    for (const auto& [w, c] : a.terms()) {
        for (const auto& [p, cp] : ctx.coproduct_word(w).terms())
            out.add_term(p, c * cp);
    }
    return out;
}

// Counit: a_0 (x) ... (x) a_k maps to (-lambda)^k eps(a_0 a_1 ... a_k),
// extended linearly.
inline Rational counit(const MrbElement& a, const HopfContext& ctx) {
    require_same_instance(a.instance(), ctx.instance());
    Rational out(0);
    for (const auto& [w, c] : a.terms()) {
        Monomial prod;
        for (const auto& m : w.slots()) prod = prod * m;
        if (!prod.is_unit()) continue; // eps kills every non-constant monomial
        out += c * (-ctx.lambda()).pow(static_cast<int>(w.length()) - 1);
    }
    return out;
}

// (id (x) eps) and (eps (x) id), collapsing one leg of a square.
inline MrbElement collapse_right_counit(const TensorSquareElement& s, const HopfContext& ctx) {
    MrbElement out(s.instance());
    for (const auto& [p, c] : s.terms()) {
        Rational e = counit(MrbElement::from_word(s.instance(), p.second), ctx);
        if (!e.is_zero()) out.add_term(p.first, c * e);
    }
    return out;
}

inline MrbElement collapse_left_counit(const TensorSquareElement& s, const HopfContext& ctx) {
    MrbElement out(s.instance());
    for (const auto& [p, c] : s.terms()) {
        Rational e = counit(MrbElement::from_word(s.instance(), p.first), ctx);
        if (!e.is_zero()) out.add_term(p.second, c * e);
    }
    return out;
}

// (id (x) Delta) and (Delta (x) id), square -> cube.
inline TensorTripleElement coproduct_right(const TensorSquareElement& s, const HopfContext& ctx) {
    TensorTripleElement out(s.instance());
    for (const auto& [p, c] : s.terms())
        for (const auto& [q, cq] : ctx.coproduct_word(p.second).terms())
            out.add_term({p.first, q.first, q.second}, c * cq);
    return out;
}

inline TensorTripleElement coproduct_left(const TensorSquareElement& s, const HopfContext& ctx) {
    TensorTripleElement out(s.instance());
    for (const auto& [p, c] : s.terms())
        for (const auto& [q, cq] : ctx.coproduct_word(p.first).terms())
            out.add_term({q.first, q.second, p.second}, c * cq);
    return out;
}

namespace detail {

// pi = id - unit.counit, the projection onto the augmentation ideal.
inline MrbElement counit_reduce(const TensorWord& w, const HopfContext& ctx) {
    MrbElement out = MrbElement::from_word(ctx.instance(), w);
    Rational e = counit(out, ctx);
    if (!e.is_zero()) out -= MrbElement::unit(ctx.instance(), e);
    return out;
}

} // namespace detail

// Antipode of one pure word by the degreewise recursion
//   S(w) = eps(w) 1 - pi(w) - sum S(L) * R  over  (pi (x) pi) Delta(w),
// where pi projects onto ker(eps). Connectedness of the filtration makes
// both legs of the reduced coproduct strictly drop in degree, so the
// recursion terminates. Note words are not eps-normalized (eps(u_1) =
// -lambda), which is why the reduction projects with pi on both legs
// rather than just discarding unit words.
inline const MrbElement& HopfContext::antipode_word(const TensorWord& w) const {
    if (auto it = antipode_memo_.find(w); it != antipode_memo_.end()) return it->second;

    MrbElement out(instance());
    if (w.is_unit()) {
        out = MrbElement::unit(instance());
    } else {
        const Rational eps = counit(MrbElement::from_word(instance(), w), *this);
        out = MrbElement::unit(instance(), eps);
        out -= detail::counit_reduce(w, *this);

        TensorSquareElement reduced(instance());
        for (const auto& [p, c] : coproduct_word(w).terms()) {
            const MrbElement left = detail::counit_reduce(p.first, *this);
            const MrbElement right = detail::counit_reduce(p.second, *this);
            if (left.is_zero() || right.is_zero()) continue;
            for (const auto& [wl, cl] : left.terms())
                for (const auto& [wr, cr] : right.terms())
                    reduced.add_term({wl, wr}, c * cl * cr);
        }
        for (const auto& [p, c] : reduced.terms()) {
            const MrbElement s_left = antipode_word(p.first);
            const MrbElement r = MrbElement::from_word(instance(), p.second);
            out -= Rational(c) * diamond(s_left, r, algebra_);
        }
    }
    return antipode_memo_.emplace(w, std::move(out)).first->second;
}

inline MrbElement antipode(const MrbElement& a, const HopfContext& ctx) {
    require_same_instance(a.instance(), ctx.instance());
    MrbElement out(ctx.instance());
    for (const auto& [w, c] : a.terms()) {
        MrbElement s = ctx.antipode_word(w);
        out += s.scale(c);
    }
    return out;
}

// m(S (x) id) and m(id (x) S): apply the antipode to one leg, then multiply.
inline MrbElement convolve_antipode_left(const TensorSquareElement& s, const HopfContext& ctx) {
    MrbElement out(ctx.instance());
    for (const auto& [p, c] : s.terms()) {
        MrbElement prod = diamond(ctx.antipode_word(p.first),
                                  MrbElement::from_word(ctx.instance(), p.second), ctx.algebra());
        out += prod.scale(c);
    }
    return out;
}

inline MrbElement convolve_antipode_right(const TensorSquareElement& s, const HopfContext& ctx) {
    MrbElement out(ctx.instance());
    for (const auto& [p, c] : s.terms()) {
        MrbElement prod = diamond(MrbElement::from_word(ctx.instance(), p.first),
                                  ctx.antipode_word(p.second), ctx.algebra());
        out += prod.scale(c);
    }
    return out;
}

// Both antipode axioms for one element, exactly.
inline bool antipode_axiom_holds(const MrbElement& a, const HopfContext& ctx) {
    const TensorSquareElement cp = coproduct(a, ctx);
    const MrbElement expected = MrbElement::unit(ctx.instance(), counit(a, ctx));
    return convolve_antipode_left(cp, ctx) == expected &&
           convolve_antipode_right(cp, ctx) == expected;
}

} // namespace mrb
