#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mrb/base_algebra.hpp"
#include "mrb/random_gen.hpp"

namespace mrb {

// The operator identity of weight kappa, evaluated on a pair:
//   P(u)P(v) - P(uP(v)) - P(P(u)v) - kappa uv.
// Zero on all pairs means P is a modified Rota-Baxter operator.

// Closed-form rules for basis monomials outside an operator's table. The
// sign-split rule realizes the pole-part splitting on Laurent monomials:
// identity on degree >= 0, negation below.
enum class DefaultRule { identity, zero, negate, identity_on_nonneg };

inline std::string to_string(DefaultRule r) {
    switch (r) {
    case DefaultRule::identity: return "identity";
    case DefaultRule::zero: return "zero";
    case DefaultRule::negate: return "negate";
    case DefaultRule::identity_on_nonneg: return "identity-on-nonneg";
    }
    return {};
}

inline DefaultRule default_rule_from_string(const std::string& s) {
    if (s == "identity") return DefaultRule::identity;
    if (s == "zero") return DefaultRule::zero;
    if (s == "negate") return DefaultRule::negate;
    if (s == "identity-on-nonneg") return DefaultRule::identity_on_nonneg;
    throw invalid_input_error("unknown operator default rule: '" + s + "'");
}

// Table-driven linear endomorphism of a base algebra: finitely many basis
// images plus a default rule, closed under scaling and addition so that
// derived operators (negation, -lambda id - 2P, eigenprojections) stay in
// the same representation. Exact on the whole infinite basis.
class LinearOperator {
public:
    struct Primitive {
        std::map<Monomial, BaseElement> images;
        DefaultRule rule = DefaultRule::identity;
    };

    LinearOperator() = default;

    static LinearOperator from_rule(DefaultRule rule) {
        LinearOperator op;
        op.parts_.emplace_back(Rational(1), Primitive{{}, rule});
        return op;
    }

    static LinearOperator from_table(std::map<Monomial, BaseElement> images, DefaultRule fallback) {
        LinearOperator op;
        op.parts_.emplace_back(Rational(1), Primitive{std::move(images), fallback});
        return op;
    }

    static LinearOperator identity() { return from_rule(DefaultRule::identity); }
    static LinearOperator zero() { return LinearOperator(); }

    LinearOperator scaled(const Rational& c) const {
        LinearOperator out;
        if (c.is_zero()) return out;
        out.parts_ = parts_;
        for (auto& [coeff, prim] : out.parts_) coeff *= c;
        return out;
    }

    friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
        LinearOperator out;
        out.parts_ = a.parts_;
        out.parts_.insert(out.parts_.end(), b.parts_.begin(), b.parts_.end());
        return out;
    }

    BaseElement apply_monomial(const BaseInstance& inst, const Monomial& m) const {
        BaseElement out(inst);
        for (const auto& [coeff, prim] : parts_) {
            if (auto it = prim.images.find(m); it != prim.images.end()) {
                BaseElement img = it->second;
                out += img.scale(coeff);
                continue;
            }
            switch (prim.rule) {
            case DefaultRule::identity:
                out.add_term(m, coeff);
                break;
            case DefaultRule::zero:
                break;
            case DefaultRule::negate:
                out.add_term(m, -coeff);
                break;
            case DefaultRule::identity_on_nonneg:
                out.add_term(m, m.total_degree() >= 0 ? coeff : -coeff);
                break;
            }
        }
        return out;
    }

    BaseElement apply(const BaseElement& x) const {
        BaseElement out(x.instance());
        for (const auto& [m, c] : x.terms()) {
            BaseElement img = apply_monomial(x.instance(), m);
            out += img.scale(c);
        }
        return out;
    }

private:
    std::vector<std::pair<Rational, Primitive>> parts_;
};

// A carrier algebra with a linear operator and a declared weight. Whether
// the pair actually satisfies the operator identity is established by
// sampling (check_mrb below); table-driven carriers admit no stronger
// decidable check.
struct MrbOperatorInstance {
    BaseInstance carrier;
    LinearOperator op;
    Rational weight;
    std::string name;
};

template <typename Elem>
struct CheckFailure {
    Elem u, v;
    Elem defect;
};

template <typename Elem>
struct CheckReport {
    int samples = 0;
    std::vector<CheckFailure<Elem>> failures;
    bool pass() const { return failures.empty(); }
};

// Generic sampling check of the operator identity over any commutative
// algebra given as callables; also used for the canonical operator on the
// free algebra and its square.
template <typename Elem, typename Mul, typename Op, typename Gen>
CheckReport<Elem> check_mrb_identity(Mul mul, Op op, const Rational& kappa, Gen gen,
                                     int samples) {
    CheckReport<Elem> report;
    report.samples = samples;
    for (int i = 0; i < samples; ++i) {
        Elem u = gen();
        Elem v = gen();
        Elem pu = op(u);
        Elem pv = op(v);
        Elem defect = mul(pu, pv) - op(mul(u, pv)) - op(mul(pu, v));
        Elem uv = mul(u, v);
        defect -= uv.scale(kappa);
        if (!defect.is_zero())
            report.failures.push_back({std::move(u), std::move(v), std::move(defect)});
    }
    return report;
}

// Default sampling bounds for base-algebra carriers.
struct SampleBounds {
    int max_terms = 3;
    int max_degree = 3;
};

inline CheckReport<BaseElement> check_mrb(const MrbOperatorInstance& inst, int samples,
                                          uint64_t seed, SampleBounds bounds = {}) {
    Rng rng(seed);
    auto gen = [&] { return rng.base_element(inst.carrier, bounds.max_terms, bounds.max_degree); };
    auto mul = [](const BaseElement& a, const BaseElement& b) { return a * b; };
    auto op = [&](const BaseElement& x) { return inst.op.apply(x); };
    return check_mrb_identity<BaseElement>(mul, op, inst.weight, gen, samples);
}

// Rota-Baxter identity of weight lambda, same sampling scheme:
//   P(u)P(v) - P(uP(v)) - P(P(u)v) - lambda P(uv).
inline CheckReport<BaseElement> check_rb(const MrbOperatorInstance& inst, int samples,
                                         uint64_t seed, SampleBounds bounds = {}) {
    Rng rng(seed);
    CheckReport<BaseElement> report;
    report.samples = samples;
    for (int i = 0; i < samples; ++i) {
        BaseElement u = rng.base_element(inst.carrier, bounds.max_terms, bounds.max_degree);
        BaseElement v = rng.base_element(inst.carrier, bounds.max_terms, bounds.max_degree);
        BaseElement pu = inst.op.apply(u);
        BaseElement pv = inst.op.apply(v);
        BaseElement defect = pu * pv - inst.op.apply(u * pv) - inst.op.apply(pu * v);
        BaseElement scaled_uv = inst.op.apply(u * v);
        defect -= scaled_uv.scale(inst.weight);
        if (!defect.is_zero())
            report.failures.push_back({std::move(u), std::move(v), std::move(defect)});
    }
    return report;
}

// P and -P satisfy the same identity with the same weight.
inline MrbOperatorInstance negate(const MrbOperatorInstance& inst) {
    return {inst.carrier, inst.op.scaled(Rational(-1)), inst.weight,
            inst.name.empty() ? "" : "-(" + inst.name + ")"};
}

// From a Rota-Baxter operator of weight lambda to the operator
// -lambda id - 2P of weight -lambda^2. The input is prechecked by
// sampling; a failure is reported with its witness pair.
inline MrbOperatorInstance rb_to_mrb(const MrbOperatorInstance& rb, int samples = 100,
                                     uint64_t seed = 1) {
    auto rb_report = check_rb(rb, samples, seed);
    if (!rb_report.pass()) {
        const auto& f = rb_report.failures.front();
        throw invalid_input_error("input fails the Rota-Baxter identity of weight " +
                                  rb.weight.str() + "; witness u = " + f.u.str() +
                                  ", v = " + f.v.str() + ", defect = " + f.defect.str());
    }
    LinearOperator q = LinearOperator::identity().scaled(-rb.weight) + rb.op.scaled(Rational(-2));
    return {rb.carrier, std::move(q), -(rb.weight * rb.weight),
            rb.name.empty() ? "" : "rb-to-mrb(" + rb.name + ")"};
}

enum class ScaleDirection { up, down };

// weight 1 <-> weight kappa^2, by scaling the operator with kappa.
inline MrbOperatorInstance scale_weight(const MrbOperatorInstance& inst, const Rational& kappa,
                                        ScaleDirection direction) {
    if (direction == ScaleDirection::up) {
        if (!(inst.weight == Rational(1)))
            throw invalid_input_error("scale up needs an operator of weight 1");
        return {inst.carrier, inst.op.scaled(kappa), kappa * kappa, inst.name};
    }
    if (kappa.is_zero())
        throw invalid_input_error("cannot scale down with kappa = 0");
    if (!(inst.weight == kappa * kappa))
        throw invalid_input_error("scale down needs an operator of weight kappa^2 = " +
                                  (kappa * kappa).str() + ", got " + inst.weight.str());
    return {inst.carrier, inst.op.scaled(Rational(1) / kappa), Rational(1), inst.name};
}

// A direct sum decomposition into two nonunitary subalgebras, given by its
// complementary projections.
struct Splitting {
    BaseInstance carrier;
    LinearOperator proj1;
    LinearOperator proj2;
};

// u1 + u2 -> u1 - u2: an involutive operator of weight -1.
inline MrbOperatorInstance splitting_to_operator(const Splitting& s) {
    return {s.carrier, s.proj1 + s.proj2.scaled(Rational(-1)), Rational(-1), "splitting"};
}

// Recover the eigenprojections (id + P)/2 and (id - P)/2 of an involutive
// operator. Involutivity is checked by sampling; a violation names the
// witness monomial.
inline Splitting operator_to_splitting(const MrbOperatorInstance& inst, int samples = 50,
                                       uint64_t seed = 1, SampleBounds bounds = {}) {
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        Monomial m = rng.monomial(inst.carrier, bounds.max_degree);
        BaseElement once = inst.op.apply_monomial(inst.carrier, m);
        BaseElement twice = inst.op.apply(once);
        if (!(twice == BaseElement::from_monomial(inst.carrier, m)))
            throw not_involutive_error("operator is not involutive: P^2(" + m.str() +
                                       ") = " + twice.str());
    }
    const Rational half(1, 2);
    return {inst.carrier,
            (LinearOperator::identity() + inst.op).scaled(half),
            (LinearOperator::identity() + inst.op.scaled(Rational(-1))).scaled(half)};
}

// --- stock instances ---

// r -> lambda r, weight -lambda^2.
inline MrbOperatorInstance scalar_operator(BaseInstance carrier, const Rational& lambda) {
    return {std::move(carrier), LinearOperator::identity().scaled(lambda),
            -(lambda * lambda), "scalar:" + lambda.str()};
}

// The Rota-Baxter scalar operator r -> -lambda r of weight lambda.
inline MrbOperatorInstance scalar_rb_operator(BaseInstance carrier, const Rational& lambda) {
    return {std::move(carrier), LinearOperator::identity().scaled(-lambda), lambda,
            "rb-scalar:" + lambda.str()};
}

// Sign-split operator on Laurent polynomials: +1 on k[e], -1 on
// e^-1 k[e^-1]. Involutive of weight -1.
inline MrbOperatorInstance laurent_splitting_operator() {
    return {BaseInstance::laurent(), LinearOperator::from_rule(DefaultRule::identity_on_nonneg),
            Rational(-1), "laurent-split"};
}

// Pole-part projection on Laurent polynomials, a Rota-Baxter operator of
// weight -1; rb_to_mrb turns it into exactly the splitting operator.
inline MrbOperatorInstance laurent_pole_projection_rb() {
    LinearOperator keep_neg =
        (LinearOperator::identity() + LinearOperator::from_rule(DefaultRule::identity_on_nonneg)
                                          .scaled(Rational(-1)))
            .scaled(Rational(1, 2));
    return {BaseInstance::laurent(), std::move(keep_neg), Rational(-1), "laurent-pole-rb"};
}

inline Splitting laurent_splitting() {
    return operator_to_splitting(laurent_splitting_operator());
}

} // namespace mrb
