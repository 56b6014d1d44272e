#pragma once

#include <map>
#include <string>
#include <utility>

#include "mrb/mrb_product.hpp"
#include "mrb/operators.hpp"

namespace mrb {

// Algebra map A -> R between base algebras, determined by generator
// images; monomials go to products of image powers, extension is linear.
class BaseAlgebraMap {
public:
    BaseAlgebraMap(BaseInstance source, BaseInstance target,
                   std::map<std::string, BaseElement> generator_images = {})
        : source_(std::move(source)), target_(std::move(target)),
          images_(std::move(generator_images)) {
        for (const auto& name : source_.alphabet())
            if (!images_.count(name))
                throw invalid_input_error("no image for generator '" + name + "'");
    }

    const BaseInstance& source() const { return source_; }
    const BaseInstance& target() const { return target_; }

    BaseElement apply(const BaseElement& x) const {
        require_same_instance(x.instance(), source_);
        BaseElement out(target_);
        for (const auto& [m, c] : x.terms()) {
            BaseElement term = BaseElement::unit(target_);
            for (const auto& [name, e] : m.exponents()) {
                const BaseElement& img = images_.at(name);
                if (e < 0)
                    throw invalid_input_error("cannot map a negative power through an algebra map");
                for (int i = 0; i < e; ++i) term = term * img;
            }
            out += term.scale(c);
        }
        return out;
    }

private:
    BaseInstance source_;
    BaseInstance target_;
    std::map<std::string, BaseElement> images_;
};

// The universal-property evaluator into a modified Rota-Baxter algebra
// (R, P) of the same weight: on a pure tensor,
//   lift(a_0 (x) a') = f(a_0) * P(lift(a')),    lift|_A = f.
// Construction prechecks by sampling that the target actually satisfies
// the operator identity; the homomorphism laws are covered by tests.
class MrbLift {
public:
    MrbLift(BaseAlgebraMap f, MrbOperatorInstance target, const MrbAlgebraContext& ctx,
            int precheck_samples = 50, uint64_t precheck_seed = 1)
        : f_(std::move(f)), target_(std::move(target)) {
        require_same_instance(f_.source(), ctx.instance());
        require_same_instance(f_.target(), target_.carrier);
        if (!(ctx.kappa() == target_.weight))
            throw weight_mismatch_error("lift target has weight " + target_.weight.str() +
                                        ", context has weight " + ctx.kappa().str());
        auto report = check_mrb(target_, precheck_samples, precheck_seed);
        if (!report.pass()) {
            const auto& fail = report.failures.front();
            throw invalid_input_error("lift target fails the operator identity; witness u = " +
                                      fail.u.str() + ", v = " + fail.v.str());
        }
    }

    BaseElement apply(const MrbElement& a) const {
        BaseElement out(f_.target());
        for (const auto& [w, c] : a.terms()) {
            BaseElement img = apply_word(w);
            out += img.scale(c);
        }
        return out;
    }

    const MrbOperatorInstance& target() const { return target_; }

private:
    BaseElement apply_word(const TensorWord& w) const {
        BaseElement head = f_.apply(BaseElement::from_monomial(f_.source(), w.head()));
        if (w.length() == 1) return head;
        return head * target_.op.apply(apply_word(w.tail()));
    }

    BaseAlgebraMap f_;
    MrbOperatorInstance target_;
};

} // namespace mrb
