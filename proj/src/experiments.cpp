#include "jacobi/experiments.hpp"

#include <cmath>
#include <string>

#include "jacobi/errors.hpp"

namespace jacobi {

std::string_view to_string(LimitModel m) {
    switch (m) {
        case LimitModel::general: return "general";
        case LimitModel::proportional: return "proportional";
        case LimitModel::arcsine: return "arcsine";
        case LimitModel::semicircle: return "semicircle";
        case LimitModel::hard_edge: return "hard-edge";
        case LimitModel::shifted_semicircle: return "shifted-semicircle";
    }
    return "general";
}

LimitModel parse_limit_model(std::string_view name) {
    for (LimitModel m : {LimitModel::general, LimitModel::proportional, LimitModel::arcsine, LimitModel::semicircle,
                         LimitModel::hard_edge, LimitModel::shifted_semicircle})
        if (to_string(m) == name) return m;
    throw ParameterError("unknown model '" + std::string(name) +
                         "' (expected general, proportional, arcsine, semicircle, hard-edge, shifted-semicircle)");
}

std::size_t preset_n(LimitModel m) {
    switch (m) {
        case LimitModel::general: return 2000;
        case LimitModel::proportional: return 5000;
        case LimitModel::arcsine: return 5000;
        case LimitModel::semicircle: return 3000;
        case LimitModel::hard_edge: return 200;
        case LimitModel::shifted_semicircle: return 100;
    }
    return 1000;
}

std::size_t preset_trials(LimitModel m) {
    switch (m) {
        case LimitModel::hard_edge: return 10;
        case LimitModel::shifted_semicircle: return 20;
        default: return 1;
    }
}

JacobiParams preset_params(LimitModel m, std::size_t n_) {
    detail::require(n_ >= 1, "n must be >= 1");
    const double n = static_cast<double>(n_);
    switch (m) {
        case LimitModel::general:
        case LimitModel::proportional: return JacobiParams(n_, 3.0 * n, 3.0 * n, 2.0);
        case LimitModel::arcsine: return JacobiParams(n_, std::sqrt(n), std::sqrt(n), 2.0 * n);
        case LimitModel::semicircle: return JacobiParams(n_, n - 1.0, n - 1.0, 2.0 * std::pow(n, -0.25));
        case LimitModel::hard_edge: return JacobiParams::from_tilde(n_, n * n, n, 2.0);
        case LimitModel::shifted_semicircle:
            return JacobiParams::from_tilde(n_, 1e6 * std::pow(n / 100.0, 1.9), 1e4 * std::pow(n / 100.0, 1.88), 2.0);
    }
    throw InternalError("unhandled limit model");
}

ScalingSequence canonical_scaling(LimitModel m, const JacobiParams& p) {
    const double n = static_cast<double>(p.n());
    const double at = p.a_tilde();
    const double bt = p.b_tilde();
    switch (m) {
        case LimitModel::general:
        case LimitModel::proportional:
        case LimitModel::arcsine: return ScalingSequence(0.5, 0.5, p.n());
        case LimitModel::semicircle:
            detail::require(at > 1.0 && bt > 1.0, "semicircle scaling needs a_tilde > 1 and b_tilde > 1");
            return ScalingSequence(std::sqrt(n / (at - 1.0)), 0.5 - (at - bt) / (2.0 * (at + bt - 2.0)), p.n());
        case LimitModel::hard_edge:
            detail::require(at > 1.0, "hard-edge scaling needs a_tilde > 1");
            return ScalingSequence(n / (at - 1.0), 0.0, p.n());
        case LimitModel::shifted_semicircle: {
            detail::require(at > 1.0 && bt > 1.0, "shifted scaling needs a_tilde > 1 and b_tilde > 1");
            const double r = std::sqrt(n * (bt - 1.0));
            return ScalingSequence(r / (at - 1.0), 0.5 - (at + 2.0 * r - bt) / (2.0 * (2.0 * n + at + bt - 2.0)),
                                   p.n());
        }
    }
    throw InternalError("unhandled limit model");
}

DensityModel canonical_limit(LimitModel m, const JacobiParams& p, const ScalingSequence& s) {
    const double n = static_cast<double>(p.n());
    switch (m) {
        case LimitModel::general: {
            const LimitParams l = limit_params_at_n(p, s);
            return GeneralLimit(l.a1, l.a2, l.b1, l.b2);
        }
        case LimitModel::proportional: return ProportionalLimit(p.a_tilde() / n, p.b_tilde() / n);
        case LimitModel::arcsine: return Arcsine{};
        case LimitModel::semicircle: return Semicircle::from_ratio(p.a_tilde() / p.b_tilde());
        case LimitModel::hard_edge: return HardEdgeLimit(p.b_tilde() / n);
        case LimitModel::shifted_semicircle: return ShiftedSemicircle{};
    }
    throw InternalError("unhandled limit model");
}

EnsembleSetup make_setup(LimitModel m, const JacobiParams& p, std::size_t trials) {
    const ScalingSequence s = canonical_scaling(m, p);
    return EnsembleSetup{p, s, canonical_limit(m, p, s), trials};
}

EnsembleSetup preset_setup(LimitModel m) { return make_setup(m, preset_params(m, preset_n(m)), preset_trials(m)); }

double scaling_condition(const JacobiParams& p, const ScalingSequence& s) {
    const double d2 = s.delta * s.delta;
    return d2 * d2 * (p.a() + p.b()) / std::log(static_cast<double>(p.n()));
}

std::size_t f_preset_n(FTransform t) {
    switch (t) {
        case FTransform::none: return 2000;
        case FTransform::semicircle: return 200;
        case FTransform::hard_edge: return 100;
        case FTransform::shifted: return 100;
    }
    return 100;
}

std::size_t f_preset_trials(FTransform t) {
    switch (t) {
        case FTransform::none: return 1;
        case FTransform::semicircle: return 10;
        case FTransform::hard_edge: return 20;
        case FTransform::shifted: return 20;
    }
    return 1;
}

FDims f_preset_dims(FTransform t, std::size_t n_) {
    const double n = static_cast<double>(n_);
    auto round_size = [](double v) { return static_cast<std::size_t>(std::llround(v)); };
    switch (t) {
        case FTransform::none: return FDims(n_, 2 * n_, 3 * n_);
        case FTransform::semicircle: {
            const std::size_t n1 = round_size(std::pow(n, 1.8));
            return FDims(n_, n1, 2 * n1);
        }
        case FTransform::hard_edge: return FDims(n_, n_ * n_, 2 * n_);
        case FTransform::shifted:
            return FDims(n_, round_size(1e6 * std::pow(n / 100.0, 1.9)), round_size(1e4 * std::pow(n / 100.0, 1.88)));
    }
    throw InternalError("unhandled transform");
}

DensityModel f_limit(FTransform t, const FDims& d) {
    const double n = static_cast<double>(d.n());
    switch (t) {
        case FTransform::none: return FLimit(n / static_cast<double>(d.n1()), n / static_cast<double>(d.n2()));
        case FTransform::semicircle: return Semicircle::from_ratio(1.0 / d.ratio());
        case FTransform::hard_edge: return ReciprocalHardEdgeLimit(n / static_cast<double>(d.n2()));
        case FTransform::shifted: return MirroredShiftedSemicircle{};
    }
    throw InternalError("unhandled transform");
}

FSetup make_f_setup(FTransform t, const FDims& d, std::size_t trials) { return FSetup{d, t, f_limit(t, d), trials}; }

FSetup f_preset_setup(FTransform t) { return make_f_setup(t, f_preset_dims(t, f_preset_n(t)), f_preset_trials(t)); }

}  // namespace jacobi
