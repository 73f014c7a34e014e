#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "jacobi/density.hpp"
#include "jacobi/ensemble.hpp"
#include "jacobi/fmatrix.hpp"
#include "jacobi/spectra.hpp"

namespace jacobi {

/// ASCII "JACOBI!".
inline constexpr std::uint64_t kDefaultSeed = 0x4A41434F424921ULL;

/// Limit regimes of the rescaled ensemble spectrum.
enum class LimitModel { general, proportional, arcsine, semicircle, hard_edge, shifted_semicircle };

std::string_view to_string(LimitModel m);
LimitModel parse_limit_model(std::string_view name);

/// Everything needed to compare a rescaled ensemble ESD with its limit.
struct EnsembleSetup {
    JacobiParams params;
    ScalingSequence scaling;  // recurrence form
    DensityModel limit;
    std::size_t trials;
};

/// Default n and trial count of each regime's preset.
std::size_t preset_n(LimitModel m);
std::size_t preset_trials(LimitModel m);

/// Preset parameters at size n:
///   general, proportional  a = b = 3n, β = 2
///   arcsine                a = b = sqrt(n), β = 2n
///   semicircle             a = b = n - 1, β = 2 n^(-1/4)
///   hard_edge              ã = n², b̃ = n, β = 2
///   shifted_semicircle     ã = 10⁶ (n/100)^1.9, b̃ = 10⁴ (n/100)^1.88, β = 2
JacobiParams preset_params(LimitModel m, std::size_t n);

/// Scaling sequence in recurrence form that the regime prescribes for the
/// given parameters; identity for general, proportional and arcsine.
ScalingSequence canonical_scaling(LimitModel m, const JacobiParams& p);

/// Limit density for the regime with ratios read off the parameters (for
/// general: the finite-n recurrence limits under `s`).
DensityModel canonical_limit(LimitModel m, const JacobiParams& p, const ScalingSequence& s);

EnsembleSetup make_setup(LimitModel m, const JacobiParams& p, std::size_t trials);
EnsembleSetup preset_setup(LimitModel m);

/// δ⁴ (a + b) / log n for a shift-form δ; small values (< 10) mean the
/// deviation bound does not control the rescaled spectrum.
double scaling_condition(const JacobiParams& p, const ScalingSequence& shift_form);

/// F-matrix experiment: dimensions, eigenvalue transform and its limit.
struct FSetup {
    FDims dims;
    FTransform transform;
    DensityModel limit;
    std::size_t trials;
};

std::size_t f_preset_n(FTransform t);
std::size_t f_preset_trials(FTransform t);

/// Preset dimensions at size n:
///   none        n1 = 2n, n2 = 3n
///   semicircle  n1 = round(n^1.8), n2 = 2 n1
///   hard_edge   n1 = n², n2 = 2n
///   shifted     n1 = round(10⁶ (n/100)^1.9), n2 = round(10⁴ (n/100)^1.88)
FDims f_preset_dims(FTransform t, std::size_t n);

/// Limit of the transformed F spectrum, ratios taken at the given dims:
/// FLimit(n/n1, n/n2), Semicircle(ratio n1/n2), ReciprocalHardEdgeLimit(n/n2)
/// or MirroredShiftedSemicircle.
DensityModel f_limit(FTransform t, const FDims& d);

FSetup make_f_setup(FTransform t, const FDims& d, std::size_t trials);
FSetup f_preset_setup(FTransform t);

}  // namespace jacobi
