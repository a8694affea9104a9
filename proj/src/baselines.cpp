#include "baselines.hpp"

namespace fracdiff::detail {

namespace {

// Published maximum errors at t = 1/2 and the printed rates.
constexpr BaselineColumn kColumns[] = {
    // table 1: 1D implicit, tau = dx
    {1, 1.2, 0.0, 0.9, {40, 80, 160, 320}, {3.1438e-4, 1.4713e-4, 6.8748e-5, 3.2097e-5}, {1.0954, 1.0977, 1.0989}},
    {1, 1.2, 0.0, 0.5, {40, 80, 160, 320}, {6.3187e-5, 2.2183e-5, 7.7888e-6, 2.7378e-6}, {1.5102, 1.5100, 1.5084}},
    {1, 1.2, 0.0, 0.1, {40, 80, 160, 320}, {2.7395e-5, 7.6703e-6, 2.0317e-6, 5.2912e-7}, {1.8366, 1.9166, 1.9410}},
    {1, 1.9, 0.0, 0.9, {40, 80, 160, 320}, {2.7655e-4, 1.2919e-4, 6.0294e-5, 2.8133e-5}, {1.0981, 1.0994, 1.0997}},
    {1, 1.9, 0.0, 0.5, {40, 80, 160, 320}, {5.6774e-5, 1.9669e-5, 6.8351e-6, 2.3841e-6}, {1.5293, 1.5249, 1.5195}},
    {1, 1.9, 0.0, 0.1, {40, 80, 160, 320}, {2.1114e-5, 5.4717e-6, 1.4145e-6, 3.6518e-7}, {1.9482, 1.9517, 1.9536}},

    // table 2: 1D implicit, gamma = 0.9, tau = dx^(2/(2-gamma))
    {2, 1.9, 0.0, 0.9, {10, 20, 40, 80}, {2.4699e-4, 6.2966e-5, 1.5697e-5, 3.9368e-6}, {1.9718, 2.0041, 1.9954}},
    {2, 1.5, 0.0, 0.9, {10, 20, 40, 80}, {2.5801e-4, 6.5569e-5, 1.6226e-5, 4.0475e-6}, {1.9763, 2.0148, 2.0032}},
    {2, 1.2, 0.0, 0.9, {10, 20, 40, 80}, {2.5510e-4, 6.4560e-5, 1.5934e-5, 4.0433e-6}, {1.9823, 2.0185, 1.9785}},
    {2, 0.3, 0.0, 0.9, {10, 20, 40, 80}, {2.4135e-4, 6.1043e-5, 1.5085e-5, 3.7583e-6}, {1.9832, 2.0167, 2.0050}},

    // table 3: 2D implicit, tau = dx = dy
    {3, 1.2, 1.3, 0.9, {10, 20, 30, 40}, {7.7867e-5, 3.6381e-5, 2.3084e-5, 1.6839e-5}, {1.0978, 1.1220, 1.0965}},
    {3, 1.2, 1.3, 0.5, {10, 20, 30, 40}, {3.1936e-5, 1.0357e-5, 5.4951e-6, 3.4925e-6}, {1.6246, 1.5632, 1.5755}},
    {3, 1.2, 1.3, 0.1, {10, 20, 30, 40}, {2.2077e-5, 5.6507e-6, 2.5497e-6, 1.4509e-6}, {1.9660, 1.9627, 1.9598}},
    {3, 1.8, 1.7, 0.9, {10, 20, 30, 40}, {7.8209e-5, 3.6912e-5, 2.3535e-5, 1.7122e-5}, {1.0832, 1.1099, 1.1060}},
    {3, 1.8, 1.7, 0.5, {10, 20, 30, 40}, {3.1251e-5, 1.0369e-5, 5.5386e-6, 3.5433e-6}, {1.5917, 1.5465, 1.5527}},
    {3, 1.8, 1.7, 0.1, {10, 20, 30, 40}, {2.0743e-5, 5.5573e-6, 2.5115e-6, 1.4310e-6}, {1.9002, 1.9588, 1.9552}},
};

}  // namespace

std::span<const BaselineColumn> baseline_columns() { return kColumns; }

}  // namespace fracdiff::detail
