#pragma once

#include "bifurcato/model.hpp"

// Parameter sets quoted in the figure captions and worked examples.
namespace published {

inline const bifurcato::DimensionlessParams fig5a{-1.5, 1.0, 0.3, 0.5, 0.426960};
inline const bifurcato::DimensionlessParams fig7a{-1.5, 1.8045924, 0.330275, 0.05, 0.172824};
inline const bifurcato::DimensionlessParams fig7b{-1.8, 1.0, 0.330275, 0.064380, 0.172824};
inline const bifurcato::DimensionlessParams ex51{-0.35, 1.0, 0.0988432, 0.0292698, 0.05};
inline const bifurcato::DimensionlessParams ex52{2.5, 0.02, 0.0300281, 0.0391069, 0.0387063};

// (a, b, m) of the codim-2 base point of the eps-diagram
inline constexpr double fig8_a = -0.3, fig8_b = 0.5, fig8_m = 0.4;
inline constexpr double fig8_c = 0.1253449, fig8_n = 0.3173105;
inline constexpr double fig8_eps1 = -0.0303449;
inline constexpr double fig8_region1 = -0.0830482, fig8_hl = -0.08601394, fig8_region2 = -0.0876136,
                        fig8_hopf = -0.0884821, fig8_region3 = -0.08852161;

// rounded captions leave the discriminant at ~1e-5 of its scale
inline constexpr double caption_band = 1e-4;

}  // namespace published
