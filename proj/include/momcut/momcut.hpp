#ifndef MOMCUT_MOMCUT_HPP
#define MOMCUT_MOMCUT_HPP

#include "momcut/cutoff.hpp"
#include "momcut/error.hpp"
#include "momcut/generators.hpp"
#include "momcut/grid.hpp"
#include "momcut/io.hpp"
#include "momcut/model.hpp"
#include "momcut/moments.hpp"
#include "momcut/pipeline.hpp"
#include "momcut/quadrature.hpp"
#include "momcut/spectral.hpp"

#endif  // MOMCUT_MOMCUT_HPP
