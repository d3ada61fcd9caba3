#pragma once

#include "embedding.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "kernel.hpp"
#include "oracle.hpp"
#include "pw_dp.hpp"
#include "render.hpp"
#include "validate.hpp"
#include "vc_dp.hpp"
