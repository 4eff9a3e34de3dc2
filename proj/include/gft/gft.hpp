#pragma once

#include "gft/bounds.hpp"
#include "gft/classify.hpp"
#include "gft/closure.hpp"
#include "gft/error.hpp"
#include "gft/fracops.hpp"
#include "gft/io.hpp"
#include "gft/oracle.hpp"
#include "gft/sampling.hpp"
#include "gft/series.hpp"
#include "gft/special_fn.hpp"
#include "gft/verify.hpp"
