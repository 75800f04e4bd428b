#pragma once

#include "steercorr/error.hpp"
#include "steercorr/infotheory.hpp"
#include "steercorr/mub.hpp"
#include "steercorr/optimize.hpp"
#include "steercorr/qstate.hpp"
#include "steercorr/sampling.hpp"
#include "steercorr/scmub.hpp"
#include "steercorr/steering.hpp"
#include "steercorr/verify.hpp"
