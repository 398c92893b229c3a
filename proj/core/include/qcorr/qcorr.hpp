#pragma once

#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/entanglement.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measure.hpp"
#include "qcorr/optimize.hpp"
#include "qcorr/qmat.hpp"
#include "qcorr/sampling.hpp"
