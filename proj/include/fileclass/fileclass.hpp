#pragma once

// Umbrella header: the whole toolkit in one include.

#include "fileclass/classify.hpp"
#include "fileclass/corpus.hpp"
#include "fileclass/errors.hpp"
#include "fileclass/featurize.hpp"
#include "fileclass/fusion.hpp"
#include "fileclass/metrics.hpp"
#include "fileclass/preprocess.hpp"
#include "fileclass/synth.hpp"
#include "fileclass/utf8.hpp"
