#pragma once

#include "turan/bounds.hpp"
#include "turan/certificates.hpp"
#include "turan/difference_sets.hpp"
#include "turan/errors.hpp"
#include "turan/evaluator.hpp"
#include "turan/fft.hpp"
#include "turan/finite_field.hpp"
#include "turan/format.hpp"
#include "turan/numtheory.hpp"
#include "turan/parallel.hpp"
#include "turan/pipeline.hpp"
#include "turan/random.hpp"
#include "turan/selector.hpp"
#include "turan/tuples.hpp"
#include "turan/types.hpp"
#include "turan/unit.hpp"
