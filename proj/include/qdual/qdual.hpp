#pragma once

// Umbrella header: duality and self-duality decisions for prime monotone
// boolean functions, on a seeded statevector simulator with an exhaustive
// classical cross-check.

#include "qdual/algorithms.hpp"
#include "qdual/brute.hpp"
#include "qdual/corpus.hpp"
#include "qdual/dnf.hpp"
#include "qdual/errors.hpp"
#include "qdual/oracle.hpp"
#include "qdual/pipeline.hpp"
#include "qdual/rng.hpp"
#include "qdual/statevector.hpp"
#include "qdual/verdict.hpp"
