#pragma once

// Umbrella header: round-3 Dilithium signatures plus the batch engine.

#include "dilithium/batch.hpp"
#include "dilithium/keccak.hpp"
#include "dilithium/memory_pool.hpp"
#include "dilithium/ntt.hpp"
#include "dilithium/packing.hpp"
#include "dilithium/params.hpp"
#include "dilithium/poly.hpp"
#include "dilithium/polyvec.hpp"
#include "dilithium/reduce.hpp"
#include "dilithium/rounding.hpp"
#include "dilithium/sampling.hpp"
#include "dilithium/scheduler.hpp"
#include "dilithium/scheme.hpp"
#include "dilithium/thread_pool.hpp"
