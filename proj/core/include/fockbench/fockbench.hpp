#pragma once

#include "fockbench/certify.hpp"
#include "fockbench/diagnostics.hpp"
#include "fockbench/dynamics.hpp"
#include "fockbench/errors.hpp"
#include "fockbench/io.hpp"
#include "fockbench/moments.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/optimizer.hpp"
#include "fockbench/oscillator.hpp"
#include "fockbench/parallel.hpp"
#include "fockbench/qbm.hpp"
#include "fockbench/state.hpp"
#include "fockbench/state_families.hpp"
#include "fockbench/types.hpp"
