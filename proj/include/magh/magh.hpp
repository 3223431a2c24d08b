#pragma once

#include "magh/chain_complex.hpp"
#include "magh/chains.hpp"
#include "magh/error.hpp"
#include "magh/frames.hpp"
#include "magh/io.hpp"
#include "magh/magnitude.hpp"
#include "magh/metric.hpp"
#include "magh/parallel.hpp"
#include "magh/posets.hpp"
#include "magh/rational.hpp"
#include "magh/smith.hpp"
#include "magh/sparse_matrix.hpp"
#include "magh/verify.hpp"
