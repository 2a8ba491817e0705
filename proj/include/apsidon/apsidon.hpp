#pragma once

#include "apsidon/affine_copy.hpp"
#include "apsidon/chain.hpp"
#include "apsidon/constraints.hpp"
#include "apsidon/epolynomial.hpp"
#include "apsidon/finite_set.hpp"
#include "apsidon/interval_union.hpp"
#include "apsidon/json_io.hpp"
#include "apsidon/kernel.hpp"
#include "apsidon/mapping.hpp"
#include "apsidon/patterned_ap.hpp"
#include "apsidon/prng.hpp"
#include "apsidon/progression.hpp"
#include "apsidon/rational.hpp"
#include "apsidon/search.hpp"
#include "apsidon/sidon.hpp"
