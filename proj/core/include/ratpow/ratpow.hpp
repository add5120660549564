#pragma once

#include "ratpow/analysis.hpp"
#include "ratpow/bounds.hpp"
#include "ratpow/breakdown.hpp"
#include "ratpow/constructions.hpp"
#include "ratpow/error.hpp"
#include "ratpow/factor_index.hpp"
#include "ratpow/oracle.hpp"
#include "ratpow/rational_powers.hpp"
#include "ratpow/rauzy.hpp"
#include "ratpow/search.hpp"
#include "ratpow/word.hpp"
