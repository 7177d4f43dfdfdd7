#pragma once

#include "altineq/error.hpp"
#include "altineq/numeric.hpp"
#include "altineq/report.hpp"
#include "altineq/seqcore.hpp"
#include "altineq/exponents.hpp"
#include "altineq/classical.hpp"
#include "altineq/ratios.hpp"
#include "altineq/series.hpp"
#include "altineq/extremal.hpp"
#include "altineq/campaign.hpp"
#include "altineq/io.hpp"
