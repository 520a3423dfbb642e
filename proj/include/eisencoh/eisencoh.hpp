#pragma once

#include "eisencoh/error.hpp"
#include "eisencoh/half_int.hpp"
#include "eisencoh/hodge.hpp"
#include "eisencoh/lvalues.hpp"
#include "eisencoh/report.hpp"
#include "eisencoh/sweep.hpp"
#include "eisencoh/verifier.hpp"
#include "eisencoh/weights.hpp"
#include "eisencoh/weyl.hpp"
