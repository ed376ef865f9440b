#pragma once

#include "thetaq/cyclo.hpp"
#include "thetaq/heisenberg.hpp"
#include "thetaq/intmat.hpp"
#include "thetaq/json_io.hpp"
#include "thetaq/matrix.hpp"
#include "thetaq/qgroup.hpp"
#include "thetaq/skein.hpp"
#include "thetaq/tangle.hpp"
#include "thetaq/theta.hpp"
#include "thetaq/theta_numeric.hpp"
#include "thetaq/zmod.hpp"
