#pragma once

#include "dmod/composition.hpp"
#include "dmod/formal_sum.hpp"
#include "dmod/tableau.hpp"
#include "dmod/families.hpp"
#include "dmod/operator_matrix.hpp"
#include "dmod/hecke_module.hpp"
#include "dmod/clifford_module.hpp"
#include "dmod/theorems.hpp"
#include "dmod/io.hpp"
#include "dmod/harness.hpp"
