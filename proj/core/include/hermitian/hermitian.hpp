#pragma once

#include "hermitian/batch.hpp"
#include "hermitian/error.hpp"
#include "hermitian/family.hpp"
#include "hermitian/highest_weight.hpp"
#include "hermitian/poset.hpp"
#include "hermitian/rational.hpp"
#include "hermitian/report.hpp"
#include "hermitian/root_system.hpp"
