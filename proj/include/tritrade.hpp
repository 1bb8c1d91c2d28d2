#pragma once

#include <tritrade/checks.hpp>
#include <tritrade/construct.hpp>
#include <tritrade/cube.hpp>
#include <tritrade/enumerate.hpp>
#include <tritrade/error.hpp>
#include <tritrade/funcspace.hpp>
#include <tritrade/monomial.hpp>
#include <tritrade/reference.hpp>
#include <tritrade/report.hpp>
#include <tritrade/symmetry.hpp>
#include <tritrade/tables.hpp>
#include <tritrade/testsets.hpp>
#include <tritrade/trade.hpp>
#include <tritrade/trade_set.hpp>
