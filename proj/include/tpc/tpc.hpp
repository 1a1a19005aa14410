#ifndef TPC_TPC_HPP
#define TPC_TPC_HPP

#include "tpc/combinator.hpp"
#include "tpc/elaborator.hpp"
#include "tpc/kernel.hpp"
#include "tpc/morphism.hpp"
#include "tpc/parser.hpp"
#include "tpc/presentation.hpp"
#include "tpc/print_syntax.hpp"
#include "tpc/printer.hpp"
#include "tpc/report.hpp"

#endif
