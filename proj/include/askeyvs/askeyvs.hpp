#ifndef ASKEYVS_ASKEYVS_HPP
#define ASKEYVS_ASKEYVS_HPP

#include "error.hpp"
#include "scalar.hpp"
#include "poly.hpp"
#include "ratfun.hpp"
#include "spectral.hpp"
#include "hypergeometric.hpp"
#include "classify.hpp"
#include "scheme_graph.hpp"
#include "report.hpp"
#include "catalog.hpp"
#include "qlimits.hpp"
#include "spec_document.hpp"
#include "cli.hpp"

#endif
