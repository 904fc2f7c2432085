#ifndef POLYPROJ_POLYPROJ_HPP
#define POLYPROJ_POLYPROJ_HPP

#include "polyproj/canon.hpp"
#include "polyproj/ddoracle.hpp"
#include "polyproj/errors.hpp"
#include "polyproj/fm.hpp"
#include "polyproj/gadgets.hpp"
#include "polyproj/hvproj.hpp"
#include "polyproj/io.hpp"
#include "polyproj/linalg.hpp"
#include "polyproj/lp.hpp"
#include "polyproj/metrics.hpp"
#include "polyproj/polytope.hpp"
#include "polyproj/rat.hpp"
#include "polyproj/shadow.hpp"
#include "polyproj/vproj.hpp"

#endif  // POLYPROJ_POLYPROJ_HPP
