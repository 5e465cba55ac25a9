#pragma once

#include "ppfun/errors.hpp"
#include "ppfun/exactlin.hpp"
#include "ppfun/algebra.hpp"
#include "ppfun/module.hpp"
#include "ppfun/pp.hpp"
#include "ppfun/functor.hpp"
#include "ppfun/homological.hpp"
#include "ppfun/io.hpp"
#include "ppfun/verify.hpp"
