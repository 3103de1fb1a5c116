#pragma once

#include "abelian.hpp"
#include "cochain.hpp"
#include "complex.hpp"
#include "double_complex.hpp"
#include "error.hpp"
#include "gmodule.hpp"
#include "hochschild_serre.hpp"
#include "integer.hpp"
#include "json_io.hpp"
#include "monoid.hpp"
#include "shapiro.hpp"
#include "torsor.hpp"
#include "verify.hpp"
