#pragma once

#include "pasfrac/counting.hpp"
#include "pasfrac/digits.hpp"
#include "pasfrac/ellipticity.hpp"
#include "pasfrac/error.hpp"
#include "pasfrac/form.hpp"
#include "pasfrac/numeric.hpp"
#include "pasfrac/render.hpp"
#include "pasfrac/selfsim.hpp"
#include "pasfrac/theta.hpp"
#include "pasfrac/zeta.hpp"
