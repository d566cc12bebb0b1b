#pragma once

#include "alternating.hpp"
#include "complexfn.hpp"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "identities.hpp"
#include "quad.hpp"
#include "report.hpp"
#include "selftest.hpp"
