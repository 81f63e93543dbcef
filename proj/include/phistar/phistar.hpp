#pragma once

#include "phistar/intarith.hpp"
#include "phistar/cyclotomic.hpp"
#include "phistar/ppdfactor.hpp"
#include "phistar/enumerate.hpp"
#include "phistar/application.hpp"
#include "phistar/records.hpp"
#include "phistar/tables.hpp"
