#pragma once

#include "kuniform/corpus.hpp"
#include "kuniform/enumerators.hpp"
#include "kuniform/errors.hpp"
#include "kuniform/exact.hpp"
#include "kuniform/hetero.hpp"
#include "kuniform/io.hpp"
#include "kuniform/oracle.hpp"
#include "kuniform/recurrence.hpp"
#include "kuniform/tables.hpp"
#include "kuniform/uniform_bounds.hpp"
