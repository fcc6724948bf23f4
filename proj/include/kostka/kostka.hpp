#pragma once

#include "kostka/error.hpp"
#include "kostka/exact/big_rational.hpp"
#include "kostka/exact/cyclotomic.hpp"
#include "kostka/exact/laurent.hpp"
#include "kostka/exact/matrix.hpp"
#include "kostka/exact/rational_function.hpp"
#include "kostka/factor/factorization.hpp"
#include "kostka/greencheck/green.hpp"
#include "kostka/io/fixtures.hpp"
#include "kostka/io/serialize.hpp"
#include "kostka/omega/omega.hpp"
#include "kostka/omega/wreath.hpp"
#include "kostka/oracle/charge.hpp"
#include "kostka/rpart/contingency.hpp"
#include "kostka/rpart/order.hpp"
#include "kostka/rpart/partition.hpp"
#include "kostka/rpart/rpartition.hpp"
#include "kostka/symgrp/characters.hpp"
#include "kostka/symgrp/double_coset.hpp"
#include "kostka/symgrp/permutation.hpp"
#include "kostka/verify/suites.hpp"
