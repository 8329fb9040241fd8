#pragma once

#include "kahlerdeg/rational.hpp"
#include "kahlerdeg/poly.hpp"
#include "kahlerdeg/laurent.hpp"
#include "kahlerdeg/numsgp.hpp"
#include "kahlerdeg/ideals.hpp"
#include "kahlerdeg/algebra.hpp"
#include "kahlerdeg/modbasis.hpp"
#include "kahlerdeg/kahler.hpp"
#include "kahlerdeg/normalize.hpp"
#include "kahlerdeg/classify.hpp"
