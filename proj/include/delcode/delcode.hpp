#pragma once

#include "delcode/bitstring.hpp"
#include "delcode/code_io.hpp"
#include "delcode/codes.hpp"
#include "delcode/counting.hpp"
#include "delcode/errors.hpp"
#include "delcode/graph.hpp"
#include "delcode/mis.hpp"
