#pragma once

#include "dicalc/bigraph.hpp"
#include "dicalc/bimodule.hpp"
#include "dicalc/classify.hpp"
#include "dicalc/cyclotomic.hpp"
#include "dicalc/diagram.hpp"
#include "dicalc/evaluate.hpp"
#include "dicalc/hecke.hpp"
#include "dicalc/laurent.hpp"
#include "dicalc/numeric.hpp"
#include "dicalc/rational.hpp"
#include "dicalc/relations.hpp"
#include "dicalc/weighting.hpp"
#include "dicalc/zigzag.hpp"
