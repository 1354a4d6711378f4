#pragma once

#include "liecascade/error.hpp"
#include "liecascade/matrix.hpp"
#include "liecascade/rootsys.hpp"
#include "liecascade/recognize.hpp"
#include "liecascade/weyl.hpp"
#include "liecascade/diagram.hpp"
#include "liecascade/cascade.hpp"
#include "liecascade/torusauto.hpp"
#include "liecascade/certifier.hpp"
#include "liecascade/serialize.hpp"
