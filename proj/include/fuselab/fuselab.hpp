#pragma once

#include "fuselab/catalog.hpp"
#include "fuselab/cli.hpp"
#include "fuselab/cyclotomic.hpp"
#include "fuselab/errors.hpp"
#include "fuselab/fusion_ring.hpp"
#include "fuselab/gauge.hpp"
#include "fuselab/invariant.hpp"
#include "fuselab/io.hpp"
#include "fuselab/matrix.hpp"
#include "fuselab/modular_data.hpp"
#include "fuselab/nimrep.hpp"
#include "fuselab/oracle.hpp"
