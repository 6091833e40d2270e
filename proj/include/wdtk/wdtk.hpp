// Umbrella header.

#pragma once

#include "wdtk/alexander.hpp"
#include "wdtk/bigint.hpp"
#include "wdtk/certificates.hpp"
#include "wdtk/corpus.hpp"
#include "wdtk/diagram.hpp"
#include "wdtk/errors.hpp"
#include "wdtk/json_io.hpp"
#include "wdtk/laurent.hpp"
#include "wdtk/layers.hpp"
#include "wdtk/manifold.hpp"
#include "wdtk/planar_builder.hpp"
#include "wdtk/presentation.hpp"
#include "wdtk/satellite.hpp"
