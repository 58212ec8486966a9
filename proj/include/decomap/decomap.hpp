/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_DECOMAP_HPP
#define DECOMAP_DECOMAP_HPP

#include "decomap/certify.hpp"
#include "decomap/complexmatrix.hpp"
#include "decomap/cones.hpp"
#include "decomap/corpus.hpp"
#include "decomap/eig.hpp"
#include "decomap/errors.hpp"
#include "decomap/io.hpp"
#include "decomap/maps.hpp"
#include "decomap/opsys.hpp"
#include "decomap/rng.hpp"
#include "decomap/version.hpp"

#endif
