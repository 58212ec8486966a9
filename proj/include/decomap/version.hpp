/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_VERSION_HPP
#define DECOMAP_VERSION_HPP

namespace decomap {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
