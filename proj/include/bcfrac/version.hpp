// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#ifndef BCFRAC_VERSION_HPP
#define BCFRAC_VERSION_HPP

#define BCFRAC_VERSION "0.1.0"

#if defined(__clang__)
#define BCFRAC_COMPILER "clang " __clang_version__
#elif defined(__GNUC__)
#define BCFRAC_COMPILER "gcc " __VERSION__
#else
#define BCFRAC_COMPILER "unknown"
#endif

#ifdef NDEBUG
#define BCFRAC_BUILD_TYPE "release"
#else
#define BCFRAC_BUILD_TYPE "debug"
#endif

#endif
