#ifndef SPTFN_VERSION_HPP
#define SPTFN_VERSION_HPP

namespace sptfn {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
