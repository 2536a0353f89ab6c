#ifndef TRW_VERSION_HPP
#define TRW_VERSION_HPP

namespace trw {

inline constexpr const char* version = "0.1.0";

}

#endif
