#ifndef SYMRES_VERSION_HPP
#define SYMRES_VERSION_HPP

namespace symres {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
