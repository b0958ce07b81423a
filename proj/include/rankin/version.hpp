#ifndef RANKIN_VERSION_HPP_
#define RANKIN_VERSION_HPP_

#ifndef RANKIN_VERSION
#define RANKIN_VERSION "0.0.0"
#endif

namespace rankin {

inline constexpr char const* kVersion = RANKIN_VERSION;

}  // namespace rankin

#endif  /* RANKIN_VERSION_HPP_ */
