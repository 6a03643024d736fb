#ifndef RSQ_VERSION_HPP
#define RSQ_VERSION_HPP

namespace rsq {

inline constexpr const char* kVersion = "1.0.0";

} // namespace rsq

#endif // RSQ_VERSION_HPP
