#include "ihsfuse/error.hpp"

namespace ihsfuse {

DecodeError::DecodeError(const std::string& what, std::size_t offset)
    : Error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

NumericError::NumericError(const std::string& what, std::size_t pixel_index)
    : Error(what + " (pixel index " + std::to_string(pixel_index) + ")"), pixel_index_(pixel_index) {}

}  // namespace ihsfuse
