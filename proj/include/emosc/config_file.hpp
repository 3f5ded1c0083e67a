#ifndef EMOSC_CONFIG_FILE_HPP
#define EMOSC_CONFIG_FILE_HPP

#include <iosfwd>
#include <string>

#include "emosc/params.hpp"

// Flat key=value reader for system description files. Keys match the
// PhysicalSystem field names exactly; '#' starts a comment; blank lines are
// ignored. Unknown keys, malformed lines and unparseable numbers raise
// ConfigParseError carrying the 1-based line number.

namespace emosc {

PhysicalSystem load_system(std::istream& in);
PhysicalSystem load_system_file(const std::string& path);

}  // namespace emosc

#endif
