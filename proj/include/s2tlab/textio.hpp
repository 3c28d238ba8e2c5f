#ifndef S2TLAB_TEXTIO_HPP
#define S2TLAB_TEXTIO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "s2tlab/group.hpp"
#include "s2tlab/nearfield.hpp"

namespace s2tlab {

/// Group text format:
///   degree n
///   (0 1)(2 3)          # one generator per non-comment line, as cycles
///   [1,0,3,2]           # ... or as an image list
/// `#` starts a comment anywhere on a line.  Writing then parsing returns
/// the identical degree and generator list.

struct GeneratorFile {
  int degree = 0;
  std::vector<Perm> generators;
};

GeneratorFile parse_group_text(std::istream& in);
GeneratorFile parse_group_text_file(const std::string& path);

/// One generator per line in cycle form; the identity generator (if any)
/// is written as an image list since it has no cycles.
std::string write_group_text(int degree, const std::vector<Perm>& generators);

/// Near-field dump: `order q`, then the add table row-major, then the mul
/// table row-major, space-separated integers.
std::string write_nearfield_dump(const NearField& nf);
NearField parse_nearfield_dump(std::istream& in);

} // namespace s2tlab

#endif
