#pragma once

#include "boxvas/core.hpp"
#include "boxvas/vass1.hpp"

#include <optional>
#include <string>

namespace boxvas {

struct InstanceFile {
  enum class Kind { Vas, Vass1 };
  Kind kind = Kind::Vas;
  std::optional<VasSystem> vas;
  std::optional<Vass1System> vass1;
  std::size_t init = 0;  // vass1 only
};

// Throws ParseError carrying the 1-based line of the first problem.
InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& file_path);

// Canonical form: no comments, single spaces, one trailing newline per line.
std::string serialize_instance(const InstanceFile& inst);

// Comma-separated integers without spaces, e.g. "-1,2".
Vec parse_vector(const std::string& text);

}  // namespace boxvas
