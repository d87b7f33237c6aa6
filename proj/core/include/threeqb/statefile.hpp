#pragma once

#include <stdexcept>
#include <string>

#include "threeqb/state.hpp"

namespace threeqb {

class StateFileError : public std::runtime_error {
 public:
  explicit StateFileError(const std::string& what)
      : std::runtime_error(what) {}
};

struct StateFile {
  PureState state;
  std::string label;
};

/// JSON schema: {"amplitudes": [[re, im] x 8], "label": optional string},
/// amplitudes in index order 4i+2j+k. Doubles are written with 17 significant
/// digits so a round trip is bit-exact.
std::string state_to_json(const PureState& psi, const std::string& label = "");
StateFile state_from_json(const std::string& text);

StateFile read_state_file(const std::string& path);
void write_state_file(const std::string& path, const PureState& psi,
                      const std::string& label = "");

/// Resolves "builtin:<ghz|w|bisep1|bisep2|bisep3|sep|null>" or a file path.
StateFile resolve_state_spec(const std::string& spec);

}  // namespace threeqb
